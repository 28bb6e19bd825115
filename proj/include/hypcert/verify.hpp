#pragma once

#include "hypcert/verify/encode.hpp"
#include "hypcert/verify/parallel.hpp"
#include "hypcert/verify/report.hpp"
#include "hypcert/verify/scan.hpp"
#include "hypcert/verify/suites.hpp"
#include "hypcert/verify/theorem.hpp"
