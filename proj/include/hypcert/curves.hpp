#pragma once

#include "hypcert/curves/checks.hpp"
#include "hypcert/curves/count.hpp"
#include "hypcert/curves/model.hpp"
