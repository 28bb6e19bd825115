#pragma once

#include "hypcert/arith.hpp"
#include "hypcert/curves.hpp"
#include "hypcert/errors.hpp"
#include "hypcert/hyperseries.hpp"
#include "hypcert/io/emit.hpp"
#include "hypcert/verify.hpp"
