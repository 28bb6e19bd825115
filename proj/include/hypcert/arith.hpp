#pragma once

#include "hypcert/arith/integers.hpp"
#include "hypcert/arith/polynomial.hpp"
#include "hypcert/arith/prime_field.hpp"
#include "hypcert/arith/quad_field.hpp"
#include "hypcert/arith/valuated_residue.hpp"
