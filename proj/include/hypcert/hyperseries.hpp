#pragma once

#include "hypcert/hyperseries/checks.hpp"
#include "hypcert/hyperseries/datum.hpp"
#include "hypcert/hyperseries/kernels.hpp"
#include "hypcert/hyperseries/sums.hpp"
