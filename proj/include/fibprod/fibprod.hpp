#pragma once

// Coefficients a(m) of the infinite product prod_{k>=2} (1 - x^{F_k}) over
// Fibonacci exponents: O(log m) point queries, linear-time dense expansion,
// brute-force partition oracles, and the density statistics of the zeros.

#include "coeff.hpp"
#include "coeff_array.hpp"
#include "density.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "expand.hpp"
#include "fib_table.hpp"
#include "format.hpp"
#include "natural.hpp"
#include "oracle.hpp"
