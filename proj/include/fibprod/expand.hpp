#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "coeff_array.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "fib_table.hpp"
#include "natural.hpp"

namespace fibprod {

// Default ceiling for dense materialization: 2^27 coefficients.
inline constexpr std::int64_t default_expand_budget = std::int64_t{1} << 27;

// Materialize a(0..n_max) interval by interval: once a(0..F_n - 1) is in
// place, [F_n, F_{n+1}) is the prefix a(0..F_{n-3}-2) mirrored with sign
// (-1)^(n-1), a block of zeros, and the prefix a(0..F_{n-3}-1) verbatim.
// Each span only reads positions below F_n, already final, so the fill is
// in-place and linear. Never calls coefficient(): this is an independent
// implementation path, so the two can cross-validate.
//
// Array needs size-construction to zeros plus get/set; coeff_array and
// packed_coeff_array both qualify.
template <class Array = coeff_array>
Array expand_as(std::int64_t n_max, std::int64_t budget = default_expand_budget) {
  if (n_max < 0) throw std::invalid_argument("expand: n_max must be >= 0");
  if (n_max >= budget) {
    throw budget_error("expand: " + std::to_string(n_max + 1) +
                       " coefficients exceed the budget of " + std::to_string(budget));
  }

  Array out(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t i = 0; i <= std::min<std::int64_t>(n_max, 4); ++i)
    out.set(static_cast<std::size_t>(i), coeff(base_coefficients[static_cast<std::size_t>(i)]));

  auto& table = fib_table::shared();
  for (index_t n = 5; table.at(n) <= n_max; ++n) {
    const std::int64_t f_n = to_int64(table.at(n));
    const std::int64_t f_n2 = to_int64(table.at(n - 2));
    const std::int64_t f_n3 = to_int64(table.at(n - 3));
    const int sign = (n % 2 != 0) ? +1 : -1;  // (-1)^(n-1)

    // Low span [F_n, F_n + F_{n-3} - 2]: mirrored prefix, signed.
    for (std::int64_t j = 0; j <= f_n3 - 2 && f_n + j <= n_max; ++j) {
      const coeff src = out.get(static_cast<std::size_t>(f_n3 - 2 - j));
      out.set(static_cast<std::size_t>(f_n + j), coeff(sign * src.value()));
    }
    // Mid span [F_n + F_{n-3} - 1, F_n + F_{n-2} - 1] stays zero.
    // High span [F_n + F_{n-2}, F_{n+1} - 1]: prefix verbatim.
    for (std::int64_t j = 0; j <= f_n3 - 1 && f_n + f_n2 + j <= n_max; ++j)
      out.set(static_cast<std::size_t>(f_n + f_n2 + j), out.get(static_cast<std::size_t>(j)));
  }
  return out;
}

inline coeff_array expand(std::int64_t n_max, std::int64_t budget = default_expand_budget) {
  return expand_as<coeff_array>(n_max, budget);
}

}  // namespace fibprod
