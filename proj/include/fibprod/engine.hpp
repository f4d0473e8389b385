#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "coeff.hpp"
#include "fib_table.hpp"
#include "natural.hpp"

namespace fibprod {

// a(0..4), read off the expansion of (1-x)(1-x^2)(1-x^3)(1-x^5)...;
// every position m >= F_5 = 5 reduces into this range.
inline constexpr std::array<int, 5> base_coefficients{1, -1, -1, 0, 1};

enum class step_kind { base, low, mid, high };

// One application of the interval recursion to a position m in
// [F_n, F_{n+1}), n >= 5. The interval splits into three subintervals:
//
//   low  [F_n, F_n + F_{n-3} - 2]          a(m) = (-1)^(n-1) a(F_n + F_{n-3} - 2 - m)
//   mid  [F_n + F_{n-3} - 1, F_n + F_{n-2} - 1]   a(m) = 0
//   high [F_n + F_{n-2}, F_{n+1} - 1]      a(m) = a(m - F_n - F_{n-2})
//
// Both reduced positions land strictly below F_{n-3}, so evaluation
// terminates in O(log m) steps. `base` means m < 5: table lookup.
struct reduction_step {
  step_kind kind = step_kind::base;
  index_t n = 0;                // interval index; meaningless for base
  std::optional<natural> next;  // reduced position; low/high only
  int sign = +1;                // +1 or -1; low/high only

  friend bool operator==(const reduction_step&, const reduction_step&) = default;
};

inline reduction_step classify(const natural& m) {
  if (m < 5) return {};
  auto& table = fib_table::shared();
  const index_t n = table.locate(m);  // n >= 5 because m >= F_5
  const natural& f_n = table.at(n);
  const natural& f_n2 = table.at(n - 2);
  const natural& f_n3 = table.at(n - 3);
  const int low_sign = (n % 2 != 0) ? +1 : -1;  // (-1)^(n-1)

  // Guards precede every subtraction, so the unsigned-style arithmetic on
  // natural never underflows.
  natural low_top = f_n + f_n3 - 2;
  if (m <= low_top) return {step_kind::low, n, low_top - m, low_sign};
  if (m <= f_n + f_n2 - 1) return {step_kind::mid, n, std::nullopt, +1};
  return {step_kind::high, n, m - f_n - f_n2, +1};
}

// a(m): iterate the reduction with a sign accumulator until a middle
// subinterval (zero) or the base table settles it.
inline coeff coefficient(natural m) {
  int sign = +1;
  for (;;) {
    if (m < 5) return coeff(sign * base_coefficients[m.convert_to<std::size_t>()]);
    reduction_step step = classify(m);
    if (step.kind == step_kind::mid) return coeff(0);
    sign *= step.sign;
    m = std::move(*step.next);
  }
}

// The full reduction path of coefficient(m), ending in a base or mid step.
inline std::vector<reduction_step> trace(natural m) {
  std::vector<reduction_step> steps;
  for (;;) {
    if (m < 5) {
      steps.emplace_back();
      return steps;
    }
    steps.push_back(classify(m));
    if (steps.back().kind == step_kind::mid) return steps;
    m = *steps.back().next;
  }
}

}  // namespace fibprod
