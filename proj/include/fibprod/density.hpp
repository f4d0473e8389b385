#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "coeff_array.hpp"
#include "errors.hpp"
#include "expand.hpp"
#include "fib_table.hpp"
#include "natural.hpp"

namespace fibprod {

// alpha_n = number of non-zero coefficients among a(0..F_n - 1), n >= 2.
struct alpha_series {
  std::vector<natural> values;  // values[i] = alpha_{i+2}

  index_t n_max() const { return static_cast<index_t>(values.size()) + 1; }

  const natural& at(index_t n) const {
    if (n < 2 || n > n_max()) throw std::out_of_range("alpha_series::at: n out of range");
    return values[static_cast<std::size_t>(n - 2)];
  }
};

// Count straight off a dense expansion.
inline natural alpha_direct(index_t n, std::int64_t budget = default_expand_budget) {
  if (n < 2) throw std::invalid_argument("alpha_direct: n must be >= 2");
  const natural length = fib(n);
  if (length > budget) {
    throw budget_error("alpha_direct: F_" + std::to_string(n) + " = " + length.str() +
                       " coefficients exceed the budget of " + std::to_string(budget));
  }
  const auto arr = expand(to_int64(length) - 1, budget);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < arr.size(); ++i) count += arr[i].nonzero() ? 1 : 0;
  return natural(count);
}

// Direct counts for every n in [2, n_max] whose prefix fits the budget,
// off a single expansion pass.
inline std::vector<natural> alpha_direct_prefix(index_t n_max,
                                                std::int64_t budget = default_expand_budget) {
  std::vector<natural> out;
  index_t top = 0;
  for (index_t k = 2; k <= n_max && fib(k) <= budget; ++k) top = k;
  if (top < 2) return out;

  const auto arr = expand(to_int64(fib(top)) - 1, budget);
  std::vector<std::int64_t> bounds;
  for (index_t k = 2; k <= top; ++k) bounds.push_back(to_int64(fib(k)));

  std::size_t next = 0;
  std::int64_t count = 0;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(arr.size()); ++i) {
    while (next < bounds.size() && i == bounds[next]) {
      out.emplace_back(count);
      ++next;
    }
    count += arr[static_cast<std::size_t>(i)].nonzero() ? 1 : 0;
  }
  while (next < bounds.size()) {
    out.emplace_back(count);
    ++next;
  }
  return out;
}

// alpha_2..alpha_5 = 1, 2, 3, 4 (pinned by direct count), extended by
// alpha_{n+1} = alpha_n + 2 alpha_{n-3} - 1: filling interval n adds
// alpha_{n-3} non-zeros from the straight copy and alpha_{n-3} - 1 from the
// mirrored copy (the mirror drops the one at a(F_{n-3} - 1)), none from the
// zero band.
inline alpha_series alpha_recurrence(index_t n_max) {
  if (n_max < 5) throw std::invalid_argument("alpha_recurrence: n_max must be >= 5");
  alpha_series s;
  s.values = {natural(1), natural(2), natural(3), natural(4)};
  for (index_t n = 5; n < n_max; ++n) s.values.push_back(s.at(n) + 2 * s.at(n - 3) - 1);
  return s;
}

// Fixed-point rendering with `places` fractional digits, ties to even.
// Exact integer arithmetic; no floating point involved.
inline std::string decimal_string(const rational& value, int places) {
  if (places < 0) throw std::invalid_argument("decimal_string: negative places");
  natural num = boost::multiprecision::numerator(value);
  const natural den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;

  const natural scale = boost::multiprecision::pow(natural(10), static_cast<unsigned>(places));
  const natural scaled = num * scale;
  natural quot = scaled / den;
  const natural rem = scaled % den;
  const natural twice = 2 * rem;
  if (twice > den || (twice == den && quot % 2 != 0)) ++quot;

  std::string out = (negative && quot != 0 ? "-" : "") + natural(quot / scale).str();
  if (places > 0) {
    std::string digits = natural(quot % scale).str();
    digits.insert(digits.begin(), static_cast<std::size_t>(places) - digits.size(), '0');
    out += "." + digits;
  }
  return out;
}

// Share of zero coefficients among a(0..F_n - 1): p = 1 - alpha_n / F_n.
struct density_report {
  index_t n = 0;
  natural alpha;
  natural fib_n;
  rational p;
  std::string decimal;  // p at six places
};

inline density_report density(index_t n) {
  if (n < 2) throw std::invalid_argument("density: n must be >= 2");
  density_report r;
  r.n = n;
  r.alpha = alpha_recurrence(std::max<index_t>(n, 5)).at(n);
  r.fib_n = fib(n);
  r.p = rational(1) - rational(r.alpha, r.fib_n);
  r.decimal = decimal_string(r.p, 6);
  return r;
}

// Share of zero coefficients among a(0..cutoff), for an arbitrary cutoff.
struct cutoff_density_report {
  std::int64_t cutoff = 0;
  std::int64_t zero_count = 0;
  rational p;
  std::string decimal;
};

inline cutoff_density_report density_at(std::int64_t cutoff,
                                        std::int64_t budget = default_expand_budget) {
  if (cutoff < 0) throw std::invalid_argument("density_at: cutoff must be >= 0");
  const auto arr = expand(cutoff, budget);
  cutoff_density_report r;
  r.cutoff = cutoff;
  for (std::size_t i = 0; i < arr.size(); ++i) r.zero_count += arr[i].nonzero() ? 0 : 1;
  r.p = rational(r.zero_count, cutoff + 1);
  r.decimal = decimal_string(r.p, 6);
  return r;
}

// x^4 - x^3 - 2: characteristic polynomial of the alpha recurrence
// (alpha_{n+4} = alpha_{n+3} + 2 alpha_n after dropping the constant).
// -1 is an exact root; the dominant real root r1 in (1, 2) governs the
// growth of alpha_n, and it stays below the Fibonacci growth rate
// lambda = (sqrt(5) + 1) / 2 — which is why the zeros take over.
inline double char_poly(double x) { return x * x * x * x - x * x * x - 2.0; }

struct char_roots_report {
  double r1 = 0;        // real root in (1, 2), found by bisection
  double residual = 0;  // |char_poly(r1)|
  double lambda = 0;    // golden ratio
};

inline char_roots_report char_roots(double tolerance = 1e-12) {
  if (!(tolerance > 0)) throw std::invalid_argument("char_roots: tolerance must be > 0");
  double lo = 1.0;  // char_poly(1) = -2
  double hi = 2.0;  // char_poly(2) = +6
  while (hi - lo > tolerance) {
    const double mid = lo + (hi - lo) / 2;
    if (mid == lo || mid == hi) break;  // hit double resolution
    (char_poly(mid) < 0 ? lo : hi) = mid;
  }
  char_roots_report r;
  r.r1 = lo + (hi - lo) / 2;
  r.residual = std::abs(char_poly(r.r1));
  r.lambda = (std::sqrt(5.0) + 1.0) / 2.0;
  return r;
}

// Consecutive-term ratios: alpha_{n+1}/alpha_n tends to r1, F_{n+1}/F_n to
// lambda, and their mismatch drives alpha_n/F_n toward zero.
struct growth_row {
  index_t n = 0;
  double alpha_ratio = 0;
  double fib_ratio = 0;
  double alpha_over_fib = 0;
};

inline std::vector<growth_row> growth_report(index_t n_max) {
  if (n_max < 10) throw std::invalid_argument("growth_report: n_max must be >= 10");
  const auto series = alpha_recurrence(n_max + 1);
  std::vector<growth_row> rows;
  for (index_t n = 2; n <= n_max; ++n) {
    growth_row row;
    row.n = n;
    row.alpha_ratio = rational(series.at(n + 1), series.at(n)).convert_to<double>();
    row.fib_ratio = rational(fib(n + 1), fib(n)).convert_to<double>();
    row.alpha_over_fib = rational(series.at(n), fib(n)).convert_to<double>();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fibprod
