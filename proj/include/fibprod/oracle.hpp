#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coeff_array.hpp"
#include "errors.hpp"
#include "fib_table.hpp"
#include "natural.hpp"

namespace fibprod {

// Ground truth by definition: multiply out prod_{k>=2} (1 - x^{F_k})
// truncated at degree n_max. Factors with F_k > n_max are the identity
// modulo x^{n_max+1} and are skipped. The accumulator is a plain signed
// integer; only the finished coefficients are pinned to {-1, 0, +1} —
// intermediate partial products are not bounded by the theorem.
inline coeff_array product_expand_oracle(std::int64_t n_max) {
  if (n_max < 0) throw std::invalid_argument("product_expand_oracle: n_max must be >= 0");
  std::vector<std::int64_t> acc(static_cast<std::size_t>(n_max) + 1, 0);
  acc[0] = 1;
  auto& table = fib_table::shared();
  for (index_t k = 2; table.at(k) <= n_max; ++k) {
    const std::int64_t f = to_int64(table.at(k));
    for (std::int64_t i = n_max; i >= f; --i)
      acc[static_cast<std::size_t>(i)] -= acc[static_cast<std::size_t>(i - f)];
  }
  coeff_array out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] < -1 || acc[i] > 1)
      throw std::domain_error("product_expand_oracle: coefficient at " + std::to_string(i) +
                              " is " + std::to_string(acc[i]) + ", outside {-1, 0, +1}");
    out.set(i, coeff(static_cast<int>(acc[i])));
  }
  return out;
}

// A partition of m into distinct positive Fibonacci numbers, stored as the
// strictly decreasing list of indices k >= 2 (the parts are the F_k).
struct fib_partition {
  std::vector<index_t> parts;

  natural weight() const {
    natural w = 0;
    for (index_t k : parts) w += fib(k);
    return w;
  }

  friend bool operator==(const fib_partition&, const fib_partition&) = default;
  friend auto operator<=>(const fib_partition&, const fib_partition&) = default;
};

// Exhaustive enumeration stays sub-second up to here (at most 18 candidate
// parts below 5000); past it, callers should use the product oracle.
inline constexpr std::int64_t default_enumeration_limit = 5000;

// All subsets of {F_2, ..., F_K}, F_K <= m, summing to m. Depth-first over
// candidates in decreasing order, pruned by the remaining candidate sum, so
// the output is in descending lexicographic order of index lists — a
// deterministic order for golden tests.
inline std::vector<fib_partition> enumerate_partitions(
    const natural& m, std::int64_t limit = default_enumeration_limit) {
  if (limit < 0) throw std::invalid_argument("enumerate_partitions: negative limit");
  if (m > limit) {
    throw budget_error("enumerate_partitions: m = " + m.str() +
                       " exceeds the enumeration ceiling " + std::to_string(limit));
  }
  const std::int64_t target = to_int64(m);

  std::vector<index_t> cand_idx;   // descending
  std::vector<std::int64_t> cand_val;
  auto& table = fib_table::shared();
  for (index_t k = 2; table.at(k) <= target; ++k) {
    cand_idx.push_back(k);
    cand_val.push_back(to_int64(table.at(k)));
  }
  std::reverse(cand_idx.begin(), cand_idx.end());
  std::reverse(cand_val.begin(), cand_val.end());

  std::vector<std::int64_t> tail_sum(cand_val.size() + 1, 0);
  for (std::size_t i = cand_val.size(); i-- > 0;) tail_sum[i] = tail_sum[i + 1] + cand_val[i];

  std::vector<fib_partition> out;
  std::vector<index_t> current;
  auto dfs = [&](auto&& self, std::size_t start, std::int64_t remaining) -> void {
    if (remaining == 0) {
      out.push_back({current});
      return;
    }
    for (std::size_t i = start; i < cand_val.size(); ++i) {
      if (cand_val[i] > remaining) continue;
      if (tail_sum[i] < remaining) break;  // even the whole tail is short
      current.push_back(cand_idx[i]);
      self(self, i + 1, remaining - cand_val[i]);
      current.pop_back();
    }
  };
  dfs(dfs, 0, target);
  return out;
}

// Partition counts by parity of the number of parts: a(m) = r_even - r_odd.
struct partition_tally {
  std::int64_t r_even = 0;
  std::int64_t r_odd = 0;

  std::int64_t difference() const { return r_even - r_odd; }

  friend bool operator==(const partition_tally&, const partition_tally&) = default;
};

inline partition_tally tally(const natural& m, std::int64_t limit = default_enumeration_limit) {
  partition_tally t;
  for (const auto& p : enumerate_partitions(m, limit))
    ++(p.parts.size() % 2 == 0 ? t.r_even : t.r_odd);
  return t;
}

// Outcome of replaying one of the structural arguments behind the interval
// recursion on a concrete m. ok == false means the claimed structure failed
// on real data; detail says where.
struct pairing_report {
  bool ok = false;
  index_t n = 0;
  std::int64_t pairs = 0;
  std::string detail;
};

struct bijection_report {
  bool ok = false;
  index_t n = 0;
  natural target;           // the reduced position m'
  std::int64_t pairs = 0;   // partitions cancelled in the preliminary pairing
  std::int64_t mapped = 0;  // partitions carried over to m'
  int sign = +1;            // claimed sign relating a(m) and a(m')
  std::string detail;
};

namespace detail {

inline std::int64_t parity_sum(const std::vector<fib_partition>& parts) {
  std::int64_t d = 0;
  for (const auto& p : parts) d += (p.parts.size() % 2 == 0) ? +1 : -1;
  return d;
}

}  // namespace detail

// Middle subinterval [F_n + F_{n-3} - 1, F_n + F_{n-2} - 1]: every partition
// of m has largest part F_n (second largest at most F_{n-3}) or largest part
// F_{n-1} followed by F_{n-2}. Swapping F_n <-> F_{n-1} + F_{n-2} pairs the
// whole set off with opposite parities, so a(m) = 0.
inline pairing_report verify_mid_pairing(const natural& m,
                                         std::int64_t limit = default_enumeration_limit) {
  auto& table = fib_table::shared();
  const index_t n = table.locate(m);
  if (n < 5 || m < table.at(n) + table.at(n - 3) - 1 || m > table.at(n) + table.at(n - 2) - 1)
    throw std::invalid_argument("verify_mid_pairing: m is not in a middle subinterval");

  pairing_report rep;
  rep.n = n;
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.detail = std::move(why);
    return rep;
  };

  const auto parts = enumerate_partitions(m, limit);
  std::set<std::vector<index_t>> pool;
  for (const auto& p : parts) pool.insert(p.parts);

  std::set<std::vector<index_t>> seen;
  for (const auto& p : parts) {
    const auto& v = p.parts;
    if (seen.count(v)) continue;
    if (v.empty() || (v[0] != n && v[0] != n - 1))
      return fail("largest part of " + m.str() + " outside {F_n, F_{n-1}}");

    std::vector<index_t> partner;
    if (v[0] == n) {
      if (v.size() >= 2 && (v[1] == n - 1 || v[1] == n - 2))
        return fail("partition with largest part F_n has second part F_{n-1} or F_{n-2}");
      partner.assign({n - 1, n - 2});
      partner.insert(partner.end(), v.begin() + 1, v.end());
    } else {
      if (v.size() < 2 || v[1] != n - 2)
        return fail("partition with largest part F_{n-1} lacks F_{n-2}");
      partner.push_back(n);
      partner.insert(partner.end(), v.begin() + 2, v.end());
    }

    if (!pool.count(partner)) return fail("partition of " + m.str() + " is unmatched");
    if (seen.count(partner)) return fail("partner claimed twice");
    const auto diff = static_cast<std::int64_t>(partner.size()) - static_cast<std::int64_t>(v.size());
    if (diff != 1 && diff != -1) return fail("paired partitions do not differ by one part");
    seen.insert(v);
    seen.insert(partner);
    ++rep.pairs;
  }
  if (seen.size() != pool.size()) return fail("pairing is not perfect");
  rep.ok = true;
  return rep;
}

// High subinterval [F_n + F_{n-2}, F_{n+1} - 1]: after the same pairing
// cancels everything else, the leftover partitions all contain both F_n and
// F_{n-2}; stripping those two parts is a parity-preserving bijection onto
// the partitions of m' = m - F_n - F_{n-2}, so a(m) = a(m').
inline bijection_report verify_shift_bijection(const natural& m,
                                               std::int64_t limit = default_enumeration_limit) {
  auto& table = fib_table::shared();
  const index_t n = table.locate(m);
  if (n < 5 || m < table.at(n) + table.at(n - 2))
    throw std::invalid_argument("verify_shift_bijection: m is not in a high subinterval");

  bijection_report rep;
  rep.n = n;
  rep.target = m - table.at(n) - table.at(n - 2);
  rep.sign = +1;
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.detail = std::move(why);
    return rep;
  };

  const auto parts = enumerate_partitions(m, limit);
  const auto reduced = enumerate_partitions(rep.target, limit);

  std::vector<std::vector<index_t>> class_a;  // largest F_n, second <= F_{n-3}
  std::set<std::vector<index_t>> class_b;     // largest F_{n-1} (then F_{n-2})
  std::vector<std::vector<index_t>> residual; // contains F_n and F_{n-2}
  for (const auto& p : parts) {
    const auto& v = p.parts;
    if (v.empty() || (v[0] != n && v[0] != n - 1))
      return fail("largest part of " + m.str() + " outside {F_n, F_{n-1}}");
    if (v[0] == n - 1) {
      if (v.size() < 2 || v[1] != n - 2)
        return fail("partition with largest part F_{n-1} lacks F_{n-2}");
      class_b.insert(v);
    } else if (v.size() >= 2 && v[1] == n - 1) {
      return fail("partition contains both F_n and F_{n-1}");
    } else if (v.size() >= 2 && v[1] == n - 2) {
      residual.push_back(v);
    } else {
      class_a.push_back(v);
    }
  }

  // F_n <-> F_{n-1} + F_{n-2} must match class A and class B perfectly.
  if (class_a.size() != class_b.size()) return fail("pairing classes differ in size");
  for (const auto& v : class_a) {
    std::vector<index_t> partner{n - 1, n - 2};
    partner.insert(partner.end(), v.begin() + 1, v.end());
    if (class_b.erase(partner) == 0) return fail("partition of " + m.str() + " is unmatched");
  }
  rep.pairs = static_cast<std::int64_t>(class_a.size());

  // Residual partitions, stripped of F_n and F_{n-2}, must hit the
  // partitions of m' exactly once each.
  std::set<std::vector<index_t>> images;
  for (const auto& v : residual) {
    std::vector<index_t> image(v.begin() + 2, v.end());
    if (!images.insert(std::move(image)).second) return fail("strip map is not injective");
  }
  std::set<std::vector<index_t>> expected;
  for (const auto& q : reduced) {
    if (!q.parts.empty() && q.parts[0] > n - 3)
      return fail("partition of m' = " + rep.target.str() + " has a part above F_{n-3}");
    expected.insert(q.parts);
  }
  if (images != expected) return fail("strip map is not onto the partitions of m'");
  rep.mapped = static_cast<std::int64_t>(residual.size());

  // Stripping two parts preserves parity, so the tallies must agree.
  if (detail::parity_sum(parts) != detail::parity_sum(reduced))
    return fail("tally of m and m' disagree");
  rep.ok = true;
  return rep;
}

// Low subinterval [F_n, F_n + F_{n-3} - 2]: the parts of any partition of m
// come from {F_2, ..., F_n}; taking the complement within that list is a
// bijection onto the partitions of m' = F_{n+2} - 2 - m sending k parts to
// n - 1 - k parts, so a(m) = (-1)^(n-1) a(m').
inline bijection_report verify_complement_bijection(
    const natural& m, std::int64_t limit = default_enumeration_limit) {
  auto& table = fib_table::shared();
  const index_t n = table.locate(m);
  if (n < 5 || m > table.at(n) + table.at(n - 3) - 2)
    throw std::invalid_argument("verify_complement_bijection: m is not in a low subinterval");

  bijection_report rep;
  rep.n = n;
  rep.target = prefix_sum(n) - m;
  rep.sign = (n % 2 != 0) ? +1 : -1;  // (-1)^(n-1)
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.detail = std::move(why);
    return rep;
  };

  const auto parts = enumerate_partitions(m, limit);
  const auto reduced = enumerate_partitions(rep.target, limit);

  std::set<std::vector<index_t>> images;
  for (const auto& p : parts) {
    const auto& v = p.parts;
    if (!v.empty() && v[0] > n) return fail("partition of " + m.str() + " has a part above F_n");
    std::vector<index_t> complement;
    auto it = v.begin();
    for (index_t k = n; k >= 2; --k) {  // descending complement within {2..n}
      if (it != v.end() && *it == k) {
        ++it;
      } else {
        complement.push_back(k);
      }
    }
    if (static_cast<index_t>(v.size()) + static_cast<index_t>(complement.size()) != n - 1)
      return fail("complement does not send k parts to n-1-k parts");
    if (!images.insert(std::move(complement)).second) return fail("complement map is not injective");
  }

  std::set<std::vector<index_t>> expected;
  for (const auto& q : reduced) {
    if (!q.parts.empty() && q.parts[0] > n)
      return fail("partition of m' = " + rep.target.str() + " has a part above F_n");
    expected.insert(q.parts);
  }
  if (images != expected) return fail("complement map is not onto the partitions of m'");
  rep.mapped = static_cast<std::int64_t>(parts.size());

  if (detail::parity_sum(parts) != rep.sign * detail::parity_sum(reduced))
    return fail("sign relation between a(m) and a(m') fails");
  rep.ok = true;
  return rep;
}

}  // namespace fibprod
