#include <gtest/gtest.h>

#include <array>
#include <random>
#include <vector>

#include <fibprod/engine.hpp>
#include <fibprod/oracle.hpp>

using fibprod::classify;
using fibprod::coefficient;
using fibprod::fib;
using fibprod::index_t;
using fibprod::locate;
using fibprod::natural;
using fibprod::reduction_step;
using fibprod::step_kind;
using fibprod::trace;

// a(0..18), read off the product expansion:
// 1 - x - x^2 + x^4 + x^7 - x^8 + x^11 - x^12 - x^13 + x^14 + x^18 + ...
constexpr std::array<int, 19> kPrefix{1, -1, -1, 0, 1, 0, 0, 1, -1, 0,
                                      0, 1,  -1, -1, 1, 0, 0, 0, 1};

TEST(Classify, BaseBelowFive) {
  EXPECT_EQ(classify(natural(3)).kind, step_kind::base);
  EXPECT_EQ(classify(natural(0)).kind, step_kind::base);
  EXPECT_EQ(classify(natural(4)).kind, step_kind::base);
}

TEST(Classify, MidExample) {
  const auto step = classify(natural(15));
  EXPECT_EQ(step.kind, step_kind::mid);
  EXPECT_EQ(step.n, 7);
  EXPECT_FALSE(step.next.has_value());
}

TEST(Classify, HighExample) {
  const auto step = classify(natural(18));
  EXPECT_EQ(step.kind, step_kind::high);
  EXPECT_EQ(step.n, 7);
  ASSERT_TRUE(step.next.has_value());
  EXPECT_EQ(*step.next, 0);
  EXPECT_EQ(step.sign, +1);
}

TEST(Classify, LowExample) {
  const auto step = classify(natural(13));
  EXPECT_EQ(step.kind, step_kind::low);
  EXPECT_EQ(step.n, 7);
  ASSERT_TRUE(step.next.has_value());
  EXPECT_EQ(*step.next, 1);
  EXPECT_EQ(step.sign, +1);  // (-1)^(7-1)
}

TEST(Classify, LowSignAlternates) {
  // n = 6 is even, so the mirrored copy flips sign: a(8) = -a(0).
  const auto step = classify(natural(8));
  EXPECT_EQ(step.kind, step_kind::low);
  EXPECT_EQ(step.n, 6);
  EXPECT_EQ(step.sign, -1);
}

TEST(Coefficient, PaperPrefix) {
  for (std::size_t m = 0; m < kPrefix.size(); ++m)
    EXPECT_EQ(coefficient(natural(m)).value(), kPrefix[m]) << "m=" << m;
}

TEST(Coefficient, Examples) {
  EXPECT_EQ(coefficient(natural(0)).value(), 1);
  EXPECT_EQ(coefficient(natural(12)).value(), -1);
  EXPECT_EQ(coefficient(natural(3)).value(), 0);
  EXPECT_EQ(coefficient(natural(20)).value(), -1);
}

TEST(Trace, Examples) {
  const auto base_only = trace(natural(3));
  ASSERT_EQ(base_only.size(), 1u);
  EXPECT_EQ(base_only[0].kind, step_kind::base);

  const auto high_then_base = trace(natural(18));
  ASSERT_EQ(high_then_base.size(), 2u);
  EXPECT_EQ(high_then_base[0].kind, step_kind::high);
  EXPECT_EQ(high_then_base[0].n, 7);
  EXPECT_EQ(*high_then_base[0].next, 0);
  EXPECT_EQ(high_then_base[1].kind, step_kind::base);

  const auto mid_only = trace(natural(15));
  ASSERT_EQ(mid_only.size(), 1u);
  EXPECT_EQ(mid_only[0].kind, step_kind::mid);
  EXPECT_EQ(mid_only[0].n, 7);
}

// The three subintervals tile [F_n, F_{n+1} - 1] with lengths
// F_{n-3} - 1, F_{n-4} + 1, F_{n-3}.
TEST(Subintervals, TilingAndLengths) {
  for (index_t n = 5; n <= 30; ++n) {
    const natural f_n = fib(n);
    const natural low_lo = f_n;
    const natural low_hi = f_n + fib(n - 3) - 2;
    const natural mid_lo = low_hi + 1;
    const natural mid_hi = f_n + fib(n - 2) - 1;
    const natural high_lo = mid_hi + 1;
    const natural high_hi = fib(n + 1) - 1;

    EXPECT_EQ(low_hi - low_lo + 1, fib(n - 3) - 1) << "n=" << n;
    EXPECT_EQ(mid_hi - mid_lo + 1, fib(n - 4) + 1) << "n=" << n;
    EXPECT_EQ(high_hi - high_lo + 1, fib(n - 3)) << "n=" << n;
    EXPECT_EQ(high_hi - low_lo + 1, fib(n - 1)) << "n=" << n;

    // classify() agrees with the arithmetic tiling at every position, for
    // as long as an exhaustive walk stays cheap.
    if (n > 22) continue;
    for (natural m = low_lo; m <= high_hi; ++m) {
      const auto step = classify(m);
      ASSERT_EQ(step.n, n) << "m=" << m;
      const step_kind expected = m <= low_hi   ? step_kind::low
                                 : m <= mid_hi ? step_kind::mid
                                               : step_kind::high;
      ASSERT_EQ(step.kind, expected) << "m=" << m;
    }
  }
}

// Every reduction lands strictly below F_{n-3}, and the path is never
// longer than the interval index.
TEST(Reduction, TerminationBound) {
  std::mt19937_64 rng(20240811);
  std::vector<natural> positions;
  for (std::int64_t m = 5; m <= 2000; ++m) positions.emplace_back(m);
  for (int i = 0; i < 50; ++i) {
    natural m = pow(natural(10), 20 + static_cast<unsigned>(rng() % 200));
    positions.push_back(m + static_cast<std::uint64_t>(rng() % 1000));
  }

  for (const auto& m : positions) {
    const auto steps = trace(m);
    ASSERT_LE(steps.size(), static_cast<std::size_t>(locate(m))) << "m=" << m;
    for (const auto& step : steps) {
      if (!step.next.has_value()) continue;
      ASSERT_LT(*step.next, fib(step.n - 3)) << "m=" << m;
    }
  }
}

// Replaying the trace reproduces the coefficient: signs fold across low/high
// steps, mid kills the value, base looks it up.
TEST(Reduction, TraceReplayMatchesCoefficient) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    natural m = pow(natural(2), 10 + static_cast<unsigned>(rng() % 300));
    m += static_cast<std::uint64_t>(rng() % 100000);
    const auto steps = trace(m);
    int sign = +1;
    int value = 0;
    natural cursor = m;
    for (const auto& step : steps) {
      if (step.kind == step_kind::mid) {
        value = 0;
        break;
      }
      if (step.kind == step_kind::base) {
        value = sign * fibprod::base_coefficients[cursor.convert_to<std::size_t>()];
        break;
      }
      sign *= step.sign;
      cursor = *step.next;
    }
    ASSERT_EQ(coefficient(m).value(), value) << "m=" << m;
  }
}

TEST(Engine, MatchesProductOracle) {
  const auto oracle = fibprod::product_expand_oracle(10000);
  for (std::int64_t m = 0; m <= 10000; ++m)
    ASSERT_EQ(coefficient(natural(m)), oracle[static_cast<std::size_t>(m)]) << "m=" << m;
}

TEST(Engine, ZeroBand) {
  for (index_t n = 5; n <= 25; ++n) {
    for (natural m = fib(n) + fib(n - 3) - 1; m <= fib(n) + fib(n - 2) - 1; ++m)
      ASSERT_EQ(coefficient(m).value(), 0) << "n=" << n << " m=" << m;
  }
}

TEST(Engine, ReflectionIdentity) {
  for (index_t n = 5; n <= 25; ++n) {
    const int sign = (n % 2 != 0) ? +1 : -1;
    const natural f_n3 = fib(n - 3);
    for (natural j = 0; j <= f_n3 - 2; ++j) {
      const int lhs = coefficient(fib(n) + j).value();
      const int rhs = coefficient(f_n3 - 2 - j).value();
      ASSERT_EQ(lhs, sign * rhs) << "n=" << n << " j=" << j;
    }
  }
}

TEST(Engine, ShiftIdentity) {
  for (index_t n = 5; n <= 25; ++n) {
    for (natural j = 0; j <= fib(n - 3) - 1; ++j) {
      ASSERT_EQ(coefficient(fib(n) + fib(n - 2) + j), coefficient(j)) << "n=" << n << " j=" << j;
    }
  }
}

TEST(Engine, RightEdgeNonzero) {
  for (index_t n = 5; n <= 30; ++n)
    EXPECT_NE(coefficient(fib(n - 3) - 1).value(), 0) << "n=" << n;
}

TEST(Engine, ValuesStayTriState) {
  for (std::int64_t m = 0; m <= 2000; ++m) {
    const int v = coefficient(natural(m)).value();
    ASSERT_GE(v, -1);
    ASSERT_LE(v, 1);
  }
}
