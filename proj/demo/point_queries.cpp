// Walk-through of the library surface: point queries at astronomical
// positions, the dense expansion, and the density of the zeros.

#include <iostream>

#include <fibprod/fibprod.hpp>

int main() {
  using namespace fibprod;

  // a(m) for a 120-digit position: a handful of interval reductions.
  const natural huge = pow(natural(10), 119) + 7;
  std::cout << "a(10^119 + 7) = " << coefficient(huge).value() << " ("
            << trace(huge).size() << " reduction steps, interval index "
            << locate(huge) << ")\n";

  // The first few coefficients, dense.
  const auto prefix = expand(18);
  std::cout << "a(0..18) =";
  for (std::size_t i = 0; i < prefix.size(); ++i) std::cout << " " << prefix[i].value();
  std::cout << "\n";

  // Zeros dominate: share of zero coefficients below F_n.
  for (index_t n : {10, 20, 30}) {
    const auto rep = density(n);
    std::cout << "p(F_" << n << " - 1) = " << rep.p << " = " << rep.decimal << "\n";
  }

  const auto roots = char_roots();
  std::cout << "alpha growth r1 = " << roots.r1 << " vs Fibonacci growth lambda = "
            << roots.lambda << "\n";
  return 0;
}
