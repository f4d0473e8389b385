#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace fibprod {

// Tri-state coefficient value. Every coefficient of the product is -1, 0
// or +1; the constructor enforces the range so a value outside it cannot
// circulate.
class coeff {
 public:
  coeff() = default;

  explicit coeff(int v) : v_(static_cast<std::int8_t>(v)) {
    if (v < -1 || v > 1) throw std::domain_error("coeff: value outside {-1, 0, +1}");
  }

  int value() const { return v_; }
  bool nonzero() const { return v_ != 0; }

  friend bool operator==(coeff, coeff) = default;

 private:
  std::int8_t v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, coeff c) { return os << c.value(); }

}  // namespace fibprod
