#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "coeff.hpp"

namespace fibprod {

// Dense prefix a(0..N), one signed byte per coefficient. Entries start at
// zero; expand() relies on that for the middle spans.
class coeff_array {
 public:
  coeff_array() = default;
  explicit coeff_array(std::size_t size) : values_(size) {}

  std::size_t size() const { return values_.size(); }
  coeff operator[](std::size_t i) const { return values_[i]; }
  coeff get(std::size_t i) const { return values_[i]; }
  void set(std::size_t i, coeff c) { values_[i] = c; }

  friend bool operator==(const coeff_array&, const coeff_array&) = default;

 private:
  std::vector<coeff> values_;
};

// Same contents at two bits per coefficient (00 -> 0, 01 -> +1, 10 -> -1),
// a quarter of the memory behind the same get/set interface.
class packed_coeff_array {
 public:
  packed_coeff_array() = default;
  explicit packed_coeff_array(std::size_t size) : size_(size), words_((size + 3) / 4, 0) {}

  explicit packed_coeff_array(const coeff_array& dense) : packed_coeff_array(dense.size()) {
    for (std::size_t i = 0; i < dense.size(); ++i) set(i, dense[i]);
  }

  std::size_t size() const { return size_; }

  coeff get(std::size_t i) const {
    const unsigned bits = (words_[i >> 2] >> ((i & 3u) * 2)) & 3u;
    return coeff(bits == 2u ? -1 : static_cast<int>(bits));
  }
  coeff operator[](std::size_t i) const { return get(i); }

  void set(std::size_t i, coeff c) {
    const unsigned bits = c.value() < 0 ? 2u : static_cast<unsigned>(c.value());
    const unsigned shift = (i & 3u) * 2;
    std::uint8_t& word = words_[i >> 2];
    word = static_cast<std::uint8_t>((word & ~(3u << shift)) | (bits << shift));
  }

  friend bool operator==(const packed_coeff_array&, const packed_coeff_array&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> words_;
};

// Ascending (position, sign) pairs for the non-zero entries.
template <class Array>
std::vector<std::pair<std::int64_t, coeff>> nonzero_positions(const Array& arr) {
  std::vector<std::pair<std::int64_t, coeff>> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (arr[i].nonzero()) out.emplace_back(static_cast<std::int64_t>(i), arr[i]);
  }
  return out;
}

}  // namespace fibprod
