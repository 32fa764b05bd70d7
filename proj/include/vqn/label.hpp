#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vqn {

// An n-bit vertex label x_n...x_2x_1. Bit 1 is the least significant bit of
// value, bit n the most significant. dim = 0 is the single empty label.
struct Label {
  std::uint64_t value = 0;
  int dim = 0;

  static constexpr int kMaxDim = 64;

  Label() = default;
  Label(std::uint64_t value_, int dim_) : value(value_), dim(dim_) {
    if (dim < 0 || dim > kMaxDim)
      throw std::out_of_range("label dimension must be in 0.." +
                              std::to_string(kMaxDim));
    if ((value & ~mask(dim)) != 0)
      throw std::out_of_range("label value does not fit in " +
                              std::to_string(dim) + " bits");
  }

  // Low-i-bits mask; i = 64 yields all ones.
  static constexpr std::uint64_t mask(int i) {
    return i >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << i) - 1;
  }

  bool bit(int i) const {
    check_position(i);
    return (value >> (i - 1)) & 1u;
  }

  Label with_bit_flipped(int i) const {
    check_position(i);
    return Label(value ^ (std::uint64_t{1} << (i - 1)), dim);
  }

  // x_i...x_1 as a dim-i label (the empty label when i = 0).
  Label low_bits(int i) const {
    if (i < 0 || i > dim)
      throw std::out_of_range("low_bits: width out of range");
    return Label(value & mask(i), i);
  }

  // b x_dim...x_1 as a (dim+1)-bit label.
  Label with_top_bit(bool b) const {
    if (dim >= kMaxDim) throw std::out_of_range("with_top_bit: label full");
    return Label(value | (std::uint64_t{b} << dim), dim + 1);
  }

  // Parses "x_n...x_1" (most significant bit first); "" is the empty label.
  static Label parse(std::string_view text) {
    if (text.size() > kMaxDim)
      throw std::invalid_argument("label longer than " +
                                  std::to_string(kMaxDim) + " bits");
    std::uint64_t v = 0;
    for (char c : text) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("label must be a binary string, got '" +
                                    std::string(text) + "'");
      v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return Label(v, static_cast<int>(text.size()));
  }

  // Zero-padded binary rendering, most significant bit first.
  std::string to_string() const {
    std::string s(static_cast<std::size_t>(dim), '0');
    for (int i = 0; i < dim; ++i)
      if ((value >> i) & 1u) s[static_cast<std::size_t>(dim - 1 - i)] = '1';
    return s;
  }

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;

 private:
  void check_position(int i) const {
    if (i < 1 || i > dim)
      throw std::out_of_range("bit position " + std::to_string(i) +
                              " outside 1.." + std::to_string(dim));
  }
};

}  // namespace vqn
