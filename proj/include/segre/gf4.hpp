#pragma once

#include <cstdint>
#include <stdexcept>

namespace segre {

// GF(4) = {0, 1, w, W} with W = w^2 and w^2 + w + 1 = 0.  Elements are stored
// as the 2-bit codes 0,1,2,3 (bit 0 = constant term, bit 1 = coefficient of
// w), so addition is XOR and multiplication is a 16-entry table.
class Gf4 {
 public:
  constexpr Gf4() = default;

  explicit constexpr Gf4(unsigned code) : code_{static_cast<std::uint8_t>(code)} {
    if (code > 3) throw std::invalid_argument{"Gf4: code out of range"};
  }

  static constexpr Gf4 zero() { return Gf4{0}; }
  static constexpr Gf4 one() { return Gf4{1}; }
  static constexpr Gf4 omega() { return Gf4{2}; }
  static constexpr Gf4 omega2() { return Gf4{3}; }

  [[nodiscard]] constexpr unsigned code() const { return code_; }
  [[nodiscard]] constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr Gf4 operator+(Gf4 x, Gf4 y) { return raw(x.code_ ^ y.code_); }
  friend constexpr Gf4 operator*(Gf4 x, Gf4 y) { return raw(kMul[x.code_][y.code_]); }

  constexpr Gf4& operator+=(Gf4 y) {
    code_ ^= y.code_;
    return *this;
  }
  constexpr Gf4& operator*=(Gf4 y) {
    code_ = kMul[code_][y.code_];
    return *this;
  }

  // Frobenius automorphism x -> x^2: fixes GF(2), swaps w and w^2.
  [[nodiscard]] constexpr Gf4 conj() const { return raw(kConj[code_]); }

  // x^-1 = x^2 for nonzero x, since x^3 = 1.
  [[nodiscard]] constexpr Gf4 inverse() const {
    if (code_ == 0) throw std::domain_error{"Gf4: zero has no inverse"};
    return conj();
  }

  friend constexpr bool operator==(Gf4 x, Gf4 y) { return x.code_ == y.code_; }
  friend constexpr bool operator!=(Gf4 x, Gf4 y) { return x.code_ != y.code_; }

  [[nodiscard]] constexpr char to_char() const { return "01wW"[code_]; }

  static constexpr Gf4 from_char(char c) {
    switch (c) {
      case '0': return zero();
      case '1': return one();
      case 'w': return omega();
      case 'W': return omega2();
      default: throw std::invalid_argument{"Gf4: unknown element character"};
    }
  }

 private:
  static constexpr Gf4 raw(unsigned code) {
    Gf4 g;
    g.code_ = static_cast<std::uint8_t>(code);
    return g;
  }

  static constexpr std::uint8_t kMul[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 2, 3},
      {0, 2, 3, 1},
      {0, 3, 1, 2},
  };
  static constexpr std::uint8_t kConj[4] = {0, 1, 3, 2};

  std::uint8_t code_ = 0;
};

}  // namespace segre
