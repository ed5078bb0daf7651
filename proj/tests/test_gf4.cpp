#include <doctest.h>

#include <array>
#include <stdexcept>

#include "segre/gf4.hpp"

using segre::Gf4;

namespace {

// Independent arithmetic oracle: codes are polynomials b1*x + b0 over GF(2),
// multiplied modulo x^2 + x + 1.
unsigned oracle_mul(unsigned a, unsigned b) {
  unsigned product = 0;  // polynomial product, degree <= 2
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j)
      if (((a >> i) & 1u) != 0 && ((b >> j) & 1u) != 0) product ^= 1u << (i + j);
  if ((product & 4u) != 0) product ^= 4u | 3u;  // x^2 = x + 1
  return product & 3u;
}

}  // namespace

TEST_CASE("field tables match the polynomial oracle") {
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      CHECK((Gf4{a} + Gf4{b}).code() == (a ^ b));
      CHECK((Gf4{a} * Gf4{b}).code() == oracle_mul(a, b));
    }
}

TEST_CASE("field laws hold exhaustively") {
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      CHECK(Gf4{a} + Gf4{b} == Gf4{b} + Gf4{a});
      CHECK(Gf4{a} * Gf4{b} == Gf4{b} * Gf4{a});
      for (unsigned c = 0; c < 4; ++c) {
        CHECK((Gf4{a} + Gf4{b}) + Gf4{c} == Gf4{a} + (Gf4{b} + Gf4{c}));
        CHECK((Gf4{a} * Gf4{b}) * Gf4{c} == Gf4{a} * (Gf4{b} * Gf4{c}));
        CHECK(Gf4{a} * (Gf4{b} + Gf4{c}) == Gf4{a} * Gf4{b} + Gf4{a} * Gf4{c});
      }
    }
}

TEST_CASE("primitive element behaves as a cube root of unity") {
  const Gf4 w = Gf4::omega();
  const Gf4 w2 = Gf4::omega2();
  CHECK(w * w == w2);
  CHECK(w * w2 == Gf4::one());
  CHECK(w2 * w2 == w);
  CHECK(w + w2 == Gf4::one());  // x^2 + x + 1 = 0
  CHECK(w + Gf4::one() == w2);
}

TEST_CASE("conjugation is the squaring automorphism") {
  for (unsigned a = 0; a < 4; ++a) {
    const Gf4 x{a};
    CHECK(x.conj() == x * x);
    CHECK(x.conj().conj() == x);
  }
  CHECK(Gf4::omega().conj() == Gf4::omega2());
  CHECK(Gf4::one().conj() == Gf4::one());
}

TEST_CASE("inverses multiply to one") {
  for (unsigned a = 1; a < 4; ++a) CHECK(Gf4{a} * Gf4{a}.inverse() == Gf4::one());
  CHECK_THROWS_AS(static_cast<void>(Gf4::zero().inverse()), std::domain_error);
}

TEST_CASE("character codec round-trips") {
  const std::array<char, 4> chars{'0', '1', 'w', 'W'};
  for (unsigned a = 0; a < 4; ++a) {
    CHECK(Gf4{a}.to_char() == chars[a]);
    CHECK(Gf4::from_char(chars[a]) == Gf4{a});
  }
  CHECK_THROWS_AS(Gf4::from_char('x'), std::invalid_argument);
  CHECK_THROWS_AS(Gf4::from_char(' '), std::invalid_argument);
}

TEST_CASE("codes outside the field are rejected") {
  CHECK_THROWS_AS(Gf4{4u}, std::invalid_argument);
  CHECK_THROWS_AS(Gf4{255u}, std::invalid_argument);
}
