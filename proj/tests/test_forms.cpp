#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "segre/forms.hpp"
#include "segre/projective.hpp"
#include "segre/tensor.hpp"

using namespace segre;

namespace {

Tensor random_tensor(int m, std::mt19937_64& rng) {
  Tensor t{m, Basis::E};
  for (unsigned i = 0; i < t.size(); ++i)
    t.set_coord(i, Gf4{static_cast<unsigned>(rng() & 3u)});
  return t;
}

// Independent oracles reading coordinates directly.
Gf4 oracle_symplectic(const Tensor& x, const Tensor& y) {
  const Tensor a = change_basis(x, Basis::E);
  const Tensor b = change_basis(y, Basis::E);
  Gf4 acc;
  for (unsigned i = 0; i < a.size(); ++i)
    acc += a.coord(i) * b.coord(a.size() - 1 - i);
  return acc;
}

Gf4 oracle_hermitian(const Tensor& x, const Tensor& y) {
  const Tensor a = change_basis(x, Basis::E);
  const Tensor b = change_basis(y, Basis::E);
  Gf4 acc;
  for (unsigned i = 0; i < a.size(); ++i)
    acc += a.coord(i).conj() * b.coord(a.size() - 1 - i);
  return acc;
}

}  // namespace

TEST_CASE("symplectic form pairs opposite unit tensors") {
  for (int m = 1; m <= 3; ++m) {
    const unsigned n = 1u << m;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        const Gf4 v = symplectic_form(Tensor::unit(m, Basis::E, i),
                                      Tensor::unit(m, Basis::E, j));
        CHECK(v == (j == opposite_index(i, m) ? Gf4::one() : Gf4::zero()));
      }
  }
  CHECK_THROWS_AS(
      symplectic_form(Tensor::unit(2, Basis::E, 0), Tensor::unit(3, Basis::E, 0)),
      std::invalid_argument);
}

TEST_CASE("symplectic form is alternating, symmetric and bilinear") {
  std::mt19937_64 rng{501u};
  for (int trial = 0; trial < 80; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const Tensor x = random_tensor(m, rng);
    const Tensor y = random_tensor(m, rng);
    const Tensor z = random_tensor(m, rng);
    CHECK(symplectic_form(x, x).is_zero());
    CHECK(symplectic_form(x, y) == symplectic_form(y, x));  // char 2
    CHECK(symplectic_form(x + y, z) == symplectic_form(x, z) + symplectic_form(y, z));
    CHECK(symplectic_form(x.scaled(Gf4::omega()), y) ==
          Gf4::omega() * symplectic_form(x, y));
    CHECK(symplectic_form(x, y) == oracle_symplectic(x, y));
  }
}

TEST_CASE("symplectic Gram matrix of the invariant basis pairs opposite indices") {
  for (int m = 1; m <= 3; ++m) {
    const unsigned n = 1u << m;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        const Gf4 v = symplectic_form(Tensor::unit(m, Basis::U, i),
                                      Tensor::unit(m, Basis::U, j));
        CHECK(v == (j == opposite_index(i, m) ? Gf4::one() : Gf4::zero()));
      }
  }
}

TEST_CASE("quadratic form on pinned vectors") {
  CHECK(quadratic_form(Tensor::unit(3, Basis::E, 0)).is_zero());
  CHECK(quadratic_form(Tensor::unit(3, Basis::E, 7)).is_zero());
  CHECK(quadratic_form(Tensor::from_string("E:10000001")) == Gf4::one());
  CHECK(quadratic_form(Tensor::from_string("E:01110www")).is_zero());
  CHECK(quadratic_form(Tensor::from_string("E:1010")).is_zero());
  CHECK(quadratic_form(Tensor::from_string("E:1001")) == Gf4::one());
  CHECK(quadratic_form(Tensor::from_string("E:1ww1")) == Gf4::omega());  // 1 + w^2
  CHECK_THROWS_AS(quadratic_form(Tensor::unit(1, Basis::E, 0)), std::domain_error);
}

TEST_CASE("quadratic form accepts either coordinate basis") {
  std::mt19937_64 rng{502u};
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const Tensor x = random_tensor(m, rng);
    CHECK(quadratic_form(change_basis(x, Basis::U)) == quadratic_form(x));
  }
}

TEST_CASE("quadratic form polarizes to the symplectic form") {
  std::mt19937_64 rng{503u};
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const Tensor x = random_tensor(m, rng);
    const Tensor y = random_tensor(m, rng);
    CHECK(quadratic_form(x + y) + quadratic_form(x) + quadratic_form(y) ==
          symplectic_form(x, y));
    CHECK(quadratic_form(x.scaled(Gf4::omega())) ==
          Gf4::omega() * Gf4::omega() * quadratic_form(x));
  }
}

TEST_CASE("hermitian form is the conjugate-orthonormal pairing") {
  for (int m = 1; m <= 3; ++m) {
    const unsigned n = 1u << m;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        const Gf4 v = hermitian_form(Tensor::unit(m, Basis::U, i),
                                     Tensor::unit(m, Basis::U, j));
        CHECK(v == (i == j ? Gf4::one() : Gf4::zero()));
      }
  }
  std::mt19937_64 rng{504u};
  for (int trial = 0; trial < 80; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const Tensor x = random_tensor(m, rng);
    const Tensor y = random_tensor(m, rng);
    CHECK(hermitian_form(x, y) == oracle_hermitian(x, y));
    CHECK(hermitian_form(x, y) == hermitian_form(y, x).conj());
    CHECK(hermitian_form(x.scaled(Gf4::omega()), y) ==
          Gf4::omega2() * hermitian_form(x, y));
    CHECK(hermitian_form(x, y.scaled(Gf4::omega())) ==
          Gf4::omega() * hermitian_form(x, y));
    const Gf4 norm = hermitian_form(x, x);
    CHECK((norm == Gf4::zero() || norm == Gf4::one()));
  }
}

TEST_CASE("polar complements have complementary rank and involute") {
  std::mt19937_64 rng{505u};
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 2);
    const unsigned n = 1u << m;
    std::vector<Tensor> gens;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) gens.push_back(random_tensor(m, rng));
    const Subspace s = Subspace::span(m, gens);
    const Subspace polar = polar_complement(s);
    CHECK(polar.rank() == static_cast<int>(n) - s.rank());
    CHECK(polar_complement(polar) == s);
    // Every vector of the polar pairs to zero with every generator.
    for (const Tensor& row : polar.rows())
      for (const Tensor& g : gens) CHECK(symplectic_form(row, g).is_zero());
  }
}

TEST_CASE("points are self-polar under an alternating form") {
  const Subspace point = Subspace::span(2, std::vector<Tensor>{Tensor::from_string("E:01w1")});
  const Subspace polar = polar_complement(point);
  CHECK(polar.rank() == 3);
  CHECK(polar.contains(Tensor::from_string("E:01w1")));
}
