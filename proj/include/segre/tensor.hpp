#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "segre/gf4.hpp"

namespace segre {

// ---------------------------------------------------------------------------
// Multi-indices
//
// A multi-index is an element of {0,1}^m packed into an unsigned integer with
// the FIRST factor in the most significant bit.  The half with first entry 0
// is then exactly the range [0, 2^(m-1)), and the opposite multi-index
// (all entries flipped) is a single XOR against 2^m - 1.
// ---------------------------------------------------------------------------

unsigned opposite_index(unsigned i, int m);
int hamming_distance(unsigned i, unsigned j);
int index_parity(unsigned i);  // 0 = even weight, 1 = odd weight

// Coordinate bases for rank-2^m tensors: E is the product basis built from the
// standard GF(2) basis of each factor; U is the product basis built from
// u0 = e0 + w e1 and u1 = e0 + w^2 e1 in each factor.
enum class Basis : std::uint8_t { E, U };

// A coordinate vector of length 2^m over GF(4), tagged with the basis the
// coordinates refer to.  Storage is bit-sliced: one bit-plane holds the
// constant terms and one the w-coefficients, so addition, scaling by a field
// element and E-basis conjugation are word-parallel operations.
class Tensor {
 public:
  static constexpr int kMaxFactors = 8;

  Tensor(int m, Basis basis);  // the zero tensor
  static Tensor unit(int m, Basis basis, unsigned index);

  [[nodiscard]] int factors() const { return m_; }
  [[nodiscard]] unsigned size() const { return 1u << m_; }
  [[nodiscard]] Basis basis() const { return basis_; }

  [[nodiscard]] Gf4 coord(unsigned i) const;
  void set_coord(unsigned i, Gf4 v);

  [[nodiscard]] bool is_zero() const;
  // True iff the E-basis coordinates all lie in GF(2).
  [[nodiscard]] bool is_real() const;
  // Smallest index carrying a nonzero coordinate.
  [[nodiscard]] std::optional<unsigned> leading_index() const;

  [[nodiscard]] Tensor scaled(Gf4 s) const;
  // Scales so the leading coordinate becomes 1; throws on the zero tensor.
  [[nodiscard]] Tensor normalized() const;

  Tensor& operator+=(const Tensor& y);
  friend Tensor operator+(Tensor x, const Tensor& y) {
    x += y;
    return x;
  }

  friend bool operator==(const Tensor& x, const Tensor& y) {
    return x.m_ == y.m_ && x.basis_ == y.basis_ && x.unit_ == y.unit_ &&
           x.omega_ == y.omega_;
  }
  friend bool operator!=(const Tensor& x, const Tensor& y) { return !(x == y); }
  // Total order: by factor count, then basis tag, then coordinates compared
  // lexicographically with index 0 most significant (codes 0 < 1 < w < W).
  friend bool operator<(const Tensor& x, const Tensor& y);

  [[nodiscard]] std::size_t hash() const;

  // "E:" or "U:" followed by one character per coordinate ('0','1','w','W'),
  // the coordinate at multi-index k in position k.
  [[nodiscard]] std::string to_string() const;
  static Tensor from_string(std::string_view s);

 private:
  std::array<std::uint64_t, 4> unit_{};   // constant-term bit-plane
  std::array<std::uint64_t, 4> omega_{};  // w-coefficient bit-plane
  std::int8_t m_;
  Basis basis_;
};

// A vector in one rank-two factor space.
struct FactorVec {
  Gf4 x0, x1;
  [[nodiscard]] bool is_zero() const { return x0.is_zero() && x1.is_zero(); }
  friend bool operator==(const FactorVec& u, const FactorVec& v) {
    return u.x0 == v.x0 && u.x1 == v.x1;
  }
};

// A 2x2 matrix over GF(4); the columns are the images of e0 and e1.
struct Mat2 {
  Gf4 a, b, c, d;  // [[a, b], [c, d]]

  [[nodiscard]] Gf4 det() const { return a * d + b * c; }  // char 2: ad - bc = ad + bc
  [[nodiscard]] bool invertible() const { return !det().is_zero(); }
  [[nodiscard]] bool has_gf2_entries() const;
  [[nodiscard]] FactorVec apply(const FactorVec& v) const;

  static constexpr Mat2 identity() { return {Gf4::one(), Gf4::zero(), Gf4::zero(), Gf4::one()}; }
  // Swaps e0 and e1.
  static constexpr Mat2 swap() { return {Gf4::zero(), Gf4::one(), Gf4::one(), Gf4::zero()}; }
  // e0 -> e0, e1 -> e0 + e1.
  static constexpr Mat2 shear() { return {Gf4::one(), Gf4::one(), Gf4::zero(), Gf4::one()}; }

  friend bool operator==(const Mat2& f, const Mat2& g) {
    return f.a == g.a && f.b == g.b && f.c == g.c && f.d == g.d;
  }
};

// Outer product of m nonzero factor vectors, expressed in the E-basis:
// coordinate i is the product over k of entry i_k of factor k.
Tensor decomposable(std::span<const FactorVec> factors);

// (f1 x ... x fm)(x) for invertible factor maps; x must carry E-coordinates.
Tensor kronecker_apply(std::span<const Mat2> maps, const Tensor& x);
// Applies f in factor k (0-based) and the identity elsewhere.
Tensor apply_factor_map(int k, const Mat2& f, const Tensor& x);

// Coordinate action of a permutation of the factors: the result has
// coordinate sigma(i) equal to coordinate i of x, where sigma moves factor k
// to position sigma[k] (0-based) and acts on multi-indices entry-wise.
// Works in either basis, since the same substitution applies factor-wise.
Tensor permute_factors(std::span<const int> sigma, const Tensor& x);

// Rewrites x in the requested basis using the per-factor substitutions
// u0 = e0 + w e1, u1 = e0 + w^2 e1 and e0 = w^2 u0 + w u1, e1 = u0 + u1.
Tensor change_basis(const Tensor& x, Basis target);

// Semilinear conjugation: coordinate-wise Frobenius in the E-basis.  In the
// U-basis the conjugate of U_i is U_{i'}, so conjugation is the coordinate
// Frobenius composed with the swap of opposite indices.
Tensor conjugate(const Tensor& x);

}  // namespace segre

template <>
struct std::hash<segre::Tensor> {
  std::size_t operator()(const segre::Tensor& t) const noexcept { return t.hash(); }
};
