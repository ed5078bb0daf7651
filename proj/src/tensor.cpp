#include "segre/tensor.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace segre {

namespace {

void check_factor_count(int m) {
  if (m < 1 || m > Tensor::kMaxFactors)
    throw std::invalid_argument{"factor count out of supported range"};
}

}  // namespace

unsigned opposite_index(unsigned i, int m) {
  check_factor_count(m);
  const unsigned n = 1u << m;
  if (i >= n) throw std::out_of_range{"multi-index out of range"};
  return i ^ (n - 1);
}

int hamming_distance(unsigned i, unsigned j) { return std::popcount(i ^ j); }

int index_parity(unsigned i) { return std::popcount(i) & 1; }

Tensor::Tensor(int m, Basis basis) : m_(static_cast<std::int8_t>(m)), basis_(basis) {
  check_factor_count(m);
}

Tensor Tensor::unit(int m, Basis basis, unsigned index) {
  Tensor t(m, basis);
  if (index >= t.size()) throw std::out_of_range{"multi-index out of range"};
  t.set_coord(index, Gf4::one());
  return t;
}

Gf4 Tensor::coord(unsigned i) const {
  if (i >= size()) throw std::out_of_range{"multi-index out of range"};
  const unsigned w = i >> 6, b = i & 63;
  const unsigned lo = (unit_[w] >> b) & 1u;
  const unsigned hi = (omega_[w] >> b) & 1u;
  return Gf4{lo | (hi << 1)};
}

void Tensor::set_coord(unsigned i, Gf4 v) {
  if (i >= size()) throw std::out_of_range{"multi-index out of range"};
  const unsigned w = i >> 6, b = i & 63;
  const std::uint64_t mask = std::uint64_t{1} << b;
  unit_[w] = (unit_[w] & ~mask) | (std::uint64_t{v.code() & 1u} << b);
  omega_[w] = (omega_[w] & ~mask) | (std::uint64_t{(v.code() >> 1) & 1u} << b);
}

bool Tensor::is_zero() const {
  for (int w = 0; w < 4; ++w)
    if (unit_[w] != 0 || omega_[w] != 0) return false;
  return true;
}

bool Tensor::is_real() const {
  if (basis_ != Basis::E) return change_basis(*this, Basis::E).is_real();
  for (int w = 0; w < 4; ++w)
    if (omega_[w] != 0) return false;
  return true;
}

std::optional<unsigned> Tensor::leading_index() const {
  for (unsigned w = 0; w < 4; ++w) {
    const std::uint64_t any = unit_[w] | omega_[w];
    if (any != 0) return (w << 6) | static_cast<unsigned>(std::countr_zero(any));
  }
  return std::nullopt;
}

Tensor Tensor::scaled(Gf4 s) const {
  Tensor r(m_, basis_);
  switch (s.code()) {
    case 0:
      break;
    case 1:
      r = *this;
      break;
    case 2:  // times w: 1 -> w -> w^2 -> 1
      for (int w = 0; w < 4; ++w) {
        r.unit_[w] = omega_[w];
        r.omega_[w] = unit_[w] ^ omega_[w];
      }
      break;
    case 3:  // times w^2
      for (int w = 0; w < 4; ++w) {
        r.unit_[w] = unit_[w] ^ omega_[w];
        r.omega_[w] = unit_[w];
      }
      break;
  }
  return r;
}

Tensor Tensor::normalized() const {
  const auto lead = leading_index();
  if (!lead) throw std::domain_error{"cannot normalize the zero tensor"};
  return scaled(coord(*lead).inverse());
}

Tensor& Tensor::operator+=(const Tensor& y) {
  if (m_ != y.m_ || basis_ != y.basis_)
    throw std::invalid_argument{"tensor sum requires matching factor count and basis"};
  for (int w = 0; w < 4; ++w) {
    unit_[w] ^= y.unit_[w];
    omega_[w] ^= y.omega_[w];
  }
  return *this;
}

bool operator<(const Tensor& x, const Tensor& y) {
  if (x.m_ != y.m_) return x.m_ < y.m_;
  if (x.basis_ != y.basis_) return x.basis_ < y.basis_;
  const unsigned n = x.size();
  for (unsigned i = 0; i < n; ++i) {
    const unsigned a = x.coord(i).code(), b = y.coord(i).code();
    if (a != b) return a < b;
  }
  return false;
}

std::size_t Tensor::hash() const {
  // splitmix64-style mixing over the payload words and the tags.
  auto mix = [](std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
    return h ^ (h >> 31);
  };
  std::uint64_t h = static_cast<std::uint64_t>(m_) << 8 | static_cast<std::uint64_t>(basis_);
  for (int w = 0; w < 4; ++w) {
    h = mix(h, unit_[w]);
    h = mix(h, omega_[w]);
  }
  return static_cast<std::size_t>(h);
}

std::string Tensor::to_string() const {
  std::string s;
  s.reserve(size() + 2);
  s.push_back(basis_ == Basis::E ? 'E' : 'U');
  s.push_back(':');
  for (unsigned i = 0; i < size(); ++i) s.push_back(coord(i).to_char());
  return s;
}

Tensor Tensor::from_string(std::string_view s) {
  if (s.size() < 4 || s[1] != ':' || (s[0] != 'E' && s[0] != 'U'))
    throw std::invalid_argument{"tensor string must look like \"E:...\" or \"U:...\""};
  const std::size_t n = s.size() - 2;
  if ((n & (n - 1)) != 0 || n < 2 || n > 256)
    throw std::invalid_argument{"tensor string length must be a power of two in [2,256]"};
  const int m = std::countr_zero(n);
  Tensor t(m, s[0] == 'E' ? Basis::E : Basis::U);
  for (unsigned i = 0; i < n; ++i) t.set_coord(i, Gf4::from_char(s[i + 2]));
  return t;
}

bool Mat2::has_gf2_entries() const {
  return a.code() < 2 && b.code() < 2 && c.code() < 2 && d.code() < 2;
}

FactorVec Mat2::apply(const FactorVec& v) const {
  return {a * v.x0 + b * v.x1, c * v.x0 + d * v.x1};
}

Tensor decomposable(std::span<const FactorVec> factors) {
  const int m = static_cast<int>(factors.size());
  check_factor_count(m);
  for (const FactorVec& f : factors)
    if (f.is_zero()) throw std::invalid_argument{"decomposable: zero factor"};
  Tensor t(m, Basis::E);
  const unsigned n = t.size();
  for (unsigned i = 0; i < n; ++i) {
    Gf4 v = Gf4::one();
    for (int k = 0; k < m; ++k) {
      const unsigned bit = (i >> (m - 1 - k)) & 1u;
      v *= bit ? factors[k].x1 : factors[k].x0;
    }
    t.set_coord(i, v);
  }
  return t;
}

namespace {

// One Kronecker stage: every coordinate pair (i, i|stride) with the stride
// bit clear in i is replaced by (a x0 + b x1, c x0 + d x1).
void apply_stage(Tensor& t, unsigned stride, Gf4 a, Gf4 b, Gf4 c, Gf4 d) {
  const unsigned n = t.size();
  for (unsigned i = 0; i < n; ++i) {
    if (i & stride) continue;
    const Gf4 x0 = t.coord(i), x1 = t.coord(i | stride);
    t.set_coord(i, a * x0 + b * x1);
    t.set_coord(i | stride, c * x0 + d * x1);
  }
}

}  // namespace

Tensor kronecker_apply(std::span<const Mat2> maps, const Tensor& x) {
  const int m = x.factors();
  if (static_cast<int>(maps.size()) != m)
    throw std::invalid_argument{"kronecker_apply: need one map per factor"};
  if (x.basis() != Basis::E)
    throw std::invalid_argument{"kronecker_apply expects E-basis coordinates"};
  for (const Mat2& f : maps)
    if (!f.invertible()) throw std::invalid_argument{"kronecker_apply: singular factor map"};
  Tensor r = x;
  for (int k = 0; k < m; ++k)
    apply_stage(r, 1u << (m - 1 - k), maps[k].a, maps[k].b, maps[k].c, maps[k].d);
  return r;
}

Tensor apply_factor_map(int k, const Mat2& f, const Tensor& x) {
  const int m = x.factors();
  if (k < 0 || k >= m) throw std::out_of_range{"factor index out of range"};
  if (x.basis() != Basis::E)
    throw std::invalid_argument{"apply_factor_map expects E-basis coordinates"};
  if (!f.invertible()) throw std::invalid_argument{"apply_factor_map: singular factor map"};
  Tensor r = x;
  apply_stage(r, 1u << (m - 1 - k), f.a, f.b, f.c, f.d);
  return r;
}

Tensor permute_factors(std::span<const int> sigma, const Tensor& x) {
  const int m = x.factors();
  if (static_cast<int>(sigma.size()) != m)
    throw std::invalid_argument{"permute_factors: permutation length must equal factor count"};
  std::vector<bool> seen(m, false);
  for (int v : sigma) {
    if (v < 0 || v >= m || seen[v])
      throw std::invalid_argument{"permute_factors: not a permutation"};
    seen[v] = true;
  }
  Tensor r(x.factors(), x.basis());
  const unsigned n = x.size();
  for (unsigned i = 0; i < n; ++i) {
    unsigned j = 0;
    for (int k = 0; k < m; ++k) {
      const unsigned bit = (i >> (m - 1 - k)) & 1u;
      j |= bit << (m - 1 - sigma[k]);
    }
    r.set_coord(j, x.coord(i));
  }
  return r;
}

Tensor change_basis(const Tensor& x, Basis target) {
  if (x.basis() == target) return x;
  const int m = x.factors();
  Tensor r = x;
  // Coordinate substitution per factor.  E -> U uses e0 = w^2 u0 + w u1 and
  // e1 = u0 + u1; U -> E uses u0 = e0 + w e1 and u1 = e0 + w^2 e1.
  for (int k = 0; k < m; ++k) {
    const unsigned stride = 1u << (m - 1 - k);
    if (target == Basis::U)
      apply_stage(r, stride, Gf4::omega2(), Gf4::one(), Gf4::omega(), Gf4::one());
    else
      apply_stage(r, stride, Gf4::one(), Gf4::one(), Gf4::omega(), Gf4::omega2());
  }
  Tensor out(m, target);
  for (unsigned i = 0; i < x.size(); ++i) out.set_coord(i, r.coord(i));
  return out;
}

Tensor conjugate(const Tensor& x) {
  const unsigned n = x.size();
  Tensor r(x.factors(), x.basis());
  if (x.basis() == Basis::E) {
    for (unsigned i = 0; i < n; ++i) r.set_coord(i, x.coord(i).conj());
  } else {
    // conj(U_i) = U_{i'}: Frobenius on coordinates plus the opposite-index swap.
    for (unsigned i = 0; i < n; ++i) r.set_coord((n - 1) ^ i, x.coord(i).conj());
  }
  return r;
}

}  // namespace segre
