#include "segre/varieties.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "segre/forms.hpp"

namespace segre {

namespace {

void check_enumeration_size(int m, int q) {
  if (q != 2 && q != 4) throw std::invalid_argument{"field order must be 2 or 4"};
  if (m < 1) throw std::invalid_argument{"factor count out of supported range"};
  const int limit = q == 2 ? 4 : 3;
  if (m > limit)
    throw std::invalid_argument{"full enumeration limited to m <= 4 over GF(2), m <= 3 over GF(4)"};
}

// Normalized representatives of the projective points of one factor space,
// in increasing coordinate order.
std::vector<FactorVec> factor_reps(int q) {
  std::vector<FactorVec> reps;
  reps.push_back({Gf4::zero(), Gf4::one()});
  const unsigned codes = q == 2 ? 2u : 4u;
  for (unsigned c = 0; c < codes; ++c) reps.push_back({Gf4::one(), Gf4{c}});
  return reps;
}

const FactorVec kU0{Gf4::one(), Gf4::omega()};
const FactorVec kU1{Gf4::one(), Gf4::omega2()};

}  // namespace

PointSet make_point_set(const std::vector<ProjectivePoint>& pts) {
  return PointSet(pts.begin(), pts.end());
}

std::vector<ProjectivePoint> all_points(int m, int q) {
  check_enumeration_size(m, q);
  const unsigned n = 1u << m;
  std::vector<ProjectivePoint> pts;
  if (q == 2) {
    pts.reserve((1ull << n) - 1);
    for (unsigned long long mask = 1; mask < (1ull << n); ++mask) {
      Tensor t(m, Basis::E);
      for (unsigned i = 0; i < n; ++i)
        if ((mask >> i) & 1u) t.set_coord(i, Gf4::one());
      pts.emplace_back(t);
    }
    return pts;
  }
  // Normalized GF(4) representatives: leading coordinate 1, later coordinates
  // free.  Enumerated leading index by leading index.
  for (unsigned lead = 0; lead < n; ++lead) {
    const unsigned tail = n - 1 - lead;
    for (unsigned long long word = 0; word < (1ull << (2 * tail)); ++word) {
      Tensor t(m, Basis::E);
      t.set_coord(lead, Gf4::one());
      for (unsigned j = 0; j < tail; ++j)
        t.set_coord(lead + 1 + j, Gf4{static_cast<unsigned>((word >> (2 * j)) & 3u)});
      pts.emplace_back(t);
    }
  }
  return pts;
}

std::vector<ProjectivePoint> segre_points(int m, int q) {
  check_enumeration_size(m, q);
  const std::vector<FactorVec> reps = factor_reps(q);
  const std::size_t per_factor = reps.size();
  std::vector<FactorVec> tuple(m, reps[0]);
  std::vector<std::size_t> digit(m, 0);
  std::vector<ProjectivePoint> pts;
  for (;;) {
    for (int k = 0; k < m; ++k) tuple[k] = reps[digit[k]];
    pts.emplace_back(decomposable(tuple));
    int k = m - 1;
    while (k >= 0 && ++digit[k] == per_factor) digit[k--] = 0;
    if (k < 0) break;
  }
  if (make_point_set(pts).size() != pts.size())
    throw std::logic_error{"Segre enumeration produced a repeated point"};
  return pts;
}

std::vector<ProjectivePoint> quadric_points(int m, int q) {
  if (m < 2) throw std::domain_error{"quadric undefined for a single factor"};
  std::vector<ProjectivePoint> pts;
  for (ProjectivePoint& p : all_points(m, q))
    if (quadratic_form(p.tensor()).is_zero()) pts.push_back(std::move(p));
  return pts;
}

std::vector<ProjectivePoint> hermitian_points(int m) {
  std::vector<ProjectivePoint> pts;
  for (ProjectivePoint& p : all_points(m, 4))
    if (hermitian_form(p.tensor(), p.tensor()).is_zero()) pts.push_back(std::move(p));
  return pts;
}

std::optional<std::vector<FactorVec>> decompose(const Tensor& x) {
  const Tensor t = change_basis(x, Basis::E);
  const auto lead = t.leading_index();
  if (!lead) return std::nullopt;
  const int m = t.factors();
  // Candidate factor k is the pair of coordinates at the leading index with
  // the k-th entry forced to 0 and 1; correct up to scale iff x splits.
  std::vector<FactorVec> factors(m);
  for (int k = 0; k < m; ++k) {
    const unsigned bit = 1u << (m - 1 - k);
    factors[k] = {t.coord(*lead & ~bit), t.coord(*lead | bit)};
  }
  const Tensor product = decomposable(factors);
  if (product.normalized() != t.normalized()) return std::nullopt;
  return factors;
}

ProjectivePoint invariant_basis_point(int m, unsigned index) {
  if (m < 1 || m > Tensor::kMaxFactors)
    throw std::invalid_argument{"factor count out of supported range"};
  if (index >= (1u << m)) throw std::out_of_range{"multi-index out of range"};
  std::vector<FactorVec> tuple(m);
  for (int k = 0; k < m; ++k)
    tuple[k] = ((index >> (m - 1 - k)) & 1u) ? kU1 : kU0;
  return ProjectivePoint(decomposable(tuple));
}

InvariantBasis invariant_basis(int m) {
  InvariantBasis b{m, {}, {}, {}, Subspace::span(m, {}), Subspace::span(m, {})};
  const unsigned n = 1u << m;
  std::vector<Tensor> even, odd;
  for (unsigned i = 0; i < n; ++i) {
    b.points.push_back(invariant_basis_point(m, i));
    if (index_parity(i) == 0) {
      b.even_indices.push_back(i);
      even.push_back(b.points.back().tensor());
    } else {
      b.odd_indices.push_back(i);
      odd.push_back(b.points.back().tensor());
    }
  }
  b.span_even = Subspace::span(m, even);
  b.span_odd = Subspace::span(m, odd);
  return b;
}

std::vector<ProjectiveLine> base_lines(int m) {
  std::vector<ProjectiveLine> lines;
  const unsigned n = 1u << m;
  for (unsigned i = 0; i < n / 2; ++i)
    lines.emplace_back(invariant_basis_point(m, i).tensor(),
                       invariant_basis_point(m, (n - 1) ^ i).tensor());
  return lines;
}

int u_support(const ProjectivePoint& p) {
  const Tensor u = change_basis(p.tensor(), Basis::U);
  int count = 0;
  for (unsigned i = 0; i < u.size(); ++i)
    if (!u.coord(i).is_zero()) ++count;
  return count;
}

namespace {

// Factors of a binary Segre point, as GF(2) vectors.
std::vector<FactorVec> segre_factors(const ProjectivePoint& p) {
  if (p.factors() < 2 || !p.is_real())
    throw std::invalid_argument{"tangent defined at binary Segre points only"};
  auto factors = decompose(p.tensor());
  if (!factors)
    throw std::invalid_argument{"tangent defined at binary Segre points only"};
  return *factors;
}

FactorVec smallest_other_factor(const FactorVec& a) {
  for (const FactorVec v :
       {FactorVec{Gf4::zero(), Gf4::one()}, FactorVec{Gf4::one(), Gf4::zero()},
        FactorVec{Gf4::one(), Gf4::one()}})
    if (!(v == a)) return v;
  throw std::logic_error{"factor space exhausted"};
}

Tensor replace_factor(const std::vector<FactorVec>& factors, int k, const FactorVec& d) {
  std::vector<FactorVec> copy = factors;
  copy[k] = d;
  return decomposable(copy);
}

ProjectiveLine tangent_closed_form(const ProjectivePoint& p,
                                   const std::vector<FactorVec>& factors) {
  const int m = static_cast<int>(factors.size());
  Tensor sum(m, Basis::E);
  for (int k = 0; k < m; ++k)
    sum += replace_factor(factors, k, smallest_other_factor(factors[k]));
  return ProjectiveLine(p.tensor(), sum);
}

ProjectiveLine tangent_oracle(const ProjectivePoint& p,
                              const std::vector<FactorVec>& factors) {
  const int m = static_cast<int>(factors.size());
  // The tangent space at p is spanned by the m generators through p; the
  // generator in factor k is spanned by p and p with factor k replaced.
  std::vector<Tensor> generators{p.tensor()};
  for (int k = 0; k < m; ++k)
    generators.push_back(replace_factor(factors, k, smallest_other_factor(factors[k])));
  const Subspace tangent_space = Subspace::span(m, generators);
  if (tangent_space.rank() != m + 1)
    throw std::logic_error{"tangent space has unexpected dimension"};

  std::unordered_set<ProjectiveLine> tangents;
  for (const ProjectivePoint& x : points_of_subspace(tangent_space, 2))
    if (x != p) tangents.insert(ProjectiveLine(p.tensor(), x.tensor()));
  if (tangents.size() != (1u << m) - 1)
    throw std::logic_error{"unexpected number of tangent lines"};

  std::vector<Subspace> partial_spans;  // span of all generators but one
  for (int omit = 0; omit < m; ++omit) {
    std::vector<Tensor> rows{p.tensor()};
    for (int k = 0; k < m; ++k)
      if (k != omit) rows.push_back(generators[k + 1]);
    partial_spans.push_back(Subspace::span(m, rows));
  }

  std::vector<ProjectiveLine> distinguished;
  for (const ProjectiveLine& t : tangents) {
    bool in_some = false;
    for (const Subspace& s : partial_spans)
      in_some |= s.contains(t.first()) && s.contains(t.second());
    if (!in_some) distinguished.push_back(t);
  }
  if (distinguished.size() != 1)
    throw std::logic_error{"distinguished tangent is not unique"};
  return distinguished.front();
}

}  // namespace

ProjectiveLine distinguished_tangent(const ProjectivePoint& p, TangentMode mode) {
  const std::vector<FactorVec> factors = segre_factors(p);
  return mode == TangentMode::ClosedForm ? tangent_closed_form(p, factors)
                                         : tangent_oracle(p, factors);
}

std::vector<SpreadLine> line_spread(int m) {
  if (m % 2 == 0) throw std::domain_error{"the line spread exists for odd m only"};
  if (m < 3) throw std::domain_error{"the line spread needs m >= 3"};
  if (m != 3)
    throw std::invalid_argument{"full spread enumeration supported for m = 3 only"};
  const InvariantBasis basis = invariant_basis(m);
  std::vector<SpreadLine> spread;
  for (const ProjectivePoint& x : points_of_subspace(basis.span_even, 4)) {
    const Tensor xc = conjugate(x.tensor());
    spread.push_back({ProjectiveLine(x.tensor(), xc), x, u_support(x)});
  }
  return spread;
}

QuadricRelation spread_line_vs_quadric(const SpreadLine& l) {
  const Tensor& x = l.contact_even.tensor();
  return hermitian_form(x, x).is_zero() ? QuadricRelation::Generator
                                        : QuadricRelation::Bisecant;
}

IncidenceStructure hermitian_substructure() {
  const InvariantBasis basis = invariant_basis(3);

  std::vector<ProjectivePoint> points;
  for (const ProjectivePoint& x : points_of_subspace(basis.span_even, 4))
    if (hermitian_form(x.tensor(), x.tensor()).is_zero()) points.push_back(x);
  std::sort(points.begin(), points.end());
  const PointSet in_structure = make_point_set(points);

  std::unordered_set<ProjectiveLine> seen;
  std::vector<ProjectiveLine> lines;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      ProjectiveLine l(points[i].tensor(), points[j].tensor());
      if (!seen.insert(l).second) continue;
      bool inside = true;
      for (const ProjectivePoint& p : l.points()) inside &= in_structure.contains(p);
      if (inside) lines.push_back(l);
    }
  std::sort(lines.begin(), lines.end());

  IncidenceStructure s{std::move(points), std::move(lines), {}};
  for (std::size_t li = 0; li < s.lines.size(); ++li)
    for (const ProjectivePoint& p : s.lines[li].points()) {
      const auto at = std::lower_bound(s.points.begin(), s.points.end(), p);
      s.incidences.emplace_back(static_cast<int>(at - s.points.begin()),
                                static_cast<int>(li));
    }
  std::sort(s.incidences.begin(), s.incidences.end());
  return s;
}

}  // namespace segre
