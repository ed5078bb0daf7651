#include "segre/projective.hpp"

#include <algorithm>
#include <stdexcept>

namespace segre {

ProjectivePoint::ProjectivePoint(const Tensor& t)
    : t_(change_basis(t, Basis::E).normalized()) {}

namespace {

std::array<ProjectivePoint, 5> line_points(const ProjectivePoint& p,
                                           const ProjectivePoint& q) {
  const Tensor& a = p.tensor();
  const Tensor& b = q.tensor();
  std::array<ProjectivePoint, 5> pts = {
      p, q, ProjectivePoint(a + b),
      ProjectivePoint(a + b.scaled(Gf4::omega())),
      ProjectivePoint(a + b.scaled(Gf4::omega2()))};
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

ProjectiveLine::ProjectiveLine(const Tensor& a, const Tensor& b)
    : p1_(a), p2_(b) {
  if (p1_.factors() != p2_.factors())
    throw std::invalid_argument{"line points must have the same factor count"};
  if (p1_ == p2_)
    throw std::invalid_argument{"a line needs two distinct points"};
  const auto pts = line_points(p1_, p2_);
  p1_ = pts[0];
  p2_ = pts[1];
}

std::array<ProjectivePoint, 5> ProjectiveLine::points() const {
  return line_points(p1_, p2_);
}

bool ProjectiveLine::contains(const ProjectivePoint& p) const {
  const auto pts = points();
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

bool ProjectiveLine::is_real() const { return conjugate(*this) == *this; }

std::size_t ProjectiveLine::hash() const {
  return p1_.hash() * 0x9e3779b97f4a7c15ULL + p2_.hash();
}

ProjectiveLine conjugate(const ProjectiveLine& l) {
  return ProjectiveLine(conjugate(l.first().tensor()), conjugate(l.second().tensor()));
}

std::vector<ProjectivePoint> real_points_of_line(const ProjectiveLine& l) {
  std::vector<ProjectivePoint> real;
  for (const ProjectivePoint& p : l.points())
    if (p.is_real()) real.push_back(p);
  if (real.size() != 3) throw std::domain_error{"line is not real"};
  return real;
}

Subspace Subspace::span(int m, std::span<const Tensor> generators) {
  Subspace s(m);
  for (const Tensor& g : generators) {
    if (g.factors() != m)
      throw std::invalid_argument{"span: generator factor count mismatch"};
    s.insert(change_basis(g, Basis::E));
  }
  return s;
}

Tensor Subspace::reduce(const Tensor& x) const {
  if (x.factors() != m_)
    throw std::invalid_argument{"reduce: factor count mismatch"};
  Tensor y = change_basis(x, Basis::E);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Gf4 c = y.coord(pivots_[r]);
    if (!c.is_zero()) y += rows_[r].scaled(c);
  }
  return y;
}

void Subspace::insert(const Tensor& x) {
  Tensor y = reduce(x);
  const auto lead = y.leading_index();
  if (!lead) return;  // already in the span
  y = y.normalized();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Gf4 c = rows_[r].coord(*lead);
    if (!c.is_zero()) rows_[r] += y.scaled(c);
  }
  const auto at = std::upper_bound(pivots_.begin(), pivots_.end(), *lead);
  const auto idx = at - pivots_.begin();
  pivots_.insert(at, *lead);
  rows_.insert(rows_.begin() + idx, y);
}

Subspace conjugate(const Subspace& s) {
  std::vector<Tensor> rows;
  rows.reserve(s.rows().size());
  for (const Tensor& r : s.rows()) rows.push_back(conjugate(r));
  return Subspace::span(s.factors(), rows);
}

std::vector<ProjectivePoint> points_of_subspace(const Subspace& s, int q) {
  if (q != 2 && q != 4) throw std::invalid_argument{"field order must be 2 or 4"};
  const auto& rows = s.rows();
  const int r = s.rank();
  if (q == 2)
    for (const Tensor& row : rows)
      if (!row.is_real())
        throw std::invalid_argument{"GF(2) enumeration requires a real subspace"};
  std::vector<ProjectivePoint> pts;
  if (r == 0) return pts;
  // Normalized coefficient vectors: leading coefficient 1, free coefficients
  // arbitrary.  The resulting combination is normalized already, because the
  // leading row's pivot survives with coefficient 1.
  for (int lead = 0; lead < r; ++lead) {
    const int tail = r - 1 - lead;
    const unsigned long long count = 1ull << (q == 2 ? tail : 2 * tail);
    for (unsigned long long word = 0; word < count; ++word) {
      Tensor acc = rows[lead];
      for (int t = 0; t < tail; ++t) {
        const unsigned code = q == 2 ? static_cast<unsigned>((word >> t) & 1u)
                                     : static_cast<unsigned>((word >> (2 * t)) & 3u);
        if (code != 0) acc += rows[lead + 1 + t].scaled(Gf4{code});
      }
      pts.emplace_back(acc);
    }
  }
  return pts;
}

std::vector<ProjectivePoint> line_section(const Subspace& s, const ProjectiveLine& l) {
  std::vector<ProjectivePoint> sect;
  for (const ProjectivePoint& p : l.points())
    if (s.contains(p)) sect.push_back(p);
  return sect;
}

}  // namespace segre
