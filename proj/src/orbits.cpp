#include "segre/orbits.hpp"

#include <array>
#include <numeric>
#include <utility>

#include "segre/varieties.hpp"

namespace segre {

namespace {

std::vector<int> swap_sigma(int m, int k) {
  std::vector<int> sigma(static_cast<std::size_t>(m));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::swap(sigma[static_cast<std::size_t>(k)], sigma[static_cast<std::size_t>(k) + 1]);
  return sigma;
}

}  // namespace

Tensor Generator::apply(const Tensor& x) const {
  const Tensor e = change_basis(x, Basis::E);
  Tensor image{e.factors(), Basis::E};
  switch (kind) {
    case Kind::FactorMap:
      image = apply_factor_map(factor, map, e);
      break;
    case Kind::FactorSwap:
      image = permute_factors(swap_sigma(e.factors(), factor), e);
      break;
  }
  return change_basis(image, x.basis());
}

ProjectivePoint Generator::apply(const ProjectivePoint& p) const {
  return ProjectivePoint{apply(p.tensor())};
}

ProjectiveLine Generator::apply(const ProjectiveLine& l) const {
  return ProjectiveLine{apply(l.first().tensor()), apply(l.second().tensor())};
}

std::vector<Generator> stabiliser_generators(int m) {
  if (m < 1 || m > Tensor::kMaxFactors)
    throw std::invalid_argument{"factor count out of range"};
  std::vector<Generator> gens;
  gens.reserve(static_cast<std::size_t>(3 * m - 1));
  for (int k = 0; k < m; ++k) {
    gens.push_back({Generator::Kind::FactorMap, k, Mat2::swap()});
    gens.push_back({Generator::Kind::FactorMap, k, Mat2::shear()});
  }
  for (int k = 0; k + 1 < m; ++k)
    gens.push_back({Generator::Kind::FactorSwap, k, Mat2::identity()});
  return gens;
}

int sgn2(const Mat2& f) {
  if (!f.has_gf2_entries() || !f.invertible())
    throw std::invalid_argument{"sgn2 needs an invertible GF(2) map"};
  const std::array<FactorVec, 3> nonzero{
      FactorVec{Gf4::zero(), Gf4::one()},
      FactorVec{Gf4::one(), Gf4::zero()},
      FactorVec{Gf4::one(), Gf4::one()},
  };
  int fixed = 0;
  for (const FactorVec& v : nonzero)
    if (f.apply(v) == v) ++fixed;
  // A permutation of three objects is odd exactly when it is a transposition,
  // i.e. has exactly one fixed point.
  return fixed == 1 ? 1 : 0;
}

unsigned AffineIndexMap::operator()(unsigned i) const {
  unsigned j = 0;
  for (int k = 0; k < m; ++k) {
    const unsigned bit = (i >> (m - 1 - k)) & 1u;
    j |= bit << (m - 1 - sigma[static_cast<std::size_t>(k)]);
  }
  return j ^ shift;
}

bool AffineIndexMap::is_identity() const {
  if (shift != 0) return false;
  for (int k = 0; k < m; ++k)
    if (sigma[static_cast<std::size_t>(k)] != k) return false;
  return true;
}

AffineIndexMap induced_index_action(std::span<const Generator> word, int m) {
  if (m < 1 || m > Tensor::kMaxFactors)
    throw std::invalid_argument{"factor count out of range"};
  AffineIndexMap a{m, std::vector<int>(static_cast<std::size_t>(m)), 0u};
  std::iota(a.sigma.begin(), a.sigma.end(), 0);
  for (const Generator& g : word) {
    switch (g.kind) {
      case Generator::Kind::FactorMap:
        // An even factor map fixes both u0 and u1 projectively, an odd one
        // swaps them, so the map translates the multi-index in digit g.factor.
        a.shift ^= static_cast<unsigned>(sgn2(g.map)) << (m - 1 - g.factor);
        break;
      case Generator::Kind::FactorSwap: {
        const std::vector<int> tau = swap_sigma(m, g.factor);
        for (int& image : a.sigma) image = tau[static_cast<std::size_t>(image)];
        const unsigned lo = (a.shift >> (m - 1 - g.factor)) & 1u;
        const unsigned hi = (a.shift >> (m - 2 - g.factor)) & 1u;
        a.shift &= ~((1u << (m - 1 - g.factor)) | (1u << (m - 2 - g.factor)));
        a.shift |= (hi << (m - 1 - g.factor)) | (lo << (m - 2 - g.factor));
        break;
      }
    }
  }
  const unsigned count = 1u << m;
  for (unsigned i = 0; i < count; ++i) {
    ProjectivePoint image = invariant_basis_point(m, i);
    for (const Generator& g : word) image = g.apply(image);
    if (image != invariant_basis_point(m, a(i)))
      throw std::logic_error{"index action disagrees with the point images"};
  }
  return a;
}

OrbitPartition<ProjectivePoint> point_orbits(int m) {
  const std::vector<Generator> gens = stabiliser_generators(m);
  return orbit_closure(
      all_points(m, 2), gens,
      [](const Generator& g, const ProjectivePoint& p) { return g.apply(p); });
}

OrbitPartition<ProjectiveLine> spread_line_orbits(const std::vector<SpreadLine>& spread,
                                                  int m) {
  std::vector<ProjectiveLine> lines;
  lines.reserve(spread.size());
  for (const SpreadLine& s : spread) lines.push_back(s.line);
  const std::vector<Generator> gens = stabiliser_generators(m);
  return orbit_closure(
      std::move(lines), gens,
      [](const Generator& g, const ProjectiveLine& l) { return g.apply(l); });
}

SpreadTable build_spread_table(int m) {
  SpreadTable table;
  table.lines = line_spread(m);
  for (std::size_t li = 0; li < table.lines.size(); ++li) {
    for (const ProjectivePoint& p : real_points_of_line(table.lines[li].line)) {
      const auto [it, inserted] = table.line_of_point.emplace(p, static_cast<int>(li));
      if (!inserted)
        throw std::logic_error{"spread lines share a real point"};
      (void)it;
    }
  }
  return table;
}

int classify_point(const ProjectivePoint& p, const PointSet& segre,
                   const SpreadTable& table) {
  if (!p.is_real())
    throw std::invalid_argument{"classification applies to real points"};
  if (segre.contains(p)) return 5;
  const auto it = table.line_of_point.find(p);
  if (it == table.line_of_point.end())
    throw std::logic_error{"point not covered by the spread"};
  return table.lines[static_cast<std::size_t>(it->second)].class_r;
}

std::vector<int> point_orbit_display_order(const OrbitPartition<ProjectivePoint>& orbits,
                                           int m) {
  const PointSet segre = make_point_set(segre_points(m, 2));
  std::vector<int> segre_flag(orbits.sizes.size(), 0);
  std::vector<int> class_key(orbits.sizes.size(), 0);
  if (m == 3) {
    const SpreadTable table = build_spread_table(m);
    for (std::size_t o = 0; o < orbits.sizes.size(); ++o)
      class_key[o] = classify_point(orbits.representatives[o], segre, table);
  }
  for (std::size_t o = 0; o < orbits.sizes.size(); ++o)
    if (segre.contains(orbits.representatives[o])) {
      segre_flag[o] = 1;
      class_key[o] = 0;
    }
  std::vector<int> order(orbits.sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const auto sx = static_cast<std::size_t>(x);
    const auto sy = static_cast<std::size_t>(y);
    if (segre_flag[sx] != segre_flag[sy]) return segre_flag[sx] < segre_flag[sy];
    if (class_key[sx] != class_key[sy]) return class_key[sx] < class_key[sy];
    if (orbits.sizes[sx] != orbits.sizes[sy]) return orbits.sizes[sx] < orbits.sizes[sy];
    return orbits.representatives[sx] < orbits.representatives[sy];
  });
  return order;
}

std::vector<int> line_orbit_display_order(const OrbitPartition<ProjectiveLine>& orbits,
                                          const std::vector<SpreadLine>& spread) {
  std::unordered_map<ProjectiveLine, int> class_of;
  class_of.reserve(spread.size());
  for (const SpreadLine& s : spread) class_of.emplace(s.line, s.class_r);
  std::vector<int> order(orbits.sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const auto sx = static_cast<std::size_t>(x);
    const auto sy = static_cast<std::size_t>(y);
    const int cx = class_of.at(orbits.representatives[sx]);
    const int cy = class_of.at(orbits.representatives[sy]);
    if (cx != cy) return cx < cy;
    if (orbits.sizes[sx] != orbits.sizes[sy]) return orbits.sizes[sx] < orbits.sizes[sy];
    return orbits.representatives[sx] < orbits.representatives[sy];
  });
  return order;
}

}  // namespace segre
