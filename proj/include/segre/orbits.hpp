#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "segre/projective.hpp"
#include "segre/tensor.hpp"
#include "segre/varieties.hpp"

namespace segre {

// One generator of the stabiliser of the binary Segre variety: an invertible
// GF(2) map in a single factor, or a swap of two adjacent factors.
struct Generator {
  enum class Kind : std::uint8_t { FactorMap, FactorSwap };

  Kind kind;
  int factor;  // 0-based; FactorSwap exchanges factors (factor, factor + 1)
  Mat2 map;    // used by FactorMap only

  [[nodiscard]] Tensor apply(const Tensor& x) const;
  [[nodiscard]] ProjectivePoint apply(const ProjectivePoint& p) const;
  [[nodiscard]] ProjectiveLine apply(const ProjectiveLine& l) const;
};

// 3m - 1 generators: per factor the basis swap and the shear e1 -> e0 + e1
// (together they generate all six invertible GF(2) maps of the factor), plus
// the m - 1 adjacent factor transpositions.
std::vector<Generator> stabiliser_generators(int m);

// Parity of the permutation a GF(2) factor map induces on the three nonzero
// factor vectors: 0 for the identity and the two 3-cycles, 1 for the three
// transpositions.
int sgn2(const Mat2& f);

// An affine map i -> sigma(i) + shift on multi-indices, acting entry-wise via
// the factor permutation sigma and a translation.
struct AffineIndexMap {
  int m;
  std::vector<int> sigma;  // factor permutation, 0-based images
  unsigned shift;

  [[nodiscard]] unsigned operator()(unsigned i) const;
  [[nodiscard]] bool is_identity() const;
};

// The action a word of generators induces on the invariant basis: factor maps
// translate the multi-index by their sgn2 vector, factor swaps permute its
// entries.  The composed map is verified against the actual images of every
// basis point; a mismatch throws.
AffineIndexMap induced_index_action(std::span<const Generator> word, int m);

template <class T>
struct OrbitPartition {
  std::vector<T> objects;
  std::vector<int> labels;          // orbit id per object
  std::vector<T> representatives;   // per orbit: lexicographically smallest member
  std::vector<std::size_t> sizes;   // per orbit

  [[nodiscard]] int orbit_count() const { return static_cast<int>(sizes.size()); }
  [[nodiscard]] std::vector<std::size_t> sizes_descending() const {
    std::vector<std::size_t> s = sizes;
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
  }
};

// Breadth-first closure of the generator action on a finite invariant object
// set.  Orbit ids are assigned by increasing representative, so the labelling
// is canonical.  An image outside the object set throws (the set must be
// invariant).
template <class T, class ApplyFn>
OrbitPartition<T> orbit_closure(std::vector<T> objects,
                                std::span<const Generator> generators,
                                ApplyFn&& apply) {
  std::unordered_map<T, int> index;
  index.reserve(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i)
    index.emplace(objects[i], static_cast<int>(i));

  OrbitPartition<T> part;
  part.objects = std::move(objects);
  part.labels.assign(part.objects.size(), -1);

  std::vector<int> queue;
  for (std::size_t start = 0; start < part.objects.size(); ++start) {
    if (part.labels[start] != -1) continue;
    const int label = static_cast<int>(part.representatives.size());
    part.labels[start] = label;
    queue.assign(1, static_cast<int>(start));
    T rep = part.objects[start];
    std::size_t size = 0;
    while (!queue.empty()) {
      const int at = queue.back();
      queue.pop_back();
      ++size;
      if (part.objects[at] < rep) rep = part.objects[at];
      for (const Generator& g : generators) {
        const T image = apply(g, part.objects[at]);
        const auto hit = index.find(image);
        if (hit == index.end())
          throw std::logic_error{"generator image left the object set"};
        if (part.labels[hit->second] == -1) {
          part.labels[hit->second] = label;
          queue.push_back(hit->second);
        }
      }
    }
    part.representatives.push_back(rep);
    part.sizes.push_back(size);
  }

  // Relabel so orbit ids follow the representative order.
  std::vector<int> order(part.representatives.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return part.representatives[a] < part.representatives[b];
  });
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  for (int& l : part.labels) l = rank[l];
  OrbitPartition<T> out;
  out.objects = std::move(part.objects);
  out.labels = std::move(part.labels);
  for (int o : order) {
    out.representatives.push_back(part.representatives[o]);
    out.sizes.push_back(part.sizes[o]);
  }
  return out;
}

// Orbits of the stabiliser on the points of PG(2^m - 1, 2); m <= 4.
OrbitPartition<ProjectivePoint> point_orbits(int m);

// Orbits on the invariant spread of PG(7, 2); they coincide with the fibres
// of the contact-class function.
OrbitPartition<ProjectiveLine> spread_line_orbits(const std::vector<SpreadLine>& spread,
                                                  int m);

// The spread of PG(7, 2) indexed by the real points it covers.
struct SpreadTable {
  std::vector<SpreadLine> lines;
  std::unordered_map<ProjectivePoint, int> line_of_point;
};

SpreadTable build_spread_table(int m);

// The five point classes of PG(7, 2) under the stabiliser: 5 for Segre
// points; otherwise the class r of the unique spread line through the point
// (class-4 lines are the distinguished tangents, whose non-Segre points form
// the fourth orbit).  Agrees with the orbit partition computed by closure.
int classify_point(const ProjectivePoint& p, const PointSet& segre,
                   const SpreadTable& table);

// Presentation order for orbit listings: Segre orbit last, other orbits by
// the spread class of their representative when one exists (odd m), then by
// size and representative.  Returns orbit ids in display order.
std::vector<int> point_orbit_display_order(const OrbitPartition<ProjectivePoint>& orbits,
                                           int m);
std::vector<int> line_orbit_display_order(const OrbitPartition<ProjectiveLine>& orbits,
                                          const std::vector<SpreadLine>& spread);

}  // namespace segre
