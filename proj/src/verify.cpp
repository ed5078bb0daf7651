#include "segre/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "segre/forms.hpp"
#include "segre/orbits.hpp"
#include "segre/projective.hpp"
#include "segre/tensor.hpp"
#include "segre/varieties.hpp"

namespace segre {

namespace {

// Fixed seed: every sampled check is reproducible run to run.
constexpr std::uint64_t kSeed = 0x9a3c5e17d4b2f861ULL;

CheckResult ok(std::string name, int m, std::string detail) {
  return CheckResult{std::move(name), m, true, std::move(detail)};
}

CheckResult bad(std::string name, int m, std::string detail) {
  return CheckResult{std::move(name), m, false, std::move(detail)};
}

Tensor random_tensor(int m, std::mt19937_64& rng) {
  Tensor t{m, Basis::E};
  const unsigned n = 1u << m;
  for (unsigned i = 0; i < n; ++i)
    t.set_coord(i, Gf4{static_cast<unsigned>(rng() & 3u)});
  return t;
}

Tensor random_real_tensor(int m, std::mt19937_64& rng) {
  Tensor t{m, Basis::E};
  const unsigned n = 1u << m;
  for (unsigned i = 0; i < n; ++i)
    t.set_coord(i, Gf4{static_cast<unsigned>(rng() & 1u)});
  return t;
}

Tensor real_vector_from_mask(int m, std::uint64_t mask) {
  Tensor t{m, Basis::E};
  const unsigned n = 1u << m;
  for (unsigned i = 0; i < n; ++i)
    t.set_coord(i, Gf4{static_cast<unsigned>((mask >> i) & 1u)});
  return t;
}

Tensor vector_from_digits(int m, std::uint64_t digits) {
  Tensor t{m, Basis::E};
  const unsigned n = 1u << m;
  for (unsigned i = 0; i < n; ++i)
    t.set_coord(i, Gf4{static_cast<unsigned>((digits >> (2 * i)) & 3u)});
  return t;
}

std::string sizes_in_order(const OrbitPartition<ProjectivePoint>& orbits,
                           const std::vector<int>& order) {
  std::ostringstream out;
  for (std::size_t i = 0; i < order.size(); ++i)
    out << (i ? " " : "") << orbits.sizes[static_cast<std::size_t>(order[i])];
  return out.str();
}

std::string sizes_in_order(const OrbitPartition<ProjectiveLine>& orbits,
                           const std::vector<int>& order) {
  std::ostringstream out;
  for (std::size_t i = 0; i < order.size(); ++i)
    out << (i ? " " : "") << orbits.sizes[static_cast<std::size_t>(order[i])];
  return out.str();
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// The 3^m binary Segre points assembled factor by factor; works beyond the
// full-space enumeration limit.
std::vector<ProjectivePoint> binary_segre_by_factors(int m) {
  const std::array<FactorVec, 3> reps{
      FactorVec{Gf4::zero(), Gf4::one()},
      FactorVec{Gf4::one(), Gf4::zero()},
      FactorVec{Gf4::one(), Gf4::one()},
  };
  std::vector<ProjectivePoint> pts;
  std::vector<std::size_t> digit(static_cast<std::size_t>(m), 0);
  while (true) {
    std::vector<FactorVec> factors;
    factors.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) factors.push_back(reps[digit[static_cast<std::size_t>(k)]]);
    pts.emplace_back(decomposable(factors));
    int k = m - 1;
    while (k >= 0 && digit[static_cast<std::size_t>(k)] == 2) {
      digit[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++digit[static_cast<std::size_t>(k)];
  }
  return pts;
}

// ---------------------------------------------------------------------------

CheckResult check_cardinalities(int m) {
  const std::string name = "cardinalities";
  const unsigned n = 1u << m;
  const std::uint64_t k = 1ull << (m - 1);
  std::ostringstream detail;

  const auto real_points = all_points(m, 2);
  const std::uint64_t want_points = (1ull << n) - 1;
  if (real_points.size() != want_points)
    return bad(name, m, "real point count " + std::to_string(real_points.size()) +
                            ", expected " + std::to_string(want_points));

  const auto segre2 = segre_points(m, 2);
  if (segre2.size() != pow_u64(3, m))
    return bad(name, m, "binary Segre count " + std::to_string(segre2.size()) +
                            ", expected " + std::to_string(pow_u64(3, m)));

  const auto quadric2 = quadric_points(m, 2);
  // Hyperbolic count over GF(2): (2^(k-1) + 1)(2^k - 1) with 2k coordinates.
  const std::uint64_t q2 = ((1ull << (k - 1)) + 1) * ((1ull << k) - 1);
  if (quadric2.size() != q2)
    return bad(name, m, "binary quadric count " + std::to_string(quadric2.size()) +
                            ", expected " + std::to_string(q2));

  std::unordered_set<ProjectiveLine> tangents;
  for (const ProjectivePoint& p : segre2)
    tangents.insert(distinguished_tangent(p, TangentMode::ClosedForm));
  if (tangents.size() != segre2.size())
    return bad(name, m, "tangent lines not distinct per point of contact");

  if (base_lines(m).size() != k)
    return bad(name, m, "base line count " + std::to_string(base_lines(m).size()) +
                            ", expected " + std::to_string(k));
  if (invariant_basis(m).points.size() != n)
    return bad(name, m, "invariant basis size mismatch");

  detail << "GF(2): points " << real_points.size() << ", Segre " << segre2.size()
         << ", quadric " << quadric2.size() << ", tangents " << tangents.size()
         << ", base lines " << k;

  if (m <= 3) {
    const auto points4 = all_points(m, 4);
    const std::uint64_t want_p4 = (pow_u64(4, static_cast<int>(n)) - 1) / 3;
    if (points4.size() != want_p4)
      return bad(name, m, "GF(4) point count " + std::to_string(points4.size()) +
                              ", expected " + std::to_string(want_p4));
    const auto segre4 = segre_points(m, 4);
    if (segre4.size() != pow_u64(5, m))
      return bad(name, m, "GF(4) Segre count " + std::to_string(segre4.size()) +
                              ", expected " + std::to_string(pow_u64(5, m)));
    const auto quadric4 = quadric_points(m, 4);
    const std::uint64_t q4 = (pow_u64(4, static_cast<int>(k) - 1) + 1) *
                             (pow_u64(4, static_cast<int>(k)) - 1) / 3;
    if (quadric4.size() != q4)
      return bad(name, m, "GF(4) quadric count " + std::to_string(quadric4.size()) +
                              ", expected " + std::to_string(q4));
    const auto herm = hermitian_points(m);
    const std::uint64_t want_h = ((1ull << n) - 1) * ((1ull << (n - 1)) + 1) / 3;
    if (herm.size() != want_h)
      return bad(name, m, "Hermitian count " + std::to_string(herm.size()) +
                              ", expected " + std::to_string(want_h));
    detail << "; GF(4): points " << points4.size() << ", Segre " << segre4.size()
           << ", quadric " << quadric4.size() << ", Hermitian " << herm.size();
  }

  if (m == 3) {
    const auto spread = line_spread(3);
    if (spread.size() != 85)
      return bad(name, m, "spread size " + std::to_string(spread.size()) + ", expected 85");
    const IncidenceStructure s = hermitian_substructure();
    if (s.points.size() != 45 || s.lines.size() != 27 || s.incidences.size() != 135)
      return bad(name, m, "substructure counts " + std::to_string(s.points.size()) + "/" +
                              std::to_string(s.lines.size()) + "/" +
                              std::to_string(s.incidences.size()) +
                              ", expected 45/27/135");
    detail << "; spread 85; substructure 45/27/135";
  }
  return ok(name, m, detail.str());
}

CheckResult check_polarization(int m) {
  const std::string name = "polarization";
  const unsigned n = 1u << m;
  std::mt19937_64 rng{kSeed};
  std::uint64_t checked = 0;

  auto violates = [&](const Tensor& x, const Tensor& y) {
    const Gf4 lhs = quadratic_form(x + y) + quadratic_form(x) + quadratic_form(y);
    return lhs != symplectic_form(x, y);
  };

  if (m <= 3) {
    const std::uint64_t count = 1ull << n;
    std::vector<Tensor> vecs;
    vecs.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask)
      vecs.push_back(real_vector_from_mask(m, mask));
    for (const Tensor& x : vecs)
      for (const Tensor& y : vecs) {
        if (violates(x, y))
          return bad(name, m, "fails on real pair " + x.to_string() + ", " + y.to_string());
        ++checked;
      }
  } else {
    for (int i = 0; i < 100000; ++i) {
      const Tensor x = random_real_tensor(m, rng);
      const Tensor y = random_real_tensor(m, rng);
      if (violates(x, y))
        return bad(name, m, "fails on real pair " + x.to_string() + ", " + y.to_string());
      ++checked;
    }
  }

  if (m == 2) {
    for (std::uint64_t a = 0; a < 256; ++a)
      for (std::uint64_t b = 0; b < 256; ++b) {
        const Tensor x = vector_from_digits(m, a);
        const Tensor y = vector_from_digits(m, b);
        if (violates(x, y))
          return bad(name, m, "fails on pair " + x.to_string() + ", " + y.to_string());
        ++checked;
      }
  } else {
    for (int i = 0; i < 100000; ++i) {
      const Tensor x = random_tensor(m, rng);
      const Tensor y = random_tensor(m, rng);
      if (violates(x, y))
        return bad(name, m, "fails on pair " + x.to_string() + ", " + y.to_string());
      ++checked;
    }
  }
  return ok(name, m, "identity holds on " + std::to_string(checked) + " vector pairs");
}

CheckResult check_q_on_decomposables(int m) {
  const std::string name = "q-on-decomposables";
  std::uint64_t checked = 0;
  for (const ProjectivePoint& p : segre_points(m, 2)) {
    if (!quadratic_form(p.tensor()).is_zero())
      return bad(name, m, "nonzero value at binary Segre point " + p.tensor().to_string());
    ++checked;
  }
  if (m <= 3) {
    for (const ProjectivePoint& p : segre_points(m, 4)) {
      if (!quadratic_form(p.tensor()).is_zero())
        return bad(name, m, "nonzero value at Segre point " + p.tensor().to_string());
      ++checked;
    }
  }
  // Control: the form is not identically zero.
  Tensor control{m, Basis::E};
  control.set_coord(0, Gf4::one());
  control.set_coord((1u << m) - 1, Gf4::one());
  if (quadratic_form(control).is_zero())
    return bad(name, m, "form vanishes on the control vector " + control.to_string());
  return ok(name, m, "vanishes on " + std::to_string(checked) +
                         " Segre points, not identically zero");
}

CheckResult check_generator_invariance(int m) {
  const std::string name = "generator-invariance";
  const unsigned n = 1u << m;
  std::mt19937_64 rng{kSeed};
  const std::vector<Generator> gens = stabiliser_generators(m);

  // Quadratic form preserved, with the exact same values.
  if (m <= 3) {
    const std::uint64_t count = 1ull << (2 * n);
    for (std::uint64_t digits = 0; digits < count; ++digits) {
      const Tensor x = vector_from_digits(m, digits);
      const Gf4 q = quadratic_form(x);
      for (const Generator& g : gens)
        if (quadratic_form(g.apply(x)) != q)
          return bad(name, m, "quadratic value changes on " + x.to_string());
    }
  } else {
    for (int i = 0; i < 10000; ++i) {
      const Tensor x = random_tensor(m, rng);
      const Gf4 q = quadratic_form(x);
      for (const Generator& g : gens)
        if (quadratic_form(g.apply(x)) != q)
          return bad(name, m, "quadratic value changes on " + x.to_string());
    }
  }

  // Symplectic and Hermitian forms preserved.
  if (m <= 3) {
    const std::uint64_t count = 1ull << n;
    std::vector<Tensor> vecs;
    vecs.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask)
      vecs.push_back(real_vector_from_mask(m, mask));
    for (const Generator& g : gens) {
      std::vector<Tensor> image;
      image.reserve(count);
      for (const Tensor& v : vecs) image.push_back(g.apply(v));
      for (std::size_t a = 0; a < vecs.size(); ++a)
        for (std::size_t b = 0; b < vecs.size(); ++b)
          if (symplectic_form(image[a], image[b]) != symplectic_form(vecs[a], vecs[b]))
            return bad(name, m, "symplectic value changes on a real pair");
    }
  }
  for (int i = 0; i < 10000; ++i) {
    const Tensor x = random_tensor(m, rng);
    const Tensor y = random_tensor(m, rng);
    const Gf4 s = symplectic_form(x, y);
    const Gf4 h = hermitian_form(x, y);
    for (const Generator& g : gens) {
      if (symplectic_form(g.apply(x), g.apply(y)) != s)
        return bad(name, m, "symplectic value changes on a sampled pair");
      if (hermitian_form(g.apply(x), g.apply(y)) != h)
        return bad(name, m, "Hermitian value changes on a sampled pair");
    }
  }

  // The invariant basis is permuted (projectively), and the permutation is
  // the predicted affine action on multi-indices.
  const InvariantBasis basis = invariant_basis(m);
  const PointSet basis_set = make_point_set(basis.points);
  for (const Generator& g : gens)
    for (const ProjectivePoint& p : basis.points)
      if (!basis_set.contains(g.apply(p)))
        return bad(name, m, "a generator moves the invariant basis off itself");
  for (const Generator& g : gens) {
    const std::array<Generator, 1> word{g};
    induced_index_action(word, m);  // self-verifying; throws on disagreement
  }
  induced_index_action(gens, m);
  return ok(name, m, "all " + std::to_string(gens.size()) +
                         " generators preserve the three forms and permute the basis");
}

CheckResult check_hermitian_self_polar(int m) {
  const std::string name = "hermitian-self-polar";
  const unsigned n = 1u << m;
  std::mt19937_64 rng{kSeed};

  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      const Gf4 v = hermitian_form(Tensor::unit(m, Basis::U, i),
                                   Tensor::unit(m, Basis::U, j));
      const Gf4 want = i == j ? Gf4::one() : Gf4::zero();
      if (v != want)
        return bad(name, m, "Gram entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") is not " + std::string(1, want.to_char()));
    }

  for (int t = 0; t < 10000; ++t) {
    const Tensor x = random_tensor(m, rng);
    const Tensor y = random_tensor(m, rng);
    if (hermitian_form(x, y) != hermitian_form(y, x).conj())
      return bad(name, m, "conjugate symmetry fails on a sampled pair");
    // In U-coordinates the form is the standard conjugate dot product.
    const Tensor xu = change_basis(x, Basis::U);
    const Tensor yu = change_basis(y, Basis::U);
    Gf4 dot;
    for (unsigned i = 0; i < n; ++i) dot += xu.coord(i).conj() * yu.coord(i);
    if (hermitian_form(x, y) != dot)
      return bad(name, m, "U-coordinate dot product disagrees on a sampled pair");
    const Gf4 norm = hermitian_form(x, x);
    if (norm != Gf4::zero() && norm != Gf4::one())
      return bad(name, m, "a norm takes a value outside GF(2)");
  }
  return ok(name, m, "identity Gram matrix in the invariant basis; "
                     "conjugate dot product confirmed on 10000 pairs");
}

CheckResult check_invariant_frame(int m) {
  const std::string name = "invariant-frame";
  const unsigned n = 1u << m;
  const InvariantBasis b = invariant_basis(m);

  if (b.span_even.rank() != static_cast<int>(n / 2) ||
      b.span_odd.rank() != static_cast<int>(n / 2))
    return bad(name, m, "half-span ranks are not " + std::to_string(n / 2));
  std::vector<Tensor> all_rows;
  for (const Tensor& r : b.span_even.rows()) all_rows.push_back(r);
  for (const Tensor& r : b.span_odd.rows()) all_rows.push_back(r);
  if (Subspace::span(m, all_rows).rank() != static_cast<int>(n))
    return bad(name, m, "the two half-spans are not skew");

  for (unsigned i = 0; i < n; ++i) {
    const ProjectivePoint& p = b.points[i];
    if (p.is_real()) return bad(name, m, "basis point " + std::to_string(i) + " is real");
    const ProjectivePoint pc{conjugate(p.tensor())};
    if (pc != b.points[opposite_index(i, m)])
      return bad(name, m, "conjugation does not reverse basis index " + std::to_string(i));
  }

  const bool even_m = m % 2 == 0;
  if (even_m) {
    if (conjugate(b.span_even) != b.span_even || conjugate(b.span_odd) != b.span_odd)
      return bad(name, m, "half-spans are not real");
  } else {
    if (conjugate(b.span_even) != b.span_odd)
      return bad(name, m, "half-spans are not conjugate to each other");
  }

  const auto lines = base_lines(m);
  if (lines.size() != n / 2)
    return bad(name, m, "base line count " + std::to_string(lines.size()));
  std::unordered_set<ProjectivePoint> covered;
  for (unsigned r = 0; r < lines.size(); ++r) {
    const ProjectiveLine& l = lines[r];
    if (!l.is_real()) return bad(name, m, "a base line is not real");
    if (even_m) {
      // Opposite indices share parity when m is even, so each base line lies
      // inside the half-span of its endpoints and misses the other entirely.
      const bool home_even = index_parity(r) == 0;
      const Subspace& home = home_even ? b.span_even : b.span_odd;
      const Subspace& away = home_even ? b.span_odd : b.span_even;
      if (line_section(home, l).size() != 5 || !line_section(away, l).empty())
        return bad(name, m, "a base line is not contained in its half-span");
    } else if (line_section(b.span_even, l).size() != 1 ||
               line_section(b.span_odd, l).size() != 1) {
      return bad(name, m, "a base line does not meet each half-span once");
    }
    for (const ProjectivePoint& p : real_points_of_line(l))
      if (!covered.insert(p).second)
        return bad(name, m, "base lines share a real point");
  }
  if (covered.size() != 3 * (n / 2))
    return bad(name, m, "base lines carry " + std::to_string(covered.size()) +
                            " real points, expected " + std::to_string(3 * (n / 2)));

  // Those real points form a single orbit.
  const OrbitPartition<ProjectivePoint> orbits = point_orbits(m);
  std::unordered_map<ProjectivePoint, int> label_of;
  for (std::size_t i = 0; i < orbits.objects.size(); ++i)
    label_of.emplace(orbits.objects[i], orbits.labels[i]);
  int label = -1;
  for (const ProjectivePoint& p : covered) {
    const int l = label_of.at(p);
    if (label == -1) label = l;
    if (l != label)
      return bad(name, m, "base-line real points split across orbits");
  }
  if (orbits.sizes[static_cast<std::size_t>(label)] != covered.size())
    return bad(name, m, "the base-line point orbit has extra members");

  // Every distinguished tangent meets each half-span in exactly one point,
  // and the two contact points are conjugate (odd m) or real (even m).
  for (const ProjectivePoint& p : segre_points(m, 2)) {
    const ProjectiveLine t = distinguished_tangent(p, TangentMode::ClosedForm);
    const auto se = line_section(b.span_even, t);
    const auto so = line_section(b.span_odd, t);
    if (se.size() != 1 || so.size() != 1)
      return bad(name, m, "a tangent does not meet each half-span once");
    if (even_m) {
      if (!se[0].is_real() || !so[0].is_real())
        return bad(name, m, "a tangent contact with a real half-span is not real");
    } else if (ProjectivePoint{conjugate(se[0].tensor())} != so[0]) {
      return bad(name, m, "tangent contacts are not conjugate");
    }
  }
  return ok(name, m, std::string("skew ") + (even_m ? "real" : "conjugate") +
                         " half-spans; base lines and tangents meet both; " +
                         std::to_string(covered.size()) +
                         " base-line points in one orbit");
}

CheckResult check_tangent_modes(int m) {
  const std::string name = "tangent-modes";
  std::uint64_t checked = 0;
  for (const ProjectivePoint& p : segre_points(m, 2)) {
    if (distinguished_tangent(p, TangentMode::ClosedForm) !=
        distinguished_tangent(p, TangentMode::Oracle))
      return bad(name, m, "construction and search disagree at " + p.tensor().to_string());
    ++checked;
  }
  return ok(name, m, "closed form matches the search at all " + std::to_string(checked) +
                         " points of contact");
}

CheckResult check_polarity(int m) {
  const std::string name = "polarity";
  const unsigned n = 1u << m;
  const InvariantBasis b = invariant_basis(m);
  const bool even_m = m % 2 == 0;

  const Subspace pe = polar_complement(b.span_even);
  const Subspace po = polar_complement(b.span_odd);
  if (even_m) {
    if (pe != b.span_odd || po != b.span_even)
      return bad(name, m, "the polarity does not interchange the half-spans");
  } else {
    if (pe != b.span_even || po != b.span_odd)
      return bad(name, m, "the half-spans are not self-polar");
  }
  if (polar_complement(pe) != b.span_even)
    return bad(name, m, "the polarity is not involutive on the even half-span");

  for (unsigned i = 0; i < n / 2; ++i) {
    // Base line for the i-th opposite pair.
    const unsigned j = opposite_index(i, m);
    const std::array<Tensor, 2> gens{b.points[i].tensor(), b.points[j].tensor()};
    const Subspace line_span = Subspace::span(m, gens);
    const Subspace polar = polar_complement(line_span);
    if (polar.rank() != static_cast<int>(n) - 2)
      return bad(name, m, "a base line's polar has the wrong rank");
    std::vector<Tensor> rest;
    for (unsigned t = 0; t < n; ++t)
      if (t != i && t != j) rest.push_back(b.points[t].tensor());
    if (polar != Subspace::span(m, rest))
      return bad(name, m, "a base line's polar is not the span of the other basis points");
    if (polar_complement(polar) != line_span)
      return bad(name, m, "the polarity is not involutive on a base line");
  }
  return ok(name, m, even_m ? "half-spans interchanged; base lines polar to the rest"
                            : "half-spans self-polar; base lines polar to the rest");
}

CheckResult check_tangent_congruence(int m) {
  const std::string name = "tangent-congruence";
  const InvariantBasis b = invariant_basis(m);
  const auto plus = points_of_subspace(b.span_even, 2);
  const auto minus = points_of_subspace(b.span_odd, 2);
  if (plus.size() != 3 || minus.size() != 3)
    return bad(name, m, "half-spans do not carry 3 real points each");
  std::unordered_set<ProjectiveLine> joins;
  for (const ProjectivePoint& p : plus)
    for (const ProjectivePoint& q : minus)
      joins.insert(ProjectiveLine{p.tensor(), q.tensor()});
  std::unordered_set<ProjectiveLine> tangents;
  for (const ProjectivePoint& p : segre_points(m, 2))
    tangents.insert(distinguished_tangent(p, TangentMode::ClosedForm));
  if (joins != tangents)
    return bad(name, m, "tangents differ from the joins of the two real axes");
  return ok(name, m, "the 9 tangents are exactly the joins of the two real axes");
}

CheckResult check_orbit_census_points(int m) {
  const std::string name = "orbit-census-points";
  const OrbitPartition<ProjectivePoint> orbits = point_orbits(m);
  const std::vector<int> order = point_orbit_display_order(orbits, m);
  const std::string got = sizes_in_order(orbits, order);
  const std::string want = m == 2 ? "6 9" : "12 54 108 54 27";
  if (got != want)
    return bad(name, m, "orbit sizes " + got + ", expected " + want);

  const PointSet segre = make_point_set(segre_points(m, 2));
  const int last = order.back();
  std::uint64_t segre_members = 0;
  for (std::size_t i = 0; i < orbits.objects.size(); ++i)
    if (orbits.labels[i] == last && segre.contains(orbits.objects[i])) ++segre_members;
  if (segre_members != segre.size() ||
      orbits.sizes[static_cast<std::size_t>(last)] != segre.size())
    return bad(name, m, "the final orbit is not the Segre variety");

  if (m == 3) {
    // Orbits 2, 4 and 5 together are exactly the binary quadric.
    const PointSet quadric = make_point_set(quadric_points(3, 2));
    std::vector<bool> on_quadric_orbit(orbits.sizes.size(), false);
    on_quadric_orbit[static_cast<std::size_t>(order[1])] = true;
    on_quadric_orbit[static_cast<std::size_t>(order[3])] = true;
    on_quadric_orbit[static_cast<std::size_t>(order[4])] = true;
    for (std::size_t i = 0; i < orbits.objects.size(); ++i) {
      const bool expect = on_quadric_orbit[static_cast<std::size_t>(orbits.labels[i])];
      if (quadric.contains(orbits.objects[i]) != expect)
        return bad(name, m, "quadric membership does not match orbits 2, 4, 5");
    }
  }
  return ok(name, m, "sizes " + got + "; Segre orbit last" +
                         (m == 3 ? "; orbits 2+4+5 = quadric (135 points)" : ""));
}

CheckResult check_point_orbit_bfs(int m) {
  const std::string name = "point-orbit-bfs";
  const OrbitPartition<ProjectivePoint> orbits = point_orbits(m);
  std::uint64_t total = 0;
  for (std::size_t s : orbits.sizes) total += s;
  const std::uint64_t n_points = (1ull << (1u << m)) - 1;
  if (total != n_points)
    return bad(name, m, "orbit sizes sum to " + std::to_string(total));

  const PointSet segre = make_point_set(segre_points(m, 2));
  const ProjectivePoint corner{Tensor::unit(m, Basis::E, (1u << m) - 1)};
  std::unordered_map<ProjectivePoint, int> label_of;
  for (std::size_t i = 0; i < orbits.objects.size(); ++i)
    label_of.emplace(orbits.objects[i], orbits.labels[i]);
  const int segre_label = label_of.at(corner);
  if (orbits.sizes[static_cast<std::size_t>(segre_label)] != segre.size())
    return bad(name, m, "the orbit of the corner point has size " +
                            std::to_string(orbits.sizes[static_cast<std::size_t>(segre_label)]) +
                            ", expected " + std::to_string(segre.size()));
  for (std::size_t i = 0; i < orbits.objects.size(); ++i) {
    const bool in_orbit = orbits.labels[i] == segre_label;
    if (in_orbit != segre.contains(orbits.objects[i]))
      return bad(name, m, "the corner orbit is not the Segre variety");
  }
  return ok(name, m, std::to_string(orbits.orbit_count()) + " orbits on " +
                         std::to_string(total) + " points; the corner orbit is the " +
                         std::to_string(segre.size()) + "-point Segre variety");
}

CheckResult check_spread_partition(int m) {
  const std::string name = "spread-partition";
  const SpreadTable table = build_spread_table(m);
  if (table.lines.size() != 85)
    return bad(name, m, "spread size " + std::to_string(table.lines.size()));
  if (table.line_of_point.size() != 255)
    return bad(name, m, "spread covers " + std::to_string(table.line_of_point.size()) +
                            " points, expected 255");
  std::map<int, int> census;
  for (const SpreadLine& s : table.lines) ++census[s.class_r];
  const std::map<int, int> want{{1, 4}, {2, 18}, {3, 36}, {4, 27}};
  if (census != want) {
    std::ostringstream got;
    for (const auto& [r, c] : census) got << " " << r << ":" << c;
    return bad(name, m, "class census" + got.str() + ", expected 1:4 2:18 3:36 4:27");
  }

  const InvariantBasis b = invariant_basis(m);
  std::unordered_set<ProjectiveLine> class1, class4;
  for (const SpreadLine& s : table.lines) {
    if (!s.line.is_real()) return bad(name, m, "a spread line is not real");
    if (!b.span_even.contains(s.contact_even))
      return bad(name, m, "a contact point is outside the even half-span");
    if (ProjectiveLine(s.contact_even.tensor(), conjugate(s.contact_even.tensor())) != s.line)
      return bad(name, m, "a spread line is not the join of conjugate contacts");
    if (s.class_r == 1) class1.insert(s.line);
    if (s.class_r == 4) class4.insert(s.line);
  }
  std::unordered_set<ProjectiveLine> base;
  for (const ProjectiveLine& l : base_lines(m)) base.insert(l);
  if (class1 != base)
    return bad(name, m, "class-1 lines are not the base lines");
  std::unordered_set<ProjectiveLine> tangents;
  for (const ProjectivePoint& p : segre_points(m, 2))
    tangents.insert(distinguished_tangent(p, TangentMode::ClosedForm));
  if (class4 != tangents)
    return bad(name, m, "class-4 lines are not the distinguished tangents");
  return ok(name, m, "85 disjoint real lines cover all 255 points; census 4/18/36/27; "
                     "class 1 = base lines, class 4 = tangents");
}

CheckResult check_dichotomy(int m) {
  const std::string name = "dichotomy";
  const auto spread = line_spread(m);
  int generators = 0, bisecants = 0;
  for (const SpreadLine& s : spread) {
    const auto pts = s.line.points();
    int on_quadric = 0;
    for (const ProjectivePoint& p : pts)
      if (quadratic_form(p.tensor()).is_zero()) ++on_quadric;
    const QuadricRelation rel = spread_line_vs_quadric(s);
    const bool even_class = s.class_r % 2 == 0;
    if (even_class) {
      if (rel != QuadricRelation::Generator || on_quadric != 5)
        return bad(name, m, "an even-class line does not lie on the quadric");
      ++generators;
    } else {
      if (rel != QuadricRelation::Bisecant || on_quadric != 2)
        return bad(name, m, "an odd-class line does not meet the quadric in 2 points");
      const ProjectivePoint c2{conjugate(s.contact_even.tensor())};
      for (const ProjectivePoint& p : pts) {
        const bool is_contact = p == s.contact_even || p == c2;
        if (quadratic_form(p.tensor()).is_zero() != is_contact)
          return bad(name, m, "the quadric points of an odd-class line are not the contacts");
        if (p.is_real() && quadratic_form(p.tensor()).is_zero())
          return bad(name, m, "a real point of an odd-class line lies on the quadric");
      }
      ++bisecants;
    }
  }
  return ok(name, m, std::to_string(generators) + " even-class lines on the quadric, " +
                         std::to_string(bisecants) +
                         " odd-class lines meeting it in their contact pair only");
}

CheckResult check_spread_orbit_census(int m) {
  const std::string name = "spread-orbit-census";
  const auto spread = line_spread(m);
  const OrbitPartition<ProjectiveLine> orbits = spread_line_orbits(spread, m);
  const std::vector<int> order = line_orbit_display_order(orbits, spread);
  const std::string got = sizes_in_order(orbits, order);
  if (got != "4 18 36 27")
    return bad(name, m, "orbit sizes " + got + ", expected 4 18 36 27");

  std::unordered_map<ProjectiveLine, int> class_of;
  for (const SpreadLine& s : spread) class_of.emplace(s.line, s.class_r);
  // Each orbit must be one full class fibre.
  std::map<int, std::set<int>> classes_by_label;
  for (std::size_t i = 0; i < orbits.objects.size(); ++i)
    classes_by_label[orbits.labels[i]].insert(class_of.at(orbits.objects[i]));
  std::set<int> seen;
  for (const auto& [label, classes] : classes_by_label) {
    if (classes.size() != 1)
      return bad(name, m, "an orbit mixes contact classes");
    seen.insert(*classes.begin());
  }
  if (seen != std::set<int>{1, 2, 3, 4})
    return bad(name, m, "orbits do not realize the four contact classes");
  return ok(name, m, "4 orbits of sizes 4 18 36 27, one per contact class");
}

CheckResult check_classify_vs_bfs(int m) {
  const std::string name = "classify-vs-bfs";
  const OrbitPartition<ProjectivePoint> orbits = point_orbits(m);
  const PointSet segre = make_point_set(segre_points(m, 2));
  const SpreadTable table = build_spread_table(m);
  std::map<int, std::set<std::string>> by_label, by_class;
  for (std::size_t i = 0; i < orbits.objects.size(); ++i) {
    const ProjectivePoint& p = orbits.objects[i];
    by_label[orbits.labels[i]].insert(p.tensor().to_string());
    by_class[classify_point(p, segre, table)].insert(p.tensor().to_string());
  }
  if (by_label.size() != by_class.size())
    return bad(name, m, "orbit count differs from class count");
  std::set<std::set<std::string>> fibres_a, fibres_b;
  for (const auto& [k, v] : by_label) fibres_a.insert(v);
  for (const auto& [k, v] : by_class) fibres_b.insert(v);
  if (fibres_a != fibres_b)
    return bad(name, m, "orbit fibres differ from classification fibres");
  std::ostringstream detail;
  detail << "classes";
  for (const auto& [k, v] : by_class) detail << " " << k << ":" << v.size();
  return ok(name, m, detail.str() + " match the computed orbits");
}

CheckResult check_hermitian_substructure(int m) {
  const std::string name = "hermitian-substructure";
  const IncidenceStructure s = hermitian_substructure();
  if (s.points.size() != 45 || s.lines.size() != 27 || s.incidences.size() != 135)
    return bad(name, m, "counts " + std::to_string(s.points.size()) + "/" +
                            std::to_string(s.lines.size()) + "/" +
                            std::to_string(s.incidences.size()) + ", expected 45/27/135");

  std::vector<int> per_point(s.points.size(), 0), per_line(s.lines.size(), 0);
  for (const auto& [pi, li] : s.incidences) {
    ++per_point[static_cast<std::size_t>(pi)];
    ++per_line[static_cast<std::size_t>(li)];
  }
  for (int c : per_point)
    if (c != 3) return bad(name, m, "a point is not on exactly 3 lines");
  for (int c : per_line)
    if (c != 5) return bad(name, m, "a line does not carry exactly 5 points");

  const InvariantBasis b = invariant_basis(m);
  int support2 = 0, support4 = 0;
  for (const ProjectivePoint& p : s.points) {
    if (!b.span_even.contains(p))
      return bad(name, m, "a substructure point is outside the even half-span");
    if (!hermitian_form(p.tensor(), p.tensor()).is_zero())
      return bad(name, m, "a substructure point is off the Hermitian variety");
    const int u = u_support(p);
    if (u == 2)
      ++support2;
    else if (u == 4)
      ++support4;
    else
      return bad(name, m, "a substructure point has support " + std::to_string(u));
  }
  if (support2 != 18 || support4 != 27)
    return bad(name, m, "support split " + std::to_string(support2) + "+" +
                            std::to_string(support4) + ", expected 18+27");

  // The rows of the Segre variety (collinear triples of its real points)
  // project to the 27 fully contained lines via the points of contact.
  const auto segre = segre_points(m, 2);
  const PointSet segre_set = make_point_set(segre);
  const SpreadTable table = build_spread_table(m);
  auto contact = [&](const ProjectivePoint& p) {
    return table.lines[static_cast<std::size_t>(table.line_of_point.at(p))].contact_even;
  };
  std::set<std::array<ProjectivePoint, 3>> rows_seen;
  std::unordered_set<ProjectiveLine> images;
  std::unordered_set<ProjectiveLine> line_set;
  for (const ProjectiveLine& l : s.lines) line_set.insert(l);
  for (std::size_t a = 0; a < segre.size(); ++a)
    for (std::size_t c = a + 1; c < segre.size(); ++c) {
      const ProjectivePoint third{segre[a].tensor() + segre[c].tensor()};
      if (!segre_set.contains(third)) continue;
      std::array<ProjectivePoint, 3> row{segre[a], segre[c], third};
      std::sort(row.begin(), row.end());
      if (!rows_seen.insert(row).second) continue;
      const ProjectiveLine image{contact(row[0]).tensor(), contact(row[1]).tensor()};
      if (!image.contains(contact(row[2])))
        return bad(name, m, "the contacts of a Segre row are not collinear");
      if (!line_set.contains(image))
        return bad(name, m, "a Segre row projects outside the 27 lines");
      images.insert(image);
    }
  if (rows_seen.size() != 27 || images.size() != 27)
    return bad(name, m, "Segre rows project to " + std::to_string(images.size()) +
                            " of the 27 lines");
  return ok(name, m, "45 points (18+27 by support), 27 lines, 135 flags, 3 per point, "
                     "5 per line; the 27 Segre rows map onto the 27 lines");
}

CheckResult check_segre_path_metric(int m) {
  const std::string name = "segre-path-metric";
  const auto segre = segre_points(m, 2);
  const PointSet segre4 = make_point_set(segre_points(m, 4));

  auto factor_list = [&](const ProjectivePoint& p) {
    const auto f = decompose(p.tensor());
    if (!f) throw std::logic_error{"a Segre point failed to factor"};
    return *f;
  };
  std::vector<std::vector<FactorVec>> factors;
  factors.reserve(segre.size());
  for (const ProjectivePoint& p : segre) factors.push_back(factor_list(p));

  const std::size_t v = segre.size();
  std::vector<std::vector<int>> adj(v);
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t c = a + 1; c < v; ++c) {
      const ProjectiveLine l{segre[a].tensor(), segre[c].tensor()};
      bool inside = true;
      for (const ProjectivePoint& p : l.points())
        if (!segre4.contains(p)) {
          inside = false;
          break;
        }
      if (inside) {
        adj[a].push_back(static_cast<int>(c));
        adj[c].push_back(static_cast<int>(a));
      }
    }

  for (std::size_t start = 0; start < v; ++start) {
    std::vector<int> dist(v, -1);
    dist[start] = 0;
    std::vector<std::size_t> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t at = queue[head];
      for (int next : adj[at])
        if (dist[static_cast<std::size_t>(next)] == -1) {
          dist[static_cast<std::size_t>(next)] = dist[at] + 1;
          queue.push_back(static_cast<std::size_t>(next));
        }
    }
    for (std::size_t other = 0; other < v; ++other) {
      int hamming = 0;
      for (int k = 0; k < m; ++k)
        if (!(factors[start][static_cast<std::size_t>(k)] ==
              factors[other][static_cast<std::size_t>(k)]))
          ++hamming;
      if (dist[other] != hamming)
        return bad(name, m, "graph distance " + std::to_string(dist[other]) +
                                " differs from factor distance " + std::to_string(hamming));
    }
  }
  return ok(name, m, "collinearity-graph distance equals the factor Hamming distance "
                     "on all point pairs");
}

CheckResult check_hyperdeterminant_guard(int m) {
  const std::string name = "hyperdeterminant-guard";
  const unsigned n = 1u << m;
  const std::uint64_t count = 1ull << (2 * n);
  for (std::uint64_t digits = 0; digits < count; ++digits) {
    const Tensor x = vector_from_digits(m, digits);
    const Gf4 byhand = x.coord(0) * x.coord(7) + x.coord(1) * x.coord(6) +
                       x.coord(2) * x.coord(5) + x.coord(3) * x.coord(4);
    if (quadratic_form(x) != byhand)
      return bad(name, m, "expansion disagrees at " + x.to_string());
  }
  return ok(name, m, "the 4-term pairing expansion matches on all 65536 vectors");
}

CheckResult check_tangent_spot(int m) {
  const std::string name = "tangent-spot";
  const unsigned n = 1u << m;
  const auto segre = binary_segre_by_factors(m);
  if (segre.size() != pow_u64(3, m))
    return bad(name, m, "constructed " + std::to_string(segre.size()) +
                            " Segre points, expected " + std::to_string(pow_u64(3, m)));
  const PointSet distinct = make_point_set(segre);
  if (distinct.size() != segre.size())
    return bad(name, m, "constructed Segre points are not distinct");

  const InvariantBasis b = invariant_basis(m);
  for (std::size_t i = 0; i < segre.size(); ++i) {
    const ProjectiveLine t = distinguished_tangent(segre[i], TangentMode::ClosedForm);
    const auto se = line_section(b.span_even, t);
    const auto so = line_section(b.span_odd, t);
    if (se.size() != 1 || so.size() != 1)
      return bad(name, m, "a tangent does not meet each half-span once");
    if (u_support(se[0]) != static_cast<int>(n / 2))
      return bad(name, m, "a contact has support " + std::to_string(u_support(se[0])) +
                              ", expected " + std::to_string(n / 2));
    if (ProjectivePoint{conjugate(se[0].tensor())} != so[0])
      return bad(name, m, "the two contacts of a tangent are not conjugate");
    if (!t.contains(so[0]))
      return bad(name, m, "a tangent does not pass through the conjugate contact");
    if (i % 40 == 0 && distinguished_tangent(segre[i], TangentMode::Oracle) != t)
      return bad(name, m, "construction and search disagree at a sampled point");
  }

  // At the all-ones corner the contact is the sum of every even-parity basis
  // point.
  const ProjectivePoint corner{Tensor::unit(m, Basis::E, n - 1)};
  const ProjectiveLine t = distinguished_tangent(corner, TangentMode::ClosedForm);
  Tensor even_sum{m, Basis::U};
  for (unsigned i = 0; i < n; ++i)
    if (index_parity(i) == 0) even_sum.set_coord(i, Gf4::one());
  const auto se = line_section(b.span_even, t);
  if (se.size() != 1 || se[0] != ProjectivePoint{even_sum})
    return bad(name, m, "the corner contact is not the sum of the even basis half");
  return ok(name, m, std::to_string(segre.size()) +
                         " Segre points built factor-wise; contacts have full even "
                         "support and conjugate partners");
}

struct CheckEntry {
  CheckInfo info;
  CheckResult (*fn)(int);
};

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries{
      {{"cardinalities",
        "point, Segre, quadric, Hermitian, tangent, base-line, spread and "
        "substructure counts",
        {2, 3, 4}},
       check_cardinalities},
      {{"polarization",
        "the quadratic form polarizes to the symplectic form",
        {2, 3, 4}},
       check_polarization},
      {{"q-on-decomposables",
        "the quadratic form vanishes on every Segre point",
        {2, 3, 4}},
       check_q_on_decomposables},
      {{"generator-invariance",
        "the stabiliser generators preserve all three forms and permute the "
        "invariant basis by the predicted index action",
        {2, 3, 4}},
       check_generator_invariance},
      {{"hermitian-self-polar",
        "the invariant basis is an orthonormal frame of the Hermitian form",
        {1, 2, 3, 4}},
       check_hermitian_self_polar},
      {{"invariant-frame",
        "skew conjugate-or-real half-spans, base lines and tangents meeting "
        "both, base-line points in a single orbit",
        {2, 3, 4}},
       check_invariant_frame},
      {{"tangent-modes",
        "the closed-form tangent equals the search result at every point of "
        "contact",
        {2, 3, 4}},
       check_tangent_modes},
      {{"polarity",
        "behaviour of the half-spans and base lines under the symplectic "
        "polarity",
        {2, 3, 4}},
       check_polarity},
      {{"tangent-congruence",
        "the 9 tangents of the two-factor variety are the joins of the two "
        "real axes",
        {2}},
       check_tangent_congruence},
      {{"orbit-census-points",
        "stabiliser orbit sizes on the points of the ambient space",
        {2, 3}},
       check_orbit_census_points},
      {{"point-orbit-bfs",
        "closure over 65535 points: the corner orbit is the 81-point Segre "
        "variety",
        {4}},
       check_point_orbit_bfs},
      {{"spread-partition",
        "the 85 spread lines are disjoint, cover every point, and realize the "
        "census 4/18/36/27",
        {3}},
       check_spread_partition},
      {{"dichotomy",
        "even-class spread lines lie on the quadric, odd-class lines meet it "
        "in their contact pair only",
        {3}},
       check_dichotomy},
      {{"spread-orbit-census",
        "spread-line orbits have sizes 4/18/36/27 and are the contact-class "
        "fibres",
        {3}},
       check_spread_orbit_census},
      {{"classify-vs-bfs",
        "the direct point classification induces the same partition as orbit "
        "closure",
        {3}},
       check_classify_vs_bfs},
      {{"hermitian-substructure",
        "45 points and 27 lines with 135 flags; Segre rows project onto the "
        "lines",
        {3}},
       check_hermitian_substructure},
      {{"segre-path-metric",
        "distance in the Segre collinearity graph equals the factor Hamming "
        "distance",
        {3}},
       check_segre_path_metric},
      {{"hyperdeterminant-guard",
        "an independently written 4-term expansion of the quadratic form "
        "matches on every vector",
        {3}},
       check_hyperdeterminant_guard},
      {{"tangent-spot",
        "five-factor spot checks: 243 Segre points and their tangent contacts",
        {5}},
       check_tangent_spot},
  };
  return entries;
}

const CheckEntry* find_check(const std::string& name) {
  for (const CheckEntry& e : registry())
    if (e.info.name == name) return &e;
  return nullptr;
}

}  // namespace

bool VerificationReport::all_passed() const {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return !results.empty();
}

const std::vector<CheckInfo>& available_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const CheckEntry& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

bool check_applicable(const std::string& name, int m) {
  const CheckEntry* e = find_check(name);
  if (e == nullptr) return false;
  return std::find(e->info.applicable_m.begin(), e->info.applicable_m.end(), m) !=
         e->info.applicable_m.end();
}

CheckResult run_check(const std::string& name, int m) {
  const CheckEntry* e = find_check(name);
  if (e == nullptr) throw std::invalid_argument{"unknown check: " + name};
  if (!check_applicable(name, m))
    throw std::invalid_argument{"check " + name + " does not apply to m = " +
                                std::to_string(m)};
  return e->fn(m);
}

VerificationReport run_all_checks(int m) {
  VerificationReport report;
  for (const CheckEntry& e : registry())
    if (check_applicable(e.info.name, m)) report.results.push_back(e.fn(m));
  return report;
}

}  // namespace segre
