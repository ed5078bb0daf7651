#pragma once

#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "segre/projective.hpp"
#include "segre/tensor.hpp"

namespace segre {

using PointSet = std::unordered_set<ProjectivePoint>;

PointSet make_point_set(const std::vector<ProjectivePoint>& pts);

// All points of PG(2^m - 1, q), each exactly once.  Full enumeration is
// supported for m <= 4 over GF(2) and m <= 3 over GF(4).
std::vector<ProjectivePoint> all_points(int m, int q);

// The Segre variety: all points with a decomposable coordinate vector.
// (q + 1)^m points; same limits as all_points.
std::vector<ProjectivePoint> segre_points(int m, int q);

// Points of the invariant hyperbolic quadric Q(x) = 0; contains the Segre
// variety, and coincides with it exactly when m = 2.
std::vector<ProjectivePoint> quadric_points(int m, int q);

// Points of the invariant Hermitian variety [x, x]_H = 0 in PG(2^m - 1, 4);
// full enumeration for m <= 3.
std::vector<ProjectivePoint> hermitian_points(int m);

// Recovers the m factor vectors of a decomposable coordinate vector, or
// nullopt if x is not decomposable.  For a real tensor the factors come out
// with GF(2) entries.
std::optional<std::vector<FactorVec>> decompose(const Tensor& x);

// The invariant basis point F4 U_i (all factors u0 or u1 according to i).
ProjectivePoint invariant_basis_point(int m, unsigned index);

// The 2^m invariant basis points, their parity halves and the spans of the
// halves.  The two spans are skew; for even m both are real, for odd m they
// are complex-conjugate and each lies on the invariant quadric of PG(.., 4).
struct InvariantBasis {
  int m;
  std::vector<ProjectivePoint> points;  // indexed by multi-index
  std::vector<unsigned> even_indices, odd_indices;
  Subspace span_even, span_odd;
};

InvariantBasis invariant_basis(int m);

// The 2^(m-1) real lines U_i v U_{i'}; each carries three real points, and
// those 3 * 2^(m-1) points form a single orbit of the stabiliser group.
std::vector<ProjectiveLine> base_lines(int m);

// Number of nonzero U-basis coordinates of a point.
int u_support(const ProjectivePoint& p);

enum class TangentMode { ClosedForm, Oracle };

// The distinguished tangent of the binary Segre variety at one of its points
// p = a_1 x ... x a_m: among the 2^m - 1 tangent lines through p it is the
// unique one lying in no span of m - 1 of the generators through p.
//
// ClosedForm joins p with sum_k a_1 x ... x d_k x ... x a_m, where d_k is the
// smallest nonzero factor vector different from a_k (the line does not depend
// on the choice).  Oracle searches the tangent lines directly.
ProjectiveLine distinguished_tangent(const ProjectivePoint& p, TangentMode mode);

// One line of the invariant spread of PG(2^m - 1, 2), m odd: the real line
// joining a point of span<B+> with its conjugate.  class_r counts the nonzero
// U-coordinates of the contact point (1 .. 2^(m-1)).
struct SpreadLine {
  ProjectiveLine line;
  ProjectivePoint contact_even;
  int class_r;
};

// The full spread: one line per point of span<B+>.  The real points of its
// lines partition the point set of PG(2^m - 1, 2).  Full enumeration is
// supported for m = 3 (85 lines).
std::vector<SpreadLine> line_spread(int m);

enum class QuadricRelation { Generator, Bisecant };

// A spread line either lies on the quadric of PG(2^m - 1, 4) entirely
// (exactly when its contact point is on the Hermitian variety, i.e. its class
// is even) or meets it in the two conjugate contact points only, in which
// case none of its three real points is on the binary quadric.
QuadricRelation spread_line_vs_quadric(const SpreadLine& l);

// The Hermitian variety induced on span<B+> for m = 3: 45 points and the 27
// lines of the span fully contained in it, with the point-line incidences.
struct IncidenceStructure {
  std::vector<ProjectivePoint> points;
  std::vector<ProjectiveLine> lines;
  std::vector<std::pair<int, int>> incidences;  // (point index, line index)
};

IncidenceStructure hermitian_substructure();

}  // namespace segre
