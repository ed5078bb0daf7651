#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "segre/tensor.hpp"

namespace segre {

// A point of PG(2^m - 1, 4), stored as the unique E-basis coordinate vector
// whose leading nonzero coordinate is 1.  Points with GF(2) coordinates are
// exactly the points of the subgeometry PG(2^m - 1, 2).
class ProjectivePoint {
 public:
  explicit ProjectivePoint(const Tensor& t);

  [[nodiscard]] const Tensor& tensor() const { return t_; }
  [[nodiscard]] int factors() const { return t_.factors(); }
  [[nodiscard]] bool is_real() const { return t_.is_real(); }

  friend bool operator==(const ProjectivePoint& p, const ProjectivePoint& q) {
    return p.t_ == q.t_;
  }
  friend bool operator!=(const ProjectivePoint& p, const ProjectivePoint& q) {
    return !(p == q);
  }
  friend bool operator<(const ProjectivePoint& p, const ProjectivePoint& q) {
    return p.t_ < q.t_;
  }

  [[nodiscard]] std::size_t hash() const { return t_.hash(); }

 private:
  Tensor t_;
};

// A line of PG(2^m - 1, 4) in canonical form: the two lexicographically
// smallest of its five points.  Lines built from any two of their points
// compare equal.
class ProjectiveLine {
 public:
  ProjectiveLine(const Tensor& a, const Tensor& b);

  [[nodiscard]] int factors() const { return p1_.factors(); }
  [[nodiscard]] const ProjectivePoint& first() const { return p1_; }
  [[nodiscard]] const ProjectivePoint& second() const { return p2_; }
  // All five points, in increasing order.
  [[nodiscard]] std::array<ProjectivePoint, 5> points() const;
  [[nodiscard]] bool contains(const ProjectivePoint& p) const;
  // Fixed as a set by conjugation.
  [[nodiscard]] bool is_real() const;

  friend bool operator==(const ProjectiveLine& k, const ProjectiveLine& l) {
    return k.p1_ == l.p1_ && k.p2_ == l.p2_;
  }
  friend bool operator!=(const ProjectiveLine& k, const ProjectiveLine& l) {
    return !(k == l);
  }
  friend bool operator<(const ProjectiveLine& k, const ProjectiveLine& l) {
    if (k.p1_ != l.p1_) return k.p1_ < l.p1_;
    return k.p2_ < l.p2_;
  }

  [[nodiscard]] std::size_t hash() const;

 private:
  ProjectivePoint p1_, p2_;
};

ProjectiveLine conjugate(const ProjectiveLine& l);

// The GF(2)-rational points of a real line: exactly three of its five points.
// Throws if the line is not real.
std::vector<ProjectivePoint> real_points_of_line(const ProjectiveLine& l);

// A linear subspace, kept as a reduced-echelon basis of E-coordinate vectors
// (rows sorted by pivot, pivot coefficients 1, pivot columns cleared
// elsewhere).  The reduced basis is a canonical form, so equal spans compare
// equal.  A subspace spanned by real vectors has a real reduced basis.
class Subspace {
 public:
  static Subspace span(int m, std::span<const Tensor> generators);

  [[nodiscard]] int factors() const { return m_; }
  [[nodiscard]] int rank() const { return static_cast<int>(rows_.size()); }
  [[nodiscard]] int dim() const { return rank() - 1; }  // projective dimension
  [[nodiscard]] const std::vector<Tensor>& rows() const { return rows_; }

  // Residue of x after eliminating against the basis; zero iff x lies in the span.
  [[nodiscard]] Tensor reduce(const Tensor& x) const;
  [[nodiscard]] bool contains(const Tensor& x) const { return reduce(x).is_zero(); }
  [[nodiscard]] bool contains(const ProjectivePoint& p) const {
    return contains(p.tensor());
  }

  friend bool operator==(const Subspace& s, const Subspace& t) {
    return s.m_ == t.m_ && s.rows_ == t.rows_;
  }
  friend bool operator!=(const Subspace& s, const Subspace& t) { return !(s == t); }

 private:
  explicit Subspace(int m) : m_(m) {}
  void insert(const Tensor& x);

  int m_;
  std::vector<Tensor> rows_;
  std::vector<unsigned> pivots_;
};

Subspace conjugate(const Subspace& s);

// All points of the subspace over the chosen field (q = 2 requires a real
// reduced basis).  Combinations of echelon rows with leading coefficient 1
// are already normalized, so the enumeration is duplicate-free.
std::vector<ProjectivePoint> points_of_subspace(const Subspace& s, int q);

// The points of l that lie in s: empty, a single point, or all five.
std::vector<ProjectivePoint> line_section(const Subspace& s, const ProjectiveLine& l);

}  // namespace segre

template <>
struct std::hash<segre::ProjectivePoint> {
  std::size_t operator()(const segre::ProjectivePoint& p) const noexcept {
    return p.hash();
  }
};

template <>
struct std::hash<segre::ProjectiveLine> {
  std::size_t operator()(const segre::ProjectiveLine& l) const noexcept {
    return l.hash();
  }
};
