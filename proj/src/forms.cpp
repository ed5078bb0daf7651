#include "segre/forms.hpp"

#include <stdexcept>
#include <vector>

namespace segre {

Gf4 symplectic_form(const Tensor& x, const Tensor& y) {
  if (x.factors() != y.factors())
    throw std::invalid_argument{"symplectic_form: factor count mismatch"};
  const Tensor a = change_basis(x, Basis::E);
  const Tensor b = change_basis(y, Basis::E);
  const unsigned n = a.size();
  Gf4 acc = Gf4::zero();
  for (unsigned i = 0; i < n; ++i) acc += a.coord(i) * b.coord((n - 1) ^ i);
  return acc;
}

Gf4 quadratic_form(const Tensor& x) {
  if (x.factors() < 2)
    throw std::domain_error{"quadratic_form: undefined for a single factor"};
  const Tensor a = change_basis(x, Basis::E);
  const unsigned n = a.size();
  Gf4 acc = Gf4::zero();
  for (unsigned i = 0; i < n / 2; ++i) acc += a.coord(i) * a.coord((n - 1) ^ i);
  return acc;
}

Gf4 hermitian_form(const Tensor& x, const Tensor& y) {
  return symplectic_form(conjugate(change_basis(x, Basis::E)), y);
}

Subspace polar_complement(const Subspace& s) {
  const int m = s.factors();
  const unsigned n = 1u << m;
  // [x, y] = sum_j x_{j'} y_j, so each basis row contributes the linear
  // constraint with coefficient vector given by its opposite-reversed
  // coordinates.  Row-reduce the constraints and read the null space off the
  // free columns.
  std::vector<Tensor> constraints;
  constraints.reserve(s.rows().size());
  for (const Tensor& r : s.rows()) {
    Tensor rev(m, Basis::E);
    for (unsigned j = 0; j < n; ++j) rev.set_coord(j, r.coord((n - 1) ^ j));
    constraints.push_back(rev);
  }
  const Subspace c = Subspace::span(m, constraints);

  std::vector<unsigned> pivots;
  pivots.reserve(c.rows().size());
  for (const Tensor& row : c.rows()) pivots.push_back(*row.leading_index());

  std::vector<Tensor> kernel;
  for (unsigned f = 0; f < n; ++f) {
    bool is_pivot = false;
    for (unsigned p : pivots) is_pivot |= (p == f);
    if (is_pivot) continue;
    Tensor y(m, Basis::E);
    y.set_coord(f, Gf4::one());
    for (std::size_t r = 0; r < pivots.size(); ++r)
      y.set_coord(pivots[r], c.rows()[r].coord(f));  // char 2: -a = a
    kernel.push_back(y);
  }
  return Subspace::span(m, kernel);
}

}  // namespace segre
