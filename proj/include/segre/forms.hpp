#pragma once

#include "segre/projective.hpp"
#include "segre/tensor.hpp"

namespace segre {

// The three invariant forms are evaluated on E-basis coordinates; arguments
// carrying U-coordinates are converted first.  With the chosen symplectic
// factor bases every structure constant is 1.

// Alternating bilinear form [x, y] = sum_i x_i * y_{i'}, i' opposite to i.
Gf4 symplectic_form(const Tensor& x, const Tensor& y);

// Quadratic form Q(x) = sum over the half range i in [0, 2^(m-1)) of
// x_i * x_{i'}.  Polarizes to the symplectic form:
// Q(x + y) + Q(x) + Q(y) = [x, y].  Undefined for a single factor.
Gf4 quadratic_form(const Tensor& x);

// Hermitian form [x, y]_H = [conj(x), y] = sum_i x_i^2 * y_{i'};
// semilinear in the first slot, linear in the second, and
// [x, y]_H = conj([y, x]_H), so [x, x]_H always lies in GF(2).
Gf4 hermitian_form(const Tensor& x, const Tensor& y);

// The polar subspace of s under the symplectic form:
// { y : [x, y] = 0 for all x in s }.  Projective dimensions of s and its
// complement add up to 2^m - 2.
Subspace polar_complement(const Subspace& s);

}  // namespace segre
