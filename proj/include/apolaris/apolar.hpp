#pragma once

#include "apolaris/poly.hpp"

namespace apolaris {

/// Apolar inner product: sum over monomials of alpha! * c_alpha * conj(d_alpha).
/// Distinct monomials are orthogonal and <z^a, z^a> = a!.
GaussianRational apolar_inner(const Poly& p, const Poly& q);

/// The dual definition: conj-coefficient Q applied to P as a differential
/// operator, evaluated at 0. Agrees with apolar_inner exactly; kept as an
/// independent route for cross-checking.
GaussianRational apolar_inner_via_diff(const Poly& p, const Poly& q);

/// <P, P> as an exact non-negative rational. Zero iff P = 0.
Rational apolar_norm_sq(const Poly& p);

/// Bombieri inner product: the apolar product renormalized per monomial by
/// 1/|alpha|!. Distinct monomials stay orthogonal across degrees.
GaussianRational bombieri_inner(const Poly& p, const Poly& q);

}  // namespace apolaris
