#pragma once

#include "swlink/braid.hpp"
#include "swlink/laurent.hpp"

namespace swlink {

/// Variable list of link Alexander polynomials: {"x", "t"}, x first. The x
/// variable tracks the braid axis, t the closed braid.
const std::vector<std::string>& alexander_vars();

/// Variable list of symmetrized polynomials and invariants built from them:
/// {"xi", "tau"}.
const std::vector<std::string>& symmetric_vars();

/// Alexander polynomial of the closed braid of the (p, q) family together
/// with its axis, as det(I - x * Gamma_{p,q}) over Z[x^±1, t^±1], where
/// Gamma_{p,q} is the braid matrix of torus_family_braid(p, q).
/// Requires p >= 1 and 2 <= q <= 20 (determinant feasibility bound).
LaurentPolynomial alexander_via_determinant(int p, int q);

/// The same polynomial from its closed form (no determinant):
///   q = 2:          1 + x t^{2p-1}
///   q >= 3, p >= 2: 1 + x^{q-1} t^{2p+q-3}
///                     + x t^2 (sum_{i=0}^{2p-4} (-t)^i)(sum_{j=0}^{q-3} (xt)^j)
///   q >= 3, p = 1:  sum_{j=0}^{q-1} (xt)^j
/// The interior quotients of the classical formula are rendered as these
/// finite sums; the ring stays division-free.
LaurentPolynomial alexander_closed_form(int p, int q);

/// Centers a family Alexander polynomial at the origin with integer
/// exponents only: substitutes x -> xi^2, t -> tau^2, then multiplies by
/// xi^{-(q-1)} tau^{-(2p+q-3)}. Input must have nonnegative exponents and
/// live in (x, t).
LaurentPolynomial symmetrize(int p, int q, const LaurentPolynomial& delta);

/// det(I - x * braid matrix) for an arbitrary word (strands <= 20). For
/// words outside the (p, q) family the result is the closure-plus-axis
/// Alexander polynomial up to multiplication by units ±x^a t^b; no unit
/// normalization is applied, so compare general words up to units.
LaurentPolynomial alexander_general(const BraidWord& word);

}  // namespace swlink
