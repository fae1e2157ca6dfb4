#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "swlink/alexander.hpp"
#include "swlink/braid.hpp"
#include "swlink/laurent.hpp"

namespace swlink {

/// How an SW polynomial was produced.
enum class Provenance { link_surgery, general_fiber_sum };

std::string to_string(Provenance provenance);

/// A Seiberg-Witten invariant as a group-ring element: a Laurent polynomial
/// in (xi, tau) for the link-surgery family, or in (fiber vars..., tau) for
/// a general fiber sum. The polynomial is always canonical. Link-surgery
/// invariants satisfy mirror(poly) = (-1)^{n+r} * poly.
///
/// For general_fiber_sum provenance the n field is not meaningful (the
/// caller supplies a finished polynomial instead) and is stored as 1.
struct SWInvariant {
    LaurentPolynomial poly;
    FamilyParams params;
    Provenance provenance = Provenance::link_surgery;
};

/// SW invariant of the manifold glued from E(n), E(r) and the (p, q) link:
///   (xi^-1 - xi)^{n-1} * (xi^-q - xi^q)^{r-1} * symmetrized Alexander
/// One code path covers the whole parameter range p >= 1, q >= 2,
/// n >= 1, r >= 1.
SWInvariant sw_link_surgery(const FamilyParams& params);

/// SW invariant of a 4-manifold X with fiber class [F] = fiber_var after the
/// generalized fiber sum with E(r) along the (p, q) torus:
///   sw_x * (f^-1 - f) * (f^-q - f^q)^{r-1} * Delta^sym(f^2, tau^2)
/// The ring of sw_x is extended by tau. sw_x must contain fiber_var and must
/// not contain tau.
///
/// The caller is responsible for the b2+ > 1 hypothesis behind the product
/// formula; in the b2+ = 1 regime the invariant can fail to be a finite sum,
/// which this representation cannot express, and the operation performs no
/// validity check of its own.
SWInvariant sw_fiber_sum_general(const LaurentPolynomial& sw_x,
                                 const std::string& fiber_var, int r, int p, int q);

/// Background SW value of the elliptic surface E(n): (f^-1 - f)^{n-2} in the
/// one-variable ring {fiber_var}. Requires n >= 2.
LaurentPolynomial elliptic_surface_sw(int n, const std::string& fiber_var = "f");

/// Formally sets tau equal to the other variable and reports the collapsed
/// polynomial together with its support size. Cancellation may shrink the
/// support and is reported as-is. The input must live in a two-variable
/// ring containing tau.
std::pair<LaurentPolynomial, std::size_t> collapse_count(const SWInvariant& sw);

}  // namespace swlink
