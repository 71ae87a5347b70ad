#pragma once

// Computations behind the Brauer obstruction of the divisor class [E]:
// reduction of forms modulo X^4 + Y^4 + Z^4, the 2-cocycle of Gal(C/R)
// attached to the unit u_tau = Y^2 / ((X - z8 Z)(X - z8^3 Z)), and the
// certificates relating E to its Galois conjugates.

#include <array>
#include <vector>

#include "twist/divisor.hpp"
#include "twist/geometry.hpp"
#include "twist/valuation.hpp"

namespace twist {

/// A form in normal form modulo the curve: no monomial divisible by X^4.
struct CurveResidue {
    HomogPoly form;

    bool is_zero() const { return form.is_zero(); }
    friend bool operator==(const CurveResidue&, const CurveResidue&) = default;
};

/// Rewrites X^4 -> -Y^4 - Z^4 until no monomial is divisible by X^4.
CurveResidue reduce_mod_curve(const HomogPoly& g);

/// (X - z8 Z)(X - z8^3 Z)(X - z8^5 Z)(X - z8^7 Z).
HomogPoly product_of_linear_forms();

/// The constant lambda with num = lambda * den modulo the curve. Throws
/// std::domain_error if den vanishes on the curve or the ratio is not a
/// constant, and std::invalid_argument on a degree mismatch.
CycNum scalar_ratio_mod_curve(const HomogPoly& num, const HomogPoly& den);

/// numerator / denominator with forms of equal degree.
struct RationalForm {
    HomogPoly numerator;
    HomogPoly denominator;

    static RationalForm one();
    RationalForm apply(const Automorphism& s) const;
    friend RationalForm operator*(const RationalForm& a, const RationalForm& b);
};

/// Y^2 / ((X - z8 Z)(X - z8^3 Z)).
RationalForm unit_u_tau();

/// Gal(C/R) = {1, tau} realised on Q(zeta_24), index 0 for 1 and 1 for tau.
std::array<Automorphism, 2> real_galois_group();

/// a[s][t] = u_s * s(u_t) / u_{st} with u_1 = 1 and u_tau given.
using CocycleTable = std::array<std::array<CycNum, 2>, 2>;
CocycleTable two_cocycle(const RationalForm& u_tau);

/// a_{s,t} a_{st,u} == s(a_{t,u}) a_{s,tu} for all s, t, u.
bool satisfies_cocycle_identity(const CocycleTable& a);

/// a_{tau,tau} for the standard unit; equals -1.
CycNum cocycle_tau_tau();

/// 2E, E + sigma_3(E), E - sigma_3(E) with their rational functions, in that
/// order. sigma_3(E) is computed by moving the support points.
std::vector<Certificate> e_certificates();

/// sigma_5(E) == -E as divisors.
bool sigma5_negates_e();

}  // namespace twist
