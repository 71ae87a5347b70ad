#pragma once

// Local valuations of forms at smooth points of C, computed from truncated
// power-series branch expansions, and verification of principal-divisor
// certificates div(G/H) = D.
//
// Completeness: a form G of degree m with F = X^4 + Y^4 + Z^4 not dividing G
// meets C in exactly 4m points counted with multiplicity. A support list whose
// valuations already sum to 4m therefore carries all of div(G).

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twist/divisor.hpp"
#include "twist/geometry.hpp"

namespace twist {

/// Truncated power series, coefficient of t^i at index i.
using Series = std::vector<CycNum>;

struct BranchExpansion {
    ProjPoint center;
    int chart;      ///< coordinate fixed to 1
    int parameter;  ///< coordinate equal to center + t
    int dependent;  ///< coordinate given by `series`
    Series series;  ///< dependent coordinate, series[0] == center[dependent]
    int precision;  ///< correct modulo t^precision

    /// Series of all three coordinates, truncated to the precision.
    std::array<Series, 3> coordinates() const;
};

/// Throws std::invalid_argument if p is off the curve or precision < 1, and
/// std::domain_error if the gradient vanishes at p.
BranchExpansion expand_branch(const ProjPoint& p, int precision);

/// G(x(t), y(t), z(t)) modulo t^precision of the branch.
Series compose(const HomogPoly& g, const BranchExpansion& branch);

/// Thrown when G vanishes at a point to order >= the bound; with the bound
/// 4 deg G + 1 this certifies that F divides G.
class ExcessiveVanishing : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// ord_t G(branch at p), which must be < bound. Branches are memoized per
/// (point, precision).
int valuation(const HomogPoly& g, const ProjPoint& p, int bound);

/// Bound used for a form of the given degree: 4 * degree + 1.
int bezout_bound(int degree);

struct PrincipalDivisor {
    Divisor divisor;
    long expected_degree;  ///< 4 deg G
    bool complete;         ///< divisor.degree() == expected_degree
};

/// Sum of valuation(g, p) * p over the support points. Throws
/// std::invalid_argument on repeated support points.
PrincipalDivisor principal_divisor_on_support(const HomogPoly& g,
                                              std::span<const ProjPoint> support);

enum class CertificateOutcome { pass, mismatch, incomplete_support };

std::string to_string(CertificateOutcome outcome);

struct LedgerEntry {
    ProjPoint point;
    int numerator_order;
    int denominator_order;
    long claimed;
};

struct CertificateCheck {
    Divisor claimed;
    HomogPoly numerator;
    HomogPoly denominator;
    std::vector<ProjPoint> support;
    std::vector<LedgerEntry> ledger;
    long numerator_total = 0;
    long denominator_total = 0;
    long numerator_expected = 0;    ///< 4 deg G
    long denominator_expected = 0;  ///< 4 deg H
    CertificateOutcome outcome = CertificateOutcome::mismatch;

    bool passed() const { return outcome == CertificateOutcome::pass; }
    /// One line per support point: "B0: 4 - 0 = 4 (claimed 4)".
    std::string ledger_text() const;
};

/// Checks div(numerator) - div(denominator) == claimed using the support list.
/// A nonzero constant denominator checks the divisor cut out by the numerator
/// alone. Otherwise the forms must share a degree; std::invalid_argument.
CertificateCheck verify_certificate(const Divisor& claimed, const HomogPoly& numerator,
                                    const HomogPoly& denominator,
                                    std::span<const ProjPoint> support);

/// A named certificate identity, as carried by the verification dataset.
struct Certificate {
    std::string id;
    std::string label;
    Divisor claimed;
    HomogPoly numerator;
    HomogPoly denominator;
    std::vector<ProjPoint> support;

    CertificateCheck verify() const {
        return verify_certificate(claimed, numerator, denominator, support);
    }
};

}  // namespace twist
