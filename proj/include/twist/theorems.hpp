#pragma once

// Assembly of the module-level computations into the headline results:
// the Mordell-Weil group over Q and Pic^0, the non-trivial odd-degree
// torsors, the Pic^2 classes with the quadratic points, and the absence of a
// linear determinantal representation over Q.

#include <set>
#include <span>
#include <string>
#include <vector>

#include "twist/dataset.hpp"
#include "twist/mwmodule.hpp"

namespace twist {

struct Constituent {
    std::string id;
    std::string module;  ///< valuation, mwmodule, brauer, geometry, divisor
    bool passed = false;
    std::string detail;
};

struct TheoremReport {
    std::string id;
    std::string title;
    std::vector<Constituent> constituents;
    /// Prose steps that are relied on but not computed.
    std::vector<std::string> assumptions;
    std::vector<std::string> notes;
    bool verdict = false;

    /// Modules of the constituents, sorted.
    std::set<std::string> dependencies() const;
    /// "id: verdict (k/n constituents)".
    std::string summary() const;
};

/// Jac(C)(Q) is (Z/2)^3 generated by [D1 - D0], [D2 - D0], [E]; Pic^0 is the
/// index-2 subgroup generated by [D1 - D0], [D2 - D0].
TheoremReport verify_mordell_weil_group(const Dataset& ds = Dataset::standard());

/// Pic^1 (hence every odd degree) has no fixed point under sigma_3, sigma_5,
/// sigma_3 sigma_5.
TheoremReport verify_odd_degree_torsors(const Dataset& ds = Dataset::standard());

/// Pic^2 = {[D0], [D1], [D2], [D3]} and the eight quadratic points.
TheoremReport verify_degree_two_classes(const Dataset& ds = Dataset::standard());

/// Every degree-2 class is effective, so no determinantal representation.
TheoremReport verify_no_determinantal_representation(const Dataset& ds = Dataset::standard());

/// Pic^0 as established by the Mordell-Weil computation: the subgroup
/// generated by [D1 - D0] and [D2 - D0] when the fixed submodule has order 8
/// and [E] lies outside it. Empty when the premises fail.
ModSet rational_pic0(const Dataset& ds = Dataset::standard());

/// Passes iff the offsets [Di - D0] of the effective degree-2 classes are
/// pairwise distinct and exhaust pic0, which must have order 4.
Constituent assess_pic2(const ModSet& pic0, std::span<const ModElement> effective_offsets);

/// Class of a divisor of the form (cusp representative) + principal, computed
/// from the dictionary after checking its certificate.
struct WitnessedClass {
    ModElement value;
    bool certified = false;
    std::string detail;
};
WitnessedClass witnessed_class(const Dataset& ds, const ClassCoordinate& cc);

}  // namespace twist
