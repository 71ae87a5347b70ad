#pragma once

// Published values the verifier checks against: the dictionary, the printed
// action matrices and permutation tables, the Pic^1 shifts, the class
// coordinates of D_i - D_0 and E, and every rational-function certificate.
// The mutation controls edit a copy of this structure.

#include <string>
#include <vector>

#include "twist/mwmodule.hpp"
#include "twist/valuation.hpp"

namespace twist {

/// [target] = printed, witnessed by a certificate showing that target minus
/// a cusp-supported representative is principal.
struct ClassCoordinate {
    std::string id;
    std::string label;
    std::string target_name;      ///< e.g. "D1 - D0" or "E"
    Divisor target;
    Divisor cusp_representative;  ///< degree 0, supported on cusps
    std::string certificate_id;
    ModElement printed;
};

/// (sigma - 1)[A0] as printed for one of sigma_5, sigma_3, sigma_3 sigma_5.
struct Pic1Shift {
    std::string id;
    std::string sigma_label;  ///< "sigma_5", "sigma_3", "sigma_3 sigma_5"
    Automorphism sigma;
    ModElement printed;
};

struct Dataset {
    Dictionary dictionary;
    ActionMatrix s3;
    ActionMatrix s5;
    CuspPermutation sigma3_table;
    CuspPermutation sigma5_table;
    std::vector<Pic1Shift> shifts;
    std::vector<Certificate> certificates;
    std::vector<ClassCoordinate> class_coordinates;

    static const Dataset& standard();

    /// Throws std::invalid_argument for an unknown id.
    const Certificate& certificate(std::string_view id) const;
    Certificate& certificate(std::string_view id);
    const ClassCoordinate& class_coordinate(std::string_view id) const;

    /// Matrix for sigma_3 sigma_5, composed from the printed matrices.
    ActionMatrix s3s5() const { return s3 * s5; }
    /// Printed matrix (or product) for the restriction of s to Q(zeta_8).
    ActionMatrix matrix_for(const Automorphism& s) const;
};

/// Ids of the certificates that reproduce the divisor identities, in the
/// canonical order.
std::vector<std::string> bitangent_certificate_ids();

}  // namespace twist
