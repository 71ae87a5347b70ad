#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twist/geometry.hpp"

namespace twist {

/// Finite formal Z-combination of points on the curve. Zero coefficients are
/// never stored and every support point lies on the curve.
class Divisor {
   public:
    using TermMap = std::map<ProjPoint, long>;

    Divisor() = default;

    /// multiplicity * [p]. Throws std::invalid_argument if p is off the curve.
    static Divisor point(const ProjPoint& p, long multiplicity = 1);
    /// Shorthand for point(catalog(name), multiplicity).
    static Divisor named_point(std::string_view name, long multiplicity = 1);

    long degree() const;
    bool is_zero() const { return terms_.empty(); }
    long coefficient(const ProjPoint& p) const;
    const TermMap& terms() const { return terms_; }
    std::vector<ProjPoint> support() const;

    Divisor& operator+=(const Divisor& rhs);
    Divisor& operator-=(const Divisor& rhs);
    friend Divisor operator+(Divisor lhs, const Divisor& rhs) { return lhs += rhs; }
    friend Divisor operator-(Divisor lhs, const Divisor& rhs) { return lhs -= rhs; }
    friend Divisor operator*(long n, const Divisor& d);
    Divisor operator-() const { return -1 * *this; }

    friend bool operator==(const Divisor& lhs, const Divisor& rhs) = default;

    /// Uses catalog names where possible, e.g. "2*B2 - 2*B0".
    std::string to_string() const;

   private:
    void add_term(const ProjPoint& p, long n);

    TermMap terms_;
};

/// Applies the automorphism to every support point, keeping multiplicities.
Divisor galois_image(const Automorphism& s, const Divisor& d);

// Named divisors:
//   D0..D3   Tia + Tib, the halves of the bitangent sections
//   E        2[E+] - 2[E-]
//   e1..e5   A1 - B0, A2 - B0, B1 - B0, B2 - B0, C1 - B0
//   e6       A1 + B1 + C1 + A2 + B2 + C2 - 6 B0
/// Throws std::invalid_argument for an unknown name.
Divisor named_divisor(std::string_view name);

}  // namespace twist
