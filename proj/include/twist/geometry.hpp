#pragma once

// Homogeneous polynomials over Q(zeta_24), projective points, and the curve
// C : X^4 + Y^4 + Z^4 = 0 together with its catalog of named points.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twist/numfield.hpp"

namespace twist {

/// Exponents of X, Y, Z.
using Exponent = std::array<int, 3>;

class HomogPoly {
   public:
    /// Terms ordered X^d first (graded lex, X > Y > Z).
    using TermMap = std::map<Exponent, CycNum, std::greater<>>;

    /// The zero form of the given degree.
    explicit HomogPoly(int degree = 0);

    static HomogPoly constant(const CycNum& value);
    static HomogPoly monomial(const CycNum& coeff, const Exponent& exponent);
    /// index 0, 1, 2 for X, Y, Z.
    static HomogPoly variable(int index);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    CycNum coefficient(const Exponent& exponent) const;
    /// Throws std::invalid_argument if the exponent does not sum to degree().
    void set_coefficient(const Exponent& exponent, const CycNum& value);

    CycNum evaluate(const std::array<CycNum, 3>& point) const;
    HomogPoly derivative(int index) const;
    /// Applies a field automorphism to every coefficient.
    HomogPoly apply(const Automorphism& s) const;

    /// Throws std::invalid_argument on degree mismatch.
    HomogPoly& operator+=(const HomogPoly& rhs);
    HomogPoly& operator-=(const HomogPoly& rhs);
    HomogPoly& operator*=(const HomogPoly& rhs);
    HomogPoly& operator*=(const CycNum& scalar);

    friend HomogPoly operator+(HomogPoly lhs, const HomogPoly& rhs) { return lhs += rhs; }
    friend HomogPoly operator-(HomogPoly lhs, const HomogPoly& rhs) { return lhs -= rhs; }
    friend HomogPoly operator*(HomogPoly lhs, const HomogPoly& rhs) { return lhs *= rhs; }
    friend HomogPoly operator*(const CycNum& scalar, HomogPoly rhs) { return rhs *= scalar; }
    HomogPoly operator-() const;

    friend bool operator==(const HomogPoly& lhs, const HomogPoly& rhs);

    /// e.g. "X^2 + (d^5 - d^3 - d)*Y^2 - Z^2".
    std::string to_string() const;

   private:
    int degree_;
    TermMap terms_;
};

HomogPoly pow(const HomogPoly& base, int exponent);

HomogPoly X();
HomogPoly Y();
HomogPoly Z();

/// X^4 + Y^4 + Z^4.
const HomogPoly& curve_equation();

/// A point of P^2 stored with its first nonzero coordinate equal to 1.
class ProjPoint {
   public:
    /// Throws std::invalid_argument if all coordinates vanish.
    ProjPoint(const CycNum& x, const CycNum& y, const CycNum& z);

    const CycNum& x() const { return coords_[0]; }
    const CycNum& y() const { return coords_[1]; }
    const CycNum& z() const { return coords_[2]; }
    const std::array<CycNum, 3>& coords() const { return coords_; }
    const CycNum& operator[](int i) const { return coords_[i]; }

    /// Index of the coordinate normalized to 1.
    int chart() const { return chart_; }

    friend bool operator==(const ProjPoint& lhs, const ProjPoint& rhs);
    friend bool operator<(const ProjPoint& lhs, const ProjPoint& rhs);

    std::string to_string() const;

   private:
    std::array<CycNum, 3> coords_;
    int chart_;
};

/// Evaluates at the normalized representative; only zero/nonzero is
/// meaningful projectively.
CycNum evaluate(const HomogPoly& g, const ProjPoint& p);

bool on_curve(const ProjPoint& p);

/// True iff the gradient of X^4 + Y^4 + Z^4 does not vanish at p.
bool is_smooth_point(const ProjPoint& p);

/// Coordinate-wise automorphism followed by normalization.
ProjPoint galois_image(const Automorphism& s, const ProjPoint& p);

// Catalog of named points. Names:
//   A0..A3  [0 : zeta_4^i : zeta_8^7]
//   B0..B3  [zeta_4^i : 0 : zeta_8^7]
//   C0..C3  [zeta_8 zeta_4^i : 1 : 0]
//   T0a,T0b .. T3a,T3b  points of tangency of the four rational bitangents,
//            Tia = [1 : s zeta_3 : t zeta_3^2], Tib = [1 : s zeta_3^2 : t zeta_3]
//            with (s, t) = (+,+), (-,+), (+,-), (-,-) for i = 0..3
//   E+ = [1 : 0 : zeta_8^3],  E- = [1 : 0 : zeta_8^7]

/// Throws std::invalid_argument for an unknown name.
const ProjPoint& catalog(std::string_view name);

/// Every catalog name in canonical order.
const std::vector<std::string>& catalog_names();

/// First catalog name (canonical order) whose point equals p.
std::optional<std::string> catalog_name(const ProjPoint& p);

/// Catalog points rational over Q(zeta_8): the cusps and E+, E-.
std::vector<std::string> zeta8_rational_names();

}  // namespace twist
