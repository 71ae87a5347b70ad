#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_24).
//
// Elements are stored in the power basis 1, d, ..., d^7 where d = zeta_24 is a
// root of x^8 - x^4 + 1. Every arithmetic result is reduced eagerly with the
// rule d^8 = d^4 - 1, so two elements are equal iff their coefficient arrays
// are equal.
//
// Named roots of unity used throughout the project:
//   zeta_8 = d^3,  zeta_4 = d^6,  zeta_3 = d^8 = d^4 - 1.

#include <array>
#include <cstddef>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace twist {

using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator. Throws
/// std::domain_error when den is zero.
Rational make_rational(long num, long den = 1);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

class CycNum {
   public:
    static constexpr std::size_t kDegree = 8;
    static constexpr int kOrder = 24;
    using Coefficients = std::array<Rational, kDegree>;

    CycNum() = default;
    CycNum(long value);  // NOLINT: rationals embed implicitly
    CycNum(const Rational& value);  // NOLINT
    explicit CycNum(Coefficients coeffs);

    /// d = zeta_24.
    static CycNum generator();
    /// d^e for any integer e (negative exponents allowed), fully reduced.
    static CycNum generator_power(long exponent);

    const Rational& coeff(std::size_t i) const { return coeffs_[i]; }
    const Coefficients& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    /// Multiplicative inverse by the extended Euclidean algorithm against the
    /// minimal polynomial. Throws std::domain_error for zero.
    CycNum inverse() const;

    CycNum& operator+=(const CycNum& rhs);
    CycNum& operator-=(const CycNum& rhs);
    CycNum& operator*=(const CycNum& rhs);
    CycNum& operator/=(const CycNum& rhs);

    friend CycNum operator+(CycNum lhs, const CycNum& rhs) { return lhs += rhs; }
    friend CycNum operator-(CycNum lhs, const CycNum& rhs) { return lhs -= rhs; }
    friend CycNum operator*(const CycNum& lhs, const CycNum& rhs);
    friend CycNum operator/(CycNum lhs, const CycNum& rhs) { return lhs /= rhs; }
    CycNum operator-() const;

    friend bool operator==(const CycNum& lhs, const CycNum& rhs);

    /// Human-readable polynomial in d, e.g. "d^5 - d^3 - d" or "1/2".
    std::string to_string() const;

   private:
    Coefficients coeffs_{};
};

/// Lexicographic comparison on coefficient arrays (d^0 first). Used only to
/// give points and divisors a canonical order.
int compare(const CycNum& lhs, const CycNum& rhs);

CycNum pow(const CycNum& base, long exponent);

std::ostream& operator<<(std::ostream& os, const CycNum& value);

/// Primitive order-th root of unity raised to power: d^((24/order) * power).
/// Throws std::invalid_argument unless order is a positive divisor of 24.
CycNum zeta(int order, long power = 1);

/// The field automorphism d -> d^k of Q(zeta_24), k a unit modulo 24.
class Automorphism {
   public:
    /// Throws std::invalid_argument if gcd(k, 24) != 1.
    explicit Automorphism(int exponent);

    static Automorphism identity() { return Automorphism(1); }

    int exponent() const { return exponent_; }

    CycNum operator()(const CycNum& value) const;

    /// (a * b)(x) = a(b(x)).
    friend Automorphism operator*(const Automorphism& a, const Automorphism& b);
    friend bool operator==(const Automorphism& a, const Automorphism& b) = default;

   private:
    int exponent_;
};

/// Default lifts to Q(zeta_24) of the generators of Gal(Q(zeta_8)/Q).
///   sigma_3 : zeta_8 -> zeta_8^3  lifts to k in {11, 19}
///   sigma_5 : zeta_8 -> zeta_8^5  lifts to k in {5, 13}
/// Complex conjugation is k = 23; it restricts to sigma_3 sigma_5 on Q(zeta_8).
inline constexpr int kSigma3Lift = 19;
inline constexpr int kSigma3AltLift = 11;
inline constexpr int kSigma5Lift = 5;
inline constexpr int kSigma5AltLift = 13;
inline constexpr int kConjugationLift = 23;

/// Throws std::invalid_argument if k does not restrict to sigma_3 (k = 3 mod 8).
Automorphism sigma3(int lift = kSigma3Lift);
/// Throws std::invalid_argument if k does not restrict to sigma_5 (k = 5 mod 8).
Automorphism sigma5(int lift = kSigma5Lift);
Automorphism complex_conjugation();

/// The eight exponents 1, 5, 7, 11, 13, 17, 19, 23.
std::array<int, 8> unit_exponents();

}  // namespace twist
