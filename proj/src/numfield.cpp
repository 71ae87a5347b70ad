#include "twist/numfield.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace twist {

Rational make_rational(long num, long den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

namespace {

// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) {
        p.pop_back();
    }
}

QPoly minimal_polynomial() {
    // x^8 - x^4 + 1
    QPoly m(9);
    m[0] = 1;
    m[4] = -1;
    m[8] = 1;
    return m;
}

std::pair<QPoly, QPoly> divmod(QPoly num, const QPoly& den) {
    QPoly quot;
    const std::size_t dd = den.size() - 1;
    if (num.size() >= den.size()) {
        quot.assign(num.size() - dd, Rational(0));
        for (std::size_t i = num.size(); i-- > dd;) {
            if (sgn(num[i]) == 0) {
                continue;
            }
            Rational factor = num[i] / den.back();
            quot[i - dd] = factor;
            for (std::size_t j = 0; j <= dd; ++j) {
                num[i - dd + j] -= factor * den[j];
            }
        }
    }
    trim(quot);
    trim(num);
    return {quot, num};
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    // a - q*b
    QPoly out(std::max(a.size(), q.size() + b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i];
    }
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] -= q[i] * b[j];
        }
    }
    trim(out);
    return out;
}

// d^0 .. d^23, built by repeated multiplication by d with a single
// reduction step each time.
const std::array<CycNum, 24>& power_table() {
    static const std::array<CycNum, 24> table = [] {
        std::array<CycNum, 24> t;
        CycNum::Coefficients c{};
        c[0] = 1;
        t[0] = CycNum(c);
        for (int e = 1; e < 24; ++e) {
            CycNum::Coefficients next{};
            Rational top = c[7];
            for (int i = 7; i >= 1; --i) {
                next[i] = c[i - 1];
            }
            next[0] = 0;
            // top * d^8 = top * (d^4 - 1)
            next[4] += top;
            next[0] -= top;
            c = next;
            t[e] = CycNum(c);
        }
        return t;
    }();
    return table;
}

long mod24(long e) {
    long r = e % 24;
    return r < 0 ? r + 24 : r;
}

}  // namespace

CycNum::CycNum(long value) { coeffs_[0] = value; }

CycNum::CycNum(const Rational& value) {
    coeffs_[0] = value;
    coeffs_[0].canonicalize();
}

CycNum::CycNum(Coefficients coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) {
        c.canonicalize();
    }
}

CycNum CycNum::generator() { return generator_power(1); }

CycNum CycNum::generator_power(long exponent) { return power_table()[mod24(exponent)]; }

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < kDegree; ++i) {
        if (sgn(coeffs_[i]) != 0) {
            return false;
        }
    }
    return true;
}

bool CycNum::is_one() const { return is_rational() && coeffs_[0] == 1; }

CycNum& CycNum::operator+=(const CycNum& rhs) {
    for (std::size_t i = 0; i < kDegree; ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
    for (std::size_t i = 0; i < kDegree; ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

CycNum operator*(const CycNum& lhs, const CycNum& rhs) {
    std::array<Rational, 2 * CycNum::kDegree - 1> prod{};
    for (std::size_t i = 0; i < CycNum::kDegree; ++i) {
        if (sgn(lhs.coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < CycNum::kDegree; ++j) {
            if (sgn(rhs.coeffs_[j]) == 0) {
                continue;
            }
            prod[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    // d^k = d^(k-4) - d^(k-8) for k >= 8, highest first.
    for (std::size_t k = prod.size() - 1; k >= CycNum::kDegree; --k) {
        if (sgn(prod[k]) == 0) {
            continue;
        }
        prod[k - 4] += prod[k];
        prod[k - 8] -= prod[k];
    }
    CycNum out;
    for (std::size_t i = 0; i < CycNum::kDegree; ++i) {
        out.coeffs_[i] = std::move(prod[i]);
    }
    return out;
}

CycNum& CycNum::operator*=(const CycNum& rhs) { return *this = *this * rhs; }

CycNum& CycNum::operator/=(const CycNum& rhs) { return *this = *this * rhs.inverse(); }

CycNum CycNum::operator-() const {
    CycNum out(*this);
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

bool operator==(const CycNum& lhs, const CycNum& rhs) {
    for (std::size_t i = 0; i < CycNum::kDegree; ++i) {
        if (lhs.coeffs_[i] != rhs.coeffs_[i]) {
            return false;
        }
    }
    return true;
}

CycNum CycNum::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero in Q(zeta_24)");
    }
    QPoly a(coeffs_.begin(), coeffs_.end());
    trim(a);

    // Invariant: s_prev * a = r_prev (mod minpoly), s_cur * a = r_cur (mod minpoly).
    QPoly r_prev = minimal_polynomial();
    QPoly r_cur = a;
    QPoly s_prev;
    QPoly s_cur{Rational(1)};
    while (!r_cur.empty()) {
        auto [q, r] = divmod(r_prev, r_cur);
        QPoly s_next = sub_mul(s_prev, q, s_cur);
        r_prev = std::move(r_cur);
        r_cur = std::move(r);
        s_prev = std::move(s_cur);
        s_cur = std::move(s_next);
    }
    // The minimal polynomial is irreducible, so the gcd is a nonzero constant.
    if (r_prev.size() != 1) {
        throw std::logic_error("minimal polynomial gcd is not constant");
    }
    const Rational scale = 1 / r_prev[0];
    Coefficients out{};
    auto [unused, reduced] = divmod(s_prev, minimal_polynomial());
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        out[i] = reduced[i] * scale;
    }
    return CycNum(out);
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = kDegree; i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            os << mag.get_str() << "*";
        }
        os << "d";
        if (i > 1) {
            os << "^" << i;
        }
    }
    if (first) {
        return "0";
    }
    return os.str();
}

int compare(const CycNum& lhs, const CycNum& rhs) {
    for (std::size_t i = 0; i < CycNum::kDegree; ++i) {
        int c = cmp(lhs.coeff(i), rhs.coeff(i));
        if (c != 0) {
            return c < 0 ? -1 : 1;
        }
    }
    return 0;
}

CycNum pow(const CycNum& base, long exponent) {
    if (exponent < 0) {
        return pow(base.inverse(), -exponent);
    }
    CycNum result(1);
    CycNum b = base;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= b;
        }
        exponent >>= 1;
        if (exponent > 0) {
            b *= b;
        }
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const CycNum& value) { return os << value.to_string(); }

CycNum zeta(int order, long power) {
    if (order <= 0 || CycNum::kOrder % order != 0) {
        throw std::invalid_argument("root of unity order must divide 24, got " +
                                    std::to_string(order));
    }
    return CycNum::generator_power(static_cast<long>(CycNum::kOrder / order) * power);
}

Automorphism::Automorphism(int exponent) {
    int k = static_cast<int>(mod24(exponent));
    if (std::gcd(k, 24) != 1) {
        throw std::invalid_argument("automorphism exponent must be a unit mod 24, got " +
                                    std::to_string(exponent));
    }
    exponent_ = k;
}

CycNum Automorphism::operator()(const CycNum& value) const {
    if (exponent_ == 1) {
        return value;
    }
    CycNum out;
    for (std::size_t i = 0; i < CycNum::kDegree; ++i) {
        if (sgn(value.coeff(i)) == 0) {
            continue;
        }
        out += CycNum(value.coeff(i)) * CycNum::generator_power(static_cast<long>(i) * exponent_);
    }
    return out;
}

Automorphism operator*(const Automorphism& a, const Automorphism& b) {
    return Automorphism((a.exponent_ * b.exponent_) % 24);
}

Automorphism sigma3(int lift) {
    if (((lift % 8) + 8) % 8 != 3) {
        throw std::invalid_argument("sigma_3 lift must be 3 mod 8");
    }
    return Automorphism(lift);
}

Automorphism sigma5(int lift) {
    if (((lift % 8) + 8) % 8 != 5) {
        throw std::invalid_argument("sigma_5 lift must be 5 mod 8");
    }
    return Automorphism(lift);
}

Automorphism complex_conjugation() { return Automorphism(kConjugationLift); }

std::array<int, 8> unit_exponents() { return {1, 5, 7, 11, 13, 17, 19, 23}; }

}  // namespace twist
