#pragma once

// Test helpers: seeded generators and oracles that do not go through the
// library's own reduction or valuation code.

#include <random>
#include <string>
#include <vector>

#include "twist/geometry.hpp"
#include "twist/numfield.hpp"

namespace twist::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rational small_rational() {
    return make_rational(uniform(-9, 9), uniform(1, 5));
}

inline CycNum random_cycnum(double zero_weight = 0.3) {
    CycNum::Coefficients c;
    std::bernoulli_distribution zero(zero_weight);
    for (auto& x : c) {
        x = zero(rng()) ? Rational(0) : small_rational();
    }
    return CycNum(c);
}

inline CycNum random_nonzero() {
    CycNum a;
    while (a.is_zero()) {
        a = random_cycnum();
    }
    return a;
}

inline int random_unit_exponent() {
    static const int units[] = {1, 5, 7, 11, 13, 17, 19, 23};
    return units[uniform(0, 7)];
}

/// Reduces a dense polynomial in d of any length by peeling the top term with
/// d^n = d^(n-4) - d^(n-8), one degree at a time.
inline CycNum schoolbook_reduce(std::vector<Rational> p) {
    for (std::size_t n = p.size(); n-- > 8;) {
        const Rational top = p[n];
        if (top == 0) {
            continue;
        }
        p[n] = 0;
        p[n - 4] += top;
        p[n - 8] -= top;
    }
    p.resize(8);
    CycNum::Coefficients c;
    std::copy(p.begin(), p.end(), c.begin());
    return CycNum(c);
}

inline CycNum power_of_d(long e) {
    e %= 24;
    if (e < 0) {
        e += 24;
    }
    std::vector<Rational> p(static_cast<std::size_t>(e) + 1);
    p[static_cast<std::size_t>(e)] = 1;
    return schoolbook_reduce(p);
}

inline CycNum schoolbook_product(const CycNum& a, const CycNum& b) {
    std::vector<Rational> p(15);
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            p[i + j] += a.coeff(i) * b.coeff(j);
        }
    }
    return schoolbook_reduce(p);
}

/// Intersection multiplicity of the line l (coefficients of X, Y, Z) with
/// X^4 + Y^4 + Z^4 at p, read off from F(p + s q) for a second point q on l.
inline int line_multiplicity(const std::array<CycNum, 3>& l, const ProjPoint& p) {
    const std::array<CycNum, 3> e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto cross = [](const std::array<CycNum, 3>& u, const std::array<CycNum, 3>& v) {
        return std::array<CycNum, 3>{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                     u[0] * v[1] - u[1] * v[0]};
    };
    for (const auto& ei : e) {
        const auto q = cross(l, ei);
        if (q[0].is_zero() && q[1].is_zero() && q[2].is_zero()) {
            continue;
        }
        const auto pq = cross(p.coords(), q);
        if (pq[0].is_zero() && pq[1].is_zero() && pq[2].is_zero()) {
            continue;
        }
        static const long binom[5] = {1, 4, 6, 4, 1};
        for (int k = 0; k <= 4; ++k) {
            CycNum ck;
            for (int i = 0; i < 3; ++i) {
                ck += CycNum(binom[k]) * pow(p[i], 4 - k) * pow(q[i], k);
            }
            if (!ck.is_zero()) {
                return k;
            }
        }
        return 5;
    }
    return -1;
}

inline HomogPoly linear_form(const std::array<CycNum, 3>& l) {
    return l[0] * X() + l[1] * Y() + l[2] * Z();
}

}  // namespace twist::testing
