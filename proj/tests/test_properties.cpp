#include "doctest.h"
#include "support.hpp"
#include "twist/brauer.hpp"
#include "twist/divisor.hpp"
#include "twist/mwmodule.hpp"
#include "twist/valuation.hpp"

using namespace twist;
using namespace twist::testing;

namespace {

constexpr int kCases = 1000;

const std::string& random_name() {
    const auto& names = catalog_names();
    return names[static_cast<std::size_t>(uniform(0, static_cast<long>(names.size()) - 1))];
}

Divisor random_divisor() {
    Divisor d;
    const long terms = uniform(0, 4);
    for (long i = 0; i < terms; ++i) {
        d += Divisor::named_point(random_name(), uniform(-3, 3));
    }
    return d;
}

/// Lines through two distinct catalog points, the coordinate lines and the
/// four bitangents.
const std::vector<HomogPoly>& catalog_lines() {
    static const std::vector<HomogPoly> lines = [] {
        std::vector<HomogPoly> out{X(), Y(), Z(), X() + Y() + Z(), X() - Y() + Z(),
                                   X() + Y() - Z(), X() - Y() - Z()};
        const auto& names = catalog_names();
        for (std::size_t i = 0; i < names.size(); i += 3) {
            for (std::size_t j = i + 1; j < names.size(); j += 4) {
                const ProjPoint& p = catalog(names[i]);
                const ProjPoint& q = catalog(names[j]);
                if (p == q) {
                    continue;
                }
                out.push_back(linear_form({p.y() * q.z() - p.z() * q.y(),
                                           p.z() * q.x() - p.x() * q.z(),
                                           p.x() * q.y() - p.y() * q.x()}));
            }
        }
        return out;
    }();
    return lines;
}

const HomogPoly& random_line() {
    const auto& lines = catalog_lines();
    return lines[static_cast<std::size_t>(uniform(0, static_cast<long>(lines.size()) - 1))];
}

ModElement random_element() {
    const auto& all = all_elements();
    return all[static_cast<std::size_t>(uniform(0, static_cast<long>(all.size()) - 1))];
}

HomogPoly random_form(int degree) {
    HomogPoly g(degree);
    for (int i = 0; i <= degree; ++i) {
        for (int j = 0; i + j <= degree; ++j) {
            if (uniform(0, 2) == 0) {
                g.set_coefficient({i, j, degree - i - j}, CycNum(uniform(-4, 4)) +
                                                              CycNum(uniform(-2, 2)) * zeta(8));
            }
        }
    }
    return g;
}

}  // namespace

TEST_CASE("field axioms on random elements") {
    int cases = 0;
    for (int n = 0; n < kCases; ++n, ++cases) {
        const CycNum a = random_cycnum();
        const CycNum b = random_cycnum();
        const CycNum c = random_cycnum();
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a - a == CycNum(0));
        REQUIRE(a * CycNum(1) == a);
        REQUIRE(a * b == schoolbook_product(a, b));
        if (!a.is_zero()) {
            REQUIRE(a * a.inverse() == CycNum(1));
            REQUIRE((b / a) * a == b);
        }
    }
    CHECK(cases >= kCases);
}

TEST_CASE("automorphisms are ring homomorphisms and compose") {
    int cases = 0;
    for (int n = 0; n < kCases; ++n, ++cases) {
        const int k = random_unit_exponent();
        const int l = random_unit_exponent();
        const Automorphism s(k);
        const Automorphism t(l);
        const CycNum a = random_cycnum();
        const CycNum b = random_cycnum();
        REQUIRE(s(a * b) == s(a) * s(b));
        REQUIRE(s(a + b) == s(a) + s(b));
        REQUIRE(s(t(a)) == Automorphism((k * l) % 24)(a));
        REQUIRE((s * t)(a) == s(t(a)));
        const Rational q = small_rational();
        REQUIRE(s(CycNum(q)) == CycNum(q));
    }
    CHECK(cases >= kCases);
}

TEST_CASE("roots of unity have the expected order") {
    for (int order : {1, 2, 3, 4, 6, 8, 12, 24}) {
        for (int k = -30; k <= 30; ++k) {
            const int g = std::gcd(order, std::abs(k));
            const int expected = order / (g == 0 ? order : g);
            const CycNum z = zeta(order, k);
            int actual = 1;
            CycNum acc = z;
            while (!(acc == CycNum(1))) {
                acc *= z;
                ++actual;
                REQUIRE(actual <= 24);
            }
            CAPTURE(order);
            CAPTURE(k);
            CHECK(actual == expected);
        }
    }
    const CycNum d = CycNum::generator();
    CHECK((pow(d, 8) - pow(d, 4) + CycNum(1)).is_zero());
}

TEST_CASE("valuation is additive on products of catalog lines") {
    int cases = 0;
    for (int n = 0; n < kCases; ++n, ++cases) {
        const HomogPoly& g = random_line();
        const HomogPoly& h = random_line();
        const ProjPoint& p = catalog(random_name());
        const int vg = valuation(g, p, 5);
        const int vh = valuation(h, p, 5);
        REQUIRE(valuation(g * h, p, 9) == vg + vh);
        if (n % 4 == 0) {
            const HomogPoly& f = random_line();
            REQUIRE(valuation(g * h * f, p, 13) == vg + vh + valuation(f, p, 5));
        }
    }
    CHECK(cases >= kCases);
}

TEST_CASE("divisor group laws") {
    int cases = 0;
    for (int n = 0; n < kCases; ++n, ++cases) {
        const Divisor a = random_divisor();
        const Divisor b = random_divisor();
        const Divisor c = random_divisor();
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a + b == b + a);
        REQUIRE((a + -a).is_zero());
        REQUIRE(a + Divisor() == a);
        REQUIRE((a + b).degree() == a.degree() + b.degree());
        REQUIRE((-a).degree() == -a.degree());
        const long m = uniform(-4, 4);
        REQUIRE((m * (a + b)) == m * a + m * b);
        const Automorphism s(random_unit_exponent());
        REQUIRE(galois_image(s, a + b) == galois_image(s, a) + galois_image(s, b));
        REQUIRE(galois_image(s, m * a) == m * galois_image(s, a));
        REQUIRE(galois_image(s, a).degree() == a.degree());
        const Divisor sum = a + b;
        for (const auto& [p, coeff] : sum.terms()) {
            REQUIRE(coeff != 0);
        }
    }
    CHECK(cases >= kCases);
}

TEST_CASE("normalization is invariant under projective scaling") {
    int cases = 0;
    for (int n = 0; n < kCases; ++n, ++cases) {
        const ProjPoint& p = catalog(random_name());
        const CycNum lambda = random_nonzero();
        const ProjPoint scaled(lambda * p.x(), lambda * p.y(), lambda * p.z());
        REQUIRE(scaled == p);
        REQUIRE(ProjPoint(scaled.x(), scaled.y(), scaled.z()) == scaled);
        REQUIRE(on_curve(scaled));
        const Automorphism s(random_unit_exponent());
        const ProjPoint image(s(lambda * p.x()), s(lambda * p.y()), s(lambda * p.z()));
        REQUIRE(galois_image(s, scaled) == image);
        REQUIRE(on_curve(galois_image(s, p)));

        const CycNum x = random_cycnum();
        const CycNum y = random_nonzero();
        const CycNum z = random_cycnum();
        const ProjPoint q(x, y, z);
        REQUIRE(ProjPoint(lambda * x, lambda * y, lambda * z) == q);
    }
    CHECK(cases >= kCases);
}

TEST_CASE("module arithmetic and action matrices are linear") {
    const std::array<ActionMatrix, 2> matrices{
        ActionMatrix(ActionMatrix::Entries{{{2, 1, 0, 0, 3, 0},
                                            {1, 2, 0, 0, 3, 0},
                                            {1, 1, 3, 2, 0, 2},
                                            {1, 3, 0, 3, 0, 0},
                                            {0, 0, 0, 0, 1, 0},
                                            {0, 0, 0, 0, 1, 1}}}),
        ActionMatrix(ActionMatrix::Entries{{{1, 2, 0, 0, 2, 0},
                                            {2, 1, 0, 0, 2, 0},
                                            {2, 2, 3, 0, 0, 0},
                                            {2, 0, 2, 3, 0, 2},
                                            {0, 0, 0, 0, 3, 0},
                                            {0, 0, 0, 0, 0, 1}}})};
    int cases = 0;
    for (int n = 0; n < kCases; ++n, ++cases) {
        const ModElement a = random_element();
        const ModElement b = random_element();
        const long k = uniform(-9, 9);
        REQUIRE(a + b == b + a);
        REQUIRE((a - b) + b == a);
        REQUIRE(mscale(k, a + b) == mscale(k, a) + mscale(k, b));
        REQUIRE(mscale(4, a).is_zero());
        for (const auto& s : matrices) {
            REQUIRE(s.apply(a + b) == s.apply(a) + s.apply(b));
            REQUIRE(s.apply(mscale(k, a)) == mscale(k, s.apply(a)));
        }
    }
    CHECK(cases >= kCases);
}

TEST_CASE("reduction modulo the curve is linear and idempotent") {
    int cases = 0;
    for (int n = 0; n < kCases; ++n, ++cases) {
        const int degree = static_cast<int>(uniform(4, 7));
        const HomogPoly g = random_form(degree);
        const HomogPoly h = random_form(degree);
        const CurveResidue rg = reduce_mod_curve(g);
        REQUIRE(reduce_mod_curve(rg.form) == rg);
        REQUIRE(reduce_mod_curve(g + h).form == rg.form + reduce_mod_curve(h).form);
        REQUIRE(reduce_mod_curve(g + curve_equation() * random_form(degree - 4)).form ==
                rg.form);
    }
    CHECK(cases >= kCases);
}
