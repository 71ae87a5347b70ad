#include "doctest.h"
#include "support.hpp"
#include "twist/dataset.hpp"
#include "twist/valuation.hpp"

using namespace twist;
using twist::testing::line_multiplicity;
using twist::testing::linear_form;

namespace {

std::vector<ProjPoint> points(std::initializer_list<const char*> names) {
    std::vector<ProjPoint> out;
    for (const char* n : names) {
        out.push_back(catalog(n));
    }
    return out;
}

/// binom(1/4, k) as a rational.
Rational quarter_binomial(int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (make_rational(1, 4) - i) / Rational(i + 1);
    }
    return r;
}

}  // namespace

TEST_CASE("branch at B0 matches the binomial series") {
    // chart x = 1: z^4 = -(1 + y^4), so z = z8^7 (1 + y^4)^(1/4)
    const BranchExpansion b = expand_branch(catalog("B0"), 13);
    REQUIRE(b.chart == 0);
    REQUIRE(b.parameter == 1);
    REQUIRE(b.dependent == 2);
    REQUIRE(b.series.size() == 13);
    for (int i = 0; i < 13; ++i) {
        CAPTURE(i);
        const CycNum expected =
            i % 4 == 0 ? zeta(8, 7) * CycNum(quarter_binomial(i / 4)) : CycNum(0);
        CHECK(b.series[i] == expected);
    }
    CHECK(b.series[4] == -CycNum(1) / (CycNum(4) * zeta(8, 21)));
}

TEST_CASE("branch at a tangency point") {
    const BranchExpansion b = expand_branch(catalog("T0a"), 6);
    CHECK(b.chart == 0);
    CHECK(b.series[0] == b.center[b.dependent]);
    CHECK(b.series[0] == (b.dependent == 2 ? zeta(3, 2) : zeta(3)));
}

TEST_CASE("branches satisfy the curve equation") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const BranchExpansion b = expand_branch(catalog(name), 9);
        const Series r = compose(curve_equation(), b);
        for (const auto& c : r) {
            CHECK(c.is_zero());
        }
    }
    CHECK_THROWS_AS(expand_branch(ProjPoint(1, 1, 1), 5), std::invalid_argument);
}

TEST_CASE("valuations of lines") {
    CHECK(valuation(X() + Y() + Z(), ProjPoint(1, zeta(3), zeta(3, 2)), 9) == 2);
    CHECK(valuation(X() - zeta(8) * Z(), catalog("B0"), 9) == 4);
    CHECK(valuation(X(), ProjPoint(0, 1, zeta(8, 7)), 9) == 1);
    CHECK(valuation(Y(), catalog("B0"), 9) == 1);
    CHECK(valuation(Z(), catalog("C0"), 9) == 1);
    CHECK(valuation(X() + Y(), catalog("B0"), 9) == 0);
    CHECK_THROWS_AS(valuation(curve_equation(), catalog("A0"), 17), ExcessiveVanishing);
}

TEST_CASE("line valuations agree with the restriction oracle") {
    // every line through a catalog point and a second catalog point
    const auto& names = catalog_names();
    int compared = 0;
    for (const auto& a : names) {
        for (const auto& b : names) {
            const ProjPoint& p = catalog(a);
            const ProjPoint& q = catalog(b);
            if (p == q) {
                continue;
            }
            const std::array<CycNum, 3> l{p.y() * q.z() - p.z() * q.y(),
                                          p.z() * q.x() - p.x() * q.z(),
                                          p.x() * q.y() - p.y() * q.x()};
            CAPTURE(a);
            CAPTURE(b);
            CHECK(valuation(linear_form(l), p, 5) == line_multiplicity(l, p));
            ++compared;
        }
    }
    CHECK(compared > 400);
    // tangent lines
    for (int i = 1; i <= 7; i += 2) {
        const std::array<CycNum, 3> l{1, 0, -zeta(8, i)};
        const ProjPoint p(1, 0, zeta(8, -i));
        if (on_curve(p)) {
            CHECK(valuation(linear_form(l), p, 5) == line_multiplicity(l, p));
        }
    }
}

TEST_CASE("principal divisor on a support list") {
    const auto d0pts = points({"T0a", "T0b"});
    const PrincipalDivisor l0 = principal_divisor_on_support(X() + Y() + Z(), d0pts);
    CHECK(l0.complete);
    CHECK(l0.divisor == 2 * named_divisor("D0"));

    const auto tangency = points({"T0a", "T0b", "T1a", "T1b", "T2a", "T2b", "T3a", "T3b"});
    const HomogPoly conic = X() * X() + Y() * Y() + Z() * Z();
    const PrincipalDivisor q = principal_divisor_on_support(conic, tangency);
    CHECK(q.complete);
    CHECK(q.divisor == named_divisor("D0") + named_divisor("D1") + named_divisor("D2") +
                           named_divisor("D3"));

    const auto one = points({"T0a"});
    const PrincipalDivisor partial = principal_divisor_on_support(X() + Y() + Z(), one);
    CHECK_FALSE(partial.complete);
    CHECK(partial.divisor == Divisor::named_point("T0a", 2));

    const auto twice = points({"T0a", "T0a"});
    CHECK_THROWS_AS(principal_divisor_on_support(X(), twice), std::invalid_argument);
}

TEST_CASE("certificates") {
    const Dataset& ds = Dataset::standard();
    const Certificate& c = ds.certificate("bitangent.class_d1");
    const HomogPoly g = (X() - zeta(8) * Z()) * (X() - Y() + Z());
    const CycNum c5 = CycNum::generator_power(5) - CycNum::generator_power(3) -
                      CycNum::generator_power(1);
    const HomogPoly h = X() * X() + Y() * Y() + Z() * Z() + c5 * (Y() * Y() - X() * Z());
    CHECK(c.numerator == g);
    CHECK(c.denominator == h);
    const auto support = points({"T0a", "T0b", "T1a", "T1b", "B0", "B1", "B2"});
    const Divisor claimed = named_divisor("D1") - named_divisor("D0") -
                            2 * Divisor::named_point("B1") - 2 * Divisor::named_point("B2") +
                            4 * Divisor::named_point("B0");
    const CertificateCheck ok = verify_certificate(claimed, g, h, support);
    CHECK(ok.passed());
    CHECK(ok.numerator_total == 8);
    CHECK(ok.denominator_total == 8);

    const CertificateCheck bad =
        verify_certificate(named_divisor("D1") - named_divisor("D0"), g, h, support);
    CHECK(bad.outcome == CertificateOutcome::mismatch);
    int differing = 0;
    for (const auto& entry : bad.ledger) {
        if (entry.numerator_order - entry.denominator_order != entry.claimed) {
            ++differing;
            const auto name = catalog_name(entry.point);
            REQUIRE(name);
            CHECK((*name == "B0" || *name == "B1" || *name == "B2"));
        }
    }
    CHECK(differing == 3);

    const auto e_support = points({"E+", "E-"});
    const CertificateCheck e2 = verify_certificate(2 * named_divisor("E"),
                                                   X() - zeta(8, 5) * Z(), X() - zeta(8) * Z(),
                                                   e_support);
    CHECK(e2.passed());

    const auto short_support = points({"T0a", "T0b", "B0"});
    CHECK(verify_certificate(claimed, g, h, short_support).outcome ==
          CertificateOutcome::incomplete_support);
    CHECK_THROWS_AS(verify_certificate(claimed, X(), X() * Y(), support), std::invalid_argument);
}

TEST_CASE("every dataset certificate passes with a complete ledger") {
    for (const auto& cert : Dataset::standard().certificates) {
        CAPTURE(cert.id);
        const CertificateCheck check = cert.verify();
        CHECK(check.passed());
        CHECK(check.numerator_total == check.numerator_expected);
        CHECK(check.denominator_total == check.denominator_expected);
        CHECK(check.ledger.size() == cert.support.size());
    }
}

TEST_CASE("bezout exactness of every certificate form") {
    for (const auto& cert : Dataset::standard().certificates) {
        for (const HomogPoly* g : {&cert.numerator, &cert.denominator}) {
            if (g->degree() == 0) {
                continue;
            }
            CAPTURE(cert.id);
            const PrincipalDivisor pd = principal_divisor_on_support(*g, cert.support);
            CHECK(pd.complete);
            CHECK(pd.divisor.degree() == 4 * g->degree());
        }
    }
    const auto b = points({"B0", "B1", "B2", "B3"});
    for (int i = 1; i <= 7; i += 2) {
        const PrincipalDivisor pd = principal_divisor_on_support(X() - zeta(8, i) * Z(), b);
        CHECK(pd.complete);
        CHECK(pd.divisor.support().size() == 1);
    }
    CHECK(principal_divisor_on_support(Y() * Y(), b).complete);
}

TEST_CASE("valuations are galois equivariant on the certificate suite") {
    for (const auto& cert : Dataset::standard().certificates) {
        for (int k : unit_exponents()) {
            const Automorphism s(k);
            for (const auto& p : cert.support) {
                const int bound = bezout_bound(cert.numerator.degree());
                CHECK(valuation(cert.numerator.apply(s), galois_image(s, p), bound) ==
                      valuation(cert.numerator, p, bound));
            }
        }
    }
}

TEST_CASE("ledger text") {
    const CertificateCheck check = Dataset::standard().certificate("brauer.2e").verify();
    const std::string text = check.ledger_text();
    CHECK(text.find("B2: 4 - 0 = 4") != std::string::npos);
    CHECK(text.find("pass") != std::string::npos);
}
