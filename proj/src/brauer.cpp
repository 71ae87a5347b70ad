#include "twist/brauer.hpp"

#include <stdexcept>

namespace twist {

namespace {

HomogPoly linear(long k) { return X() - zeta(8, k) * Z(); }

int index_of(const Automorphism& s, const std::array<Automorphism, 2>& group) {
    for (int i = 0; i < 2; ++i) {
        if (group[i] == s) {
            return i;
        }
    }
    throw std::logic_error("automorphism outside the real Galois group");
}

}  // namespace

CurveResidue reduce_mod_curve(const HomogPoly& g) {
    HomogPoly out(g.degree());
    HomogPoly pending = g;
    while (!pending.is_zero()) {
        HomogPoly next(g.degree());
        for (const auto& [e, c] : pending.terms()) {
            if (e[0] < 4) {
                out += HomogPoly::monomial(c, e);
                continue;
            }
            next -= HomogPoly::monomial(c, {e[0] - 4, e[1] + 4, e[2]});
            next -= HomogPoly::monomial(c, {e[0] - 4, e[1], e[2] + 4});
        }
        pending = std::move(next);
    }
    return CurveResidue{out};
}

HomogPoly product_of_linear_forms() { return linear(1) * linear(3) * linear(5) * linear(7); }

CycNum scalar_ratio_mod_curve(const HomogPoly& num, const HomogPoly& den) {
    if (num.degree() != den.degree()) {
        throw std::invalid_argument("ratio of forms of different degrees");
    }
    const CurveResidue rn = reduce_mod_curve(num);
    const CurveResidue rd = reduce_mod_curve(den);
    if (rd.is_zero()) {
        throw std::domain_error("denominator vanishes on the curve");
    }
    const auto& [lead, lead_coeff] = *rd.form.terms().begin();
    const CycNum lambda = rn.form.coefficient(lead) / lead_coeff;
    if (!(rn.form == lambda * rd.form)) {
        throw std::domain_error("ratio " + num.to_string() + " / " + den.to_string() +
                                " is not constant on the curve");
    }
    return lambda;
}

RationalForm RationalForm::one() {
    return {HomogPoly::constant(CycNum(1)), HomogPoly::constant(CycNum(1))};
}

RationalForm RationalForm::apply(const Automorphism& s) const {
    return {numerator.apply(s), denominator.apply(s)};
}

RationalForm operator*(const RationalForm& a, const RationalForm& b) {
    return {a.numerator * b.numerator, a.denominator * b.denominator};
}

RationalForm unit_u_tau() { return {pow(Y(), 2), linear(1) * linear(3)}; }

std::array<Automorphism, 2> real_galois_group() {
    return {Automorphism::identity(), complex_conjugation()};
}

CocycleTable two_cocycle(const RationalForm& u_tau) {
    const auto group = real_galois_group();
    const std::array<RationalForm, 2> u{RationalForm::one(), u_tau};
    CocycleTable a;
    for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
            const int st = index_of(group[s] * group[t], group);
            const RationalForm lhs = u[s] * u[t].apply(group[s]);
            // lhs / u_st as a single quotient of forms.
            a[s][t] = scalar_ratio_mod_curve(lhs.numerator * u[st].denominator,
                                             lhs.denominator * u[st].numerator);
        }
    }
    return a;
}

bool satisfies_cocycle_identity(const CocycleTable& a) {
    const auto group = real_galois_group();
    for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
            for (int u = 0; u < 2; ++u) {
                const int st = index_of(group[s] * group[t], group);
                const int tu = index_of(group[t] * group[u], group);
                if (!(a[s][t] * a[st][u] == group[s](a[t][u]) * a[s][tu])) {
                    return false;
                }
            }
        }
    }
    return true;
}

CycNum cocycle_tau_tau() { return two_cocycle(unit_u_tau())[1][1]; }

std::vector<Certificate> e_certificates() {
    const Divisor e = named_divisor("E");
    const Divisor e3 = galois_image(sigma3(), e);
    std::vector<ProjPoint> b_points;
    for (const char* name : {"B0", "B1", "B2", "B3"}) {
        b_points.push_back(catalog(name));
    }
    std::vector<Certificate> out;
    out.push_back({"brauer.2e", "2E = div((X - z8^5 * Z)/(X - z8 * Z)", 2 * e, linear(5),
                   linear(1), {catalog("E+"), catalog("E-")}});
    out.push_back({"brauer.e_plus_sigma3_e",
                   "E + sigma_3(E) = div(Y^2/((X - z8 * Z) * (X - z8^3 * Z)))", e + e3,
                   pow(Y(), 2), linear(1) * linear(3), b_points});
    out.push_back({"brauer.e_minus_sigma3_e",
                   "E - sigma_3(E) = div(Y^2/((X - z8 * Z) * (X - z8^7 * Z)))", e - e3,
                   pow(Y(), 2), linear(1) * linear(7), b_points});
    return out;
}

bool sigma5_negates_e() {
    const Divisor e = named_divisor("E");
    return galois_image(sigma5(), e) == -e;
}

}  // namespace twist
