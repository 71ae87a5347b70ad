#include "twist/geometry.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace twist {

HomogPoly::HomogPoly(int degree) : degree_(degree) {
    if (degree < 0) {
        throw std::invalid_argument("negative degree");
    }
}

HomogPoly HomogPoly::constant(const CycNum& value) {
    HomogPoly p(0);
    p.set_coefficient({0, 0, 0}, value);
    return p;
}

HomogPoly HomogPoly::monomial(const CycNum& coeff, const Exponent& exponent) {
    HomogPoly p(exponent[0] + exponent[1] + exponent[2]);
    p.set_coefficient(exponent, coeff);
    return p;
}

HomogPoly HomogPoly::variable(int index) {
    Exponent e{0, 0, 0};
    e.at(index) = 1;
    return monomial(CycNum(1), e);
}

CycNum HomogPoly::coefficient(const Exponent& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? CycNum() : it->second;
}

void HomogPoly::set_coefficient(const Exponent& exponent, const CycNum& value) {
    if (exponent[0] < 0 || exponent[1] < 0 || exponent[2] < 0 ||
        exponent[0] + exponent[1] + exponent[2] != degree_) {
        throw std::invalid_argument("exponent does not match form degree");
    }
    if (value.is_zero()) {
        terms_.erase(exponent);
    } else {
        terms_[exponent] = value;
    }
}

CycNum HomogPoly::evaluate(const std::array<CycNum, 3>& point) const {
    std::array<std::vector<CycNum>, 3> powers;
    for (int v = 0; v < 3; ++v) {
        powers[v].reserve(degree_ + 1);
        powers[v].emplace_back(1);
        for (int e = 1; e <= degree_; ++e) {
            powers[v].push_back(powers[v].back() * point[v]);
        }
    }
    CycNum sum;
    for (const auto& [e, c] : terms_) {
        sum += c * powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
    }
    return sum;
}

HomogPoly HomogPoly::derivative(int index) const {
    HomogPoly out(degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [e, c] : terms_) {
        if (e.at(index) == 0) {
            continue;
        }
        Exponent d = e;
        d[index] -= 1;
        out.terms_[d] = c * CycNum(static_cast<long>(e[index]));
    }
    return out;
}

HomogPoly HomogPoly::apply(const Automorphism& s) const {
    HomogPoly out(degree_);
    for (const auto& [e, c] : terms_) {
        out.terms_[e] = s(c);
    }
    return out;
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& rhs) {
    if (rhs.degree_ != degree_) {
        throw std::invalid_argument("adding forms of degree " + std::to_string(degree_) +
                                    " and " + std::to_string(rhs.degree_));
    }
    for (const auto& [e, c] : rhs.terms_) {
        set_coefficient(e, coefficient(e) + c);
    }
    return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& rhs) { return *this += -rhs; }

HomogPoly& HomogPoly::operator*=(const HomogPoly& rhs) {
    HomogPoly out(degree_ + rhs.degree_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            Exponent e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
            out.terms_[e] += c1 * c2;
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return *this = std::move(out);
}

HomogPoly& HomogPoly::operator*=(const CycNum& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

HomogPoly HomogPoly::operator-() const {
    HomogPoly out(*this);
    for (auto& [e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

bool operator==(const HomogPoly& lhs, const HomogPoly& rhs) {
    return lhs.degree_ == rhs.degree_ && lhs.terms_ == rhs.terms_;
}

std::string HomogPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    static constexpr const char* kNames[3] = {"X", "Y", "Z"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += kNames[v];
            if (e[v] > 1) {
                mono += "^" + std::to_string(e[v]);
            }
        }
        bool negative = false;
        std::string coeff;
        if (c.is_rational()) {
            negative = sgn(c.coeff(0)) < 0;
            Rational mag = abs(c.coeff(0));
            if (mag != 1 || mono.empty()) {
                coeff = mag.get_str();
            }
        } else {
            coeff = "(" + c.to_string() + ")";
        }
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        os << coeff;
        if (!coeff.empty() && !mono.empty()) {
            os << "*";
        }
        os << mono;
    }
    return os.str();
}

HomogPoly pow(const HomogPoly& base, int exponent) {
    if (exponent < 0) {
        throw std::invalid_argument("negative power of a form");
    }
    HomogPoly out = HomogPoly::constant(CycNum(1));
    for (int i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

HomogPoly X() { return HomogPoly::variable(0); }
HomogPoly Y() { return HomogPoly::variable(1); }
HomogPoly Z() { return HomogPoly::variable(2); }

const HomogPoly& curve_equation() {
    static const HomogPoly f = pow(X(), 4) + pow(Y(), 4) + pow(Z(), 4);
    return f;
}

ProjPoint::ProjPoint(const CycNum& x, const CycNum& y, const CycNum& z) : coords_{x, y, z} {
    int lead = 0;
    while (lead < 3 && coords_[lead].is_zero()) {
        ++lead;
    }
    if (lead == 3) {
        throw std::invalid_argument("projective point with all coordinates zero");
    }
    chart_ = lead;
    if (!coords_[lead].is_one()) {
        const CycNum scale = coords_[lead].inverse();
        for (int i = lead; i < 3; ++i) {
            coords_[i] *= scale;
        }
    }
}

bool operator==(const ProjPoint& lhs, const ProjPoint& rhs) { return lhs.coords_ == rhs.coords_; }

bool operator<(const ProjPoint& lhs, const ProjPoint& rhs) {
    for (int i = 0; i < 3; ++i) {
        int c = compare(lhs.coords_[i], rhs.coords_[i]);
        if (c != 0) {
            return c < 0;
        }
    }
    return false;
}

std::string ProjPoint::to_string() const {
    return "[" + coords_[0].to_string() + " : " + coords_[1].to_string() + " : " +
           coords_[2].to_string() + "]";
}

CycNum evaluate(const HomogPoly& g, const ProjPoint& p) { return g.evaluate(p.coords()); }

bool on_curve(const ProjPoint& p) { return evaluate(curve_equation(), p).is_zero(); }

bool is_smooth_point(const ProjPoint& p) {
    for (int v = 0; v < 3; ++v) {
        if (!evaluate(curve_equation().derivative(v), p).is_zero()) {
            return true;
        }
    }
    return false;
}

ProjPoint galois_image(const Automorphism& s, const ProjPoint& p) {
    return ProjPoint(s(p.x()), s(p.y()), s(p.z()));
}

namespace {

struct CatalogEntry {
    std::string name;
    ProjPoint point;
};

std::vector<CatalogEntry> build_catalog() {
    const CycNum z8 = zeta(8);
    const CycNum z4 = zeta(4);
    const CycNum z3 = zeta(3);
    const CycNum z3sq = z3 * z3;
    std::vector<CatalogEntry> out;
    for (int i = 0; i < 4; ++i) {
        out.push_back({"A" + std::to_string(i), ProjPoint(0, pow(z4, i), pow(z8, 7))});
    }
    for (int i = 0; i < 4; ++i) {
        out.push_back({"B" + std::to_string(i), ProjPoint(pow(z4, i), 0, pow(z8, 7))});
    }
    for (int i = 0; i < 4; ++i) {
        out.push_back({"C" + std::to_string(i), ProjPoint(z8 * pow(z4, i), 1, 0)});
    }
    const std::array<std::pair<int, int>, 4> signs{{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}};
    for (int i = 0; i < 4; ++i) {
        const CycNum s(static_cast<long>(signs[i].first));
        const CycNum t(static_cast<long>(signs[i].second));
        out.push_back({"T" + std::to_string(i) + "a", ProjPoint(1, s * z3, t * z3sq)});
        out.push_back({"T" + std::to_string(i) + "b", ProjPoint(1, s * z3sq, t * z3)});
    }
    out.push_back({"E+", ProjPoint(1, 0, pow(z8, 3))});
    out.push_back({"E-", ProjPoint(1, 0, pow(z8, 7))});
    for (const auto& entry : out) {
        if (!on_curve(entry.point) || !is_smooth_point(entry.point)) {
            throw std::logic_error("catalog point " + entry.name + " is not a smooth curve point");
        }
    }
    return out;
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

}  // namespace

const ProjPoint& catalog(std::string_view name) {
    for (const auto& entry : catalog_entries()) {
        if (entry.name == name) {
            return entry.point;
        }
    }
    throw std::invalid_argument("unknown catalog point '" + std::string(name) + "'");
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& entry : catalog_entries()) {
            n.push_back(entry.name);
        }
        return n;
    }();
    return names;
}

std::optional<std::string> catalog_name(const ProjPoint& p) {
    for (const auto& entry : catalog_entries()) {
        if (entry.point == p) {
            return entry.name;
        }
    }
    return std::nullopt;
}

std::vector<std::string> zeta8_rational_names() {
    std::vector<std::string> out;
    for (const auto& name : catalog_names()) {
        if (name[0] != 'T') {
            out.push_back(name);
        }
    }
    return out;
}

}  // namespace twist
