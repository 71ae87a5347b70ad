#include "twist/divisor.hpp"

#include <sstream>
#include <stdexcept>

namespace twist {

Divisor Divisor::point(const ProjPoint& p, long multiplicity) {
    if (!on_curve(p)) {
        throw std::invalid_argument("divisor support point " + p.to_string() +
                                    " is not on the curve");
    }
    Divisor d;
    d.add_term(p, multiplicity);
    return d;
}

Divisor Divisor::named_point(std::string_view name, long multiplicity) {
    return point(catalog(name), multiplicity);
}

void Divisor::add_term(const ProjPoint& p, long n) {
    if (n == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(p, n);
    if (!inserted) {
        it->second += n;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

long Divisor::degree() const {
    long total = 0;
    for (const auto& [p, n] : terms_) {
        total += n;
    }
    return total;
}

long Divisor::coefficient(const ProjPoint& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

std::vector<ProjPoint> Divisor::support() const {
    std::vector<ProjPoint> out;
    out.reserve(terms_.size());
    for (const auto& [p, n] : terms_) {
        out.push_back(p);
    }
    return out;
}

Divisor& Divisor::operator+=(const Divisor& rhs) {
    for (const auto& [p, n] : rhs.terms_) {
        add_term(p, n);
    }
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& rhs) {
    for (const auto& [p, n] : rhs.terms_) {
        add_term(p, -n);
    }
    return *this;
}

Divisor operator*(long n, const Divisor& d) {
    Divisor out;
    if (n == 0) {
        return out;
    }
    for (const auto& [p, m] : d.terms_) {
        out.terms_.emplace(p, n * m);
    }
    return out;
}

std::string Divisor::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, n] : terms_) {
        const auto name = catalog_name(p);
        const std::string label = name ? *name : p.to_string();
        const long mag = n < 0 ? -n : n;
        if (first) {
            os << (n < 0 ? "-" : "");
        } else {
            os << (n < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1) {
            os << mag << "*";
        }
        os << label;
    }
    return os.str();
}

Divisor galois_image(const Automorphism& s, const Divisor& d) {
    Divisor out;
    for (const auto& [p, n] : d.terms()) {
        out += Divisor::point(galois_image(s, p), n);
    }
    return out;
}

Divisor named_divisor(std::string_view name) {
    auto pt = [](std::string_view n, long m = 1) { return Divisor::named_point(n, m); };
    if (name.size() == 2 && name[0] == 'D' && name[1] >= '0' && name[1] <= '3') {
        const std::string base = std::string("T") + name[1];
        return pt(base + "a") + pt(base + "b");
    }
    if (name == "E") {
        return pt("E+", 2) - pt("E-", 2);
    }
    if (name == "e1") return pt("A1") - pt("B0");
    if (name == "e2") return pt("A2") - pt("B0");
    if (name == "e3") return pt("B1") - pt("B0");
    if (name == "e4") return pt("B2") - pt("B0");
    if (name == "e5") return pt("C1") - pt("B0");
    if (name == "e6") {
        return pt("A1") + pt("B1") + pt("C1") + pt("A2") + pt("B2") + pt("C2") - pt("B0", 6);
    }
    throw std::invalid_argument("unknown divisor '" + std::string(name) + "'");
}

}  // namespace twist
