#include "twist/dataset.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "twist/brauer.hpp"

namespace twist {

namespace {

ModElement m(long a, long b, long c, long d, long e, long f) {
    return ModElement({a, b, c, d, e, f});
}

std::vector<ProjPoint> points(std::initializer_list<const char*> names) {
    std::vector<ProjPoint> out;
    for (const char* n : names) {
        out.push_back(catalog(n));
    }
    return out;
}

Divisor pt(const char* name, long n = 1) { return Divisor::named_point(name, n); }

HomogPoly one() { return HomogPoly::constant(CycNum(1)); }

std::vector<Certificate> divisor_certificates() {
    const HomogPoly x = X(), y = Y(), z = Z();
    const CycNum c = CycNum::generator_power(5) - CycNum::generator_power(3) - CycNum::generator();
    const HomogPoly conic = x * x + y * y + z * z;
    const HomogPoly l8 = x - zeta(8, 1) * z;
    const Divisor d0 = named_divisor("D0"), d1 = named_divisor("D1"), d2 = named_divisor("D2"),
                  d3 = named_divisor("D3");

    std::vector<Certificate> out;
    out.push_back({"bitangent.2d0", "2 D_0 = div(x + y + z)", 2 * d0, x + y + z, one(),
                   points({"T0a", "T0b"})});
    out.push_back({"bitangent.2d1", "2 D_1 = div(x - y + z)", 2 * d1, x - y + z, one(),
                   points({"T1a", "T1b"})});
    out.push_back({"bitangent.2d2", "2 D_2 = div(x + y - z)", 2 * d2, x + y - z, one(),
                   points({"T2a", "T2b"})});
    out.push_back({"bitangent.2d3", "2 D_3 = div(x - y - z)", 2 * d3, x - y - z, one(),
                   points({"T3a", "T3b"})});
    const auto tangency = points({"T0a", "T0b", "T1a", "T1b", "T2a", "T2b", "T3a", "T3b"});
    out.push_back({"bitangent.conic", "D_0 + D_1 + D_2 + D_3 = div(X^2 + Y^2 + Z^2)",
                   d0 + d1 + d2 + d3, conic, one(), tangency});
    out.push_back({"bitangent.relation",
                   "D_1 + D_2 + D_3 - 3D_0 = div((X^2 + Y^2 + Z^2)/(X + Y + Z)^2)",
                   d1 + d2 + d3 - 3 * d0, conic, pow(x + y + z, 2), tangency});
    out.push_back({"bitangent.class_d1", "D_1 - D_0 = 2B_1 + 2B_2 - 4B_0 + div(...)",
                   d1 - d0 - pt("B1", 2) - pt("B2", 2) + pt("B0", 4), l8 * (x - y + z),
                   conic + c * (y * y - x * z),
                   points({"T0a", "T0b", "T1a", "T1b", "B0", "B1", "B2"})});
    out.push_back({"bitangent.class_d2", "D_2 - D_0 = 2A_1 + 2A_2 + 2B_1 + 2B_2 - 8B_0 + div(...)",
                   d2 - d0 - pt("A1", 2) - pt("A2", 2) - pt("B1", 2) - pt("B2", 2) + pt("B0", 8),
                   l8 * l8 * (x + y - z), conic * (x + y) - c * z * (x * x + x * y + y * y),
                   points({"T0a", "T0b", "T2a", "T2b", "A1", "A2", "B0", "B1", "B2"})});
    out.push_back({"bitangent.class_d3", "D_3 - D_0 = 2A1 + 2A2 - 4B0 + div(...)",
                   d3 - d0 - pt("A1", 2) - pt("A2", 2) + pt("B0", 4), l8 * (x - y - z),
                   (x * x - y * y - CycNum(2) * y * z - z * z) + c * (y * y + y * z + z * z),
                   points({"T0a", "T0b", "T3a", "T3b", "A1", "A2", "B0"})});
    out.push_back({"bitangent.e_cusps", "E = 2B_2 - 2B_0",
                   named_divisor("E") - pt("B2", 2) + pt("B0", 2), one(), one(),
                   points({"B0", "B2"})});
    return out;
}

std::vector<ClassCoordinate> class_coordinates() {
    const Divisor d0 = named_divisor("D0");
    std::vector<ClassCoordinate> out;
    out.push_back({"bitangent.coords_d1", "", "D1 - D0", named_divisor("D1") - d0,
                   pt("B1", 2) + pt("B2", 2) - pt("B0", 4), "bitangent.class_d1",
                   m(0, 0, 2, 2, 0, 0)});
    out.push_back({"bitangent.coords_d2", "", "D2 - D0", named_divisor("D2") - d0,
                   pt("A1", 2) + pt("A2", 2) + pt("B1", 2) + pt("B2", 2) - pt("B0", 8),
                   "bitangent.class_d2", m(2, 2, 2, 2, 0, 0)});
    out.push_back({"bitangent.coords_d3", "", "D3 - D0", named_divisor("D3") - d0,
                   pt("A1", 2) + pt("A2", 2) - pt("B0", 4), "bitangent.class_d3",
                   m(2, 2, 0, 0, 0, 0)});
    out.push_back({"bitangent.coords_e", "", "E", named_divisor("E"), pt("B2", 2) - pt("B0", 2),
                   "bitangent.e_cusps", m(0, 0, 0, 2, 0, 0)});
    for (auto& cc : out) {
        cc.label = cc.target_name + " = " + cc.printed.to_string();
    }
    return out;
}

Dataset build_standard() {
    Dataset ds;
    ds.dictionary = Dictionary::standard();
    ds.s3 = ActionMatrix({{{2, 1, 0, 0, 3, 0},
                           {1, 2, 0, 0, 3, 0},
                           {1, 1, 3, 2, 0, 2},
                           {1, 3, 0, 3, 0, 0},
                           {0, 0, 0, 0, 1, 0},
                           {0, 0, 0, 0, 1, 1}}});
    ds.s5 = ActionMatrix({{{1, 2, 0, 0, 2, 0},
                           {2, 1, 0, 0, 2, 0},
                           {2, 2, 3, 0, 0, 0},
                           {2, 0, 2, 3, 0, 2},
                           {0, 0, 0, 0, 3, 0},
                           {0, 0, 0, 0, 0, 1}}});
    ds.sigma3_table = {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10};
    ds.sigma5_table = {2, 3, 0, 1, 6, 7, 4, 5, 10, 11, 8, 9};
    ds.shifts = {
        {"torsor.shift_sigma5", "sigma_5", sigma5(), m(2, 0, 2, 3, 0, 0)},
        {"torsor.shift_sigma3", "sigma_3", sigma3(), m(3, 3, 2, 3, 0, 0)},
        {"torsor.shift_sigma3_sigma5", "sigma_3 sigma_5", sigma3() * sigma5(),
         m(3, 1, 0, 2, 0, 0)},
    };
    ds.certificates = divisor_certificates();
    for (auto& cert : e_certificates()) {
        ds.certificates.push_back(std::move(cert));
    }
    ds.class_coordinates = class_coordinates();
    return ds;
}

}  // namespace

const Dataset& Dataset::standard() {
    static const Dataset ds = build_standard();
    return ds;
}

const Certificate& Dataset::certificate(std::string_view id) const {
    auto it = std::find_if(certificates.begin(), certificates.end(),
                           [&](const Certificate& c) { return c.id == id; });
    if (it == certificates.end()) {
        throw std::invalid_argument("unknown certificate '" + std::string(id) + "'");
    }
    return *it;
}

Certificate& Dataset::certificate(std::string_view id) {
    return const_cast<Certificate&>(std::as_const(*this).certificate(id));
}

const ClassCoordinate& Dataset::class_coordinate(std::string_view id) const {
    auto it = std::find_if(class_coordinates.begin(), class_coordinates.end(),
                           [&](const ClassCoordinate& c) { return c.id == id; });
    if (it == class_coordinates.end()) {
        throw std::invalid_argument("unknown class coordinate '" + std::string(id) + "'");
    }
    return *it;
}

ActionMatrix Dataset::matrix_for(const Automorphism& s) const {
    switch (s.exponent() % 8) {
        case 3:
            return s3;
        case 5:
            return s5;
        case 7:
            return s3s5();
        default:
            return ActionMatrix::identity();
    }
}

std::vector<std::string> bitangent_certificate_ids() {
    return {"bitangent.2d0",      "bitangent.2d1",      "bitangent.2d2",
            "bitangent.2d3",      "bitangent.conic",    "bitangent.relation",
            "bitangent.class_d1", "bitangent.class_d2", "bitangent.class_d3",
            "bitangent.e_cusps"};
}

}  // namespace twist
