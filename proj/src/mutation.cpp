#include "twist/mutation.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace twist {

namespace {

using nlohmann::json;

void mutate_dictionary(Dataset& ds, const json& m) {
    const auto values = m.at("value").get<std::vector<long>>();
    if (values.size() != 6) {
        throw std::invalid_argument("dictionary value needs 6 coordinates");
    }
    std::array<long, 6> coords{};
    std::copy(values.begin(), values.end(), coords.begin());
    ds.dictionary.entry(m.at("entry").get<std::string>()) = ModElement(coords);
}

void mutate_matrix(Dataset& ds, const json& m) {
    const auto name = m.at("matrix").get<std::string>();
    ActionMatrix* target = name == "s3" ? &ds.s3 : name == "s5" ? &ds.s5 : nullptr;
    if (!target) {
        throw std::invalid_argument("unknown matrix '" + name + "'");
    }
    const int row = m.at("row").get<int>();
    const int col = m.at("column").get<int>();
    if (row < 1 || row > 6 || col < 1 || col > 6) {
        throw std::invalid_argument("matrix position out of range");
    }
    target->set_entry(row - 1, col - 1, m.at("value").get<int>());
}

void mutate_certificate(Dataset& ds, const json& m) {
    Certificate& cert = ds.certificate(m.at("id").get<std::string>());
    const auto part = m.at("part").get<std::string>();
    HomogPoly* form = part == "numerator"     ? &cert.numerator
                      : part == "denominator" ? &cert.denominator
                                              : nullptr;
    if (!form) {
        throw std::invalid_argument("unknown certificate part '" + part + "'");
    }
    const auto e = m.at("exponent").get<std::vector<int>>();
    const auto c = m.at("coefficient").get<std::vector<std::string>>();
    if (e.size() != 3 || c.size() != CycNum::kDegree) {
        throw std::invalid_argument("certificate mutation needs 3 exponents and 8 coefficients");
    }
    CycNum::Coefficients coeffs;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        coeffs[i] = parse_rational(c[i]);
    }
    form->set_coefficient({e[0], e[1], e[2]}, CycNum(coeffs));
}

}  // namespace

Dataset apply_mutation(Dataset ds, const std::string& json_text) {
    try {
        const json m = json::parse(json_text);
        const auto kind = m.at("kind").get<std::string>();
        if (kind == "dictionary") {
            mutate_dictionary(ds, m);
        } else if (kind == "matrix") {
            mutate_matrix(ds, m);
        } else if (kind == "certificate") {
            mutate_certificate(ds, m);
        } else {
            throw std::invalid_argument("unknown mutation kind '" + kind + "'");
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed mutation: ") + e.what());
    }
    return ds;
}

Dataset apply_mutation_file(const Dataset& ds, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read mutation file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return apply_mutation(ds, text.str());
}

}  // namespace twist
