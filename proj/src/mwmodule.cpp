#include "twist/mwmodule.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "twist/geometry.hpp"

namespace twist {

namespace {

int reduce(long value, int modulus) {
    long r = value % modulus;
    return static_cast<int>(r < 0 ? r + modulus : r);
}

constexpr std::array<const char*, 3> kFamilyNames{"A", "B", "C"};

}  // namespace

ModElement::ModElement(const std::array<long, 6>& coords) {
    for (std::size_t i = 0; i < 6; ++i) {
        c_[i] = reduce(coords[i], kModuli[i]);
    }
}

ModElement ModElement::basis(int i) {
    if (i < 1 || i > 6) {
        throw std::out_of_range("basis index " + std::to_string(i) + " outside 1..6");
    }
    std::array<long, 6> c{};
    c[i - 1] = 1;
    return ModElement(c);
}

ModElement& ModElement::operator+=(const ModElement& rhs) {
    for (std::size_t i = 0; i < 6; ++i) {
        c_[i] = reduce(c_[i] + rhs.c_[i], kModuli[i]);
    }
    return *this;
}

ModElement& ModElement::operator-=(const ModElement& rhs) {
    for (std::size_t i = 0; i < 6; ++i) {
        c_[i] = reduce(c_[i] - rhs.c_[i], kModuli[i]);
    }
    return *this;
}

ModElement ModElement::operator-() const { return ModElement() - *this; }

ModElement operator*(long n, const ModElement& a) {
    std::array<long, 6> c{};
    for (std::size_t i = 0; i < 6; ++i) {
        c[i] = reduce(n, kModuli[i]) * static_cast<long>(a.c_[i]);
    }
    return ModElement(c);
}

std::string ModElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < 6; ++i) {
        if (c_[i] == 0) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        if (c_[i] != 1) {
            os << c_[i];
        }
        os << "e_" << (i + 1);
    }
    return first ? "0" : os.str();
}

ModElement madd(const ModElement& a, const ModElement& b) { return a + b; }
ModElement mscale(long n, const ModElement& a) { return n * a; }

const std::vector<ModElement>& all_elements() {
    static const std::vector<ModElement> elements = [] {
        std::vector<ModElement> out;
        out.reserve(kModuleOrder);
        std::array<long, 6> c{};
        // Odometer over the coordinates, last coordinate fastest.
        while (true) {
            out.emplace_back(c);
            int i = 5;
            while (i >= 0 && ++c[i] == kModuli[i]) {
                c[i] = 0;
                --i;
            }
            if (i < 0) {
                break;
            }
        }
        return out;
    }();
    return elements;
}

ActionMatrix::ActionMatrix(const Entries& rows) : rows_(rows) {}

ActionMatrix ActionMatrix::identity() {
    Entries rows{};
    for (int i = 0; i < 6; ++i) {
        rows[i][i] = 1;
    }
    return ActionMatrix(rows);
}

ActionMatrix ActionMatrix::from_columns(const std::array<ModElement, 6>& columns) {
    Entries rows{};
    for (int j = 0; j < 6; ++j) {
        for (int i = 0; i < 6; ++i) {
            rows[i][j] = columns[j][i];
        }
    }
    return ActionMatrix(rows);
}

void ActionMatrix::set_entry(int row, int col, int value) {
    if (row < 0 || row >= 6 || col < 0 || col >= 6) {
        throw std::out_of_range("matrix index outside 6x6");
    }
    rows_[row][col] = value;
}

ModElement ActionMatrix::column(int j) const {
    std::array<long, 6> c{};
    for (int i = 0; i < 6; ++i) {
        c[i] = rows_[i][j];
    }
    return ModElement(c);
}

ModElement ActionMatrix::apply(const ModElement& m) const {
    std::array<long, 6> c{};
    for (int i = 0; i < 6; ++i) {
        long acc = 0;
        for (int j = 0; j < 6; ++j) {
            acc += static_cast<long>(rows_[i][j]) * m[j];
        }
        c[i] = acc;
    }
    return ModElement(c);
}

bool ActionMatrix::well_defined() const {
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            if ((static_cast<long>(kModuli[j]) * rows_[i][j]) % kModuli[i] != 0) {
                return false;
            }
        }
    }
    return true;
}

ActionMatrix operator*(const ActionMatrix& a, const ActionMatrix& b) {
    std::array<ModElement, 6> columns;
    for (int j = 0; j < 6; ++j) {
        columns[j] = a.apply(b.column(j));
    }
    return ActionMatrix::from_columns(columns);
}

bool operator==(const ActionMatrix& a, const ActionMatrix& b) {
    for (int j = 0; j < 6; ++j) {
        if (a.column(j) != b.column(j)) {
            return false;
        }
    }
    return true;
}

std::string ActionMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < 6; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < 6; ++j) {
            os << (j == 0 ? "" : " ") << rows_[i][j];
        }
        os << (i == 5 ? "]" : ";");
    }
    return os.str();
}

ModElement apply_matrix(const ActionMatrix& s, const ModElement& m) { return s.apply(m); }

Cusp Cusp::from_ordinal(int ordinal) {
    if (ordinal < 0 || ordinal >= 12) {
        throw std::out_of_range("cusp ordinal " + std::to_string(ordinal));
    }
    return Cusp{static_cast<CuspFamily>(ordinal / 4), ordinal % 4};
}

std::string Cusp::name() const {
    return kFamilyNames[static_cast<int>(family)] + std::to_string(index);
}

std::optional<Cusp> cusp_of(const ProjPoint& p) {
    for (int k = 0; k < 12; ++k) {
        const Cusp c = Cusp::from_ordinal(k);
        if (catalog(c.name()) == p) {
            return c;
        }
    }
    return std::nullopt;
}

CuspPermutation identity_permutation() {
    CuspPermutation perm{};
    for (int k = 0; k < 12; ++k) {
        perm[k] = k;
    }
    return perm;
}

CuspPermutation cusp_permutation(const Automorphism& s) {
    CuspPermutation perm{};
    for (int k = 0; k < 12; ++k) {
        const Cusp c = Cusp::from_ordinal(k);
        const auto image = cusp_of(galois_image(s, catalog(c.name())));
        if (!image) {
            throw std::logic_error("image of " + c.name() + " is not a cusp");
        }
        perm[k] = image->ordinal();
    }
    return perm;
}

const ModElement& Dictionary::operator[](const Cusp& c) const {
    switch (c.family) {
        case CuspFamily::A:
            return alpha.at(c.index);
        case CuspFamily::B:
            return beta.at(c.index);
        case CuspFamily::C:
            break;
    }
    return gamma.at(c.index);
}

ModElement& Dictionary::operator[](const Cusp& c) {
    return const_cast<ModElement&>(std::as_const(*this)[c]);
}

Dictionary Dictionary::standard() {
    auto m = [](long a, long b, long c, long d, long e, long f) {
        return ModElement({a, b, c, d, e, f});
    };
    Dictionary dict;
    dict.alpha = {m(2, 1, 2, 1, 0, 0), m(1, 0, 0, 0, 0, 0), m(0, 1, 0, 0, 0, 0),
                  m(1, 2, 2, 3, 0, 0)};
    dict.beta = {m(0, 0, 0, 0, 0, 0), m(0, 0, 1, 0, 0, 0), m(0, 0, 0, 1, 0, 0),
                 m(0, 0, 3, 3, 0, 0)};
    dict.gamma = {m(3, 3, 1, 0, 1, 1), m(0, 0, 0, 0, 1, 0), m(3, 3, 3, 3, 3, 1),
                  m(2, 2, 0, 1, 3, 0)};
    return dict;
}

std::vector<std::string> Dictionary::entry_names() {
    std::vector<std::string> out;
    for (const char* family : {"alpha", "beta", "gamma"}) {
        for (int i = 0; i < 4; ++i) {
            out.push_back(std::string(family) + "_" + std::to_string(i));
        }
    }
    return out;
}

ModElement& Dictionary::entry(std::string_view name) {
    return const_cast<ModElement&>(std::as_const(*this).entry(name));
}

const ModElement& Dictionary::entry(std::string_view name) const {
    const auto names = entry_names();
    for (int k = 0; k < 12; ++k) {
        if (names[k] == name) {
            return (*this)[Cusp::from_ordinal(k)];
        }
    }
    throw std::invalid_argument("unknown dictionary entry '" + std::string(name) + "'");
}

ModElement cusp_class(const CuspDivisor& d, const Dictionary& dict) {
    long degree = 0;
    ModElement out;
    for (int k = 0; k < 12; ++k) {
        degree += d[k];
        out += d[k] * dict[Cusp::from_ordinal(k)];
    }
    if (degree != 0) {
        throw std::invalid_argument("cusp divisor has degree " + std::to_string(degree));
    }
    return out;
}

ModElement cusp_class(const Divisor& d, const Dictionary& dict) {
    CuspDivisor coeffs{};
    for (const auto& [p, n] : d.terms()) {
        const auto c = cusp_of(p);
        if (!c) {
            throw std::invalid_argument("support point " + p.to_string() + " is not a cusp");
        }
        coeffs[c->ordinal()] += n;
    }
    return cusp_class(coeffs, dict);
}

std::array<CuspDivisor, 6> basis_divisors() {
    constexpr int A1 = 1, A2 = 2, B0 = 4, B1 = 5, B2 = 6, C1 = 9, C2 = 10;
    std::array<CuspDivisor, 6> out{};
    const std::array<int, 5> tops{A1, A2, B1, B2, C1};
    for (int j = 0; j < 5; ++j) {
        out[j][tops[j]] = 1;
        out[j][B0] = -1;
    }
    for (int k : {A1, B1, C1, A2, B2, C2}) {
        out[5][k] = 1;
    }
    out[5][B0] = -6;
    return out;
}

ActionMatrix derive_action_matrix(const CuspPermutation& perm, const Dictionary& dict) {
    const auto basis = basis_divisors();
    std::array<ModElement, 6> columns;
    for (int j = 0; j < 6; ++j) {
        CuspDivisor image{};
        for (int k = 0; k < 12; ++k) {
            image[perm[k]] += basis[j][k];
        }
        columns[j] = cusp_class(image, dict);
    }
    return ActionMatrix::from_columns(columns);
}

ModSet fixed_submodule(std::span<const ActionMatrix> matrices) {
    ModSet out;
    for (const auto& m : all_elements()) {
        bool fixed = true;
        for (const auto& s : matrices) {
            if (s.apply(m) != m) {
                fixed = false;
                break;
            }
        }
        if (fixed) {
            out.insert(m);
        }
    }
    return out;
}

ModSet image_submodule(const ActionMatrix& s) {
    ModSet out;
    for (const auto& m : all_elements()) {
        out.insert(s.apply(m) - m);
    }
    return out;
}

ModSet multiples(long n) {
    ModSet out;
    for (const auto& m : all_elements()) {
        out.insert(n * m);
    }
    return out;
}

std::optional<ModElement> pic1_fixed_point(const ActionMatrix& s, const ModElement& shift) {
    const ModElement target = -shift;
    for (const auto& m : all_elements()) {
        if (s.apply(m) - m == target) {
            return m;
        }
    }
    return std::nullopt;
}

bool pic1_has_fixed_point(const ActionMatrix& s, const ModElement& shift) {
    return pic1_fixed_point(s, shift).has_value();
}

ModSet subgroup_generated(std::span<const ModElement> generators) {
    ModSet out{ModElement()};
    std::vector<ModElement> frontier{ModElement()};
    while (!frontier.empty()) {
        std::vector<ModElement> next;
        for (const auto& x : frontier) {
            for (const auto& g : generators) {
                const ModElement y = x + g;
                if (out.insert(y).second) {
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace twist
