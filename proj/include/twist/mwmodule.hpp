#pragma once

// The module M = (Z/4)^5 + (Z/2) with basis e_1..e_6 that models the
// Mordell-Weil group of the Jacobian over Q(zeta_8), the dictionary expressing
// the cusp classes alpha_i = [A_i - B_0], beta_i = [B_i - B_0],
// gamma_i = [C_i - B_0] in that basis, and the Galois action on M.
//
// All kernel, image, and torsor questions are answered by enumerating the
// 2048 elements of M.

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twist/divisor.hpp"
#include "twist/numfield.hpp"

namespace twist {

inline constexpr std::array<int, 6> kModuli{4, 4, 4, 4, 4, 2};
inline constexpr std::size_t kModuleOrder = 4 * 4 * 4 * 4 * 4 * 2;

class ModElement {
   public:
    ModElement() = default;
    /// Coordinates are reduced modulo (4, 4, 4, 4, 4, 2).
    explicit ModElement(const std::array<long, 6>& coords);

    /// e_i for i = 1..6. Throws std::out_of_range otherwise.
    static ModElement basis(int i);

    int operator[](std::size_t i) const { return c_[i]; }
    const std::array<int, 6>& coords() const { return c_; }
    bool is_zero() const { return *this == ModElement(); }

    ModElement& operator+=(const ModElement& rhs);
    ModElement& operator-=(const ModElement& rhs);
    friend ModElement operator+(ModElement a, const ModElement& b) { return a += b; }
    friend ModElement operator-(ModElement a, const ModElement& b) { return a -= b; }
    ModElement operator-() const;
    friend ModElement operator*(long n, const ModElement& a);

    friend auto operator<=>(const ModElement&, const ModElement&) = default;

    /// e.g. "2e_1 + e_2 + 3e_4"; "0" for zero.
    std::string to_string() const;

   private:
    std::array<int, 6> c_{};
};

using ModSet = std::set<ModElement>;

ModElement madd(const ModElement& a, const ModElement& b);
ModElement mscale(long n, const ModElement& a);

/// Every element of M in lexicographic order.
const std::vector<ModElement>& all_elements();

/// Integer matrix acting on M; row i is read modulo the i-th modulus.
class ActionMatrix {
   public:
    using Entries = std::array<std::array<int, 6>, 6>;

    ActionMatrix() = default;
    explicit ActionMatrix(const Entries& rows);
    static ActionMatrix identity();
    static ActionMatrix from_columns(const std::array<ModElement, 6>& columns);

    const Entries& rows() const { return rows_; }
    int entry(int row, int col) const { return rows_[row][col]; }
    void set_entry(int row, int col, int value);

    /// Image of e_{j+1}.
    ModElement column(int j) const;
    ModElement apply(const ModElement& m) const;

    /// True iff the matrix defines an endomorphism of M: the column of a
    /// source of order 2 must be killed by 2.
    bool well_defined() const;

    /// (a * b)(m) = a(b(m)), built column by column.
    friend ActionMatrix operator*(const ActionMatrix& a, const ActionMatrix& b);
    /// Entrywise equality modulo the target moduli.
    friend bool operator==(const ActionMatrix& a, const ActionMatrix& b);

    std::string to_string() const;

   private:
    Entries rows_{};
};

ModElement apply_matrix(const ActionMatrix& s, const ModElement& m);

// Cusps A0..A3, B0..B3, C0..C3 are numbered 0..11 in that order.
enum class CuspFamily { A, B, C };

struct Cusp {
    CuspFamily family;
    int index;  ///< 0..3

    int ordinal() const { return static_cast<int>(family) * 4 + index; }
    static Cusp from_ordinal(int ordinal);
    std::string name() const;  ///< "A0" .. "C3"
    friend bool operator==(const Cusp&, const Cusp&) = default;
};

/// The cusp whose catalog point equals p, if any.
std::optional<Cusp> cusp_of(const ProjPoint& p);

/// Image ordinal of each cusp ordinal.
using CuspPermutation = std::array<int, 12>;

CuspPermutation identity_permutation();

/// Computes the permutation induced by an automorphism from the points
/// themselves. Throws std::logic_error if some cusp is not mapped to a cusp.
CuspPermutation cusp_permutation(const Automorphism& s);

/// Coefficients of a divisor supported on the cusps, indexed by ordinal.
using CuspDivisor = std::array<long, 12>;

struct Dictionary {
    std::array<ModElement, 4> alpha;
    std::array<ModElement, 4> beta;
    std::array<ModElement, 4> gamma;

    const ModElement& operator[](const Cusp& c) const;
    ModElement& operator[](const Cusp& c);

    /// The expansions of alpha_i, beta_i, gamma_i in e_1..e_6 as published.
    static Dictionary standard();

    /// Entry name is "alpha_0" .. "gamma_3". Throws std::invalid_argument.
    ModElement& entry(std::string_view name);
    const ModElement& entry(std::string_view name) const;
    static std::vector<std::string> entry_names();
};

/// Class of a degree-0 cusp divisor. Throws std::invalid_argument if the
/// degree is nonzero.
ModElement cusp_class(const CuspDivisor& d, const Dictionary& dict);

/// Class of a degree-0 divisor supported on the cusps. Throws
/// std::invalid_argument if the support leaves the cusp set or the degree is
/// nonzero.
ModElement cusp_class(const Divisor& d, const Dictionary& dict);

/// Divisors underlying e_1..e_6 in cusp coordinates.
std::array<CuspDivisor, 6> basis_divisors();

/// Column j is the class of the permuted j-th basis divisor.
ActionMatrix derive_action_matrix(const CuspPermutation& perm, const Dictionary& dict);

/// Elements fixed by every matrix.
ModSet fixed_submodule(std::span<const ActionMatrix> matrices);

/// {(s - 1) m : m in M}.
ModSet image_submodule(const ActionMatrix& s);

/// {n m : m in M}.
ModSet multiples(long n);

/// Some m with (s - 1) m = -shift, i.e. a fixed point of the twisted action
/// on Pic^1 obtained by translating with a base point of degree 1.
std::optional<ModElement> pic1_fixed_point(const ActionMatrix& s, const ModElement& shift);
bool pic1_has_fixed_point(const ActionMatrix& s, const ModElement& shift);

ModSet subgroup_generated(std::span<const ModElement> generators);

}  // namespace twist
