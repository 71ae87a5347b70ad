#include "twist/checks.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "twist/brauer.hpp"
#include "twist/theorems.hpp"

namespace twist {

namespace {

CheckOutcome verdict(bool ok, std::string detail) {
    return {ok ? Status::ok : Status::fail, std::move(detail)};
}

std::string cusp_label(int ordinal) {
    const Cusp c = Cusp::from_ordinal(ordinal);
    return c.name().substr(0, 1) + "_" + std::to_string(c.index);
}

std::string module_set_text(const ModSet& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& m : s) {
        os << (first ? "" : ", ") << m.to_string();
        first = false;
    }
    os << "}";
    return os.str();
}

CheckOutcome certificate_outcome(const Dataset& ds, const std::string& id) {
    const CertificateCheck check = ds.certificate(id).verify();
    return verdict(check.passed(), check.ledger_text());
}

Constituent constituent_of(const TheoremReport& r, const std::string& id) {
    for (const auto& c : r.constituents) {
        if (c.id == id) {
            return c;
        }
    }
    throw std::logic_error("report " + r.id + " has no constituent " + id);
}

void add_dictionary_checks(std::vector<CheckEntry>& out, const Dataset& ds) {
    for (const auto& name : Dictionary::entry_names()) {
        if (name == "beta_0") {
            continue;
        }
        out.push_back({"dictionary." + name, "dictionary",
                       name + " = " + ds.dictionary.entry(name).to_string(),
                       [](const Dataset&) -> CheckOutcome {
                           return {Status::skipped,
                                   "published decomposition taken as data; consistency is covered "
                                   "by dictionary.basis, dictionary.e6_relation and "
                                   "dictionary.orbit_*"};
                       }});
    }
    out.push_back(
        {"dictionary.basis", "dictionary",
         "alpha_1 = e_1, alpha_2 = e_2, beta_0 = 0, beta_1 = e_3, beta_2 = e_4, gamma_1 = e_5",
         [](const Dataset& d) {
             const Dictionary& dict = d.dictionary;
             const std::array<std::pair<const char*, ModElement>, 6> expected{{
                 {"alpha_1", ModElement::basis(1)},
                 {"alpha_2", ModElement::basis(2)},
                 {"beta_0", ModElement()},
                 {"beta_1", ModElement::basis(3)},
                 {"beta_2", ModElement::basis(4)},
                 {"gamma_1", ModElement::basis(5)},
             }};
             bool ok = true;
             std::string bad;
             for (const auto& [name, value] : expected) {
                 if (dict.entry(name) != value) {
                     ok = false;
                     bad += std::string(bad.empty() ? "" : ", ") + name + " = " +
                            dict.entry(name).to_string();
                 }
             }
             return verdict(ok, ok ? "all six agree" : "mismatch: " + bad);
         }});
    out.push_back(
        {"dictionary.e6_relation", "dictionary",
         "e_6 = alpha_1 + alpha_2 + beta_1 + beta_2 + gamma_1 + gamma_2", [](const Dataset& d) {
             const Dictionary& dict = d.dictionary;
             const ModElement sum = dict.entry("alpha_1") + dict.entry("alpha_2") +
                                    dict.entry("beta_1") + dict.entry("beta_2") +
                                    dict.entry("gamma_1") + dict.entry("gamma_2");
             return verdict(sum == ModElement::basis(6), "sum = " + sum.to_string());
         }});

    // Entries reachable from basis divisors by one Galois move:
    //   sigma(P - B0) = P' - Q'  gives  [P' - B0] = s(e) + [Q' - B0].
    struct Orbit {
        const char* entry;
        const char* sigma;
        int column;
        int offset_basis;
    };
    for (const Orbit o : {Orbit{"alpha_0", "sigma_3", 1, 3}, Orbit{"alpha_3", "sigma_5", 1, 4},
                          Orbit{"beta_3", "sigma_3", 4, 3}, Orbit{"gamma_0", "sigma_3", 5, 3},
                          Orbit{"gamma_3", "sigma_5", 5, 4}}) {
        const std::string label = std::string(o.entry) + " = " + o.sigma + "(e" +
                                  std::to_string(o.column) + ") + e_" +
                                  std::to_string(o.offset_basis);
        out.push_back({"dictionary.orbit_" + std::string(o.entry), "dictionary", label,
                       [o](const Dataset& d) {
                           const ActionMatrix& s = std::string(o.sigma) == "sigma_3" ? d.s3 : d.s5;
                           const ModElement predicted =
                               s.column(o.column - 1) + ModElement::basis(o.offset_basis);
                           const ModElement& entry = d.dictionary.entry(o.entry);
                           return verdict(predicted == entry, "predicted " + predicted.to_string() +
                                                                  ", dictionary " +
                                                                  entry.to_string());
                       }});
    }
}

void add_bitangent_checks(std::vector<CheckEntry>& out, const Dataset& ds) {
    for (const auto& id : bitangent_certificate_ids()) {
        out.push_back({id, "bitangents", ds.certificate(id).label,
                       [id](const Dataset& d) { return certificate_outcome(d, id); }});
    }
    for (const auto& cc : ds.class_coordinates) {
        const std::string id = cc.id;
        out.push_back({id, "bitangents", cc.label, [id](const Dataset& d) {
                           const ClassCoordinate& c = d.class_coordinate(id);
                           const WitnessedClass w = witnessed_class(d, c);
                           return verdict(w.certified && w.value == c.printed, w.detail);
                       }});
    }
    out.push_back({"bitangent.class_relation", "bitangents", "[D1 - D0] + [D2 - D0] = [D3 - D0]",
                   [](const Dataset& d) {
                       std::array<WitnessedClass, 3> w;
                       for (int i = 0; i < 3; ++i) {
                           w[i] = witnessed_class(
                               d, d.class_coordinate("bitangent.coords_d" + std::to_string(i + 1)));
                       }
                       const ModElement sum = w[0].value + w[1].value;
                       const bool ok = w[0].certified && w[1].certified && w[2].certified &&
                                       sum == w[2].value;
                       return verdict(ok, "sum " + sum.to_string() + ", [D3 - D0] = " +
                                              w[2].value.to_string());
                   }});
}

void add_galois_checks(std::vector<CheckEntry>& out, const Dataset& ds, const std::string& sigma) {
    const bool is3 = sigma == "sigma_3";
    const std::string prefix = "galois." + sigma + ".";
    const CuspPermutation& table = is3 ? ds.sigma3_table : ds.sigma5_table;
    for (int k = 0; k < 12; ++k) {
        const std::string name = Cusp::from_ordinal(k).name();
        out.push_back(
            {prefix + name, "galois",
             sigma + "(" + cusp_label(k) + ") = " + cusp_label(table[k]),
             [is3, k](const Dataset& d) {
                 const Automorphism s = is3 ? sigma3() : sigma5();
                 const CuspPermutation& printed = is3 ? d.sigma3_table : d.sigma5_table;
                 const ProjPoint image = galois_image(s, catalog(Cusp::from_ordinal(k).name()));
                 const auto cusp = cusp_of(image);
                 const bool ok = cusp && cusp->ordinal() == printed[k];
                 return verdict(ok, "image " + image.to_string() + " is " +
                                        (cusp ? cusp->name() : std::string("not a cusp")));
             }});
    }
    const ActionMatrix& printed = is3 ? ds.s3 : ds.s5;
    for (int j = 0; j < 6; ++j) {
        out.push_back({prefix + "e" + std::to_string(j + 1), "galois",
                       sigma + "(e" + std::to_string(j + 1) + ") = " + printed.column(j).to_string(),
                       [is3, j](const Dataset& d) {
                           const ActionMatrix derived = derive_action_matrix(
                               cusp_permutation(is3 ? sigma3() : sigma5()), d.dictionary);
                           const ActionMatrix& p = is3 ? d.s3 : d.s5;
                           return verdict(derived.column(j) == p.column(j),
                                          "derived " + derived.column(j).to_string());
                       }});
    }
    const int lift = is3 ? kSigma3Lift : kSigma5Lift;
    const int alt = is3 ? kSigma3AltLift : kSigma5AltLift;
    out.push_back({prefix + "lifts", "galois",
                   sigma + " lifts k = " + std::to_string(lift) + " and k = " +
                       std::to_string(alt) + " agree on Q(zeta_8)-points",
                   [lift, alt](const Dataset&) {
                       const Automorphism a(lift), b(alt);
                       std::size_t agree = 0;
                       const auto names = zeta8_rational_names();
                       for (const auto& n : names) {
                           agree += galois_image(a, catalog(n)) == galois_image(b, catalog(n));
                       }
                       return verdict(agree == names.size(), std::to_string(agree) + "/" +
                                                                 std::to_string(names.size()) +
                                                                 " points agree");
                   }});
    const std::string m = is3 ? "s_3" : "s_5";
    out.push_back({prefix + "matrix", "galois", "derived " + m + " = printed " + m,
                   [is3](const Dataset& d) {
                       const ActionMatrix derived = derive_action_matrix(
                           cusp_permutation(is3 ? sigma3() : sigma5()), d.dictionary);
                       const ActionMatrix& p = is3 ? d.s3 : d.s5;
                       const bool ok = derived == p && p.well_defined();
                       return verdict(ok, "derived " + derived.to_string() +
                                              (p.well_defined() ? "" : "; printed matrix is not "
                                                                       "well defined on M"));
                   }});
}

void add_relation_checks(std::vector<CheckEntry>& out) {
    auto on_all = [](const ActionMatrix& a, const ActionMatrix& b) {
        std::size_t agree = 0;
        for (const auto& m : all_elements()) {
            agree += a.apply(b.apply(m)) == b.apply(a.apply(m));
        }
        return agree;
    };
    auto squares = [](const ActionMatrix& s) {
        std::size_t fixed = 0;
        for (const auto& m : all_elements()) {
            fixed += s.apply(s.apply(m)) == m;
        }
        return verdict(fixed == kModuleOrder,
                       std::to_string(fixed) + "/" + std::to_string(kModuleOrder) + " elements");
    };
    out.push_back({"galois.relations.s3_involution", "galois", "s_3^2 = 1",
                   [squares](const Dataset& d) { return squares(d.s3); }});
    out.push_back({"galois.relations.s5_involution", "galois", "s_5^2 = 1",
                   [squares](const Dataset& d) { return squares(d.s5); }});
    out.push_back({"galois.relations.commute", "galois", "s_3 s_5 = s_5 s_3",
                   [on_all](const Dataset& d) {
                       const std::size_t n = on_all(d.s3, d.s5);
                       return verdict(n == kModuleOrder, std::to_string(n) + "/" +
                                                             std::to_string(kModuleOrder) +
                                                             " elements");
                   }});
    out.push_back({"galois.relations.conjugation", "galois",
                   "complex conjugation k = 23 restricts to sigma_3 sigma_5",
                   [](const Dataset&) {
                       const Automorphism tau = complex_conjugation();
                       const Automorphism s = sigma3() * sigma5();
                       bool ok = true;
                       for (int j = 0; j < 8; ++j) {
                           ok = ok && tau(zeta(8, j)) == s(zeta(8, j));
                       }
                       for (const auto& n : zeta8_rational_names()) {
                           ok = ok && galois_image(tau, catalog(n)) == galois_image(s, catalog(n));
                       }
                       return verdict(ok, "checked zeta_8^j for j = 0..7 and the Q(zeta_8)-points");
                   }});
}

void add_fixed_checks(std::vector<CheckEntry>& out) {
    out.push_back(
        {"fixed.kernel", "fixed", "ker(s_3 - 1) and ker(s_5 - 1) meet in <2e_1 + 2e_2, 2e_3, 2e_4>",
         [](const Dataset& d) {
             const std::array<ActionMatrix, 2> gens{d.s3, d.s5};
             const ModSet fixed = fixed_submodule(gens);
             const std::array<ModElement, 3> expected_gens{
                 ModElement({2, 2, 0, 0, 0, 0}), ModElement({0, 0, 2, 0, 0, 0}),
                 ModElement({0, 0, 0, 2, 0, 0})};
             const bool two_torsion = std::all_of(
                 fixed.begin(), fixed.end(), [](const ModElement& m) { return (2 * m).is_zero(); });
             const bool ok =
                 fixed.size() == 8 && two_torsion && fixed == subgroup_generated(expected_gens);
             return verdict(ok, std::to_string(fixed.size()) + " elements " +
                                    module_set_text(fixed));
         }});
    out.push_back({"fixed.generators", "fixed", "Jac(C)(Q) = <[D1 - D0], [D2 - D0], [E]>",
                   [](const Dataset& d) {
                       const Constituent c =
                           constituent_of(verify_mordell_weil_group(d), "fixed_submodule");
                       return verdict(c.passed, c.detail);
                   }});
    out.push_back({"fixed.pic0", "fixed", "Pic^0(C) = <[D1 - D0], [D2 - D0]> has order 4",
                   [](const Dataset& d) {
                       const ModSet pic0 = rational_pic0(d);
                       return verdict(pic0.size() == 4, module_set_text(pic0));
                   }});
    out.push_back({"fixed.e_invariant", "fixed", "sigma_3([E]) = sigma_5([E]) = [E]",
                   [](const Dataset& d) {
                       const ModElement e =
                           witnessed_class(d, d.class_coordinate("bitangent.coords_e")).value;
                       const bool ok = d.s3.apply(e) == e && d.s5.apply(e) == e;
                       return verdict(ok, "[E] = " + e.to_string() + ", s_3[E] = " +
                                              d.s3.apply(e).to_string() + ", s_5[E] = " +
                                              d.s5.apply(e).to_string());
                   }});
}

void add_torsor_checks(std::vector<CheckEntry>& out, const Dataset& ds) {
    for (std::size_t i = 0; i < ds.shifts.size(); ++i) {
        const Pic1Shift& shift = ds.shifts[i];
        out.push_back({shift.id, "torsor",
                       "(" + shift.sigma_label + " - 1)[A0] = " + shift.printed.to_string(),
                       [i](const Dataset& d) {
                           const Pic1Shift& s = d.shifts[i];
                           const Divisor moved = galois_image(s.sigma, Divisor::named_point("A0")) -
                                                 Divisor::named_point("A0");
                           const ModElement derived = cusp_class(moved, d.dictionary);
                           return verdict(derived == s.printed,
                                          "[" + moved.to_string() + "] = " + derived.to_string());
                       }});
    }
    out.push_back({"torsor.image_sigma5", "torsor", "(sigma_5 - 1)M = 2M", [](const Dataset& d) {
                       const ModSet image = image_submodule(d.s5);
                       const ModSet doubled = multiples(2);
                       return verdict(image == doubled,
                                      "|image| = " + std::to_string(image.size()) + ", |2M| = " +
                                          std::to_string(doubled.size()));
                   }});
    for (const auto& [suffix, label] :
         {std::pair<std::string, std::string>{"sigma3", "sigma_3"},
          std::pair<std::string, std::string>{"sigma3_sigma5", "sigma_3 sigma_5"}}) {
        const bool composite = suffix != "sigma3";
        out.push_back(
            {"torsor.congruence_" + suffix, "torsor",
             "(" + label + " - 1)M satisfies a_2 + a_3 + a_6 = 0 mod 2",
             [composite](const Dataset& d) {
                 const ModSet image = image_submodule(composite ? d.s3s5() : d.s3);
                 std::size_t good = 0;
                 for (const auto& m : image) {
                     good += (m[1] + m[2] + m[5]) % 2 == 0;
                 }
                 return verdict(good == image.size(), std::to_string(good) + "/" +
                                                          std::to_string(image.size()) +
                                                          " image elements");
             }});
    }
    for (std::size_t i = 0; i < ds.shifts.size(); ++i) {
        const Pic1Shift& shift = ds.shifts[i];
        out.push_back({"torsor.search_" + shift.id.substr(shift.id.find("sigma")), "torsor",
                       shift.sigma_label + " has no fixed point in Pic^1",
                       [i](const Dataset& d) {
                           const Pic1Shift& s = d.shifts[i];
                           const Divisor moved = galois_image(s.sigma, Divisor::named_point("A0")) -
                                                 Divisor::named_point("A0");
                           const ModElement shift_value = cusp_class(moved, d.dictionary);
                           const auto fixed = pic1_fixed_point(d.matrix_for(s.sigma), shift_value);
                           return verdict(!fixed, fixed ? "fixed point [D + A0] with D = " +
                                                              fixed->to_string()
                                                        : "no solution among 2048 elements");
                       }});
    }
}

void add_brauer_checks(std::vector<CheckEntry>& out, const Dataset& ds) {
    for (const char* id : {"brauer.2e", "brauer.e_plus_sigma3_e", "brauer.e_minus_sigma3_e"}) {
        const std::string sid = id;
        out.push_back({sid, "brauer", ds.certificate(sid).label,
                       [sid](const Dataset& d) { return certificate_outcome(d, sid); }});
    }
    out.push_back({"brauer.sigma5_e", "brauer", "sigma_5(E) = -E", [](const Dataset&) {
                       const Divisor e = named_divisor("E");
                       return verdict(sigma5_negates_e(),
                                      "sigma_5(E) = " + galois_image(sigma5(), e).to_string());
                   }});
    out.push_back({"brauer.product", "brauer",
                   "(X - z8 * Z)(X - z8^3 * Z)(X - z8^5 * Z)(X - z8^7 * Z) = X^4 + Z^4",
                   [](const Dataset&) {
                       const HomogPoly p = product_of_linear_forms();
                       return verdict(p == pow(X(), 4) + pow(Z(), 4), p.to_string());
                   }});
    out.push_back({"brauer.cocycle", "brauer", "a_(tau,tau) = u_tau * tau(u_tau) = Y^4/(X^4 + Z^4) = -1",
                   [](const Dataset&) {
                       const CycNum a = cocycle_tau_tau();
                       return verdict(a == CycNum(-1), "a_(tau,tau) = " + a.to_string());
                   }});
    out.push_back({"brauer.cocycle_identity", "brauer",
                   "a_(1,1) = a_(1,tau) = a_(tau,1) = 1 and the cocycle identity holds",
                   [](const Dataset&) {
                       const CocycleTable a = two_cocycle(unit_u_tau());
                       const bool units = a[0][0] == CycNum(1) && a[0][1] == CycNum(1) &&
                                          a[1][0] == CycNum(1);
                       const bool identity = satisfies_cocycle_identity(a);
                       return verdict(units && identity,
                                      "table [[" + a[0][0].to_string() + ", " + a[0][1].to_string() +
                                          "], [" + a[1][0].to_string() + ", " +
                                          a[1][1].to_string() + "]]");
                   }});
}

void add_report_checks(std::vector<CheckEntry>& out) {
    struct Item {
        const char* id;
        const char* label;
        const char* constituent;
    };
    for (const Item it :
         {Item{"quadratic.on_curve", "[1 : +-z3 : +-z3^2] and [1 : +-z3^2 : +-z3] lie on C",
               "points_on_curve"},
          Item{"quadratic.zeta3_rational", "the 8 quadratic points are defined over Q(zeta_3)",
               "points_zeta3_rational"},
          Item{"quadratic.pairs", "conjugate pairs of quadratic points sum to D_0, D_1, D_2, D_3",
               "conjugate_pairs"},
          Item{"quadratic.pic2", "Pic^2(C) = {[D_0], [D_1], [D_2], [D_3]}", "pic2_enumeration"}}) {
        const std::string constituent = it.constituent;
        out.push_back({it.id, "quadratic", it.label, [constituent](const Dataset& d) {
                           const Constituent c = constituent_of(verify_degree_two_classes(d),
                                                                constituent);
                           return verdict(c.passed, c.detail);
                       }});
    }
    using Verifier = TheoremReport (*)(const Dataset&);
    struct Theorem {
        const char* id;
        const char* label;
        Verifier verify;
    };
    for (const Theorem t :
         {Theorem{"theorems.mordell_weil",
                  "Jac(C)(Q) = (Z/2)^3 and Pic^0(C) = (Z/2)[D1 - D0] + (Z/2)[D2 - D0]",
                  &verify_mordell_weil_group},
          Theorem{"theorems.torsors", "Pic^(2d+1) has no Q-rational point",
                  &verify_odd_degree_torsors},
          Theorem{"theorems.quadratic",
                  "the only quadratic points are [1 : +-z3 : +-z3^2], [1 : +-z3^2 : +-z3]",
                  &verify_degree_two_classes},
          Theorem{"theorems.determinantal", "C has no linear determinantal representation over Q",
                  &verify_no_determinantal_representation}}) {
        const Verifier verify = t.verify;
        out.push_back({t.id, "theorems", t.label, [verify](const Dataset& d) {
                           const TheoremReport r = verify(d);
                           std::string detail = r.summary();
                           for (const auto& a : r.assumptions) {
                               detail += "; assumes: " + a;
                           }
                           return verdict(r.verdict, detail);
                       }});
    }
}

}  // namespace

std::string to_string(Status status) {
    switch (status) {
        case Status::ok:
            return "OK";
        case Status::fail:
            return "FAIL";
        case Status::skipped:
            return "SKIPPED(data-axiom)";
    }
    return "FAIL";
}

Status parse_status(const std::string& text) {
    for (Status s : {Status::ok, Status::fail, Status::skipped}) {
        if (to_string(s) == text) {
            return s;
        }
    }
    throw std::invalid_argument("unknown status '" + text + "'");
}

const std::vector<std::string>& section_names() {
    static const std::vector<std::string> names{"dictionary", "bitangents", "galois",
                                                "fixed",      "torsor",     "brauer",
                                                "quadratic",  "theorems"};
    return names;
}

std::string section_header(const std::string& section, const std::string& id) {
    if (section == "dictionary") return "Check linear equivalences of divisors";
    if (section == "bitangents") return "Points of tangency of bitangents";
    if (section == "galois") {
        if (id.starts_with("galois.sigma_3.")) return "Action of sigma_3";
        if (id.starts_with("galois.sigma_5.")) return "Action of sigma_5";
        return "Relations of the Galois action";
    }
    if (section == "fixed" || section == "torsor") return "Calculation of fixed points";
    if (section == "brauer") return "Calculation of Brauer obstruction";
    if (section == "quadratic") return "Quadratic points";
    if (section == "theorems") return "Assembled results";
    throw std::invalid_argument("unknown section '" + section + "'");
}

std::vector<CheckEntry> check_registry(const Dataset& ds) {
    std::vector<CheckEntry> out;
    add_dictionary_checks(out, ds);
    add_bitangent_checks(out, ds);
    add_galois_checks(out, ds, "sigma_3");
    add_galois_checks(out, ds, "sigma_5");
    add_relation_checks(out);
    add_fixed_checks(out);
    add_torsor_checks(out, ds);
    add_brauer_checks(out, ds);
    add_report_checks(out);
    return out;
}

std::vector<CheckRecord> run_checks(const Dataset& ds, const RunOptions& options) {
    const auto& sections = section_names();
    if (options.section &&
        std::find(sections.begin(), sections.end(), *options.section) == sections.end()) {
        throw std::invalid_argument("unknown section '" + *options.section + "'");
    }
    std::vector<CheckEntry> selected;
    for (auto& entry : check_registry(ds)) {
        if (options.section && entry.section != *options.section) {
            continue;
        }
        if (options.check_id && entry.id != *options.check_id) {
            continue;
        }
        selected.push_back(std::move(entry));
    }
    if (options.check_id && selected.empty()) {
        throw std::invalid_argument("unknown check '" + *options.check_id + "'");
    }

    std::vector<CheckRecord> records(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
            const CheckEntry& entry = selected[i];
            CheckRecord rec{entry.id, entry.section, entry.label, Status::fail, ""};
            try {
                CheckOutcome outcome = entry.run(ds);
                rec.status = outcome.status;
                rec.detail = std::move(outcome.detail);
            } catch (const std::exception& e) {
                rec.detail = std::string("error: ") + e.what();
            }
            records[i] = std::move(rec);
        }
    };
    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(selected.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    return records;
}

}  // namespace twist
