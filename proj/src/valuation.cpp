#include "twist/valuation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <tuple>
#include <utility>

namespace twist {

namespace {

Series series_mul(const Series& a, const Series& b, int precision) {
    Series out(precision);
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) < precision; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) < precision; ++j) {
            if (b[j].is_zero()) {
                continue;
            }
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Series compose_series(const HomogPoly& g, const std::array<Series, 3>& coords, int precision) {
    std::array<std::vector<Series>, 3> powers;
    for (int v = 0; v < 3; ++v) {
        Series one(precision);
        one[0] = CycNum(1);
        powers[v].push_back(std::move(one));
    }
    auto power = [&](int v, int e) -> const Series& {
        while (static_cast<int>(powers[v].size()) <= e) {
            powers[v].push_back(series_mul(powers[v].back(), coords[v], precision));
        }
        return powers[v][e];
    };
    Series out(precision);
    for (const auto& [e, c] : g.terms()) {
        Series term = series_mul(series_mul(power(0, e[0]), power(1, e[1]), precision),
                                 power(2, e[2]), precision);
        for (int i = 0; i < precision; ++i) {
            if (!term[i].is_zero()) {
                out[i] += c * term[i];
            }
        }
    }
    return out;
}

class BranchCache {
   public:
    std::shared_ptr<const BranchExpansion> get(const ProjPoint& p, int precision) {
        const Key key{p, precision};
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) {
                return it->second;
            }
        }
        auto branch = std::make_shared<const BranchExpansion>(expand_branch(p, precision));
        std::unique_lock lock(mutex_);
        auto [it, inserted] = cache_.try_emplace(key, std::move(branch));
        return it->second;
    }

   private:
    using Key = std::pair<ProjPoint, int>;
    std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const BranchExpansion>> cache_;
};

BranchCache& branch_cache() {
    static BranchCache cache;
    return cache;
}

// Certificates are re-verified by several checks; keyed by the printed form.
class ValuationCache {
   public:
    using Key = std::tuple<std::string, ProjPoint, int>;

    std::optional<int> find(const Key& key) {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(key);
        return it == cache_.end() ? std::nullopt : std::optional<int>(it->second);
    }
    void insert(Key key, int value) {
        std::unique_lock lock(mutex_);
        cache_.try_emplace(std::move(key), value);
    }

   private:
    std::shared_mutex mutex_;
    std::map<Key, int> cache_;
};

ValuationCache& valuation_cache() {
    static ValuationCache cache;
    return cache;
}

int uncached_valuation(const HomogPoly& g, const ProjPoint& p, int bound) {
    const auto branch = branch_cache().get(p, bound + 1);
    const auto coords = branch->coordinates();
    // Low orders are the common case; widen the truncation only when needed.
    for (int n = std::min(bound, 2);; n = std::min(bound, 2 * n)) {
        const Series s = compose_series(g, coords, n);
        for (int i = 0; i < n; ++i) {
            if (!s[i].is_zero()) {
                return i;
            }
        }
        if (n == bound) {
            return bound;
        }
    }
}

}  // namespace

std::array<Series, 3> BranchExpansion::coordinates() const {
    std::array<Series, 3> coords;
    coords[chart] = Series{CycNum(1)};
    coords[parameter] = Series{center[parameter], CycNum(1)};
    coords[dependent] = series;
    for (auto& s : coords) {
        s.resize(precision);
    }
    return coords;
}

BranchExpansion expand_branch(const ProjPoint& p, int precision) {
    if (precision < 1) {
        throw std::invalid_argument("branch precision must be positive");
    }
    if (!on_curve(p)) {
        throw std::invalid_argument("branch center " + p.to_string() + " is not on the curve");
    }
    const HomogPoly& f = curve_equation();
    const int chart = p.chart();
    std::array<int, 2> affine{};
    for (int v = 0, k = 0; v < 3; ++v) {
        if (v != chart) {
            affine[k++] = v;
        }
    }
    std::array<CycNum, 3> gradient;
    for (int v = 0; v < 3; ++v) {
        gradient[v] = evaluate(f.derivative(v), p);
    }

    BranchExpansion b{p, chart, affine[0], affine[1], {}, precision};
    if (gradient[affine[1]].is_zero()) {
        if (gradient[affine[0]].is_zero()) {
            throw std::domain_error("curve is singular at " + p.to_string());
        }
        std::swap(b.parameter, b.dependent);
    }
    const CycNum inverse_slope = gradient[b.dependent].inverse();

    b.series.assign(precision, CycNum());
    b.series[0] = p[b.dependent];
    for (int n = 1; n < precision; ++n) {
        // With c_n = 0 the t^n coefficient of F(branch) collects the lower
        // orders; c_n enters linearly through the partial derivative.
        b.precision = n + 1;
        const Series residual = compose_series(f, b.coordinates(), n + 1);
        b.series[n] = -(residual[n] * inverse_slope);
    }
    b.precision = precision;

    const Series check = compose_series(f, b.coordinates(), precision);
    for (const auto& c : check) {
        if (!c.is_zero()) {
            throw std::logic_error("branch expansion does not satisfy the curve equation");
        }
    }
    return b;
}

Series compose(const HomogPoly& g, const BranchExpansion& branch) {
    return compose_series(g, branch.coordinates(), branch.precision);
}

int bezout_bound(int degree) { return 4 * degree + 1; }

int valuation(const HomogPoly& g, const ProjPoint& p, int bound) {
    if (g.is_zero()) {
        throw std::invalid_argument("valuation of the zero form");
    }
    if (bound < 1) {
        throw std::invalid_argument("valuation bound must be positive");
    }
    ValuationCache::Key key{g.to_string(), p, bound};
    std::optional<int> order = valuation_cache().find(key);
    if (!order) {
        order = uncached_valuation(g, p, bound);
        valuation_cache().insert(std::move(key), *order);
    }
    if (*order < bound) {
        return *order;
    }
    throw ExcessiveVanishing("form " + g.to_string() + " vanishes to order >= " +
                             std::to_string(bound) + " at " + p.to_string() +
                             "; it is divisible by the curve equation");
}

PrincipalDivisor principal_divisor_on_support(const HomogPoly& g,
                                              std::span<const ProjPoint> support) {
    std::vector<ProjPoint> sorted(support.begin(), support.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("support list contains a repeated point");
    }
    const int bound = bezout_bound(g.degree());
    PrincipalDivisor out{Divisor(), 4L * g.degree(), false};
    for (const auto& p : support) {
        const int order = valuation(g, p, bound);
        out.divisor += Divisor::point(p, order);
    }
    out.complete = out.divisor.degree() == out.expected_degree;
    return out;
}

std::string to_string(CertificateOutcome outcome) {
    switch (outcome) {
        case CertificateOutcome::pass:
            return "pass";
        case CertificateOutcome::mismatch:
            return "mismatch";
        case CertificateOutcome::incomplete_support:
            return "incomplete support";
    }
    return "unknown";
}

std::string CertificateCheck::ledger_text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& entry : ledger) {
        if (!first) {
            os << "; ";
        }
        first = false;
        const auto name = catalog_name(entry.point);
        os << (name ? *name : entry.point.to_string()) << ": " << entry.numerator_order << " - "
           << entry.denominator_order << " = " << (entry.numerator_order - entry.denominator_order)
           << " (claimed " << entry.claimed << ")";
    }
    os << (ledger.empty() ? "" : "; ") << "totals " << numerator_total << "/" << numerator_expected
       << " and " << denominator_total << "/" << denominator_expected << "; " << to_string(outcome);
    return os.str();
}

CertificateCheck verify_certificate(const Divisor& claimed, const HomogPoly& numerator,
                                    const HomogPoly& denominator,
                                    std::span<const ProjPoint> support) {
    const bool form_divisor = denominator.degree() == 0 && !denominator.is_zero();
    if (!form_divisor && numerator.degree() != denominator.degree()) {
        throw std::invalid_argument("certificate forms have degrees " +
                                    std::to_string(numerator.degree()) + " and " +
                                    std::to_string(denominator.degree()));
    }
    CertificateCheck check;
    check.claimed = claimed;
    check.numerator = numerator;
    check.denominator = denominator;
    check.support.assign(support.begin(), support.end());
    const PrincipalDivisor num = principal_divisor_on_support(numerator, support);
    const PrincipalDivisor den = principal_divisor_on_support(denominator, support);
    check.numerator_total = num.divisor.degree();
    check.denominator_total = den.divisor.degree();
    check.numerator_expected = num.expected_degree;
    check.denominator_expected = den.expected_degree;
    for (const auto& p : support) {
        check.ledger.push_back({p, static_cast<int>(num.divisor.coefficient(p)),
                                static_cast<int>(den.divisor.coefficient(p)),
                                claimed.coefficient(p)});
    }
    if (!num.complete || !den.complete) {
        check.outcome = CertificateOutcome::incomplete_support;
    } else if (num.divisor - den.divisor == claimed) {
        check.outcome = CertificateOutcome::pass;
    } else {
        check.outcome = CertificateOutcome::mismatch;
    }
    return check;
}

}  // namespace twist
