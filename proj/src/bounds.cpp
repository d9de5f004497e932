#include "berge_forge/bounds.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace berge {

// -------------------------------------------------------------------- Rational

namespace {

using Wide = __int128;

bool fits(Wide x) {
    return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

Rational reduce(Wide num, Wide den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Wide a = num < 0 ? -num : num;
    Wide b = den;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    if (!fits(num) || !fits(den)) throw std::overflow_error("rational: 64-bit overflow");
    Rational r;
    r.num = static_cast<std::int64_t>(num);
    r.den = static_cast<std::int64_t>(den);
    return r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    *this = reduce(n, d);
}

std::int64_t Rational::floor() const {
    auto q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
    return reduce(static_cast<Wide>(a.num) * b.den + static_cast<Wide>(b.num) * a.den, static_cast<Wide>(a.den) * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
    return reduce(static_cast<Wide>(a.num) * b.num, static_cast<Wide>(a.den) * b.den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<Wide>(a.num) * b.den <=> static_cast<Wide>(b.num) * a.den;
}

// -------------------------------------------------------------------- formulas

namespace {

struct FormulaInfo {
    FormulaId id;
    std::string_view name;
    ParameterKind parameter;
};

constexpr FormulaInfo kFormulas[] = {
    {FormulaId::BondySimonovits, "bondy-simonovits", ParameterKind::K},
    {FormulaId::Pikhurko1, "pikhurko-1", ParameterKind::K},
    {FormulaId::BukhJiang2, "bukh-jiang-2", ParameterKind::K},
    {FormulaId::Kst3, "kst-3", ParameterKind::None},
    {FormulaId::GyoriLiLower4, "gyori-li-lower-4", ParameterKind::K},
    {FormulaId::GyoriLiUpper4, "gyori-li-upper-4", ParameterKind::K},
    {FormulaId::Thm11Odd5, "thm11-odd-5", ParameterKind::K},
    {FormulaId::Thm11Even6, "thm11-even-6", ParameterKind::K},
    {FormulaId::GyoriLemons7, "gyori-lemons-7", ParameterKind::K},
    {FormulaId::Thm21Odd9, "thm21-odd-9", ParameterKind::K},
    {FormulaId::Thm21Even10, "thm21-even-10", ParameterKind::K},
    {FormulaId::Thm22Linear11, "thm22-linear-11", ParameterKind::K},
    {FormulaId::ErdosGallai12, "erdos-gallai-12", ParameterKind::PathVertices},
    {FormulaId::Theta15, "theta-15", ParameterKind::CycleLength},
    {FormulaId::ErdosPentagon, "erdos-pentagon", ParameterKind::None},
    {FormulaId::AlonShikhelman, "alon-shikhelman", ParameterKind::K},
    {FormulaId::AlonShikhelmanT5, "alon-shikhelman-t5", ParameterKind::None},
    {FormulaId::CombinedOdd, "combined-odd", ParameterKind::K},
};

const FormulaInfo& info(FormulaId id) {
    for (const auto& f : kFormulas) {
        if (f.id == id) return f;
    }
    throw std::logic_error("unknown formula id");
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// A value that is exact while every step stays rational.
struct Val {
    double d = 0.0;
    std::optional<Rational> r;

    static Val of(Rational q) { return {q.to_double(), q}; }
    static Val real(double x) { return {x, std::nullopt}; }
};

Val operator+(const Val& a, const Val& b) {
    Val out{a.d + b.d, std::nullopt};
    if (a.r && b.r) {
        try {
            out.r = *a.r + *b.r;
        } catch (const std::overflow_error&) {
        }
    }
    return out;
}

Val operator*(const Rational& c, const Val& v) {
    Val out{c.to_double() * v.d, std::nullopt};
    if (v.r) {
        try {
            out.r = c * *v.r;
        } catch (const std::overflow_error&) {
        }
    }
    return out;
}

Val operator*(double c, const Val& v) {
    return {c * v.d, std::nullopt};
}

// n^(1 + 1/k); exact when n is a perfect k-th power.
Val power_one_plus(int n, int k) {
    const double d = static_cast<double>(n) * std::pow(static_cast<double>(n), 1.0 / k);
    const auto root = static_cast<std::int64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
    for (auto r = std::max<std::int64_t>(0, root - 1); r <= root + 1; ++r) {
        Wide p = 1;
        for (int i = 0; i < k && p <= n; ++i) p *= r;
        if (p == n) return {d, Rational(static_cast<std::int64_t>(n) * r)};
    }
    return Val::real(d);
}

Val nval(int n) { return Val::of(Rational(n)); }

}  // namespace

std::string_view formula_name(FormulaId id) { return info(id).name; }

FormulaId parse_formula(std::string_view name) {
    for (const auto& f : kFormulas) {
        if (f.name == name) return f.id;
    }
    throw std::invalid_argument("unknown formula '" + std::string(name) + "'");
}

const std::vector<FormulaId>& all_formulas() {
    static const std::vector<FormulaId> ids = [] {
        std::vector<FormulaId> v;
        for (const auto& f : kFormulas) v.push_back(f.id);
        return v;
    }();
    return ids;
}

ParameterKind parameter_kind(FormulaId id) { return info(id).parameter; }

void BoundFormula::validate() const {
    switch (parameter_kind(id)) {
        case ParameterKind::K:
            if (parameter < 2) throw std::invalid_argument(std::string(formula_name(id)) + ": requires k >= 2");
            break;
        case ParameterKind::CycleLength:
            if (parameter < 4) throw std::invalid_argument(std::string(formula_name(id)) + ": requires l >= 4");
            break;
        case ParameterKind::PathVertices:
            if (parameter < 2) throw std::invalid_argument(std::string(formula_name(id)) + ": requires k >= 2");
            break;
        case ParameterKind::None:
            break;
    }
}

std::string BoundFormula::label() const {
    std::string s(formula_name(id));
    switch (parameter_kind(id)) {
        case ParameterKind::K:
        case ParameterKind::PathVertices: return s + " k=" + std::to_string(parameter);
        case ParameterKind::CycleLength: return s + " l=" + std::to_string(parameter);
        case ParameterKind::None: return s;
    }
    return s;
}

std::string Term::to_string() const {
    std::ostringstream os;
    switch (quantity) {
        case Quantity::ExCycle: os << "ex(" << n << ", C" << l << ")"; break;
        case Quantity::ExBipartiteCycle: os << "ex(" << m << ", " << n << ", C" << l << ")"; break;
        case Quantity::ExBipartiteGirth: os << "ex(" << m << ", " << n << ", cycles<=" << l << ")"; break;
        case Quantity::TrianglesCycleFree: os << "t" << l << "(" << n << ")"; break;
        case Quantity::ExBerge: os << "ex3(" << n << ", Berge-C" << l << ")"; break;
        case Quantity::ExLinearBerge: os << "exlin3(" << n << ", Berge-C" << l << ")"; break;
        case Quantity::ExPath: os << "ex(" << n << ", P" << l << ")"; break;
        case Quantity::ExTheta: os << "ex(" << n << ", theta>=" << l << ")"; break;
        case Quantity::PentagonsTriangleFree: os << "N(" << n << ", C3; C5)"; break;
    }
    return os.str();
}

SearchProblem problem_for(const Term& term) {
    SearchProblem p;
    p.n = term.n;
    switch (term.quantity) {
        case Quantity::ExCycle:
            p.forbidden = {{ForbiddenKind::ExactCycle, term.l}};
            break;
        case Quantity::ExBipartiteCycle:
            p.universe = Universe::Bipartite;
            p.m = term.m;
            p.forbidden = {{ForbiddenKind::ExactCycle, term.l}};
            break;
        case Quantity::ExBipartiteGirth:
            p.universe = Universe::Bipartite;
            p.m = term.m;
            p.forbidden = {{ForbiddenKind::CyclesUpTo, term.l}};
            break;
        case Quantity::TrianglesCycleFree:
            p.objective = Objective::Triangles;
            p.forbidden = {{ForbiddenKind::ExactCycle, term.l}};
            break;
        case Quantity::ExBerge:
            p.universe = Universe::Triples;
            p.forbidden = {{ForbiddenKind::BergeCycle, term.l}};
            break;
        case Quantity::ExLinearBerge:
            p.universe = Universe::Triples;
            p.linear = true;
            p.forbidden = {{ForbiddenKind::BergeCycle, term.l}};
            break;
        case Quantity::ExPath:
            p.forbidden = {{ForbiddenKind::Path, term.l}};
            break;
        case Quantity::ExTheta:
            p.forbidden = {{ForbiddenKind::ThetaAtLeast, term.l}};
            break;
        case Quantity::PentagonsTriangleFree:
            throw std::invalid_argument("no search problem for " + term.to_string());
    }
    return p;
}

std::pair<Term, BoundDirection> bounded_term(const BoundFormula& f, int n) {
    const int k = f.parameter;
    using Q = Quantity;
    switch (f.id) {
        case FormulaId::BondySimonovits:
        case FormulaId::Pikhurko1:
        case FormulaId::BukhJiang2: return {{Q::ExCycle, n, 0, 2 * k}, BoundDirection::Upper};
        case FormulaId::Kst3: return {{Q::ExBipartiteCycle, n, n, 4}, BoundDirection::Upper};
        case FormulaId::GyoriLiLower4: return {{Q::TrianglesCycleFree, n, 0, 2 * k + 1}, BoundDirection::Lower};
        case FormulaId::GyoriLiUpper4:
        case FormulaId::Thm11Odd5:
        case FormulaId::AlonShikhelman: return {{Q::TrianglesCycleFree, n, 0, 2 * k + 1}, BoundDirection::Upper};
        case FormulaId::AlonShikhelmanT5: return {{Q::TrianglesCycleFree, n, 0, 5}, BoundDirection::Upper};
        case FormulaId::Thm11Even6: return {{Q::TrianglesCycleFree, n, 0, 2 * k}, BoundDirection::Upper};
        case FormulaId::GyoriLemons7:
        case FormulaId::Thm21Odd9:
        case FormulaId::CombinedOdd: return {{Q::ExBerge, n, 0, 2 * k + 1}, BoundDirection::Upper};
        case FormulaId::Thm21Even10: return {{Q::ExBerge, n, 0, 2 * k}, BoundDirection::Upper};
        case FormulaId::Thm22Linear11: return {{Q::ExLinearBerge, n, 0, 2 * k + 1}, BoundDirection::Upper};
        case FormulaId::ErdosGallai12: return {{Q::ExPath, n, 0, k}, BoundDirection::Upper};
        case FormulaId::Theta15: return {{Q::ExTheta, n, 0, k}, BoundDirection::Upper};
        case FormulaId::ErdosPentagon: return {{Q::PentagonsTriangleFree, n, 0, 5}, BoundDirection::Upper};
    }
    throw std::logic_error("bounded_term: unknown formula");
}

std::vector<Term> inner_terms(const BoundFormula& f, int n) {
    const int k = f.parameter;
    using Q = Quantity;
    switch (f.id) {
        case FormulaId::GyoriLiLower4: {
            const int part = n / (k + 1);
            return {{Q::ExBipartiteGirth, part, part, 2 * k}};
        }
        case FormulaId::GyoriLiUpper4:
        case FormulaId::Thm11Even6: return {{Q::ExCycle, n, 0, 2 * k}};
        case FormulaId::Thm11Odd5: {
            const int part = ceil_div(n, 3);
            return {{Q::ExBipartiteCycle, part, part, 2 * k}};
        }
        case FormulaId::Thm21Odd9:
            return {{Q::TrianglesCycleFree, n, 0, 2 * k + 1}, {Q::ExCycle, n, 0, 2 * k}, {Q::ExLinearBerge, n, 0, 2 * k + 1}};
        case FormulaId::Thm21Even10: return {{Q::TrianglesCycleFree, n, 0, 2 * k}, {Q::ExCycle, n, 0, 2 * k}};
        case FormulaId::AlonShikhelman: return {{Q::ExCycle, ceil_div(n, 2), 0, 2 * k}};
        default: return {};
    }
}

double BoundValue::floor_value() const {
    if (exact) return static_cast<double>(exact->floor());
    return std::floor(value);
}

BoundValue evaluate(const BoundFormula& f, int n, const BaseEstimate* base) {
    f.validate();
    if (n < 1) throw std::invalid_argument(f.label() + ": requires n >= 1");
    BoundValue out;
    out.formula = f;
    out.n = n;
    std::tie(out.bounded, out.direction) = bounded_term(f, n);

    const auto terms = inner_terms(f, n);
    if (!terms.empty() && base == nullptr) throw std::invalid_argument(f.label() + ": needs a base estimate");
    std::vector<Val> inner;
    std::string provenance;
    for (const auto& t : terms) {
        auto e = base->value(t);
        if (!e.exact_value) out.uses_exact_bases = false;
        inner.push_back({e.value, e.exact});
        provenance += (provenance.empty() ? "" : "; ") + t.to_string() + " = " +
                      (e.exact ? e.exact->to_string() : std::to_string(e.value)) + " [" + e.provenance + "]";
    }

    const std::int64_t k = f.parameter;
    Val v;
    std::string note;
    switch (f.id) {
        case FormulaId::BondySimonovits:
            v = Rational(100 * k) * power_one_plus(n, static_cast<int>(k));
            break;
        case FormulaId::Pikhurko1:
            v = Rational(k - 1) * power_one_plus(n, static_cast<int>(k)) + Rational(16 * (k - 1)) * nval(n);
            break;
        case FormulaId::BukhJiang2:
            v = (80.0 * std::sqrt(static_cast<double>(k) * std::log(static_cast<double>(k)))) *
                    power_one_plus(n, static_cast<int>(k)) +
                Rational(10 * k * k) * nval(n);
            note = "log taken as natural logarithm";
            break;
        case FormulaId::Kst3:
            v = power_one_plus(n, 2) + Rational(2) * nval(n);
            break;
        case FormulaId::GyoriLiLower4:
            v = Rational(k * (k - 1) / 2) * inner[0];
            note = "n/(k+1) rounded down";
            break;
        case FormulaId::GyoriLiUpper4:
            v = Rational((2 * k - 1) * (16 * k - 2), 3) * inner[0];
            break;
        case FormulaId::Thm11Odd5:
            v = Rational(9 * (k - 1)) * inner[0];
            break;
        case FormulaId::Thm11Even6:
            v = Rational(2 * k - 3, 3) * inner[0];
            break;
        case FormulaId::GyoriLemons7:
            v = Rational(4 * k * k * k * k) * power_one_plus(n, static_cast<int>(k)) +
                Rational(15 * k * k * k * k + 10 * k * k) * nval(n);
            break;
        case FormulaId::Thm21Odd9:
            v = inner[0] + Rational(4) * inner[1] + Rational(12) * inner[2];
            break;
        case FormulaId::Thm21Even10:
            v = inner[0] + inner[1];
            break;
        case FormulaId::Thm22Linear11:
            v = Rational(2 * k) * power_one_plus(n, static_cast<int>(k)) + Rational(9 * k) * nval(n);
            break;
        case FormulaId::ErdosGallai12:
            v = Rational(k - 2, 2) * nval(n);
            break;
        case FormulaId::Theta15:
            v = Rational(k - 2) * nval(n);
            break;
        case FormulaId::ErdosPentagon: {
            const auto q = Rational(n, 5);
            v = Val::of(q * q * q * q * q);
            break;
        }
        case FormulaId::AlonShikhelman:
            v = Rational(16 * (k - 1), 3) * inner[0];
            break;
        case FormulaId::AlonShikhelmanT5:
            v = (std::sqrt(3.0) / 2.0) * power_one_plus(n, 2);
            out.asymptotic = true;
            note = "asymptotic: (1+o(1)) factor unspecified";
            break;
        case FormulaId::CombinedOdd:
            v = Rational(9 * k * k + 10 * k + 5) * power_one_plus(n, static_cast<int>(k));
            out.asymptotic = true;
            note = "asymptotic: O(k^2 n) term unspecified";
            break;
    }
    out.value = v.r ? v.r->to_double() : v.d;
    out.exact = v.r;
    if (!provenance.empty()) note += (note.empty() ? "" : "; ") + provenance;
    out.note = note;
    return out;
}

// ---------------------------------------------------------------- BaseEstimate

BaseEstimate BaseEstimate::formula() {
    BaseEstimate b;
    b.mode_ = Mode::Formula;
    b.provenance_ = "formula";
    return b;
}

BaseEstimate BaseEstimate::exact(Budget budget, UniverseLimits limits) {
    BaseEstimate b;
    b.mode_ = Mode::Exact;
    b.budget_ = budget;
    b.limits_ = limits;
    b.provenance_ = "exact search";
    b.cache_ = std::make_shared<std::map<Term, SearchResult>>();
    b.cache_mutex_ = std::make_shared<std::mutex>();
    return b;
}

BaseEstimate BaseEstimate::table(std::map<Term, long long> values, std::string provenance) {
    BaseEstimate b;
    b.mode_ = Mode::Table;
    b.table_ = std::move(values);
    b.provenance_ = std::move(provenance);
    return b;
}

Estimate BaseEstimate::value(const Term& term) const {
    const bool bipartite = term.quantity == Quantity::ExBipartiteCycle || term.quantity == Quantity::ExBipartiteGirth;
    if (term.n == 0 || (bipartite && term.m == 0)) return {0.0, Rational(0), true, "empty host"};

    switch (mode_) {
        case Mode::Table: {
            auto it = table_.find(term);
            if (it == table_.end()) throw std::invalid_argument("no base value for " + term.to_string());
            return {static_cast<double>(it->second), Rational(it->second), true, provenance_};
        }
        case Mode::Exact: {
            std::optional<SearchResult> cached;
            {
                std::lock_guard lock(*cache_mutex_);
                auto it = cache_->find(term);
                if (it != cache_->end()) cached = it->second;
            }
            if (!cached) {
                auto p = problem_for(term);
                p.budget = budget_;
                cached = solve(p, limits_);
                std::lock_guard lock(*cache_mutex_);
                cache_->emplace(term, *cached);
            }
            const auto& r = *cached;
            return {static_cast<double>(r.value), Rational(r.value), r.optimal,
                    r.optimal ? "exact search" : "search lower bound (budget exhausted)"};
        }
        case Mode::Formula:
            break;
    }

    const int l = term.l;
    const bool even = l % 2 == 0;
    auto from = [&](FormulaId id, int param, int n, const char* how) -> Estimate {
        auto b = evaluate({id, param}, n, this);
        return {b.value, b.exact, false, b.formula.label() + how};
    };
    switch (term.quantity) {
        case Quantity::ExCycle:
            if (even && l >= 4) return from(FormulaId::Pikhurko1, l / 2, term.n, "");
            break;
        case Quantity::ExBipartiteCycle:
            if (l == 4 && term.m == term.n) return from(FormulaId::Kst3, 0, term.n, "");
            if (even && l >= 4) return from(FormulaId::Pikhurko1, l / 2, term.m + term.n, " on m+n vertices");
            break;
        case Quantity::TrianglesCycleFree:
            if (even && l >= 4) return from(FormulaId::Thm11Even6, l / 2, term.n, "");
            if (!even && l >= 5) return from(FormulaId::Thm11Odd5, (l - 1) / 2, term.n, "");
            break;
        case Quantity::ExBerge:
            if (even && l >= 4) return from(FormulaId::Thm21Even10, l / 2, term.n, "");
            if (!even && l >= 5) return from(FormulaId::Thm21Odd9, (l - 1) / 2, term.n, "");
            break;
        case Quantity::ExLinearBerge:
            if (!even && l >= 5) return from(FormulaId::Thm22Linear11, (l - 1) / 2, term.n, "");
            break;
        case Quantity::ExPath:
            return from(FormulaId::ErdosGallai12, l, term.n, "");
        case Quantity::ExTheta:
            return from(FormulaId::Theta15, l, term.n, "");
        case Quantity::ExBipartiteGirth:
        case Quantity::PentagonsTriangleFree:
            break;
    }
    throw std::invalid_argument("no formula base for " + term.to_string());
}

// ------------------------------------------------------------------ bound table

BoundTable bound_table(const std::vector<FormulaId>& formulas, const std::vector<int>& parameters,
                       const std::vector<int>& ns, const BaseEstimate& base) {
    BoundTable table;
    for (auto id : formulas) {
        std::vector<int> params = parameter_kind(id) == ParameterKind::None ? std::vector<int>{0} : parameters;
        for (int param : params) {
            BoundFormula f{id, param};
            try {
                f.validate();
            } catch (const std::invalid_argument&) {
                continue;
            }
            for (int n : ns) {
                try {
                    table.rows.push_back(evaluate(f, n, &base));
                } catch (const std::invalid_argument& e) {
                    table.skipped.push_back(f.label() + " n=" + std::to_string(n) + ": " + e.what());
                }
            }
        }
    }
    return table;
}

}  // namespace berge
