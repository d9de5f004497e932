#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "berge_forge/search.hpp"

namespace berge {

/// Exact rational with 64-bit parts; comparisons use 128-bit products.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t value) : num(value) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::int64_t floor() const;
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

enum class FormulaId {
    BondySimonovits,
    Pikhurko1,
    BukhJiang2,
    Kst3,
    GyoriLiLower4,
    GyoriLiUpper4,
    Thm11Odd5,
    Thm11Even6,
    GyoriLemons7,
    Thm21Odd9,
    Thm21Even10,
    Thm22Linear11,
    ErdosGallai12,
    Theta15,
    ErdosPentagon,
    AlonShikhelman,
    AlonShikhelmanT5,
    CombinedOdd,
};

std::string_view formula_name(FormulaId id);
FormulaId parse_formula(std::string_view name);
const std::vector<FormulaId>& all_formulas();

/// Which parameter a formula takes.
enum class ParameterKind { None, K, CycleLength, PathVertices };
ParameterKind parameter_kind(FormulaId id);

struct BoundFormula {
    FormulaId id = FormulaId::Pikhurko1;
    int parameter = 0;  // k, l (theta-15) or path vertices (erdos-gallai-12); ignored for kst-3 / erdos-pentagon

    void validate() const;
    std::string label() const;
};

/// Extremal quantities that appear on either side of a bound.
enum class Quantity {
    ExCycle,             // ex(n, C_l)
    ExBipartiteCycle,    // ex(m, n, C_l)
    ExBipartiteGirth,    // ex(m, n, all cycles up to l)
    TrianglesCycleFree,  // t_l(n)
    ExBerge,             // ex_3(n, Berge C_l)
    ExLinearBerge,       // linear ex_3(n, Berge C_l)
    ExPath,              // ex(n, P_k)
    ExTheta,             // ex(n, theta >= l)
    PentagonsTriangleFree,
};

struct Term {
    Quantity quantity = Quantity::ExCycle;
    int n = 0;
    int m = 0;  // left part for bipartite quantities
    int l = 0;  // cycle length / path vertices

    std::string to_string() const;
    auto operator<=>(const Term&) const = default;
};

/// The search problem whose exact value is the term (throws when the term
/// has no search counterpart).
SearchProblem problem_for(const Term& term);

struct Estimate {
    double value = 0.0;
    std::optional<Rational> exact;
    bool exact_value = false;  // the term's true value, not a bound on it
    std::string provenance;
};

/**
 * Supplies values for the inner ex(.) / t(.) terms of composite bounds.
 * Formula mode substitutes another bound from this module, exact mode runs
 * the search engine, table mode looks values up (user values or stored
 * search results).
 */
class BaseEstimate {
public:
    enum class Mode { Formula, Exact, Table };

    static BaseEstimate formula();
    static BaseEstimate exact(Budget budget = {}, UniverseLimits limits = {});
    static BaseEstimate table(std::map<Term, long long> values, std::string provenance = "user value");

    Mode mode() const { return mode_; }
    Estimate value(const Term& term) const;

private:
    Mode mode_ = Mode::Formula;
    Budget budget_;
    UniverseLimits limits_;
    std::map<Term, long long> table_;
    std::string provenance_;
    std::shared_ptr<std::map<Term, SearchResult>> cache_;
    std::shared_ptr<std::mutex> cache_mutex_;
};

enum class BoundDirection { Upper, Lower };

struct BoundValue {
    BoundFormula formula;
    int n = 0;
    double value = 0.0;
    std::optional<Rational> exact;  // set when the value is rational and was computed exactly
    bool asymptotic = false;        // lower-order term unspecified
    bool uses_exact_bases = true;   // every inner term was an exact value
    Term bounded;                   // what the formula bounds
    BoundDirection direction = BoundDirection::Upper;
    std::string note;

    double floor_value() const;
};

/// Term bounded by the formula at n, and whether it is an upper or lower bound.
std::pair<Term, BoundDirection> bounded_term(const BoundFormula& f, int n);
/// Inner terms the formula needs at n (empty for closed forms).
std::vector<Term> inner_terms(const BoundFormula& f, int n);

/// Throws std::invalid_argument for missing bases or parameters out of range.
BoundValue evaluate(const BoundFormula& f, int n, const BaseEstimate* base = nullptr);

struct BoundTable {
    std::vector<BoundValue> rows;
    std::vector<std::string> skipped;  // "<formula> n=<n>: reason"
};

/// One row per (formula, parameter, n) in that nesting order. Parameters out of
/// a formula's range are skipped silently; parameterless formulas get one
/// row per n.
BoundTable bound_table(const std::vector<FormulaId>& formulas, const std::vector<int>& parameters,
                       const std::vector<int>& ns, const BaseEstimate& base);

}  // namespace berge
