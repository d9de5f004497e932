#include <doctest.h>

#include <cmath>

#include "berge_forge/bounds.hpp"

using namespace berge;

namespace {

Rational exact_of(FormulaId id, int param, int n, const BaseEstimate* base = nullptr) {
    const auto b = evaluate({id, param}, n, base);
    REQUIRE(b.exact.has_value());
    return *b.exact;
}

}  // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(5, 3).to_string() == "5/3");
    CHECK(Rational(4).to_string() == "4");
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("golden closed forms") {
    CHECK(exact_of(FormulaId::Pikhurko1, 2, 16) == Rational(320));
    CHECK(exact_of(FormulaId::Kst3, 0, 9) == Rational(45));
    CHECK(exact_of(FormulaId::ErdosGallai12, 4, 10) == Rational(10));
    CHECK(exact_of(FormulaId::Theta15, 6, 10) == Rational(40));
    CHECK(exact_of(FormulaId::ErdosPentagon, 0, 10) == Rational(32));
    CHECK(exact_of(FormulaId::Pikhurko1, 2, 9) == Rational(27 + 144));
    CHECK(exact_of(FormulaId::BondySimonovits, 2, 4) == Rational(1600));
    // 2k n^{1+1/k} + 9kn at k=3, n=8: 6*16 + 216
    CHECK(exact_of(FormulaId::Thm22Linear11, 3, 8) == Rational(312));
    // 4k^4 n^{3/2} + 15k^4 n + 10k^2 n at k=2, n=4
    CHECK(exact_of(FormulaId::GyoriLemons7, 2, 4) == Rational(64 * 8 + 240 * 4 + 40 * 4));
    CHECK(exact_of(FormulaId::ErdosGallai12, 5, 3) == Rational(9, 2));
}

TEST_CASE("irrational values stay in double precision") {
    const auto p = evaluate({FormulaId::Pikhurko1, 2}, 10);
    CHECK_FALSE(p.exact.has_value());
    CHECK(p.value == doctest::Approx(std::pow(10.0, 1.5) + 160.0).epsilon(1e-9));
    CHECK(p.floor_value() == std::floor(p.value));

    const auto bj = evaluate({FormulaId::BukhJiang2, 2}, 16);
    CHECK(bj.value == doctest::Approx(80.0 * std::sqrt(2.0 * std::log(2.0)) * 64.0 + 40.0 * 16.0).epsilon(1e-9));
    CHECK(bj.note.find("natural") != std::string::npos);
}

TEST_CASE("asymptotic formulas are flagged") {
    CHECK(evaluate({FormulaId::CombinedOdd, 2}, 16).asymptotic);
    CHECK(evaluate({FormulaId::AlonShikhelmanT5, 0}, 16).asymptotic);
    CHECK_FALSE(evaluate({FormulaId::Pikhurko1, 2}, 16).asymptotic);
}

TEST_CASE("parameter ranges and missing bases") {
    CHECK_THROWS_AS(evaluate({FormulaId::Pikhurko1, 1}, 16), std::invalid_argument);
    CHECK_THROWS_AS(evaluate({FormulaId::Theta15, 3}, 16), std::invalid_argument);
    CHECK_THROWS_AS(evaluate({FormulaId::Pikhurko1, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(evaluate({FormulaId::Thm11Even6, 2}, 16), std::invalid_argument);
    CHECK_THROWS_AS(parse_formula("nope"), std::invalid_argument);
    for (auto id : all_formulas()) CHECK(parse_formula(formula_name(id)) == id);
}

TEST_CASE("composite bounds take inner values from a table") {
    std::map<Term, long long> values{
        {{Quantity::ExCycle, 9, 0, 4}, 13},
        {{Quantity::ExBipartiteCycle, 3, 3, 4}, 6},
        {{Quantity::ExBipartiteGirth, 3, 3, 4}, 6},
        {{Quantity::TrianglesCycleFree, 9, 0, 5}, 12},
        {{Quantity::TrianglesCycleFree, 9, 0, 4}, 3},
        {{Quantity::ExLinearBerge, 9, 0, 5}, 8},
        {{Quantity::ExCycle, 5, 0, 4}, 6},
    };
    const auto base = BaseEstimate::table(values);
    // 9(k-1) ex(3,3,C4)
    CHECK(exact_of(FormulaId::Thm11Odd5, 2, 9, &base) == Rational(54));
    // (2k-3)/3 ex(9,C4)
    CHECK(exact_of(FormulaId::Thm11Even6, 2, 9, &base) == Rational(13, 3));
    // (2k-1)(16k-2)/3 ex(9,C4) = 30 * 13
    CHECK(exact_of(FormulaId::GyoriLiUpper4, 2, 9, &base) == Rational(390));
    // C(k,2) ex(floor(9/3), floor(9/3), girth 4)
    CHECK(exact_of(FormulaId::GyoriLiLower4, 2, 9, &base) == Rational(6));
    // t5 + 4 ex(C4) + 12 ex_lin
    CHECK(exact_of(FormulaId::Thm21Odd9, 2, 9, &base) == Rational(12 + 52 + 96));
    CHECK(exact_of(FormulaId::Thm21Even10, 2, 9, &base) == Rational(16));
    // (16/3)(k-1) ex(ceil(9/2), C4)
    CHECK(exact_of(FormulaId::AlonShikhelman, 2, 9, &base) == Rational(32));
    CHECK(evaluate({FormulaId::Thm21Odd9, 2}, 9, &base).uses_exact_bases);
    CHECK_THROWS_AS(evaluate({FormulaId::Thm21Odd9, 2}, 8, &base), std::invalid_argument);
}

TEST_CASE("formula bases chain into other formulas") {
    const auto base = BaseEstimate::formula();
    const auto b = evaluate({FormulaId::Thm11Even6, 2}, 16, &base);
    // (1/3) * pikhurko-1(16) = 320/3
    REQUIRE(b.exact);
    CHECK(*b.exact == Rational(320, 3));
    CHECK_FALSE(b.uses_exact_bases);
    CHECK(b.note.find("pikhurko-1") != std::string::npos);
}

TEST_CASE("exact bases run the search") {
    const auto base = BaseEstimate::exact();
    const auto b = evaluate({FormulaId::Thm11Odd5, 2}, 7, &base);
    // 9 ex(3,3,C4) = 54
    REQUIRE(b.exact);
    CHECK(*b.exact == Rational(54));
    CHECK(b.uses_exact_bases);
    const auto e = base.value({Quantity::ExCycle, 5, 0, 4});
    CHECK(e.exact_value);
    CHECK(e.value == 6.0);
    CHECK(base.value({Quantity::ExCycle, 0, 0, 4}).value == 0.0);
}

TEST_CASE("bound table rows") {
    const auto t = bound_table({FormulaId::Pikhurko1, FormulaId::Kst3}, {1, 2}, {9, 16}, BaseEstimate::formula());
    REQUIRE(t.rows.size() == 4);
    CHECK(t.rows[0].formula.id == FormulaId::Pikhurko1);
    CHECK(t.rows[0].n == 9);
    CHECK(t.rows[1].exact == Rational(320));
    CHECK(t.rows[2].formula.id == FormulaId::Kst3);
    CHECK(t.rows[2].exact == Rational(45));
    const auto skipped = bound_table({FormulaId::ErdosPentagon, FormulaId::GyoriLiUpper4}, {2}, {10},
                                     BaseEstimate::table({}));
    CHECK(skipped.rows.size() == 1);
    CHECK(skipped.skipped.size() == 1);
}

TEST_CASE("closed forms grow with n") {
    const auto base = BaseEstimate::formula();
    for (auto id : all_formulas()) {
        const int param = parameter_kind(id) == ParameterKind::None ? 0 : (parameter_kind(id) == ParameterKind::CycleLength ? 6 : 3);
        BoundFormula f{id, param};
        double prev = -1.0;
        for (int n = 1; n <= 40; ++n) {
            double v = 0.0;
            try {
                v = evaluate(f, n, &base).value;
            } catch (const std::invalid_argument&) {
                continue;
            }
            CAPTURE(f.label());
            CAPTURE(n);
            CHECK(v >= prev);
            prev = v;
        }
    }
}
