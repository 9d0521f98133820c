#include <gtest/gtest.h>

#include <digideal/polynomial.hpp>

#include <random>

#include "support.hpp"

using namespace digideal;
using namespace testing_support;

namespace {

VarTablePtr d1_vars() { return edge_vars(d1()); }

Polynomial random_poly(std::mt19937_64& rng, const VarTablePtr& vars, int terms, int max_exp) {
    std::vector<Term> ts;
    for (int k = 0; k < terms; ++k) {
        std::vector<Monomial::Exponent> e(vars->size());
        for (auto& x : e) x = static_cast<Monomial::Exponent>(rng() % (max_exp + 1));
        std::int64_t num = static_cast<std::int64_t>(rng() % 11) - 5;
        std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 3);
        ts.push_back(Term{Scalar(num, den), Monomial(std::move(e))});
    }
    return Polynomial(vars, std::move(ts));
}

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp) {
    std::vector<Monomial::Exponent> e(n);
    for (auto& x : e) x = static_cast<Monomial::Exponent>(rng() % (max_exp + 1));
    return Monomial(std::move(e));
}

}  // namespace

TEST(Scalar, NormalizesToLowestTerms) {
    Scalar a(6, -4);
    EXPECT_EQ(a.numerator(), -3);
    EXPECT_EQ(a.denominator(), 2);
    EXPECT_EQ(Scalar(0, 5).denominator(), 1);
    EXPECT_EQ(Scalar::parse("22/7") * Scalar(7), Scalar(22));
    EXPECT_THROW((void)(Scalar(1) / Scalar(0)), UsageError);
}

TEST(VarTable, RejectsDuplicatesAndFindsFreshNames) {
    EXPECT_THROW(VarTable({"x", "x"}), UsageError);
    VarTable t({"w", "w_1"});
    EXPECT_EQ(t.fresh_name("w"), "w_2");
    EXPECT_EQ(t.fresh_name("y"), "y");
}

TEST(CompareMonomials, OneIsMinimumUnderSigma1) {
    auto vars = d1_vars();
    auto ord = sigma1();
    auto e5 = Monomial::variable(6, vars->index("e5"));
    EXPECT_EQ(compare_monomials(Monomial(6), e5, ord), std::strong_ordering::less);
}

TEST(CompareMonomials, E3OutranksProductUnderSigma1) {
    auto vars = d1_vars();
    auto ord = sigma1();
    auto e3 = P("e3", vars).leading().mono;
    auto e125 = P("e1*e2*e5", vars).leading().mono;
    EXPECT_EQ(compare_monomials(e3, e125, ord), std::strong_ordering::greater);
}

TEST(CompareMonomials, GrevlexSquareBeatsMixed) {
    auto ord = TermOrder::grevlex(2);
    EXPECT_EQ(compare_monomials(Monomial(2, {{0, 2}}), Monomial(2, {{0, 1}, {1, 1}}), ord), std::strong_ordering::greater);
}

TEST(CompareMonomials, MismatchedSizesAreUsageErrors) {
    auto ord = TermOrder::lex(2);
    EXPECT_THROW((void)compare_monomials(Monomial(2), Monomial(3), ord), UsageError);
}

TEST(CompareMonomials, BlockOrderEliminatesFront) {
    auto base = TermOrder::lex(3);
    auto elim = TermOrder::elimination({2}, base);
    // x3 beats any monomial free of x3
    EXPECT_EQ(elim.compare(Monomial(3, {{2, 1}}), Monomial(3, {{0, 5}, {1, 5}})), std::strong_ordering::greater);
}

TEST(Add, CancelsConstant) {
    auto vars = d1_vars();
    EXPECT_EQ(P("e1*e2*e3 - 1", vars) + P("1", vars), P("e1*e2*e3", vars));
}

TEST(Add, AdditiveInverse) {
    auto vars = d1_vars();
    auto p = P("e1*e2 - 3/2*e4^2 + 7", vars);
    EXPECT_TRUE((p + (-p)).is_zero());
}

TEST(Add, SumOfLinearGenerators) {
    auto vars = d1_vars();
    EXPECT_EQ(P("e3 + e4 - e5", vars) + P("e1 + e5 + e2 - e4", vars), P("e1 + e2 + e3", vars));
}

TEST(Add, TableMismatchIsRejected) {
    EXPECT_THROW((void)(P("x1", x_vars(2)) + P("x1", x_vars(3))), UsageError);
}

TEST(Multiply, Identity) {
    auto vars = d1_vars();
    auto p = P("e1*e2*e3 - 1", vars);
    EXPECT_EQ(p * P("1", vars), p);
}

TEST(Multiply, DifferenceOfSquares) {
    auto vars = d1_vars();
    EXPECT_EQ(P("e1 - 1", vars) * P("e1 + 1", vars), P("e1^2 - 1", vars));
}

TEST(Multiply, SingleDistribution) {
    auto vars = d1_vars();
    EXPECT_EQ(P("e4", vars) * P("e1*e2*e3 - 1", vars), P("e1*e2*e3*e4 - e4", vars));
}

TEST(LeadingTerm, ConstantIsNeverLeading) {
    auto vars = d1_vars();
    auto lt = leading_term(P("e1*e2*e3 - 1", vars), sigma1());
    EXPECT_EQ(lt.coeff, Scalar(1));
    EXPECT_EQ(lt.mono, P("e1*e2*e3", vars).leading().mono);
}

TEST(LeadingTerm, E3E4LeadsUnderSigma1) {
    auto vars = d1_vars();
    auto lt = leading_term(P("e3*e4 - e5", vars), sigma1());
    EXPECT_EQ(lt.mono, P("e3*e4", vars).leading().mono);
}

TEST(LeadingTerm, ZeroPolynomialThrows) {
    auto vars = d1_vars();
    EXPECT_THROW((void)leading_term(Polynomial(vars), sigma1()), UsageError);
}

TEST(Reduce, OneDivisionStepToConstant) {
    auto vars = d1_vars();
    EXPECT_EQ(reduce(P("e1*e2*e3", vars), {P("e1*e2*e3 - 1", vars)}, sigma1()), P("1", vars));
}

TEST(Reduce, OneDivisionStepKeepsCofactor) {
    auto vars = d1_vars();
    EXPECT_EQ(reduce(P("e3*e4*e6", vars), {P("e3*e4 - e5", vars)}, sigma1()), P("e5*e6", vars));
}

TEST(Reduce, EmptyBasisIsIdentity) {
    auto vars = d1_vars();
    auto f = P("e1*e6 + 2*e2", vars);
    EXPECT_EQ(reduce(f, {}, sigma1()), f);
}

TEST(Reduce, ZeroBasisElementIsRejected) {
    auto vars = d1_vars();
    EXPECT_THROW((void)reduce(P("e1", vars), {Polynomial(vars)}, sigma1()), UsageError);
}

TEST(Render, ExplicitProductsAndPowers) {
    auto vars = d1_vars();
    EXPECT_EQ(P("e1e2 - e3", vars).to_string(), "e1*e2 - e3");
    EXPECT_EQ(P("3/2 e1^2 - e2 e3 + 4", vars).to_string(), "3/2*e1^2 - e2*e3 + 4");
    EXPECT_EQ(Polynomial(vars).to_string(), "0");
}

TEST(Parse, ReportsColumnOfError) {
    auto vars = d1_vars();
    try {
        (void)P("e1 + * e2", vars);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("column"), std::string::npos);
    }
    EXPECT_THROW((void)P("e9", vars), ParseError);
}

TEST(Parse, JuxtaposedIdentifiersSplitByTable) {
    auto vars = d1_vars();
    EXPECT_EQ(P("e1e2e3 - 1", vars), P("e1*e2*e3 - 1", vars));
}

// ---- properties ----

TEST(ExactPolyProperties, OrdersAreMultiplicative) {
    std::mt19937_64 rng(11);
    std::vector<TermOrder> orders{TermOrder::lex(4), TermOrder::grevlex(4), TermOrder::lex({2, 0, 3, 1}),
                                  TermOrder::grevlex({3, 1, 0, 2}), TermOrder::elimination({1, 2}, TermOrder::lex(4))};
    for (const auto& ord : orders)
        for (int k = 0; k < 300; ++k) {
            auto a = random_monomial(rng, 4, 3), b = random_monomial(rng, 4, 3), c = random_monomial(rng, 4, 3);
            auto ab = ord.compare(a, b);
            EXPECT_EQ(ord.compare(a * c, b * c), ab);
            EXPECT_NE(ord.compare(Monomial(4), a * c), std::strong_ordering::greater);
            EXPECT_EQ(ord.compare(b, a), 0 <=> ab);
        }
}

TEST(ExactPolyProperties, RingAxioms) {
    std::mt19937_64 rng(12);
    auto vars = x_vars(3);
    for (int k = 0; k < 60; ++k) {
        auto a = random_poly(rng, vars, 4, 2), b = random_poly(rng, vars, 3, 2), c = random_poly(rng, vars, 3, 2);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(ExactPolyProperties, NormalFormIsReducedAndIdempotent) {
    std::mt19937_64 rng(13);
    auto vars = x_vars(3);
    auto ord = TermOrder::grevlex(3);
    for (int k = 0; k < 60; ++k) {
        std::vector<Polynomial> B{random_poly(rng, vars, 2, 2), random_poly(rng, vars, 2, 2)};
        B.erase(std::remove_if(B.begin(), B.end(), [](const Polynomial& p) { return p.is_zero(); }), B.end());
        auto f = random_poly(rng, vars, 5, 3);
        auto r = reduce(f, B, ord);
        for (const auto& t : r.terms())
            for (const auto& b : B) EXPECT_FALSE(leading_term(b, ord).mono.divides(t.mono));
        EXPECT_EQ(reduce(r, B, ord), r);
    }
}

TEST(ExactPolyProperties, RenderParseRoundTrip) {
    std::mt19937_64 rng(14);
    auto vars = x_vars(4);
    for (int k = 0; k < 100; ++k) {
        auto p = random_poly(rng, vars, 5, 3);
        EXPECT_EQ(Polynomial::parse(p.to_string(), vars), p) << p.to_string();
    }
}
