#include <gtest/gtest.h>

#include <tracecert/ncpoly.hpp>

#include "random_poly.hpp"

using namespace tracecert;
using namespace tracecert::ncpoly;

namespace {

NcPoly P(const char* text, int n = 0) { return parse(text, n); }

}  // namespace

TEST(Word, Involution) {
    EXPECT_EQ((Word{1, 2}).adj(), (Word{2, 1}));
    EXPECT_EQ(Word{}.adj(), Word{});
    Word w{1, 3, 2, 2};
    EXPECT_EQ(w.adj().adj(), w);
}

TEST(Word, GradedLexOrder) {
    EXPECT_LT(Word{}, (Word{2}));
    EXPECT_LT((Word{2}), (Word{1, 1}));
    EXPECT_LT((Word{1, 2}), (Word{2, 1}));
}

TEST(Word, WordsUpTo) {
    EXPECT_EQ(words_up_to(2, 3).size(), 15u);
    EXPECT_EQ(words_up_to(2, 2).size(), 7u);
    EXPECT_EQ(words_up_to(3, 0).size(), 1u);
}

TEST(CyclicCanonical, Examples) {
    EXPECT_EQ(cyclic_canonical(Word{2, 1}).representative, (Word{1, 2}));
    EXPECT_EQ(cyclic_canonical(Word{1, 2, 1, 2}).representative, (Word{1, 2, 1, 2}));
    EXPECT_EQ(cyclic_canonical(Word{2, 3, 1}).representative, (Word{1, 2, 3}));
}

TEST(CyclicCanonical, MatchesBruteForceMinimum) {
    for (const Word& w : words_up_to(3, 6)) {
        Word best = w;
        for (std::size_t r = 1; r < w.size(); ++r) best = std::min(best, w.rotated(r));
        ASSERT_EQ(cyclic_canonical(w).representative, best) << format_word(w);
        for (std::size_t r = 0; r < w.size(); ++r)
            ASSERT_EQ(cyclic_canonical(w.rotated(r)), cyclic_canonical(w));
    }
}

TEST(Parse, Literals) {
    NcPoly f = P("1 - X1^2");
    EXPECT_EQ(f.nvars(), 1);
    EXPECT_EQ(f.coeff(Word{}), 1);
    EXPECT_EQ(f.coeff(Word{1, 1}), -1);
    EXPECT_EQ(f.size(), 2u);

    NcPoly c = P("X1*X2 - X2*X1");
    EXPECT_EQ(c.coeff(Word{1, 2}), 1);
    EXPECT_EQ(c.coeff(Word{2, 1}), -1);
}

TEST(Parse, MotzkinAliases) {
    NcPoly f = P("Y*X^4*Y + X*Y^4*X - 3*X*Y^2*X + 1");
    EXPECT_EQ(f.nvars(), 2);
    EXPECT_EQ(f.coeff(Word{2, 1, 1, 1, 1, 2}), 1);
    EXPECT_EQ(f.coeff(Word{1, 2, 2, 2, 2, 1}), 1);
    EXPECT_EQ(f.coeff(Word{1, 2, 2, 1}), -3);
    EXPECT_EQ(f.coeff(Word{}), 1);
    EXPECT_EQ(f.size(), 4u);
    EXPECT_TRUE(is_symmetric(f));
}

TEST(Parse, ParenthesesPowersAdjAndJuxtaposition) {
    EXPECT_EQ(P("(1 - X^2)(1 - Y^2)"), P("1 - X1^2 - X2^2 + X1^2*X2^2"));
    EXPECT_EQ(P("adj(X1*X2*X3)"), P("X3*X2*X1"));
    EXPECT_EQ(P("(X + Y)^2"), P("X^2 + X*Y + Y*X + Y^2"));
    EXPECT_EQ(P("3/6 X1"), P("1/2*X1"));
    EXPECT_EQ(P("-X1 + 2"), P("2 - X1"));
    EXPECT_EQ(P("X1^2^2"), P("X1^4"));
    EXPECT_TRUE(P("0 - 1") == NcPoly::constant(0, -1));
}

TEST(Parse, Errors) {
    EXPECT_THROW(P("1 +"), ParseError);
    EXPECT_THROW(P("X1 ** X2"), ParseError);
    EXPECT_THROW(P("(X1"), ParseError);
    EXPECT_THROW(P("1/0"), ParseError);
    EXPECT_THROW(P("X0"), ParseError);
    EXPECT_THROW(P("X3", 2), ParseError);
    try {
        P("X1 + ?");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 5u);
    }
}

TEST(Parse, FormatRoundTrip) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        NcPoly f = testutil::random_poly(rng, 3, 5, 6);
        std::string text = format(f);
        EXPECT_EQ(parse(text, 3), f) << text;
    }
    EXPECT_EQ(format(P("1 - X1^2")), "1 - X1^2");
    EXPECT_EQ(format(NcPoly(2)), "0");
    EXPECT_EQ(format(P("-1/2*X1*X2 + 3")), "3 - 1/2*X1*X2");
}

TEST(Involution, Examples) {
    EXPECT_EQ(adj(P("X1*X2")), P("X2*X1"));
    EXPECT_EQ(adj(P("1")), P("1"));
    NcPoly f = P("X1*X2*X3 - X3*X2*X1");
    EXPECT_EQ(adj(f), -f);
}

TEST(Involution, AntiAutomorphism) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        NcPoly f = testutil::random_poly(rng, 3, 3), g = testutil::random_poly(rng, 3, 3);
        EXPECT_EQ(adj(f * g), adj(g) * adj(f));
        EXPECT_EQ(adj(adj(f)), f);
    }
}

TEST(CycEquiv, Examples) {
    EXPECT_TRUE(cyc_equiv(P("X1*X2"), P("X2*X1")));
    EXPECT_FALSE(cyc_equiv(P("X1*X2*X3 - X3*X2*X1"), NcPoly(3)));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        NcPoly f = testutil::random_poly(rng, 3, 4), p = testutil::random_poly(rng, 3, 2),
               q = testutil::random_poly(rng, 3, 2);
        EXPECT_TRUE(cyc_equiv(f, f + (p * q - q * p)));
    }
}

TEST(CommutatorDecomposition, Examples) {
    auto one = commutator_decomposition(P("X1*X2 - X2*X1"));
    ASSERT_TRUE(one.ok());
    ASSERT_EQ(one.pairs.size(), 1u);
    EXPECT_EQ(one.pairs[0].p, P("X1", 2));
    EXPECT_EQ(one.pairs[0].q, P("X2", 2));

    EXPECT_TRUE(commutator_decomposition(NcPoly(2)).pairs.empty());
    EXPECT_TRUE(commutator_decomposition(NcPoly(2)).ok());

    auto three = commutator_decomposition(P("X1*X2*X3 - X2*X3*X1"));
    ASSERT_TRUE(three.ok());
    ASSERT_EQ(three.pairs.size(), 1u);
    EXPECT_EQ(three.pairs[0].p, P("X1", 3));
    EXPECT_EQ(three.pairs[0].q, P("X2*X3", 3));
}

TEST(CommutatorDecomposition, FailureCarriesResidue) {
    auto split = commutator_decomposition(P("X1*X2*X3 - X3*X2*X1"));
    EXPECT_FALSE(split.ok());
    EXPECT_EQ(split.residue, P("X1*X2*X3 - X1*X3*X2"));
}

TEST(CommutatorDecomposition, RoundTrip) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        NcPoly f = testutil::random_poly(rng, 3, 6, 6);
        auto split = commutator_decomposition(f);
        NcPoly sum = split.residue;
        for (const auto& c : split.pairs) sum += c.expand();
        EXPECT_EQ(sum, f);
        EXPECT_EQ(split.residue, cyclic_reduce(f));
    }
}

TEST(MultihomogeneousParts, Examples) {
    auto parts = multihomogeneous_parts(P("(1 - X1^2)(1 - X2^2)"));
    ASSERT_EQ(parts.size(), 4u);
    EXPECT_EQ(parts.at(MultiDegree{{0, 0}}), P("1", 2));
    EXPECT_EQ(parts.at(MultiDegree{{2, 0}}), P("-X1^2", 2));
    EXPECT_EQ(parts.at(MultiDegree{{0, 2}}), P("-X2^2", 2));
    EXPECT_EQ(parts.at(MultiDegree{{2, 2}}), P("X1^2*X2^2", 2));

    auto single = multihomogeneous_parts(P("X1*X2 + X2*X1"));
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single.begin()->first, (MultiDegree{{1, 1}}));
    EXPECT_TRUE(multihomogeneous_parts(NcPoly(2)).empty());
}

TEST(MultihomogeneousParts, SumAndSymmetry) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        NcPoly f = testutil::random_symmetric(rng, 3, 6, 6);
        NcPoly sum(3);
        for (const auto& [d, part] : multihomogeneous_parts(f)) {
            EXPECT_TRUE(is_symmetric(part));
            for (const auto& [w, c] : part) EXPECT_EQ(multidegree(w, 3), d);
            sum += part;
        }
        EXPECT_EQ(sum, f);
    }
}

TEST(Polarize, SquareAndCube) {
    NcPoly sq = polarize_step(P("X1^2"), 1, 2);
    EXPECT_EQ(sq, P("X1*X2 + X2*X1", 2));
    EXPECT_EQ(resubstitute(sq, 1, 2), P("X1^2"));

    NcPoly cube = polarize_step(P("X1^3"), 1, 3);
    EXPECT_EQ(cube, P("(X1 + X2)^3 - X1^3 - X2^3"));
    EXPECT_EQ(cube.size(), 6u);
    EXPECT_EQ(resubstitute(cube, 1, 3), P("X1^3"));
}

TEST(Polarize, Errors) {
    EXPECT_THROW(polarize_step(P("X1"), 1, 1), DomainError);
    EXPECT_THROW(polarize_step(P("X1^2 + X1^3"), 1, 2), DomainError);
    EXPECT_THROW(polarize_step(P("X1^2"), 2, 2), DomainError);
}

TEST(Polarize, ResubstitutionIdentity) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 60; ++i) {
        NcPoly f = testutil::random_poly(rng, 2, 6, 8);
        for (const auto& [d, part] : multihomogeneous_parts(f)) {
            int k = d.degrees[0];
            if (k < 2 || k > 4) continue;
            EXPECT_EQ(resubstitute(polarize_step(part, 1, k), 1, k), part);
        }
    }
}

TEST(Commutative, ProjectExamples) {
    EXPECT_TRUE(commutative_project(P("X1*X2 - X2*X1")).is_zero());
    CommPoly g = commutative_project(P("(1 - X^2)(1 - Y^2)"));
    EXPECT_EQ(g, commutative_project(P("1 - X^2 - Y^2 + X^2*Y^2")));
    CommPoly m = commutative_project(P("Y*X^4*Y + X*Y^4*X - 3*X*Y^2*X + 1"));
    EXPECT_EQ(m.coeff(Exponents{{4, 2}}), 1);
    EXPECT_EQ(m.coeff(Exponents{{2, 4}}), 1);
    EXPECT_EQ(m.coeff(Exponents{{2, 2}}), -3);
    EXPECT_EQ(m.coeff(Exponents{{0, 0}}), 1);
    EXPECT_EQ(m.terms().size(), 4u);
}

TEST(Commutative, ProjectIsHomomorphism) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        NcPoly f = testutil::random_poly(rng, 3, 3), g = testutil::random_poly(rng, 3, 3);
        EXPECT_EQ(commutative_project(f * g), commutative_project(f) * commutative_project(g));
    }
}

TEST(Commutative, SortSection) {
    EXPECT_EQ(cyclic_sort_section(CommPoly::monomial(2, {1, 1})), P("X1*X2"));
    EXPECT_EQ(cyclic_sort_section(CommPoly::monomial(2, {2, 2})), P("X1^2*X2^2"));
    std::mt19937_64 rng(37);
    for (int i = 0; i < 100; ++i) {
        CommPoly g = testutil::random_comm(rng, 2, 8);
        NcPoly lifted = cyclic_sort_section(g);
        EXPECT_EQ(commutative_project(lifted), g);
        EXPECT_TRUE(is_cyclically_sorted(lifted));
    }
}

TEST(Commutative, CyclicallySorted) {
    EXPECT_TRUE(is_cyclically_sorted(P("Y*X^4*Y")));
    EXPECT_TRUE(is_cyclically_sorted(P("Y*X^4*Y + X*Y^4*X - 3*X*Y^2*X + 1")));
    EXPECT_FALSE(is_cyclically_sorted(P("X*Y*X*Y")));
    EXPECT_TRUE(is_cyclically_sorted(P("1", 2)));
}

TEST(HermitianCyclicPart, Examples) {
    EXPECT_EQ(hermitian_cyclic_part(P("X1*X2")), P("1/2*X1*X2 + 1/2*X2*X1"));
    NcPoly s = P("X1*X2 + X2*X1 + 3");
    EXPECT_EQ(hermitian_cyclic_part(s), s);
    NcPoly f = P("X*Y*Z - Z*Y*X");
    EXPECT_TRUE(hermitian_cyclic_part(f).is_zero());
    EXPECT_FALSE(cyc_equiv(f, NcPoly(3)));
}

TEST(HermitianCyclicPart, CyclicallyEquivalentWhenHypothesisHolds) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        NcPoly g = testutil::random_symmetric(rng, 2, 4);
        NcPoly p = testutil::random_poly(rng, 2, 2), q = testutil::random_poly(rng, 2, 2);
        NcPoly f = g + (p * q - q * p);  // f is cyc-equivalent to f*
        ASSERT_TRUE(cyc_equiv(f, adj(f)));
        NcPoly h = hermitian_cyclic_part(f);
        EXPECT_TRUE(is_symmetric(h));
        EXPECT_TRUE(cyc_equiv(h, f));
    }
}

TEST(Rationals, ParseAndRationalize) {
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_EQ(rationalize(0.333333333333, Integer(1000)), Rational(1, 3));
    EXPECT_EQ(rationalize(-0.25, Integer(1000)), Rational(-1, 4));
    EXPECT_EQ(rationalize(3.14159265358979, Integer(1000)), Rational(355, 113));
    EXPECT_EQ(rationalize(0.0, Integer(10)), Rational(0));
}
