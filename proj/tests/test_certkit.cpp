#include <gtest/gtest.h>

#include <tracecert/certkit.hpp>
#include <tracecert/mateval.hpp>

#include "random_poly.hpp"

using namespace tracecert;
using namespace tracecert::certkit;
using tracecert::ncpoly::parse;

namespace {

/// Both sides as matrices at random symmetric (not contractive) matrices: an
/// evaluation route independent of the symbolic expansion.
double numeric_identity_gap(const Certificate& c, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    mateval::MatTuple A;
    std::normal_distribution<double> g;
    for (int i = 0; i < c.n; ++i) {
        mateval::Matrix m(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int s = 0; s < 3; ++s) m(r, s) = g(rng) / 3;
        A.matrices.push_back((m + m.transpose()) / 2);
    }
    mateval::Matrix lhs = mateval::evaluate(c.lhs(), A);
    mateval::Matrix rhs = mateval::Matrix::Zero(3, 3);
    for (const auto& t : c.terms)
        rhs += to_double(t.lambda) * mateval::evaluate(t.g, A).transpose() *
               mateval::evaluate(generator(c.n, t.gen), A) * mateval::evaluate(t.g, A);
    for (const auto& k : c.commutators) {
        mateval::Matrix p = mateval::evaluate(k.p, A), q = mateval::evaluate(k.q, A);
        rhs += p * q - q * p;
    }
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(Verify, EmptyCertificateForNegativeConstant) {
    Certificate c{2, NcPoly::constant(2, make_rational(-3, 5)), make_rational(3, 5), {}, {}};
    EXPECT_TRUE(verify(c).ok());
}

TEST(Verify, TamperedCoefficientNamesWord) {
    Certificate c = example42(3);
    ASSERT_TRUE(verify(c).ok());
    c.target.add_term(ncpoly::Word{1, 1, 2, 2}, make_rational(1, 7));
    VerifyReport r = verify(c);
    ASSERT_FALSE(r.ok());
    ASSERT_EQ(r.mismatches.size(), 1u);
    EXPECT_EQ(r.mismatches[0].word, (ncpoly::Word{1, 1, 2, 2}));
    EXPECT_EQ(r.mismatches[0].expected - r.mismatches[0].actual, make_rational(1, 7));
    EXPECT_NE(describe(r).find("X1^2*X2^2"), std::string::npos);
}

TEST(Verify, StructuralProblems) {
    Certificate c{1, NcPoly::constant(1, 0), 0, {{0, -1, NcPoly::constant(1, 1)}}, {}};
    EXPECT_FALSE(verify(c).ok());
    c.terms[0] = {2, 1, NcPoly::constant(1, 1)};
    EXPECT_FALSE(verify(c).ok());
}

TEST(TelescopePower, Examples) {
    Certificate one = telescope_power(1, 1, 1);
    ASSERT_EQ(one.terms.size(), 1u);
    EXPECT_EQ(one.terms[0].gen, 1);
    EXPECT_EQ(one.terms[0].g, parse("1", 1));
    EXPECT_TRUE(verify(one).ok());

    Certificate two = telescope_power(1, 1, 2);
    EXPECT_EQ(two.target, parse("1 - X^4"));
    EXPECT_EQ(two.expansion(), parse("(1 - X^2) + X*(1 - X^2)*X"));

    for (int m = 1; m <= 20; ++m) {
        Certificate c = telescope_power(2, 2, m);
        EXPECT_TRUE(verify(c).ok()) << m;
        EXPECT_TRUE(c.commutators.empty());
    }
}

TEST(Remark37, Examples) {
    Certificate two = remark37(1, 1, 2);
    ASSERT_EQ(two.terms.size(), 1u);
    EXPECT_EQ(two.terms[0].gen, 0);
    EXPECT_EQ(two.terms[0].lambda, make_rational(1, 2));
    EXPECT_EQ(two.terms[0].g, parse("1 - X^2"));
    EXPECT_EQ(two.target, parse("1/2 - X^2 + 1/2*X^4"));
    EXPECT_TRUE(verify(two).ok());
    for (int m = 2; m <= 20; ++m) {
        Certificate c = remark37(1, 1, m);
        EXPECT_TRUE(verify(c).ok()) << m;
        EXPECT_TRUE(c.commutators.empty());
        EXPECT_LT(numeric_identity_gap(c, static_cast<std::uint64_t>(m)), 1e-9);
    }
    EXPECT_THROW(remark37(1, 1, 1), DomainError);
}

TEST(Example42, VerifiesAndLevelIsLinear) {
    for (int m = 2; m <= 10; ++m) {
        Certificate c = example42(m);
        EXPECT_TRUE(verify(c).ok()) << m;
        EXPECT_EQ(c.target, parse("(1 - X^2)(1 - Y^2)"));
        EXPECT_EQ(c.epsilon, make_rational(1, m));
        EXPECT_LE(c.level(), m + 1);
        EXPECT_LT(numeric_identity_gap(c, static_cast<std::uint64_t>(m)), 1e-9);
    }
    EXPECT_THROW(example42(1), DomainError);
}

TEST(Motzkin, Decomposition) {
    Certificate c = motzkin_decomposition(make_rational(1, 4));
    EXPECT_TRUE(verify(c).ok());
    EXPECT_LT(numeric_identity_gap(c, 1), 1e-9);
    for (auto eps : {make_rational(2, 7), make_rational(1, 1), make_rational(3, 2), make_rational(1, 10)})
        EXPECT_TRUE(verify(motzkin_decomposition(eps)).ok()) << to_string(eps);
    EXPECT_THROW(motzkin_decomposition(0), DomainError);

    mateval::Matrix A(2, 2), B(2, 2);
    A << 0.5, 0.5, 0.5, 0.5;
    B << -1, 0, 0, 1;
    mateval::MatTuple pair{{A, B}};
    EXPECT_NEAR(mateval::trace_value(c.target, pair), 1.0, 1e-12);
    EXPECT_FALSE(mateval::psd_check(c.target, pair));
}

TEST(WordBound, Examples) {
    Certificate c = word_bound_certificate(1, ncpoly::Word{1}, 1);
    EXPECT_EQ(c.target, parse("2 - 2*X1"));
    EXPECT_EQ(c.expansion(), parse("(1 - X1)^2 + (1 - X1^2)"));
    EXPECT_TRUE(verify(c).ok());

    Certificate c2 = word_bound_certificate(2, ncpoly::Word{1, 2}, -1);
    EXPECT_EQ(c2.target, parse("2 + X1*X2 + X2*X1"));
    EXPECT_TRUE(verify(c2).ok());

    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        ncpoly::Word w = testutil::random_word(rng, 3, 6);
        for (int sign : {1, -1}) {
            Certificate b = word_bound_certificate(3, w, sign);
            EXPECT_TRUE(verify(b).ok());
            EXPECT_EQ(b.target.coeff(ncpoly::Word{}), w.empty() ? 2 - 2 * sign : 2);
            EXPECT_EQ(b.level(), static_cast<int>(w.size()));
        }
    }
    EXPECT_THROW(word_bound_certificate(1, ncpoly::Word{1}, 0), DomainError);
}

TEST(PutinarLift, TrivialSquare) {
    CommutativeCertificate cc{ncpoly::CommPoly(2), make_rational(2, 3), {{make_rational(2, 3), ncpoly::CommPoly::constant(2, 1)}}, {}, {}};
    ASSERT_TRUE(verify(cc));
    Certificate c = putinar_lift(cc, NcPoly(2));
    EXPECT_TRUE(verify(c).ok());
}

TEST(PutinarLift, HandBuiltMotzkinPieces) {
    // pi(f) + 1/4 for the product (1 - x^2)(1 - y^2): lift the commuting form of example42(4).
    // In the commutative ring, 1/4 + (1-x^2)(1-y^2) has the certificate
    //   (1/4)(x^4 y^2) ... built here from the exact identity
    //   (1-x^2)(1-y^2) + 1/m = (1/m) x^(2m) y^2 + (1/m)(1 - x^(2m)) + (1 - x^2 + x^(2m)/m)(1 - y^2).
    const int m = 3;
    using ncpoly::CommPoly;
    auto mono = [](int a, int b) { return CommPoly::monomial(2, {a, b}); };
    CommPoly one = CommPoly::constant(2, 1);
    Rational inv = make_rational(1, m);
    CommutativeCertificate cc;
    cc.target = (one - mono(2, 0)) * (one - mono(0, 2));
    cc.epsilon = inv;
    cc.p.push_back({inv, mono(m, 1)});
    for (int k = 0; k < m; ++k) cc.q.push_back({inv, mono(k, 0)});
    cc.r.push_back({inv, one});
    for (int k = 0; k <= m - 2; ++k) cc.r.push_back({make_rational(m - 1 - k, m), mono(k, 0) * (one - mono(2, 0))});
    ASSERT_TRUE(verify(cc));

    Certificate c = putinar_lift(cc, parse("(1 - X^2)(1 - Y^2)"));
    EXPECT_TRUE(verify(c).ok());
    EXPECT_LT(numeric_identity_gap(c, 5), 1e-9);

    EXPECT_THROW(putinar_lift(cc, parse("(1 - X^2)(1 - Y^2) + X*Y*X*Y")), DomainError);
    EXPECT_THROW(putinar_lift(cc, parse("1 - X^2")), DomainError);
}

TEST(ComplexToReal, Examples) {
    ComplexCertificate same{1, parse("X1^2"), NcPoly(1), 0, {{0, 1, parse("X1"), NcPoly(1)}}, {}};
    ASSERT_TRUE(verify(same));
    Certificate r0 = complex_to_real(same);
    ASSERT_EQ(r0.terms.size(), 1u);
    EXPECT_EQ(r0.terms[0].g, parse("X1"));
    EXPECT_TRUE(verify(r0).ok());

    // g = 1 + i X1: g* g = 1 + X1^2.
    ComplexCertificate one{1, parse("1 + X1^2"), NcPoly(1), 0, {{0, 1, parse("1", 1), parse("X1")}}, {}};
    ASSERT_TRUE(verify(one));
    Certificate r1 = complex_to_real(one);
    ASSERT_EQ(r1.terms.size(), 2u);
    EXPECT_EQ(r1.terms[0].g, parse("1", 1));
    EXPECT_EQ(r1.terms[1].g, parse("X1"));
    EXPECT_EQ(r1.terms[0].lambda, 1);
    EXPECT_EQ(r1.terms[1].lambda, 1);
    EXPECT_TRUE(verify(r1).ok());

    ComplexCertificate nonreal{1, parse("1", 1), parse("X1"), 0, {}, {}};
    EXPECT_THROW(complex_to_real(nonreal), DomainError);
}

TEST(ComplexToReal, RandomCertificates) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        const int n = 2;
        ComplexCertificate cc{n, NcPoly(n), NcPoly(n), make_rational(1, 3), {}, {}};
        for (int j = 0; j < 3; ++j) {
            int gen = static_cast<int>(rng() % 3);
            int deg = gen == 0 ? 3 : 2;
            NcPoly p = testutil::random_poly(rng, n, deg, 3), q = testutil::random_poly(rng, n, deg, 3);
            Rational lam = abs(testutil::random_coeff(rng));
            // A term and its conjugate keep the target real.
            cc.terms.push_back({gen, lam, p, q});
            cc.terms.push_back({gen, lam, p, -q});
        }
        NcPoly a = testutil::random_poly(rng, n, 2, 2), b = testutil::random_poly(rng, n, 2, 2);
        cc.commutators.push_back({a, b, b, a});  // [a + ib, b + ia] has real part [a,b] - [b,a]
        auto [re, im] = cc.expansion();
        cc.target_re = re - NcPoly::constant(n, cc.epsilon);
        cc.target_im = im;
        if (!im.is_zero()) {
            EXPECT_THROW(complex_to_real(cc), DomainError);
            cc.commutators.clear();
            auto [re2, im2] = cc.expansion();
            ASSERT_TRUE(im2.is_zero());
            cc.target_re = re2 - NcPoly::constant(n, cc.epsilon);
            cc.target_im = NcPoly(n);
        }
        ASSERT_TRUE(verify(cc));
        Certificate c = complex_to_real(cc);
        EXPECT_TRUE(verify(c).ok());
        EXPECT_LE(c.level(), 3);
    }
}

TEST(Soundness, CertificatesBoundTraces) {
    std::vector<Certificate> certs = {example42(2), example42(5), motzkin_decomposition(make_rational(1, 4)),
                                      word_bound_certificate(2, ncpoly::Word{1, 2, 2}, 1)};
    std::mt19937_64 rng(17);
    for (const auto& c : certs) {
        ASSERT_TRUE(verify(c).ok());
        for (int t = 0; t < 100; ++t) {
            int s = 1 + static_cast<int>(rng() % 4);
            mateval::MatTuple A = mateval::sample_contraction_tuple(c.n, s, rng);
            EXPECT_GE(mateval::trace_value(c.target, A), -to_double(c.epsilon) * s - 1e-8);
        }
    }
}

TEST(Json, CertificateRoundTrip) {
    Certificate c = example42(4);
    json j = to_json(c);
    EXPECT_EQ(j.at("epsilon"), "1/4");
    Certificate back = certificate_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.target, c.target);
    EXPECT_EQ(back.terms.size(), c.terms.size());
    EXPECT_TRUE(verify(back).ok());
    EXPECT_EQ(to_json(back), j);
    EXPECT_THROW(certificate_from_json(json::parse(R"({"n": 2})")), ParseError);
    EXPECT_THROW(certificate_from_json(json::parse(R"({"n":1,"target":"X1 +","epsilon":"0","terms":[]})")), ParseError);
}
