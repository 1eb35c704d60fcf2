#include <gtest/gtest.h>

#include <random>
#include <set>

#include "freycond/gf2k.hpp"
#include "freycond/random_models.hpp"
#include "freycond/resultant.hpp"

using namespace freycond;

namespace {
using P = Poly<Rat>;
const P x = P::x();

P from_roots(const Rat& lc, const std::vector<Rat>& roots) {
    P out(lc);
    for (const auto& a : roots) out = out * (x - P(a));
    return out;
}

// Res(A, B) = lc(A)^m lc(B)^n prod (a_i - b_j).
Rat resultant_from_roots(const Rat& la, const std::vector<Rat>& ra, const Rat& lb, const std::vector<Rat>& rb) {
    Rat out = pow(la, static_cast<int>(rb.size())) * pow(lb, static_cast<int>(ra.size()));
    for (const auto& a : ra)
        for (const auto& b : rb) out = out * (a - b);
    return out;
}

std::vector<Rat> random_roots(gen::Rng& rng, int n) {
    std::vector<Rat> r;
    for (int i = 0; i < n; ++i) r.push_back(gen::rational(rng, 6));
    return r;
}
}  // namespace

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rat(6, -4).str(), "-3/2");
    EXPECT_EQ(Rat::parse(" 10/4 ").str(), "5/2");
    EXPECT_EQ(Rat(40).v2(), 3);
    EXPECT_EQ(Rat(3, 16).v2(), -4);
    EXPECT_THROW(Rat::parse("1/0"), Error);
    EXPECT_THROW(Rat::parse("x"), Error);
    EXPECT_THROW(Rat(0).v2(), Error);
}

TEST(Resultant, KnownValues) {
    EXPECT_EQ(resultant(x, x * x + P(1)), Rat(1));
    EXPECT_EQ(resultant(x - P(2), x - P(5)), Rat(-3));
    EXPECT_EQ(resultant(x * x - P(1), x - P(1)), Rat(0));
    EXPECT_THROW(resultant(P(), P()), Error);
}

TEST(Discriminant, KnownValues) {
    EXPECT_EQ(discriminant_poly(x * x + x.scaled(3) + P(2)), Rat(1));
    EXPECT_EQ(discriminant_poly(power(x, 3) - x.scaled(3) + P(2)), Rat(0));
    EXPECT_EQ(discriminant_poly(power(x, 3) - x.scaled(3) + P(Rat(7, 4))), Rat(405, 16));
}

TEST(Resultant, MatchesRootProductOracle) {
    gen::Rng rng(11);
    for (int it = 0; it < 60; ++it) {
        const int n = static_cast<int>(gen::uniform(rng, 1, 5)), m = static_cast<int>(gen::uniform(rng, 1, 5));
        const Rat la = gen::nonzero_rational(rng), lb = gen::nonzero_rational(rng);
        auto ra = random_roots(rng, n), rb = random_roots(rng, m);
        EXPECT_EQ(resultant(from_roots(la, ra), from_roots(lb, rb)), resultant_from_roots(la, ra, lb, rb));
    }
}

TEST(Resultant, AntisymmetryProperty) {
    gen::Rng rng(12);
    for (int it = 0; it < 100; ++it) {
        const int n = static_cast<int>(gen::uniform(rng, 0, 6)), m = static_cast<int>(gen::uniform(rng, 0, 6));
        P a = gen::polynomial(rng, n), b = gen::polynomial(rng, m);
        const Rat sign = (n * m) % 2 == 0 ? Rat(1) : Rat(-1);
        EXPECT_EQ(sign * resultant(a, b), resultant(b, a));
    }
}

TEST(Discriminant, MatchesRootDifferenceOracle) {
    gen::Rng rng(13);
    for (int it = 0; it < 60; ++it) {
        const int n = static_cast<int>(gen::uniform(rng, 2, 6));
        const Rat lc = gen::nonzero_rational(rng);
        auto roots = random_roots(rng, n);
        Rat expect = pow(lc, 2 * n - 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) expect = expect * (roots[i] - roots[j]) * (roots[i] - roots[j]);
        EXPECT_EQ(discriminant_poly(from_roots(lc, roots)), expect);
    }
}

TEST(Discriminant, VanishesExactlyOnRepeatedFactors) {
    gen::Rng rng(14);
    for (int it = 0; it < 80; ++it) {
        P base = gen::polynomial(rng, static_cast<int>(gen::uniform(rng, 1, 4)), 5);
        P rep = gen::polynomial(rng, static_cast<int>(gen::uniform(rng, 1, 2)), 5);
        const bool plant = it % 2 == 0;
        P h = plant ? base * rep * rep : base * rep;
        const bool repeated = gcd(h, h.derivative()).degree() >= 1;
        EXPECT_EQ(discriminant_poly(h).is_zero(), repeated);
        if (plant) { EXPECT_TRUE(discriminant_poly(h).is_zero()); }
    }
}

TEST(Discriminant, Homogeneity) {
    gen::Rng rng(15);
    for (int it = 0; it < 60; ++it) {
        const int n = static_cast<int>(gen::uniform(rng, 1, 7));
        P h = gen::polynomial(rng, n);
        const Rat c = gen::nonzero_rational(rng);
        EXPECT_EQ(discriminant_poly(h.scaled(c)), pow(c, 2 * n - 2) * discriminant_poly(h));
    }
}

TEST(Discriminant, OverPolynomialCoefficients) {
    // x^3 - 3 z x + s over Q[z][s]: -27 s^2 + 108 z^3.
    using D1 = Poly<Rat>;
    using D2 = Poly<D1>;
    const D2 z(D1::x()), s = D2::x();
    Poly<D2> h({s, z.scaled(D1(-3)), D2(0), D2(1)});
    const D2 expect = s * s * D2(D1(-27)) + D2(D1::monomial(Rat(108), 3));
    EXPECT_EQ(discriminant_poly(h), expect);
}

TEST(PolyOps, DivisionGcdAndSqrt) {
    P a = (x - P(1)) * (x + P(2)) * (x + P(2));
    P b = (x + P(2)) * (x - P(3));
    EXPECT_EQ(gcd(a, b), x + P(2));
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_EQ(exact_sqrt(a * a).value(), a);
    EXPECT_FALSE(exact_sqrt(a).has_value());
    EXPECT_EQ(P({Rat(1), Rat(2), Rat(3)}).reflected(3), P({Rat(0), Rat(3), Rat(2), Rat(1)}));
}

TEST(GF2k, ModulusTableIsIrreducible) {
    for (int k = 1; k <= 16; ++k) EXPECT_NO_THROW(GF2k f(k)) << k;
    EXPECT_THROW(GF2k(2, 0x5), Error);  // x^2 + 1 = (x + 1)^2
    EXPECT_NO_THROW(GF2k(3, 0xD));      // x^3 + x^2 + 1
}

TEST(GF2k, FieldAxiomsExhaustive) {
    for (int k : {1, 2, 3, 4}) {
        GF2k F(k);
        auto els = F.elements();
        std::set<std::uint32_t> squares;
        for (const auto& a : els) {
            squares.insert(a.square().bits());
            EXPECT_EQ(a.sqrt().square(), a);
            if (!a.is_zero()) { EXPECT_EQ(a * a.inverse(), F.one()); }
            for (const auto& b : els) {
                EXPECT_EQ(a * b, b * a);
                EXPECT_EQ(a + b + b, a);
                for (const auto& c : els) {
                    EXPECT_EQ((a * b) * c, a * (b * c));
                    EXPECT_EQ(a * (b + c), a * b + a * c);
                }
            }
        }
        EXPECT_EQ(squares.size(), els.size()) << "Frobenius not bijective for k=" << k;
    }
}

TEST(GF2k, RootKnownValues) {
    const GF2Poly X = GF2Poly::x();
    const GF2Poly one(GF2Elem(1));
    EXPECT_EQ(roots_in_gf2k(X * X + X, GF2k(1)).size(), 2u);
    GF2k F4(2);
    auto r = roots_in_gf2k(power(X, 3) + one, F4);
    ASSERT_EQ(r.size(), 3u);
    for (const auto& w : r)
        if (w != F4.one()) { EXPECT_TRUE((w * w + w + F4.one()).is_zero()); }
    EXPECT_TRUE(roots_in_gf2k(power(X, 3) + X * X + one, GF2k(1)).empty());
    EXPECT_EQ(roots_in_gf2k(power(X, 3) + X * X + one, GF2k(3)).size(), 3u);
}

TEST(GF2k, RootCountMatchesGcdWithFieldPolynomial) {
    gen::Rng rng(16);
    for (int it = 0; it < 60; ++it) {
        const int k = static_cast<int>(gen::uniform(rng, 1, 6));
        GF2k F(k);
        GF2Poly h = gen::gf2_polynomial(rng, F, static_cast<int>(gen::uniform(rng, 1, 7)));
        if (h.degree() < 1) continue;
        GF2Poly X(std::vector<GF2Elem>{F.zero(), F.one()});
        GF2Poly frob = X;
        for (int i = 0; i < k; ++i) frob = divmod(frob * frob, h).second;
        GF2Poly g = gcd(h, frob - X);  // product of distinct linear factors
        EXPECT_EQ(static_cast<int>(roots_in_gf2k(h, F).size()), std::max(0, g.degree()));
    }
}

TEST(GF2k, FactorDegrees) {
    const GF2Poly X = GF2Poly::x(), one(GF2Elem(1));
    GF2Poly cubic = power(X, 3) + X + one, quad = X * X + X + one;
    EXPECT_EQ(irreducible_factor_degrees(cubic * quad, GF2k(1)), (std::vector<int>{2, 3}));
    EXPECT_EQ(irreducible_factor_degrees(cubic, GF2k(3)), (std::vector<int>{1}));
    EXPECT_EQ(irreducible_factor_degrees(quad * X, GF2k(2)), (std::vector<int>{1}));
}

TEST(GF2k, EmbeddingIsAHomomorphism) {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {2, 6}, {3, 6}, {4, 8}}) {
        GF2k from(a), to(b);
        Embedding e(from, to);
        for (const auto& u : from.elements())
            for (const auto& v : from.elements()) {
                EXPECT_EQ(e(u * v), e(u) * e(v));
                EXPECT_EQ(e(u + v), e(u) + e(v));
            }
    }
    EXPECT_THROW(Embedding(GF2k(3), GF2k(4)), Error);
}

TEST(GF2k, ReduceMod2Examples) {
    const GF2Poly X = GF2Poly::x(), one(GF2Elem(1));
    EXPECT_EQ(reduce_mod2(power(x, 3) - x.scaled(3) + P(7)), power(X, 3) + X + one);
    EXPECT_EQ(reduce_mod2((x + P(2)) * (P(1) - x)), X * X + X);
    try {
        reduce_mod2(x.scaled(Rat(1, 2)) + P(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonIntegralCoefficient);
    }
}

TEST(GF2k, MixedFieldsRejected) {
    GF2k F4(2), F8(3);
    EXPECT_THROW(F4.generator() * F8.generator(), Error);
    EXPECT_EQ(GF2Elem(1) * F8.generator(), F8.generator());
}
