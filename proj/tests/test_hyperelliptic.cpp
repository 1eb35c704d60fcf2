#include <gtest/gtest.h>

#include "freycond/frey_families.hpp"
#include "freycond/hyperelliptic.hpp"
#include "freycond/random_models.hpp"

using namespace freycond;

namespace {
using P = Poly<Rat>;
using PT = Poly<P>;  // polynomials in x over Q[t]
const P x = P::x();

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::Usage;
}
}  // namespace

TEST(HyperDiscriminant, Examples) {
    EXPECT_EQ(hyper_discriminant(HyperEq<Rat>(P(1), power(x, 3), 1)), Rat(-27));
    EXPECT_EQ(hyper_discriminant(HyperEq<Rat>({}, power(x, 3) - x.scaled(3) + P(Rat(7, 4)), 1)), Rat(405));
}

TEST(HyperDiscriminant, PlusFamilyAtThree) {
    // Delta_E = 2^{-8} Delta(4F) = 2^4 Delta(F); Delta(F) = 2^8 3^3 t^3 (1 - t).
    const P t = P::x();
    const HyperEq<P> E = build_curve<P>(FamilyId::CPlus, 3, {t});
    const P t3_1mt = power(t, 3) * (P(1) - t);
    EXPECT_EQ(discriminant_poly(E.P), t3_1mt.scaled(Rat(256 * 27)));
    EXPECT_EQ(hyper_discriminant(E), t3_1mt.scaled(Rat(4096 * 27)));
}

TEST(HyperDiscriminant, MonicOddShortcutAgrees) {
    gen::Rng rng(31);
    for (int it = 0; it < 60; ++it) {
        const int g = static_cast<int>(gen::uniform(rng, 1, 3));
        P Pp = gen::polynomial(rng, 2 * g, 6) + P::monomial(Rat(1), 2 * g + 1);
        P Q = gen::polynomial(rng, static_cast<int>(gen::uniform(rng, -1, g)), 6);
        HyperEq<Rat> E(Q, Pp, g);
        EXPECT_EQ(hyper_discriminant(E), hyper_discriminant_monic_odd(E));
    }
}

TEST(InfinityPatch, Examples) {
    auto a = infinity_patch(HyperEq<Rat>({}, power(x, 3) + P(1), 1));
    EXPECT_TRUE(a.Q.is_zero());
    EXPECT_EQ(a.P, x + power(x, 4));
    auto b = infinity_patch(HyperEq<Rat>(P(1), power(x, 3), 1));
    EXPECT_EQ(b.P, x);
    EXPECT_EQ(b.Q, x * x);
}

TEST(InfinityPatch, InvolutionPreservingDiscriminant) {
    gen::Rng rng(32);
    for (int it = 0; it < 100; ++it) {
        const HyperEq<Rat> E = gen::hyper_equation(rng, static_cast<int>(gen::uniform(rng, 1, 4)));
        const HyperEq<Rat> S = infinity_patch(E);
        if (!S.in_window() || (S.R().degree() < 2 * S.g + 1)) continue;
        EXPECT_EQ(infinity_patch(S), E);
        EXPECT_EQ(hyper_discriminant(S), hyper_discriminant(E));
    }
}

TEST(ApplyChange, IdentityIsTrivial) {
    gen::Rng rng(33);
    const HyperEq<Rat> E = gen::hyper_equation(rng, 2);
    auto res = apply_change(E, MobiusChange<Rat>::identity());
    EXPECT_EQ(res.eq, E);
    EXPECT_EQ(res.disc_factor, Rat(1));
}

TEST(ApplyChange, PlusFamilySquareCompletion) {
    const P t = P::x();
    for (int r : {3, 5, 7}) {
        const int g = (r - 1) / 2;
        const HyperEq<P> E = build_curve<P>(FamilyId::CPlus, r, {t});
        const PT X = PT::x();
        const PT hm = lift<P>(omega_min_poly(r).negated_argument());
        auto m = MobiusChange<P>::scaling(P(1), P(2), (X + PT(P(2))) * hm);
        auto res = apply_change(E, m);
        EXPECT_EQ(res.eq.Q, (X + PT(P(2))) * hm);
        EXPECT_EQ(res.eq.P, (X + PT(P(2))).scaled(-t));
        const P expect = power(t, (r + 3) / 2) * power(P(1) - t, g) * P(pow(Rat(r), r));
        EXPECT_EQ(hyper_discriminant(res.eq), expect) << r;
        EXPECT_EQ(res.disc_factor * hyper_discriminant(E), expect) << r;
    }
}

TEST(ApplyChange, DiscriminantLawOverRationals) {
    auto tally = gen::change_law_trials(34, 200, 1, 3);
    EXPECT_EQ(tally.trials, 200);
    EXPECT_EQ(tally.passed, 200);
}

TEST(ApplyChange, DiscriminantLawOverPolynomialsInT) {
    gen::Rng rng(35);
    const P t = P::x();
    int done = 0;
    while (done < 25) {
        const int g = static_cast<int>(gen::uniform(rng, 1, 2));
        // P(x) with coefficients linear in t, fixed rational leading coefficient.
        std::vector<P> pc;
        const int degP = 2 * g + 1 + static_cast<int>(gen::uniform(rng, 0, 1));
        for (int i = 0; i < degP; ++i) pc.push_back(P(gen::rational(rng, 4)) + t.scaled(gen::rational(rng, 4)));
        pc.push_back(P(gen::nonzero_rational(rng, 4)));
        HyperEq<P> E({}, PT(pc), g);
        if (hyper_discriminant(E).is_zero()) continue;
        auto mr = gen::change(rng, g);
        MobiusChange<P> m;
        m.a = P(mr.a);
        m.b = P(mr.b);
        m.c = P(mr.c);
        m.d = P(mr.d);
        m.e = P(mr.e);
        m.R = PT({P(gen::rational(rng, 3)), t.scaled(gen::rational(rng, 3))});
        try {
            auto res = apply_change(E, m);
            EXPECT_EQ(hyper_discriminant(res.eq), res.disc_factor * hyper_discriminant(E));
            ++done;
        } catch (const Error& e) {
            ASSERT_EQ(e.kind(), ErrorKind::DegreeViolation);
        }
    }
}

TEST(ApplyChange, Errors) {
    const HyperEq<Rat> E({}, power(x, 3) + P(1), 1);
    MobiusChange<Rat> bad;
    bad.a = Rat(1);
    bad.b = Rat(2);
    bad.c = Rat(2);
    bad.d = Rat(4);
    EXPECT_EQ(kind_of([&] { apply_change(E, bad); }), ErrorKind::SingularChange);
    EXPECT_EQ(kind_of([&] { apply_change(E, MobiusChange<Rat>::scaling(Rat(1), Rat(0))); }),
              ErrorKind::SingularChange);
    EXPECT_EQ(kind_of([&] { hyper_discriminant(HyperEq<Rat>({}, power(x, 5), 1)); }), ErrorKind::DegreeViolation);
}

TEST(QuadraticTwist, Examples) {
    const HyperEq<Rat> E({}, power(x, 3) + P(1), 1);
    EXPECT_EQ(quadratic_twist(E, Rat(1)), E);
    EXPECT_EQ(quadratic_twist(E, Rat(2)).P, power(x, 3) + P(8));
    EXPECT_EQ(kind_of([&] { quadratic_twist(HyperEq<Rat>(P(1), power(x, 3), 1), Rat(2)); }), ErrorKind::NotTwistable);
    EXPECT_EQ(kind_of([&] { quadratic_twist(E, Rat(0)); }), ErrorKind::ZeroDelta);
}

TEST(QuadraticTwist, MatchesParameterTwistOfCzs) {
    gen::Rng rng(36);
    for (int it = 0; it < 40; ++it) {
        const int r = it % 2 == 0 ? 3 : 5;
        const Rat z = gen::nonzero_rational(rng), s = gen::nonzero_rational(rng), d = gen::nonzero_rational(rng, 5);
        const HyperEq<Rat> E = build_curve<Rat>(FamilyId::Czs, r, {z, s});
        EXPECT_EQ(quadratic_twist(E, d), build_curve<Rat>(FamilyId::Czs, r, {d * d * z, pow(d, r) * s}));
    }
}

TEST(Nonsingularity, FamiliesAwayFromDegenerateParameters) {
    gen::Rng rng(37);
    for (int it = 0; it < 30; ++it) {
        Rat t = gen::nonzero_rational(rng);
        if (t == Rat(1)) continue;
        for (FamilyId f : {FamilyId::CPlus, FamilyId::CMinus, FamilyId::Hrr, FamilyId::H2r, FamilyId::H35})
            for (int r : {3, 5}) EXPECT_FALSE(hyper_discriminant(build_curve_rat(f, r, {t})).is_zero());
    }
    EXPECT_EQ(kind_of([] { build_curve_rat(FamilyId::Hrr, 3, {Rat(1)}); }), ErrorKind::DegenerateParameter);
}
