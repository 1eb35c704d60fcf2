#include <gtest/gtest.h>

#include "fiber_oracle.hpp"
#include "freycond/char2_fibers.hpp"
#include "freycond/pipelines.hpp"
#include "freycond/random_models.hpp"

using namespace freycond;
using namespace fiber_oracle;

namespace {

const GF2Poly X = GF2Poly::x();
const GF2Poly ONE(GF2Elem(1));

// Checks agreement over the search field and completeness over the largest
// multiple of it with degree <= 8.
void expect_oracle_agreement(const SpecialFiber& F) {
    const int k = coefficient_degree(F);
    const int m = singular_search_field(F).k();
    ASSERT_LE(m, 8);
    EXPECT_EQ(reported(F), brute_force(F, k, m)) << to_string(F);
    const int big = (8 / m) * m;
    if (big != m) {
        EXPECT_EQ(brute_force(F, k, big).size(), reported(F).size()) << to_string(F);
    }
}

}  // namespace

TEST(SingularPoints, ToricFiberOfThe35Family) {
    SpecialFiber F{power(X, 3) + ONE, X + ONE, 2};
    auto pts = singular_points(F);
    ASSERT_EQ(pts.size(), 2u);
    for (const auto& p : pts) {
        EXPECT_EQ(p.field_degree, 2);
        EXPECT_NE(p.x, GF2k(2).one());
        EXPECT_TRUE((power(X, 3) + ONE)(p.x).is_zero());
        EXPECT_EQ(p.kind, PointKind::Node);
        EXPECT_EQ(classify_point(F, Patch::Affine, p.x, p.y), PointKind::Node);
    }
    auto ft = fiber_type(F);
    EXPECT_EQ(ft.kind, FiberKind::Nodal);
    EXPECT_EQ(ft.nodes, 2);
}

TEST(SingularPoints, TwoNodesAtZeroAndOne) {
    SpecialFiber F{X * X + X, GF2Poly(), 1};
    auto pts = singular_points(F);
    ASSERT_EQ(pts.size(), 2u);
    EXPECT_EQ(pts[0].x.bits(), 0u);
    EXPECT_EQ(pts[1].x.bits(), 1u);
    for (const auto& p : pts) {
        EXPECT_TRUE(p.y.is_zero());
        EXPECT_EQ(p.kind, PointKind::Node);
    }
    EXPECT_EQ(fiber_type(F).nodes, 2);
}

TEST(SingularPoints, SmoothFiber) {
    SpecialFiber F{ONE, power(X, 3) + X, 1};
    EXPECT_TRUE(singular_points(F).empty());
    EXPECT_EQ(fiber_type(F).kind, FiberKind::Smooth);
}

TEST(ClassifyPoint, Examples) {
    const GF2Elem zero(0);
    EXPECT_EQ(classify_point(SpecialFiber{GF2Poly(), power(X, 3), 1}, Patch::Affine, zero, zero),
              PointKind::NonSemistable);
    EXPECT_EQ(classify_point(SpecialFiber{ONE, power(X, 3), 1}, Patch::Affine, zero, zero), PointKind::Smooth);
    try {
        classify_point(SpecialFiber{ONE, power(X, 3), 1}, Patch::Affine, GF2Elem(1), zero);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PointNotOnCurve);
    }
    EXPECT_EQ(fiber_type(SpecialFiber{GF2Poly(), power(X, 3), 1}).kind, FiberKind::NonSemistable);
}

TEST(SingularPoints, PointAtInfinity) {
    // T = u^2 + u, S = u^3: a node at u = 0.
    SpecialFiber F{X + ONE, X, 1};
    auto pts = singular_points(F);
    ASSERT_FALSE(pts.empty());
    EXPECT_EQ(pts.back().patch, Patch::Infinity);
    EXPECT_EQ(pts.back().kind, PointKind::Node);
    expect_oracle_agreement(F);
}

TEST(SingularPoints, NonReducedFiberRejected) {
    try {
        singular_points(SpecialFiber{GF2Poly(), X * X + ONE, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonReducedFiber);
    }
}

TEST(SingularPoints, BruteForceOracleOnRandomFibers) {
    gen::Rng rng(41);
    int tested = 0;
    while (tested < 50) {
        const int k = static_cast<int>(gen::uniform(rng, 1, 4));
        const int g = static_cast<int>(gen::uniform(rng, 1, 3));
        const GF2k F(k);
        GF2Poly Q = gen::gf2_polynomial(rng, F, static_cast<int>(gen::uniform(rng, -1, g + 1)));
        if (gen::uniform(rng, 0, 3) == 0) Q = GF2Poly();
        GF2Poly Pp = gen::gf2_polynomial(rng, F, 2 * g + 2);
        SpecialFiber fib{Q, Pp, g};
        if (Q.is_zero() && Pp.derivative().is_zero()) continue;
        if (singular_search_field(fib).k() > 8) continue;
        expect_oracle_agreement(fib);
        ++tested;
    }
}

TEST(SingularPoints, PipelineFibersMatchOracle) {
    for (int r : {3, 5, 7}) {
        for (auto c : {PprCase::VNeg, PprCase::VTPos, PprCase::V1mtPos}) {
            auto res = pipeline_ppr_even(c, r);
            if (singular_search_field(res.fiber).k() <= 8) expect_oracle_agreement(res.fiber);
        }
    }
    for (auto c : {PprCase::VNeg, PprCase::VTPos, PprCase::V1mtPos}) expect_oracle_agreement(pipeline_35p(c).fiber);
}

TEST(SingularPoints, NodeCountsOfPlusFamilyFibers) {
    for (int r : {3, 5, 7, 11}) {
        auto pos = pipeline_ppr_even(PprCase::VTPos, r);
        EXPECT_EQ(pos.fiber_type.kind, FiberKind::Nodal) << r;
        EXPECT_EQ(pos.fiber_type.nodes, (r + 1) / 2) << r;
        auto neg = pipeline_ppr_even(PprCase::V1mtPos, r);
        EXPECT_EQ(neg.fiber_type.kind, FiberKind::Nodal) << r;
        EXPECT_EQ(neg.fiber_type.nodes, (r - 1) / 2) << r;
    }
}
