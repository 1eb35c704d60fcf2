#include <gtest/gtest.h>

#include <map>

#include "freycond/classifier.hpp"
#include "freycond/random_models.hpp"

using namespace freycond;

namespace {

const Signature kAll[] = {Signature::PprEven, Signature::PprOdd, Signature::Rrp, Signature::TwoRp, Signature::P35};

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::AssertionFailed;
}

// Parameters with v2(t) or v2(1 - t) running over a window.
std::vector<Rat> grid(int lo, int hi) {
    std::vector<Rat> out;
    for (int v = lo; v <= hi; ++v) {
        if (v == 0) continue;
        for (const Rat& t : sample_t_with_vt(v)) out.push_back(t);
        if (v > 0)
            for (const Rat& t : sample_t_with_v1mt(v)) out.push_back(t);
    }
    return out;
}

}  // namespace

TEST(Classifier, ResidueDegreesAndInertialTypes) {
    const std::map<int, int> f = {{3, 1}, {5, 2}, {7, 3}, {11, 5}, {13, 6}};
    for (auto [r, d] : f) EXPECT_EQ(residue_degree(r), d) << r;
    EXPECT_EQ(inertial_type(7), "principal_series");
    for (int r : {3, 5, 11, 13}) EXPECT_EQ(inertial_type(r), "supercuspidal") << r;
    EXPECT_EQ(kind_of([] { residue_degree(9); }), ErrorKind::NotOddPrime);
}

TEST(Classifier, Examples) {
    auto a = classify(Signature::PprEven, 5, Rat(1, 32));
    EXPECT_EQ(a.exponent, 0);
    EXPECT_EQ(a.case_label, "v_neg");
    EXPECT_EQ(classify(Signature::PprEven, 5, Rat(1, 16)).exponent, 2);
    EXPECT_EQ(classify(Signature::PprEven, 3, Rat(4)).exponent, 1);
    EXPECT_EQ(classify(Signature::PprEven, 3, Rat(4)).inertial_type, "toric");

    auto b = classify(Signature::Rrp, 3, Rat(16));
    EXPECT_EQ(b.case_label, "v_t_ge_4");
    EXPECT_EQ(b.exponent, 0);
    EXPECT_EQ(b.inertial_type, "good");
    EXPECT_EQ(classify(Signature::Rrp, 3, Rat(32)).exponent, 2);
    EXPECT_EQ(classify(Signature::TwoRp, 5, Rat(1) + pow2(6)).exponent, 0);
    EXPECT_EQ(classify(Signature::TwoRp, 5, Rat(1) + pow2(7)).exponent, 2);

    EXPECT_EQ(classify(Signature::P35, 0, Rat(8)).exponent, 0);
    EXPECT_EQ(classify(Signature::P35, 0, Rat(4)).exponent, 2);
    EXPECT_EQ(classify(Signature::P35, 0, Rat(1, 4)).exponent, 1);
    EXPECT_EQ(classify(Signature::P35, 0, Rat(1) - pow2(5)).exponent, 0);
}

TEST(Classifier, NotCoveredAndErrors) {
    EXPECT_FALSE(classify(Signature::Rrp, 3, Rat(6)).exponent.has_value());
    EXPECT_FALSE(classify(Signature::PprOdd, 3, Rat(1, 4)).exponent.has_value());
    EXPECT_FALSE(classify(Signature::TwoRp, 3, Rat(1) + pow2(5)).exponent.has_value());
    EXPECT_EQ(kind_of([] { cross_validate(Signature::Rrp, 3, Rat(6)); }), ErrorKind::NotCovered);
    EXPECT_EQ(kind_of([] { classify(Signature::P35, 0, Rat(1)); }), ErrorKind::DegenerateParameter);
    EXPECT_EQ(kind_of([] { classify(Signature::PprEven, 3, Rat(0)); }), ErrorKind::DegenerateParameter);
    EXPECT_EQ(kind_of([] { classify(Signature::PprEven, 9, Rat(2)); }), ErrorKind::NotOddPrime);
    EXPECT_FALSE(parse_signature("ppr").has_value());
    for (Signature s : kAll) EXPECT_EQ(parse_signature(to_string(s)), s);
}

TEST(Classifier, ThirtyFiveInertialAnnotation) {
    EXPECT_EQ(classify(Signature::P35, 0, Rat(4)).inertial_type, inertial_type_for(3, residue_degree(5)));
    EXPECT_EQ(classify(Signature::P35, 0, Rat(4)).inertial_type, "principal_series");
    EXPECT_EQ(classify(Signature::P35, 0, Rat(-1)).exponent, 2);
    EXPECT_EQ(classify(Signature::P35, 0, Rat(-1)).inertial_type, "supercuspidal");
}

TEST(Classifier, EvenSymmetryUnderOneMinusT) {
    gen::Rng rng(61);
    for (int it = 0; it < 300; ++it) {
        Rat t = gen::nonzero_rational(rng, 40) * pow2(static_cast<int>(gen::uniform(rng, -12, 12)));
        if (t == Rat(1)) continue;
        for (int r : {3, 5, 7})
            EXPECT_EQ(classify(Signature::PprEven, r, t).exponent, classify(Signature::PprEven, r, Rat(1) - t).exponent)
                << t.str();
    }
}

TEST(Classifier, EvenSignaturesAreExhaustive) {
    gen::Rng rng(62);
    for (int it = 0; it < 500; ++it) {
        Rat t = gen::nonzero_rational(rng, 60) * pow2(static_cast<int>(gen::uniform(rng, -15, 15)));
        if (t == Rat(1)) continue;
        EXPECT_TRUE(classify(Signature::P35, 0, t).exponent.has_value()) << t.str();
        for (int r : {3, 5, 7, 11}) EXPECT_TRUE(classify(Signature::PprEven, r, t).exponent.has_value()) << t.str();
    }
}

TEST(Classifier, TableRowsReproduced) {
    const auto rows = table_rows();
    std::vector<int> hits(rows.size(), 0);
    for (int r : {3, 5, 7})
        for (const Rat& t : grid(-12, 12)) {
            const Valuations v = valuations(t);
            for (Signature sig : kAll) {
                const int rr = sig == Signature::P35 ? 0 : r;
                const auto rep = classify(sig, rr, t);
                int matched = 0;
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (rows[i].signature != sig || !rows[i].matches(r, v.vt, v.v1mt)) continue;
                    ++matched;
                    ++hits[i];
                    EXPECT_EQ(rep.exponent, rows[i].exponent) << to_string(sig) << " r=" << r << " t=" << t.str();
                }
                EXPECT_LE(matched, 1);
                EXPECT_EQ(matched == 1, rep.exponent.has_value()) << to_string(sig) << " t=" << t.str();
            }
        }
    for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_GT(hits[i], 0) << "row " << i;
}

TEST(Classifier, OddOracleModeCongruence) {
    // With (z, s) = (1, 2 - 4t) and v2(t) <= -4: base-defined iff v2(t) = -4 mod r.
    for (int r : {3, 5, 7})
        for (int v = -4; v >= -16; --v)
            for (const Rat& t : sample_t_with_vt(v)) {
                auto rep = classify(Signature::PprOdd, r, t, Mode::Oracle);
                EXPECT_EQ(rep.exponent, mod_floor(v, r) == mod_floor(-4, r) ? 0 : 2) << r << " " << t.str();
            }
}

TEST(Classifier, OddDegreeConsistentWithFieldOfDefinition) {
    for (int r : {3, 5, 7})
        for (const Rat& t : grid(-12, 14))
            for (Signature sig : {Signature::Rrp, Signature::TwoRp, Signature::PprOdd}) {
                auto rep = classify(sig, r, t, Mode::Oracle);
                if (!rep.exponent) continue;
                auto [z, s] = odd_family_zs(sig, r, t);
                EXPECT_EQ(*rep.exponent == 0, field_of_definition(z, s, r)) << to_string(sig) << " " << t.str();
                if (sig != Signature::PprOdd) {
                    EXPECT_EQ(classify(sig, r, t).exponent, rep.exponent) << to_string(sig) << " " << t.str();
                }
            }
}

TEST(CrossValidate, Examples) {
    auto a = cross_validate(Signature::Rrp, 3, Rat(16));
    EXPECT_TRUE(a.agree);
    EXPECT_EQ(a.oracle_exponent, 0);
    EXPECT_TRUE(a.conflict.empty());

    auto b = cross_validate(Signature::PprOdd, 3, Rat(1, 16));
    EXPECT_FALSE(b.agree);
    EXPECT_EQ(b.printed.exponent, 2);
    EXPECT_EQ(b.oracle_exponent, 0);
    EXPECT_FALSE(b.conflict.empty());

    auto c = cross_validate(Signature::PprOdd, 3, Rat(1, 256));
    EXPECT_EQ(c.printed.exponent, 0);
    EXPECT_EQ(c.oracle_exponent, 2);

    auto d = cross_validate(Signature::PprEven, 5, Rat(1, 32));
    EXPECT_TRUE(d.agree);
}

TEST(CrossValidate, AgreementOutsideTheOddPprRows) {
    for (int r : {3, 5, 7})
        for (const Rat& t : grid(-10, 12))
            for (Signature sig : {Signature::PprEven, Signature::Rrp, Signature::TwoRp, Signature::P35}) {
                const int rr = sig == Signature::P35 ? 0 : r;
                if (!classify(sig, rr, t).exponent) continue;
                auto cv = cross_validate(sig, rr, t);
                EXPECT_TRUE(cv.agree) << cv.conflict;
                EXPECT_EQ(cv.oracle_mode.exponent, cv.printed.exponent);
            }
}

TEST(CrossValidate, OddPprConflictsFollowTheShiftedResidue) {
    int conflicts = 0;
    for (int r : {3, 5, 7})
        for (int v = -4; v >= -12; --v) {
            auto cv = cross_validate(Signature::PprOdd, r, pow2(v));
            const bool printed_good = mod_floor(v, r) == mod_floor(-2, r);
            const bool oracle_good = mod_floor(v, r) == mod_floor(-4, r);
            EXPECT_EQ(cv.agree, printed_good == oracle_good) << r << " " << v;
            conflicts += !cv.agree;
        }
    EXPECT_GT(conflicts, 0);
}
