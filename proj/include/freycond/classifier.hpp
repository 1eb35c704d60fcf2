#pragma once

// Conductor exponents at the prime above 2, up to quadratic twist.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "freycond/errors.hpp"
#include "freycond/frey_families.hpp"
#include "freycond/pipelines.hpp"
#include "freycond/rational.hpp"

namespace freycond {

enum class Signature { PprEven, PprOdd, Rrp, TwoRp, P35 };
enum class Mode { Printed, Oracle };

constexpr std::string_view to_string(Signature s) noexcept {
    switch (s) {
        case Signature::PprEven: return "ppr-even";
        case Signature::PprOdd: return "ppr-odd";
        case Signature::Rrp: return "rrp";
        case Signature::TwoRp: return "2rp";
        case Signature::P35: return "35p";
    }
    return "unknown";
}

inline std::optional<Signature> parse_signature(std::string_view s) {
    for (Signature sig : {Signature::PprEven, Signature::PprOdd, Signature::Rrp, Signature::TwoRp, Signature::P35})
        if (to_string(sig) == s) return sig;
    return std::nullopt;
}

constexpr std::string_view to_string(Mode m) noexcept { return m == Mode::Printed ? "printed" : "oracle"; }

/// Multiplicative order of 2 in (Z/r)^x / {+-1}.
inline int residue_degree(int r) {
    require_odd_prime(r);
    long p = 2 % r;
    for (int f = 1; f < r; ++f) {
        if (p == 1 || p == r - 1) return f;
        p = (p * 2) % r;
    }
    fail(ErrorKind::AssertionFailed, "order of 2 not found");
}

/// principal_series iff r divides 2^f - 1, f the residue degree.
inline std::string inertial_type(int r) {
    const int f = residue_degree(r);
    mpz_class q = (mpz_class(1) << f) - 1;
    return mpz_divisible_ui_p(q.get_mpz_t(), static_cast<unsigned long>(r)) ? "principal_series" : "supercuspidal";
}

/// Ramification e over a residue field F_{2^f}: principal series iff e | 2^f - 1.
inline std::string inertial_type_for(int e, int f) {
    mpz_class q = (mpz_class(1) << f) - 1;
    return mpz_divisible_ui_p(q.get_mpz_t(), static_cast<unsigned long>(e)) ? "principal_series" : "supercuspidal";
}

struct Valuations {
    int vt = 0;    // v2(t)
    int v1mt = 0;  // v2(1 - t)
    std::string regime;  // v_t_pos, v_1mt_pos, v_neg
};

/// Exactly one of v2(t) > 0, v2(1-t) > 0, v2(t) < 0 holds for t outside {0, 1}.
inline Valuations valuations(const Rat& t) {
    if (t.is_zero() || t == Rat(1)) fail(ErrorKind::DegenerateParameter, "t must avoid {0, 1}");
    Valuations v{t.v2(), (Rat(1) - t).v2(), ""};
    if (v.vt > 0) v.regime = "v_t_pos";
    else if (v.v1mt > 0) v.regime = "v_1mt_pos";
    else if (v.vt < 0) v.regime = "v_neg";
    else fail(ErrorKind::AssertionFailed, "no valuation regime for t = " + t.str());
    return v;
}

inline int mod_floor(int a, int m) { return ((a % m) + m) % m; }

struct ConductorReport {
    Signature signature = Signature::PprEven;
    int r = 0;
    Rat t;
    std::string case_label;
    std::optional<int> exponent;  // nullopt = not covered
    std::string inertial_type;    // good, toric, principal_series, supercuspidal, or empty
    std::string source;
    Mode mode = Mode::Printed;
};

namespace detail {

inline void annotate(ConductorReport& rep, int e35 = 0) {
    if (!rep.exponent) return;
    switch (*rep.exponent) {
        case 0: rep.inertial_type = "good"; break;
        case 1: rep.inertial_type = "toric"; break;
        default:
            rep.inertial_type = rep.signature == Signature::P35 ? inertial_type_for(e35, residue_degree(5))
                                                                 : inertial_type(rep.r);
    }
}

}  // namespace detail

/// (z, s) of the odd-degree family attached to a signature.
inline std::pair<Rat, Rat> odd_family_zs(Signature sig, int r, const Rat& t) {
    switch (sig) {
        case Signature::PprOdd: return family_zs<Rat>(FamilyId::CMinus, r, t);
        case Signature::Rrp: return family_zs<Rat>(FamilyId::Hrr, r, t);
        case Signature::TwoRp: return family_zs<Rat>(FamilyId::H2r, r, t);
        default: fail(ErrorKind::Usage, std::string(to_string(sig)) + " is not an odd-degree signature");
    }
}

inline ConductorReport classify(Signature sig, int r, const Rat& t, Mode mode = Mode::Printed) {
    if (sig != Signature::P35) require_odd_prime(r);
    const Valuations v = valuations(t);
    ConductorReport rep;
    rep.signature = sig;
    rep.r = sig == Signature::P35 ? 0 : r;
    rep.t = t;
    rep.mode = mode;
    rep.case_label = v.regime;
    int e35 = 0;

    switch (sig) {
        case Signature::PprEven:
            if (v.regime == "v_neg") {
                bool good = mod_floor(v.vt, r) == 0;
                rep.exponent = good ? 0 : 2;
                rep.source = good ? "table: (p,p,r) even, v2(t) < 0, v2(t) = 0 mod r"
                                  : "table: (p,p,r) even, v2(t) < 0, v2(t) != 0 mod r";
            } else {
                rep.exponent = 1;
                rep.source = v.regime == "v_t_pos" ? "table: (p,p,r) even, v2(t) > 0"
                                                   : "table: (p,p,r) even, v2(1-t) > 0";
            }
            break;
        case Signature::PprOdd:
            if (v.regime == "v_neg" && v.vt <= -4) {
                rep.case_label = "v_neg_le_-4";
                bool good;
                if (mode == Mode::Printed) {
                    good = mod_floor(v.vt, r) == mod_floor(-2, r);
                    rep.source = good ? "table: (p,p,r) odd, v2(t) <= -4, v2(t) = -2 mod r"
                                      : "table: (p,p,r) odd, v2(t) <= -4, v2(t) != -2 mod r";
                } else {
                    good = field_of_definition(Rat(1), Rat(2) - Rat(4) * t, r);
                    rep.source = good ? "oracle: r | v2(s'^2) + 4 for (z, s) = (1, 2 - 4t)"
                                      : "oracle: r does not divide v2(s'^2) + 4 for (z, s) = (1, 2 - 4t)";
                }
                rep.exponent = good ? 0 : 2;
            } else {
                rep.source = "outside v2(t) <= -4";
            }
            break;
        case Signature::Rrp: {
            const int m = v.vt + v.v1mt;  // v2(t(t-1))
            if (v.regime != "v_neg" && m >= 4) {
                rep.case_label = v.regime == "v_t_pos" ? "v_t_ge_4" : "v_1mt_ge_4";
                bool good = mod_floor(m, r) == mod_floor(4, r);
                rep.exponent = good ? 0 : 2;
                rep.source = std::string("table: (r,r,p), v2(t(t-1)) >= 4, ") + (good ? "= 4 mod r" : "!= 4 mod r");
            } else {
                rep.source = "outside v2(t(t-1)) >= 4";
            }
            break;
        }
        case Signature::TwoRp:
            if (v.regime == "v_1mt_pos" && v.v1mt >= 6) {
                rep.case_label = "v_1mt_ge_6";
                bool good = mod_floor(v.v1mt, r) == mod_floor(6, r);
                rep.exponent = good ? 0 : 2;
                rep.source = std::string("table: (2,r,p), v2(t-1) >= 6, ") + (good ? "= 6 mod r" : "!= 6 mod r");
            } else {
                rep.source = "outside v2(t-1) >= 6";
            }
            break;
        case Signature::P35:
            if (v.regime == "v_t_pos") {
                bool good = v.vt % 3 == 0;
                rep.exponent = good ? 0 : 2;
                e35 = 3;
                rep.source = std::string("table: (3,5,p), v2(t) > 0, ") + (good ? "= 0 mod 3" : "!= 0 mod 3");
            } else if (v.regime == "v_1mt_pos") {
                bool good = v.v1mt % 5 == 0;
                rep.exponent = good ? 0 : 2;
                e35 = 5;
                rep.source = std::string("table: (3,5,p), v2(1-t) > 0, ") + (good ? "= 0 mod 5" : "!= 0 mod 5");
            } else {
                rep.exponent = 1;
                rep.source = "table: (3,5,p), v2(t) < 0";
            }
            break;
    }
    detail::annotate(rep, e35);
    return rep;
}

struct CrossValidation {
    ConductorReport printed;
    ConductorReport oracle_mode;
    int oracle_exponent = 0;     // from the construction
    bool agree = false;          // printed exponent == construction exponent
    std::string witness_model;
    std::string witness;         // pipeline label and field of definition
    std::string conflict;        // non-empty on disagreement
};

/// Runs both classification modes and the matching construction; never
/// decides which side is right, only reports.
inline CrossValidation cross_validate(Signature sig, int r, const Rat& t) {
    CrossValidation cv;
    cv.printed = classify(sig, r, t, Mode::Printed);
    cv.oracle_mode = classify(sig, r, t, Mode::Oracle);
    if (!cv.printed.exponent)
        fail(ErrorKind::NotCovered, std::string(to_string(sig)) + " at t = " + t.str() + ": " + cv.printed.source);
    const Valuations v = valuations(t);

    switch (sig) {
        case Signature::PprOdd:
        case Signature::Rrp:
        case Signature::TwoRp: {
            auto [z, s] = odd_family_zs(sig, r, t);
            auto res = pipeline_odd_good_reduction(z, s, r);
            cv.oracle_exponent = res.base_defined ? 0 : 2;
            cv.witness_model = res.model;
            cv.witness = "odd-good, twist " + std::to_string(res.twist) + ", " + res.field_of_definition;
            break;
        }
        case Signature::PprEven: {
            if (v.regime == "v_neg") {
                const Rat w(mpz_class(-v.vt), mpz_class(r));
                auto res = pipeline_ppr_even(PprCase::VNeg, r, FormalParam::point("u", w));
                cv.oracle_exponent = w.is_integer() ? 0 : 2;
                cv.witness_model = res.model;
                cv.witness = "ppr-even/v_neg, w = " + w.str() + (w.is_integer() ? ", unramified" : ", ramified");
            } else {
                auto c = v.regime == "v_t_pos" ? PprCase::VTPos : PprCase::V1mtPos;
                const Rat w(v.regime == "v_t_pos" ? v.vt : v.v1mt);
                auto res = pipeline_ppr_even(c, r, FormalParam::point("u", w));
                cv.oracle_exponent = res.fiber_type.kind == FiberKind::Nodal ? 1 : -1;
                cv.witness_model = res.model;
                cv.witness = res.label + ", " + std::to_string(res.fiber_type.nodes) + " nodes";
            }
            break;
        }
        case Signature::P35: {
            if (v.regime == "v_neg") {
                auto res = pipeline_35p(PprCase::VNeg);
                cv.oracle_exponent = res.fiber_type.kind == FiberKind::Nodal ? 1 : -1;
                cv.witness_model = res.model;
                cv.witness = res.label + ", " + std::to_string(res.fiber_type.nodes) + " nodes";
            } else {
                const bool tpos = v.regime == "v_t_pos";
                auto res = pipeline_35p(tpos ? PprCase::VTPos : PprCase::V1mtPos);
                const Rat w(mpz_class(tpos ? v.vt : v.v1mt), mpz_class(tpos ? 3 : 5));
                cv.oracle_exponent = w.is_integer() ? 0 : 2;
                cv.witness_model = res.model;
                cv.witness = res.label + ", w = " + w.str() + (w.is_integer() ? ", unramified" : ", ramified");
            }
            break;
        }
    }
    cv.agree = *cv.printed.exponent == cv.oracle_exponent;
    if (!cv.agree)
        cv.conflict = std::string(to_string(sig)) + " r=" + std::to_string(r) + " t=" + t.str() + ": printed " +
                      std::to_string(*cv.printed.exponent) + " (" + cv.printed.source + "), construction " +
                      std::to_string(cv.oracle_exponent) + " (" + cv.witness + ")";
    return cv;
}

/// One printed row: a predicate on (v2(t), v2(1-t)) and its exponent.
struct TableRow {
    Signature signature;
    std::string degree;
    std::string vt;
    std::string v1mt;
    int exponent;
    std::function<bool(int r, int vt, int v1mt)> matches;
};

inline std::vector<TableRow> table_rows() {
    auto m = mod_floor;
    return {
        {Signature::PprEven, "even", "<0, =0 mod r", "<0, =0 mod r", 0,
         [m](int r, int a, int) { return a < 0 && m(a, r) == 0; }},
        {Signature::PprEven, "even", "<0, !=0 mod r", "<0, !=0 mod r", 2,
         [m](int r, int a, int) { return a < 0 && m(a, r) != 0; }},
        {Signature::PprEven, "even", ">0", "0", 1, [](int, int a, int) { return a > 0; }},
        {Signature::PprEven, "even", "0", ">0", 1, [](int, int, int b) { return b > 0; }},
        {Signature::PprOdd, "odd", "<=-4, =-2 mod r", "<=-4, =-2 mod r", 0,
         [m](int r, int a, int) { return a <= -4 && m(a, r) == m(-2, r); }},
        {Signature::PprOdd, "odd", "<=-4, !=-2 mod r", "<=-4, !=-2 mod r", 2,
         [m](int r, int a, int) { return a <= -4 && m(a, r) != m(-2, r); }},
        {Signature::Rrp, "odd", ">=4, =4 mod r", "0", 0, [m](int r, int a, int) { return a >= 4 && m(a, r) == m(4, r); }},
        {Signature::Rrp, "odd", ">=4, !=4 mod r", "0", 2, [m](int r, int a, int) { return a >= 4 && m(a, r) != m(4, r); }},
        {Signature::Rrp, "odd", "0", ">=4, =4 mod r", 0, [m](int r, int, int b) { return b >= 4 && m(b, r) == m(4, r); }},
        {Signature::Rrp, "odd", "0", ">=4, !=4 mod r", 2, [m](int r, int, int b) { return b >= 4 && m(b, r) != m(4, r); }},
        {Signature::TwoRp, "odd", "0", ">=6, =6 mod r", 0, [m](int r, int, int b) { return b >= 6 && m(b, r) == m(6, r); }},
        {Signature::TwoRp, "odd", "0", ">=6, !=6 mod r", 2, [m](int r, int, int b) { return b >= 6 && m(b, r) != m(6, r); }},
        {Signature::P35, "even", ">0, =0 mod 3", "0", 0, [](int, int a, int) { return a > 0 && a % 3 == 0; }},
        {Signature::P35, "even", ">0, !=0 mod 3", "0", 2, [](int, int a, int) { return a > 0 && a % 3 != 0; }},
        {Signature::P35, "even", "0", ">0, =0 mod 5", 0, [](int, int, int b) { return b > 0 && b % 5 == 0; }},
        {Signature::P35, "even", "0", ">0, !=0 mod 5", 2, [](int, int, int b) { return b > 0 && b % 5 != 0; }},
        {Signature::P35, "even", "<0", "<0", 1, [](int, int a, int) { return a < 0; }},
    };
}

/// Sample parameters with prescribed valuations: t with v2(t) = v (v != 0),
/// or t with v2(1 - t) = v (v > 0), each with a couple of odd cofactors.
inline std::vector<Rat> sample_t_with_vt(int v) {
    std::vector<Rat> out;
    for (int odd : {1, 3, -5}) out.push_back(Rat(odd) * pow2(v));
    return out;
}

inline std::vector<Rat> sample_t_with_v1mt(int v) {
    std::vector<Rat> out;
    for (int odd : {1, -3, 5}) out.push_back(Rat(1) - Rat(odd) * pow2(v));
    return out;
}

}  // namespace freycond
