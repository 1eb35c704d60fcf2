#pragma once

// Singular points of y^2 + Q(x) y = P(x) over fields of characteristic 2.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "freycond/errors.hpp"
#include "freycond/gf2k.hpp"

namespace freycond {

struct SpecialFiber {
    GF2Poly Q;
    GF2Poly P;
    int g = 1;

    /// T(u) = u^{g+1} Q(1/u), S(u) = u^{2g+2} P(1/u).
    GF2Poly patch_Q() const { return Q.reflected(g + 1); }
    GF2Poly patch_P() const { return P.reflected(2 * g + 2); }

    friend bool operator==(const SpecialFiber&, const SpecialFiber&) = default;
};

enum class PointKind { Smooth, Node, NonSemistable };
enum class Patch { Affine, Infinity };

constexpr std::string_view to_string(PointKind k) noexcept {
    switch (k) {
        case PointKind::Smooth: return "smooth";
        case PointKind::Node: return "node";
        case PointKind::NonSemistable: return "non-semistable-singular";
    }
    return "unknown";
}

struct PointReport {
    Patch patch = Patch::Affine;
    GF2Elem x;
    GF2Elem y;
    int field_degree = 1;  // degree of the field the coordinates are written in
    PointKind kind = PointKind::Smooth;
};

enum class FiberKind { Smooth, Nodal, NonSemistable };

constexpr std::string_view to_string(FiberKind k) noexcept {
    switch (k) {
        case FiberKind::Smooth: return "smooth";
        case FiberKind::Nodal: return "nodal";
        case FiberKind::NonSemistable: return "non-semistable";
    }
    return "unknown";
}

struct FiberType {
    FiberKind kind = FiberKind::Smooth;
    int nodes = 0;
    int non_semistable = 0;
};

namespace detail {

/// Degree of the smallest binary field holding all coefficients.
inline int coefficient_field_degree(const GF2Poly& a, const GF2Poly& b) {
    std::uint32_t mod = 0;
    for (const GF2Poly* p : {&a, &b})
        for (const auto& c : p->coeffs()) {
            if (c.modulus() == 0) continue;
            if (mod != 0 && c.modulus() != mod) fail(ErrorKind::FieldMismatch, "fiber coefficients in different fields");
            mod = c.modulus();
        }
    if (mod == 0) return 1;
    int k = gf2::bit_degree(mod);
    if (gf2::kDefaultModulus[static_cast<std::size_t>(k)] != mod)
        fail(ErrorKind::FieldMismatch, "fiber coefficients must use the built-in modulus");
    return k;
}

/// The Jacobian-criterion test at a point of one patch.
inline bool singular_at(const GF2Poly& Q, const GF2Poly& P, const GF2Elem& a, const GF2Elem& b) {
    if (!Q(a).is_zero()) return false;
    return (Q.derivative()(a) * b + P.derivative()(a)).is_zero();
}

inline PointKind kind_at(const GF2Poly& Q, const GF2Poly& P, const GF2Elem& a, const GF2Elem& b) {
    if (!(b * b + Q(a) * b + P(a)).is_zero()) fail(ErrorKind::PointNotOnCurve, "point does not satisfy the equation");
    if (!singular_at(Q, P, a, b)) return PointKind::Smooth;
    return Q.derivative()(a).is_zero() ? PointKind::NonSemistable : PointKind::Node;
}

}  // namespace detail

/// Smallest field GF(2^m) over which every singular point of both patches
/// is rational: the splitting field of Q (or of P' when Q vanishes).
inline GF2k singular_search_field(const SpecialFiber& F) {
    const int k0 = detail::coefficient_field_degree(F.Q, F.P);
    GF2Poly cand = F.Q.is_zero() ? F.P.derivative() : F.Q;
    if (F.Q.is_zero() && cand.is_zero()) fail(ErrorKind::NonReducedFiber, "y^2 = P(x) with P a square");
    int l = 1;
    if (cand.degree() >= 1) {
        for (int d : irreducible_factor_degrees(cand, GF2k(k0))) l = std::lcm(l, d);
    }
    const int m = k0 * l;
    if (m > 16) fail(ErrorKind::FieldMismatch, "splitting field GF(2^" + std::to_string(m) + ") exceeds 2^16");
    return GF2k(m);
}

/// All singular points on both patches (the second patch only at u = 0),
/// each with its classification.
inline std::vector<PointReport> singular_points(const SpecialFiber& F) {
    const int k0 = detail::coefficient_field_degree(F.Q, F.P);
    const GF2k field = singular_search_field(F);
    const Embedding emb(GF2k(k0), field);
    const GF2Poly Q = embed(F.Q, emb), P = embed(F.P, emb);
    std::vector<PointReport> out;

    GF2Poly cand = Q.is_zero() ? P.derivative() : Q;
    if (cand.degree() >= 0) {
        std::vector<GF2Elem> xs = cand.degree() == 0 ? std::vector<GF2Elem>{} : roots_in_gf2k(cand, field);
        for (const auto& a : xs) {
            GF2Elem b = P(a).sqrt();
            if (!Q(a).is_zero()) continue;
            if (detail::singular_at(Q, P, a, b))
                out.push_back({Patch::Affine, a, b, field.k(), detail::kind_at(Q, P, a, b)});
        }
    }

    const GF2Poly T = embed(F.patch_Q(), emb), S = embed(F.patch_P(), emb);
    const GF2Elem zero = field.zero();
    if (T(zero).is_zero()) {
        GF2Elem b = S(zero).sqrt();
        if (detail::singular_at(T, S, zero, b))
            out.push_back({Patch::Infinity, zero, b, field.k(), detail::kind_at(T, S, zero, b)});
    }
    std::sort(out.begin(), out.end(), [](const PointReport& l, const PointReport& r) {
        if (l.patch != r.patch) return l.patch < r.patch;
        if (l.x.bits() != r.x.bits()) return l.x.bits() < r.x.bits();
        return l.y.bits() < r.y.bits();
    });
    return out;
}

/// Classification of a point on one patch.
inline PointKind classify_point(const SpecialFiber& F, Patch patch, const GF2Elem& a, const GF2Elem& b) {
    if (patch == Patch::Affine) return detail::kind_at(F.Q, F.P, a, b);
    return detail::kind_at(F.patch_Q(), F.patch_P(), a, b);
}

inline FiberType fiber_type(const SpecialFiber& F) {
    FiberType t;
    for (const auto& p : singular_points(F)) {
        if (p.kind == PointKind::Node) ++t.nodes;
        else if (p.kind == PointKind::NonSemistable) ++t.non_semistable;
    }
    if (t.non_semistable > 0) t.kind = FiberKind::NonSemistable;
    else if (t.nodes > 0) t.kind = FiberKind::Nodal;
    return t;
}

inline std::string to_string(const SpecialFiber& F) {
    std::string lhs = "y^2";
    if (!F.Q.is_zero()) {
        std::string q = to_string(F.Q, {"x"});
        lhs += q == "1" ? " + y" : " + " + (detail::is_compound(q) ? "(" + q + ")" : q) + "*y";
    }
    return lhs + " = " + to_string(F.P, {"x"});
}

}  // namespace freycond
