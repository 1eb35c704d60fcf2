#pragma once

// Darmon's polynomials h, f and the hyperelliptic Frey families built on them.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freycond/errors.hpp"
#include "freycond/hyperelliptic.hpp"
#include "freycond/poly.hpp"
#include "freycond/prime_field.hpp"
#include "freycond/rational.hpp"

namespace freycond {

enum class FamilyId { Cs, CPlus, CMinus, Czs, Hrr, H2r, H35 };

constexpr std::string_view to_string(FamilyId f) noexcept {
    switch (f) {
        case FamilyId::Cs: return "C_s";
        case FamilyId::CPlus: return "C_plus";
        case FamilyId::CMinus: return "C_minus";
        case FamilyId::Czs: return "C_zs";
        case FamilyId::Hrr: return "H_rr";
        case FamilyId::H2r: return "H_2r";
        case FamilyId::H35: return "H_35";
    }
    return "unknown";
}

inline std::optional<FamilyId> parse_family(std::string_view s) {
    for (FamilyId f : {FamilyId::Cs, FamilyId::CPlus, FamilyId::CMinus, FamilyId::Czs, FamilyId::Hrr, FamilyId::H2r,
                       FamilyId::H35})
        if (to_string(f) == s) return f;
    return std::nullopt;
}

inline bool is_odd_prime(int r) {
    if (r < 3 || r % 2 == 0) return false;
    for (int d = 3; d * d <= r; d += 2)
        if (r % d == 0) return false;
    return true;
}

inline void require_odd_prime(int r) {
    if (!is_odd_prime(r)) fail(ErrorKind::NotOddPrime, std::to_string(r) + " is not an odd prime");
}

/// f = V_r with V_0 = 2, V_1 = x, V_{k+1} = x V_k - V_{k-1}.
inline Poly<Rat> darmon_f(int r) {
    require_odd_prime(r);
    const Poly<Rat> x = Poly<Rat>::x();
    Poly<Rat> prev(2), cur = x;
    for (int k = 1; k < r; ++k) {
        Poly<Rat> next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Minimal polynomial of 2cos(2 pi / r), as the square root of (f - 2)/(x - 2).
inline Poly<Rat> omega_min_poly(int r) {
    require_odd_prime(r);
    const Poly<Rat> x = Poly<Rat>::x();
    auto root = exact_sqrt((darmon_f(r) - Poly<Rat>(2)) / (x - Poly<Rat>(2)));
    if (!root) fail(ErrorKind::AssertionFailed, "(f - 2)/(x - 2) is not a square");
    return *root;
}

/// c_k with f = sum_k c_k x^{r - 2k}.
inline std::vector<Rat> darmon_coeffs(int r) {
    Poly<Rat> f = darmon_f(r);
    std::vector<Rat> c;
    for (int k = 0; 2 * k <= r; ++k) c.push_back(f.coeff(r - 2 * k));
    return c;
}

inline int family_genus(FamilyId fam, int r) { return fam == FamilyId::H35 ? 2 : (r - 1) / 2; }

/// Number of parameters: (z, s) for C_zs, s for C_s, t otherwise.
inline int family_arity(FamilyId fam) { return fam == FamilyId::Czs ? 2 : 1; }

/// y^2 = sum_k c_k z^k x^{r-2k} + s, i.e. (-z)^{(r-1)/2} x h(2 - x^2/z) + s.
template <class D>
HyperEq<D> curve_zs(int r, const D& z, const D& s) {
    std::vector<D> P(static_cast<std::size_t>(r) + 1, D(0));
    auto c = darmon_coeffs(r);
    D zk(1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        P[static_cast<std::size_t>(r) - 2 * k] = from_rat<D>(c[k]) * zk;
        zk = zk * z;
    }
    P[0] = P[0] + s;
    return HyperEq<D>::checked({}, Poly<D>(std::move(P)), (r - 1) / 2);
}

/// The (z, s) of the odd-degree families: C_minus, H_rr, H_2r in terms of t.
template <class D>
std::pair<D, D> family_zs(FamilyId fam, int r, const D& t) {
    const int g = (r - 1) / 2;
    const D one(1), tt = t * (t - one);
    switch (fam) {
        case FamilyId::CMinus: return {one, D(2) - D(4) * t};
        case FamilyId::Hrr: return {tt, power(tt, g) * (D(2) * t - one)};
        case FamilyId::H2r: return {tt, D(2) * power(t - one, g) * power(t, g + 1)};
        default: fail(ErrorKind::Usage, std::string(to_string(fam)) + " is not a (z, s) family in t");
    }
}

/// Equation of a family over any coefficient domain; params are the family's
/// parameters in order (t; s; or z, s).
template <class D>
HyperEq<D> build_curve(FamilyId fam, int r, const std::vector<D>& params) {
    if (fam != FamilyId::H35) require_odd_prime(r);
    if (static_cast<int>(params.size()) != family_arity(fam))
        fail(ErrorKind::Usage, std::string(to_string(fam)) + " expects " + std::to_string(family_arity(fam)) +
                                   " parameter(s)");
    const D one(1);
    const Poly<D> x = Poly<D>::x();
    switch (fam) {
        case FamilyId::Cs: return curve_zs<D>(r, one, params[0]);
        case FamilyId::Czs: return curve_zs<D>(r, params[0], params[1]);
        case FamilyId::CMinus:
        case FamilyId::Hrr:
        case FamilyId::H2r: {
            auto [z, s] = family_zs<D>(fam, r, params[0]);
            return curve_zs<D>(r, z, s);
        }
        case FamilyId::CPlus: {
            const D& t = params[0];
            Poly<D> f = lift<D>(darmon_f(r));
            Poly<D> P = (x + Poly<D>(D(2))) * (f + Poly<D>(D(2) - D(4) * t));
            return HyperEq<D>::checked({}, std::move(P), (r - 1) / 2);
        }
        case FamilyId::H35: {
            const D& t = params[0];
            const D m = one - t;
            const D a = t * m * m;
            Poly<D> Q = power(x, 3) + Poly<D>(a);
            Poly<D> P = power(x, 3).scaled(D(2) * a) + x.scaled(D(3) * t * t * m * m * m) +
                        Poly<D>(t * t * m * m * m * m);
            return HyperEq<D>::checked(std::move(Q), std::move(P), 2);
        }
    }
    fail(ErrorKind::Usage, "unknown family");
}

/// Rational instance with the degenerate parameter set rejected.
inline HyperEq<Rat> build_curve_rat(FamilyId fam, int r, const std::vector<Rat>& params) {
    if (fam != FamilyId::H35) require_odd_prime(r);
    if (static_cast<int>(params.size()) != family_arity(fam))
        fail(ErrorKind::Usage, std::string(to_string(fam)) + " expects " + std::to_string(family_arity(fam)) +
                                   " parameter(s)");
    if (fam == FamilyId::Cs && params[0] * params[0] == Rat(4))
        fail(ErrorKind::DegenerateParameter, "s^2 = 4 makes the curve singular");
    if (fam == FamilyId::Czs && params[1] * params[1] == Rat(4) * pow(params[0], r))
        fail(ErrorKind::DegenerateParameter, "s^2 = 4 z^r makes the curve singular");
    if (fam != FamilyId::Cs && fam != FamilyId::Czs && (params[0] == Rat(0) || params[0] == Rat(1)))
        fail(ErrorKind::DegenerateParameter, "t in {0, 1} makes the curve singular");
    return build_curve<Rat>(fam, r, params);
}

/// Printed closed-form discriminant of each family, in its parameters.
template <class D>
D printed_disc(FamilyId fam, int r, const std::vector<D>& params) {
    const int g = family_genus(fam, r);
    const D one(1);
    const D sign = g % 2 == 0 ? one : -one;
    const D rr = from_rat<D>(pow(Rat(r), r));
    auto general = [&](const D& z, const D& s) {
        return sign * from_rat<D>(pow2(2 * (r - 1))) * rr * power(s * s - D(4) * power(z, r), g);
    };
    switch (fam) {
        case FamilyId::Cs: return general(one, params[0]);
        case FamilyId::Czs: return general(params[0], params[1]);
        case FamilyId::CMinus: return general(one, D(2) - D(4) * params[0]);
        case FamilyId::CPlus: {
            const D& t = params[0];
            return from_rat<D>(pow2(2 * (r + 1))) * rr * power(t, (r + 3) / 2) * power(one - t, g);
        }
        case FamilyId::Hrr: {
            const D& t = params[0];
            return sign * from_rat<D>(pow2(2 * (r - 1))) * rr * power(t * (t - one), (r - 1) * (r - 1) / 2);
        }
        case FamilyId::H2r: {
            const D& t = params[0];
            return sign * from_rat<D>(pow2(3 * (r - 1))) * rr * power(t, r * (r - 1) / 2) *
                   power(t - one, (r - 1) * (r - 1) / 2);
        }
        case FamilyId::H35: {
            const D& t = params[0];
            return from_rat<D>(Rat(729 * 3125)) * power(t, 10) * power(t - one, 18);
        }
    }
    fail(ErrorKind::Usage, "unknown family");
}

/// Closed form that the direct computation actually yields. It differs from
/// the printed one only for C_plus, whose 2-power is 2^{4r}.
template <class D>
D computed_closed_disc(FamilyId fam, int r, const std::vector<D>& params) {
    if (fam != FamilyId::CPlus) return printed_disc<D>(fam, r, params);
    const D& t = params[0];
    const int g = (r - 1) / 2;
    return from_rat<D>(pow2(4 * r) * pow(Rat(r), r)) * power(t, (r + 3) / 2) * power(D(1) - t, g);
}

struct IdentityReport {
    int r = 0;
    Poly<Rat> f, h;
    bool recurrence_matches_definition = false;  // f = (-1)^{(r-1)/2} x h(2 - x^2)
    bool plus_identity = false;                  // f + 2 = (x + 2) h(-x)^2
    Poly<Rat> minus_square_factor;               // g with f - 2 = (x - 2) g^2
    bool minus_printed_holds = false;            // g = +-h(-x)
    bool minus_factor_is_h = false;              // g = h(x)
    bool product_identity = false;               // f^2 - 4 = (x^2 - 4)(h(x) h(-x))^2
    bool degrees_ok = false;
    bool endpoint_values = false;  // f(2) = 2, f(-2) = -2
    std::optional<std::uint64_t> irreducible_mod;  // prime certifying irreducibility of h

    /// Every statement that is printed verbatim and expected to hold.
    bool stated_checks_pass() const {
        return recurrence_matches_definition && plus_identity && product_identity && degrees_ok && endpoint_values &&
               irreducible_mod.has_value();
    }
};

inline IdentityReport verify_identities(int r) {
    IdentityReport rep;
    rep.r = r;
    rep.f = darmon_f(r);
    rep.h = omega_min_poly(r);
    const Poly<Rat> x = Poly<Rat>::x(), two(2);
    const Poly<Rat>& f = rep.f;
    const Poly<Rat>& h = rep.h;
    const Poly<Rat> hm = h.negated_argument();
    const int g = (r - 1) / 2;

    Poly<Rat> definitional = (x * h.compose(two - x * x)).scaled(Rat(g % 2 == 0 ? 1 : -1));
    rep.recurrence_matches_definition = f == definitional;
    rep.plus_identity = f + two == (x + two) * hm * hm;
    auto sq = exact_sqrt((f - two) / (x - two));
    if (sq) rep.minus_square_factor = *sq;
    rep.minus_printed_holds = f - two == (x - two) * hm * hm;
    rep.minus_factor_is_h = sq && (*sq == h || *sq == -h);
    rep.product_identity = f * f - Poly<Rat>(4) == (x * x - Poly<Rat>(4)) * power(h * hm, 2);
    bool integral = true;
    for (const auto& c : f.coeffs()) integral = integral && c.is_integer();
    for (const auto& c : h.coeffs()) integral = integral && c.is_integer();
    rep.degrees_ok = integral && f.degree() == r && h.degree() == g && f.lc() == Rat(1) && h.lc() == Rat(1) &&
                     f.negated_argument() == -f;
    rep.endpoint_values = f(Rat(2)) == Rat(2) && f(Rat(-2)) == Rat(-2);
    rep.irreducible_mod = fp::irreducibility_witness(h);
    return rep;
}

struct ClosedFormReport {
    FamilyId family = FamilyId::Czs;
    int r = 0;
    std::string method;        // "symbolic" or "specialized"
    std::string computed;      // direct discriminant, rendered
    std::string printed;       // printed closed form, rendered
    bool printed_matches = false;
    bool computed_form_matches = false;  // agrees with computed_closed_disc
};

namespace detail {

/// Symbolic check over Q[t] (or Q[z][s] for C_zs).
inline ClosedFormReport closed_form_symbolic(FamilyId fam, int r) {
    ClosedFormReport rep;
    rep.family = fam;
    rep.r = r;
    rep.method = "symbolic";
    if (fam == FamilyId::Czs) {
        using D1 = Poly<Rat>;
        using D2 = Poly<D1>;  // polynomials in s over Q[z]
        std::vector<D2> params{D2(D1::x()), D2::x()};
        D2 direct = hyper_discriminant(build_curve<D2>(fam, r, params));
        D2 printed = printed_disc<D2>(fam, r, params);
        rep.computed = to_string(direct, {"s", "z"});
        rep.printed = to_string(printed, {"s", "z"});
        rep.printed_matches = direct == printed;
        rep.computed_form_matches = direct == computed_closed_disc<D2>(fam, r, params);
        return rep;
    }
    using D1 = Poly<Rat>;
    std::vector<D1> params{D1::x()};
    D1 direct = hyper_discriminant(build_curve<D1>(fam, r, params));
    D1 printed = printed_disc<D1>(fam, r, params);
    std::string var = fam == FamilyId::Cs ? "s" : "t";
    rep.computed = to_string(direct, {var});
    rep.printed = to_string(printed, {var});
    rep.printed_matches = direct == printed;
    rep.computed_form_matches = direct == computed_closed_disc<D1>(fam, r, params);
    return rep;
}

/// Specialization at several rational parameter values; used for large r,
/// where the symbolic determinant is needlessly slow.
inline ClosedFormReport closed_form_specialized(FamilyId fam, int r) {
    ClosedFormReport rep;
    rep.family = fam;
    rep.r = r;
    rep.method = "specialized";
    rep.printed_matches = true;
    rep.computed_form_matches = true;
    const std::vector<Rat> samples{Rat(3), Rat(-5, 2), Rat(7, 3), Rat(1, 6), Rat(-2, 9)};
    for (std::size_t i = 0; i < samples.size(); ++i) {
        std::vector<Rat> params{samples[i]};
        if (fam == FamilyId::Czs) params = {samples[i], samples[(i + 2) % samples.size()]};
        Rat direct = hyper_discriminant(build_curve<Rat>(fam, r, params));
        Rat printed = printed_disc<Rat>(fam, r, params);
        if (i == 0) {
            rep.computed = direct.str();
            rep.printed = printed.str();
        }
        rep.printed_matches = rep.printed_matches && direct == printed;
        rep.computed_form_matches = rep.computed_form_matches && direct == computed_closed_disc<Rat>(fam, r, params);
    }
    return rep;
}

}  // namespace detail

/// Compares the direct discriminant with the printed closed form; symbolic
/// for r <= symbolic_limit, by specialization above.
inline ClosedFormReport verify_closed_form_disc(FamilyId fam, int r, int symbolic_limit = 7) {
    if (fam != FamilyId::H35) require_odd_prime(r);
    if (fam == FamilyId::H35 || r <= symbolic_limit) return detail::closed_form_symbolic(fam, r);
    return detail::closed_form_specialized(fam, r);
}

}  // namespace freycond
