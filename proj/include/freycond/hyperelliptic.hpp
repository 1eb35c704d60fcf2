#pragma once

// Hyperelliptic equations y^2 + Q(x) y = P(x) of genus g.

#include <string>
#include <utility>

#include "freycond/errors.hpp"
#include "freycond/poly.hpp"
#include "freycond/resultant.hpp"

namespace freycond {

template <class D>
struct HyperEq {
    Poly<D> Q;
    Poly<D> P;
    int g = 1;

    HyperEq() = default;
    HyperEq(Poly<D> q, Poly<D> p, int genus) : Q(std::move(q)), P(std::move(p)), g(genus) {}

    /// Builds and checks the degree window.
    static HyperEq checked(Poly<D> q, Poly<D> p, int genus) {
        HyperEq e(std::move(q), std::move(p), genus);
        e.validate();
        return e;
    }

    bool in_window() const {
        if (g < 0 || Q.degree() > g + 1 || P.degree() > 2 * g + 2) return false;
        int m = std::max(2 * Q.degree(), P.degree());
        return 2 * g + 1 <= m && m <= 2 * g + 2;
    }
    void validate() const {
        if (!in_window())
            fail(ErrorKind::DegreeViolation, "deg Q = " + std::to_string(Q.degree()) + ", deg P = " +
                                                 std::to_string(P.degree()) + " outside the window for g = " +
                                                 std::to_string(g));
    }

    Poly<D> R() const { return P.scaled(D(4)) + Q * Q; }

    friend bool operator==(const HyperEq& a, const HyperEq& b) { return a.g == b.g && a.Q == b.Q && a.P == b.P; }
};

template <class D>
std::string to_string(const HyperEq<D>& e, const std::vector<std::string>& vars = {"x", "t"}) {
    std::string lhs = "y^2";
    if (!e.Q.is_zero()) {
        std::string q = to_string(e.Q, vars);
        bool compound = detail::is_compound(q) || q.find('*') != std::string::npos;
        lhs += q == "1" ? " + y" : " + " + (compound ? "(" + q + ")" : q) + "*y";
    }
    return lhs + " = " + to_string(e.P, vars);
}

/// Delta_E = 2^{-4(g+1)} Delta(R), times kappa^2 when deg R = 2g+1.
template <class D>
D hyper_discriminant(const HyperEq<D>& e) {
    e.validate();
    Poly<D> R = e.R();
    const int n = R.degree();
    if (n != 2 * e.g + 1 && n != 2 * e.g + 2)
        fail(ErrorKind::DegreeViolation, "deg(4P + Q^2) = " + std::to_string(n) + " for g = " + std::to_string(e.g));
    D disc = discriminant_poly(R) * from_rat<D>(pow2(-4 * (e.g + 1)));
    if (n == 2 * e.g + 1) disc = disc * R.lc() * R.lc();
    return disc;
}

/// The monic odd-degree shortcut 2^{4g} Delta(P + Q^2/4); requires P monic of
/// degree 2g+1 and deg Q <= g.
template <class D>
D hyper_discriminant_monic_odd(const HyperEq<D>& e) {
    if (e.P.degree() != 2 * e.g + 1 || !(e.P.lc() == D(1)) || e.Q.degree() > e.g)
        fail(ErrorKind::DegreeViolation, "monic odd formula needs monic P of degree 2g+1 and deg Q <= g");
    Poly<D> H = e.P + (e.Q * e.Q).scaled(from_rat<D>(Rat(1, 4)));
    return discriminant_poly(H) * from_rat<D>(pow2(4 * e.g));
}

/// The second affine patch: T(u) = u^{g+1} Q(1/u), S(u) = u^{2g+2} P(1/u).
template <class D>
HyperEq<D> infinity_patch(const HyperEq<D>& e) {
    e.validate();
    return HyperEq<D>::checked(e.Q.reflected(e.g + 1), e.P.reflected(2 * e.g + 2), e.g);
}

/// x = (aX+b)/(cX+d), y = (eY + R(X))/(cX+d)^{g+1}.
template <class D>
struct MobiusChange {
    D a = D(1), b = D(0), c = D(0), d = D(1), e = D(1);
    Poly<D> R;

    static MobiusChange identity() { return {}; }
    static MobiusChange scaling(D a_, D e_, Poly<D> shift = {}) {
        MobiusChange m;
        m.a = std::move(a_);
        m.e = std::move(e_);
        m.R = std::move(shift);
        return m;
    }
    D det() const { return a * d - b * c; }
};

template <class D>
struct ChangeResult {
    HyperEq<D> eq;
    D disc_factor;  // Delta(new) = disc_factor * Delta(old)
};

/// e^{-4(2g+1)} (ad - bc)^{2(g+1)(2g+1)}.
template <class D>
D change_disc_factor(const MobiusChange<D>& m, int g) {
    return power(m.e, -4L * (2 * g + 1)) * power(m.det(), 2L * (g + 1) * (2 * g + 1));
}

namespace detail {
/// sum_i coeffs_i (aX+b)^i (cX+d)^{n-i}.
template <class D>
Poly<D> homogenize(const Poly<D>& f, int n, const Poly<D>& num, const Poly<D>& den) {
    Poly<D> acc;
    for (int i = 0; i <= f.degree(); ++i) {
        if (is_zero(f.coeff(i))) continue;
        acc = acc + (power(num, i) * power(den, n - i)).scaled(f.coeff(i));
    }
    return acc;
}
}  // namespace detail

template <class D>
ChangeResult<D> apply_change(const HyperEq<D>& E, const MobiusChange<D>& m) {
    if (is_zero(m.det()) || is_zero(m.e)) fail(ErrorKind::SingularChange, "ad - bc and e must be nonzero");
    E.validate();
    const Poly<D> num({m.b, m.a}), den({m.d, m.c});
    Poly<D> Qh = detail::homogenize(E.Q, E.g + 1, num, den);
    Poly<D> Ph = detail::homogenize(E.P, 2 * E.g + 2, num, den);
    const D inv_e = D(1) / m.e;
    Poly<D> newQ = (Qh + m.R.scaled(D(2))).scaled(inv_e);
    Poly<D> newP = (Ph - m.R * m.R - Qh * m.R).scaled(inv_e * inv_e);
    HyperEq<D> out(std::move(newQ), std::move(newP), E.g);
    out.validate();
    return {std::move(out), change_disc_factor(m, E.g)};
}

/// Twist of y^2 = F(x) by delta: delta^{2g+1} F(x/delta) for odd degree,
/// delta F(x) for even degree.
template <class D>
HyperEq<D> quadratic_twist(const HyperEq<D>& E, const D& delta) {
    if (!E.Q.is_zero()) fail(ErrorKind::NotTwistable, "twist needs an equation with Q = 0");
    if (is_zero(delta)) fail(ErrorKind::ZeroDelta, "twist by zero");
    E.validate();
    const int n = E.P.degree();
    if (n % 2 == 0) return HyperEq<D>::checked({}, E.P.scaled(delta), E.g);
    std::vector<D> c;
    for (int i = 0; i <= n; ++i) c.push_back(E.P.coeff(i) * power(delta, static_cast<long>(n - i)));
    return HyperEq<D>::checked({}, Poly<D>(std::move(c)), E.g);
}

}  // namespace freycond
