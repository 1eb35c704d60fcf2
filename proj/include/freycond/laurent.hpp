#pragma once

// Laurent polynomials over Q in one formal parameter u, with valuations read
// as affine forms in the parameter's weight w = v(u).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freycond/errors.hpp"
#include "freycond/gf2k.hpp"
#include "freycond/poly.hpp"
#include "freycond/rational.hpp"

namespace freycond {

/// u^low * body(u), body(0) != 0 unless the element is zero.
class Laurent {
public:
    Laurent() = default;
    template <std::integral I>
    Laurent(I v) : body_(Rat(v)) {}  // NOLINT(google-explicit-constructor)
    Laurent(const Rat& c) : body_(c) {}  // NOLINT(google-explicit-constructor)
    Laurent(int low, Poly<Rat> body) : low_(low), body_(std::move(body)) { normalize(); }

    static Laurent u(int n = 1) { return Laurent(n, Poly<Rat>(1)); }
    /// Embeds a polynomial in the parameter.
    static Laurent from_poly(const Poly<Rat>& p) { return Laurent(0, p); }

    int low() const noexcept { return low_; }
    int high() const { return body_.is_zero() ? low_ : low_ + body_.degree(); }
    const Poly<Rat>& body() const noexcept { return body_; }
    bool is_zero() const { return body_.is_zero(); }
    Rat coeff(int n) const { return body_.coeff(n - low_); }

    /// Nonzero terms as (exponent, coefficient), ascending.
    std::vector<std::pair<int, Rat>> terms() const {
        std::vector<std::pair<int, Rat>> out;
        for (int i = 0; i <= body_.degree(); ++i)
            if (!body_.coeff(i).is_zero()) out.emplace_back(low_ + i, body_.coeff(i));
        return out;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int low = std::min(a.low_, b.low_);
        return Laurent(low, a.body_.shifted(a.low_ - low) + b.body_.shifted(b.low_ - low));
    }
    Laurent operator-() const { return Laurent(low_, -body_); }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return Laurent(a.low_ + b.low_, a.body_ * b.body_);
    }
    /// Exact division in Q[u, 1/u]; throws InexactDivision otherwise.
    friend Laurent operator/(const Laurent& a, const Laurent& b) {
        if (b.is_zero()) fail(ErrorKind::DivisionByZero, "Laurent division by zero");
        if (a.is_zero()) return {};
        return Laurent(a.low_ - b.low_, a.body_ / b.body_);
    }
    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.body_ == b.body_ && (a.is_zero() || a.low_ == b.low_);
    }

    /// Substitutes u -> c * u^k (k may be negative); used to rescale parameters.
    Laurent substitute_monomial(const Rat& c, int k) const {
        Laurent out;
        for (const auto& [e, a] : terms()) out = out + Laurent(e * k, Poly<Rat>(a * pow(c, e)));
        return out;
    }

    std::string str(const std::string& var = "u") const {
        if (is_zero()) return "0";
        std::string out;
        auto ts = terms();
        for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
            auto [e, a] = *it;
            std::string c = a.str();
            bool neg = c[0] == '-';
            if (neg) c = c.substr(1);
            std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
            std::string term = mono.empty() ? c : (c == "1" ? mono : c + "*" + mono);
            if (out.empty()) out = neg ? "-" + term : term;
            else out += neg ? " - " + term : " + " + term;
        }
        return out;
    }

private:
    void normalize() {
        if (body_.is_zero()) {
            low_ = 0;
            return;
        }
        int k = 0;
        while (body_.coeff(k).is_zero()) ++k;
        if (k > 0) {
            std::vector<Rat> c(body_.coeffs().begin() + k, body_.coeffs().end());
            body_ = Poly<Rat>(std::move(c));
            low_ += k;
        }
    }

    int low_ = 0;
    Poly<Rat> body_;
};

inline bool is_zero(const Laurent& l) { return l.is_zero(); }

inline std::string format_coeff(const Laurent& l, const std::vector<std::string>& vars, std::size_t level) {
    return l.str(level < vars.size() ? vars[level] : "u");
}

/// c + m*w.
struct AffineForm {
    Rat c;
    Rat m;

    Rat at(const Rat& w) const { return c + m * w; }
    friend AffineForm operator-(const AffineForm& a, const AffineForm& b) { return {a.c - b.c, a.m - b.m}; }
    friend AffineForm operator+(const AffineForm& a, const AffineForm& b) { return {a.c + b.c, a.m + b.m}; }
    friend bool operator==(const AffineForm&, const AffineForm&) = default;
    bool is_constant() const { return m.is_zero(); }

    std::string str(const std::string& w = "w") const {
        if (m.is_zero()) return c.str();
        std::string mw = m == Rat(1) ? w : (m == Rat(-1) ? "-" + w : m.str() + "*" + w);
        if (c.is_zero()) return mw;
        if (mw[0] == '-') return c.str() + " - " + mw.substr(1);
        return c.str() + " + " + mw;
    }
};

/// A formal parameter: either of positive valuation w inside a declared
/// interval, or a unit with a fixed nonzero residue class.
struct FormalParam {
    std::string name = "u";
    bool unit = false;
    // positive-valuation data
    Rat lo = Rat(0);
    bool lo_open = true;
    std::optional<Rat> hi;  // nullopt = +infinity
    bool hi_open = true;
    // unit data
    GF2Elem residue = GF2Elem(1);

    static FormalParam positive(std::string name = "u") {
        FormalParam p;
        p.name = std::move(name);
        return p;
    }
    static FormalParam interval(std::string name, Rat lo, bool lo_open, std::optional<Rat> hi, bool hi_open) {
        FormalParam p;
        p.name = std::move(name);
        p.lo = std::move(lo);
        p.lo_open = lo_open;
        p.hi = std::move(hi);
        p.hi_open = hi_open;
        p.validate();
        return p;
    }
    static FormalParam point(std::string name, const Rat& w) { return interval(std::move(name), w, false, w, false); }
    static FormalParam unit_param(std::string name, GF2Elem residue) {
        FormalParam p;
        p.name = std::move(name);
        p.unit = true;
        p.residue = residue;
        if (residue.is_zero()) fail(ErrorKind::DegenerateParameter, "unit parameter with zero residue");
        return p;
    }

    void validate() const {
        if (unit) return;
        if (lo < Rat(0) || (lo.is_zero() && !lo_open))
            fail(ErrorKind::DegenerateParameter, "weight interval must lie in (0, infinity)");
        if (hi && (*hi < lo || (*hi == lo && (lo_open || hi_open))))
            fail(ErrorKind::DegenerateParameter, "empty weight interval");
    }

    std::string interval_str() const {
        if (unit) return "unit";
        std::string out = (lo_open ? "(" : "[") + lo.str() + ", ";
        out += hi ? hi->str() + (hi_open ? ")" : "]") : std::string("inf)");
        return out;
    }

    /// d > 0 at every weight in the interval.
    bool positive_on(const AffineForm& d) const {
        if (d.c.is_zero() && d.m.is_zero()) return false;
        Rat at_lo = d.at(lo);
        if (lo_open ? at_lo < Rat(0) : at_lo <= Rat(0)) return false;
        if (!hi) return d.m > Rat(0) || (d.m.is_zero() && d.c > Rat(0));
        Rat at_hi = d.at(*hi);
        return hi_open ? at_hi >= Rat(0) : at_hi > Rat(0);
    }
    /// d >= 0 at every weight in the interval.
    bool nonneg_on(const AffineForm& d) const {
        if (d.at(lo) < Rat(0)) return false;
        if (!hi) return d.m >= Rat(0);
        return d.at(*hi) >= Rat(0);
    }
};

namespace detail {
inline GF2Elem unit_power(const GF2Elem& r, int e) {
    GF2Elem base = e < 0 ? r.inverse() : r;
    GF2Elem out = GF2Elem(1).in_field(r.modulus());
    for (int i = 0; i < std::abs(e); ++i) out = out * base;
    return out;
}
}  // namespace detail

/// The unique minimal term form over the interval; ValuationAmbiguous if
/// two terms tie somewhere. For unit parameters the lowest 2-adic layer must
/// have nonzero residue.
inline AffineForm laurent_val(const Laurent& x, const FormalParam& p) {
    if (x.is_zero()) fail(ErrorKind::ZeroElement, "valuation of zero");
    auto ts = x.terms();
    if (p.unit) {
        int best = ts.front().second.v2();
        for (const auto& [e, a] : ts) best = std::min(best, a.v2());
        GF2Elem acc = GF2Elem(0).in_field(p.residue.modulus());
        for (const auto& [e, a] : ts)
            if (a.v2() == best && (a / pow2(best)).mod2() == 1) acc = acc + detail::unit_power(p.residue, e);
        if (acc.is_zero())
            fail(ErrorKind::ValuationAmbiguous, "leading 2-adic layer of " + x.str(p.name) + " vanishes at the residue");
        return {Rat(best), Rat(0)};
    }
    for (std::size_t j = 0; j < ts.size(); ++j) {
        AffineForm fj{Rat(ts[j].second.v2()), Rat(ts[j].first)};
        bool unique = true;
        for (std::size_t i = 0; i < ts.size() && unique; ++i) {
            if (i == j) continue;
            AffineForm fi{Rat(ts[i].second.v2()), Rat(ts[i].first)};
            if (!p.positive_on(fi - fj)) unique = false;
        }
        if (unique) return fj;
    }
    fail(ErrorKind::ValuationAmbiguous, "no unique minimal term for " + x.str(p.name) + " on " + p.interval_str());
}

/// Residue of an integral element: the constant term mod 2 for positive
/// parameters, the value at the residue class for unit parameters.
inline GF2Elem laurent_residue(const Laurent& x, const FormalParam& p) {
    if (x.is_zero()) return p.unit ? GF2Elem(0).in_field(p.residue.modulus()) : GF2Elem(0);
    if (p.unit) {
        GF2Elem acc = GF2Elem(0).in_field(p.residue.modulus());
        for (const auto& [e, a] : x.terms()) {
            if (a.v2() < 0) fail(ErrorKind::NonIntegral, x.str(p.name) + " is not integral");
            if (a.mod2() == 1) acc = acc + detail::unit_power(p.residue, e);
        }
        return acc;
    }
    GF2Elem out(0);
    for (const auto& [e, a] : x.terms()) {
        AffineForm f{Rat(a.v2()), Rat(e)};
        if (e == 0) {
            if (a.v2() < 0) fail(ErrorKind::NonIntegral, x.str(p.name) + " has a non-integral constant term");
            out = GF2Elem(a.mod2());
            continue;
        }
        if (!p.nonneg_on(f)) fail(ErrorKind::NonIntegral, x.str(p.name) + " is not integral on " + p.interval_str());
        if (!p.positive_on(f))
            fail(ErrorKind::ValuationAmbiguous, "term of " + x.str(p.name) + " has valuation 0 at an endpoint");
    }
    return out;
}

/// Coefficient-wise residue of a polynomial over Laurent elements.
inline GF2Poly laurent_residue(const Poly<Laurent>& f, const FormalParam& p) {
    return map_coeffs<GF2Elem>(f, [&](const Laurent& c) { return laurent_residue(c, p); });
}

/// True when every coefficient has valuation >= 0 on the whole interval.
inline bool laurent_integral(const Laurent& x, const FormalParam& p) {
    if (x.is_zero()) return true;
    for (const auto& [e, a] : x.terms()) {
        if (p.unit) {
            if (a.v2() < 0) return false;
            continue;
        }
        if (!p.nonneg_on(AffineForm{Rat(a.v2()), Rat(e)})) return false;
    }
    return true;
}

}  // namespace freycond
