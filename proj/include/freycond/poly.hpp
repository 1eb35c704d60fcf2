#pragma once

// Dense univariate polynomials over a pluggable commutative coefficient domain.
//
// A coefficient domain D must provide D(int), +, -, *, ==, a free is_zero(D)
// found by ADL, and operator/ that is exact: field division for fields,
// quotient-or-throw for rings such as Poly<Rat>. Nesting Poly<Poly<Rat>>
// gives polynomials in x whose coefficients are polynomials in a parameter.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "freycond/errors.hpp"
#include "freycond/rational.hpp"

namespace freycond {

template <class D>
class Poly;

template <class T>
struct is_poly : std::false_type {};
template <class D>
struct is_poly<Poly<D>> : std::true_type {};
template <class T>
inline constexpr bool is_poly_v = is_poly<T>::value;

/// Generic exponentiation by squaring in a ring with unit D(1).
template <class D>
D power(D base, long e) {
    if (e < 0) return power(D(1) / base, -e);
    D out(1);
    while (e > 0) {
        if (e & 1) out = out * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return out;
}

namespace detail {
template <class T>
bool coeff_is_zero(const T& t) {
    return is_zero(t);
}
}  // namespace detail

template <class D>
class Poly {
public:
    using coeff_type = D;

    Poly() = default;
    Poly(D c) {  // NOLINT(google-explicit-constructor)
        if (!detail::coeff_is_zero(c)) c_.push_back(std::move(c));
    }
    template <std::integral I>
    Poly(I v) : Poly(D(v)) {}  // NOLINT(google-explicit-constructor)
    Poly(std::initializer_list<D> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<D> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<D>{D(0), D(1)}); }
    static Poly monomial(D c, int n) {
        if (detail::coeff_is_zero(c)) return {};
        std::vector<D> v(static_cast<std::size_t>(n) + 1, D(0));
        v.back() = std::move(c);
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<D>& coeffs() const { return c_; }
    D coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : D(0); }
    const D& lc() const {
        if (c_.empty()) fail(ErrorKind::ZeroInput, "leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_constant() const { return c_.size() <= 1; }

    D operator()(const D& v) const {
        D acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    Poly derivative() const {
        std::vector<D> out;
        for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * D(static_cast<int>(i)));
        return Poly(std::move(out));
    }

    /// p(inner(x)).
    Poly compose(const Poly& inner) const {
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly(*it);
        return acc;
    }

    /// p(-x).
    Poly negated_argument() const {
        std::vector<D> out = c_;
        for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
        return Poly(std::move(out));
    }

    Poly scaled(const D& s) const {
        std::vector<D> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(c * s);
        return Poly(std::move(out));
    }

    /// x^n * p(x).
    Poly shifted(int n) const {
        if (c_.empty()) return {};
        std::vector<D> out(static_cast<std::size_t>(n), D(0));
        out.insert(out.end(), c_.begin(), c_.end());
        return Poly(std::move(out));
    }

    /// x^n * p(1/x); requires n >= deg p.
    Poly reflected(int n) const {
        if (degree() > n) fail(ErrorKind::DegreeViolation, "reflection degree below polynomial degree");
        std::vector<D> out(static_cast<std::size_t>(n) + 1, D(0));
        for (std::size_t i = 0; i < c_.size(); ++i) out[static_cast<std::size_t>(n) - i] = c_[i];
        return Poly(std::move(out));
    }

    Poly operator-() const {
        std::vector<D> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(-c);
        return Poly(std::move(out));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
        const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
        std::vector<D> out = big;
        for (std::size_t i = 0; i < small.size(); ++i) out[i] = out[i] + small[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<D> out(a.c_.size() + b.c_.size() - 1, D(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }

    /// Exact division; throws InexactDivision when b does not divide a.
    friend Poly operator/(const Poly& a, const Poly& b) {
        auto [q, r] = long_division(a, b);
        if (!r.is_zero()) fail(ErrorKind::InexactDivision, "polynomial division leaves a remainder");
        return q;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    /// Quotient and remainder. Each step divides by lc(b) in D, so this is
    /// ordinary division over a field and exact division over a domain.
    friend std::pair<Poly, Poly> long_division(const Poly& a, const Poly& b) {
        if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly(), a};
        const int db = b.degree();
        std::vector<D> rem = a.c_;
        std::vector<D> q(static_cast<std::size_t>(a.degree() - db) + 1, D(0));
        for (int i = a.degree() - db; i >= 0; --i) {
            const D& top = rem[static_cast<std::size_t>(i + db)];
            if (detail::coeff_is_zero(top)) continue;
            D qi = top / b.c_.back();
            for (int j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(i + j)] = rem[static_cast<std::size_t>(i + j)] - qi * b.c_[static_cast<std::size_t>(j)];
            q[static_cast<std::size_t>(i)] = std::move(qi);
        }
        rem.resize(static_cast<std::size_t>(db));
        return {Poly(std::move(q)), Poly(std::move(rem))};
    }

private:
    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<D> c_;
};

template <class D>
bool is_zero(const Poly<D>& p) {
    return p.is_zero();
}

/// Embeds a rational into any coefficient domain, through nested polynomials.
template <class D>
D from_rat(const Rat& r) {
    if constexpr (std::is_same_v<D, Rat>) {
        return r;
    } else if constexpr (is_poly_v<D>) {
        return D(from_rat<typename D::coeff_type>(r));
    } else {
        return D(r);
    }
}

template <class E, class D, class F>
Poly<E> map_coeffs(const Poly<D>& p, F&& f) {
    std::vector<E> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(f(c));
    return Poly<E>(std::move(out));
}

/// Lifts an integer-or-rational polynomial into Poly<D>.
template <class D>
Poly<D> lift(const Poly<Rat>& p) {
    return map_coeffs<D>(p, [](const Rat& c) { return from_rat<D>(c); });
}

template <class D>
std::pair<Poly<D>, Poly<D>> divmod(const Poly<D>& a, const Poly<D>& b) {
    return long_division(a, b);
}

/// Monic gcd over a field.
template <class D>
Poly<D> gcd(Poly<D> a, Poly<D> b) {
    while (!b.is_zero()) {
        auto r = long_division(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(D(1) / a.lc());
}

/// base^e mod m over a field.
template <class D>
Poly<D> powmod(Poly<D> base, mpz_class e, const Poly<D>& m) {
    Poly<D> out = long_division(Poly<D>(1), m).second;
    base = long_division(base, m).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) out = long_division(out * base, m).second;
        e >>= 1;
        if (e > 0) base = long_division(base * base, m).second;
    }
    return out;
}

template <class D>
Poly<D> power(const Poly<D>& p, int e) {
    if (e < 0) fail(ErrorKind::DegreeViolation, "negative polynomial power");
    Poly<D> out(1), base = p;
    while (e > 0) {
        if (e & 1) out = out * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return out;
}

/// Square root by matching coefficients from the top. Returns nullopt when p
/// is not a perfect square; the root returned has lc = +sqrt(lc p).
template <class D>
std::optional<Poly<D>> exact_sqrt(const Poly<D>& p) {
    if (p.is_zero()) return Poly<D>();
    if (p.degree() % 2 != 0) return std::nullopt;
    const int n = p.degree() / 2;
    auto top = exact_sqrt(p.lc());
    if (!top) return std::nullopt;
    std::vector<D> s(static_cast<std::size_t>(n) + 1, D(0));
    s[static_cast<std::size_t>(n)] = *top;
    const D two_top = D(2) * *top;
    for (int k = n - 1; k >= 0; --k) {
        D acc = p.coeff(n + k);
        for (int i = k + 1; i < n; ++i) {
            int j = n + k - i;
            if (j <= k || j >= n) continue;
            acc = acc - s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
        }
        try {
            s[static_cast<std::size_t>(k)] = acc / two_top;
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    Poly<D> root(std::move(s));
    if (!(root * root == p)) return std::nullopt;
    return root;
}

// --- printing -------------------------------------------------------------

inline std::string format_coeff(const Rat& r, const std::vector<std::string>&, std::size_t) { return r.str(); }

template <class D>
std::string to_string(const Poly<D>& p, const std::vector<std::string>& vars, std::size_t level = 0);

template <class D>
std::string format_coeff(const Poly<D>& c, const std::vector<std::string>& vars, std::size_t level) {
    return to_string(c, vars, level);
}

namespace detail {
inline bool is_compound(const std::string& s) {
    // A sum or difference printed at top level needs parentheses as a factor.
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '(' || ch == '[') ++depth;
        else if (ch == ')' || ch == ']') --depth;
        else if (depth == 0 && i > 0 && (ch == '+' || ch == '-') && s[i - 1] == ' ') return true;
    }
    return false;
}
}  // namespace detail

/// Renders highest degree first, e.g. "x^3 - 3*x + 7/4". vars[level] names
/// this polynomial's variable; nested coefficients use vars[level+1], ...
template <class D>
std::string to_string(const Poly<D>& p, const std::vector<std::string>& vars, std::size_t level) {
    if (p.is_zero()) return "0";
    const std::string var = level < vars.size() ? vars[level] : "x" + std::to_string(level);
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const D& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (is_zero(c)) continue;
        std::string cs = format_coeff(c, vars, level + 1);
        bool negative = false;
        if (!detail::is_compound(cs) && !cs.empty() && cs[0] == '-') {
            negative = true;
            cs = cs.substr(1);
        }
        if (detail::is_compound(cs)) cs = "(" + cs + ")";
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        std::string term;
        if (mono.empty()) term = cs;
        else if (cs == "1") term = mono;
        else term = cs + "*" + mono;
        if (out.empty()) out = negative ? "-" + term : term;
        else out += negative ? " - " + term : " + " + term;
    }
    return out;
}

}  // namespace freycond
