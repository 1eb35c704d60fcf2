#pragma once

// The totally ramified field Q(pi), pi^r = 2, with its exact 2-adic valuation.

#include <string>
#include <vector>

#include "freycond/errors.hpp"
#include "freycond/rational.hpp"

namespace freycond {

/// Sum a_i pi^i, 0 <= i < r. r == 0 marks a plain rational that mixes with
/// any tame field (it is the constant term everywhere).
class TameElem {
public:
    TameElem() = default;
    template <std::integral I>
    TameElem(I v) : TameElem(Rat(v)) {}  // NOLINT(google-explicit-constructor)
    TameElem(const Rat& q) : a_{q} {}      // NOLINT(google-explicit-constructor)
    TameElem(int r, std::vector<Rat> coeffs) : r_(r), a_(std::move(coeffs)) {
        if (r < 1) fail(ErrorKind::NotOddPrime, "tame degree must be positive");
        if (static_cast<int>(a_.size()) > r) fail(ErrorKind::FieldMismatch, "too many coefficients for pi^r = 2");
        a_.resize(static_cast<std::size_t>(r), Rat(0));
    }

    /// pi^n for any integer n (negative powers use pi^{-1} = pi^{r-1}/2).
    static TameElem pi_power(int r, int n) {
        int q = n >= 0 ? n / r : -((-n + r - 1) / r);
        int rem = n - q * r;
        std::vector<Rat> c(static_cast<std::size_t>(r), Rat(0));
        c[static_cast<std::size_t>(rem)] = pow2(q);
        return TameElem(r, std::move(c));
    }

    int degree() const noexcept { return r_; }
    Rat coeff(int i) const { return i < static_cast<int>(a_.size()) ? a_[static_cast<std::size_t>(i)] : Rat(0); }
    bool is_zero() const {
        for (const auto& c : a_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < a_.size(); ++i)
            if (!a_[i].is_zero()) return false;
        return true;
    }

    friend TameElem operator+(const TameElem& x, const TameElem& y) {
        int r = common(x, y);
        std::size_t n = std::max(x.a_.size(), y.a_.size());
        std::vector<Rat> c(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) c[i] = x.coeff(static_cast<int>(i)) + y.coeff(static_cast<int>(i));
        return make(r, std::move(c));
    }
    TameElem operator-() const {
        TameElem out = *this;
        for (auto& c : out.a_) c = -c;
        return out;
    }
    friend TameElem operator-(const TameElem& x, const TameElem& y) { return x + (-y); }
    friend TameElem operator*(const TameElem& x, const TameElem& y) {
        int r = common(x, y);
        if (r == 0) return TameElem(x.coeff(0) * y.coeff(0));
        std::vector<Rat> c(static_cast<std::size_t>(r), Rat(0));
        for (std::size_t i = 0; i < x.a_.size(); ++i) {
            if (x.a_[i].is_zero()) continue;
            for (std::size_t j = 0; j < y.a_.size(); ++j) {
                if (y.a_[j].is_zero()) continue;
                std::size_t k = i + j;
                Rat term = x.a_[i] * y.a_[j];
                if (k >= static_cast<std::size_t>(r)) {
                    k -= static_cast<std::size_t>(r);
                    term = term * Rat(2);
                }
                c[k] = c[k] + term;
            }
        }
        return TameElem(r, std::move(c));
    }
    friend TameElem operator/(const TameElem& x, const TameElem& y) { return x * y.inverse(); }

    /// Solves y * x = 1 through the r x r multiplication matrix.
    TameElem inverse() const {
        if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero tame element");
        if (r_ == 0) return TameElem(Rat(1) / coeff(0));
        const std::size_t r = static_cast<std::size_t>(r_);
        // column j = coefficients of this * pi^j
        std::vector<std::vector<Rat>> m(r, std::vector<Rat>(r + 1, Rat(0)));
        for (std::size_t j = 0; j < r; ++j) {
            TameElem col = *this * pi_power(r_, static_cast<int>(j));
            for (std::size_t i = 0; i < r; ++i) m[i][j] = col.coeff(static_cast<int>(i));
        }
        m[0][r] = Rat(1);
        for (std::size_t k = 0; k < r; ++k) {
            std::size_t piv = k;
            while (piv < r && m[piv][k].is_zero()) ++piv;
            if (piv == r) fail(ErrorKind::AssertionFailed, "singular multiplication matrix");
            std::swap(m[k], m[piv]);
            Rat inv = Rat(1) / m[k][k];
            for (std::size_t j = k; j <= r; ++j) m[k][j] = m[k][j] * inv;
            for (std::size_t i = 0; i < r; ++i) {
                if (i == k || m[i][k].is_zero()) continue;
                Rat f = m[i][k];
                for (std::size_t j = k; j <= r; ++j) m[i][j] = m[i][j] - f * m[k][j];
            }
        }
        std::vector<Rat> c(r);
        for (std::size_t i = 0; i < r; ++i) c[i] = m[i][r];
        return TameElem(r_, std::move(c));
    }

    friend bool operator==(const TameElem& x, const TameElem& y) {
        std::size_t n = std::max(x.a_.size(), y.a_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (!(x.coeff(static_cast<int>(i)) == y.coeff(static_cast<int>(i)))) return false;
        return true;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (a_[i].is_zero()) continue;
            std::string c = a_[i].str();
            std::string mono = i == 0 ? "" : (i == 1 ? "pi" : "pi^" + std::to_string(i));
            std::string term = mono.empty() ? c : (c == "1" ? mono : (c == "-1" ? "-" + mono : c + "*" + mono));
            if (out.empty()) out = term;
            else if (term[0] == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    static TameElem make(int r, std::vector<Rat> c) {
        if (r == 0) return TameElem(c.empty() ? Rat(0) : c[0]);
        return TameElem(r, std::move(c));
    }
    static int common(const TameElem& x, const TameElem& y) {
        if (x.r_ == y.r_ || y.r_ == 0) return x.r_;
        if (x.r_ == 0) return y.r_;
        fail(ErrorKind::FieldMismatch, "tame elements over different extensions");
    }

    int r_ = 0;
    std::vector<Rat> a_{Rat(0)};
};

inline bool is_zero(const TameElem& x) { return x.is_zero(); }

/// Valuation normalized so v(2) = 1, v(pi) = 1/r. The candidate term
/// valuations v2(a_i) + i/r have distinct fractional parts, so no cancellation.
inline Rat tame_val(const TameElem& x) {
    if (x.is_zero()) fail(ErrorKind::ZeroElement, "valuation of zero");
    const int r = std::max(1, x.degree());
    bool have = false;
    Rat best;
    for (int i = 0; i < r; ++i) {
        Rat c = x.coeff(i);
        if (c.is_zero()) continue;
        Rat v = Rat(c.v2()) + Rat(mpz_class(i), mpz_class(r));
        if (!have || v < best) best = v;
        have = true;
    }
    return best;
}

/// Image in the residue field F_2 of an integral element.
inline int tame_residue(const TameElem& x) {
    if (x.is_zero()) return 0;
    if (tame_val(x) < Rat(0)) fail(ErrorKind::NonIntegral, "element " + x.str() + " has negative valuation");
    return x.coeff(0).is_zero() ? 0 : x.coeff(0).mod2();
}

inline std::string format_coeff(const TameElem& e, const std::vector<std::string>&, std::size_t) { return e.str(); }

}  // namespace freycond
