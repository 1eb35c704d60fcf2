#pragma once

// Arbitrary-precision rationals with 2-adic helpers. Storage and arithmetic
// are delegated to GMP's mpq_class, which keeps values in lowest terms.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "freycond/errors.hpp"

namespace freycond {

class Rat {
public:
    Rat() = default;

    template <std::integral I>
    Rat(I v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Accepts "n", "-n", "n/d" with optional surrounding whitespace.
    static Rat parse(std::string_view text) {
        std::string s(text);
        auto first = s.find_first_not_of(" \t");
        auto last = s.find_last_not_of(" \t");
        if (first == std::string::npos) fail(ErrorKind::Usage, "empty rational");
        s = s.substr(first, last - first + 1);
        auto slash = s.find('/');
        mpz_class num, den(1);
        auto parse_int = [](const std::string& part, mpz_class& out) {
            if (part.empty()) return false;
            std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
            if (i == part.size()) return false;
            for (std::size_t j = i; j < part.size(); ++j)
                if (part[j] < '0' || part[j] > '9') return false;
            return out.set_str(part[0] == '+' ? part.substr(1) : part, 10) == 0;
        };
        bool ok = slash == std::string::npos
                      ? parse_int(s, num)
                      : parse_int(s.substr(0, slash), num) && parse_int(s.substr(slash + 1), den);
        if (!ok) fail(ErrorKind::Usage, "malformed rational '" + s + "'");
        if (den == 0) fail(ErrorKind::Usage, "zero denominator in '" + s + "'");
        return Rat(num, den);
    }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const noexcept { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// 2-adic valuation; v2(0) is undefined.
    int v2() const {
        if (is_zero()) fail(ErrorKind::ZeroElement, "v2 of zero");
        return static_cast<int>(mpz_scan1(q_.get_num_mpz_t(), 0)) -
               static_cast<int>(mpz_scan1(q_.get_den_mpz_t(), 0));
    }

    /// Image in Z/2 of a 2-integral rational.
    int mod2() const {
        if (!is_zero() && v2() < 0) fail(ErrorKind::NonIntegralCoefficient, str() + " is not 2-integral");
        return mpz_odd_p(q_.get_num_mpz_t()) ? 1 : 0;
    }

    /// Image in Z/4 of a 2-integral rational (denominator is odd).
    int mod4() const {
        if (!is_zero() && v2() < 0) fail(ErrorKind::NonIntegralCoefficient, str() + " is not 2-integral");
        mpz_class n = q_.get_num(), d = q_.get_den();
        unsigned long nm = mpz_fdiv_ui(n.get_mpz_t(), 4);
        unsigned long dm = mpz_fdiv_ui(d.get_mpz_t(), 4);
        // d is odd so d^{-1} = d mod 4.
        return static_cast<int>((nm * dm) % 4);
    }

    /// Human form: "7/4", "-3".
    std::string str() const { return q_.get_str(); }
    /// Canonical serialized form, always with a denominator: "7/4", "-3/1".
    std::string fraction_str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) fail(ErrorKind::DivisionByZero, "rational division by zero");
        q_ /= o.q_;
        return *this;
    }
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline bool is_zero(const Rat& r) { return r.is_zero(); }

inline Rat pow(const Rat& base, int e) {
    if (e < 0) return pow(Rat(1) / base, -e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
}

inline Rat pow2(int e) { return pow(Rat(2), e); }

/// Square root in Q when it exists; the non-negative root is returned.
inline std::optional<Rat> exact_sqrt(const Rat& r) {
    if (r.sign() < 0) return std::nullopt;
    mpz_class n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rat(sn, sd);
}

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

/// Floor of a rational as an integer.
inline mpz_class floor(const Rat& r) {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return out;
}

}  // namespace freycond
