#pragma once

// Small helpers for polynomials over F_p, used only to certify
// irreducibility over Q by reduction modulo a well-chosen prime.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "freycond/errors.hpp"
#include "freycond/poly.hpp"
#include "freycond/rational.hpp"

namespace freycond::fp {

using Vec = std::vector<std::uint64_t>;  // lowest degree first

inline void trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t out = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) out = mulmod(out, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return out;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

inline Vec mul(const Vec& a, const Vec& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Vec out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
    trim(out);
    return out;
}

inline Vec rem(Vec a, const Vec& m, std::uint64_t p) {
    const std::uint64_t li = inv(m.back(), p);
    trim(a);
    while (a.size() >= m.size()) {
        std::uint64_t q = mulmod(a.back(), li, p);
        std::size_t shift = a.size() - m.size();
        for (std::size_t j = 0; j < m.size(); ++j) a[shift + j] = (a[shift + j] + p - mulmod(q, m[j], p)) % p;
        trim(a);
    }
    return a;
}

inline Vec sub(Vec a, const Vec& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline Vec gcd(Vec a, Vec b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Vec r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// x^{p^k} mod m.
inline Vec frobenius_power(const Vec& m, std::uint64_t p, int k) {
    Vec acc{0, 1};
    for (int i = 0; i < k; ++i) {
        Vec base = acc, out{1};
        std::uint64_t e = p;
        while (e) {
            if (e & 1) out = rem(mul(out, base, p), m, p);
            base = rem(mul(base, base, p), m, p);
            e >>= 1;
        }
        acc = out;
    }
    return acc;
}

/// Rabin's test: m (monic or not, degree n >= 1) is irreducible over F_p.
inline bool is_irreducible(Vec m, std::uint64_t p) {
    trim(m);
    const int n = static_cast<int>(m.size()) - 1;
    if (n < 1) return false;
    const Vec x = rem(Vec{0, 1}, m, p);
    if (!sub(frobenius_power(m, p, n), x, p).empty()) return false;
    for (int q = 2; q <= n; ++q) {
        bool prime = true;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) prime = false;
        if (!prime || n % q != 0) continue;
        Vec g = gcd(m, sub(frobenius_power(m, p, n / q), x, p), p);
        if (g.size() > 1) return false;
    }
    return true;
}

/// Reduces an integral polynomial modulo p; nullopt if a denominator is divisible by p.
inline std::optional<Vec> reduce(const Poly<Rat>& h, std::uint64_t p) {
    Vec out;
    for (const auto& c : h.coeffs()) {
        mpz_class n = c.num(), d = c.den();
        std::uint64_t dn = mpz_fdiv_ui(d.get_mpz_t(), p);
        if (dn == 0) return std::nullopt;
        out.push_back(mulmod(mpz_fdiv_ui(n.get_mpz_t(), p), inv(dn, p), p));
    }
    trim(out);
    return out;
}

inline bool is_small_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Certifies irreducibility over Q: some prime p not dividing lc(h) leaves h
/// irreducible of the same degree. Tries primes up to `limit`.
inline std::optional<std::uint64_t> irreducibility_witness(const Poly<Rat>& h, std::uint64_t limit = 2000) {
    if (h.degree() < 1) return std::nullopt;
    for (std::uint64_t p = 3; p <= limit; p += 2) {
        if (!is_small_prime(p)) continue;
        auto red = reduce(h, p);
        if (!red || static_cast<int>(red->size()) - 1 != h.degree()) continue;
        if (is_irreducible(*red, p)) return p;
    }
    return std::nullopt;
}

}  // namespace freycond::fp
