#pragma once

// Binary finite fields GF(2^k), k <= 16, elements as bit vectors.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freycond/errors.hpp"
#include "freycond/poly.hpp"
#include "freycond/rational.hpp"

namespace freycond {

namespace gf2 {

inline int bit_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    while (b) {
        if (b & 1) out ^= a;
        a <<= 1;
        b >>= 1;
    }
    return out;
}

inline std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
    const int dm = bit_degree(m);
    for (int d = bit_degree(a); d >= dm; d = bit_degree(a)) a ^= m << (d - dm);
    return a;
}

/// Trial division by every polynomial of degree 1..deg/2.
inline bool is_irreducible(std::uint32_t poly) {
    const int k = bit_degree(poly);
    if (k < 1) return false;
    for (std::uint64_t d = 2; bit_degree(d) <= k / 2; ++d)
        if (mod(poly, d) == 0) return false;
    return true;
}

/// One irreducible modulus per degree; checked again at field construction.
inline constexpr std::array<std::uint32_t, 17> kDefaultModulus = {
    0,       0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x83,    0x11D,
    0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

}  // namespace gf2

/// Element of GF(2^k). A zero modulus marks the prime field GF(2), which
/// embeds into every GF(2^k), so prime-field constants mix freely.
class GF2Elem {
public:
    GF2Elem() = default;
    template <std::integral I>
    GF2Elem(I v) : bits_(static_cast<std::uint32_t>(v & 1)) {}  // NOLINT(google-explicit-constructor)
    GF2Elem(std::uint32_t modulus, std::uint32_t bits) : modulus_(modulus <= 0x3 ? 0 : modulus), bits_(bits) {
        if (gf2::bit_degree(bits_) >= std::max(1, gf2::bit_degree(modulus)))
            fail(ErrorKind::FieldMismatch, "element bits exceed field degree");
    }

    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint32_t bits() const noexcept { return bits_; }
    /// Degree of the field the element is written in (1 for the prime field).
    int field_degree() const noexcept { return modulus_ == 0 ? 1 : gf2::bit_degree(modulus_); }
    bool is_zero() const noexcept { return bits_ == 0; }

    friend GF2Elem operator+(const GF2Elem& a, const GF2Elem& b) {
        return GF2Elem(common(a, b), a.bits_ ^ b.bits_, raw_tag{});
    }
    friend GF2Elem operator-(const GF2Elem& a, const GF2Elem& b) { return a + b; }
    GF2Elem operator-() const { return *this; }
    friend GF2Elem operator*(const GF2Elem& a, const GF2Elem& b) {
        std::uint32_t m = common(a, b);
        std::uint64_t p = gf2::clmul(a.bits_, b.bits_);
        if (m != 0) p = gf2::mod(p, m);
        return GF2Elem(m, static_cast<std::uint32_t>(p), raw_tag{});
    }
    friend GF2Elem operator/(const GF2Elem& a, const GF2Elem& b) { return a * b.inverse(); }

    GF2Elem inverse() const {
        if (bits_ == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in GF(2^k)");
        // a^{2^k - 2}
        const int k = field_degree();
        return pow_u64((std::uint64_t{1} << k) - 2);
    }

    GF2Elem pow_u64(std::uint64_t e) const {
        GF2Elem out(modulus_, 1, raw_tag{}), base = *this;
        while (e) {
            if (e & 1) out = out * base;
            base = base * base;
            e >>= 1;
        }
        return out;
    }

    GF2Elem square() const { return *this * *this; }
    /// Unique square root (Frobenius is a bijection): a^{2^{k-1}}.
    GF2Elem sqrt() const {
        GF2Elem out = *this;
        for (int i = 1; i < field_degree(); ++i) out = out.square();
        return out;
    }

    friend bool operator==(const GF2Elem& a, const GF2Elem& b) {
        if (a.bits_ != b.bits_) return false;
        if (a.modulus_ == b.modulus_ || a.bits_ <= 1) return true;
        return false;
    }

    /// Reinterprets a prime-field element inside the field with this modulus.
    GF2Elem in_field(std::uint32_t modulus) const {
        if (modulus_ != 0 && modulus_ != modulus) fail(ErrorKind::FieldMismatch, "element belongs to another field");
        return GF2Elem(modulus <= 0x3 ? 0 : modulus, bits_, raw_tag{});
    }

private:
    struct raw_tag {};
    GF2Elem(std::uint32_t modulus, std::uint32_t bits, raw_tag) : modulus_(modulus), bits_(bits) {}

    static std::uint32_t common(const GF2Elem& a, const GF2Elem& b) {
        if (a.modulus_ == b.modulus_) return a.modulus_;
        if (a.modulus_ == 0) return b.modulus_;
        if (b.modulus_ == 0) return a.modulus_;
        fail(ErrorKind::FieldMismatch, "operands live in different binary fields");
    }

    std::uint32_t modulus_ = 0;
    std::uint32_t bits_ = 0;
};

inline bool is_zero(const GF2Elem& e) { return e.is_zero(); }

class GF2k {
public:
    explicit GF2k(int k) : GF2k(k, k >= 1 && k <= 16 ? gf2::kDefaultModulus[static_cast<std::size_t>(k)] : 0) {}

    GF2k(int k, std::uint32_t modulus) : k_(k), modulus_(modulus) {
        if (k < 1 || k > 16) fail(ErrorKind::FieldMismatch, "GF(2^k) supported for 1 <= k <= 16");
        if (gf2::bit_degree(modulus) != k || !gf2::is_irreducible(modulus))
            fail(ErrorKind::FieldMismatch, "modulus is not an irreducible polynomial of degree k");
    }

    int k() const noexcept { return k_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint32_t size() const noexcept { return std::uint32_t{1} << k_; }
    /// Modulus tag carried by elements (0 for the prime field).
    std::uint32_t tag() const noexcept { return k_ == 1 ? 0 : modulus_; }

    GF2Elem element(std::uint32_t bits) const { return GF2Elem(tag(), bits); }
    GF2Elem zero() const { return element(0); }
    GF2Elem one() const { return element(1); }
    /// The class of x modulo the defining polynomial.
    GF2Elem generator() const { return k_ == 1 ? one() : element(2); }

    std::vector<GF2Elem> elements() const {
        std::vector<GF2Elem> out;
        out.reserve(size());
        for (std::uint32_t b = 0; b < size(); ++b) out.push_back(element(b));
        return out;
    }

    bool contains(const GF2Elem& e) const { return e.modulus() == 0 || e.modulus() == tag(); }

    friend bool operator==(const GF2k& a, const GF2k& b) { return a.k_ == b.k_ && a.modulus_ == b.modulus_; }

private:
    int k_;
    std::uint32_t modulus_;
};

/// Field embedding GF(2^a) -> GF(2^b), a | b, sending the generator to the
/// first root of its minimal polynomial found by exhaustive search.
class Embedding {
public:
    Embedding(const GF2k& from, const GF2k& to) : from_(from), to_(to), image_(to.one()) {
        if (to.k() % from.k() != 0) fail(ErrorKind::FieldMismatch, "degree does not divide target degree");
        if (from.k() == 1) return;
        for (const auto& cand : to.elements()) {
            // Evaluate the modulus polynomial at cand.
            GF2Elem acc = to.zero();
            for (int i = from.k(); i >= 0; --i) {
                acc = acc * cand;
                if ((from.modulus() >> i) & 1U) acc = acc + to.one();
            }
            if (acc.is_zero()) {
                image_ = cand;
                return;
            }
        }
        fail(ErrorKind::FieldMismatch, "no embedding found");
    }

    GF2Elem operator()(const GF2Elem& e) const {
        if (e.modulus() == 0) return e.in_field(to_.tag());
        if (e.modulus() != from_.tag()) fail(ErrorKind::FieldMismatch, "element not in source field");
        GF2Elem acc = to_.zero(), pw = to_.one();
        for (int i = 0; i < from_.k(); ++i) {
            if ((e.bits() >> i) & 1U) acc = acc + pw;
            pw = pw * image_;
        }
        return acc;
    }

    const GF2k& target() const { return to_; }

private:
    GF2k from_, to_;
    GF2Elem image_;
};

using GF2Poly = Poly<GF2Elem>;

/// Exactly the roots of h in the field, by evaluating at every element.
inline std::vector<GF2Elem> roots_in_gf2k(const GF2Poly& h, const GF2k& field) {
    if (h.is_zero()) fail(ErrorKind::ZeroInput, "roots of the zero polynomial");
    for (const auto& c : h.coeffs())
        if (!field.contains(c)) fail(ErrorKind::FieldMismatch, "coefficient outside the search field");
    std::vector<GF2Elem> out;
    for (const auto& a : field.elements())
        if (h(a).is_zero()) out.push_back(a);
    return out;
}

/// Coefficient-wise reduction of a 2-integral rational polynomial to GF(2).
inline GF2Poly reduce_mod2(const Poly<Rat>& h) {
    std::vector<GF2Elem> out;
    for (const auto& c : h.coeffs()) {
        if (!c.is_zero() && c.v2() < 0)
            fail(ErrorKind::NonIntegralCoefficient, "coefficient " + c.str() + " has negative 2-adic valuation");
        out.emplace_back(c.mod2());
    }
    return GF2Poly(std::move(out));
}

/// Embeds every coefficient into the target field.
inline GF2Poly embed(const GF2Poly& p, const Embedding& emb) {
    return map_coeffs<GF2Elem>(p, [&](const GF2Elem& c) { return emb(c); });
}

/// Set of degrees of the irreducible factors of h over GF(2^k), computed by
/// distinct-degree splitting: gcd(h, x^{q^d} - x), q = 2^k.
inline std::vector<int> irreducible_factor_degrees(GF2Poly h, const GF2k& field) {
    std::vector<int> degrees;
    if (h.is_zero() || h.degree() < 1) return degrees;
    const GF2Poly x = GF2Poly::x();
    GF2Poly frob = x;  // x^{q^d} mod h
    for (int d = 1; h.degree() >= 1; ++d) {
        if (d > 64) fail(ErrorKind::AssertionFailed, "distinct-degree split did not terminate");
        for (int i = 0; i < field.k(); ++i) frob = long_division(frob * frob, h).second;
        GF2Poly g = gcd(h, frob - x);
        if (g.degree() >= 1) {
            degrees.push_back(d);
            while (g.degree() >= 1) {
                h = h / g;
                g = gcd(h, g);
            }
            frob = long_division(frob, h.degree() >= 1 ? h : GF2Poly(1)).second;
        }
    }
    return degrees;
}

inline std::string format_gf2(const GF2Elem& e) {
    if (e.modulus() == 0) return std::to_string(e.bits());
    // Polynomial in the generator "a".
    std::string out;
    for (int i = gf2::bit_degree(e.bits()); i >= 0; --i) {
        if (!((e.bits() >> i) & 1U)) continue;
        std::string term = i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i));
        out += out.empty() ? term : " + " + term;
    }
    return out.empty() ? "0" : out;
}

inline std::string format_coeff(const GF2Elem& e, const std::vector<std::string>&, std::size_t) {
    return format_gf2(e);
}

}  // namespace freycond
