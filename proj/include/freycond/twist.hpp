#pragma once

#include <array>

#include "freycond/errors.hpp"
#include "freycond/rational.hpp"

namespace freycond {

struct TwistNormalization {
    int delta;  // one of 1, -1, 2, -2
    Rat z;
    Rat s;
};

/// Chooses delta in {1,-1,2,-2} so that (delta^2 z, delta^r s) has v2(s')
/// even and s'/2^{v2(s')} = 1 mod 4.
inline TwistNormalization normalize_twist(const Rat& z, const Rat& s, int r) {
    if (s.is_zero()) fail(ErrorKind::ZeroElement, "normalize_twist needs s != 0");
    if (r < 1 || r % 2 == 0) fail(ErrorKind::NotOddPrime, "twist exponent must be odd");
    for (int delta : std::array<int, 4>{1, -1, 2, -2}) {
        Rat sp = s * pow(Rat(delta), r);
        int v = sp.v2();
        if (v % 2 != 0) continue;
        if ((sp / pow2(v)).mod4() != 1) continue;
        return {delta, z * Rat(delta * delta), sp};
    }
    fail(ErrorKind::AssertionFailed, "no twist normalizes s");
}

}  // namespace freycond
