// Walks through good reduction of y^2 = x^r - r z x^{r-2} + ... + s over Q(2^{1/r}).
//   odd_good_reduction [z s r]
#include <iostream>

#include "freycond/pipelines.hpp"

using namespace freycond;

int main(int argc, char** argv) {
    Rat z(1), s(7, 4);
    int r = 3;
    try {
        if (argc == 4) {
            z = Rat::parse(argv[1]);
            s = Rat::parse(argv[2]);
            r = std::stoi(argv[3]);
        }
        const HyperEq<Rat> E = curve_zs<Rat>(r, z, s);
        std::cout << "curve:       " << to_string(E) << "\n"
                  << "discriminant " << hyper_discriminant(E).str() << "\n";

        const auto res = pipeline_odd_good_reduction(z, s, r);
        std::cout << "twist by " << res.twist << ": (z, s) = (" << res.z.str() << ", " << res.s.str() << ")\n"
                  << "over " << res.parameter << ":\n"
                  << "  model    " << res.model << "\n"
                  << "  v(disc)  " << res.disc_valuation << "\n"
                  << "  fiber    " << to_string(res.fiber) << " (" << to_string(res.fiber_type.kind) << ")\n"
                  << "  defined over " << res.field_of_definition << "\n";
        for (const auto& m : res.mismatches) std::cout << "  note: " << m << "\n";
    } catch (const Error& e) {
        std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
        return 1;
    }
}
