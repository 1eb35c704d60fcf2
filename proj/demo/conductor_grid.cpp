// Prints conductor exponents of every signature for t = 2^v, v in [-8, 8].
#include <iomanip>
#include <iostream>

#include "freycond/classifier.hpp"

using namespace freycond;

int main(int argc, char** argv) {
    const int r = argc > 1 ? std::stoi(argv[1]) : 5;
    const Signature sigs[] = {Signature::PprEven, Signature::PprOdd, Signature::Rrp, Signature::TwoRp, Signature::P35};

    std::cout << std::left << std::setw(8) << "t";
    for (auto s : sigs) std::cout << std::setw(10) << to_string(s);
    std::cout << "\n";
    for (int v = -8; v <= 8; ++v) {
        if (v == 0) continue;
        for (const Rat& t : {pow2(v), Rat(1) + pow2(v)}) {
            if (v < 0 && t != pow2(v)) continue;
            std::cout << std::setw(8) << t.str();
            for (auto s : sigs) {
                auto rep = classify(s, s == Signature::P35 ? 0 : r, t);
                std::string cell = rep.exponent ? std::to_string(*rep.exponent) : "-";
                if (rep.exponent && s == Signature::PprOdd && !cross_validate(s, r, t).agree) cell += "*";
                std::cout << std::setw(10) << cell;
            }
            std::cout << "\n";
        }
    }
    std::cout << "(* construction gives the other exponent)\n";
}
