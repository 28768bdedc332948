// Prints exact and numeric values of a few zeta-star closed forms side by side.

#include <cstdio>

#include "mzsv/mzsv.hpp"

int main()
{
    using namespace mzsv;

    for (unsigned m = 1; m <= 3; ++m) {
        for (unsigned n = 1; n <= 3; ++n) {
            const PiMultiple exact{thmA_coefficient(m, n), 2 * m * n};
            std::vector<int> parts(n, 2 * static_cast<int>(m));
            const NumericValue num = mzsv_numeric(Index(Word(parts)), 1e-6);
            std::printf("zeta*({%u}^%u) = %-28s = %.15f  (sum: %.15f +/- %.1e)\n", 2 * m, n,
                        exact.str().c_str(), pi_multiple_numeric(exact).value, num.value, num.error_bound);
        }
    }

    for (unsigned n = 1; n <= 3; ++n) {
        std::printf("zeta*((3,1)^%u) = %s\n", n, PiMultiple{thmB_coefficient(n), 4 * n}.str().c_str());
    }
    for (unsigned n = 1; n <= 3; ++n) {
        std::printf("sum over insertions of 2 into (3,1)^%u of zeta* = %s\n", n,
                    PiMultiple{thmC_coefficient(n), 4 * n + 2}.str().c_str());
    }
}
