// Harmonic products and the S map on small words.

#include <iostream>

#include "mzsv/mzsv.hpp"

int main()
{
    using namespace mzsv;

    const HarmElem u(Word{2, 1});
    const HarmElem v(Word{2});
    std::cout << "z2 z1 * z2 = " << to_text(harmonic_product(u, v)) << '\n';

    for (const Word& w : {Word{3, 1}, Word{3, 1, 3, 1}, Word{1, 1, 1}}) {
        std::cout << "S(" << to_text(w) << ") = " << to_text(s_map(w)) << '\n';
    }

    // zeta*(3,1) = zeta(4) + zeta(3,1), numerically.
    const NumericValue star = mzsv_numeric(Index{3, 1}, 1e-9);
    const NumericValue expanded = harm_elem_numeric(s_map(Word{3, 1}), 1e-9);
    std::cout << "zeta*(3,1) = " << to_text(star) << "\nZ(S(z3 z1)) = " << to_text(expanded) << '\n';
}
