// Build the composite sequence exp(sin) three ways and show they agree:
// directly via divided powers, as a sum of the two standard solutions of
// y'' = cos y' - sin y, and through its multiplicative inverse.

#include <iostream>

#include "hurwitz/hurwitz.hpp"

int main() {
    using namespace hurwitz;
    integer_ring z;
    const std::size_t precision = 16;

    const auto s = sin_series(z, precision);
    const auto c = cos_series(z, precision);
    const auto e = exp(s);

    std::cout << "exp(sin):\n";
    write_bfile(std::cout, e);

    const linear_ode<integer_ring> ode({s, -c});
    const auto basis = solution_basis(ode);
    std::cout << "\nsum of the standard solutions matches: "
              << (equal_at_common(basis[0] + basis[1], e) ? "yes" : "no") << "\n";

    const auto inv = invert(e);
    std::cout << "e * e^{-1} = 1: "
              << (equal_at_common(e * inv, series<integer_ring>::one(z, precision))
                      ? "yes"
                      : "no")
              << "\n";
    return 0;
}
