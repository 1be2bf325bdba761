// Reduction of order for y'' + (1+x) y' - y = 0, which has the invertible
// solution y1 = 1 + x: recover a second solution both from the dedicated
// construction and as (reduction factor) * y1.

#include <iostream>

#include "hurwitz/hurwitz.hpp"

int main() {
    using namespace hurwitz;
    rational_ring q;
    const std::size_t precision = 14;

    const auto one_plus_x =
        series<rational_ring>::one(q, precision) + basis(q, 1, precision);
    const linear_ode<rational_ring> ode(
        {-series<rational_ring>::one(q, precision), one_plus_x});

    const auto y2 = second_solution(ode, one_plus_x);
    std::cout << "second solution:\n";
    write_bfile(std::cout, y2);

    const auto h = reduction_factor(ode, one_plus_x, q.zero(), q.one());
    std::cout << "\nfactor * y1 agrees: "
              << (equal_at_common(h * one_plus_x, y2) ? "yes" : "no") << "\n";
    std::cout << "residual of factor * y1 vanishes: "
              << (ord(residual(ode, h * one_plus_x)).is_infinite() ? "yes" : "no")
              << "\n";
    return 0;
}
