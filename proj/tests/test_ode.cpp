#include "helpers.hpp"

using namespace hurwitz;
using th::from_strings;

namespace {
integer_ring Z;
rational_ring Q;

using zseries = series<integer_ring>;
using qseries = series<rational_ring>;

linear_ode<integer_ring> harmonic(std::size_t precision) {
    // y'' + y = 0
    return linear_ode<integer_ring>(
        {zseries::one(Z, precision), zseries::zero(Z, precision)});
}
} // namespace

TEST_CASE("solving y'' + y = 0 gives the circular sequences") {
    const auto s = solve(harmonic(10), {Z.zero(), Z.one()});
    CHECK(s.precision() == 12);
    CHECK(equal_at(s, sin_series(Z, 12), 12));

    const auto c = solve(harmonic(10), {Z.one(), Z.zero()});
    CHECK(equal_at(c, cos_series(Z, 12), 12));

    CHECK_THROWS_AS(solve(harmonic(10), {Z.one()}), domain_error);
}

TEST_CASE("the worked second-order equation reproduces both solutions") {
    const auto ode = th::pcs_equation(Z, 22);
    const auto z1 = solve(ode, {Z.one(), Z.zero()});
    const auto z2 = solve(ode, {Z.zero(), Z.one()});
    CHECK(equal_at(z1, from_strings(Z, oracle::z1_terms, 24), 24));
    CHECK(equal_at(z2, from_strings(Z, oracle::z2_terms, 24), 24));
    CHECK(equal_at(z1 + z2, exp(sin_series(Z, 22)), 22));
}

TEST_CASE("zero initial data gives the zero solution") {
    const auto y = solve(th::pcs_equation(Z, 8), {Z.zero(), Z.zero()});
    CHECK(ord(y).is_infinite());
}

TEST_CASE("the standard basis spans the solution space") {
    const auto ode = th::pcs_equation(Q, 12);
    const auto b = solution_basis(ode);
    REQUIRE(b.size() == 2);
    CHECK(equal_at(b[0], from_strings(Q, oracle::z1_terms, 14), 14));
    CHECK(equal_at(b[1], from_strings(Q, oracle::z2_terms, 14), 14));

    std::mt19937_64 g(60);
    for (int i = 0; i < 40; ++i) {
        const auto c0 = Q.sample(g), c1 = Q.sample(g);
        const auto y = solve(ode, {c0, c1});
        CHECK(equal_at_common(y, c0 * b[0] + c1 * b[1]));
    }
}

TEST_CASE("residual separates solutions from non-solutions") {
    CHECK(ord(residual(harmonic(10), sin_series(Z, 12))).is_infinite());
    CHECK(ord(residual(th::pcs_equation(Z, 10), exp(sin_series(Z, 10))))
              .is_infinite());
    CHECK(ord(residual(harmonic(10), zseries::zero(Z, 10))).is_infinite());
    CHECK_FALSE(
        ord(residual(harmonic(10), zseries::repeated(Z, Z.one(), 12))).is_infinite());
    CHECK_THROWS_AS(residual(harmonic(10), zseries::one(Z, 1)),
                    insufficient_precision);
}

TEST_CASE("solve output re-checks to zero residual at full precision") {
    std::mt19937_64 g(61);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + g() % 3;
        const std::size_t p = 1 + g() % 10;
        const auto run = [&](const auto& ring) {
            using R = std::decay_t<decltype(ring)>;
            std::vector<series<R>> coeffs;
            for (std::size_t j = 0; j < n; ++j)
                coeffs.push_back(checks::sample_series(ring, g, p));
            std::vector<typename R::element_type> init;
            for (std::size_t j = 0; j < n; ++j) init.push_back(ring.sample(g));
            const linear_ode<R> ode(std::move(coeffs));
            const auto y = solve(ode, init);
            const auto res = residual(ode, y);
            return res.precision() == p && ord(res).is_infinite();
        };
        if (i % 2 == 0) CHECK(run(Q));
        else CHECK(run(modular_ring{7}));
    }
}

TEST_CASE("superposition of residuals") {
    std::mt19937_64 g(62);
    const auto ode = th::pcs_equation(Q, 10);
    for (int i = 0; i < 30; ++i) {
        const auto y = checks::sample_series(Q, g, 12);
        const auto z = checks::sample_series(Q, g, 12);
        const auto a = Q.sample(g), b = Q.sample(g);
        CHECK(equal_at_common(residual(ode, a * y + b * z),
                              a * residual(ode, y) + b * residual(ode, z)));
    }
}

TEST_CASE("the banded matrix pair") {
    const auto a0 = Z.from_integer(3), a1 = Z.from_integer(-2);
    const auto mp = build_lu(Z, {a0, a1});
    REQUIRE(mp.order == 2);
    CHECK(mp.lower[0][0] == Z.one());
    CHECK(mp.lower[0][1] == Z.zero());
    CHECK(mp.lower[1][0] == a1);
    CHECK(mp.lower[1][1] == Z.one());
    CHECK(mp.upper[0][0] == -a0);
    CHECK(mp.upper[0][1] == -a1);
    CHECK(mp.upper[1][0] == Z.zero());
    CHECK(mp.upper[1][1] == -a0);

    const auto single = build_lu(Z, {a0});
    CHECK(single.lower[0][0] == Z.one());
    CHECK(single.upper[0][0] == -a0);

    const auto trivial = build_lu(Z, {Z.zero(), Z.zero(), Z.zero()});
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            CHECK(trivial.lower[r][c] == (r == c ? Z.one() : Z.zero()));
            CHECK(trivial.upper[r][c] == Z.zero());
        }
}

TEST_CASE("matrix-system equivalence on the circular witness") {
    // y'' + y = 0 and the two-component form of sin
    const auto alt = invert(zseries::repeated(Z, Z.one(), 10));
    const series_tuple<integer_ring> sin_tuple({zseries::zero(Z, 10), alt});
    const auto rep =
        check_matrix_equivalence(Z, {Z.one(), Z.zero()}, sin_tuple);
    CHECK(rep.ode_holds);
    CHECK(rep.matrix_holds);
    CHECK(rep.agree());

    // the all-ones tuple fails both sides
    const auto ones = zseries::repeated(Z, Z.one(), 10);
    const auto bad =
        check_matrix_equivalence(Z, {Z.one(), Z.zero()},
                                 series_tuple<integer_ring>({ones, ones}));
    CHECK_FALSE(bad.ode_holds);
    CHECK_FALSE(bad.matrix_holds);
    CHECK(bad.agree());

    // the zero tuple satisfies both sides
    const auto trivial = check_matrix_equivalence(
        Z, {Z.one(), Z.zero()},
        series_tuple<integer_ring>({zseries::zero(Z, 5), zseries::zero(Z, 5)}));
    CHECK(trivial.ode_holds);
    CHECK(trivial.matrix_holds);

    CHECK_THROWS_AS(check_matrix_equivalence(Z, {Z.one()}, sin_tuple),
                    domain_error);
}

TEST_CASE("matrix-system equivalence on randomized instances") {
    const check_report rep = run_check_suite("gkthm-equiv", 63, 200);
    INFO(rep.first_counterexample);
    CHECK(rep.passed());
}

TEST_CASE("second solution of the worked equation") {
    const auto ode = th::pcs_equation(Q, 24);
    const auto y1 = exp(sin_series(Q, 24));
    const auto y2 = second_solution(ode, y1);
    CHECK(equal_at(y2, from_strings(Q, oracle::z2_terms, 20), 20));
    CHECK(eps(y2) == Q.zero());
    CHECK(y2.coeff(1) == Q.one()); // y1(0)^{-1}
    CHECK(ord(residual(ode, y2)).is_infinite());
}

TEST_CASE("second solution of the double-integration equation") {
    // y'' = 0 with y1 = 1: the construction integrates 1 once
    const linear_ode<qseries::ring_type> ode(
        {qseries::zero(Q, 8), qseries::zero(Q, 8)});
    const auto y2 = second_solution(ode, qseries::one(Q, 8));
    CHECK(equal_at_common(y2, basis(Q, 1, 8)));
}

TEST_CASE("second solution of the polynomial-coefficient equation") {
    const auto ode = th::ordx_equation(Q, 16);
    const auto y1 = th::one_plus_x(Q, 16);
    REQUIRE(ord(residual(ode, y1)).is_infinite());
    const auto y2 = second_solution(ode, y1);
    CHECK(equal_at(y2, from_strings(Q, oracle::second_solution_ordx_terms, 14), 14));
    CHECK(ord(residual(ode, y2)).is_infinite());
}

TEST_CASE("second solution rejects bad inputs") {
    const auto ode = th::pcs_equation(Q, 10);
    // not a solution
    CHECK_THROWS_AS(second_solution(ode, qseries::one(Q, 10)), domain_error);
    // non-unit head
    const auto zode = th::pcs_equation(Z, 10);
    CHECK_THROWS_AS(
        second_solution(zode, Z.from_integer(2) * exp(sin_series(Z, 10))),
        not_invertible);
    // wrong order
    const linear_ode<rational_ring> first({qseries::one(Q, 5)});
    CHECK_THROWS_AS(second_solution(first, qseries::one(Q, 5)), domain_error);
}

TEST_CASE("general solutions") {
    const auto ode = th::pcs_equation(Q, 18);
    const auto y1 = exp(sin_series(Q, 18));
    const auto y2 = second_solution(ode, y1);

    CHECK(equal_at_common(general_solution(ode, y1, Q.one(), Q.zero()), y1));
    CHECK(equal_at_common(general_solution(ode, y1, Q.zero(), Q.one()), y2));

    const auto both = general_solution(ode, y1, Q.one(), Q.one());
    CHECK(ord(residual(ode, both)).is_infinite());
    CHECK(eps(both) == Q.one());
    CHECK(both.coeff(1) == Q.from_integer(2));
    CHECK(equal_at_common(both, solve(ode, {Q.one(), Q.from_integer(2)})));

    std::mt19937_64 g(64);
    for (int i = 0; i < 20; ++i) {
        const auto c1 = Q.sample(g), c2 = Q.sample(g);
        CHECK(equal_at_common(general_solution(ode, y1, c1, c2),
                              c1 * y1 + c2 * y2));
    }
}

TEST_CASE("reduction factor follows the recursion") {
    const auto ode = th::ordx_equation(Q, 12);
    const auto y1 = th::one_plus_x(Q, 12);
    std::mt19937_64 g(65);
    const auto a = Q.sample(g), b = Q.sample(g);
    const auto h = reduction_factor(ode, y1, a, b);
    const auto delta =
        Q.from_integer(2) * (derive(y1) * invert(y1)) + ode.coefficient(1);
    CHECK(h.coeff(0) == a);
    CHECK(h.coeff(1) == b);
    CHECK(h.coeff(2) == -(b * delta.coeff(0)));
    CHECK(h.coeff(3) ==
          -(b * (delta.coeff(1) - delta.coeff(0) * delta.coeff(0))));
}

TEST_CASE("constant seed freezes the reduction factor") {
    const auto ode = th::pcs_equation(Q, 10);
    const auto y1 = exp(sin_series(Q, 10));
    const auto h = reduction_factor(ode, y1, Q.one(), Q.zero());
    CHECK(equal_at_common(h, qseries::one(Q, h.precision())));
    CHECK(equal_at_common(h * y1, y1));
}

TEST_CASE("reduction factor of the worked equations matches the closed form") {
    {
        const auto ode = th::pcs_equation(Q, 16);
        const auto y1 = exp(sin_series(Q, 16));
        const auto h = reduction_factor(ode, y1, Q.zero(), Q.one());
        CHECK(equal_at(h, from_strings(Q, oracle::reduction_factor_pcs_terms, 16),
                       16));
        CHECK(ord(residual(ode, h * y1)).is_infinite());
    }
    {
        const auto ode = th::ordx_equation(Q, 16);
        const auto y1 = th::one_plus_x(Q, 16);
        const auto h = reduction_factor(ode, y1, Q.zero(), Q.one());
        CHECK(equal_at(h, from_strings(Q, oracle::reduction_factor_ordx_terms, 16),
                       16));
        CHECK(ord(residual(ode, h * y1)).is_infinite());
    }
}

TEST_CASE("reduction-of-order laws on randomized equations") {
    const check_report rep = run_check_suite("reduction-order", 66, 120);
    INFO(rep.first_counterexample);
    CHECK(rep.passed());
}
