#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/calculus.hpp"
#include "hurwitz/interlace.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/ode.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// Result of one randomized identity suite. Deterministic for a fixed
/// seed and case count.
struct check_report {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_counterexample;

    bool passed() const { return failures == 0; }
};

namespace checks {

template <coefficient_ring R>
series<R> sample_series(const R& ring, std::mt19937_64& g, std::size_t precision) {
    std::vector<typename R::element_type> v;
    v.reserve(precision);
    for (std::size_t i = 0; i < precision; ++i) v.push_back(ring.sample(g));
    return series<R>(ring, std::move(v));
}

/// Random series with a unit constant term.
template <coefficient_ring R>
series<R> sample_unit_headed(const R& ring, std::mt19937_64& g,
                             std::size_t precision) {
    auto f = sample_series(ring, g, precision);
    typename R::element_type head = ring.sample(g);
    while (!ring.try_invert(head)) head = ring.sample(g);
    std::vector<typename R::element_type> v = f.coeffs();
    v[0] = std::move(head);
    return series<R>(ring, std::move(v));
}

/// Random series with zero constant term.
template <coefficient_ring R>
series<R> sample_h0(const R& ring, std::mt19937_64& g, std::size_t precision) {
    auto f = sample_series(ring, g, precision);
    std::vector<typename R::element_type> v = f.coeffs();
    v[0] = ring.zero();
    return series<R>(ring, std::move(v));
}

template <coefficient_ring R>
series_tuple<R> sample_tuple(const R& ring, std::mt19937_64& g, std::size_t arity,
                             std::size_t precision) {
    std::vector<series<R>> comps;
    comps.reserve(arity);
    for (std::size_t i = 0; i < arity; ++i)
        comps.push_back(sample_series(ring, g, precision));
    return series_tuple<R>(std::move(comps));
}

template <coefficient_ring R>
std::string describe(const char* label, const series<R>& f) {
    return std::string(label) + " = " + series_to_json(f).dump() + " over " +
           f.ring().descriptor().name();
}

template <coefficient_ring R>
std::string describe(const char* label, const series_tuple<R>& t) {
    return std::string(label) + " = " + tuple_to_json(t).dump() + " over " +
           t.ring().descriptor().name();
}

struct case_result {
    bool ok = true;
    std::string message;

    static case_result pass() { return {}; }
    static case_result fail(std::string msg) { return {false, std::move(msg)}; }
};

/// Cycle a case over the stock rings.
template <typename F>
case_result over_all_rings(std::size_t index, F&& f) {
    switch (index % 4) {
    case 0: return f(integer_ring{});
    case 1: return f(rational_ring{});
    case 2: return f(modular_ring{7});
    default: return f(modular_ring{6});
    }
}

/// Rationals and mod-7 only (the rings named by the theorem suites).
template <typename F>
case_result over_field_rings(std::size_t index, F&& f) {
    if (index % 2 == 0) return f(rational_ring{});
    return f(modular_ring{7});
}

template <typename CaseFn>
check_report run_cases(std::string_view suite, std::uint64_t seed, std::size_t cases,
                       CaseFn&& one_case) {
    check_report rep;
    rep.suite = suite;
    rep.seed = seed;
    rep.cases = cases;
    std::mt19937_64 g(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        case_result r = one_case(c, g);
        if (!r.ok) {
            ++rep.failures;
            if (rep.first_counterexample.empty())
                rep.first_counterexample = "case " + std::to_string(c) + ": " + r.message;
        }
    }
    return rep;
}

// --- suite bodies -----------------------------------------------------

template <coefficient_ring R>
case_result ring_axioms_case(const R& ring, std::mt19937_64& g) {
    using E = typename R::element_type;
    const E a = ring.sample(g), b = ring.sample(g), c = ring.sample(g);
    const std::string where = " over " + ring.descriptor().name();

    if (!((a + b) + c == a + (b + c))) return case_result::fail("add not associative" + where);
    if (!(a + b == b + a)) return case_result::fail("add not commutative" + where);
    if (!((a * b) * c == a * (b * c))) return case_result::fail("mul not associative" + where);
    if (!(a * b == b * a)) return case_result::fail("mul not commutative" + where);
    if (!(a * (b + c) == a * b + a * c)) return case_result::fail("not distributive" + where);
    if (!(a + ring.zero() == a)) return case_result::fail("zero not neutral" + where);
    if (!(a * ring.one() == a)) return case_result::fail("one not neutral" + where);
    if (!(a + (-a) == ring.zero())) return case_result::fail("negation broken" + where);

    const std::int64_t x = static_cast<std::int64_t>(g() % 201) - 100;
    const std::int64_t y = static_cast<std::int64_t>(g() % 201) - 100;
    if (!(ring.from_integer(bigint(x + y)) ==
          ring.from_integer(bigint(x)) + ring.from_integer(bigint(y))))
        return case_result::fail("integer image not additive" + where);
    if (!(ring.from_integer(bigint(x * y)) ==
          ring.from_integer(bigint(x)) * ring.from_integer(bigint(y))))
        return case_result::fail("integer image not multiplicative" + where);

    if (auto inv = ring.try_invert(a); inv && !(a * *inv == ring.one()))
        return case_result::fail("claimed inverse of " + ring.to_string(a) +
                                 " is wrong" + where);
    return case_result::pass();
}

inline check_report suite_ring_axioms(std::uint64_t seed, std::size_t cases) {
    return run_cases("ring-axioms", seed, cases, [](std::size_t c, std::mt19937_64& g) {
        return over_all_rings(c, [&](const auto& ring) { return ring_axioms_case(ring, g); });
    });
}

template <coefficient_ring R>
case_result rota_baxter_case(const R& ring, std::mt19937_64& g) {
    const std::size_t p = 16;
    const series<R> f = sample_series(ring, g, p);
    const series<R> h = sample_series(ring, g, p);

    // integration by parts, weight 0
    const series<R> lhs = integrate(f) * integrate(h);
    const series<R> rhs = integrate(f * integrate(h)) + integrate(integrate(f) * h);
    if (!equal_at_common(lhs, rhs))
        return case_result::fail("integration-by-parts identity failed: " +
                                 describe("f", f) + ", " + describe("g", h));

    if (!equal_at_common(derive(integrate(f)), f))
        return case_result::fail("derive(integrate(f)) != f: " + describe("f", f));

    const std::size_t k = 1 + g() % 12;
    const series<R> bk = basis(ring, k, k + 4);
    if (!equal_at_common(integrate(derive(bk)), bk))
        return case_result::fail("integrate(derive(<k>)) != <k> for k = " +
                                 std::to_string(k));

    // derivation rule for the product
    if (!equal_at_common(derive(f * h), derive(f) * h + f * derive(h)))
        return case_result::fail("product rule failed: " + describe("f", f) + ", " +
                                 describe("g", h));

    // basis product law
    const std::size_t m = g() % 13, n = g() % 13;
    const series<R> prod = basis(ring, m, m + n + 1) * basis(ring, n, m + n + 1);
    const series<R> expect =
        ring.from_integer(binomial(m + n, m)) * basis(ring, m + n, m + n + 1);
    if (!equal_at_common(prod, expect))
        return case_result::fail("<m><n> law failed for m = " + std::to_string(m) +
                                 ", n = " + std::to_string(n));
    return case_result::pass();
}

inline check_report suite_rota_baxter(std::uint64_t seed, std::size_t cases) {
    return run_cases("rota-baxter", seed, cases, [](std::size_t c, std::mt19937_64& g) {
        return over_all_rings(c, [&](const auto& ring) { return rota_baxter_case(ring, g); });
    });
}

template <coefficient_ring R>
case_result interlace_bijection_case(const R& ring, std::mt19937_64& g) {
    const std::size_t n = 1 + g() % 4;
    const std::size_t p = 1 + g() % 6;
    const series_tuple<R> t = sample_tuple(ring, g, n, p);
    const series<R> z = interlace(t);

    if (!equal_at(unlace(z, n), t, p))
        return case_result::fail("unlace(interlace(t)) != t: " + describe("t", t));

    const series<R> f = sample_series(ring, g, n * p + g() % n);
    const series<R> back = interlace(unlace(f, n));
    if (!equal_at(back, f, (f.precision() / n) * n))
        return case_result::fail("interlace(unlace(f)) != f: " + describe("f", f));

    // indexing law z(m) = z_{m mod n}(m div n)
    for (std::size_t m = 0; m < z.precision(); ++m) {
        const auto d = decompose_index(m, n);
        if (!(z.coeff(m) == t.component(d.remainder).coeff(d.quotient)))
            return case_result::fail("indexing law failed at m = " + std::to_string(m) +
                                     ": " + describe("t", t));
    }

    // linearity of both maps
    const series_tuple<R> s = sample_tuple(ring, g, n, p);
    if (!equal_at_common(interlace(t + s), interlace(t) + interlace(s)))
        return case_result::fail("interlace not additive: " + describe("t", t));
    const auto a = ring.sample(g);
    if (!equal_at_common(interlace(a * t), a * interlace(t)))
        return case_result::fail("interlace not homogeneous: " + describe("t", t));
    const series<R> f2 = sample_series(ring, g, n * p);
    if (!equal_at(unlace(f + f2, n), unlace(f, n) + unlace(f2, n), p))
        return case_result::fail("unlace not additive: " + describe("f", f));

    // Hadamard product interlaces componentwise
    std::vector<series<R>> had;
    for (std::size_t i = 0; i < n; ++i)
        had.push_back(hadamard(t.component(i), s.component(i)));
    if (!equal_at_common(interlace(series_tuple<R>(std::move(had))),
                         hadamard(interlace(t), interlace(s))))
        return case_result::fail("componentwise Hadamard law failed: " +
                                 describe("t", t) + ", " + describe("u", s));

    // m-fold integral as a tuple rotation
    const std::size_t m = g() % (3 * n + 1);
    if (!equal_at_common(interlace(integrate_tuple(t, m)), integrate(z, m)))
        return case_result::fail("tuple integral failed for m = " + std::to_string(m) +
                                 ": " + describe("t", t));

    // i-fold derivative as a tuple rotation
    if (p >= 2) {
        const std::size_t i = g() % (n + 1);
        if (!equal_at_common(interlace(derive_tuple(t, i)), derive(z, i)))
            return case_result::fail("tuple derivative failed for i = " +
                                     std::to_string(i) + ": " + describe("t", t));
    }
    return case_result::pass();
}

inline check_report suite_interlace_bijection(std::uint64_t seed, std::size_t cases) {
    return run_cases("interlace-bijection", seed, cases,
                     [](std::size_t c, std::mt19937_64& g) {
                         return over_all_rings(c, [&](const auto& ring) {
                             return interlace_bijection_case(ring, g);
                         });
                     });
}

template <coefficient_ring R>
case_result basis_product_case(const R& ring, std::mt19937_64& g) {
    const std::size_t n = 1 + g() % 4;
    const std::size_t p = 1 + g() % (24 / n);
    const std::size_t k = g() % 9;
    const std::size_t m = g() % 9;
    const series_tuple<R> t = sample_tuple(ring, g, n, p);
    const series<R> z = interlace(t);

    const series_tuple<R> got = interlaced_basis_product(k, m, t);
    const series<R> direct =
        basis(ring, k, n * p + m + k + 1) * integrate(z, m);
    if (!equal_at_common(interlace(got), direct))
        return case_result::fail("basis product mismatch for k = " + std::to_string(k) +
                                 ", m = " + std::to_string(m) + ": " + describe("t", t));

    // coefficient formula (<k> z)(j) = C(j, k) z(j - k)
    const series<R> kz = basis(ring, k, n * p + k + 1) * z;
    for (std::size_t j = 0; j < kz.precision(); ++j) {
        const auto expect = ring.from_integer(binomial(j, k)) *
                            z.coeff_or_zero(static_cast<std::ptrdiff_t>(j) -
                                            static_cast<std::ptrdiff_t>(k));
        if (!(kz.coeff(j) == expect))
            return case_result::fail("coefficient law failed at j = " +
                                     std::to_string(j) + ": " + describe("t", t));
    }

    // over the rationals, <k> z = (1/k!) <1>^k z
    if constexpr (R::q_algebra) {
        const series<R> xk = pow(basis(ring, 1, n * p + k + 1), static_cast<long long>(k));
        const auto invfact = ring.try_invert(ring.from_integer(factorial(k)));
        if (!equal_at_common(kz, *invfact * (xk * z)))
            return case_result::fail("scalar form of the basis product failed for k = " +
                                     std::to_string(k) + ": " + describe("t", t));
    }
    return case_result::pass();
}

inline check_report suite_basis_product(std::uint64_t seed, std::size_t cases) {
    return run_cases("thm-main1", seed, cases, [](std::size_t c, std::mt19937_64& g) {
        return over_field_rings(c, [&](const auto& ring) { return basis_product_case(ring, g); });
    });
}

template <coefficient_ring R>
case_result series_product_case(const R& ring, std::mt19937_64& g) {
    const std::size_t n = 1 + g() % 4;
    const std::size_t p = 1 + g() % (24 / n);
    const std::size_t pf = 1 + g() % 12;
    const series_tuple<R> t = sample_tuple(ring, g, n, p);
    const series<R> f = sample_series(ring, g, pf);

    const series_tuple<R> got = interlaced_series_product(f, t);
    const series<R> direct = f * interlace(t);
    const std::size_t want = std::min(pf / n, p);
    if (got.precision() != want)
        return case_result::fail("series product precision " +
                                 std::to_string(got.precision()) + ", expected " +
                                 std::to_string(want));
    if (!equal_at(interlace(got), truncate(direct, n * want), n * want))
        return case_result::fail("series product mismatch: " + describe("f", f) + ", " +
                                 describe("t", t));

    // constant factors act componentwise
    const auto a = ring.sample(g);
    const series_tuple<R> ct =
        interlaced_series_product(series<R>::constant(ring, a, n), t);
    if (!equal_at_common(interlace(ct), a * interlace(t)))
        return case_result::fail("constant factor law failed: " + describe("t", t));
    return case_result::pass();
}

inline check_report suite_series_product(std::uint64_t seed, std::size_t cases) {
    return run_cases("thm-fintl", seed, cases, [](std::size_t c, std::mt19937_64& g) {
        return over_field_rings(c, [&](const auto& ring) { return series_product_case(ring, g); });
    });
}

template <coefficient_ring R>
case_result matrix_equivalence_case(const R& ring, std::mt19937_64& g) {
    const std::size_t n = 1 + g() % 3;
    const std::size_t p = 20;
    std::vector<typename R::element_type> a;
    a.reserve(n);
    for (std::size_t i = 0; i < n; ++i) a.push_back(ring.sample(g));

    series_tuple<R> t = sample_tuple(ring, g, n, p);
    const bool constructed = g() % 2 == 0;
    if (constructed) {
        // genuine solution: solve with random initial data, then unlace
        std::vector<series<R>> coeffs;
        for (const auto& ai : a)
            coeffs.push_back(series<R>::constant(ring, ai, n * p - n));
        std::vector<typename R::element_type> init;
        for (std::size_t i = 0; i < n; ++i) init.push_back(ring.sample(g));
        t = unlace(solve(linear_ode<R>(std::move(coeffs)), init), n);
    }

    const equivalence_report rep = check_matrix_equivalence(ring, a, t);
    if (constructed && !rep.ode_holds)
        return case_result::fail("a constructed solution fails its own equation: " +
                                 describe("t", t));
    if (!rep.agree())
        return case_result::fail("predicates disagree (equation: " +
                                 std::string(rep.ode_holds ? "holds" : "fails") +
                                 ", matrix: " +
                                 std::string(rep.matrix_holds ? "holds" : "fails") +
                                 "): " + describe("t", t));
    return case_result::pass();
}

inline check_report suite_matrix_equivalence(std::uint64_t seed, std::size_t cases) {
    return run_cases("gkthm-equiv", seed, cases, [](std::size_t c, std::mt19937_64& g) {
        return over_all_rings(c, [&](const auto& ring) {
            return matrix_equivalence_case(ring, g);
        });
    });
}

template <coefficient_ring R>
case_result divided_power_case(const R& ring, std::mt19937_64& g) {
    const std::size_t p = 10;
    const series<R> f = sample_series(ring, g, p);
    const series<R> h = sample_h0(ring, g, p);

    // n! h^(n) = h^n over the rationals, for h with zero constant term
    if constexpr (R::q_algebra) {
        const std::size_t n = g() % 7;
        const series<R> lhs = ring.from_integer(factorial(n)) * divided_power(h, n);
        if (!equal_at_common(lhs, pow(h, static_cast<long long>(n))))
            return case_result::fail("n! h^(n) != h^n for n = " + std::to_string(n) +
                                     ": " + describe("h", h));
    }

    // binomial product of divided powers
    const std::size_t m1 = g() % 5, n1 = g() % 4;
    const series<R> lhs = divided_power(f, m1) * divided_power(f, n1);
    const series<R> rhs =
        ring.from_integer(binomial(m1 + n1, m1)) * divided_power(f, m1 + n1);
    if (!equal_at_common(lhs, rhs))
        return case_result::fail("divided-power product law failed for m = " +
                                 std::to_string(m1) + ", n = " + std::to_string(n1) +
                                 ": " + describe("h", f));

    // addition law on zero-constant-term series
    const series<R> h2 = sample_h0(ring, g, p);
    const std::size_t n2 = g() % 6;
    series<R> sum = series<R>::zero(ring, p);
    for (std::size_t i = 0; i <= n2; ++i)
        sum = sum + divided_power(h, i) * divided_power(h2, n2 - i);
    if (!equal_at_common(divided_power(h + h2, n2), sum))
        return case_result::fail("divided-power addition law failed for n = " +
                                 std::to_string(n2) + ": " + describe("f", h) + ", " +
                                 describe("g", h2));

    // vanishing below the diagonal and the order bound
    const std::size_t n3 = g() % (p + 2);
    const series<R> dp = divided_power(h, n3);
    for (std::size_t i = 0; i < std::min(n3, dp.precision()); ++i)
        if (!(dp.coeff(i) == ring.zero()))
            return case_result::fail("h^(n) has a nonzero coefficient below n = " +
                                     std::to_string(n3) + ": " + describe("h", h));
    const order_value oh = ord(h), od = ord(dp);
    if (!oh.is_infinite() && !od.is_infinite() && n3 > 0 &&
        od.value() < n3 * oh.value())
        return case_result::fail("order bound ord(h^(n)) >= n ord(h) failed: " +
                                 describe("h", h));
    return case_result::pass();
}

inline check_report suite_divided_powers(std::uint64_t seed, std::size_t cases) {
    return run_cases("divided-powers", seed, cases, [](std::size_t c, std::mt19937_64& g) {
        return over_all_rings(c, [&](const auto& ring) { return divided_power_case(ring, g); });
    });
}

template <coefficient_ring R>
case_result exp_laws_case(const R& ring, std::mt19937_64& g) {
    const std::size_t p = 10;
    const series<R> h = sample_h0(ring, g, p);

    auto [exp_neg, inv_exp] = exp_inverse_pair(h);
    if (!equal_at_common(exp_neg, inv_exp))
        return case_result::fail("exp(-h) != exp(h)^{-1}: " + describe("h", h));

    auto [de, ede] = exp_derivative_pair(h);
    if (!equal_at_common(de, ede))
        return case_result::fail("exp derivative law failed: " + describe("h", h));

    if (classify(exp(h)) != series_class::eps_one)
        return case_result::fail("exp(h) does not have constant term 1: " +
                                 describe("h", h));

    // power rule for integer exponents
    const long long k = static_cast<long long>(g() % 9) - 3;
    const series<R> f = sample_unit_headed(ring, g, p);
    const series<R> lhs = derive(pow(f, k));
    const series<R> rhs =
        ring.from_integer(bigint(k)) * (pow(f, k - 1) * derive(f));
    if (!equal_at_common(lhs, rhs))
        return case_result::fail("power rule failed for k = " + std::to_string(k) +
                                 ": " + describe("f", f));
    return case_result::pass();
}

inline check_report suite_exp_laws(std::uint64_t seed, std::size_t cases) {
    return run_cases("exp-laws", seed, cases, [](std::size_t c, std::mt19937_64& g) {
        return over_all_rings(c, [&](const auto& ring) { return exp_laws_case(ring, g); });
    });
}

template <coefficient_ring R>
case_result reduction_order_case(const R& ring, std::mt19937_64& g) {
    const std::size_t p = 12;
    // build an equation with a known invertible solution y1:
    // pick y1 and h1, then force h0 := -(y1'' + h1 y1') y1^{-1}.
    const series<R> y1 = sample_unit_headed(ring, g, p);
    const series<R> h1 = sample_series(ring, g, p);
    const series<R> h0 = -((derive(y1, 2) + h1 * derive(y1)) * invert(y1));
    const linear_ode<R> ode({h0, h1});

    const auto a = ring.sample(g), b = ring.sample(g);
    const series<R> h = reduction_factor(ode, y1, a, b);
    const series<R> res = residual(ode, h * y1);
    if (!ord(res).is_infinite())
        return case_result::fail("h * y1 fails the equation: " + describe("y1", y1) +
                                 ", " + describe("h1", h1));

    if constexpr (R::q_algebra) {
        const series<R> y1_inv = invert(y1);
        const series<R> closed_tail =
            integrate(exp(-integrate(h1)) * (y1_inv * y1_inv));
        const auto scale = b * eps(y1) * eps(y1);
        const series<R> closed =
            series<R>::constant(ring, a, closed_tail.precision()) +
            scale * closed_tail;
        if (!equal_at_common(h, closed))
            return case_result::fail("recursion disagrees with the closed form: " +
                                     describe("y1", y1) + ", " + describe("h1", h1));
    }

    // the dedicated second solution starts (0, y1(0)^{-1}, ...)
    const series<R> y2 = second_solution(ode, y1);
    if (!(eps(y2) == ring.zero()) ||
        !(y2.coeff(1) == *ring.try_invert(eps(y1))))
        return case_result::fail("second solution has wrong initial data: " +
                                 describe("y1", y1));
    if (!ord(residual(ode, y2)).is_infinite())
        return case_result::fail("second solution fails the equation: " +
                                 describe("y1", y1));
    return case_result::pass();
}

inline check_report suite_reduction_order(std::uint64_t seed, std::size_t cases) {
    return run_cases("reduction-order", seed, cases, [](std::size_t c, std::mt19937_64& g) {
        return over_field_rings(c, [&](const auto& ring) {
            return reduction_order_case(ring, g);
        });
    });
}

} // namespace checks

inline const std::vector<std::string>& check_suite_names() {
    static const std::vector<std::string> names = {
        "ring-axioms",    "rota-baxter", "interlace-bijection",
        "thm-main1",      "thm-fintl",   "gkthm-equiv",
        "divided-powers", "exp-laws",    "reduction-order"};
    return names;
}

inline check_report run_check_suite(std::string_view suite, std::uint64_t seed,
                                    std::size_t cases) {
    if (suite == "ring-axioms") return checks::suite_ring_axioms(seed, cases);
    if (suite == "rota-baxter") return checks::suite_rota_baxter(seed, cases);
    if (suite == "interlace-bijection")
        return checks::suite_interlace_bijection(seed, cases);
    if (suite == "thm-main1") return checks::suite_basis_product(seed, cases);
    if (suite == "thm-fintl") return checks::suite_series_product(seed, cases);
    if (suite == "gkthm-equiv") return checks::suite_matrix_equivalence(seed, cases);
    if (suite == "divided-powers") return checks::suite_divided_powers(seed, cases);
    if (suite == "exp-laws") return checks::suite_exp_laws(seed, cases);
    if (suite == "reduction-order") return checks::suite_reduction_order(seed, cases);
    std::string known;
    for (const auto& n : check_suite_names()) known += " " + n;
    throw config_error("unknown check suite '" + std::string(suite) + "'; known:" + known);
}

} // namespace hurwitz
