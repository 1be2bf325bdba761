#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "hurwitz/hurwitz.hpp"
#include "oracle_values.hpp"

namespace th {

using namespace hurwitz;

template <coefficient_ring R>
series<R> from_strings(const R& ring, const std::vector<std::string>& values,
                       std::size_t count) {
    std::vector<typename R::element_type> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) v.push_back(ring.parse(values.at(i)));
    return series<R>(ring, std::move(v));
}

template <coefficient_ring R>
series<R> from_strings(const R& ring, const std::vector<std::string>& values) {
    return from_strings(ring, values, values.size());
}

/// The equation y'' = cos y' - sin y, i.e. coefficients (sin, -cos).
template <coefficient_ring R>
linear_ode<R> pcs_equation(const R& ring, std::size_t precision) {
    return linear_ode<R>({sin_series(ring, precision), -cos_series(ring, precision)});
}

/// The equation y'' + (1+x) y' - y = 0 with solution 1 + x.
template <coefficient_ring R>
linear_ode<R> ordx_equation(const R& ring, std::size_t precision) {
    return linear_ode<R>({-series<R>::one(ring, precision),
                          series<R>::one(ring, precision) + basis(ring, 1, precision)});
}

template <coefficient_ring R>
series<R> one_plus_x(const R& ring, std::size_t precision) {
    return series<R>::one(ring, precision) + basis(ring, 1, precision);
}

} // namespace th
