#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/calculus.hpp"
#include "hurwitz/ode.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// Value of the "ring" key: "integers", "rationals", or {"mod": m}.
inline nlohmann::json ring_to_json(const ring_descriptor& d) {
    switch (d.kind) {
    case ring_kind::integers: return "integers";
    case ring_kind::rationals: return "rationals";
    case ring_kind::mod_m: return nlohmann::json{{"mod", d.modulus.str()}};
    }
    throw config_error("unknown ring kind");
}

inline ring_descriptor ring_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "integers") return {ring_kind::integers, 0};
        if (s == "rationals") return {ring_kind::rationals, 0};
        throw config_error("unknown ring '" + s + "'; expected \"integers\", "
                           "\"rationals\" or {\"mod\": m}");
    }
    if (j.is_object() && j.contains("mod")) {
        const auto& m = j.at("mod");
        bigint modulus = m.is_string() ? detail::parse_bigint(m.get<std::string>())
                                       : bigint(m.get<long long>());
        if (modulus < 2) throw config_error("field 'mod' must be at least 2");
        return {ring_kind::mod_m, modulus};
    }
    throw config_error("malformed ring descriptor: " + j.dump());
}

template <coefficient_ring R>
nlohmann::json series_to_json(const series<R>& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t i = 0; i < f.precision(); ++i)
        coeffs.push_back(f.ring().to_string(f.coeff(i)));
    return {{"coeffs", std::move(coeffs)}, {"precision", f.precision()}};
}

template <coefficient_ring R>
series<R> series_from_json(const R& ring, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
        throw config_error("series needs a 'coeffs' array: " + j.dump());
    std::vector<typename R::element_type> v;
    v.reserve(j.at("coeffs").size());
    for (const auto& c : j.at("coeffs")) {
        if (c.is_string()) v.push_back(ring.parse(c.get<std::string>()));
        else if (c.is_number_integer())
            v.push_back(ring.from_integer(bigint(c.get<long long>())));
        else throw config_error("series coefficient must be a string or integer: " +
                                c.dump());
    }
    if (j.contains("precision") &&
        j.at("precision").get<std::size_t>() != v.size())
        throw config_error("field 'precision' disagrees with 'coeffs' length");
    return series<R>(ring, std::move(v));
}

template <coefficient_ring R>
nlohmann::json tuple_to_json(const series_tuple<R>& t) {
    nlohmann::json comps = nlohmann::json::array();
    for (std::size_t i = 0; i < t.arity(); ++i)
        comps.push_back(series_to_json(t.component(i)));
    return {{"arity", t.arity()}, {"components", std::move(comps)}};
}

template <coefficient_ring R>
series_tuple<R> tuple_from_json(const R& ring, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("components") ||
        !j.at("components").is_array() || j.at("components").empty())
        throw config_error("tuple needs a nonempty 'components' array");
    std::vector<series<R>> comps;
    comps.reserve(j.at("components").size());
    for (const auto& c : j.at("components")) comps.push_back(series_from_json(ring, c));
    if (j.contains("arity") && j.at("arity").get<std::size_t>() != comps.size())
        throw config_error("field 'arity' disagrees with 'components' length");
    return series_tuple<R>(std::move(comps));
}

template <coefficient_ring R>
    requires(R::q_algebra)
nlohmann::json egf_to_json(const egf_series<R>& e) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t i = 0; i < e.precision(); ++i)
        coeffs.push_back(e.ring().to_string(e.coeff(i)));
    return {{"kind", "egf"}, {"coeffs", std::move(coeffs)}, {"precision", e.precision()}};
}

/// Construct one of the named stock sequences at the requested precision.
template <coefficient_ring R>
series<R> named_series(const R& ring, std::string_view name, std::size_t precision) {
    if (name == "zero") return series<R>::zero(ring, precision);
    if (name == "one") return series<R>::one(ring, precision);
    if (name == "x") return basis(ring, 1, precision);
    if (name == "one-bar") return series<R>::repeated(ring, ring.one(), precision);
    if (name == "one-bar-inv")
        return invert(series<R>::repeated(ring, ring.one(), precision));
    if (name == "sin") return sin_series(ring, precision);
    if (name == "cos") return cos_series(ring, precision);
    if (name == "exp-sin") return exp(sin_series(ring, precision));
    if (name == "exp-sin-inv") return invert(exp(sin_series(ring, precision)));
    throw config_error("unknown series name '" + std::string(name) +
                       "'; known: zero, one, x, one-bar, one-bar-inv, sin, cos, "
                       "exp-sin, exp-sin-inv");
}

/// Equation coefficients are either serialized series or the names of
/// stock sequences, expanded at the requested precision.
template <coefficient_ring R>
linear_ode<R> ode_from_json(const R& ring, const nlohmann::json& j,
                            std::size_t precision) {
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
        throw config_error("equation needs a 'coeffs' array");
    std::vector<series<R>> coeffs;
    coeffs.reserve(j.at("coeffs").size());
    for (const auto& c : j.at("coeffs")) {
        if (c.is_string())
            coeffs.push_back(named_series(ring, c.get<std::string>(), precision));
        else coeffs.push_back(series_from_json(ring, c));
    }
    if (j.contains("order") && j.at("order").get<std::size_t>() != coeffs.size())
        throw config_error("field 'order' disagrees with 'coeffs' length");
    return linear_ode<R>(std::move(coeffs));
}

template <coefficient_ring R>
nlohmann::json ode_to_json(const linear_ode<R>& ode) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t i = 0; i < ode.order(); ++i)
        coeffs.push_back(series_to_json(ode.coefficient(i)));
    return {{"order", ode.order()},
            {"coeffs", std::move(coeffs)},
            {"ring", ring_to_json(ode.ring().descriptor())}};
}

/// OEIS b-file format: one "index coefficient" line per term, index from 0.
template <coefficient_ring R>
void write_bfile(std::ostream& os, const series<R>& f) {
    for (std::size_t i = 0; i < f.precision(); ++i)
        os << i << ' ' << f.ring().to_string(f.coeff(i)) << '\n';
}

template <coefficient_ring R>
    requires(R::q_algebra)
void write_bfile(std::ostream& os, const egf_series<R>& e) {
    for (std::size_t i = 0; i < e.precision(); ++i)
        os << i << ' ' << e.ring().to_string(e.coeff(i)) << '\n';
}

} // namespace hurwitz
