#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <string_view>

#include "hurwitz/checks.hpp"
#include "hurwitz/io.hpp"

namespace hurwitz {

/// Run a callable with the concrete ring selected by a descriptor.
template <typename F>
decltype(auto) with_ring(const ring_descriptor& d, F&& f) {
    switch (d.kind) {
    case ring_kind::integers: return f(integer_ring{});
    case ring_kind::rationals: return f(rational_ring{});
    case ring_kind::mod_m: return f(modular_ring{d.modulus});
    }
    throw config_error("unknown ring kind");
}

inline ring_descriptor parse_ring_argument(std::string_view s) {
    if (s == "integers") return {ring_kind::integers, 0};
    if (s == "rationals") return {ring_kind::rationals, 0};
    if (s.rfind("mod-", 0) == 0) {
        bigint m = detail::parse_bigint(s.substr(4));
        if (m < 2) throw config_error("modulus must be at least 2");
        return {ring_kind::mod_m, m};
    }
    throw config_error("unknown ring '" + std::string(s) +
                       "'; expected integers, rationals or mod-<m>");
}

/// Default seed for check runs: the HURWITZ_SEED environment variable if
/// set, otherwise a fixed constant.
inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("HURWITZ_SEED"))
        return static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
    return 20240001;
}

inline nlohmann::json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error("config '" + path + "': " + e.what());
    }
}

/// `seq <name> <precision>`: print a named sequence in b-file format.
inline int run_seq(std::ostream& out, std::ostream& err, std::string_view name,
                   std::size_t precision, const ring_descriptor& ring) {
    try {
        with_ring(ring, [&](const auto& r) {
            write_bfile(out, named_series(r, name, precision));
        });
        return 0;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

/// `solve <config.json>`: solve the configured equation, print the
/// solution as a b-file and report how far the residual was verified to
/// vanish. A nonzero residual term is a failure.
inline int run_solve(std::ostream& out, std::ostream& err, const nlohmann::json& cfg) {
    try {
        if (!cfg.contains("ring")) throw config_error("field 'ring' is required");
        if (!cfg.contains("ode")) throw config_error("field 'ode' is required");
        if (!cfg.contains("initials") || !cfg.at("initials").is_array())
            throw config_error("field 'initials' must be an array");
        const std::size_t precision =
            cfg.contains("precision") ? cfg.at("precision").get<std::size_t>() : 10;
        if (precision < 1) throw config_error("field 'precision' must be >= 1");
        const ring_descriptor rd = ring_from_json(cfg.at("ring"));
        if (cfg.at("ode").contains("ring") &&
            !(ring_from_json(cfg.at("ode").at("ring")) == rd))
            throw config_error("fields 'ring' and 'ode.ring' disagree");

        return with_ring(rd, [&](const auto& ring) -> int {
            using R = std::decay_t<decltype(ring)>;
            const linear_ode<R> ode = ode_from_json(ring, cfg.at("ode"), precision);
            if (cfg.at("initials").size() != ode.order())
                throw config_error("field 'initials' needs exactly " +
                                   std::to_string(ode.order()) + " entries, got " +
                                   std::to_string(cfg.at("initials").size()));
            std::vector<typename R::element_type> init;
            for (const auto& c : cfg.at("initials")) {
                if (c.is_string()) init.push_back(ring.parse(c.get<std::string>()));
                else if (c.is_number_integer())
                    init.push_back(ring.from_integer(bigint(c.get<long long>())));
                else throw config_error("initial values must be strings or integers");
            }
            const series<R> y = solve(ode, init);
            write_bfile(out, y);
            const series<R> res = residual(ode, y);
            const bool ok = ord(res).is_infinite();
            err << "residual verified zero through index "
                << (res.precision() == 0 ? 0 : res.precision() - 1) << "\n";
            if (!ok) err << "error: nonzero residual term\n";
            return ok ? 0 : 1;
        });
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

/// `check <suite>`: run one randomized identity suite; deterministic for a
/// fixed seed.
inline int run_check(std::ostream& out, std::ostream& err, std::string_view suite,
                     std::uint64_t seed, std::size_t cases) {
    try {
        const check_report rep = run_check_suite(suite, seed, cases);
        out << rep.suite << ": " << (rep.passed() ? "pass" : "FAIL") << " ("
            << rep.cases - rep.failures << "/" << rep.cases << " cases, seed "
            << rep.seed << ")\n";
        if (!rep.passed())
            out << "first counterexample: " << rep.first_counterexample << "\n";
        return rep.passed() ? 0 : 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

/// `egf <config.json>`: print the generating-function image of a series,
/// coefficient n divided by n!.
inline int run_egf(std::ostream& out, std::ostream& err, const nlohmann::json& cfg) {
    try {
        if (!cfg.contains("ring")) throw config_error("field 'ring' is required");
        if (!cfg.contains("series")) throw config_error("field 'series' is required");
        const ring_descriptor rd = ring_from_json(cfg.at("ring"));
        if (!rd.q_algebra())
            throw capability_error(
                "the generating-function transport needs a ring containing the "
                "rationals; got " +
                rd.name());
        const std::size_t precision =
            cfg.contains("precision") ? cfg.at("precision").get<std::size_t>() : 10;
        rational_ring ring;
        series<rational_ring> f =
            cfg.at("series").is_string()
                ? named_series(ring, cfg.at("series").get<std::string>(), precision)
                : series_from_json(ring, cfg.at("series"));
        write_bfile(out, to_egf(f));
        return 0;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace hurwitz
