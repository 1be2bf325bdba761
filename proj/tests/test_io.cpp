#include "helpers.hpp"

#include <cstdlib>
#include <sstream>

#include "hurwitz/jobs.hpp"

using namespace hurwitz;

namespace {
integer_ring Z;
rational_ring Q;
} // namespace

TEST_CASE("ring descriptors round-trip through JSON") {
    for (const char* txt : {R"("integers")", R"("rationals")", R"({"mod": 7})",
                            R"({"mod": "101"})"}) {
        const auto j = nlohmann::json::parse(txt);
        const auto d = ring_from_json(j);
        CHECK(ring_from_json(ring_to_json(d)) == d);
    }
    CHECK(ring_from_json(nlohmann::json::parse(R"({"mod": 7})")).modulus == 7);
    CHECK_THROWS_AS(ring_from_json(nlohmann::json::parse(R"("gaussian")")),
                    config_error);
    CHECK_THROWS_AS(ring_from_json(nlohmann::json::parse(R"({"mod": 1})")),
                    config_error);
    CHECK_THROWS_AS(ring_from_json(nlohmann::json::parse("42")), config_error);
}

TEST_CASE("series round-trip through JSON in every ring") {
    std::mt19937_64 g(70);
    for (int i = 0; i < 50; ++i) {
        const auto f = checks::sample_series(Q, g, 1 + g() % 8);
        CHECK(equal_at_common(series_from_json(Q, series_to_json(f)), f));

        modular_ring m9{9};
        const auto h = checks::sample_series(m9, g, 1 + g() % 8);
        CHECK(equal_at_common(series_from_json(m9, series_to_json(h)), h));
    }

    const auto j = series_to_json(series<integer_ring>::from_integers(Z, {1, -2, 3}));
    CHECK(j.at("precision") == 3);
    CHECK(j.at("coeffs")[1] == "-2");

    CHECK_THROWS_AS(series_from_json(Z, nlohmann::json::parse(R"({"x": 1})")),
                    config_error);
    CHECK_THROWS_AS(
        series_from_json(Z, nlohmann::json::parse(
                                R"({"coeffs": ["1"], "precision": 5})")),
        config_error);
    // plain JSON integers are accepted as coefficients
    const auto k = series_from_json(
        Z, nlohmann::json::parse(R"({"coeffs": [1, -2, 3]})"));
    CHECK(equal_at_common(k, series<integer_ring>::from_integers(Z, {1, -2, 3})));
}

TEST_CASE("tuple JSON validates arity") {
    CHECK_THROWS_AS(
        tuple_from_json(Z, nlohmann::json::parse(R"({"components": []})")),
        config_error);
    CHECK_THROWS_AS(
        tuple_from_json(
            Z, nlohmann::json::parse(
                   R"({"arity": 2, "components": [{"coeffs": ["1"]}]})")),
        config_error);
}

TEST_CASE("egf series carry a kind tag") {
    const auto e = to_egf(series<rational_ring>::repeated(Q, Q.one(), 5));
    const auto j = egf_to_json(e);
    CHECK(j.at("kind") == "egf");
    CHECK(j.at("coeffs")[4] == "1/24");
}

TEST_CASE("named series cover the stock sequences") {
    CHECK(equal_at_common(named_series(Z, "x", 4), basis(Z, 1, 4)));
    CHECK(equal_at_common(named_series(Z, "one-bar", 3),
                          series<integer_ring>::repeated(Z, Z.one(), 3)));
    CHECK(equal_at_common(named_series(Z, "sin", 6), sin_series(Z, 6)));
    CHECK(equal_at_common(named_series(Z, "cos", 6), cos_series(Z, 6)));
    CHECK(ord(named_series(Z, "zero", 4)).is_infinite());
    CHECK_THROWS_AS(named_series(Z, "tangent", 4), config_error);
}

TEST_CASE("equations parse from JSON with named coefficients") {
    const auto j = nlohmann::json::parse(
        R"({"order": 2, "coeffs": ["sin", {"coeffs": [0, 0, 0, 0]}]})");
    const auto ode = ode_from_json(Z, j, 4);
    CHECK(ode.order() == 2);
    CHECK(equal_at_common(ode.coefficient(0), sin_series(Z, 4)));
    CHECK(ode_to_json(ode).at("order") == 2);

    CHECK_THROWS_AS(
        ode_from_json(Z, nlohmann::json::parse(R"({"order": 3, "coeffs": ["x"]})"),
                      4),
        config_error);
}

TEST_CASE("b-file output is one indexed coefficient per line") {
    std::ostringstream os;
    write_bfile(os, series<integer_ring>::from_integers(Z, {3, 0, -7}));
    CHECK(os.str() == "0 3\n1 0\n2 -7\n");
}

TEST_CASE("seq job prints the published sequence") {
    std::ostringstream out, err;
    const int rc = run_seq(out, err, "exp-sin", 10, {ring_kind::integers, 0});
    CHECK(rc == 0);
    CHECK(out.str() ==
          "0 1\n1 1\n2 1\n3 0\n4 -3\n5 -8\n6 -3\n7 56\n8 217\n9 64\n");

    std::ostringstream out2, err2;
    CHECK(run_seq(out2, err2, "sin", 6, {ring_kind::integers, 0}) == 0);
    CHECK(out2.str() == "0 0\n1 1\n2 0\n3 -1\n4 0\n5 1\n");

    std::ostringstream out3, err3;
    CHECK(run_seq(out3, err3, "one-bar-inv", 5, {ring_kind::integers, 0}) == 0);
    CHECK(out3.str() == "0 1\n1 -1\n2 1\n3 -1\n4 1\n");

    std::ostringstream out4, err4;
    CHECK(run_seq(out4, err4, "no-such", 5, {ring_kind::integers, 0}) == 2);
    CHECK(err4.str().find("unknown series name") != std::string::npos);

    // ring-capability violations surface as errors, not crashes
    std::ostringstream out5, err5;
    CHECK(run_seq(out5, err5, "one-bar-inv", 5, {ring_kind::mod_m, 6}) == 0);
    std::ostringstream out6, err6;
    CHECK(run_seq(out6, err6, "exp-sin", 5, {ring_kind::mod_m, 6}) == 0);
}

TEST_CASE("solve job prints the solution and verifies the residual") {
    const auto cfg = nlohmann::json::parse(R"({
        "ring": "rationals",
        "precision": 10,
        "ode": {"order": 2, "coeffs": ["sin",
            {"coeffs": [-1, 0, 1, 0, -1, 0, 1, 0, -1, 0]}]},
        "initials": [0, 1]
    })");
    std::ostringstream out, err;
    const int rc = run_solve(out, err, cfg);
    CHECK(rc == 0);
    CHECK(out.str().find("0 0\n1 1\n2 1\n3 1\n4 -2\n5 -8\n6 -13\n7 32\n8 228\n"
                         "9 424\n") == 0);
    CHECK(err.str().find("residual verified zero through index 9") !=
          std::string::npos);

    // zero initial data gives the all-zero b-file
    auto zerocfg = cfg;
    zerocfg["initials"] = {0, 0};
    std::ostringstream zout, zerr;
    CHECK(run_solve(zout, zerr, zerocfg) == 0);
    CHECK(zout.str().find("0 0\n1 0\n2 0\n") == 0);

    // alternating pattern for y'' + y = 0
    const auto circ = nlohmann::json::parse(R"({
        "ring": "integers",
        "precision": 8,
        "ode": {"order": 2, "coeffs": ["one", "zero"]},
        "initials": [0, 1]
    })");
    std::ostringstream cout2, cerr2;
    CHECK(run_solve(cout2, cerr2, circ) == 0);
    CHECK(cout2.str().find("0 0\n1 1\n2 0\n3 -1\n4 0\n5 1\n") == 0);

    // field diagnostics
    auto bad = cfg;
    bad["initials"] = {1};
    std::ostringstream bout, berr;
    CHECK(run_solve(bout, berr, bad) == 2);
    CHECK(berr.str().find("initials") != std::string::npos);

    auto conflict = cfg;
    conflict["ode"]["ring"] = "integers";
    std::ostringstream vout, verr;
    CHECK(run_solve(vout, verr, conflict) == 2);
    CHECK(verr.str().find("disagree") != std::string::npos);
}

TEST_CASE("check job is deterministic for a fixed seed") {
    std::ostringstream a, b, err;
    CHECK(run_check(a, err, "rota-baxter", 99, 40) == 0);
    CHECK(run_check(b, err, "rota-baxter", 99, 40) == 0);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("pass") != std::string::npos);

    std::ostringstream c, cerr;
    CHECK(run_check(c, cerr, "does-not-exist", 1, 1) == 2);
    CHECK(cerr.str().find("unknown check suite") != std::string::npos);
}

TEST_CASE("egf job divides by factorials and enforces capability") {
    const auto cfg = nlohmann::json::parse(
        R"({"ring": "rationals", "series": "one-bar", "precision": 6})");
    std::ostringstream out, err;
    CHECK(run_egf(out, err, cfg) == 0);
    CHECK(out.str() == "0 1\n1 1\n2 1/2\n3 1/6\n4 1/24\n5 1/120\n");

    auto bad = cfg;
    bad["ring"] = "integers";
    std::ostringstream bout, berr;
    CHECK(run_egf(bout, berr, bad) == 2);
    CHECK(berr.str().find("rationals") != std::string::npos);
}

TEST_CASE("seed resolution prefers the environment variable") {
    ::setenv("HURWITZ_SEED", "31415", 1);
    CHECK(default_seed() == 31415);
    ::unsetenv("HURWITZ_SEED");
    CHECK(default_seed() == 20240001);
}

TEST_CASE("ring argument parsing") {
    CHECK(parse_ring_argument("integers").kind == ring_kind::integers);
    CHECK(parse_ring_argument("rationals").kind == ring_kind::rationals);
    CHECK(parse_ring_argument("mod-12").modulus == 12);
    CHECK_THROWS_AS(parse_ring_argument("mod-1"), config_error);
    CHECK_THROWS_AS(parse_ring_argument("reals"), config_error);
}
