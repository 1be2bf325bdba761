#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "hurwitz/hurwitz.hpp"
#include "hurwitz/jobs.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for Hurwitz series: sequence generation, "
                 "differential-equation solving and identity checking"};
    app.require_subcommand(1);

    std::string seq_name;
    std::size_t seq_precision = 10;
    std::string ring_arg = "integers";
    auto* seq = app.add_subcommand("seq", "print a named sequence in b-file format");
    seq->add_option("name", seq_name, "sequence name (e.g. exp-sin, sin, one-bar-inv)")
        ->required();
    seq->add_option("precision", seq_precision, "number of terms")->required();
    seq->add_option("--ring", ring_arg, "integers, rationals or mod-<m>");

    std::string solve_path;
    auto* solve = app.add_subcommand(
        "solve", "solve a monic linear equation described by a JSON config");
    solve->add_option("config", solve_path, "path to the JSON config")->required();

    std::string suite;
    std::uint64_t seed = hurwitz::default_seed();
    std::size_t cases = 200;
    auto* check =
        app.add_subcommand("check", "run a randomized identity suite deterministically");
    std::string known;
    for (const auto& n : hurwitz::check_suite_names()) known += n + " ";
    check->add_option("suite", suite, "one of: " + known)->required();
    check->add_option("--seed", seed, "RNG seed (default: HURWITZ_SEED or built-in)");
    check->add_option("--cases", cases, "number of randomized cases");

    std::string egf_path;
    auto* egf = app.add_subcommand(
        "egf", "print the generating-function image of a configured series");
    egf->add_option("config", egf_path, "path to the JSON config")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (seq->parsed())
            return hurwitz::run_seq(std::cout, std::cerr, seq_name, seq_precision,
                                    hurwitz::parse_ring_argument(ring_arg));
        if (solve->parsed())
            return hurwitz::run_solve(std::cout, std::cerr,
                                      hurwitz::load_config(solve_path));
        if (check->parsed())
            return hurwitz::run_check(std::cout, std::cerr, suite, seed, cases);
        if (egf->parsed())
            return hurwitz::run_egf(std::cout, std::cerr,
                                    hurwitz::load_config(egf_path));
    } catch (const hurwitz::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
