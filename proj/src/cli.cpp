#include "cpair/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <vector>

#include "cpair/cost_model.hpp"
#include "cpair/experiments.hpp"
#include "cpair/point_io.hpp"

namespace cpair::cli {

namespace {

std::size_t to_count(std::int64_t v, const char* what)
{
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be non-negative");
    return static_cast<std::size_t>(v);
}

// Negative partition values are reported like any other a < 2.
std::size_t to_partition(std::int64_t v)
{
    if (v < 2) {
        throw InvalidPartition("partition parameter must be at least 2, got " + std::to_string(v));
    }
    return static_cast<std::size_t>(v);
}

void check_a_range(std::size_t n, std::int64_t a_lo, std::int64_t a_hi)
{
    if (n < 2) throw InsufficientPoints(n);
    const auto lo = to_partition(a_lo);
    const auto hi = to_partition(a_hi);
    if (lo > hi || hi > n) {
        throw InvalidPartition("range [" + std::to_string(a_lo) + ", " + std::to_string(a_hi) +
                               "] not within [2, " + std::to_string(n) + "]");
    }
}

PointSet read_point_file(const std::string& path)
{
    if (path == "-") return parse_points(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_points(in);
}

}  // namespace

void cmd_solve(const PointSet& set, Algorithm algorithm, std::optional<std::int64_t> a,
               std::ostream& out)
{
    if ((algorithm == Algorithm::kway) != a.has_value()) {
        throw std::invalid_argument("--a is required with --algo kway and not allowed otherwise");
    }
    const std::size_t parts = a ? to_partition(*a) : 0;
    OpCounter counter;
    const auto r = solve(set, algorithm, parts, counter);
    out << r.i << ' ' << r.j << ' ' << format_double(final_distance(r.dist_sq)) << ' '
        << r.dc_used << '\n';
}

void cmd_sweep(std::int64_t n, std::uint64_t seed, std::int64_t a_lo, std::int64_t a_hi,
               std::ostream& out)
{
    const auto count = to_count(n, "--n");
    check_a_range(count, a_lo, a_hi);
    const auto records =
        run_sweep(count, seed, static_cast<std::size_t>(a_lo), static_cast<std::size_t>(a_hi));
    out << "a,dc_count,distance\n";
    for (const auto& r : records) {
        out << r.a << ',' << r.dc_measured << ',' << format_double(r.dist) << '\n';
    }
}

void cmd_trials(std::int64_t n, std::int64_t trials, std::uint64_t seed, std::int64_t jobs,
                std::ostream& out)
{
    const auto count = to_count(n, "--n");
    if (count < 2) throw InsufficientPoints(count);
    if (trials < 1) throw std::invalid_argument("--trials must be at least 1");
    if (jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
    const auto hist = run_trials(count, static_cast<std::uint64_t>(trials), seed,
                                 static_cast<unsigned>(jobs));
    out << "a,wins\n";
    for (const auto& [a, w] : hist.wins) out << a << ',' << w << '\n';
}

void cmd_model(std::int64_t n, std::int64_t a_lo, std::int64_t a_hi, std::ostream& out)
{
    const auto count = to_count(n, "--n");
    check_a_range(count, a_lo, a_hi);
    out << "a,strip_cost,local_cost,total\n";
    for (auto a = static_cast<std::uint64_t>(a_lo); a <= static_cast<std::uint64_t>(a_hi); ++a) {
        const auto c = analytic_total_cost(count, a);
        out << a << ',' << format_double(c.strip_cost) << ',' << format_double(c.local_cost) << ','
            << format_double(c.total) << '\n';
    }
}

void cmd_gen(std::int64_t n, std::uint64_t seed, std::ostream& out)
{
    write_points(out, gen_uniform_points(to_count(n, "--n"), seed));
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Instrumented closest-pair solvers and partition-parameter experiments", "cpair"};
    app.require_subcommand(1);

    std::string input;
    std::string algo;
    std::optional<std::int64_t> a;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a point file and report i j distance dc");
    solve_cmd->add_option("--input", input, "Point file ('-' for stdin)")->required();
    solve_cmd->add_option("--algo", algo, "Solver")
        ->required()
        ->check(CLI::IsMember({"brute", "two", "kway"}));
    solve_cmd->add_option("--a", a, "Partition parameter (kway only)");

    std::int64_t n = 0;
    std::uint64_t seed = 0;
    std::int64_t a_lo = 0;
    std::int64_t a_hi = 0;
    std::int64_t trials = 0;
    std::int64_t jobs = 1;

    auto* sweep_cmd = app.add_subcommand("sweep", "DC count of kway for each a on one instance");
    sweep_cmd->add_option("--n", n, "Point count")->required();
    sweep_cmd->add_option("--seed", seed, "Instance seed")->required();
    sweep_cmd->add_option("--a-min", a_lo, "Smallest a")->required();
    sweep_cmd->add_option("--a-max", a_hi, "Largest a")->required();

    auto* trials_cmd = app.add_subcommand("trials", "Histogram of the optimal a over many instances");
    trials_cmd->add_option("--n", n, "Point count")->required();
    trials_cmd->add_option("--trials", trials, "Number of instances")->required();
    trials_cmd->add_option("--seed", seed, "Base seed")->required();
    trials_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

    auto* model_cmd = app.add_subcommand("model", "Analytic worst-case DC counts");
    model_cmd->add_option("--n", n, "Point count")->required();
    model_cmd->add_option("--a-min", a_lo, "Smallest a")->required();
    model_cmd->add_option("--a-max", a_hi, "Largest a")->required();

    auto* gen_cmd = app.add_subcommand("gen", "Write seeded uniform points");
    gen_cmd->add_option("--n", n, "Point count")->required();
    gen_cmd->add_option("--seed", seed, "Seed")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*solve_cmd) {
            static const std::map<std::string, Algorithm> algos{
                {"brute", Algorithm::brute}, {"two", Algorithm::two_way}, {"kway", Algorithm::kway}};
            cmd_solve(read_point_file(input), algos.at(algo), a, out);
        } else if (*sweep_cmd) {
            cmd_sweep(n, seed, a_lo, a_hi, out);
        } else if (*trials_cmd) {
            cmd_trials(n, trials, seed, jobs, out);
        } else if (*model_cmd) {
            cmd_model(n, a_lo, a_hi, out);
        } else if (*gen_cmd) {
            cmd_gen(n, seed, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitOk;
}

}  // namespace cpair::cli
