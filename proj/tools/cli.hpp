#pragma once

// Command-line front end. run() is the whole program minus process setup, so
// tests can drive it with argument vectors and string streams.
//
// Exit codes: 0 success, 1 verification failure or disagreement, 2 usage error.

#include <cycprod/cycprod.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace cycprod::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommandConfig {
    std::optional<int> n, k, r, t;
    std::string svector;
    std::string method;
    bool check = false;
    std::uint64_t samples = 100000;
    std::optional<std::uint64_t> seed;
    unsigned shards = kDefaultMonteCarloShards;
    unsigned workers = 1;
    std::optional<int> n_max;
    int k_max = 5;
    std::string suite;
    std::string format = "text";
    std::string output;
    std::optional<unsigned> decimal;
};

namespace detail {

inline std::string render(const Rational& q, const CommandConfig& cfg) {
    return cfg.decimal ? q.decimal(*cfg.decimal) : q.str();
}

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

inline void require_k_range(const CommandConfig& cfg) {
    if (!cfg.n || !cfg.k) throw UsageError("--n and --k are required");
    if (*cfg.k < 1 || *cfg.n < *cfg.k) throw UsageError("requires 1 <= k <= n");
}

inline std::vector<int> parse_svector(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(part, &used);
            if (used != part.size() || v < 1) throw UsageError("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("--svector must be a comma-separated list of positive integers");
        }
    }
    if (out.empty()) throw UsageError("--svector must not be empty");
    return out;
}

inline Rational exact_route(const std::string& method, int n, int k) {
    if (method == "closed") return coalescence_closed(n, k);
    if (method == "sum") return coalescence_sum(n, k);
    if (method == "bona-pittel") return bona_pittel(n, k);
    if (method == "brute") return brute_force_coalescence(n, k).probability;
    throw UsageError("unknown method " + method);
}

// --- subcommands ----------------------------------------------------------

inline int cmd_prob(const CommandConfig& cfg, std::ostream& out) {
    require_k_range(cfg);
    const int n = *cfg.n, k = *cfg.k;
    const bool as_json = cfg.format == "json";
    if (cfg.method == "brute" && n > kMaxOracleLength)
        throw UsageError("--method brute requires n <= " + std::to_string(kMaxOracleLength));

    json doc{{"n", n}, {"k", k}, {"method", cfg.method}};
    int code = kExitOk;

    if (cfg.method == "mc") {
        if (!cfg.seed) throw UsageError("--method mc requires an explicit --seed");
        if (cfg.samples < 1) throw UsageError("--samples must be positive");
        const MonteCarloResult mc = monte_carlo_coalescence(n, k, cfg.samples, *cfg.seed, cfg.shards, cfg.workers);
        doc.update(json(mc));
        if (!as_json)
            out << format_double(mc.estimate) << " +/- " << format_double(mc.std_error) << " (samples=" << mc.samples
                << ", seed=" << mc.seed << ")\n";
        if (cfg.check) {
            const Rational closed = coalescence_closed(n, k);
            const double deviation = std::abs(mc.estimate - closed.to_double());
            const bool ok = deviation <= 5 * mc.std_error || (mc.std_error == 0 && deviation < 1e-12);
            doc["check"] = json{{"closed", closed}, {"within_5_stderr", ok}};
            if (!as_json) out << "check closed " << render(closed, cfg) << (ok ? " (within 5 stderr)" : " (outside 5 stderr)") << "\n";
            if (!ok) code = kExitFailure;
        }
    } else {
        if (cfg.method == "brute") {
            const OracleResult r = brute_force_coalescence(n, k);
            doc.update(json(r));
            if (!as_json) out << render(r.probability, cfg) << "\n";
        } else {
            const Rational p = exact_route(cfg.method, n, k);
            doc["probability"] = p;
            if (!as_json) out << render(p, cfg) << "\n";
        }
        if (cfg.check) {
            std::vector<std::string> routes{"closed", "sum", "bona-pittel"};
            if (n <= kMaxOracleLength) routes.push_back("brute");
            json checks = json::object();
            const Rational reference = coalescence_closed(n, k);
            bool agree = true;
            for (const auto& route : routes) {
                const Rational v = exact_route(route, n, k);
                agree = agree && v == reference;
                checks[route] = v;
                if (!as_json) out << "check " << route << " " << render(v, cfg) << "\n";
            }
            doc["check"] = checks;
            doc["agree"] = agree;
            if (!as_json) out << (agree ? "all routes agree" : "routes DISAGREE") << "\n";
            if (!agree) code = kExitFailure;
        }
    }
    if (cfg.decimal && cfg.method != "mc" && doc.contains("probability"))
        doc["decimal"] = Rational::parse(doc["probability"].get<std::string>()).decimal(*cfg.decimal);
    if (as_json) out << doc.dump(2) << "\n";
    return code;
}

inline int cmd_table(const CommandConfig& cfg, std::ostream& out) {
    if (cfg.k_max < 1) throw UsageError("--k-max must be positive");
    TableFormat format = TableFormat::markdown;
    if (cfg.format == "csv") format = TableFormat::csv;
    else if (cfg.format == "json") format = TableFormat::json;
    else if (cfg.format != "markdown" && cfg.format != "text") throw UsageError("--format must be csv, json or markdown");
    const std::string text = render_table(cfg.k_max, format);
    if (cfg.output.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(cfg.output);
    if (!file) throw UsageError("cannot open " + cfg.output + " for writing");
    file << text;
    return kExitOk;
}

inline int cmd_count(const CommandConfig& cfg, std::ostream& out) {
    BigInt count;
    json doc;
    const bool has_svector = !cfg.svector.empty();
    const bool subset_shape = cfg.k || cfg.t;
    if (has_svector) {
        if (cfg.r || subset_shape) throw UsageError("--svector cannot be combined with --r, --k or --t");
        const std::vector<int> s = parse_svector(cfg.svector);
        long long total = 0;
        for (int v : s) total += v;
        if (cfg.n && *cfg.n != total) throw UsageError("--n must equal the sum of --svector");
        count = count_seq_colored(s);
        doc = json{{"n", total}, {"svector", s}};
    } else {
        if (!cfg.n) throw UsageError("--n is required");
        if (!cfg.r) throw UsageError("one of --r, --svector, or --r --k --t is required");
        const int n = *cfg.n, r = *cfg.r;
        if (r < 1 || r > n) throw UsageError("requires 1 <= r <= n");
        if (subset_shape) {
            if (!cfg.k || !cfg.t) throw UsageError("--k and --t must be given together with --r");
            const int k = *cfg.k, t = *cfg.t;
            if (k < 1 || k > n || t < 1) throw UsageError("requires 1 <= k <= n and t >= 1");
            count = count_colored_subsets(n, r, k, t);
            doc = json{{"n", n}, {"r", r}, {"k", k}, {"t", t}};
        } else {
            count = count_colored(n, r);
            doc = json{{"n", n}, {"r", r}};
        }
    }
    if (cfg.format == "json") {
        doc["count"] = count.str();
        out << doc.dump(2) << "\n";
    } else {
        out << count.str() << "\n";
    }
    return kExitOk;
}

inline int cmd_dist(const CommandConfig& cfg, std::ostream& out) {
    if (!cfg.n || *cfg.n < 1) throw UsageError("--n must be a positive integer");
    const int n = *cfg.n;
    std::map<int, Rational> dist;
    if (cfg.method == "formula") {
        dist = kwak_lee_cycle_distribution(n);
    } else {
        if (n > kMaxOracleLength) throw UsageError("--method brute requires n <= " + std::to_string(kMaxOracleLength));
        dist = brute_force_cycle_dist(n);
    }
    if (cfg.format == "json") {
        out << json{{"n", n}, {"method", cfg.method}, {"distribution", distribution_json(dist)}}.dump(2) << "\n";
    } else {
        for (const auto& [nu, p] : dist) out << nu << " " << render(p, cfg) << "\n";
    }
    return kExitOk;
}

inline std::vector<IdentityReport> run_suite(const std::string& suite, std::optional<int> n_max, unsigned workers) {
    std::vector<IdentityReport> reports;
    auto append = [&](std::vector<IdentityReport> more) {
        reports.insert(reports.end(), more.begin(), more.end());
    };
    if (suite == "bijections" || suite == "all") {
        const int n = n_max.value_or(6);
        if (n < 1 || n > kMaxColoredCycleLength)
            throw UsageError("bijections suite requires 1 <= --n-max <= " + std::to_string(kMaxColoredCycleLength));
        append(verify_colored_cycle_bijection(n));
        append(verify_subset_bijections(std::min(n, kMaxColoredSubsetLength)));
    }
    if (suite == "identities" || suite == "all") append(verify_all_identities());
    if (suite == "oracle" || suite == "all") {
        const int n = suite == "all" ? std::min(n_max.value_or(9), 9) : n_max.value_or(9);
        if (n < 1 || n > kMaxOracleLength)
            throw UsageError("oracle suite requires 1 <= --n-max <= " + std::to_string(kMaxOracleLength));
        append(verify_oracle(n, workers));
    }
    return reports;
}

inline int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
    const std::vector<IdentityReport> reports = run_suite(cfg.suite, cfg.n_max, cfg.workers);
    bool passed = true;
    for (const auto& r : reports) passed = passed && r.passed();
    if (cfg.format == "json") {
        out << json{{"suite", cfg.suite}, {"passed", passed}, {"reports", reports}}.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            out << (r.passed() ? "PASS " : "FAIL ") << r.name << " [" << r.grid << "] checked " << r.points_checked;
            if (!r.passed()) {
                const auto& c = *r.first_counterexample;
                out << ", failed " << r.points_failed << "; first counterexample " << c.point << ": " << c.lhs.str()
                    << " != " << c.rhs.str();
            }
            out << "\n";
        }
        out << (passed ? "all checks passed" : "verification FAILED") << "\n";
    }
    return passed ? kExitOk : kExitFailure;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cycle statistics of products of two random n-cycles, computed exactly", "cycprod"};
    app.require_subcommand(1);
    CommandConfig cfg;

    auto* prob = app.add_subcommand("prob", "Coalescence probability that 1..k share a cycle");
    prob->add_option("--n", cfg.n, "cycle length")->required();
    prob->add_option("--k", cfg.k, "subset size")->required();
    cfg.method = "closed";
    prob->add_option("--method", cfg.method, "closed, sum, bona-pittel, brute or mc")
        ->check(CLI::IsMember({"closed", "sum", "bona-pittel", "brute", "mc"}));
    prob->add_flag("--check", cfg.check, "cross-check against every applicable route");
    prob->add_option("--samples", cfg.samples, "Monte-Carlo sample count");
    prob->add_option("--seed", cfg.seed, "Monte-Carlo master seed (required for mc)");
    prob->add_option("--shards", cfg.shards, "Monte-Carlo seed streams")->check(CLI::PositiveNumber);
    prob->add_option("--workers", cfg.workers, "threads")->check(CLI::PositiveNumber);
    prob->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
    prob->add_option("--decimal", cfg.decimal, "also render with this many decimal digits");

    auto* table = app.add_subcommand("table", "Partial-fraction rows of the coalescence probability");
    table->add_option("--k-max", cfg.k_max, "largest k")->check(CLI::PositiveNumber);
    auto* table_format = table->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json", "markdown"}));
    table->add_option("--output", cfg.output, "write to a file instead of stdout");

    auto* count = app.add_subcommand("count", "Count colored cycles or colored subsets");
    count->add_option("--n", cfg.n);
    count->add_option("--r", cfg.r);
    count->add_option("--k", cfg.k);
    count->add_option("--t", cfg.t);
    count->add_option("--svector", cfg.svector, "comma-separated color multiplicities");
    count->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    auto* dist = app.add_subcommand("dist", "Distribution of the number of cycles of the product");
    dist->add_option("--n", cfg.n)->required();
    auto* dist_method = dist->add_option("--method", cfg.method)->check(CLI::IsMember({"formula", "brute"}));
    dist->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
    dist->add_option("--decimal", cfg.decimal);

    auto* verify = app.add_subcommand("verify", "Run exhaustive verification suites");
    verify->add_option("--suite", cfg.suite)->required()->check(
        CLI::IsMember({"bijections", "identities", "oracle", "all"}));
    verify->add_option("--n-max", cfg.n_max);
    verify->add_option("--workers", cfg.workers)->check(CLI::PositiveNumber);
    verify->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (*prob) return detail::cmd_prob(cfg, out);
        if (*table) {
            if (table_format->count() == 0) cfg.format = "markdown";
            return detail::cmd_table(cfg, out);
        }
        if (*count) return detail::cmd_count(cfg, out);
        if (*dist) {
            if (dist_method->count() == 0) cfg.method = "formula";
            return detail::cmd_dist(cfg, out);
        }
        if (*verify) return detail::cmd_verify(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cycprod::cli
