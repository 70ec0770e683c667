#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "toppling/chipfire.hpp"
#include "toppling/fractional.hpp"
#include "toppling/game.hpp"
#include "toppling/graph.hpp"
#include "toppling/ode.hpp"
#include "toppling/propcheck.hpp"
#include "toppling/rng.hpp"

namespace {

using namespace toppling;

int log_level() {
    static const int level = [] {
        const char* env = std::getenv("TOPPLING_LOG");
        if (!env) return 0;
        const std::string s(env);
        if (s == "trace") return 2;
        if (s == "info") return 1;
        return 0;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[info] " << msg << '\n';
}

void set_workers(int workers) {
#ifdef _OPENMP
    if (workers > 0) omp_set_num_threads(workers);
#else
    (void)workers;
#endif
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

Player parse_player(const std::string& name) {
    if (name == "max") return Player::Max;
    if (name == "min") return Player::Min;
    throw std::invalid_argument("unknown player: " + name);
}

void write_record_csv(std::ostream& out, const GameRecord& rec) {
    out << "turn,player,target,fired,total_chips,in_chips,out_chips\n";
    for (const auto& t : rec.trace)
        out << t.turn << ',' << player_name(t.player) << ',' << t.target << ',' << t.fired
            << ',' << t.total_chips << ',' << t.in_chips << ',' << t.out_chips << '\n';
    const auto& last = rec.trace.empty() ? TurnTrace{} : rec.trace.back();
    out << "summary," << rec.turns << ',' << rec.rounds << ",," << last.total_chips << ','
        << last.in_chips << ',' << last.out_chips << '\n';
}

int cmd_bounds(double tol, const std::string& out_path) {
    const BoundResult res = compute_constants(tol);
    nlohmann::json j{{"x_plus", res.x_plus},     {"x_bar", res.x_bar},
                     {"x_minus", res.x_minus},   {"lower_coeff", res.lower_coeff},
                     {"upper_coeff", res.upper_coeff}, {"tol", res.tol}};
    const std::string text = j.dump();
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        out << text << '\n';
    }
    std::cout << text << '\n';
    return 0;
}

int cmd_play(int n, const std::string& smin, const std::string& smax,
             const std::string& first, const std::string& p_text,
             const std::string& out_path) {
    const StrategyKind min_kind = parse_strategy(smin);
    const StrategyKind max_kind = parse_strategy(smax);
    const Player start = parse_player(first);
    const bool keep_trace = !out_path.empty();
    GameRecord rec;
    if (p_text.empty() || p_text == "1") {
        rec = play_grid_game(n, min_kind, max_kind, start, keep_trace);
    } else {
        rec = frac_grid_play(n, Rational::parse(p_text), min_kind, max_kind, start, keep_trace);
    }
    if (keep_trace) {
        auto out = open_out(out_path);
        write_record_csv(out, rec);
    }
    const double per_n2 = static_cast<double>(rec.rounds) / (static_cast<double>(n) * n);
    std::cout << "n=" << n << " turns=" << rec.turns << " rounds=" << rec.rounds
              << " rounds_per_n2=" << per_n2 << " min=" << smin << " max=" << smax
              << " first=" << first << '\n';
    return 0;
}

int cmd_exact(int complete_n, const std::string& graph_file, const std::string& first,
              const std::string& p_text) {
    Graph g;
    if (complete_n > 0) {
        g = complete_graph(complete_n);
    } else if (!graph_file.empty()) {
        std::ifstream in(graph_file);
        if (!in) throw std::runtime_error("cannot open graph file: " + graph_file);
        g = read_edge_list(in);
    } else {
        throw std::invalid_argument("exact: need --complete or --graph-file");
    }
    const Player start = parse_player(first);
    std::int64_t value;
    if (p_text.empty() || p_text == "1") {
        value = minimax_toppling(g, start);
    } else {
        value = frac_minimax(g, Rational::parse(p_text), start);
    }
    std::cout << value << '\n';
    return 0;
}

int cmd_gnp(int n, double p, std::uint64_t seed, int trials, int depth, int sample,
            int workers, const std::string& out_path) {
    set_workers(workers);
    struct Row {
        std::uint64_t seed;
        std::int64_t edges;
        int deg_min, deg_max;
        double deg_mean;
        int flagged;
    };
    std::vector<Row> rows(trials);
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(t));
        const Graph g = sample_gnp(n, p, s);
        const ExpansionReport rep = expansion_report(g, p, depth, sample, s + 1);
        int flagged = 0;
        for (const auto& vs : rep.samples) flagged += vs.flagged ? 1 : 0;
        rows[t] = {s, g.edge_count(), rep.deg_min, rep.deg_max, rep.deg_mean, flagged};
    }
    std::ostringstream csv;
    csv << "trial,seed,n,p,edges,deg_min,deg_max,deg_mean,flagged\n";
    for (int t = 0; t < trials; ++t)
        csv << t << ',' << rows[t].seed << ',' << n << ',' << p << ',' << rows[t].edges << ','
            << rows[t].deg_min << ',' << rows[t].deg_max << ',' << rows[t].deg_mean << ','
            << rows[t].flagged << '\n';
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        out << csv.str();
    }
    std::cout << csv.str();
    return 0;
}

int cmd_couple(int n, const std::string& p_text, std::uint64_t seed, int trials,
               const std::string& smin, const std::string& smax, const std::string& first,
               int workers, const std::string& out_path) {
    set_workers(workers);
    const Rational p = Rational::parse(p_text);
    const StrategyKind min_kind = parse_strategy(smin);
    const StrategyKind max_kind = parse_strategy(smax);
    const Player start = parse_player(first);
    struct Row {
        std::uint64_t seed;
        CoupleResult res;
    };
    std::vector<Row> rows(trials);
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(t));
        const Graph g = sample_gnp(n, p.value(), s);
        rows[t] = {s, coupled_replay(g, p, min_kind, max_kind, start)};
    }
    std::ostringstream csv;
    csv << "seed,n,p_num,p_den,len_frac_kn,len_g,ratio\n";
    for (int t = 0; t < trials; ++t) {
        const auto& r = rows[t];
        const double ratio = r.res.len_frac_kn > 0
                                 ? static_cast<double>(r.res.len_g) / r.res.len_frac_kn
                                 : 0.0;
        csv << r.seed << ',' << n << ',' << p.num << ',' << p.den << ',' << r.res.len_frac_kn
            << ',' << r.res.len_g << ',' << ratio << '\n';
    }
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        out << csv.str();
    }
    std::cout << csv.str();
    return 0;
}

int cmd_fuzz(std::uint64_t seed) {
    const SuiteResult suites[] = {
        check_abelian(derive_seed(seed, 1)),
        check_thresholds(derive_seed(seed, 2)),
        check_oracle_complete(derive_seed(seed, 3)),
        check_monotonicity(derive_seed(seed, 4)),
        check_grid_fire_inchips(derive_seed(seed, 5)),
        check_frac_abelian(derive_seed(seed, 6)),
    };
    bool ok = true;
    for (const auto& s : suites) {
        std::cout << s.name << ": " << s.cases << " cases, " << s.failures
                  << " failures -> " << (s.passed() ? "pass" : "FAIL") << '\n';
        ok = ok && s.passed();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toppling-game laboratory"};
    app.require_subcommand(1);

    double tol = 1e-9;
    int n = 100;
    std::uint64_t seed = 1;
    int trials = 1, depth = 2, sample = 10, workers = 0, complete_n = 0;
    double p_prob = 0.5;
    std::string p_text, out_path, graph_file;
    std::string smin = "triangle", smax = "row", first = "min";

    auto* bounds = app.add_subcommand("bounds", "differential-equation constants");
    bounds->add_option("--tol", tol, "integration tolerance");
    bounds->add_option("--out", out_path, "JSON output file");

    auto* play = app.add_subcommand("play", "simulate a K_n game");
    play->add_option("--n", n, "number of vertices")->required();
    play->add_option("--min-strategy", smin, "row|triangle|square");
    play->add_option("--max-strategy", smax, "row|triangle|square");
    play->add_option("--first", first, "min|max");
    play->add_option("--p", p_text, "rational p for the fractional game, e.g. 1/2");
    play->add_option("--out", out_path, "trace CSV output file");

    auto* exact = app.add_subcommand("exact", "exact game value by minimax");
    exact->add_option("--complete", complete_n, "use K_n");
    exact->add_option("--graph-file", graph_file, "edge-list file");
    exact->add_option("--first", first, "min|max")->default_val("max");
    exact->add_option("--p", p_text, "rational p for the fractional game");

    auto* gnp = app.add_subcommand("gnp", "G(n,p) degree/expansion diagnostics");
    gnp->add_option("--n", n, "number of vertices")->required();
    gnp->add_option("--p", p_prob, "edge probability")->required();
    gnp->add_option("--seed", seed, "base seed");
    gnp->add_option("--trials", trials, "number of samples");
    gnp->add_option("--depth", depth, "BFS shell depth");
    gnp->add_option("--sample", sample, "vertices sampled per graph");
    gnp->add_option("--workers", workers, "parallel workers (0 = auto)");
    gnp->add_option("--out", out_path, "CSV output file");

    auto* couple = app.add_subcommand("couple", "coupled fractional-K_n / G(n,p) replay");
    couple->add_option("--n", n, "number of vertices")->required();
    couple->add_option("--p", p_text, "rational p, e.g. 1/2")->required();
    couple->add_option("--seed", seed, "base seed");
    couple->add_option("--trials", trials, "number of replays");
    couple->add_option("--min-strategy", smin, "row|triangle");
    couple->add_option("--max-strategy", smax, "row|triangle");
    couple->add_option("--first", first, "min|max");
    couple->add_option("--workers", workers, "parallel workers (0 = auto)");
    couple->add_option("--out", out_path, "CSV output file");

    auto* fuzz = app.add_subcommand("fuzz", "run the property suites");
    fuzz->add_option("--seed", seed, "base seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bounds->parsed()) return cmd_bounds(tol, out_path);
        if (play->parsed()) return cmd_play(n, smin, smax, first, p_text, out_path);
        if (exact->parsed()) return cmd_exact(complete_n, graph_file, first, p_text);
        if (gnp->parsed())
            return cmd_gnp(n, p_prob, seed, trials, depth, sample, workers, out_path);
        if (couple->parsed())
            return cmd_couple(n, p_text, seed, trials, smin, smax, first, workers, out_path);
        if (fuzz->parsed()) {
            log_info("running property suites");
            return cmd_fuzz(seed);
        }
    } catch (const std::exception& e) {
        std::cerr << "toppling: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
