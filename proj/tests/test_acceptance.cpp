// End-to-end acceptance checks; each prints one "[check N] ... pass|fail"
// line so a log scan shows the verdicts at a glance.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

#include "toppling/chipfire.hpp"
#include "toppling/fractional.hpp"
#include "toppling/game.hpp"
#include "toppling/graph.hpp"
#include "toppling/ode.hpp"
#include "toppling/propcheck.hpp"
#include "toppling/rng.hpp"

using namespace toppling;

namespace {

void verdict(int id, const char* what, bool ok) {
    std::printf("[check %d] %s: %s\n", id, what, ok ? "pass" : "fail");
    std::fflush(stdout);
    CHECK_MESSAGE(ok, "check ", id, " (", what, ")");
}

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// All connected graphs on 2..4 vertices, by filtering edge subsets.
std::vector<Graph> connected_graphs_up_to_4() {
    std::vector<Graph> out;
    for (int n = 2; n <= 4; ++n) {
        std::vector<std::pair<int, int>> all_pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
        const int m = static_cast<int>(all_pairs.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) edges.push_back(all_pairs[i]);
            Graph g = from_edge_list(n, edges);
            if (g.components() == 1) out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("check 1: differential-equation constants") {
    const double t0 = now_seconds();
    const BoundResult res = compute_constants(1e-9);
    const double elapsed = now_seconds() - t0;
    bool ok = std::abs(res.x_bar - 0.204309) <= 5e-6;
    ok = ok && res.x_plus >= 0.31840 && res.x_plus <= 0.318576;
    ok = ok && res.x_minus >= 0.298200 && res.x_minus <= 0.29840;
    ok = ok && res.upper_coeff < 0.637152 && res.lower_coeff > 0.5964;
    ok = ok && elapsed < 5.0;
    std::printf("  x_plus=%.9f x_bar=%.9f x_minus=%.9f (%.2fs)\n", res.x_plus,
                res.x_bar, res.x_minus, elapsed);
    verdict(1, "constants within windows, under 5s", ok);
}

TEST_CASE("check 2: simulation converges to the constants") {
    const BoundResult res = compute_constants(1e-9);
    const int sizes[] = {250, 500, 1000, 2000};
    bool ok = true;
    double prev_err_tri = 1e9, prev_err_sq = 1e9;
    for (int n : sizes) {
        const double t0 = now_seconds();
        const GameRecord tri =
            play_grid_game(n, StrategyKind::Triangle, StrategyKind::Row, Player::Min);
        const GameRecord sq =
            play_grid_game(n, StrategyKind::Square, StrategyKind::Row, Player::Min);
        const double elapsed = now_seconds() - t0;
        const double n2 = static_cast<double>(n) * n;
        const double r_tri = static_cast<double>(tri.rounds) / n2;
        const double r_sq = static_cast<double>(sq.rounds) / n2;
        const double err_tri = std::abs(r_tri - res.x_plus);
        const double err_sq = std::abs(r_sq - res.x_minus);
        std::printf("  n=%d triangle=%.6f (err %.2e) square=%.6f (err %.2e) %.2fs\n",
                    n, r_tri, err_tri, r_sq, err_sq, elapsed);
        ok = ok && elapsed < 120.0;  // two games, 60s budget each
        ok = ok && err_tri < prev_err_tri && err_sq < prev_err_sq;
        if (n == 2000) {
            ok = ok && err_tri / res.x_plus < 0.03;
            ok = ok && err_sq / res.x_minus < 0.03;
        }
        prev_err_tri = err_tri;
        prev_err_sq = err_sq;
    }
    verdict(2, "rounds/n^2 within 3% at n=2000, error shrinking", ok);
}

TEST_CASE("check 3: order-independence fuzz") {
    const SuiteResult res = check_abelian(1001, 1000, 40);
    std::printf("  %lld cases, %lld failures\n", static_cast<long long>(res.cases),
                static_cast<long long>(res.failures));
    verdict(3, "1000 random policies agree with FIFO", res.passed());
}

TEST_CASE("check 4: volatility thresholds") {
    const SuiteResult res = check_thresholds(1002, 10000, 30);
    std::printf("  %lld cases, %lld failures\n", static_cast<long long>(res.cases),
                static_cast<long long>(res.failures));
    verdict(4, "|E| and 2|E|-|V|+1 laws over 10^4 configs", res.passed());
}

TEST_CASE("check 5: complete-graph oracle equivalence") {
    const SuiteResult res = check_oracle_complete(1003, 10000, 12);
    std::printf("  %lld cases, %lld failures\n", static_cast<long long>(res.cases),
                static_cast<long long>(res.failures));
    verdict(5, "sorted test vs engine on 10^4 K_n configs", res.passed());
}

TEST_CASE("check 6: exact game values") {
    const double t0 = now_seconds();
    bool ok = minimax_toppling(complete_graph(2), Player::Max) == 1;
    ok = ok && minimax_toppling(complete_graph(3), Player::Max) == 4;
    ok = ok && minimax_toppling(complete_graph(3), Player::Min) == 3;
    for (const Graph& g : connected_graphs_up_to_4()) {
        const std::int64_t vmax = minimax_toppling(g, Player::Max);
        const std::int64_t vmin = minimax_toppling(g, Player::Min);
        if (std::abs(vmax - vmin) > 1) {
            std::printf("  first-player gap > 1 on a %d-vertex graph (%lld vs %lld)\n",
                        g.n, static_cast<long long>(vmax), static_cast<long long>(vmin));
            ok = false;
        }
    }
    for (int n = 2; n <= 6; ++n) {
        const std::int64_t v = minimax_toppling(complete_graph(n), Player::Max);
        const std::int64_t edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
        std::printf("  t(K_%d) = %lld\n", n, static_cast<long long>(v));
        ok = ok && v >= edges && v <= 2 * edges - n + 1;
    }
    const double elapsed = now_seconds() - t0;
    ok = ok && elapsed < 30.0;
    verdict(6, "known values, first-player gap, K_n bounds, under 30s", ok);
}

TEST_CASE("check 7: fractional reduction and scaling") {
    const Graph k3 = complete_graph(3);
    bool ok = true;
    // p = 1 reduction, exhaustive on K3 with chips <= 3.
    for (std::int64_t a = 0; a <= 3 && ok; ++a)
        for (std::int64_t b = 0; b <= 3 && ok; ++b)
            for (std::int64_t c = 0; c <= 3 && ok; ++c) {
                const StabilizeOutcome o1 =
                    stabilize_or_detect(ChipConfig(k3, {a, b, c}));
                FracConfig fc(k3, Rational(1, 1));
                fc.units = {a, b, c};
                const StabilizeOutcome o2 = frac_stabilize_or_detect(fc);
                if (o1.tag != o2.tag ||
                    (!o1.is_volatile() && o1.chips != o2.chips))
                    ok = false;
            }
    // Fuzz elsewhere.
    ok = ok && check_frac_abelian(1004, 300, 20).passed();
    ok = ok && frac_minimax(k3, Rational(1, 2), Player::Max) == 2;
    // |t_p(G) - p t(G)| <= 3n over small connected graphs.
    const Rational ps[] = {Rational(1, 4), Rational(1, 3), Rational(1, 2),
                           Rational(2, 3), Rational(1, 1)};
    double max_gap = 0.0;
    for (const Graph& g : connected_graphs_up_to_4()) {
        const std::int64_t t_plain = minimax_toppling(g, Player::Max);
        for (const Rational& p : ps) {
            const std::int64_t t_p = frac_minimax(g, p, Player::Max);
            const double gap = std::abs(static_cast<double>(t_p) -
                                        p.value() * static_cast<double>(t_plain));
            max_gap = std::max(max_gap, gap / g.n);
            if (gap > 3.0 * g.n) ok = false;
        }
    }
    std::printf("  max |t_p - p t| / n observed: %.3f\n", max_gap);
    verdict(7, "p=1 reduction, t_1/2(K3)=2, |t_p - p t| <= 3n", ok);
}

TEST_CASE("check 8: firing preserves in-chips") {
    const SuiteResult res = check_grid_fire_inchips(1005, 10000);
    std::printf("  %lld cases, %lld failures\n", static_cast<long long>(res.cases),
                static_cast<long long>(res.failures));
    verdict(8, "in-chip count invariant over 10^4 grid firings", res.passed());
}

TEST_CASE("check 9: coupled-replay ratios") {
    const double t0 = now_seconds();
    auto ratios_at = [](int n) {
        std::vector<double> ratios;
        for (int trial = 0; trial < 10; ++trial) {
            const std::uint64_t seed = derive_seed(2026, static_cast<std::uint64_t>(trial));
            const Graph g = sample_gnp(n, 0.5, seed);
            const CoupleResult res = coupled_replay(g, Rational(1, 2),
                                                    StrategyKind::Triangle,
                                                    StrategyKind::Row, Player::Min);
            ratios.push_back(static_cast<double>(res.len_g) /
                             static_cast<double>(res.len_frac_kn));
        }
        std::sort(ratios.begin(), ratios.end());
        return ratios;
    };
    const std::vector<double> r200 = ratios_at(200);
    const std::vector<double> r400 = ratios_at(400);
    const double median400 = (r400[4] + r400[5]) / 2;
    const double spread200 = r200.back() - r200.front();
    const double spread400 = r400.back() - r400.front();
    const double elapsed = now_seconds() - t0;
    std::printf("  median(n=400)=%.4f spread(n=200)=%.4f spread(n=400)=%.4f (%.1fs)\n",
                median400, spread200, spread400, elapsed);
    bool ok = median400 >= 0.85 && median400 <= 1.15;
    ok = ok && spread400 < spread200;
    ok = ok && elapsed < 300.0;
    verdict(9, "length ratios centered near 1, tightening with n", ok);
}
