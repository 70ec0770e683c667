// Compares the incremental grid engine against the config-based reference
// on the same strategy pairs, checking that both produce identical turn
// counts while timing them.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "toppling/game.hpp"

using namespace toppling;

namespace {

double run_timed(GameRecord (*play)(int, StrategyKind, StrategyKind, Player, bool),
                 int n, StrategyKind smin, StrategyKind smax, std::int64_t* turns) {
    const auto t0 = std::chrono::steady_clock::now();
    const GameRecord rec = play(n, smin, smax, Player::Min, false);
    const auto t1 = std::chrono::steady_clock::now();
    *turns = rec.turns;
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> sizes = {100, 200, 400};
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) sizes.push_back(std::atoi(argv[i]));
    }
    const std::pair<StrategyKind, StrategyKind> pairs[] = {
        {StrategyKind::Triangle, StrategyKind::Row},
        {StrategyKind::Square, StrategyKind::Row},
    };
    std::printf("%6s  %-12s  %12s  %10s  %10s  %8s\n", "n", "min-vs-max", "turns",
                "grid(s)", "ref(s)", "speedup");
    bool ok = true;
    for (int n : sizes) {
        for (auto [smin, smax] : pairs) {
            std::int64_t t_grid = 0, t_ref = 0;
            const double secs_grid = run_timed(&play_grid_game, n, smin, smax, &t_grid);
            const double secs_ref =
                run_timed(&play_complete_via_config, n, smin, smax, &t_ref);
            const std::string label =
                std::string(strategy_name(smin)) + "-" + strategy_name(smax);
            std::printf("%6d  %-12s  %12lld  %10.4f  %10.4f  %8.1fx\n", n, label.c_str(),
                        static_cast<long long>(t_grid), secs_grid, secs_ref,
                        secs_ref / secs_grid);
            if (t_grid != t_ref) {
                std::printf("MISMATCH: reference produced %lld turns\n",
                            static_cast<long long>(t_ref));
                ok = false;
            }
        }
    }
    return ok ? 0 : 1;
}
