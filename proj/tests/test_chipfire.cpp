#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "toppling/chipfire.hpp"
#include "toppling/propcheck.hpp"

using namespace toppling;

TEST_CASE("fire rule") {
    const Graph k3 = complete_graph(3);
    ChipConfig c(k3, {2, 0, 0});
    fire(c, 0);
    CHECK(c.chips == std::vector<std::int64_t>{0, 1, 1});

    const Graph k4 = complete_graph(4);
    ChipConfig d(k4, {3, 2, 1, 0});
    fire(d, 0);
    CHECK(d.chips == std::vector<std::int64_t>{0, 3, 2, 1});

    ChipConfig e(k3, {1, 0, 0});
    CHECK_THROWS(fire(e, 0));
}

TEST_CASE("stabilize or detect") {
    const Graph k3 = complete_graph(3);
    SUBCASE("volatile cascade") {
        const StabilizeOutcome out = stabilize_or_detect(ChipConfig(k3, {2, 1, 0}));
        CHECK(out.is_volatile());
    }
    SUBCASE("already stable") {
        const StabilizeOutcome out = stabilize_or_detect(ChipConfig(k3, {1, 1, 1}));
        CHECK_FALSE(out.is_volatile());
        CHECK(out.chips == std::vector<std::int64_t>{1, 1, 1});
        CHECK(out.firings == 0);
    }
    SUBCASE("one firing settles") {
        const StabilizeOutcome out = stabilize_or_detect(ChipConfig(k3, {2, 0, 0}));
        CHECK_FALSE(out.is_volatile());
        CHECK(out.chips == std::vector<std::int64_t>{0, 1, 1});
        CHECK(out.firings == 1);
    }
    SUBCASE("isolated vertex is volatile") {
        const Graph one = from_edge_list(1, {});
        CHECK(stabilize_or_detect(ChipConfig(one, {0})).is_volatile());
    }
}

TEST_CASE("complete-graph volatility test") {
    const Graph k3 = complete_graph(3);
    CHECK(is_volatile_complete(ChipConfig(k3, {2, 1, 0})));
    CHECK_FALSE(is_volatile_complete(ChipConfig(k3, {1, 1, 1})));
    const Graph k4 = complete_graph(4);
    CHECK(is_volatile_complete(ChipConfig(k4, {3, 3, 1, 1})));
    CHECK(is_volatile_complete(ChipConfig(k4, {3, 3, 1, 1})) ==
          stabilize_or_detect(ChipConfig(k4, {3, 3, 1, 1})).is_volatile());
    const Graph path = from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK_THROWS(is_volatile_complete(ChipConfig(path, {0, 0, 0})));
}

TEST_CASE("dominates") {
    const Graph k3 = complete_graph(3);
    CHECK(dominates(ChipConfig(k3, {2, 1, 0}), ChipConfig(k3, {1, 1, 0})));
    CHECK_FALSE(dominates(ChipConfig(k3, {2, 0, 0}), ChipConfig(k3, {0, 0, 2})));
    CHECK(dominates(ChipConfig(k3, {2, 1, 0}), ChipConfig(k3, {2, 1, 0})));
}

TEST_CASE("snapshot round trip") {
    const Graph k4 = complete_graph(4);
    const ChipConfig c(k4, {3, 0, 2, 0});
    std::stringstream buf;
    write_snapshot(buf, c);
    const ChipConfig d = read_snapshot(buf, k4);
    CHECK(d.chips == c.chips);
}

TEST_CASE("property suites, reduced size") {
    CHECK(check_abelian(11, 150, 25).passed());
    CHECK(check_thresholds(12, 800, 20).passed());
    CHECK(check_oracle_complete(13, 800, 10).passed());
    CHECK(check_monotonicity(14, 300, 20).passed());
}
