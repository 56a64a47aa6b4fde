#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "naive_checks.hpp"

using namespace tcliques;

namespace {

const Parameters kP32{3, 2, 1};

EnumerateOptions checked(QueueOrder order = QueueOrder::fifo) {
    EnumerateOptions opt;
    opt.order = order;
    opt.check_invariants = true;
    return opt;
}

} // namespace

TEST_CASE("vertex growth on the triangle") {
    const auto net = fixtures::s2();
    const auto dict = build_dictionary(net);
    const Parameters p{4, 2, 1};
    const auto grown = vertex_expansions(fixtures::mk({1, 2}, 0, 4), dict, p);
    CHECK(grown == std::vector<Clique>{fixtures::mk({1, 2, 3}, 0, 4)});
}

TEST_CASE("vertex growth with no third vertex") {
    const auto net = fixtures::s1();
    const auto dict = build_dictionary(net);
    CHECK(vertex_expansions(fixtures::mk({1, 2}, 0, 3), dict, kP32).empty());
}

TEST_CASE("vertex growth respects the per-pair threshold") {
    // triangle with only one (2,3) contact: vertex 3 cannot join at gamma=2
    std::vector<TemporalEdge> edges{{1, 2, 1}, {1, 2, 3}, {1, 3, 2}, {1, 3, 4}, {2, 3, 2}};
    NetworkOptions opt;
    opt.lifetime = Interval{0, 5};
    opt.dt = 1;
    const auto net = make_network(std::move(edges), opt);
    const auto dict = build_dictionary(net);
    CHECK(vertex_expansions(fixtures::mk({1, 2}, 0, 4), dict, {4, 2, 1}).empty());
}

TEST_CASE("left widening uses the backward-looking boundary") {
    const auto net = fixtures::s1();
    const auto dict = build_dictionary(net);
    const auto wider = left_expansion(fixtures::mk({1, 2}, 6, 9), dict, kP32, net.lifetime);
    REQUIRE(wider.has_value());
    CHECK(*wider == fixtures::mk({1, 2}, 3, 9));
}

TEST_CASE("left widening stops at the lifetime") {
    const auto net = fixtures::s1();
    const auto dict = build_dictionary(net);
    CHECK_FALSE(left_expansion(fixtures::mk({1, 2}, 0, 9), dict, kP32, net.lifetime).has_value());
    const auto s2 = fixtures::s2();
    const auto d2 = build_dictionary(s2);
    CHECK_FALSE(left_expansion(fixtures::mk({1, 2, 3}, 0, 5), d2, {4, 2, 1}, s2.lifetime).has_value());
}

TEST_CASE("right widening jumps a full delta past the boundary") {
    const auto net = fixtures::s1();
    const auto dict = build_dictionary(net);
    const auto wider = right_expansion(fixtures::mk({1, 2}, 0, 3), dict, kP32, net.lifetime);
    REQUIRE(wider.has_value());
    CHECK(*wider == fixtures::mk({1, 2}, 0, 6));
}

TEST_CASE("right widening clamps to the lifetime") {
    const auto net = fixtures::pair_network(fixtures::s1_times(), {0, 8});
    const auto dict = build_dictionary(net);
    const auto wider = right_expansion(fixtures::mk({1, 2}, 0, 6), dict, kP32, net.lifetime);
    REQUIRE(wider.has_value());
    CHECK(*wider == fixtures::mk({1, 2}, 0, 8));
}

TEST_CASE("right widening takes the one-step lookahead") {
    const auto net = fixtures::lookahead_pair();
    const auto dict = build_dictionary(net);
    const auto wider = right_expansion(fixtures::mk({1, 2}, 7, 10), dict, kP32, net.lifetime);
    REQUIRE(wider.has_value());
    CHECK(*wider == fixtures::mk({1, 2}, 7, 11));
}

TEST_CASE("widening a set whose pairs lack occurrences is a contract error") {
    const auto net = fixtures::s1();
    const auto dict = build_dictionary(net);
    const Clique not_a_clique = fixtures::mk({1, 9}, 0, 3); // pair never occurs
    CHECK_THROWS_AS(left_expansion(not_a_clique, dict, kP32, net.lifetime), std::invalid_argument);
    CHECK_THROWS_AS(right_expansion(not_a_clique, dict, kP32, net.lifetime), std::invalid_argument);
}

TEST_CASE("enumeration on the gap fixture") {
    const auto res = enumerate_maximal(fixtures::s1(), kP32, checked());
    CHECK(res.maximal == std::vector<Clique>{fixtures::mk({1, 2}, 0, 9)});
    CHECK(res.stats.seeds == 7);
}

TEST_CASE("enumeration on the triangle fixture") {
    const auto res = enumerate_maximal(fixtures::s2(), {4, 2, 1}, checked());
    CHECK(res.maximal == std::vector<Clique>{fixtures::mk({1, 2, 3}, 0, 5)});
}

TEST_CASE("enumeration on the lookahead fixture") {
    const auto res = enumerate_maximal(fixtures::lookahead_pair(), kP32, checked());
    CHECK(res.maximal == std::vector<Clique>{fixtures::mk({1, 2}, 7, 11)});
}

TEST_CASE("gamma beyond the window capacity short-circuits to empty") {
    const auto res = enumerate_maximal(fixtures::s1(), {3, 5, 1}, checked());
    CHECK(res.maximal.empty());
    CHECK(res.stats.iterations == 0);
    CHECK_FALSE(res.stats.note.empty());
}

TEST_CASE("a lifetime shorter than delta yields an empty run with a note") {
    const auto net = fixtures::pair_network({0, 1, 2}, {0, 2});
    const auto res = enumerate_maximal(net, {5, 1, 1}, checked());
    CHECK(res.maximal.empty());
    CHECK_FALSE(res.stats.note.empty());
}

TEST_CASE("iteration count equals seeds plus enqueued growths") {
    for (const std::uint64_t seed : {81ull, 82ull, 83ull, 84ull}) {
        const auto net = random_temporal_network({5, 10, 0.5, seed});
        for (TimeStamp delta = 2; delta <= 3; ++delta)
            for (int gamma = 1; gamma <= 2; ++gamma) {
                const auto res = enumerate_maximal(net, {delta, gamma, 1}, checked());
                CHECK(res.stats.iterations == res.stats.seeds + res.stats.vertex_expansions +
                                                  res.stats.left_expansions + res.stats.right_expansions);
                CHECK(res.stats.seen_size == res.stats.iterations);
            }
    }
}

TEST_CASE("queue discipline does not change the result set") {
    for (const std::uint64_t seed : {91ull, 92ull, 93ull}) {
        const auto net = random_temporal_network({5, 10, 0.5, seed});
        const auto fifo = enumerate_maximal(net, kP32, checked(QueueOrder::fifo));
        const auto lifo = enumerate_maximal(net, kP32, checked(QueueOrder::lifo));
        CHECK(fifo.maximal == lifo.maximal);
    }
}

TEST_CASE("results carry no duplicates and pass the literal maximality test") {
    for (const std::uint64_t seed : {101ull, 102ull, 103ull}) {
        const auto net = random_temporal_network({5, 10, 0.6, seed});
        const auto dict = build_dictionary(net);
        const auto res = enumerate_maximal(net, dict, kP32, checked());
        CHECK(std::adjacent_find(res.maximal.begin(), res.maximal.end()) == res.maximal.end());
        for (const Clique& c : res.maximal) {
            CHECK(is_maximal_def(c, net, dict, kP32));
            CHECK(tcheck::naive_is_maximal(net, c, kP32.delta, kP32.gamma));
        }
    }
}

TEST_CASE("scaling the grid scales the results") {
    const TimeStamp factor = 3;
    for (const std::uint64_t seed : {111ull, 112ull, 113ull}) {
        const auto net = random_temporal_network({4, 10, 0.5, seed});
        const auto coarse = fixtures::scaled(net, factor);
        REQUIRE(coarse.dt == factor);
        for (TimeStamp delta = 2; delta <= 3; ++delta)
            for (int gamma = 1; gamma <= 2; ++gamma) {
                const auto base = enumerate_maximal(net, {delta, gamma, 1}, checked());
                const auto scaled_run =
                    enumerate_maximal(coarse, {delta * factor, gamma, factor}, checked());
                REQUIRE(base.maximal.size() == scaled_run.maximal.size());
                for (std::size_t i = 0; i < base.maximal.size(); ++i) {
                    CHECK(scaled_run.maximal[i].members == base.maximal[i].members);
                    CHECK(scaled_run.maximal[i].interval.a == base.maximal[i].interval.a * factor);
                    CHECK(scaled_run.maximal[i].interval.b == base.maximal[i].interval.b * factor);
                }
            }
    }
}

TEST_CASE("an empty network enumerates to nothing") {
    NetworkOptions opt;
    opt.vertices = std::vector<VertexId>{1, 2, 3};
    opt.lifetime = Interval{0, 10};
    const auto net = make_network({}, opt);
    const auto res = enumerate_maximal(net, kP32, checked());
    CHECK(res.maximal.empty());
    CHECK(res.stats.seeds == 0);
}
