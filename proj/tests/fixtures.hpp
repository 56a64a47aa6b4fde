#pragma once

#include <tcliques/tcliques.hpp>

#include <vector>

namespace fixtures {

using namespace tcliques;

inline TemporalNetwork pair_network(const std::vector<TimeStamp>& times, Interval lifetime,
                                    std::optional<TimeStamp> dt = std::nullopt) {
    std::vector<TemporalEdge> edges;
    for (const TimeStamp t : times) edges.push_back({1, 2, t});
    NetworkOptions opt;
    opt.lifetime = lifetime;
    opt.dt = dt;
    return make_network(std::move(edges), opt);
}

// single pair (1,2) with a gap between 3 and 5
inline TemporalNetwork s1() { return pair_network({1, 2, 3, 5, 6, 7}, {0, 10}); }

inline const std::vector<TimeStamp>& s1_times() {
    static const std::vector<TimeStamp> ts{1, 2, 3, 5, 6, 7};
    return ts;
}

// triangle on vertices 1,2,3 with pairwise contacts overlapping around t=2..3
inline TemporalNetwork s2() {
    std::vector<TemporalEdge> edges{{1, 2, 1}, {1, 2, 3}, {1, 3, 2}, {1, 3, 4}, {2, 3, 2}, {2, 3, 3}};
    NetworkOptions opt;
    opt.lifetime = Interval{0, 5};
    opt.dt = 1;
    return make_network(std::move(edges), opt);
}

// the [7,10] -> [7,11] right-widening scenario
inline TemporalNetwork lookahead_pair() { return pair_network({7, 8, 11}, {7, 11}); }

// a contact at every instant of a single pair
inline TemporalNetwork dense_pair(int grid) {
    std::vector<TimeStamp> times;
    for (TimeStamp t = 0; t < grid; ++t) times.push_back(t);
    return pair_network(times, {0, grid - 1});
}

inline Clique mk(std::vector<VertexId> members, TimeStamp a, TimeStamp b) {
    return Clique{std::move(members), {a, b}};
}

// scale all timestamps (and the lifetime) by a positive factor
inline TemporalNetwork scaled(const TemporalNetwork& net, TimeStamp factor) {
    std::vector<TemporalEdge> edges;
    for (const auto& e : net.edges) edges.push_back({e.u, e.v, e.t * factor});
    NetworkOptions opt;
    opt.lifetime = Interval{net.lifetime.a * factor, net.lifetime.b * factor};
    opt.dt = net.dt * factor;
    opt.vertices = net.vertices;
    return make_network(std::move(edges), opt);
}

} // namespace fixtures
