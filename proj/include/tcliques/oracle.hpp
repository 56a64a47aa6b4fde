#pragma once

#include "tcliques/clique.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcliques {

struct GeneratorConfig {
    int vertex_count = 4;
    int grid_length = 10; // unit-grid instants 0 .. grid_length-1
    double edge_probability = 0.5;
    std::uint64_t seed = 0;
};

/// Deterministic per-(pair, instant) coin-flip contact stream on a unit grid.
/// The same seed yields the same network on every platform: mt19937_64 output
/// is fully specified and the uniform draw avoids distribution adapters.
inline TemporalNetwork random_temporal_network(const GeneratorConfig& cfg) {
    if (cfg.vertex_count < 0 || cfg.grid_length < 1)
        throw std::invalid_argument("random_temporal_network: bad dimensions");
    if (cfg.edge_probability < 0.0 || cfg.edge_probability > 1.0)
        throw std::invalid_argument("random_temporal_network: probability outside [0, 1]");
    std::mt19937_64 rng(cfg.seed);
    std::vector<TemporalEdge> edges;
    for (VertexId u = 0; u < cfg.vertex_count; ++u)
        for (VertexId v = u + 1; v < cfg.vertex_count; ++v)
            for (TimeStamp t = 0; t < cfg.grid_length; ++t) {
                const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (draw < cfg.edge_probability) edges.push_back({u, v, t});
            }
    NetworkOptions opt;
    opt.lifetime = Interval{0, cfg.grid_length - 1};
    opt.dt = 1;
    std::vector<VertexId> all(static_cast<std::size_t>(cfg.vertex_count));
    std::iota(all.begin(), all.end(), VertexId{0});
    opt.vertices = std::move(all);
    return make_network(std::move(edges), opt);
}

struct OracleBounds {
    std::size_t max_vertices = 6;
    std::int64_t max_grid = 24;
};

struct OracleBoundsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exhaustive reference enumeration: every vertex subset of size >= 2 against
/// every grid-aligned interval, filtered by the definition and the literal
/// maximality test. Refuses instances over the bounds rather than truncating.
inline std::vector<Clique> brute_force_maximal(const TemporalNetwork& net, const Parameters& p,
                                               const OracleBounds& bounds = {}) {
    p.validate();
    if (net.vertices.size() > bounds.max_vertices)
        throw OracleBoundsError("oracle refuses: " + std::to_string(net.vertices.size()) +
                                " vertices exceed the bound of " + std::to_string(bounds.max_vertices));
    if (net.grid_points() > bounds.max_grid)
        throw OracleBoundsError("oracle refuses: " + std::to_string(net.grid_points()) +
                                " grid points exceed the bound of " + std::to_string(bounds.max_grid));
    if (net.empty()) return {};

    const EdgeDictionary dict = build_dictionary(net);
    const std::size_t n = net.vertices.size();
    std::vector<Clique> valid;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::vector<VertexId> members;
        for (std::size_t bit = 0; bit < n; ++bit)
            if (mask & (1u << bit)) members.push_back(net.vertices[bit]);
        for (TimeStamp a = net.lifetime.a; a <= net.lifetime.b; a += net.dt)
            for (TimeStamp b = a; b <= net.lifetime.b; b += net.dt)
                if (is_delta_gamma_clique(members, Interval{a, b}, dict, p))
                    valid.push_back({members, {a, b}});
    }

    std::vector<Clique> maximal;
    for (const Clique& c : valid)
        if (is_maximal_def(c, net, dict, p)) maximal.push_back(c);
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

} // namespace tcliques
