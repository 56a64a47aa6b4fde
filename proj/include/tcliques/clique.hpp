#pragma once

#include "tcliques/temporal_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace tcliques {

/// Run parameters. `delta` and `dt` share the timestamp unit; `gamma` is a
/// count. `delta` must be a positive multiple of `dt`.
struct Parameters {
    TimeStamp delta = 1;
    int gamma = 1;
    TimeStamp dt = 1;

    void validate() const {
        if (dt < 1) throw std::invalid_argument("dt must be positive");
        if (gamma < 1) throw std::invalid_argument("gamma must be positive");
        if (delta < dt) throw std::invalid_argument("delta must be at least dt");
        if (delta % dt != 0) throw std::invalid_argument("delta must be a multiple of dt");
    }

    /// Grid instants a closed window of length delta can contain.
    std::int64_t window_capacity() const { return delta / dt + 1; }
};

/// Vertex set plus closed time interval. The comparison order doubles as the
/// canonical key: members lexicographically, then the interval.
struct Clique {
    std::vector<VertexId> members; // sorted ascending, size >= 2
    Interval interval;

    friend auto operator<=>(const Clique&, const Clique&) = default;

    TimeStamp duration() const { return interval.length(); }
    std::size_t cardinality() const { return members.size(); }
};

struct CliqueHash {
    std::size_t operator()(const Clique& c) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        const auto mix = [&h](std::uint64_t x) {
            h ^= x;
            h *= 0x100000001b3ull;
        };
        mix(c.members.size());
        for (const VertexId v : c.members) mix(static_cast<std::uint64_t>(v));
        mix(static_cast<std::uint64_t>(c.interval.a));
        mix(static_cast<std::uint64_t>(c.interval.b));
        return static_cast<std::size_t>(h);
    }
};

/// True when every length-delta window sliding across `iv` on the dt grid
/// (clamped to the interval at both ends) holds at least gamma of `times`.
/// Counts can only drop at the window anchored at iv.a and at windows opening
/// one grid step after an occurrence, so those are the only starts checked.
/// Assumes `times` and `iv` lie on the same dt grid.
inline bool every_window_has_gamma(std::span<const TimeStamp> times, Interval iv, const Parameters& p) {
    const auto lo = std::lower_bound(times.begin(), times.end(), iv.a);
    const auto hi = std::upper_bound(lo, times.end(), iv.b);
    const std::int64_t in_range = hi - lo;
    if (iv.length() <= p.delta) return in_range >= p.gamma; // single clamped window
    if (in_range < p.gamma) return false;
    if (lo[p.gamma - 1] > iv.a + p.delta) return false;
    const TimeStamp last_window_start = iv.b - p.delta;
    for (auto it = lo; it != hi; ++it) {
        const TimeStamp tau = *it + p.dt;
        if (tau > last_window_start) break;
        if (hi - it <= p.gamma) return false; // too few occurrences remain after *it
        if (it[p.gamma] > tau + p.delta) return false;
    }
    return true;
}

/// Definition check for a vertex set on an interval: every unordered pair
/// must clear every_window_has_gamma. Pairs absent from the dictionary count
/// as frequency zero. Pairs are scanned in lexicographic order and the first
/// failure wins.
inline bool is_delta_gamma_clique(std::span<const VertexId> members, Interval iv,
                                  const EdgeDictionary& dict, const Parameters& p) {
    if (members.size() < 2)
        throw std::invalid_argument("is_delta_gamma_clique: a clique needs at least two vertices");
    if (iv.a > iv.b)
        throw std::invalid_argument("is_delta_gamma_clique: interval start exceeds its end");
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const auto* ts = dict.find(members[i], members[j]);
            if (!ts || !every_window_has_gamma(*ts, iv, p)) return false;
        }
    return true;
}

inline bool is_delta_gamma_clique(const Clique& c, const EdgeDictionary& dict, const Parameters& p) {
    return is_delta_gamma_clique(c.members, c.interval, dict, p);
}

/// gamma-th in-range occurrence counting forward from iv.a, pulled one grid
/// step earlier when the window just before it already holds gamma
/// occurrences on its own (the whole list is consulted, not only the
/// in-range slice).
inline TimeStamp first_gamma_occurrence(std::span<const TimeStamp> times, Interval iv, const Parameters& p) {
    const auto lo = std::lower_bound(times.begin(), times.end(), iv.a);
    const auto hi = std::upper_bound(lo, times.end(), iv.b);
    if (hi - lo < p.gamma)
        throw std::invalid_argument("first_gamma_occurrence: fewer than gamma occurrences in the interval");
    const TimeStamp forward = lo[p.gamma - 1];
    if (count_in_window(times, forward - p.dt - p.delta, forward - p.dt) >= p.gamma)
        return forward - p.dt;
    return forward;
}

/// Mirror scan: gamma-th in-range occurrence counting backward from iv.b,
/// pushed one grid step later when the window just after it holds gamma
/// occurrences on its own.
inline TimeStamp last_gamma_occurrence(std::span<const TimeStamp> times, Interval iv, const Parameters& p) {
    const auto lo = std::lower_bound(times.begin(), times.end(), iv.a);
    const auto hi = std::upper_bound(lo, times.end(), iv.b);
    if (hi - lo < p.gamma)
        throw std::invalid_argument("last_gamma_occurrence: fewer than gamma occurrences in the interval");
    const TimeStamp backward = hi[-p.gamma];
    if (count_in_window(times, backward + p.dt, backward + p.dt + p.delta) >= p.gamma)
        return backward + p.dt;
    return backward;
}

namespace detail {

inline std::vector<VertexId> with_vertex(std::span<const VertexId> members, VertexId v) {
    std::vector<VertexId> grown(members.begin(), members.end());
    grown.insert(std::lower_bound(grown.begin(), grown.end(), v), v);
    return grown;
}

} // namespace detail

/// Literal maximality test: no single-vertex addition and no one-grid-step
/// interval extension inside the lifetime yields a clique. Reference path
/// only; the enumerator does not call this while searching.
inline bool is_maximal_def(const Clique& c, const TemporalNetwork& net,
                           const EdgeDictionary& dict, const Parameters& p) {
    if (!is_delta_gamma_clique(c, dict, p))
        throw std::invalid_argument("is_maximal_def: input is not a (delta,gamma)-clique");
    for (const VertexId v : net.vertices) {
        if (std::binary_search(c.members.begin(), c.members.end(), v)) continue;
        if (is_delta_gamma_clique(detail::with_vertex(c.members, v), c.interval, dict, p))
            return false;
    }
    if (c.interval.a - p.dt >= net.lifetime.a &&
        is_delta_gamma_clique(c.members, Interval{c.interval.a - p.dt, c.interval.b}, dict, p))
        return false;
    if (c.interval.b + p.dt <= net.lifetime.b &&
        is_delta_gamma_clique(c.members, Interval{c.interval.a, c.interval.b + p.dt}, dict, p))
        return false;
    return true;
}

} // namespace tcliques
