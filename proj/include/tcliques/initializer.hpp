#pragma once

#include "tcliques/clique.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace tcliques {

namespace detail {

/// Slide an exactly-delta window back inside the lifetime without changing
/// its length. Callers guarantee the lifetime is at least delta long.
inline Interval shift_into(Interval window, Interval lifetime) {
    if (window.b > lifetime.b) window = {lifetime.b - window.length(), lifetime.b};
    if (window.a < lifetime.a) window = {lifetime.a, lifetime.a + window.length()};
    return window;
}

} // namespace detail

/// Seed cliques: one pair plus an exactly-delta interval per run of gamma
/// consecutive occurrences of a static edge. A run spanning more than delta
/// yields nothing; a run spanning exactly delta yields itself; a shorter run
/// yields the two delta-length intervals flush with either end of the run.
/// Intervals poking past the lifetime are shifted back inside, which keeps
/// the generating run covered (the run spans at most delta). Returns a
/// deduplicated, canonically sorted list; empty (with nothing to warn
/// through) when no delta window fits the lifetime.
inline std::vector<Clique> seed_cliques(const EdgeDictionary& dict, const Parameters& p, Interval lifetime) {
    p.validate();
    std::vector<Clique> seeds;
    if (lifetime.length() < p.delta) return seeds;
    const auto gamma = static_cast<std::size_t>(p.gamma);
    for (const StaticEdge& edge : dict.static_edges()) {
        const auto& ts = *dict.find(edge.u, edge.v);
        if (ts.size() < gamma) continue;
        for (std::size_t i = 0; i + gamma <= ts.size(); ++i) {
            const TimeStamp run_first = ts[i];
            const TimeStamp run_last = ts[i + gamma - 1];
            const TimeStamp span = run_last - run_first;
            if (span > p.delta) continue;
            if (span == p.delta) {
                seeds.push_back({{edge.u, edge.v}, {run_first, run_last}});
            } else {
                seeds.push_back({{edge.u, edge.v},
                                 detail::shift_into({run_first, run_first + p.delta}, lifetime)});
                seeds.push_back({{edge.u, edge.v},
                                 detail::shift_into({run_last - p.delta, run_last}, lifetime)});
            }
        }
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    return seeds;
}

} // namespace tcliques
