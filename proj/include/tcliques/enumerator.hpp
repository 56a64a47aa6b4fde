#pragma once

#include "tcliques/initializer.hpp"

#include <chrono>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace tcliques {

struct RunStats {
    std::uint64_t iterations = 0; // queue removals
    std::uint64_t seeds = 0;
    std::uint64_t vertex_expansions = 0; // enqueued growths, by kind
    std::uint64_t left_expansions = 0;
    std::uint64_t right_expansions = 0;
    std::size_t seen_size = 0;
    double wall_seconds = 0.0;
    std::string note; // non-empty when the run short-circuited
};

enum class QueueOrder { fifo, lifo };

struct EnumerateOptions {
    QueueOrder order = QueueOrder::fifo;
    // Verify every enqueued clique against the definition. On by default in
    // debug builds; the result set is identical either way.
#ifndef NDEBUG
    bool check_invariants = true;
#else
    bool check_invariants = false;
#endif
};

struct EnumerationResult {
    std::vector<Clique> maximal; // canonical order
    RunStats stats;
};

/// Vertex growth: candidates whose addition keeps the definition intact on
/// the unchanged interval. Sorted by the added vertex id.
inline std::vector<Clique> vertex_expansions(const Clique& c, const EdgeDictionary& dict, const Parameters& p) {
    std::vector<Clique> grown;
    for (const VertexId v : candidate_vertices(dict, c.members, c.interval, p.gamma)) {
        Clique candidate{detail::with_vertex(c.members, v), c.interval};
        if (is_delta_gamma_clique(candidate, dict, p)) grown.push_back(std::move(candidate));
    }
    return grown;
}

namespace detail {

template <typename Fold>
inline TimeStamp fold_pair_boundaries(const Clique& c, const EdgeDictionary& dict, TimeStamp init, Fold fold) {
    TimeStamp acc = init;
    for (std::size_t i = 0; i + 1 < c.members.size(); ++i)
        for (std::size_t j = i + 1; j < c.members.size(); ++j) {
            const auto* ts = dict.find(c.members[i], c.members[j]);
            if (!ts)
                throw std::invalid_argument("expansion: member pair has no occurrences");
            acc = fold(acc, *ts);
        }
    return acc;
}

} // namespace detail

/// Interval growth to the left. The new start is the latest per-pair
/// first_gamma_occurrence minus delta, clamped to the lifetime; returns the
/// widened clique only when that start actually precedes the current one.
inline std::optional<Clique> left_expansion(const Clique& c, const EdgeDictionary& dict,
                                            const Parameters& p, Interval lifetime) {
    const TimeStamp latest = detail::fold_pair_boundaries(
        c, dict, std::numeric_limits<TimeStamp>::min(),
        [&](TimeStamp acc, const EdgeDictionary::TimeList& ts) {
            return std::max(acc, first_gamma_occurrence(ts, c.interval, p));
        });
    const TimeStamp grown_start = std::max(latest - p.delta, lifetime.a);
    if (grown_start >= c.interval.a) return std::nullopt;
    return Clique{c.members, {grown_start, c.interval.b}};
}

/// Interval growth to the right, the mirror image: earliest per-pair
/// last_gamma_occurrence plus delta, clamped to the lifetime.
inline std::optional<Clique> right_expansion(const Clique& c, const EdgeDictionary& dict,
                                             const Parameters& p, Interval lifetime) {
    const TimeStamp earliest = detail::fold_pair_boundaries(
        c, dict, std::numeric_limits<TimeStamp>::max(),
        [&](TimeStamp acc, const EdgeDictionary::TimeList& ts) {
            return std::min(acc, last_gamma_occurrence(ts, c.interval, p));
        });
    const TimeStamp grown_end = std::min(earliest + p.delta, lifetime.b);
    if (grown_end <= c.interval.b) return std::nullopt;
    return Clique{c.members, {c.interval.a, grown_end}};
}

/// Enumerate all maximal cliques for the given parameters: seed from runs of
/// gamma consecutive occurrences, then grow each pending clique by vertex
/// addition and by interval widening until nothing applies. A clique reaches
/// the result set only when no growth of any kind exists, seen or unseen.
inline EnumerationResult enumerate_maximal(const TemporalNetwork& net, const EdgeDictionary& dict,
                                           const Parameters& p, const EnumerateOptions& opt = {}) {
    p.validate();
    const auto started = std::chrono::steady_clock::now();
    EnumerationResult out;

    [&] {
        if (p.gamma > p.window_capacity()) {
            out.stats.note = "gamma exceeds delta/dt + 1; no window can hold gamma occurrences";
            return;
        }
        if (net.lifetime.length() < p.delta) {
            out.stats.note = "lifetime shorter than delta; no interval fits";
            return;
        }

        std::vector<Clique> seeds = seed_cliques(dict, p, net.lifetime);
        out.stats.seeds = seeds.size();

        const auto ensure_clique = [&](const Clique& c) {
            if (opt.check_invariants && !is_delta_gamma_clique(c, dict, p))
                throw std::logic_error("enumerator enqueued a vertex set that is not a clique");
        };

        std::unordered_set<Clique, CliqueHash> seen(seeds.begin(), seeds.end());
        std::deque<Clique> pending;
        for (Clique& s : seeds) {
            ensure_clique(s);
            pending.push_back(std::move(s));
        }

        std::vector<Clique> results;
        while (!pending.empty()) {
            Clique current;
            if (opt.order == QueueOrder::fifo) {
                current = std::move(pending.front());
                pending.pop_front();
            } else {
                current = std::move(pending.back());
                pending.pop_back();
            }
            ++out.stats.iterations;
            bool maximal = true;

            for (Clique& grown : vertex_expansions(current, dict, p)) {
                maximal = false;
                if (seen.insert(grown).second) {
                    ensure_clique(grown);
                    ++out.stats.vertex_expansions;
                    pending.push_back(std::move(grown));
                }
            }
            if (auto wider = left_expansion(current, dict, p, net.lifetime)) {
                maximal = false;
                if (seen.insert(*wider).second) {
                    ensure_clique(*wider);
                    ++out.stats.left_expansions;
                    pending.push_back(std::move(*wider));
                }
            }
            if (auto wider = right_expansion(current, dict, p, net.lifetime)) {
                maximal = false;
                if (seen.insert(*wider).second) {
                    ensure_clique(*wider);
                    ++out.stats.right_expansions;
                    pending.push_back(std::move(*wider));
                }
            }
            if (maximal) results.push_back(std::move(current));
        }

        std::sort(results.begin(), results.end());
        out.stats.seen_size = seen.size();
        out.maximal = std::move(results);
    }();

    out.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return out;
}

inline EnumerationResult enumerate_maximal(const TemporalNetwork& net, const Parameters& p,
                                           const EnumerateOptions& opt = {}) {
    return enumerate_maximal(net, build_dictionary(net), p, opt);
}

} // namespace tcliques
