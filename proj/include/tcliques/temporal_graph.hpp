#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tcliques {

using VertexId = std::int64_t;
using TimeStamp = std::int64_t;

/// Closed interval [a, b] on the observation grid.
struct Interval {
    TimeStamp a = 0;
    TimeStamp b = 0;

    TimeStamp length() const { return b - a; }
    bool contains(TimeStamp t) const { return a <= t && t <= b; }

    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// One contact between two vertices, canonicalized so that u < v.
struct TemporalEdge {
    VertexId u = 0;
    VertexId v = 0;
    TimeStamp t = 0;

    friend auto operator<=>(const TemporalEdge&, const TemporalEdge&) = default;
};

inline TemporalEdge make_edge(VertexId a, VertexId b, TimeStamp t) {
    if (a == b) throw std::invalid_argument("temporal edge endpoints must differ");
    return a < b ? TemporalEdge{a, b, t} : TemporalEdge{b, a, t};
}

/// A contact sequence normalized onto a uniform time grid.
/// Immutable after construction; safe to share read-only across threads.
struct TemporalNetwork {
    std::vector<VertexId> vertices;   // sorted, unique
    std::vector<TemporalEdge> edges;  // sorted, unique (u, v, t) triples
    TimeStamp dt = 1;
    Interval lifetime{0, 0};

    bool empty() const { return edges.empty(); }
    std::int64_t grid_points() const { return lifetime.length() / dt + 1; }
};

struct NetworkOptions {
    std::optional<Interval> lifetime;              // default: [min t, max t]
    std::optional<TimeStamp> dt;                   // default: inferred by gcd
    std::optional<TimeStamp> origin;               // shift times so the earliest maps here
    std::optional<std::vector<VertexId>> vertices; // extra isolated vertices to keep
};

namespace detail {

inline TimeStamp gcd_resolution(std::span<const TemporalEdge> edges, Interval lifetime) {
    // the grid has to land on t_end exactly, so the span participates too
    TimeStamp g = lifetime.length();
    for (const auto& e : edges) g = std::gcd(g, e.t - lifetime.a);
    return g > 0 ? g : 1;
}

} // namespace detail

/// Normalize raw triples into a network: sort, collapse duplicate (u,v,t)
/// triples, derive the vertex set and lifetime, and fix the grid resolution.
inline TemporalNetwork make_network(std::vector<TemporalEdge> edges, const NetworkOptions& opt = {}) {
    for (const auto& e : edges)
        if (e.u >= e.v) throw std::invalid_argument("make_network: edges must be canonical (u < v)");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    TimeStamp t_min = 0;
    TimeStamp t_max = 0;
    if (!edges.empty()) {
        t_min = std::numeric_limits<TimeStamp>::max();
        t_max = std::numeric_limits<TimeStamp>::min();
        for (const auto& e : edges) {
            t_min = std::min(t_min, e.t);
            t_max = std::max(t_max, e.t);
        }
    }
    if (opt.origin && !edges.empty()) {
        const TimeStamp shift = *opt.origin - t_min;
        for (auto& e : edges) e.t += shift;
        t_min += shift;
        t_max += shift;
    }

    TemporalNetwork net;
    net.edges = std::move(edges);

    for (const auto& e : net.edges) {
        net.vertices.push_back(e.u);
        net.vertices.push_back(e.v);
    }
    if (opt.vertices)
        net.vertices.insert(net.vertices.end(), opt.vertices->begin(), opt.vertices->end());
    std::sort(net.vertices.begin(), net.vertices.end());
    net.vertices.erase(std::unique(net.vertices.begin(), net.vertices.end()), net.vertices.end());

    net.lifetime = opt.lifetime.value_or(Interval{t_min, t_max});
    if (net.lifetime.a > net.lifetime.b)
        throw std::invalid_argument("make_network: lifetime start exceeds its end");
    if (!net.edges.empty() && (t_min < net.lifetime.a || t_max > net.lifetime.b))
        throw std::invalid_argument("make_network: edge timestamps fall outside the lifetime");

    net.dt = opt.dt.value_or(detail::gcd_resolution(net.edges, net.lifetime));
    if (net.dt < 1) throw std::invalid_argument("make_network: dt must be positive");
    if (net.lifetime.length() % net.dt != 0)
        throw std::invalid_argument("make_network: dt must divide the lifetime span");
    for (const auto& e : net.edges)
        if ((e.t - net.lifetime.a) % net.dt != 0)
            throw std::invalid_argument("make_network: dt must divide every timestamp offset");
    return net;
}

/// Greatest common divisor of all timestamp offsets from the lifetime start
/// (and of the lifetime span itself); 1 when everything coincides.
inline TimeStamp infer_resolution(const TemporalNetwork& net) {
    return detail::gcd_resolution(net.edges, net.lifetime);
}

// ---------------------------------------------------------------------------
// Edge-stream parsing

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EdgeFormat { three_column, four_column };

struct ParseOptions {
    std::vector<std::string> comment_prefixes{"%", "#"};
    // Directed inputs always fold onto canonical unordered pairs; the flag is
    // accepted for interface parity and does not change behavior.
    bool directed_as_undirected = true;
    std::optional<TimeStamp> origin;
    std::optional<Interval> lifetime;
    std::optional<TimeStamp> dt;
};

struct ParseReport {
    std::uint64_t data_lines = 0;
    std::uint64_t comment_lines = 0;
    std::uint64_t blank_lines = 0;
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t duplicates_collapsed = 0;
    std::uint64_t raw_edges = 0;    // accepted edge lines, self-loops excluded, before dedup
    std::uint64_t unique_edges = 0; // after (u, v, t) dedup

    void write_key_values(std::ostream& os) const {
        os << "parse.data_lines=" << data_lines << '\n'
           << "parse.comment_lines=" << comment_lines << '\n'
           << "parse.blank_lines=" << blank_lines << '\n'
           << "parse.self_loops_dropped=" << self_loops_dropped << '\n'
           << "parse.duplicates_collapsed=" << duplicates_collapsed << '\n'
           << "parse.temporal_edges_raw=" << raw_edges << '\n'
           << "parse.temporal_edges=" << unique_edges << '\n';
    }
};

struct ParseResult {
    TemporalNetwork network;
    ParseReport report;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

inline std::int64_t parse_int(std::string_view field, std::uint64_t line_no) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                         std::string(field) + "'");
    return value;
}

} // namespace detail

/// Read "u v t" (or "u v w t" with the weight ignored) lines into a network.
/// Comment lines are skipped, self-loops dropped and counted, duplicate
/// triples collapsed, and directed pairs folded onto u < v.
inline ParseResult parse_edge_stream(std::istream& in, EdgeFormat format, const ParseOptions& opt = {}) {
    ParseResult result;
    ParseReport& report = result.report;
    std::vector<TemporalEdge> edges;
    std::string line;
    std::uint64_t line_no = 0;
    const std::size_t needed = format == EdgeFormat::three_column ? 3 : 4;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view(line);
        const std::size_t first = view.find_first_not_of(" \t");
        if (first == std::string_view::npos) {
            ++report.blank_lines;
            continue;
        }
        view.remove_prefix(first);
        bool is_comment = false;
        for (const auto& prefix : opt.comment_prefixes)
            if (view.starts_with(prefix)) {
                is_comment = true;
                break;
            }
        if (is_comment) {
            ++report.comment_lines;
            continue;
        }
        ++report.data_lines;
        const auto fields = detail::split_fields(view);
        if (fields.size() < needed)
            throw ParseError("line " + std::to_string(line_no) + ": expected at least " +
                             std::to_string(needed) + " fields, got " + std::to_string(fields.size()));
        const VertexId u = detail::parse_int(fields[0], line_no);
        const VertexId v = detail::parse_int(fields[1], line_no);
        const TimeStamp t = detail::parse_int(fields[needed - 1], line_no);
        if (u == v) {
            ++report.self_loops_dropped;
            continue;
        }
        edges.push_back(u < v ? TemporalEdge{u, v, t} : TemporalEdge{v, u, t});
    }

    report.raw_edges = edges.size();
    if (edges.empty()) throw ParseError("no edges");

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    report.unique_edges = edges.size();
    report.duplicates_collapsed = report.raw_edges - report.unique_edges;

    NetworkOptions net_opt;
    net_opt.lifetime = opt.lifetime;
    net_opt.dt = opt.dt;
    net_opt.origin = opt.origin;
    result.network = make_network(std::move(edges), net_opt);
    return result;
}

// ---------------------------------------------------------------------------
// Static-edge dictionary

struct StaticEdge {
    VertexId u = 0;
    VertexId v = 0;

    friend auto operator<=>(const StaticEdge&, const StaticEdge&) = default;
};

struct StaticEdgeHash {
    std::size_t operator()(const StaticEdge& e) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(e.u) * 0x9e3779b97f4a7c15ull;
        h ^= static_cast<std::uint64_t>(e.v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

class EdgeDictionary;
inline EdgeDictionary build_dictionary(const TemporalNetwork& net);

/// Static edge -> strictly ascending occurrence times, plus per-vertex
/// adjacency for neighborhood queries.
class EdgeDictionary {
public:
    using TimeList = std::vector<TimeStamp>;

    const TimeList* find(VertexId a, VertexId b) const {
        if (a > b) std::swap(a, b);
        const auto it = times_.find(StaticEdge{a, b});
        return it == times_.end() ? nullptr : &it->second;
    }

    std::int64_t frequency(VertexId a, VertexId b) const {
        const TimeList* ts = find(a, b);
        return ts ? static_cast<std::int64_t>(ts->size()) : 0;
    }

    std::span<const VertexId> neighbors(VertexId u) const {
        const auto it = adj_.find(u);
        if (it == adj_.end()) return {};
        return {it->second.data(), it->second.size()};
    }

    /// Sorted key list; the deterministic iteration order.
    const std::vector<StaticEdge>& static_edges() const { return keys_; }
    std::size_t size() const { return keys_.size(); }
    std::uint64_t temporal_edge_count() const { return temporal_edges_; }

private:
    friend EdgeDictionary build_dictionary(const TemporalNetwork& net);

    std::unordered_map<StaticEdge, TimeList, StaticEdgeHash> times_;
    std::unordered_map<VertexId, std::vector<VertexId>> adj_;
    std::vector<StaticEdge> keys_;
    std::uint64_t temporal_edges_ = 0;
};

inline EdgeDictionary build_dictionary(const TemporalNetwork& net) {
    EdgeDictionary dict;
    // network edges are sorted unique triples, so each key's list arrives
    // strictly ascending
    for (const auto& e : net.edges) {
        const StaticEdge key{e.u, e.v};
        if (dict.keys_.empty() || dict.keys_.back() != key) {
            dict.keys_.push_back(key);
            dict.adj_[e.u].push_back(e.v);
            dict.adj_[e.v].push_back(e.u);
        }
        dict.times_[key].push_back(e.t);
        ++dict.temporal_edges_;
    }
    for (auto& [vertex, nb] : dict.adj_) std::sort(nb.begin(), nb.end());
    return dict;
}

/// Number of entries t with lo <= t <= hi in an ascending list.
inline std::int64_t count_in_window(std::span<const TimeStamp> times, TimeStamp lo, TimeStamp hi) {
    if (lo > hi) return 0;
    const auto first = std::lower_bound(times.begin(), times.end(), lo);
    const auto last = std::upper_bound(first, times.end(), hi);
    return last - first;
}

/// Vertices outside `members` connected to every member by at least `gamma`
/// occurrences inside `window`. A necessary filter for vertex addition: any
/// vertex that can join the clique on this interval passes it.
inline std::vector<VertexId> candidate_vertices(const EdgeDictionary& dict,
                                                std::span<const VertexId> members,
                                                Interval window, int gamma) {
    if (members.size() < 2)
        throw std::invalid_argument("candidate_vertices: need at least two members");
    if (window.a > window.b)
        throw std::invalid_argument("candidate_vertices: interval start exceeds its end");
    std::map<VertexId, std::size_t> tally;
    for (const VertexId u : members) {
        for (const VertexId w : dict.neighbors(u)) {
            if (std::binary_search(members.begin(), members.end(), w)) continue;
            const auto* ts = dict.find(u, w);
            if (ts && count_in_window(*ts, window.a, window.b) >= gamma) ++tally[w];
        }
    }
    std::vector<VertexId> out;
    for (const auto& [w, hits] : tally)
        if (hits == members.size()) out.push_back(w);
    return out;
}

inline void write_network_stats(std::ostream& os, const TemporalNetwork& net, const EdgeDictionary& dict) {
    os << "network.vertices=" << net.vertices.size() << '\n'
       << "network.temporal_edges=" << net.edges.size() << '\n'
       << "network.static_edges=" << dict.size() << '\n'
       << "network.t_start=" << net.lifetime.a << '\n'
       << "network.t_end=" << net.lifetime.b << '\n'
       << "network.dt=" << net.dt << '\n';
}

} // namespace tcliques
