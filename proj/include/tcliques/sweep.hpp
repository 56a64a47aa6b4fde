#pragma once

#include "tcliques/enumerator.hpp"
#include "tcliques/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace tcliques {

enum class MaximumMode { temporal, cardinal };

/// All cliques attaining the maximum duration (temporal mode) or maximum
/// cardinality (cardinal mode); ties are all returned, input order kept.
inline std::vector<Clique> select_maximum(std::span<const Clique> cliques, MaximumMode mode) {
    std::vector<Clique> out;
    if (cliques.empty()) return out;
    if (mode == MaximumMode::temporal) {
        TimeStamp best = cliques.front().duration();
        for (const Clique& c : cliques) best = std::max(best, c.duration());
        for (const Clique& c : cliques)
            if (c.duration() == best) out.push_back(c);
    } else {
        std::size_t best = cliques.front().cardinality();
        for (const Clique& c : cliques) best = std::max(best, c.cardinality());
        for (const Clique& c : cliques)
            if (c.cardinality() == best) out.push_back(c);
    }
    return out;
}

struct SweepRow {
    TimeStamp delta = 0;
    int gamma = 0;
    std::uint64_t maximal_count = 0;
    TimeStamp max_duration = 0;       // raw time units, 0 when the cell is empty
    std::uint64_t max_cardinality = 0;
    std::uint64_t iterations = 0;
    std::uint64_t seed_count = 0;
    std::int64_t wall_ms = 0;
};

struct SweepConfig {
    std::vector<TimeStamp> deltas; // raw time units, validated against dt
    std::vector<int> gammas;       // ignored in auto mode
    bool auto_gamma = false;       // start at 2, step 1, stop after the first empty cell
    bool emit_cliques = false;
    bool oracle_check = false;
    OracleBounds oracle_bounds{};
    std::filesystem::path out_dir;
    int jobs = 1;
};

struct SweepOutcome {
    std::vector<SweepRow> rows;
    bool oracle_mismatch = false;
    std::vector<std::string> warnings;
};

namespace detail {

struct CellOutcome {
    SweepRow row;
    std::vector<Clique> cliques;
    std::vector<std::string> warnings;
    bool oracle_mismatch = false;
};

inline std::string cell_label(TimeStamp delta, int gamma) {
    return "delta=" + std::to_string(delta) + " gamma=" + std::to_string(gamma);
}

inline CellOutcome run_cell(const TemporalNetwork& net, const EdgeDictionary& dict,
                            const SweepConfig& cfg, TimeStamp delta, int gamma) {
    const Parameters p{delta, gamma, net.dt};
    EnumerationResult res = enumerate_maximal(net, dict, p);

    CellOutcome cell;
    cell.row.delta = delta;
    cell.row.gamma = gamma;
    cell.row.maximal_count = res.maximal.size();
    if (!res.maximal.empty()) {
        cell.row.max_duration = select_maximum(res.maximal, MaximumMode::temporal).front().duration();
        cell.row.max_cardinality = select_maximum(res.maximal, MaximumMode::cardinal).front().cardinality();
    }
    cell.row.iterations = res.stats.iterations;
    cell.row.seed_count = res.stats.seeds;
    cell.row.wall_ms = std::llround(res.stats.wall_seconds * 1000.0);
    if (!res.stats.note.empty())
        cell.warnings.push_back("cell " + cell_label(delta, gamma) + ": " + res.stats.note);

    if (cfg.oracle_check) {
        try {
            const std::vector<Clique> expected = brute_force_maximal(net, p, cfg.oracle_bounds);
            if (expected != res.maximal) {
                cell.oracle_mismatch = true;
                cell.warnings.push_back("oracle mismatch at " + cell_label(delta, gamma) + ": enumerator found " +
                                        std::to_string(res.maximal.size()) + " cliques, oracle found " +
                                        std::to_string(expected.size()));
            }
        } catch (const OracleBoundsError& e) {
            cell.warnings.push_back("cell " + cell_label(delta, gamma) + ": " + e.what());
        }
    }

    cell.cliques = std::move(res.maximal);
    return cell;
}

inline void write_cliques_file(const std::filesystem::path& path, std::vector<Clique> cliques) {
    std::sort(cliques.begin(), cliques.end(), [](const Clique& lhs, const Clique& rhs) {
        if (lhs.interval.a != rhs.interval.a) return lhs.interval.a < rhs.interval.a;
        if (lhs.interval.b != rhs.interval.b) return lhs.interval.b < rhs.interval.b;
        return lhs.members < rhs.members;
    });
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const Clique& c : cliques) {
        out << "{\"vertices\":[";
        for (std::size_t i = 0; i < c.members.size(); ++i) {
            if (i > 0) out << ',';
            out << c.members[i];
        }
        out << "],\"t_a\":" << c.interval.a << ",\"t_b\":" << c.interval.b << "}\n";
    }
}

inline void write_csv_row(std::ostream& os, const SweepRow& r) {
    os << r.delta << ',' << r.gamma << ',' << r.maximal_count << ',' << r.max_duration << ','
       << r.max_cardinality << ',' << r.iterations << ',' << r.seed_count << ',' << r.wall_ms << '\n';
}

} // namespace detail

constexpr const char* kSweepCsvHeader = "delta,gamma,maximal_count,max_duration,max_cardinality,iterations,seed_count,wall_ms";

/// Run every (delta, gamma) cell in deterministic grid order and write
/// sweep.csv (plus per-cell jsonl files when requested) under cfg.out_dir.
/// Delta groups may execute concurrently; a single writer emits rows and
/// files in grid order regardless of completion order.
inline SweepOutcome run_sweep(const TemporalNetwork& net, const SweepConfig& cfg) {
    if (cfg.deltas.empty()) throw std::invalid_argument("run_sweep: no delta values");
    for (const TimeStamp d : cfg.deltas) {
        if (d < net.dt) throw std::invalid_argument("run_sweep: delta " + std::to_string(d) +
                                                    " is below dt " + std::to_string(net.dt));
        if (d % net.dt != 0) throw std::invalid_argument("run_sweep: delta " + std::to_string(d) +
                                                         " is not a multiple of dt " + std::to_string(net.dt));
    }
    if (!cfg.auto_gamma) {
        if (cfg.gammas.empty()) throw std::invalid_argument("run_sweep: no gamma values");
        for (const int g : cfg.gammas)
            if (g < 1) throw std::invalid_argument("run_sweep: gamma must be positive");
    }
    if (cfg.jobs < 1) throw std::invalid_argument("run_sweep: jobs must be positive");

    // the output sink must be usable before any enumeration starts
    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream csv(cfg.out_dir / "sweep.csv", std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + (cfg.out_dir / "sweep.csv").string());
    csv << kSweepCsvHeader << '\n';

    const EdgeDictionary dict = build_dictionary(net);

    struct Group {
        std::vector<detail::CellOutcome> cells;
        std::exception_ptr error;
        bool done = false;
    };
    std::vector<Group> groups(cfg.deltas.size());
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};

    const auto worker = [&] {
        while (true) {
            const std::size_t gi = next.fetch_add(1);
            if (gi >= cfg.deltas.size()) return;
            const TimeStamp delta = cfg.deltas[gi];
            std::vector<detail::CellOutcome> cells;
            std::exception_ptr error;
            try {
                if (cfg.auto_gamma) {
                    for (int gamma = 2;; ++gamma) {
                        cells.push_back(detail::run_cell(net, dict, cfg, delta, gamma));
                        if (cells.back().row.maximal_count == 0) break;
                    }
                } else {
                    for (const int gamma : cfg.gammas)
                        cells.push_back(detail::run_cell(net, dict, cfg, delta, gamma));
                }
            } catch (...) {
                error = std::current_exception();
            }
            {
                const std::lock_guard lock(mutex);
                groups[gi].cells = std::move(cells);
                groups[gi].error = error;
                groups[gi].done = true;
            }
            ready.notify_all();
        }
    };

    {
        std::vector<std::jthread> pool;
        const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), cfg.deltas.size());
        pool.reserve(nthreads);
        for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);

        SweepOutcome outcome;
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return groups[gi].done; });
            Group group = std::move(groups[gi]);
            lock.unlock();
            if (group.error) std::rethrow_exception(group.error);
            for (detail::CellOutcome& cell : group.cells) {
                detail::write_csv_row(csv, cell.row);
                csv.flush();
                if (cfg.emit_cliques) {
                    const std::string name = "cliques_" + std::to_string(cell.row.delta) + "_" +
                                             std::to_string(cell.row.gamma) + ".jsonl";
                    detail::write_cliques_file(cfg.out_dir / name, std::move(cell.cliques));
                }
                outcome.rows.push_back(cell.row);
                outcome.oracle_mismatch = outcome.oracle_mismatch || cell.oracle_mismatch;
                outcome.warnings.insert(outcome.warnings.end(), cell.warnings.begin(), cell.warnings.end());
            }
        }
        return outcome;
    }
}

} // namespace tcliques
