#include <tcliques/tcliques.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

// "7", "2,3,5", or "2:1:10" (start:step:end, both ends inclusive)
std::vector<std::int64_t> parse_value_spec(const std::string& spec) {
    std::vector<std::int64_t> values;
    const auto to_int = [](const std::string& s) {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
        return v;
    };
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (true) {
            const std::size_t colon = spec.find(':', pos);
            parts.push_back(spec.substr(pos, colon - pos));
            if (colon == std::string::npos) break;
            pos = colon + 1;
        }
        if (parts.size() != 3) throw std::invalid_argument("range spec must be start:step:end");
        const std::int64_t start = to_int(parts[0]);
        const std::int64_t step = to_int(parts[1]);
        const std::int64_t end = to_int(parts[2]);
        if (step < 1) throw std::invalid_argument("range step must be positive");
        if (start > end) throw std::invalid_argument("range start exceeds its end");
        for (std::int64_t v = start; v <= end; v += step) values.push_back(v);
    } else {
        std::size_t pos = 0;
        while (pos <= spec.size()) {
            const std::size_t comma = spec.find(',', pos);
            const std::string item = spec.substr(pos, comma - pos);
            if (item.empty()) throw std::invalid_argument("empty item in list '" + spec + "'");
            values.push_back(to_int(item));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    if (values.empty()) throw std::invalid_argument("empty value list");
    return values;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximal (delta,gamma)-clique enumeration and parameter sweeps over temporal networks"};

    std::string input;
    std::string format_name = "3col";
    std::optional<std::int64_t> dt_override;
    std::string delta_spec;
    std::string gamma_spec;
    bool emit_cliques = false;
    bool oracle_check = false;
    std::size_t oracle_max_vertices = 6;
    std::int64_t oracle_max_grid = 24;
    std::string out_dir;
    int jobs = 1;
    bool directed_as_undirected = false;
    std::optional<std::int64_t> t_start, t_end, origin;

    app.add_option("--input", input, "edge list file, one contact per line")->required();
    app.add_option("--format", format_name, "input layout: 3col (u v t) or 4col (u v w t, weight ignored)")
        ->check(CLI::IsMember({"3col", "4col"}))
        ->capture_default_str();
    app.add_option("--dt", dt_override, "grid resolution override (default: inferred by gcd)");
    app.add_option("--delta", delta_spec, "window lengths: LIST or START:STEP:END, raw time units")->required();
    app.add_option("--gamma", gamma_spec, "occurrence thresholds: LIST, START:STEP:END, or 'auto' (2,3,... until a cell is empty)")
        ->required();
    app.add_flag("--emit-cliques", emit_cliques, "write cliques_<delta>_<gamma>.jsonl per cell");
    app.add_flag("--oracle-check", oracle_check, "verify each cell against the exhaustive reference (small inputs)");
    app.add_option("--oracle-max-vertices", oracle_max_vertices, "oracle refusal bound on vertices")->capture_default_str();
    app.add_option("--oracle-max-grid", oracle_max_grid, "oracle refusal bound on grid points")->capture_default_str();
    app.add_option("--out", out_dir, "output directory for sweep.csv and jsonl files")->required();
    app.add_option("--jobs", jobs, "worker threads across delta values")->capture_default_str();
    app.add_flag("--directed-as-undirected", directed_as_undirected,
                 "fold directed contacts onto unordered pairs (always applied; flag documents intent)");
    app.add_option("--t-start", t_start, "lifetime start override (default: earliest timestamp)");
    app.add_option("--t-end", t_end, "lifetime end override (default: latest timestamp)");
    app.add_option("--origin", origin, "shift timestamps so the earliest maps to this value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "error: cannot open " << input << '\n';
            return 1;
        }

        tcliques::ParseOptions popt;
        popt.directed_as_undirected = true;
        popt.origin = origin;
        popt.dt = dt_override;
        if (t_start || t_end) {
            if (!t_start || !t_end) {
                std::cerr << "error: --t-start and --t-end must be given together\n";
                return 1;
            }
            popt.lifetime = tcliques::Interval{*t_start, *t_end};
        }

        const auto format = format_name == "3col" ? tcliques::EdgeFormat::three_column
                                                  : tcliques::EdgeFormat::four_column;
        const tcliques::ParseResult parsed = tcliques::parse_edge_stream(in, format, popt);
        parsed.report.write_key_values(std::cerr);
        tcliques::write_network_stats(std::cerr, parsed.network, tcliques::build_dictionary(parsed.network));

        tcliques::SweepConfig cfg;
        for (const std::int64_t d : parse_value_spec(delta_spec)) cfg.deltas.push_back(d);
        if (gamma_spec == "auto") {
            cfg.auto_gamma = true;
        } else {
            for (const std::int64_t g : parse_value_spec(gamma_spec)) {
                if (g < 1 || g > std::numeric_limits<int>::max())
                    throw std::invalid_argument("gamma out of range: " + std::to_string(g));
                cfg.gammas.push_back(static_cast<int>(g));
            }
        }
        cfg.emit_cliques = emit_cliques;
        cfg.oracle_check = oracle_check;
        cfg.oracle_bounds = {oracle_max_vertices, oracle_max_grid};
        cfg.out_dir = out_dir;
        cfg.jobs = jobs;

        const tcliques::SweepOutcome outcome = tcliques::run_sweep(parsed.network, cfg);
        for (const std::string& warning : outcome.warnings) std::cerr << "warning: " << warning << '\n';
        std::cerr << "sweep.rows=" << outcome.rows.size() << '\n';
        if (outcome.oracle_mismatch) {
            std::cerr << "error: oracle mismatch detected\n";
            return 2;
        }
        return 0;
    } catch (const tcliques::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
