#include "cli.hpp"

#include <irr/constructions.hpp>
#include <irr/error.hpp>
#include <irr/io.hpp>
#include <irr/verifier.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

namespace irr::cli
{
    namespace
    {
        struct UsageError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        struct Config
        {
            int workers = 1;
            std::size_t ir_cap = 0;
            std::size_t flip_cap = 10'000;
            std::string input_format = "auto";
            std::string format = "auto";
            bool deterministic = false;

            auto build_options(std::size_t default_cap) const -> BuildOptions
            {
                return {.search = {.workers = workers}, .max_nodes = ir_cap ? ir_cap : default_cap};
            }

            auto verify_options() const -> VerifyOptions
            {
                return {.build = build_options(BuildOptions{}.max_nodes), .flip_cap = flip_cap};
            }

            /// The selected output format, or `fallback` for "auto". Throws UsageError if not in `allowed`.
            auto output_format(std::string_view fallback, std::initializer_list<std::string_view> allowed) const
                -> std::string
            {
                std::string f = format == "auto" ? std::string{fallback} : format;
                if (std::ranges::find(allowed, f) == allowed.end()) {
                    std::string list;
                    for (auto a : allowed)
                        list += (list.empty() ? "" : ", ") + std::string{a};
                    throw UsageError{"--format " + f + " is not available here (choose " + list + ")"};
                }
                return f;
            }
        };

        struct NamedGraph
        {
            std::string name;
            Graph graph;
        };

        auto trim(std::string_view s) -> std::string_view
        {
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }

        auto read_all(const std::string & path, std::istream & in) -> std::string
        {
            if (path == "-")
                return {std::istreambuf_iterator<char>{in}, {}};
            std::ifstream file{path, std::ios::binary};
            if (! file)
                throw UsageError{"cannot open '" + path + "'"};
            return {std::istreambuf_iterator<char>{file}, {}};
        }

        auto is_graph6_input(const std::string & path, const std::string & text, const std::string & format) -> bool
        {
            if (format != "auto")
                return format == "graph6";
            if (path.size() >= 3 && path.ends_with(".g6"))
                return true;
            std::istringstream lines{text};
            for (std::string line; std::getline(lines, line);)
                if (auto t = trim(line); ! t.empty())
                    return looks_like_graph6(t);
            return false;
        }

        auto load_graphs(const std::string & path, std::istream & in, const Config & cfg) -> std::vector<NamedGraph>
        {
            auto text = read_all(path, in);
            std::vector<NamedGraph> graphs;
            if (is_graph6_input(path, text, cfg.input_format)) {
                std::istringstream lines{text};
                std::size_t line_no = 0;
                for (std::string line; std::getline(lines, line);) {
                    ++line_no;
                    auto code = trim(line);
                    if (code.empty())
                        continue;
                    try {
                        graphs.push_back({std::string{code}, parse_graph6(code)});
                    }
                    catch (const Error & e) {
                        throw Error{e.code(), path + ":" + std::to_string(line_no) + ": " + e.what()};
                    }
                }
            }
            else
                graphs.push_back({path == "-" ? std::string{"<stdin>"} : path, parse_edge_list(text)});
            if (graphs.empty())
                throw UsageError{"no graph in '" + path + "'"};
            return graphs;
        }

        auto load_one(const std::string & path, std::istream & in, const Config & cfg) -> Graph
        {
            auto graphs = load_graphs(path, in, cfg);
            if (graphs.size() != 1)
                throw UsageError{"expected one graph in '" + path + "', found " + std::to_string(graphs.size())};
            return std::move(graphs.front().graph);
        }

        auto write_file(const std::string & path, const std::string & content) -> void
        {
            std::ofstream file{path, std::ios::binary};
            if (! file || ! (file << content))
                throw UsageError{"cannot write '" + path + "'"};
        }

        auto set_labels(const std::vector<VertexSet> & sets) -> std::vector<std::string>
        {
            std::vector<std::string> labels;
            for (auto s : sets)
                labels.push_back(s.to_string());
            return labels;
        }

        auto report_text(const Report & r) -> std::string
        {
            std::ostringstream out;
            out << r.check << ": " << to_string(r.verdict) << " (scanned " << r.scanned << ")\n";
            for (auto & f : r.findings) {
                out << (f.counterexample ? "  counterexample " : "  note ") << f.graph << ": " << f.message;
                for (auto s : f.witness)
                    out << ' ' << s.to_string();
                out << '\n';
            }
            return out.str();
        }

        auto emit_report(const Report & r, const Config & cfg, std::ostream & out) -> int
        {
            auto format = cfg.output_format("json", {"json", "text"});
            out << (format == "json" ? to_json(r, ! cfg.deterministic) : report_text(r));
            return r.verdict == Verdict::Fail ? exit_failed : exit_ok;
        }

        /// One report over several graphs: findings concatenated, verdicts combined.
        auto merge(Report & total, Report part) -> void
        {
            if (total.check.empty())
                total.check = part.check;
            total.verdict = combine(total.verdict, part.verdict);
            total.scanned += part.scanned;
            total.elapsed_ms += part.elapsed_ms;
            std::ranges::move(part.findings, std::back_inserter(total.findings));
        }

        auto parse_int(const std::string & token, const std::string & what) -> int
        {
            try {
                std::size_t used = 0;
                int value = std::stoi(token, &used);
                if (used == token.size())
                    return value;
            }
            catch (const std::exception &) {
            }
            throw UsageError{what + " expects an integer, got '" + token + "'"};
        }

        auto parse_pattern(const std::vector<std::string> & tokens) -> ShapePattern
        {
            using Kind = ShapePattern::Kind;
            auto arity = [&](std::size_t n) {
                if (tokens.size() != n + 1)
                    throw UsageError{"--shape " + tokens.front() + " takes " + std::to_string(n) + " number(s)"};
            };
            auto positive = [&](std::size_t i, int low) {
                int v = parse_int(tokens[i], "--shape " + tokens.front());
                if (v < low)
                    throw UsageError{"--shape " + tokens.front() + " needs values >= " + std::to_string(low)};
                return v;
            };
            auto & kind = tokens.front();
            if (kind == "path") {
                arity(1);
                return {Kind::Path, positive(1, 1), 0};
            }
            if (kind == "cycle") {
                arity(1);
                return {Kind::Cycle, positive(1, 3), 0};
            }
            if (kind == "double-star") {
                arity(2);
                return {Kind::DoubleStar, positive(1, 1), positive(2, 1)};
            }
            if (kind == "tree-diam") {
                arity(1);
                return {Kind::TreeDiameter, positive(1, 0), 0};
            }
            throw UsageError{"unknown --shape '" + kind + "' (path K, cycle K, double-star A B, tree-diam D)"};
        }

        auto construction_json(const std::string & name, const Graph & g, const std::vector<std::string> & labels)
            -> std::string
        {
            nlohmann::ordered_json j;
            j["name"] = name;
            j["order"] = g.order();
            auto edges = nlohmann::ordered_json::array();
            for (auto [u, v] : g.edges())
                edges.push_back({u, v});
            j["edges"] = std::move(edges);
            if (! labels.empty())
                j["labels"] = labels;
            return j.dump(2) + "\n";
        }

        auto emit_construction(const std::string & name, const Graph & g, const std::vector<std::string> & labels,
            const Config & cfg, std::ostream & out) -> int
        {
            auto format = cfg.output_format("edge-list", {"edge-list", "graph6", "dot", "json"});
            if (format == "edge-list")
                out << to_edge_list(g);
            else if (format == "graph6")
                out << to_graph6(g) << '\n';
            else if (format == "dot")
                out << export_dot(g, labels);
            else
                out << construction_json(name, g, labels);
            return exit_ok;
        }

        auto ir_graph_text(const IRGraph & h) -> std::string
        {
            std::ostringstream out;
            out << "ir " << (h.nodes().empty() ? 0 : h.nodes().front().size()) << '\n'
                << "nodes " << h.order() << '\n'
                << "edges " << h.edges().size() << '\n'
                << "shape " << to_string(h.shape()) << '\n';
            for (int i = 0; i < h.order(); ++i)
                out << "node " << i << ' ' << h.nodes()[i].to_string() << '\n';
            for (auto & e : h.edges())
                out << "edge " << e.a << ' ' << e.b << " swap " << e.swap.out << ' ' << e.swap.in << '\n';
            return out.str();
        }

        /// Subcommand bodies, bound after parsing.
        struct Commands
        {
            Config cfg;
            std::string input;
            std::string dot_file;
            std::string json_file;
            int n = 0;
            int star_a = 0;
            int star_b = 0;
            std::vector<std::vector<std::string>> shapes;
            bool connected_only = false;
            bool fail_on_match = false;
            std::string scan_input = "-";
        };
    }

    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        Commands c;
        auto & cfg = c.cfg;
        std::function<int ()> action;

        CLI::App app{"Upper irredundance, IR-sets and IR-graphs of small graphs.", "ir"};
        app.require_subcommand(1);
        app.fallthrough();
        auto * workers = app.add_option("--workers", cfg.workers, "Worker threads (default: env IR_WORKERS, else 1)")
            ->check(CLI::Range(1, 1024));
        app.add_option("--ir-cap", cfg.ir_cap, "Give up on IR-graphs with more nodes than this")
            ->check(CLI::PositiveNumber);
        app.add_option("--flip-cap", cfg.flip_cap, "Partitions tried per IR-set in flip checks")
            ->check(CLI::PositiveNumber);
        app.add_option("--input-format", cfg.input_format, "auto, edge-list or graph6")
            ->check(CLI::IsMember({"auto", "edge-list", "graph6"}));
        app.add_option("--format", cfg.format, "Output: text, json, dot, graph6 or edge-list (per command)")
            ->check(CLI::IsMember({"auto", "text", "json", "dot", "graph6", "edge-list"}));
        app.add_flag("--deterministic", cfg.deterministic, "Omit timing fields");

        auto * number = app.add_subcommand("number", "Print IR(G)");
        number->add_option("input", c.input, "Graph file, '-' for stdin")->required();
        number->callback([&] {
            action = [&] {
                auto g = load_one(c.input, in, cfg);
                int ir = ir_number(g, {.workers = cfg.workers});
                if (cfg.output_format("text", {"text", "json"}) == "json")
                    out << nlohmann::ordered_json{{"order", g.order()}, {"ir", ir}}.dump(2) << '\n';
                else
                    out << ir << '\n';
                return exit_ok;
            };
        });

        auto * sets = app.add_subcommand("sets", "List the IR-sets");
        sets->add_option("input", c.input, "Graph file, '-' for stdin")->required();
        sets->callback([&] {
            action = [&] {
                auto g = load_one(c.input, in, cfg);
                auto found = all_ir_sets(g, {.workers = cfg.workers});
                if (cfg.output_format("text", {"text", "json"}) == "json") {
                    auto list = nlohmann::ordered_json::array();
                    for (auto s : found)
                        list.push_back(s.members());
                    nlohmann::ordered_json j;
                    j["ir"] = found.empty() ? 0 : found.front().size();
                    j["sets"] = std::move(list);
                    out << j.dump(2) << '\n';
                }
                else
                    for (auto s : found)
                        out << s.to_string() << '\n';
                return exit_ok;
            };
        });

        auto * graph = app.add_subcommand("graph", "Build the IR-graph");
        graph->add_option("input", c.input, "Graph file, '-' for stdin")->required();
        graph->add_option("--dot", c.dot_file, "Also write DOT here");
        graph->add_option("--json", c.json_file, "Also write JSON here");
        graph->callback([&] {
            action = [&] {
                auto g = load_one(c.input, in, cfg);
                auto format = cfg.output_format("text", {"text", "json", "dot"});
                auto h = build_ir_graph(g, cfg.build_options(BuildOptions{}.max_nodes));
                auto dot = [&] { return export_dot(h.structure(), set_labels(h.nodes())); };
                if (! c.dot_file.empty())
                    write_file(c.dot_file, dot());
                if (! c.json_file.empty())
                    write_file(c.json_file, to_json(h));
                out << (format == "json" ? to_json(h) : format == "dot" ? dot() : ir_graph_text(h));
                return exit_ok;
            };
        });

        auto * construct = app.add_subcommand("construct", "Emit a named construction");
        construct->require_subcommand(1);
        auto * c_gn = construct->add_subcommand("gn", "The graph G_n");
        c_gn->add_option("--n", c.n, "n >= 1")->required();
        c_gn->callback([&] {
            action = [&] {
                auto [g, roles] = build_gn(c.n);
                return emit_construction("G_" + std::to_string(c.n), g, roles.labels(), cfg, out);
            };
        });
        auto * c_gprime = construct->add_subcommand("gprime", "The six-vertex graph G'");
        c_gprime->callback([&] {
            action = [&] {
                auto [g, roles] = build_gprime();
                return emit_construction("G'", g, roles.labels(), cfg, out);
            };
        });
        auto * c_star = construct->add_subcommand("double-star", "The double star S(A,B)");
        c_star->add_option("A", c.star_a)->required();
        c_star->add_option("B", c.star_b)->required();
        c_star->callback([&] {
            action = [&] {
                auto g = build_double_star(c.star_a, c.star_b);
                auto name = "S(" + std::to_string(c.star_a) + "," + std::to_string(c.star_b) + ")";
                return emit_construction(name, g, {}, cfg, out);
            };
        });

        auto * verify = app.add_subcommand("verify", "Run a check and print its report");
        verify->require_subcommand(1);
        auto * v_gn = verify->add_subcommand("gn", "Reproduce G_n");
        v_gn->add_option("--n", c.n, "n >= 1")->required();
        v_gn->callback([&] {
            action = [&] { return emit_report(verify_gn(c.n, cfg.verify_options()), cfg, out); };
        });
        using Check = Report (*)(const Graph &, const VerifyOptions &, std::string);
        auto per_graph = [&](CLI::App * sub, Check check) {
            sub->add_option("input", c.input, "Graph file (one edge list or graph6 lines), '-' for stdin")
                ->required();
            sub->callback([&, check] {
                action = [&, check] {
                    Report total;
                    for (auto & [name, g] : load_graphs(c.input, in, cfg))
                        merge(total, check(g, cfg.verify_options(), name));
                    return emit_report(total, cfg, out);
                };
            });
        };
        per_graph(verify->add_subcommand("flip", "Every flip-set of every IR-set is an IR-set"), check_flip_theorem);
        per_graph(verify->add_subcommand("c4", "Induced 4-cycles forced in the IR-graph"), check_c4_lemma);
        per_graph(verify->add_subcommand("diam", "IR-graph diameter lower bound"), check_diameter_lemma);
        per_graph(verify->add_subcommand("clusters", "Leaves of diameter-3 IR-trees form 4-clusters"),
            check_tree_clusters);

        auto * scan = app.add_subcommand("scan", "Classify the IR-graph of every graph6 line on stdin");
        scan->add_option("--shape", c.shapes, "path K | cycle K | double-star A B | tree-diam D (repeatable)")
            ->expected(2, 3)
            ->allow_extra_args();
        scan->add_flag("--connected-only", c.connected_only, "Skip disconnected inputs");
        scan->add_flag("--fail-on-match", c.fail_on_match, "Exit 1 when any target shape is found");
        scan->add_option("--input", c.scan_input, "Read graph6 from this file instead of stdin");
        scan->callback([&] {
            action = [&] {
                ScanOptions options;
                for (auto & tokens : c.shapes)
                    options.targets.push_back(parse_pattern(tokens));
                options.connected_only = c.connected_only;
                options.build = cfg.build_options(ScanOptions{}.build.max_nodes);
                options.build.search.workers = 1;
                options.workers = cfg.workers;
                auto format = cfg.output_format("json", {"json", "text"});

                ScanReport report;
                if (c.scan_input == "-")
                    report = conjecture_scan(in, options);
                else {
                    std::ifstream file{c.scan_input};
                    if (! file)
                        throw UsageError{"cannot open '" + c.scan_input + "'"};
                    report = conjecture_scan(file, options);
                }

                if (format == "json")
                    out << to_json(report, ! cfg.deterministic);
                else {
                    out << "scanned " << report.scanned << " filtered " << report.filtered << " errors "
                        << report.errors << " over_cap " << report.over_cap << '\n';
                    for (auto & [tag, count] : report.tally)
                        out << "tally " << tag << ' ' << count << '\n';
                    for (auto & m : report.matches)
                        out << "match " << m.line << ' ' << m.graph6 << ' ' << m.pattern << ' ' << m.shape << '\n';
                    for (auto & a : report.tree_audits)
                        out << "audit " << a.line << ' ' << a.graph6 << " clusters " << a.clusters
                            << (a.leaves_clustered ? " ok" : " FAILED") << '\n';
                }
                if (! report.audits_pass()) {
                    err << "ir: a diameter-3 IR-tree has leaves outside its 4-clusters\n";
                    return exit_failed;
                }
                return c.fail_on_match && ! report.matches.empty() ? exit_failed : exit_ok;
            };
        });

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            if (app.remaining_size(true) > 0) {
                err << "ir: error: unrecognised argument '" << app.remaining(true).front() << "'\n";
                return exit_usage;
            }
            app.exit(CLI::CallForHelp{}, out, err);
            return exit_ok;
        }
        catch (const CLI::CallForAllHelp &) {
            out << app.help("", CLI::AppFormatMode::All);
            return exit_ok;
        }
        catch (const CLI::ParseError & e) {
            err << "ir: error: " << e.what() << '\n';
            return exit_usage;
        }

        try {
            // CLI11 quietly drops environment values that fail validation; a bad IR_WORKERS is a usage error here
            if (workers->count() == 0)
                if (const char * env = std::getenv("IR_WORKERS"); env && *env) {
                    cfg.workers = parse_int(env, "IR_WORKERS");
                    if (cfg.workers < 1 || cfg.workers > 1024)
                        throw UsageError{"IR_WORKERS must be in 1..1024"};
                }
            return action ? action() : exit_usage;
        }
        catch (const UsageError & e) {
            err << "ir: error: " << e.what() << '\n';
        }
        catch (const Error & e) {
            err << "ir: error: " << e.what() << '\n';
        }
        catch (const std::exception & e) {
            err << "ir: error: " << e.what() << '\n';
        }
        return exit_usage;
    }
}
