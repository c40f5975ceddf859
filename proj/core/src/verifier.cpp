#include <irr/constructions.hpp>
#include <irr/error.hpp>
#include <irr/io.hpp>
#include <irr/verifier.hpp>

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <istream>
#include <exception>
#include <mutex>
#include <thread>

namespace irr
{
    auto to_string(Verdict v) -> std::string_view
    {
        switch (v) {
            case Verdict::Skipped: return "skipped";
            case Verdict::Pass: return "pass";
            case Verdict::Fail: return "fail";
        }
        return "unknown";
    }

    auto combine(Verdict a, Verdict b) -> Verdict
    {
        return std::max(a, b);
    }

    auto Report::add_counterexample(Finding f) -> void
    {
        f.counterexample = true;
        findings.push_back(std::move(f));
        verdict = Verdict::Fail;
    }

    auto Report::add_note(Finding f) -> void
    {
        f.counterexample = false;
        findings.push_back(std::move(f));
    }

    namespace
    {
        class Stopwatch
        {
        public:
            auto elapsed_ms() const -> double
            {
                return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - _start).count();
            }

        private:
            std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();
        };

        auto graph_name(const Graph & g, std::string name) -> std::string
        {
            if (! name.empty())
                return name;
            return g.order() <= 62 ? to_graph6(g) : "graph";
        }

        auto connected(const SparseGraph & h) -> bool
        {
            if (h.order() <= 1)
                return true;
            auto dist = distances_from(h, 0);
            return std::ranges::none_of(dist, [](int d) { return d < 0; });
        }

        auto internal_edges(const Graph & g, VertexSet x) -> int
        {
            int twice = 0;
            for (int v : x)
                twice += (g.neighbours(v) & x).size();
            return twice / 2;
        }

        auto members_with_epn(const Graph & g, VertexSet x) -> int
        {
            int k = 0;
            for (int v : x)
                if (! external_private_neighbourhood(g, x, v).empty())
                    ++k;
            return k;
        }

        auto finish(Report & r, const Stopwatch & clock) -> Report
        {
            if (r.verdict != Verdict::Fail)
                r.verdict = r.scanned > 0 ? Verdict::Pass : Verdict::Skipped;
            r.elapsed_ms = clock.elapsed_ms();
            return std::move(r);
        }
    }

    auto verify_gn(int n, const VerifyOptions & options) -> Report
    {
        Stopwatch clock;
        Report r;
        r.check = "verify_gn";
        std::string name = "G_" + std::to_string(n);
        auto [g, roles] = build_gn(n);

        int ir = ir_number(g, options.build.search);
        if (ir != 2 * n + 1)
            r.add_counterexample({name, {}, "IR = " + std::to_string(ir) + ", expected " + std::to_string(2 * n + 1)});

        auto h = build_ir_graph(g, options.build);
        auto expected = expected_ir_sets_gn(n);
        if (h.nodes() != expected) {
            std::vector<VertexSet> extra, missing;
            std::ranges::set_difference(h.nodes(), expected, std::back_inserter(extra));
            std::ranges::set_difference(expected, h.nodes(), std::back_inserter(missing));
            if (! extra.empty())
                r.add_counterexample({name, extra, "IR-sets outside the closed-form census"});
            if (! missing.empty())
                r.add_counterexample({name, missing, "census sets that are not IR-sets"});
        }

        auto shape = h.shape();
        if (shape != ShapeClass{shape::DoubleStar{2 * n, 2 * n}})
            r.add_counterexample({name, {}, "IR-graph is " + to_string(shape) + ", expected DoubleStar("
                + std::to_string(2 * n) + "," + std::to_string(2 * n) + ")"});

        auto clusters = find_four_clusters(h);
        if (static_cast<int>(clusters.size()) != n)
            r.add_counterexample({name, {}, std::to_string(clusters.size()) + " 4-clusters, expected " + std::to_string(n)});
        else if (! leaves_partitioned_by_clusters(h, clusters))
            r.add_counterexample({name, {}, "4-clusters do not partition the leaves"});

        r.scanned = 1;
        if (r.verdict != Verdict::Fail) {
            for (auto & c : clusters) {
                std::vector<VertexSet> witness;
                for (int node : {c.x, c.x_prime, c.u, c.u_prime})
                    witness.push_back(h.nodes()[node]);
                r.add_note({name, witness, "4-cluster {X, X', U, U'}"});
            }
            r.add_note({name, {}, "IR = " + std::to_string(ir) + ", " + std::to_string(h.order()) + " IR-sets, "
                + to_string(shape)});
        }
        return finish(r, clock);
    }

    auto check_flip_theorem(const Graph & g, const VerifyOptions & options, std::string name) -> Report
    {
        Stopwatch clock;
        Report r;
        r.check = "flip_theorem";
        name = graph_name(g, std::move(name));

        bool truncated = false;
        for (VertexSet x : all_ir_sets(g, options.build.search)) {
            bool complete = visit_flip_partitions(g, x, options.flip_cap, [&](const EpnIsoPartition & p) {
                ++r.scanned;
                VertexSet flipped = x - p.x_epn;
                for (auto [y, y_prime] : p.epn_choice)
                    flipped.insert(y_prime);

                if (flipped.size() != x.size() || ! is_irredundant(g, flipped)) {
                    r.add_counterexample({name, {x, flipped}, "flip-set is not an IR-set"});
                    return true;
                }
                for (auto [y, y_prime] : p.epn_choice)
                    if (! external_private_neighbourhood(g, flipped, y_prime).contains(y)) {
                        r.add_counterexample({name, {x, flipped}, std::to_string(y) + " is not an external private "
                            "neighbour of " + std::to_string(y_prime) + " after the flip"});
                        break;
                    }
                return true;
            });
            truncated = truncated || ! complete;
        }
        if (truncated)
            r.add_note({name, {}, "flip enumeration truncated at the cap"});
        return finish(r, clock);
    }

    auto check_c4_lemma(const Graph & g, const VerifyOptions & options, std::string name) -> Report
    {
        Stopwatch clock;
        Report r;
        r.check = "c4_lemma";
        name = graph_name(g, std::move(name));

        auto h = build_ir_graph(g, options.build);
        if (! connected(h.structure())) {
            r.add_note({name, {}, "IR-graph disconnected; hypotheses unmet"});
            return finish(r, clock);
        }

        std::optional<VertexSet> qualifying;
        for (VertexSet x : h.nodes()) {
            int e = internal_edges(g, x);
            if (e == 1 || (e == 0 && members_with_epn(g, x) >= 2)) {
                qualifying = x;
                break;
            }
        }
        if (! qualifying) {
            r.add_note({name, {}, "no IR-set with exactly one induced edge or two members with external private "
                "neighbours"});
            return finish(r, clock);
        }

        r.scanned = 1;
        if (auto c4 = find_induced_c4(h.structure())) {
            std::vector<VertexSet> witness;
            for (int node : *c4)
                witness.push_back(h.nodes()[node]);
            r.add_note({name, witness, "induced C4 in the IR-graph"});
        }
        else
            r.add_counterexample({name, {*qualifying}, "hypothesis holds but the IR-graph has no induced C4"});
        return finish(r, clock);
    }

    auto check_diameter_lemma(const Graph & g, const VerifyOptions & options, std::string name) -> Report
    {
        Stopwatch clock;
        Report r;
        r.check = "diameter_lemma";
        name = graph_name(g, std::move(name));

        auto h = build_ir_graph(g, options.build);
        if (! connected(h.structure())) {
            r.add_note({name, {}, "IR-graph disconnected; hypotheses unmet"});
            return finish(r, clock);
        }

        int k = 0;
        VertexSet best;
        for (VertexSet x : h.nodes())
            if (int kx = members_with_epn(g, x); kx > k) {
                k = kx;
                best = x;
            }
        if (k < 3) {
            r.add_note({name, {}, "no IR-set with three or more members having external private neighbours"});
            return finish(r, clock);
        }

        r.scanned = 1;
        int diam = diameter(h.structure()).value();
        if (diam >= k)
            r.add_note({name, {best}, "diameter " + std::to_string(diam) + " >= k = " + std::to_string(k)});
        else
            r.add_counterexample({name, {best}, "diameter " + std::to_string(diam) + " < k = " + std::to_string(k)});
        return finish(r, clock);
    }

    auto check_tree_clusters(const Graph & g, const VerifyOptions & options, std::string name) -> Report
    {
        Stopwatch clock;
        Report r;
        r.check = "tree_clusters";
        name = graph_name(g, std::move(name));

        auto h = build_ir_graph(g, options.build);
        auto shape = h.shape();
        if (! std::holds_alternative<shape::DoubleStar>(shape)) {
            r.add_note({name, {}, "IR-graph is " + to_string(shape) + ", not a diameter-3 tree"});
            return finish(r, clock);
        }

        r.scanned = 1;
        auto clusters = find_four_clusters(h);
        if (leaves_partitioned_by_clusters(h, clusters))
            r.add_note({name, {}, to_string(shape) + ": leaves split into " + std::to_string(clusters.size())
                + " disjoint 4-clusters"});
        else
            r.add_counterexample({name, {}, to_string(shape) + ": leaves are not partitioned by 4-clusters ("
                + std::to_string(clusters.size()) + " found)"});
        return finish(r, clock);
    }

    auto to_json(const Report & r, bool with_timing) -> std::string
    {
        nlohmann::ordered_json out;
        out["check"] = r.check;
        out["verdict"] = to_string(r.verdict);
        auto findings = nlohmann::ordered_json::array();
        for (auto & f : r.findings) {
            auto witness = nlohmann::ordered_json::array();
            for (auto s : f.witness)
                witness.push_back(s.members());
            findings.push_back({{"graph", f.graph}, {"witness", witness}, {"message", f.message},
                {"counterexample", f.counterexample}});
        }
        out["findings"] = std::move(findings);
        out["scanned"] = r.scanned;
        if (with_timing)
            out["elapsed_ms"] = r.elapsed_ms;
        return out.dump(2) + "\n";
    }

    auto ShapePattern::to_string() const -> std::string
    {
        switch (kind) {
            case Kind::Path: return "path " + std::to_string(p);
            case Kind::Cycle: return "cycle " + std::to_string(p);
            case Kind::DoubleStar: return "double-star " + std::to_string(p) + " " + std::to_string(q);
            case Kind::TreeDiameter: return "tree-diam " + std::to_string(p);
        }
        return "?";
    }

    auto ShapePattern::target() const -> std::optional<Graph>
    {
        switch (kind) {
            case Kind::Path: return build_path(p);
            case Kind::Cycle: return build_cycle(p);
            case Kind::DoubleStar: return build_double_star(p, q);
            case Kind::TreeDiameter: return std::nullopt;
        }
        return std::nullopt;
    }

    auto ShapePattern::matches(const SparseGraph & h) const -> bool
    {
        if (kind == Kind::TreeDiameter) {
            if (h.order() == 0 || h.size() != h.order() - 1)
                return false;
            auto diam = diameter(h);
            return diam && *diam == p;
        }
        auto t = target();
        if (t->order() != h.order() || t->size() != h.size())
            return false;
        return are_isomorphic(SparseGraph{*t}, h);
    }

    auto ScanReport::audits_pass() const -> bool
    {
        return std::ranges::all_of(tree_audits, [](const TreeAudit & a) { return a.leaves_clustered; });
    }

    namespace
    {
        enum class LineOutcome
        {
            Blank,
            Malformed,
            Filtered,
            OverCap,
            Scanned
        };

        struct LineResult
        {
            LineOutcome outcome = LineOutcome::Blank;
            std::string code;
            std::string shape;
            std::string tag;
            std::vector<std::string> matched;
            std::optional<TreeAudit> audit;
        };

        auto scan_line(std::size_t line_no, const std::string & raw, const ScanOptions & options) -> LineResult
        {
            LineResult result;
            std::string code = raw;
            while (! code.empty() && std::isspace(static_cast<unsigned char>(code.back())))
                code.pop_back();
            while (! code.empty() && std::isspace(static_cast<unsigned char>(code.front())))
                code.erase(code.begin());
            if (code.empty())
                return result;
            result.code = code;

            Graph g;
            try {
                g = parse_graph6(code);
            }
            catch (const Error &) {
                result.outcome = LineOutcome::Malformed;
                return result;
            }
            if (options.connected_only && ! is_connected(g)) {
                result.outcome = LineOutcome::Filtered;
                return result;
            }

            try {
                auto h = build_ir_graph(g, options.build);
                auto shape = h.shape();
                result.outcome = LineOutcome::Scanned;
                result.shape = to_string(shape);
                result.tag = shape_tag(shape);
                for (auto & pattern : options.targets)
                    if (pattern.matches(h.structure()))
                        result.matched.push_back(pattern.to_string());
                if (std::holds_alternative<shape::DoubleStar>(shape)) {
                    auto clusters = find_four_clusters(h);
                    result.audit = TreeAudit{line_no, code, result.shape, clusters.size(),
                        leaves_partitioned_by_clusters(h, clusters)};
                }
            }
            catch (const Error & e) {
                if (e.code() != ErrorCode::TooManyIRSets)
                    throw;
                result.outcome = LineOutcome::OverCap;
            }
            return result;
        }
    }

    auto conjecture_scan(const std::vector<std::string> & lines, const ScanOptions & options) -> ScanReport
    {
        Stopwatch clock;
        std::vector<LineResult> results(lines.size());
        auto work = [&](std::size_t i) { results[i] = scan_line(i + 1, lines[i], options); };

        if (options.workers <= 1)
            for (std::size_t i = 0; i < lines.size(); ++i)
                work(i);
        else {
            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            std::vector<std::thread> pool;
            for (int t = 0; t < options.workers; ++t)
                pool.emplace_back([&] {
                    try {
                        for (std::size_t i = next++; i < lines.size(); i = next++)
                            work(i);
                    }
                    catch (...) {
                        std::lock_guard lock{failure_mutex};
                        if (! failure)
                            failure = std::current_exception();
                        next = lines.size();
                    }
                });
            for (auto & t : pool)
                t.join();
            if (failure)
                std::rethrow_exception(failure);
        }

        ScanReport report;
        for (std::size_t i = 0; i < results.size(); ++i) {
            auto & res = results[i];
            switch (res.outcome) {
                case LineOutcome::Blank: break;
                case LineOutcome::Malformed: ++report.errors; break;
                case LineOutcome::Filtered: ++report.filtered; break;
                case LineOutcome::OverCap: ++report.over_cap; break;
                case LineOutcome::Scanned:
                    ++report.scanned;
                    ++report.tally[res.tag];
                    for (auto & pattern : res.matched)
                        report.matches.push_back({i + 1, res.code, pattern, res.shape});
                    if (res.audit)
                        report.tree_audits.push_back(*res.audit);
                    break;
            }
        }
        report.elapsed_ms = clock.elapsed_ms();
        return report;
    }

    auto conjecture_scan(std::istream & in, const ScanOptions & options) -> ScanReport
    {
        std::vector<std::string> lines;
        for (std::string line; std::getline(in, line);)
            lines.push_back(std::move(line));
        return conjecture_scan(lines, options);
    }

    auto to_json(const ScanReport & r, bool with_timing) -> std::string
    {
        nlohmann::ordered_json out;
        out["scanned"] = r.scanned;
        out["filtered"] = r.filtered;
        out["errors"] = r.errors;
        out["over_cap"] = r.over_cap;
        auto matches = nlohmann::ordered_json::array();
        for (auto & m : r.matches)
            matches.push_back({{"line", m.line}, {"graph6", m.graph6}, {"pattern", m.pattern}, {"shape", m.shape}});
        out["matches"] = std::move(matches);
        nlohmann::ordered_json tally = nlohmann::ordered_json::object();
        for (auto & [tag, count] : r.tally)
            tally[tag] = count;
        out["tally"] = std::move(tally);
        auto audits = nlohmann::ordered_json::array();
        for (auto & a : r.tree_audits)
            audits.push_back({{"line", a.line}, {"graph6", a.graph6}, {"shape", a.shape}, {"clusters", a.clusters},
                {"leaves_clustered", a.leaves_clustered}});
        out["tree_audits"] = std::move(audits);
        if (with_timing)
            out["elapsed_ms"] = r.elapsed_ms;
        return out.dump(2) + "\n";
    }
}
