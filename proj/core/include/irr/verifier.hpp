#ifndef IRR_VERIFIER_HPP
#define IRR_VERIFIER_HPP

#include <irr/reconfig.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace irr
{
    enum class Verdict
    {
        Skipped,
        Pass,
        Fail
    };

    auto to_string(Verdict v) -> std::string_view;

    /// fail > pass > skipped
    auto combine(Verdict a, Verdict b) -> Verdict;

    struct Finding
    {
        /// graph6 code or construction name
        std::string graph;
        std::vector<VertexSet> witness;
        std::string message;
        bool counterexample = false;
    };

    /// Outcome of one check. verdict == Fail exactly when some finding is a counterexample.
    struct Report
    {
        std::string check;
        Verdict verdict = Verdict::Skipped;
        std::vector<Finding> findings;
        std::size_t scanned = 0;
        double elapsed_ms = 0.0;

        auto add_counterexample(Finding f) -> void;
        auto add_note(Finding f) -> void;
    };

    struct VerifyOptions
    {
        BuildOptions build{};
        std::size_t flip_cap = 10'000;
    };

    /**
     * IR(G_n) = 2n+1, the IR-sets equal the closed-form census, the IR-graph
     * is DoubleStar(2n,2n) and exactly n 4-clusters exist.
     */
    auto verify_gn(int n, const VerifyOptions & options = {}) -> Report;

    /**
     * Every flip-set of every IR-set is an IR-set, and each flipped-out
     * vertex is an external private neighbour of its replacement.
     */
    auto check_flip_theorem(const Graph & g, const VerifyOptions & options = {}, std::string name = {}) -> Report;

    /**
     * Connected IR-graph plus an IR-set with exactly one induced edge, or an
     * independent IR-set with two members having external private
     * neighbours, implies an induced C4 in the IR-graph. Skipped when the
     * hypotheses fail.
     */
    auto check_c4_lemma(const Graph & g, const VerifyOptions & options = {}, std::string name = {}) -> Report;

    /**
     * An IR-set with k >= 3 members that have external private neighbours
     * forces diameter >= k on a connected IR-graph. Skipped when no IR-set
     * qualifies or the IR-graph is disconnected.
     */
    auto check_diameter_lemma(const Graph & g, const VerifyOptions & options = {}, std::string name = {}) -> Report;

    /// Leaves of a diameter-3 IR-tree fall into disjoint 4-clusters. Skipped for other IR-graphs.
    auto check_tree_clusters(const Graph & g, const VerifyOptions & options = {}, std::string name = {}) -> Report;

    /// {check, verdict, findings:[{graph, witness, message}], scanned, elapsed_ms}
    auto to_json(const Report & r, bool with_timing = true) -> std::string;

    /// A target shape for scans: matched up to isomorphism, or by tree diameter.
    struct ShapePattern
    {
        enum class Kind
        {
            Path,
            Cycle,
            DoubleStar,
            TreeDiameter
        };

        Kind kind;
        int p = 0;
        int q = 0;

        /// "path 3", "cycle 5", "double-star 2 2", "tree-diam 3"
        auto to_string() const -> std::string;
        /// The graph to compare against; nullopt for TreeDiameter.
        auto target() const -> std::optional<Graph>;
        auto matches(const SparseGraph & h) const -> bool;
    };

    struct ScanOptions
    {
        std::vector<ShapePattern> targets;
        bool connected_only = false;
        BuildOptions build{.search = {}, .max_nodes = 5'000};
        int workers = 1;
    };

    struct ScanMatch
    {
        std::size_t line;
        std::string graph6;
        std::string pattern;
        std::string shape;
    };

    struct TreeAudit
    {
        std::size_t line;
        std::string graph6;
        std::string shape;
        std::size_t clusters;
        bool leaves_clustered;
    };

    struct ScanReport
    {
        std::size_t scanned = 0;
        std::size_t filtered = 0;
        std::size_t errors = 0;
        std::size_t over_cap = 0;
        std::vector<ScanMatch> matches;
        /// classify_shape tag of each scanned IR-graph -> count
        std::map<std::string, std::size_t> tally;
        /// every diameter-3 IR-tree met during the scan
        std::vector<TreeAudit> tree_audits;
        double elapsed_ms = 0.0;

        auto audits_pass() const -> bool;
    };

    /**
     * Builds the IR-graph of each graph6 line, classifies it and records
     * matches against the targets. Malformed lines are counted and skipped;
     * blank lines are ignored. Evidence only, never proof.
     */
    auto conjecture_scan(std::istream & lines, const ScanOptions & options) -> ScanReport;
    auto conjecture_scan(const std::vector<std::string> & lines, const ScanOptions & options) -> ScanReport;

    auto to_json(const ScanReport & r, bool with_timing = true) -> std::string;
}

#endif
