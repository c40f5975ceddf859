#include <irr/constructions.hpp>
#include <irr/io.hpp>
#include <irr/verifier.hpp>

#include <benchmark/benchmark.h>

#include <fstream>

namespace
{
    auto corpus() -> const std::vector<std::string> &
    {
        static const auto lines = [] {
            std::vector<std::string> out;
            std::ifstream in{IRR_BENCH_DATA_DIR "/atlas_connected_order1to7.g6"};
            for (std::string line; std::getline(in, line);)
                out.push_back(line);
            return out;
        }();
        return lines;
    }

    void bm_ir_number_gn(benchmark::State & state)
    {
        auto g = irr::build_gn(static_cast<int>(state.range(0))).graph;
        for (auto _ : state)
            benchmark::DoNotOptimize(irr::ir_number(g));
    }

    void bm_all_ir_sets_gn(benchmark::State & state)
    {
        auto g = irr::build_gn(static_cast<int>(state.range(0))).graph;
        for (auto _ : state)
            benchmark::DoNotOptimize(irr::all_ir_sets(g));
    }

    void bm_build_ir_graph_gn(benchmark::State & state)
    {
        auto g = irr::build_gn(static_cast<int>(state.range(0))).graph;
        for (auto _ : state)
            benchmark::DoNotOptimize(irr::build_ir_graph(g).order());
    }

    void bm_verify_gn(benchmark::State & state)
    {
        for (auto _ : state)
            benchmark::DoNotOptimize(irr::verify_gn(static_cast<int>(state.range(0))).verdict);
    }

    void bm_scan_corpus(benchmark::State & state)
    {
        irr::ScanOptions options;
        options.targets = {{irr::ShapePattern::Kind::Path, 3}, {irr::ShapePattern::Kind::Cycle, 5}};
        options.connected_only = true;
        options.workers = static_cast<int>(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(irr::conjecture_scan(corpus(), options).scanned);
        state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * corpus().size()));
    }

    void bm_flip_sweep(benchmark::State & state)
    {
        std::vector<irr::Graph> graphs;
        for (auto & line : corpus())
            graphs.push_back(irr::parse_graph6(line));
        for (auto _ : state)
            for (auto & g : graphs)
                benchmark::DoNotOptimize(irr::check_flip_theorem(g).verdict);
        state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * graphs.size()));
    }
}

BENCHMARK(bm_ir_number_gn)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_all_ir_sets_gn)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_build_ir_graph_gn)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_verify_gn)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_scan_corpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_flip_sweep)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
