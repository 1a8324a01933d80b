#include <benchmark/benchmark.h>

#include "opencat/coherence.hpp"
#include "opencat/harness/corpus.hpp"
#include "opencat/harness/fixtures.hpp"
#include "opencat/harness/generate.hpp"
#include "opencat/harness/serialize.hpp"

using namespace opencat;
using namespace opencat::harness;

namespace {

// Chain of generated open functors c0 -o c1 -o ... with fibers up to max_fiber.
std::vector<OpenFunctor> chain(std::size_t length, std::size_t max_fiber, std::uint64_t seed)
{
    GenParams p;
    p.seed = seed;
    p.max_fiber = max_fiber;
    std::vector<CategoryRef> cats;
    for (std::size_t i = 0; i <= length; ++i) {
        p.seed = derive_seed(seed, i);
        cats.push_back(gen_category(p));
    }
    std::vector<OpenFunctor> fs;
    for (std::size_t i = 0; i < length; ++i) {
        p.seed = derive_seed(seed, 100 + i);
        fs.push_back(gen_open_functor(p, cats[i], cats[i + 1]));
    }
    return fs;
}

void BM_compose_open(benchmark::State& state)
{
    auto fs = chain(2, static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(compose_open(fs[1], fs[0]));
}
BENCHMARK(BM_compose_open)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_compose_of2_chain(benchmark::State& state)
{
    OpenFunctor f = fixtures::of2();
    for (auto _ : state) {
        OpenFunctor g = f;
        for (int i = 1; i < state.range(0); ++i)
            g = compose_open(f, g);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_compose_of2_chain)->DenseRange(2, 4);

void BM_pentagon(benchmark::State& state)
{
    auto fs = chain(4, static_cast<std::size_t>(state.range(0)), 12);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_pentagon(fs[0], fs[1], fs[2], fs[3]));
}
BENCHMARK(BM_pentagon)->Arg(1)->Arg(2)->Arg(3);

void BM_triangle(benchmark::State& state)
{
    auto fs = chain(2, 3, 13);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_triangle(fs[0], fs[1]));
}
BENCHMARK(BM_triangle);

void BM_gen_open_functor(benchmark::State& state)
{
    GenParams p;
    p.style = static_cast<CategoryStyle>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        p.seed = seed++;
        CategoryRef c = gen_category(p);
        benchmark::DoNotOptimize(gen_open_functor(p, c, c));
    }
}
BENCHMARK(BM_gen_open_functor)->DenseRange(0, 2);

void BM_serialize_roundtrip(benchmark::State& state)
{
    auto fs = chain(2, 3, 14);
    std::string text = serialize(compose_open(fs[1], fs[0]));
    for (auto _ : state)
        benchmark::DoNotOptimize(serialize(parse(text)));
}
BENCHMARK(BM_serialize_roundtrip);

void BM_corpus(benchmark::State& state)
{
    CorpusOptions o;
    o.count = 10;
    o.jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_corpus(o));
}
BENCHMARK(BM_corpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
