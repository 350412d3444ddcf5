#include <benchmark/benchmark.h>

#include <equivar/characters.hpp>
#include <equivar/genco.hpp>
#include <equivar/jform.hpp>
#include <equivar/model_io.hpp>
#include <equivar/random_models.hpp>

#include <map>

using namespace equivar;

namespace {

const FormalModel &model(const char *name)
{
    static std::map<std::string, FormalModel> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        it = cache.emplace(name, FormalModel::build(builtin_model(name).spec)).first;
    }
    return it->second;
}

void BM_ClosedJForm(benchmark::State &state)
{
    const FormalModel &m = model("t2-principal");
    for (auto _ : state) {
        const JForm j = j_form(m, "P");
        benchmark::DoNotOptimize(check_closed(j, m));
    }
}
BENCHMARK(BM_ClosedJForm);

void BM_FrameChange(benchmark::State &state)
{
    const FormalModel m = FormalModel::build(torus_model_spec(static_cast<int>(state.range(0))));
    std::mt19937_64 rng(1);
    const RationalMatrix A = random_gl_plus(rng, m.frame(0).rank);
    for (auto _ : state) {
        benchmark::DoNotOptimize(frame_change_compare(m, "E0", A));
    }
}
BENCHMARK(BM_FrameChange)->Arg(1)->Arg(2)->Arg(3);

void BM_FourierFibre(benchmark::State &state)
{
    const FormalModel m = FormalModel::build(torus_model_spec(static_cast<int>(state.range(0))));
    const FormalModel f = with_fibre(m, "E0");
    for (auto _ : state) {
        benchmark::DoNotOptimize(fourier_fibre_integrate(f, "E0"));
    }
}
BENCHMARK(BM_FourierFibre)->Arg(1)->Arg(2)->Arg(3);

void BM_RandomModelBuild(benchmark::State &state)
{
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(random_model(seed++));
    }
}
BENCHMARK(BM_RandomModelBuild);

void BM_ContactCharacter(benchmark::State &state)
{
    SeriesPolicy p;
    p.max_degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(index_s3_contact_pipeline(p));
    }
}
BENCHMARK(BM_ContactCharacter)->Arg(10)->Arg(20)->Arg(40);

void BM_HopfPipeline(benchmark::State &state)
{
    SeriesPolicy p;
    p.max_degree = 20;
    for (auto _ : state) {
        benchmark::DoNotOptimize(index_hopf_pipeline(p));
    }
}
BENCHMARK(BM_HopfPipeline);

} // namespace

BENCHMARK_MAIN();
