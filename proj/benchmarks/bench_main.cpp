#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "fiberres/fiber.hpp"
#include "fiberres/homcheck.hpp"
#include "fiberres/resolutions.hpp"
#include "fiberres/star.hpp"

using namespace fiberres;

namespace {

RingSpec blocks(int m, int n)
{
    std::vector<std::string> a, b;
    for (int i = 1; i <= m; ++i)
        a.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        b.push_back("y" + std::to_string(i));
    return RingSpec::with_blocks(a, b);
}

ChainComplex var_koszul(const RingSpec& R, const std::vector<std::size_t>& idx)
{
    std::vector<Monomial> v;
    for (auto i : idx)
        v.push_back(Monomial::variable(R.nvars(), i));
    return koszul(R, v);
}

// squares of the variables in each block
FiberInstance quadratic_instance(int m)
{
    RingSpec R = blocks(m, m);
    std::string ip, jp;
    for (int i = 1; i <= m; ++i) {
        ip += (i > 1 ? "," : "") + ("x" + std::to_string(i) + "^2");
        jp += (i > 1 ? "," : "") + ("y" + std::to_string(i) + "^2");
    }
    return FiberInstance::from_blocks(MonomialIdeal::parse(R, ip), MonomialIdeal::parse(R, jp));
}

void BM_StarProduct(benchmark::State& st)
{
    const int m = static_cast<int>(st.range(0));
    RingSpec R = blocks(m, m);
    ChainComplex X = var_koszul(R, R.block_a_indices()), Y = var_koszul(R, R.block_b_indices());
    for (auto _ : st)
        benchmark::DoNotOptimize(star_product(X, Y));
}
BENCHMARK(BM_StarProduct)->DenseRange(1, 4);

void BM_FiberBuild(benchmark::State& st)
{
    FiberInstance inst = quadratic_instance(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(build_fiber(inst));
}
BENCHMARK(BM_FiberBuild)->DenseRange(1, 3);

void BM_Homology(benchmark::State& st)
{
    FiberInstance inst = quadratic_instance(static_cast<int>(st.range(0)));
    ChainComplex F = fiber_resolution(inst);
    const int D = default_degree_bound(inst);
    for (auto _ : st)
        benchmark::DoNotOptimize(homology_dims(F, D));
}
BENCHMARK(BM_Homology)->DenseRange(1, 3);

void BM_MinimizeTaylor(benchmark::State& st)
{
    RingSpec R({"x", "y", "z"});
    const char* gens[] = {"x^2,x*y,y^2", "x^2,x*y,y^2,y*z,z^2", "x^3,x^2*y,x*y*z,y^3,y*z^2,z^3,x*z^2"};
    MonomialIdeal I = MonomialIdeal::parse(R, gens[st.range(0)]);
    ChainComplex T = taylor(I);
    for (auto _ : st)
        benchmark::DoNotOptimize(minimize(T));
}
BENCHMARK(BM_MinimizeTaylor)->DenseRange(0, 2);

} // namespace

BENCHMARK_MAIN();
