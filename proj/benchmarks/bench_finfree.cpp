#include "finfree/asymptotics.hpp"
#include "finfree/finfree_conv.hpp"
#include "finfree/hypergeom.hpp"
#include "finfree/mop.hpp"
#include "finfree/partitions.hpp"
#include "finfree/roots_measure.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace finfree;

namespace {

Polynomial sample(int n, int offset) {
    std::vector<Rational> roots(n);
    for (int k = 0; k < n; ++k) roots[k] = Rational(k + offset, 3);
    return Polynomial::from_roots(roots);
}

MopSpec jp1_spec() {
    MopSpec s;
    s.family = MopFamily::JP1;
    s.alpha = {Rational(1, 2), Rational(3, 7)};
    s.beta = 1;
    return s;
}

void BM_MultConv(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Polynomial p = sample(n, 1), q = sample(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mult_conv(p, q, n));
}
BENCHMARK(BM_MultConv)->Arg(8)->Arg(32)->Arg(128);

void BM_AddConv(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Polynomial p = sample(n, 1), q = sample(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(add_conv(p, q, n));
}
BENCHMARK(BM_AddConv)->Arg(8)->Arg(32)->Arg(128);

void BM_HyperPoly(benchmark::State& state) {
    HypergeometricSpec s;
    s.n = static_cast<int>(state.range(0));
    s.a = {Rational(1, 2), Rational(7, 3)};
    s.b = {Rational(5, 4)};
    for (auto _ : state) benchmark::DoNotOptimize(hyper_poly(s));
}
BENCHMARK(BM_HyperPoly)->Arg(16)->Arg(128)->Arg(512);

void BM_FiniteCumulants(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Polynomial p = sample(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(finite_free_cumulants(p));
}
BENCHMARK(BM_FiniteCumulants)->Arg(6)->Arg(8);

void BM_JpTypeIRoots(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Polynomial P = jp_typeI(jp1_spec(), {k, 2 * k}, 1);
    for (auto _ : state) benchmark::DoNotOptimize(find_roots(P));
}
BENCHMARK(BM_JpTypeIRoots)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_NewtonMoments(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Polynomial P = jp_typeI(jp1_spec(), {k, 2 * k}, 1);
    for (auto _ : state) benchmark::DoNotOptimize(newton_moments(P, 3));
}
BENCHMARK(BM_NewtonMoments)->Arg(32)->Arg(128);

void BM_Orthogonality(benchmark::State& state) {
    MopSpec s;
    s.family = MopFamily::JP2;
    s.alpha = {Rational(1, 2), Rational(3, 7)};
    s.beta = Rational(1, 3);
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_orthogonality(s, {m, m}));
}
BENCHMARK(BM_Orthogonality)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_StieltjesDensity(benchmark::State& state) {
    LimitParams p;
    p.A = {0, 0};
    p.theta = {Rational(1, 3), Rational(2, 3)};
    const auto curve = family_curves(MopFamily::JP1, p).curve;
    std::vector<double> xs;
    for (int k = 1; k <= 20; ++k) xs.push_back(-2.43 * k / 21.0);
    for (auto _ : state) benchmark::DoNotOptimize(stieltjes_density(curve, xs));
}
BENCHMARK(BM_StieltjesDensity)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
