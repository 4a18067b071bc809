#include <benchmark/benchmark.h>

#include "thinlat/density.hpp"
#include "thinlat/rep.hpp"
#include "thinlat/tracecert.hpp"
#include "thinlat/word.hpp"

using namespace thinlat;

static void BM_QuadElemMul(benchmark::State& state) {
  QuadElem a(Rational(7, 3), Rational(-2, 5), 3);
  QuadElem b(Rational(-11, 4), Rational(9, 7), 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_QuadElemMul);

static void BM_LaurentMul(benchmark::State& state) {
  LaurentPoly p, q;
  for (long e = -4; e <= 4; ++e) {
    p += LaurentPoly(QuadElem(Rational(e + 5, 3)), e, 'v');
    q += LaurentPoly(QuadElem(Rational(2 * e - 1, 7)), e, 'v');
  }
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_LaurentMul);

static void BM_BallEnumeration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BallEnumeration)->Arg(6)->Arg(8);

static void BM_SymbolicBallTraces(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(ball_traces(RepFamily::rho(), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SymbolicBallTraces)->Arg(3)->Arg(5);

static void BM_CharPolyLongitudeWord(benchmark::State& state) {
  Word lam = Word::parse("y X Y x^2 Y X y");
  for (auto _ : state) benchmark::DoNotOptimize(char_poly4(RepFamily::rho().evaluate(lam)));
}
BENCHMARK(BM_CharPolyLongitudeWord);

static void BM_AdjointSpan(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(adjoint_span_dimension(QuadElem(1), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AdjointSpan)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
