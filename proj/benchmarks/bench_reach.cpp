#include <benchmark/benchmark.h>

#include "treach/halfspace.hpp"
#include "treach/reach.hpp"

using namespace treach;

namespace {

Scalar s(int v) { return Scalar{v}; }
Scalar eps() { return Scalar::bottom(); }

Mat mat2(int a, int b, int c, int d) {
    Mat m(2, 2);
    m.at(0, 0) = s(a);
    m.at(0, 1) = s(b);
    m.at(1, 0) = s(c);
    m.at(1, 1) = s(d);
    return m;
}

SystemModel reference_model() {
    Mat b(2, 1);
    b.at(1, 0) = Scalar::unit();
    SystemModel m;
    m.A = mat2(2, 3, 5, 1);
    m.B = b;
    m.C = Mat::identity(2);
    m.U = make_polyhedron(1, {Vec{s(0)}}, {Vec{eps()}});
    m.W = make_polyhedron(2, {Vec{s(0), s(0)}, Vec{s(1), s(0)}},
                          {Vec{s(1), s(1)}, Vec{s(3), s(1)}, Vec{s(1), s(3)}});
    return m;
}

TargetSetM reference_target() {
    TargetSetM t;
    t.dim = 2;
    t.lhs = Mat(2, 3);
    t.rhs = Mat(2, 3);
    t.lhs.at(0, 2) = Scalar::unit();
    t.lhs.at(1, 1) = s(-1);
    t.rhs.at(0, 1) = s(1);
    t.rhs.at(1, 2) = Scalar::unit();
    return t;
}

void bm_intersect_all(benchmark::State& state) {
    std::vector<Vec> u_gens{Vec{s(0), s(1), s(1)}, Vec{s(0), s(3), s(1)}, Vec{s(0), s(1), s(3)}};
    std::vector<PseudoHalfSpace> hs{
        PseudoHalfSpace(Vec{eps(), eps(), s(0)}, Vec{eps(), s(1), eps()}, u_gens),
        PseudoHalfSpace(Vec{eps(), s(-1), eps()}, Vec{eps(), eps(), s(0)}, u_gens)};
    for (auto _ : state) benchmark::DoNotOptimize(intersect_all(hs, 2));
}
BENCHMARK(bm_intersect_all);

void bm_upsilon(benchmark::State& state) {
    SystemModel model = reference_model();
    TargetSetM target = reference_target();
    for (auto _ : state) benchmark::DoNotOptimize(upsilon(model, target));
}
BENCHMARK(bm_upsilon);

} // namespace

BENCHMARK_MAIN();
