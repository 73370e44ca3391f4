// Kernel benchmark: serial reference vs OpenMP matrix multiply (exact and
// complex scalars), Faddeev-LeVerrier vs Hessenberg characteristic
// polynomials, and serial vs parallel instance enumeration.
//
// Usage: bench_kernels [--full]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qwm/charpoly.hpp"
#include "qwm/experiments.hpp"
#include "qwm/matrix.hpp"
#include "qwm/rng.hpp"
#include "qwm/walk.hpp"

using namespace qwm;

namespace {

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

template <class F>
double time_it(F&& f, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = now_seconds();
        f();
        best = std::min(best, now_seconds() - t0);
    }
    return best;
}

Matrix<Rational> random_rational_matrix(SplitMix64& rng, std::size_t n) {
    Matrix<Rational> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = make_rational(static_cast<long>(rng.below(19)) - 9, 1 + static_cast<long>(rng.below(4)));
    return a;
}

Matrix<cplx> random_complex_matrix(SplitMix64& rng, std::size_t n) {
    Matrix<cplx> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = cplx(static_cast<double>(rng.below(1000)) / 500.0 - 1.0,
                           static_cast<double>(rng.below(1000)) / 500.0 - 1.0);
    return a;
}

void row(const char* name, double serial, double fast, const char* fast_name) {
    std::printf("%-44s %10.4f s %14s %10.4f s   speedup %.2fx\n", name, serial, fast_name, fast,
                serial / fast);
}

} // namespace

int main(int argc, char** argv) {
    const bool full = argc > 1 && std::strcmp(argv[1], "--full") == 0;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; parallel kernels run serially\n");
#endif

    SplitMix64 rng(0xbe9c);

    {
        const std::size_t n = full ? 144 : 96;
        Matrix<Rational> a = random_rational_matrix(rng, n);
        Matrix<Rational> b = random_rational_matrix(rng, n);
        Matrix<Rational> out;
        const double ts = time_it([&] { out = kernels::matmul_serial(a, b); }, 2);
        const double tp = time_it([&] { out = kernels::matmul(a, b); }, 2);
        char label[64];
        std::snprintf(label, sizeof label, "exact matmul %zux%zu (rational)", n, n);
        row(label, ts, tp, "omp");
    }

    {
        const std::size_t n = full ? 384 : 224;
        Matrix<cplx> a = random_complex_matrix(rng, n);
        Matrix<cplx> b = random_complex_matrix(rng, n);
        Matrix<cplx> out;
        const double ts = time_it([&] { out = kernels::matmul_serial(a, b); }, 3);
        const double tp = time_it([&] { out = kernels::matmul(a, b); }, 3);
        char label[64];
        std::snprintf(label, sizeof label, "complex matmul %zux%zu", n, n);
        row(label, ts, tp, "omp");
    }

    {
        // U of an undirected cycle: the shape the periodicity pipeline powers
        const int n = full ? 60 : 32;
        MixedGraph g = cycle_graph(n);
        ArcOrdering arcs(g);
        Matrix<Cyclo> u = time_evolution_exact(g, arcs, make_angle(0, 1));
        Matrix<Cyclo> out;
        const double ts = time_it([&] { out = kernels::matmul_serial(u, u); }, 2);
        const double tp = time_it([&] { out = kernels::matmul(u, u); }, 2);
        char label[64];
        std::snprintf(label, sizeof label, "walk matmul %zux%zu (cyclo)", u.rows(), u.rows());
        row(label, ts, tp, "omp");
    }

    {
        const std::size_t n = full ? 28 : 20;
        Matrix<Rational> a = random_rational_matrix(rng, n);
        Poly<Rational> p1, p2;
        const double tf = time_it([&] { p1 = charpoly_faddeev(a); }, 1);
        const double th = time_it([&] { p2 = charpoly_hessenberg(a); }, 1);
        if (!(p1 == p2)) {
            std::printf("charpoly mismatch!\n");
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof label, "charpoly %zux%zu (rational)", n, n);
        row(label, tf, th, "hessenberg");
    }

    {
        // decide_periodicity across 243 mixed pentagons (the exact-power
        // pipeline), serial loop vs the OpenMP experiment driver
        const RationalAngle eta = make_angle(1, 5);
        std::vector<PeriodicityReport> reports(243);
        const double ts = time_it(
            [&] {
                for (std::uint64_t code = 0; code < 243; ++code) {
                    std::vector<int> digits(5);
                    std::uint64_t c = code;
                    for (int i = 0; i < 5; ++i) {
                        digits[static_cast<std::size_t>(i)] = static_cast<int>(c % 3);
                        c /= 3;
                    }
                    reports[code] = decide_periodicity(cycle_graph(5, digits), EtaAngle(eta), {});
                }
            },
            1);
        ExperimentReport rep;
        const double tp = time_it([&] { rep = prime_scan(5, eta, 0); }, 1);
        row("decide 243 mixed C_5 instances", ts, tp, "omp driver");
    }

    std::printf("done\n");
    return 0;
}
