// Wall-clock comparison of the serial and OpenMP paths of the three parallel
// kernels. Each row also checks that both paths give identical results.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <utility>

#include "reldim/estimator.hpp"
#include "reldim/learning.hpp"
#include "reldim/polykernel.hpp"

using namespace reldim;

namespace {

template <class F>
auto timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = f();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return std::pair{result, secs};
}

void report(const char* name, double serial_s, double parallel_s, bool same) {
    std::printf("%-34s serial %8.3f s  parallel %8.3f s  speedup %5.2fx  identical %s\n", name, serial_s, parallel_s,
                serial_s / parallel_s, same ? "yes" : "NO");
}

}  // namespace

int main() {
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());

    const SepQuery q = SepQuery::self(BallSpec::unit(6), Point(6, 0.0), -0.5);
    const auto [ps, ts] = timed([&] { return serial::estimate_sep_prob(q, 5000000, 0.95, 1); });
    const auto [pp, tp] = timed([&] { return estimate_sep_prob(q, 5000000, 0.95, 1); });
    report("estimate_sep_prob d=6, 5e6 pairs", ts, tp, ps.successes == pp.successes);

    const BallSpec y = BallSpec::at({0.5, 0.0, 0.0, 0.0, 0.0});
    const BallSpec x = BallSpec::unit(5);
    auto sim = [&](Execution e) { return simulate_learning(y, x, x.center, 0.0, 5, 500000, 2, 0.95, e); };
    const auto [ls, lts] = timed([&] { return sim(Execution::serial); });
    const auto [lp, ltp] = timed([&] { return sim(Execution::parallel); });
    report("simulate_learning d=5, k=5, 5e5", lts, ltp,
           ls.y_success.successes == lp.y_success.successes && ls.x_success.successes == lp.x_success.successes);

    const PolyQuery pq{KernelSpec{4, 1.5, 3}, 0.0};
    const auto [qs, qts] = timed([&] { return poly_sep_prob(pq, default_poly_spec(), Execution::serial); });
    const auto [qp, qtp] = timed([&] { return poly_sep_prob(pq, default_poly_spec(), Execution::parallel); });
    report("poly_sep_prob deg=4, b=1.5, d=3", qts, qtp, qs.value == qp.value);
    return 0;
}
