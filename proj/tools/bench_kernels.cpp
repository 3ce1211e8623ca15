// Timing comparison between the serial orientation-scan reference and the
// OpenMP kernels on cyclically k-diagonal skeletons of growing size. The
// counting kernel scans the whole orientation space, so it is the honest
// throughput measure; the solve kernel exits at the first hit.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nzsh/skeleton.hpp"
#include "nzsh/topology.hpp"

using namespace nzsh;

namespace {

PFArray skeleton_array(int n, int k) {
    GroupPtr g = build_group(GroupSpec::cyclic(2 * n * k + 1));
    CellSet b = square_diagonal_skeleton(n, k);
    PFArray a(n, n, g);
    for (const Cell& c : b.cells) a.set(c.row, c.col, 1);
    return a;
}

template <typename F>
double time_ms(F&& f, int reps) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP with up to %d threads\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial path\n");
#endif
    std::printf("%4s %3s %10s | %12s %12s %8s | %12s %12s\n", "n", "k", "space", "count ser",
                "count omp", "speedup", "solve ser", "solve omp");
    struct Case { int n, k, reps; };
    for (const Case& c : {Case{9, 3, 3}, Case{11, 3, 3}, Case{11, 5, 2}, Case{13, 5, 1}, Case{13, 7, 1}}) {
        PFArray a = skeleton_array(c.n, c.k);
        uint64_t cnt_s = 0, cnt_p = 0;
        double t_cnt_s = time_ms([&] { cnt_s = count_knight_solutions_serial(a, 40); }, c.reps);
        double t_cnt_p = time_ms([&] { cnt_p = count_knight_solutions(a, 40); }, c.reps);
        std::optional<Orientation> sol_s, sol_p;
        double t_sol_s = time_ms([&] { sol_s = solve_knight_serial(a, 40); }, c.reps);
        double t_sol_p = time_ms([&] { sol_p = solve_knight(a, 40); }, c.reps);
        bool agree = cnt_s == cnt_p && sol_s.has_value() == sol_p.has_value();
        if (agree && sol_s) agree = sol_s->rows == sol_p->rows && sol_s->cols == sol_p->cols;
        std::printf("%4d %3d %10llu | %10.1fms %10.1fms %7.2fx | %10.2fms %10.2fms %s\n", c.n, c.k,
                    static_cast<unsigned long long>(1ULL << (2 * c.n - 1)), t_cnt_s, t_cnt_p,
                    t_cnt_s / t_cnt_p, t_sol_s, t_sol_p, agree ? "" : "MISMATCH");
    }
    return 0;
}
