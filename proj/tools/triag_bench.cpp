// Compares the serial reference paths with the OpenMP kernels on the three
// parallel hot spots: rank sampling, per-generator verification and
// jacobian sampling. Results must agree bit-for-bit; timings are printed
// side by side.

#include <chrono>
#include <cstdio>
#include <functional>

#include "triag/catalog.hpp"

using namespace triag;
using Clock = std::chrono::steady_clock;

namespace {

double run_ms(const std::function<void()>& body) {
    const auto t0 = Clock::now();
    body();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const char* name, double serial_ms, double omp_ms, bool equal) {
    std::printf("%-44s %10.1f %10.1f %8.2fx   %s\n", name, serial_ms, omp_ms,
                serial_ms / (omp_ms > 0 ? omp_ms : 1), equal ? "identical" : "MISMATCH");
}

} // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    std::printf("%-44s %10s %10s %9s   %s\n", "kernel", "serial/ms", "openmp/ms", "speedup",
                "results");

    {
        const LieAlgebra alg = build_T(9);
        RankOptions serial{16, 0, ExecMode::Serial, RankOptions::Confirm::Off, 36};
        RankOptions parallel{16, 0, ExecMode::OpenMP, RankOptions::Confirm::Off, 36};
        std::uint32_t a = 0, b = 0;
        const double ts = run_ms([&] { a = generic_rank(alg, serial); });
        const double tp = run_ms([&] { b = generic_rank(alg, parallel); });
        row("rank sampling, 36-dim nilpotent, 16 trials", ts, tp, a == b);
    }
    {
        const LieAlgebra alg = build_L_full_rank(8);
        RankOptions serial{16, 0, ExecMode::Serial, RankOptions::Confirm::Off, 36};
        RankOptions parallel{16, 0, ExecMode::OpenMP, RankOptions::Confirm::Off, 36};
        std::uint32_t a = 0, b = 0;
        const double ts = run_ms([&] { a = generic_rank(alg, serial); });
        const double tp = run_ms([&] { b = generic_rank(alg, parallel); });
        row("rank sampling, 35-dim solvable, 16 trials", ts, tp, a == b);
    }
    {
        const CatalogEntry entry = prop1_invariants(8);
        std::vector<Certificate> serial, parallel;
        const double ts = run_ms([&] {
            for (const auto& inv : entry.invariants)
                serial.push_back(verify_invariant(entry.algebra, inv, ExecMode::Serial));
        });
        const double tp = run_ms([&] {
            for (const auto& inv : entry.invariants)
                parallel.push_back(verify_invariant(entry.algebra, inv, ExecMode::OpenMP));
        });
        bool equal = serial.size() == parallel.size();
        for (std::size_t i = 0; equal && i < serial.size(); ++i)
            equal = serial[i].pass == parallel[i].pass &&
                    serial[i].per_generator.size() == parallel[i].per_generator.size();
        row("verification, 35-dim solvable basis", ts, tp, equal);
    }
    {
        const CatalogEntry entry = prop1_invariants(9);
        JacobianOptions serial{32, 0, 50, ExecMode::Serial};
        JacobianOptions parallel{32, 0, 50, ExecMode::OpenMP};
        std::uint32_t a = 0, b = 0;
        const double ts = run_ms([&] { a = jacobian_rank(entry.invariants, serial); });
        const double tp = run_ms([&] { b = jacobian_rank(entry.invariants, parallel); });
        row("jacobian sampling, 44-dim solvable, 32 trials", ts, tp, a == b);
    }
    return 0;
}
