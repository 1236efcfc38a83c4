// Dedicated acceptance runner: executes every criterion of the verification
// battery at its exact threshold and prints one pass/fail line per
// criterion. Exit code 0 iff everything passed.

#include <cstring>
#include <iostream>

#include "triag/suite.hpp"

int main(int argc, char** argv) {
    triag::SuiteOptions opts;
    opts.progress = &std::cout;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--slow") == 0) {
            opts.include_slow = true;
        } else if (std::strcmp(argv[i], "--parallel") == 0) {
            opts.exec = triag::ExecMode::OpenMP;
        } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            opts.seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (std::strcmp(argv[i], "--trials") == 0 && i + 1 < argc) {
            opts.trials = static_cast<std::uint32_t>(std::strtoul(argv[++i], nullptr, 10));
        } else {
            std::cerr << "usage: acceptance [--slow] [--parallel] [--seed N] [--trials N]\n";
            return 2;
        }
    }

    const auto results = triag::run_acceptance(opts);
    const bool pass = triag::all_passed(results);
    std::cout << (pass ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << " (" << results.size()
              << " criteria)" << std::endl;
    return pass ? 0 : 1;
}
