// Timing comparison between the serial reference path and the OpenMP path
// of the data-parallel kernels: the raw membership scan and the exhaustive
// bijection certification.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "paw/families.hpp"
#include "paw/verify.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double run_ms(void (*fn)(paw::ExecPolicy, int), paw::ExecPolicy policy, int n) {
    const auto start = Clock::now();
    fn(policy, n);
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void scan_kernel(paw::ExecPolicy policy, int n) {
    const auto words =
        paw::enumerate_brute_force(paw::FamilyId::p1b, n, policy, 2'000'000'000ULL);
    if (words.empty()) {
        std::fprintf(stderr, "scan produced no members\n");
        std::exit(1);
    }
}

void bijection_kernel(paw::ExecPolicy policy, int n) {
    const auto p1 = paw::verify_bijection(paw::MapId::p1f, n, policy);
    const auto p2 = paw::verify_bijection(paw::MapId::p2f, n + 4, policy);
    if (!p1.pass || !p2.pass) {
        std::fprintf(stderr, "bijection verification failed during benchmark\n");
        std::exit(1);
    }
}

void suite_kernel(paw::ExecPolicy policy, int) {
    paw::VerifyOptions options;
    options.exec = policy;
    const auto report = paw::run_all(options);
    if (!report.all_pass()) {
        std::fprintf(stderr, "verification suite failed during benchmark\n");
        std::exit(1);
    }
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    // scan-n controls the brute-force kernel: candidates = 7^(2n+4).
    const int scan_n = argc > 1 ? std::atoi(argv[1]) : 3;
    const int bij_n = argc > 2 ? std::atoi(argv[2]) : 8;

    std::printf("workers available: %d\n\n", paw::worker_count(paw::ExecPolicy::parallel));
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    report(("membership scan (p1b n=" + std::to_string(scan_n) + ")").c_str(),
           run_ms(scan_kernel, paw::ExecPolicy::serial, scan_n),
           run_ms(scan_kernel, paw::ExecPolicy::parallel, scan_n));

    report(("bijection check (n=" + std::to_string(bij_n) + ")").c_str(),
           run_ms(bijection_kernel, paw::ExecPolicy::serial, bij_n),
           run_ms(bijection_kernel, paw::ExecPolicy::parallel, bij_n));

    report("full verification suite",
           run_ms(suite_kernel, paw::ExecPolicy::serial, 0),
           run_ms(suite_kernel, paw::ExecPolicy::parallel, 0));

    return 0;
}
