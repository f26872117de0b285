// Compares the serial prime-range scan against the OpenMP one and checks
// that both produce identical reports.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "pisano/theorems.hpp"

using namespace pisano;

namespace {

template <class F>
double time_run(F&& f, std::vector<PeriodReport>& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    i64 a = 1, b = 1;
    u64 p_max = 20000;
    if (argc > 1) p_max = std::strtoull(argv[1], nullptr, 10);
    if (argc > 3) {
        a = std::strtoll(argv[2], nullptr, 10);
        b = std::strtoll(argv[3], nullptr, 10);
    }

    std::vector<PeriodReport> serial, parallel;
    double ts = time_run([&] { return verify_range_serial(a, b, p_max); }, serial);
    double tp = time_run([&] { return verify_range(a, b, p_max); }, parallel);

    if (serial.size() != parallel.size()) {
        std::fprintf(stderr, "result size mismatch: %zu vs %zu\n", serial.size(), parallel.size());
        return 1;
    }
    for (std::size_t i = 0; i < serial.size(); ++i) {
        if (serial[i].period != parallel[i].period ||
            serial[i].spec.modulus != parallel[i].spec.modulus) {
            std::fprintf(stderr, "mismatch at row %zu\n", i);
            return 1;
        }
    }

    std::printf("scan a=%lld b=%lld p_max=%llu (%zu primes)\n", static_cast<long long>(a),
                static_cast<long long>(b), static_cast<unsigned long long>(p_max), serial.size());
    std::printf("serial:   %.3f s\n", ts);
    std::printf("parallel: %.3f s\n", tp);
    std::printf("speedup:  %.2fx\n", ts / tp);
    return 0;
}
