// Times the packed-word kernels and the full decision procedure, serial
// against OpenMP, over square instances (n = m). Usage:
//   bsr_bench [m ...]        default sizes: 256 512 1024 2048

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "bsr/kernels.hpp"
#include "bsr/represent.hpp"

namespace {

using Clock = std::chrono::steady_clock;

bsr::StringSet random_set(std::size_t m, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<bsr::BitString> strings;
    strings.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        bsr::BitString s(m);
        for (auto& w : s.words()) w = rng();
        s = s & bsr::BitString::ones(m);  // clear padding
        strings.push_back(std::move(s));
    }
    return bsr::StringSet(std::move(strings));
}

template <typename Fn>
double time_best_of(Fn fn, int reps) {
    double best = 1e100;
    for (int r = 0; r < reps; ++r) {
        const auto start = Clock::now();
        fn();
        const std::chrono::duration<double> elapsed = Clock::now() - start;
        if (elapsed.count() < best) best = elapsed.count();
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> sizes = {256, 512, 1024, 2048};
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) sizes.push_back(std::strtoull(argv[i], nullptr, 10));
    }

#if defined(_OPENMP)
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel policy falls back to serial\n");
#endif
    std::printf("%8s %14s %14s %9s %14s %14s %9s\n", "m=n", "family ser", "family par",
                "speedup", "decide ser", "decide par", "speedup");

    for (std::size_t m : sizes) {
        const bsr::StringSet w = random_set(m, m, 0x9e3779b97f4a7c15ull ^ m);
        std::mt19937_64 rng(42 ^ m);
        bsr::BitString target(m);
        for (auto& word : target.words()) word = rng();
        target &= bsr::BitString::ones(m);

        std::vector<int> columns(m);
        for (std::size_t i = 0; i < m; ++i) columns[i] = static_cast<int>(i);

        const int reps = m >= 2048 ? 3 : 5;
        const double fam_ser = time_best_of(
            [&] { bsr::kernels::zero_family(w, columns, bsr::kernels::Policy::serial); }, reps);
        const double fam_par = time_best_of(
            [&] { bsr::kernels::zero_family(w, columns, bsr::kernels::Policy::parallel); }, reps);
        const double dec_ser = time_best_of(
            [&] { bsr::decide(w, target, bsr::kernels::Policy::serial); }, reps);
        const double dec_par = time_best_of(
            [&] { bsr::decide(w, target, bsr::kernels::Policy::parallel); }, reps);

        std::printf("%8zu %12.3f ms %12.3f ms %8.2fx %12.3f ms %12.3f ms %8.2fx\n", m,
                    fam_ser * 1e3, fam_par * 1e3, fam_ser / fam_par, dec_ser * 1e3, dec_par * 1e3,
                    dec_ser / dec_par);
    }
    return 0;
}
