// Serial vs OpenMP timings for the data-parallel kernels: fan enumeration,
// grid sampling and the star-shapedness check.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "groewalk/fan.hpp"
#include "groewalk/parser.hpp"

using namespace groewalk;

namespace {

double seconds(auto fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

std::vector<std::vector<Polynomial>> random_ideals(std::size_t count, unsigned long seed) {
    std::mt19937_64 rng(seed);
    ContextPtr ctx = make_context({"x"}, {"u", "v"});
    std::vector<std::vector<Polynomial>> out;
    while (out.size() < count) {
        std::vector<Polynomial> gens;
        std::size_t n_gens = 2 + rng() % 2;
        for (std::size_t g = 0; g < n_gens; ++g) {
            Polynomial p = Polynomial::zero(ctx);
            std::size_t n_terms = 2 + rng() % 3;
            for (std::size_t t = 0; t < n_terms; ++t) {
                Exponents e(3);
                for (auto& x : e) x = static_cast<int>(rng() % 3);
                long c = static_cast<long>(rng() % 7) - 3;
                if (c == 0) c = 1;
                p.add_term(e, Rational(c));
            }
            if (!p.is_zero()) gens.push_back(p);
        }
        if (!gens.empty()) out.push_back(std::move(gens));
    }
    return out;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; both columns run serial code\n");
#endif

    auto problem = parse_problem(
        "ring x ; eliminate u v\n"
        "f1 = x + u + v\n"
        "f2 = x^2 - 1\n");
    auto gens = problem.generator_polys();

    FanOptions serial_opts{4, false};
    FanOptions parallel_opts{4, true};

    GroebnerFan fan;
    report("fan (3 vars)",
           seconds([&] { fan = enumerate_fan(gens, serial_opts); }),
           seconds([&] { fan = enumerate_fan(gens, parallel_opts); }));

    report("grid sampling (denom 64)",
           seconds([&] { sample_fan_keys(gens, 64, false); }),
           seconds([&] { sample_fan_keys(gens, 64, true); }));

    report("star check (20000 samples)",
           seconds([&] { check_star_shaped(fan, 20000, 42, false); }),
           seconds([&] { check_star_shaped(fan, 20000, 42, true); }));

    auto ideals = random_ideals(24, 7);
    report("fan batch (24 random ideals)",
           seconds([&] {
               for (const auto& f : ideals) enumerate_fan(f, serial_opts);
           }),
           seconds([&] {
               for (const auto& f : ideals) enumerate_fan(f, parallel_opts);
           }));
    return 0;
}
