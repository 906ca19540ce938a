// Benchmark: batch normal-form membership, serial reference vs the OpenMP
// kernel, on a fold-ideal instance. Prints timings and verifies the outputs
// agree.

#include "foldprod/batch.hpp"
#include "foldprod/fold.hpp"
#include "foldprod/verify.hpp"

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace foldprod;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    size_t batch = argc > 1 ? static_cast<size_t>(std::stoul(argv[1])) : 512;

    uint64_t st = 97;
    Arrangement A = random_arrangement(st, 3, 6);
    Ideal I = fold_ideal(A, 4).ideal;
    auto gb = I.groebner();
    std::cout << "arrangement: n=" << A.size() << " k=3, basis size " << gb->size() << "\n";

    std::vector<Polynomial> polys;
    polys.reserve(batch);
    for (size_t i = 0; i < batch; ++i) {
        Polynomial p = Polynomial::zero(A.ring());
        for (const auto& g : I.gens()) {
            Monomial m(3);
            m.e[splitmix64_next(st) % 3] = static_cast<int>(splitmix64_next(st) % 3);
            p += g.times_monomial(m, Rational(static_cast<long>(splitmix64_next(st) % 9) - 4));
        }
        polys.push_back(std::move(p));
    }

    auto t0 = std::chrono::steady_clock::now();
    auto serial = normal_forms_serial(polys, *gb);
    double t_serial = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto parallel = normal_forms_parallel(polys, *gb);
    double t_parallel = ms_since(t0);

    bool agree = serial.size() == parallel.size();
    for (size_t i = 0; agree && i < serial.size(); ++i) agree = serial[i] == parallel[i];

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (OpenMP disabled)\n";
#endif
    std::cout << "batch " << batch << ": serial " << t_serial << " ms, parallel " << t_parallel
              << " ms\n";
    std::cout << (agree ? "outputs agree\n" : "OUTPUT MISMATCH\n");
    return agree ? 0 : 1;
}
