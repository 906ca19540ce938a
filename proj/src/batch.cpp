#include "foldprod/batch.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace foldprod {

std::vector<Polynomial> normal_forms_serial(std::span<const Polynomial> polys,
                                            const GroebnerBasis& gb) {
    std::vector<Polynomial> out(polys.size());
    for (size_t i = 0; i < polys.size(); ++i) out[i] = normal_form(polys[i], gb);
    return out;
}

std::vector<Polynomial> normal_forms_parallel(std::span<const Polynomial> polys,
                                              const GroebnerBasis& gb) {
    std::vector<Polynomial> out(polys.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(polys.size()); ++i)
        out[static_cast<size_t>(i)] = normal_form(polys[static_cast<size_t>(i)], gb);
    return out;
}

std::vector<Polynomial> normal_forms(std::span<const Polynomial> polys, const GroebnerBasis& gb) {
#ifdef _OPENMP
    if (polys.size() >= 8 && omp_get_max_threads() > 1) return normal_forms_parallel(polys, gb);
#endif
    return normal_forms_serial(polys, gb);
}

bool all_in_ideal(std::span<const Polynomial> polys, const Ideal& I, const Budget& budget) {
    if (polys.empty()) return true;
    auto gb = I.groebner(budget);
    for (const auto& nf : normal_forms(polys, *gb))
        if (!nf.is_zero()) return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const Budget& budget) {
    if (I.ring() != J.ring()) throw std::invalid_argument("ideal_equal: ring mismatch");
    return all_in_ideal(I.gens(), J, budget) && all_in_ideal(J.gens(), I, budget);
}

} // namespace foldprod
