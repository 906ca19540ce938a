#pragma once

#include "foldprod/groebner.hpp"

#include <span>
#include <vector>

namespace foldprod {

/// Batch normal forms against one basis. The inputs are immutable and the
/// reductions independent, so the parallel kernel splits them across OpenMP
/// threads; the serial variant is the reference the tests compare against.
/// Both return results in input order.
std::vector<Polynomial> normal_forms_serial(std::span<const Polynomial> polys,
                                            const GroebnerBasis& gb);
std::vector<Polynomial> normal_forms_parallel(std::span<const Polynomial> polys,
                                              const GroebnerBasis& gb);

/// Dispatches to the parallel kernel when worthwhile.
std::vector<Polynomial> normal_forms(std::span<const Polynomial> polys, const GroebnerBasis& gb);

/// True when every polynomial reduces to zero.
bool all_in_ideal(std::span<const Polynomial> polys, const Ideal& I, const Budget& budget = {});

} // namespace foldprod
