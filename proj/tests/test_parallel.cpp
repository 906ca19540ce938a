#include "helpers.hpp"

#include "foldprod/batch.hpp"
#include "foldprod/fold.hpp"

#include <doctest.h>

using namespace foldprod;
using fptest::arr;
using fptest::pencil_plus_line;

namespace {

std::vector<Polynomial> membership_batch(const Ideal& I, size_t count, uint64_t seed) {
    uint64_t st = seed;
    std::vector<Polynomial> out;
    for (size_t i = 0; i < count; ++i) {
        Polynomial p = Polynomial::zero(I.ring());
        for (const auto& g : I.gens()) {
            Monomial m(I.ring().nvars());
            m.e[splitmix64_next(st) % I.ring().nvars()] =
                static_cast<int>(splitmix64_next(st) % 2);
            p += g.times_monomial(m, Rational(static_cast<long>(splitmix64_next(st) % 9) - 4));
        }
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

TEST_CASE("parallel batch kernel is bit-identical to the serial reference") {
    Ideal I = fold_ideal(pencil_plus_line(), 2).ideal;
    auto gb = I.groebner();
    auto batch = membership_batch(I, 64, 4242);
    auto serial = normal_forms_serial(batch, *gb);
    auto parallel = normal_forms_parallel(batch, *gb);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i] == parallel[i]);
        CHECK(serial[i].is_zero()); // batch elements are combinations of generators
    }
}

TEST_CASE("scan aggregation is deterministic") {
    uint64_t st = 777;
    std::vector<ScanCase> cases;
    for (int i = 0; i < 5; ++i) {
        Arrangement A = random_arrangement(st, 2, 4);
        for (long a = 1; a <= 4; ++a) cases.push_back({A, a});
    }
    ScanReport first = conjecture_scan(cases);
    ScanReport second = conjecture_scan(cases);
    REQUIRE(first.cases.size() == second.cases.size());
    for (size_t i = 0; i < first.cases.size(); ++i) {
        CHECK(first.cases[i].index == i);
        CHECK(first.cases[i].linear == second.cases[i].linear);
        CHECK(first.cases[i].completed == second.cases[i].completed);
    }
    CHECK(first.all_linear);
    CHECK(first.k2_all_pass);
}

TEST_CASE("concurrent basis cache fills are idempotent") {
    Ideal I = fold_ideal(pencil_plus_line(), 2).ideal;
    std::shared_ptr<const GroebnerBasis> seen[8];
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (int i = 0; i < 8; ++i) seen[i] = I.groebner();
    for (int i = 1; i < 8; ++i) CHECK(seen[i] == seen[0]); // same cached object
}
