#pragma once

#include "foldprod/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace foldprod {

/// Resource ceiling for Groebner computations. Exceeding it raises
/// budget_error; partial state is discarded, never returned truncated.
struct Budget {
    long max_degree = 60;      // weighted total degree of any basis element
    size_t max_basis = 20000;  // basis size during completion
};

class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Reduced Groebner basis: monic, pairwise tail-reduced, sorted ascending by
/// leading monomial. Unique for (ideal, order).
struct GroebnerBasis {
    Ring ring;
    MonomialOrder order;
    std::vector<Polynomial> polys;
    std::vector<Monomial> leads; // lead of polys[i] under `order`

    size_t size() const { return polys.size(); }
};

/// Generator list in a named ring, with a Groebner basis cache per monomial
/// order. The cache is filled at most once per order and is safe to fill
/// concurrently (idempotent).
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(Ring r) : ring_(std::move(r)), cache_(std::make_shared<Cache>()) {}
    Ideal(Ring r, std::vector<Polynomial> gens);

    static Ideal zero(const Ring& r) { return Ideal(r); }
    static Ideal unit(const Ring& r) { return Ideal(r, {Polynomial::one(r)}); }

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool has_no_gens() const { return gens_.empty(); }

    std::shared_ptr<const GroebnerBasis> groebner(const MonomialOrder& ord,
                                                  const Budget& budget = {}) const;
    std::shared_ptr<const GroebnerBasis> groebner(const Budget& budget = {}) const;

    bool is_zero_ideal(const Budget& budget = {}) const;
    bool is_unit_ideal(const Budget& budget = {}) const;

private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::shared_ptr<const GroebnerBasis>> by_order;
    };

    Ring ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Reduced Groebner basis of the given generators.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const Ring& ring,
                         const MonomialOrder& order, const Budget& budget = {});

/// Remainder of p on division by G: no term of the result is divisible by any
/// leading term of G, and p - result lies in the ideal of G.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// Division with quotients: p = sum quotients[i] * gb.polys[i] + remainder.
Polynomial divide(const Polynomial& p, const GroebnerBasis& gb, std::vector<Polynomial>* quotients);

bool contains(const Ideal& I, const Polynomial& p, const Budget& budget = {});

/// Exact quotient p / g; throws when g does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& g);

/// Renames/permutes variables: var_map[i] is the target index of source
/// variable i, or -1 when the variable must not occur in p.
Polynomial map_variables(const Polynomial& p, const Ring& target, const std::vector<int>& var_map);

/// Ideal equality by two-sided membership of generators (never by comparing
/// generator lists). Implemented over the batch normal-form kernel.
bool ideal_equal(const Ideal& I, const Ideal& J, const Budget& budget = {});

Ideal intersect(const Ideal& I, const Ideal& J, const Budget& budget = {});
Ideal colon(const Ideal& I, const Polynomial& g, const Budget& budget = {});
Ideal colon_by_ideal(const Ideal& I, const Ideal& J, const Budget& budget = {});
/// Saturation with respect to the irrelevant maximal ideal.
Ideal saturate(const Ideal& I, const Budget& budget = {});
/// Generators of I^e by e-fold products (I^0 = the unit ideal).
Ideal ideal_power(const Ideal& I, long e);
/// m^e, generated by all degree-e monomials.
Ideal max_ideal_power(const Ring& r, long e);

/// Contraction of I to the subring omitting the listed variables, computed
/// from a block-elimination Groebner basis. The result lives in the subring
/// of remaining variables (original relative order, weights kept).
Ideal eliminate(const Ideal& I, const std::vector<size_t>& drop, const Budget& budget = {});

} // namespace foldprod
