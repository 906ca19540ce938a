#pragma once

#include "foldprod/arrangement.hpp"
#include "foldprod/resolution.hpp"

#include <optional>

namespace foldprod {

/// Variable bookkeeping for the second-order fiber presentation:
/// T = Q[t_{i,j} : 1 <= i < j <= n] with the pairs in lexicographic order,
/// and S = Q[y_1..y_n].
struct FiberRing {
    size_t n = 0;
    Ring t_ring;
    Ring y_ring;

    size_t t_index(size_t i, size_t j) const; // 0-based i < j
    std::pair<size_t, size_t> t_pair(size_t pos) const;
};

FiberRing make_fiber_ring(size_t n);

/// Shared scaffolding for the second-order computations on one arrangement:
/// the fiber rings, the bigraded ring R[t] (x variables first), the products
/// f_{i,j}, and the standard syzygy elements.
class Ot2Context {
public:
    explicit Ot2Context(Arrangement A);

    const Arrangement& arrangement() const { return A_; }
    const FiberRing& fiber() const { return fr_; }
    const Ring& rt_ring() const { return rt_; }
    size_t x_count() const { return A_.ring().nvars(); }

    /// f_{i,j}: the product of all forms except i and j (0-based, i < j).
    const Polynomial& f(size_t i, size_t j) const;
    /// f with no forms removed.
    Polynomial full_product() const;

    /// Standard syzygy elements in R[t], all of t-degree 1:
    ///   A_{a,b,c} = l_a t_{a,b} - l_c t_{b,c}
    ///   B_{a,b,c} = l_a t_{a,c} - l_b t_{b,c}
    ///   C_{a,b,c} = l_b t_{a,b} - l_c t_{a,c}
    Polynomial syz_A(size_t a, size_t b, size_t c) const;
    Polynomial syz_B(size_t a, size_t b, size_t c) const;
    Polynomial syz_C(size_t a, size_t b, size_t c) const;

    /// Circuit relation lifted to R[t] (constant coefficients).
    Polynomial lift_linear(const Circuit3& c) const;

    /// Substitution t_{i,j} -> f_{i,j} (x fixed) from R[t] into R. An element
    /// lies in the Rees ideal of I_{n-2} exactly when this vanishes.
    Polynomial evaluate_rt(const Polynomial& p) const;
    /// Substitution t_{i,j} -> f_{i,j} from T into R.
    Polynomial evaluate_t(const Polynomial& p) const;

private:
    Arrangement A_;
    FiberRing fr_;
    Ring rt_;
    std::vector<Polynomial> f_; // indexed by t_index
};

/// Circuit relations in T: c1 t_{i2,i3} + c2 t_{i1,i3} + c3 t_{i1,i2}.
std::vector<Polynomial> standard_linear_gens(const Arrangement& A, const FiberRing& fr);

/// For n >= 4, the 2*C(n,4) binomials
///   Q1 = t_{u,v} t_{w,z} - t_{u,w} t_{v,z},
///   Q2 = t_{u,v} t_{w,z} - t_{u,z} t_{v,w}
/// in canonical (u<v<w<z) order; empty for n < 4.
std::vector<Polynomial> standard_quadratic_gens(const FiberRing& fr);

/// Presentation ideal of the second-order algebra: the kernel of
/// t_{i,j} -> f_{i,j}, computed by eliminating the x variables. Zero for
/// n = 2 by convention.
Ideal ot2_ideal(const Arrangement& A, const Budget& budget = {});

/// Presentation ideal of the classical algebra: the kernel of y_i -> f / l_i.
Ideal ot_classical_ideal(const Arrangement& A, const Budget& budget = {});

/// Algebra map t_{i,j} -> y_i y_j.
Polynomial embed_t_to_y(const Polynomial& F, const FiberRing& fr);

/// Attempts to rewrite M*G (G in S, M a monomial of S) as a polynomial in the
/// products y_i y_j with distinct indices, pairing deterministically: the
/// smallest index present is paired with the most frequent other index (ties
/// toward the smaller index). Returns the preimage in T, or nothing when some
/// term admits no perfect pairing (odd degree or an index occurring more than
/// half the time).
std::optional<Polynomial> pair_into_t(const Polynomial& G, const Monomial& M, const FiberRing& fr);

struct SymGenerators {
    std::vector<Circuit3> circuits;
    std::vector<Polynomial> linear;                  // in R[t], bidegree (0,1)
    std::vector<Polynomial> syz_a, syz_b, syz_c;     // in R[t], bidegree (1,1)
    long minimal_count = 0;
    long expected_count = 0; // n(n-2) - p
    bool sound = false;      // every generator evaluates to 0 under t -> f
    long strand_checked_to = 0;
    bool strand_generated = false; // generators span the t-degree-1 strand up to that x-degree
    bool pass = false;
};

/// Generators of the symmetric ideal of I_{n-2}(A): all circuit relations plus
/// A, B, C for every triple. Minimality is decided by bigraded linear algebra
/// on the t-degree-1 strand; the strand spanning check runs up to x-degree
/// `strand_dmax`.
SymGenerators sym_ideal(const Ot2Context& ctx, long strand_dmax = 3, const Budget& budget = {});

struct SylvesterResult {
    std::vector<std::vector<Polynomial>> content; // matrix over T
    Polynomial determinant;                       // in T
    Monomial content_monomial;                    // common t-monomial factor
    Polynomial cofactor;                          // determinant / monomial factor
    bool in_rees_ideal = false;
};

/// Writes each row (an element of R[t] of x-degree 1) as a T-combination of
/// the forms of `seq` (which must be linearly independent, one per row),
/// takes the determinant of that content matrix, and reports the result with
/// its t-monomial content split off. Throws when a row is not expressible.
SylvesterResult sylvester_form(const Ot2Context& ctx, std::span<const Polynomial> rows,
                               std::span<const LinearForm> seq);

struct DimensionReport {
    long dim = 0;
    size_t k = 0;
    bool pass = false;
};

/// Krull dimension of T / I(2,A) equals the rank, for essential arrangements.
DimensionReport dimension_check(const Arrangement& A, const Budget& budget = {});

struct PropertiesReport {
    bool equality = false;
    bool pass = false;
};

/// J(A) : <y_1..y_n> = I(A), with J(A) the image of I(2,A) under t -> y y.
PropertiesReport properties_check(const Arrangement& A, const Budget& budget = {});

} // namespace foldprod
