#pragma once

#include "foldprod/rational.hpp"
#include "foldprod/ring.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace foldprod {

struct Term {
    Monomial m;
    Rational c;

    friend bool operator==(const Term& a, const Term& b) { return a.m == b.m && a.c == b.c; }
};

/// Degree of the zero polynomial.
inline constexpr long kMinusInfinityDegree = -1;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are stored sorted strictly descending under the ring's grevlex order
/// (its weights included) with no zero coefficients, so iteration order and
/// rendering are deterministic.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring r) : ring_(std::move(r)) {}

    static Polynomial zero(const Ring& r) { return Polynomial(r); }
    static Polynomial constant(const Ring& r, Rational c);
    static Polynomial one(const Ring& r) { return constant(r, Rational(1)); }
    static Polynomial variable(const Ring& r, size_t i);
    static Polynomial monomial(const Ring& r, Monomial m, Rational c);
    /// Builds from arbitrary (possibly unsorted, repeated) terms.
    static Polynomial from_terms(const Ring& r, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    bool is_unit_constant() const { return terms_.size() == 1 && terms_[0].m.is_one(); }

    /// Weighted total degree; kMinusInfinityDegree for zero.
    long degree() const;
    bool is_homogeneous() const;

    Rational coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m, const Rational& c) const;
    Polynomial pow(unsigned long n) const;

    /// Substitutes images[i] for variable i; images live in `target`.
    Polynomial substitute(const Ring& target, std::span<const Polynomial> images) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str() const;

private:
    void check_same_ring(const Polynomial& o) const;

    Ring ring_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace foldprod
