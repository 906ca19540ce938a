#pragma once

#include "foldprod/polynomial.hpp"

#include <vector>

namespace foldprod {

/// Homogeneous degree-1 polynomial, stored as its coefficient vector.
struct LinearForm {
    Ring ring;
    std::vector<Rational> coeffs; // length = ring.nvars()

    LinearForm() = default;
    LinearForm(Ring r, std::vector<Rational> c) : ring(std::move(r)), coeffs(std::move(c)) {
        if (coeffs.size() != ring.nvars())
            throw std::invalid_argument("LinearForm: coefficient count != variable count");
    }

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }

    Polynomial to_polynomial() const {
        std::vector<Term> terms;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].is_zero()) continue;
            Monomial m(ring.nvars());
            m.e[i] = 1;
            terms.push_back({std::move(m), coeffs[i]});
        }
        return Polynomial::from_terms(ring, std::move(terms));
    }

    /// Exact proportionality test (rank of the 2 x k coefficient matrix < 2).
    static bool proportional(const LinearForm& a, const LinearForm& b) {
        for (size_t i = 0; i < a.coeffs.size(); ++i)
            for (size_t j = i + 1; j < a.coeffs.size(); ++j)
                if (a.coeffs[i] * b.coeffs[j] != a.coeffs[j] * b.coeffs[i]) return false;
        return true;
    }

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.ring == b.ring && a.coeffs == b.coeffs;
    }
};

} // namespace foldprod
