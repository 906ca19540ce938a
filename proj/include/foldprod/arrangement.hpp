#pragma once

#include "foldprod/linalg.hpp"
#include "foldprod/linear_form.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace foldprod {

/// Maximal set of forms spanning a common 2-dimensional space.
struct Flat2 {
    std::vector<size_t> members;       // 0-based indices, ascending
    std::array<LinearForm, 2> witness; // basis of the span
};

/// Minimally dependent triple with its dependency coefficients,
/// normalized so the first coefficient is 1.
struct Circuit3 {
    std::array<size_t, 3> indices; // 0-based, ascending
    std::array<Rational, 3> coeffs; // coeffs[0]*l[i0] + coeffs[1]*l[i1] + coeffs[2]*l[i2] = 0
};

/// Ordered multiset of nonzero linear forms. Repetition is allowed; most of
/// the flat/circuit combinatorics requires the reduced (pairwise
/// nonproportional) case and says so.
class Arrangement {
public:
    Arrangement() = default;
    Arrangement(Ring r, std::vector<LinearForm> forms);

    const Ring& ring() const { return ring_; }
    size_t size() const { return forms_.size(); }
    const LinearForm& form(size_t i) const { return forms_.at(i); }
    const std::vector<LinearForm>& forms() const { return forms_; }

    /// Loads the text format: optional "vars:" line, one "form:" line per
    /// linear form, '#' comments. Without a "vars:" line the first form must
    /// be in vector mode and variables are named x1..xk.
    static Arrangement parse(const std::string& text);
    static Arrangement load(const std::string& path);

    /// Pairwise nonproportional support, keeping first occurrences in order;
    /// multiplicities[i] counts how many input forms are proportional to
    /// support form i.
    Arrangement reduced_support(std::vector<long>* multiplicities = nullptr) const;
    bool is_reduced() const;

    /// Rank of the n x k coefficient matrix.
    size_t rank() const;
    bool is_essential() const { return rank() == ring_.nvars(); }

    /// All rank-2 flats of a reduced arrangement, sorted by member list.
    /// Every unordered pair of indices lies in exactly one flat.
    std::vector<Flat2> rank2_flats() const;

    /// All dependent triples of a reduced arrangement with exact coefficients.
    std::vector<Circuit3> circuits3() const;

    /// Sum over rank-2 flats X of C(|A_X| - 1, 2).
    long p_invariant() const;

    bool is_generic3() const { return circuits3().empty(); }

    /// Minimum Hamming distance of the length-n dimension-k linear code whose
    /// generator matrix columns are the form coefficient vectors. Requires an
    /// essential arrangement and n <= 20.
    long min_distance() const;

    /// Change of variables projecting onto the span of the forms, for
    /// non-essential input. Returns the arrangement rewritten in r = rank()
    /// variables; *basis_rows receives the r x k reduction matrix whose rows
    /// express the new coordinates in the old ones.
    Arrangement essentialize(QMatrix* basis_rows = nullptr) const;

    QMatrix coefficient_matrix() const;

private:
    void require_reduced(const char* op) const;

    Ring ring_;
    std::vector<LinearForm> forms_;
};

long binomial(long n, long r);

} // namespace foldprod
