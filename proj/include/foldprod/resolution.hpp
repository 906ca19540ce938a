#pragma once

#include "foldprod/groebner.hpp"

#include <map>
#include <utility>
#include <vector>

namespace foldprod {

/// Graded Betti numbers beta_{i,j} of a minimal graded free resolution of R/I.
struct BettiTable {
    std::map<std::pair<int, long>, long> entries; // (homological index, internal degree)

    long get(int i, long j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    int pdim() const {
        int p = 0;
        for (const auto& [key, v] : entries)
            if (v > 0) p = std::max(p, key.first);
        return p;
    }
    /// max j - i over nonzero entries.
    long regularity() const {
        long r = 0;
        for (const auto& [key, v] : entries)
            if (v > 0) r = std::max(r, key.second - key.first);
        return r;
    }
    /// True when the ideal is generated in degree d with every beta_{i,*}
    /// (i >= 1) concentrated in degree d + i - 1.
    bool is_linear(long d) const {
        for (const auto& [key, v] : entries) {
            if (v == 0 || key.first == 0) continue;
            if (key.second != d + key.first - 1) return false;
        }
        return true;
    }
    friend bool operator==(const BettiTable& a, const BettiTable& b) {
        return a.entries == b.entries;
    }
};

/// Chain complex of graded free modules resolving R/I:
///   0 <- R <- F_1 <- F_2 <- ...
/// twists[i] lists the generator degrees of F_i (twists[0] = {0} for R);
/// maps[i] is the matrix of F_{i+1} -> F_i, rows indexed by F_i.
struct FreeResolution {
    Ring ring;
    std::vector<std::vector<long>> twists;
    std::vector<std::vector<std::vector<Polynomial>>> maps;

    size_t length() const { return twists.empty() ? 0 : twists.size() - 1; }
};

/// Minimal graded free resolution of R/I together with its Betti table,
/// computed by iterated Schreyer syzygies followed by cancellation of unit
/// entries. Requires homogeneous generators (standard grading). For the unit
/// ideal the Betti table is empty (R/I = 0).
std::pair<FreeResolution, BettiTable> minimal_free_resolution(const Ideal& I,
                                                              const Budget& budget = {});

/// Generating set of the first syzygy module of gb under the Schreyer order:
/// each returned vector v satisfies sum_i v[i] * gb.polys[i] = 0 exactly.
std::vector<std::vector<Polynomial>> syzygies(const GroebnerBasis& gb, const Budget& budget = {});

/// dim_Q (R/I)_d for d = 0..dmax, from the count of standard monomials of the
/// leading-term ideal.
std::vector<long> hilbert_function(const Ideal& I, long dmax, const Budget& budget = {});

/// Krull dimension of R/I via maximal variable subsets independent of the
/// leading-term ideal. Rejects the unit ideal.
long krull_dimension(const Ideal& I, const Budget& budget = {});

/// dim_Q of the degree-d piece of a polynomial ring in k variables.
long ring_dim_in_degree(size_t k, long d);

/// dim_Q of the degree-d piece of the graded free module with given twists.
long free_module_dim_in_degree(const std::vector<long>& twists, size_t k, long d);

/// Certifies the complex: consecutive maps compose to zero, and for every
/// degree d <= max twist + 2 the alternating sum of graded free-module
/// dimensions equals dim (R/I)_d.
bool verify_exactness(const FreeResolution& res, const Ideal& I, const Budget& budget = {});

} // namespace foldprod
