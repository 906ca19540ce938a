#pragma once

// Test-only oracles, independent of the resolution engine they check.

#include "foldprod/linalg.hpp"
#include "foldprod/resolution.hpp"

#include <map>

namespace fptest {

using namespace foldprod;

// Standard monomials of R/I in one degree (complement of the lead ideal).
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, long d) {
    const size_t k = gb.ring.nvars();
    std::vector<Monomial> out;
    std::vector<int> exp(k, 0);
    std::function<void(size_t, long)> rec = [&](size_t v, long rem) {
        if (v + 1 == k) {
            exp[v] = static_cast<int>(rem);
            Monomial m{std::vector<int>(exp)};
            bool div = false;
            for (const auto& l : gb.leads)
                if (l.divides(m)) { div = true; break; }
            if (!div) out.push_back(m);
            exp[v] = 0;
            return;
        }
        for (long t = 0; t <= rem; ++t) {
            exp[v] = static_cast<int>(t);
            rec(v + 1, rem - t);
        }
        exp[v] = 0;
    };
    if (k == 0) return out;
    rec(0, d);
    return out;
}

// Graded Betti numbers of R/I from Koszul homology: beta_{i,j} =
// dim H_i(K(x_1..x_k) tensor R/I)_j, computed degree by degree with exact
// linear algebra. Uses only normal forms, never syzygies.
inline std::map<std::pair<int, long>, long> koszul_betti(const Ideal& I, long jmax) {
    const Ring& R = I.ring();
    const size_t k = R.nvars();
    auto gb = I.groebner();

    // bases of (R/I)_d with index lookup
    std::vector<std::vector<Monomial>> bases;
    std::vector<std::map<Monomial, size_t>> index;
    for (long d = 0; d <= jmax + 1; ++d) {
        bases.push_back(d < 0 ? std::vector<Monomial>{} : standard_monomials(*gb, d));
        std::map<Monomial, size_t> ix;
        for (size_t i = 0; i < bases.back().size(); ++i) ix[bases.back()[i]] = i;
        index.push_back(std::move(ix));
    }

    // multiplication by x_u on (R/I)_d expressed on standard monomials
    auto mult = [&](size_t u, const Monomial& m, long d) {
        Monomial xm = m;
        xm.e[u] += 1;
        Polynomial nf = normal_form(Polynomial::monomial(R, xm, Rational(1)), *gb);
        QVector v(bases[static_cast<size_t>(d + 1)].size(), Rational(0));
        for (const auto& t : nf.terms()) v[index[static_cast<size_t>(d + 1)].at(t.m)] += t.c;
        return v;
    };

    std::vector<uint32_t> subsets_by_size[33];
    for (uint32_t s = 0; s < (1u << k); ++s)
        subsets_by_size[__builtin_popcount(s)].push_back(s);

    auto sign_at = [&](uint32_t set, size_t u) {
        int below = __builtin_popcount(set & ((1u << u) - 1));
        return below % 2 == 0 ? Rational(1) : Rational(-1);
    };

    // boundary K_i -> K_{i-1} in internal degree j (columns: e_S (x) monomial
    // of degree j - i; rows: e_T (x) monomial of degree j - i + 1)
    auto boundary = [&](int i, long j) {
        QMatrix M;
        if (i <= 0 || j - i < 0) return M;
        const auto& doms = subsets_by_size[static_cast<size_t>(i)];
        const auto& cods = subsets_by_size[static_cast<size_t>(i - 1)];
        std::map<uint32_t, size_t> cod_ix;
        for (size_t t = 0; t < cods.size(); ++t) cod_ix[cods[t]] = t;
        const auto& dom_base = bases[static_cast<size_t>(j - i)];
        const auto& cod_base = bases[static_cast<size_t>(j - i + 1)];
        M.assign(cods.size() * cod_base.size(),
                 QVector(doms.size() * dom_base.size(), Rational(0)));
        for (size_t sc = 0; sc < doms.size(); ++sc) {
            uint32_t S = doms[sc];
            for (size_t mc = 0; mc < dom_base.size(); ++mc) {
                size_t col = sc * dom_base.size() + mc;
                for (size_t u = 0; u < k; ++u) {
                    if (!(S & (1u << u))) continue;
                    uint32_t T = S & ~(1u << u);
                    Rational sg = sign_at(S, u);
                    QVector img = mult(u, dom_base[mc], j - i);
                    size_t base_row = cod_ix.at(T) * cod_base.size();
                    for (size_t r = 0; r < img.size(); ++r)
                        if (!img[r].is_zero()) M[base_row + r][col] += sg * img[r];
                }
            }
        }
        return M;
    };

    std::map<std::pair<int, long>, long> betti;
    for (int i = 0; i <= static_cast<int>(k); ++i) {
        for (long j = 0; j <= jmax; ++j) {
            if (j - i < 0) continue;
            long dim_dom = static_cast<long>(subsets_by_size[static_cast<size_t>(i)].size() *
                                             bases[static_cast<size_t>(j - i)].size());
            if (dim_dom == 0) continue;
            QMatrix d_i = boundary(i, j);
            QMatrix d_next = boundary(i + 1, j);
            long rank_i = d_i.empty() ? 0 : static_cast<long>(rank(d_i));
            long rank_next = d_next.empty() ? 0 : static_cast<long>(rank(d_next));
            long b = dim_dom - rank_i - rank_next;
            if (b != 0) betti[{i, j}] = b;
        }
    }
    return betti;
}

} // namespace fptest
