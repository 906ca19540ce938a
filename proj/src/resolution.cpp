#include "foldprod/resolution.hpp"

#include <algorithm>
#include <functional>

namespace foldprod {

namespace {

// ---------------------------------------------------------------------------
// Module-level machinery for iterated Schreyer syzygies.
//
// Level t lives in a free module over the ring; a term is (monomial,
// component, coefficient). The order on level t is the Schreyer order induced
// by the leading terms of the level-(t-1) basis, unwinding recursively down to
// the ring order; ties break toward the smaller component.
// ---------------------------------------------------------------------------

struct MTerm {
    Monomial m;
    size_t comp;
    Rational c;
};

struct MVec {
    std::vector<MTerm> t; // sorted strictly descending under the level order
    bool empty() const { return t.empty(); }
    const MTerm& lead() const { return t.front(); }
};

class SchreyerTower {
public:
    explicit SchreyerTower(MonomialOrder ring_ord) : ring_ord_(std::move(ring_ord)) {}

    // Installs level t+1 given the leading terms of the level-t basis.
    void push_level(std::vector<std::pair<Monomial, size_t>> leads) {
        levels_.push_back(std::move(leads));
    }
    size_t depth() const { return levels_.size(); }

    // Compares terms of the free module at `level` (level 0 = the ring).
    int compare(size_t level, const Monomial& a, size_t ca, const Monomial& b, size_t cb) const {
        if (level == 0) return ring_ord_.compare(a, b);
        const auto& L = levels_[level - 1];
        const auto& [ua, pa] = L[ca];
        const auto& [ub, pb] = L[cb];
        int c = compare(level - 1, a * ua, pa, b * ub, pb);
        if (c != 0) return c;
        if (ca != cb) return ca < cb ? 1 : -1; // smaller component wins ties
        return 0;
    }

private:
    MonomialOrder ring_ord_;
    std::vector<std::vector<std::pair<Monomial, size_t>>> levels_;
};

// a := a[start..] - c * x^q * b, merged descending at `level`.
void msub_mul(MVec& a, size_t start, const MVec& b, const Monomial& q, const Rational& c,
              const SchreyerTower& tw, size_t level) {
    std::vector<MTerm> out;
    out.reserve(a.t.size() - start + b.t.size());
    size_t i = start, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        Monomial bm = b.t[j].m * q;
        int cmp = tw.compare(level, a.t[i].m, a.t[i].comp, bm, b.t[j].comp);
        if (cmp > 0) {
            out.push_back(std::move(a.t[i++]));
        } else if (cmp < 0) {
            out.push_back({std::move(bm), b.t[j].comp, -(c * b.t[j].c)});
            ++j;
        } else {
            Rational nc = a.t[i].c - c * b.t[j].c;
            if (!nc.is_zero()) out.push_back({a.t[i].m, a.t[i].comp, std::move(nc)});
            ++i, ++j;
        }
    }
    while (i < a.t.size()) out.push_back(std::move(a.t[i++]));
    while (j < b.t.size()) {
        out.push_back({b.t[j].m * q, b.t[j].comp, -(c * b.t[j].c)});
        ++j;
    }
    a.t = std::move(out);
}

// Full reduction of v by the basis at `level`; optionally records quotients.
MVec mreduce(MVec v, const std::vector<MVec>& basis, const SchreyerTower& tw, size_t level,
             std::vector<std::vector<Term>>* quotients = nullptr) {
    std::vector<MTerm> done;
    size_t start = 0;
    while (start < v.t.size()) {
        const MTerm& lt = v.t[start];
        size_t r = basis.size();
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].empty()) continue;
            const MTerm& bl = basis[i].lead();
            if (bl.comp == lt.comp && bl.m.divides(lt.m)) {
                r = i;
                break;
            }
        }
        if (r == basis.size()) {
            done.push_back(v.t[start]);
            ++start;
        } else {
            Monomial q = lt.m / basis[r].lead().m;
            Rational c = lt.c / basis[r].lead().c;
            if (quotients) (*quotients)[r].push_back({q, c});
            msub_mul(v, start, basis[r], q, c, tw, level);
            start = 0;
        }
    }
    MVec out;
    out.t = std::move(done);
    return out;
}

// Reduced module Groebner basis from a raw one: minimal leads, tails fully
// reduced, monic, then sorted by descending lex of the lead monomial (ties by
// component). The lex-descending arrangement keeps the iterated Schreyer
// construction finite.
std::vector<MVec> interreduce(std::vector<MVec> raw, const SchreyerTower& tw, size_t level) {
    std::vector<size_t> keep_idx;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].empty()) continue;
        bool redundant = false;
        for (size_t j = 0; j < raw.size() && !redundant; ++j) {
            if (i == j || raw[j].empty()) continue;
            const MTerm& a = raw[i].lead();
            const MTerm& b = raw[j].lead();
            if (a.comp == b.comp && b.m.divides(a.m) &&
                (b.m != a.m || j < i))
                redundant = true;
        }
        if (!redundant) keep_idx.push_back(i);
    }
    std::vector<MVec> kept;
    kept.reserve(keep_idx.size());
    for (size_t i : keep_idx) kept.push_back(std::move(raw[i]));
    for (size_t i = 0; i < kept.size(); ++i) {
        MVec self = std::move(kept[i]);
        kept[i].t.clear();
        kept[i] = mreduce(std::move(self), kept, tw, level);
    }
    for (auto& v : kept) {
        Rational inv = v.lead().c.inverse();
        for (auto& t : v.t) t.c *= inv;
    }
    std::sort(kept.begin(), kept.end(), [](const MVec& a, const MVec& b) {
        if (a.lead().m.e != b.lead().m.e) return a.lead().m.e > b.lead().m.e;
        return a.lead().comp < b.lead().comp;
    });
    return kept;
}

// One Schreyer step: the s-vectors of all same-component pairs of `basis`
// (a Groebner basis at `level`), reduced with quotient recording, yield a
// Groebner basis of the syzygy module at level+1.
std::vector<MVec> schreyer_syzygies(const std::vector<MVec>& basis, SchreyerTower& tw,
                                    size_t level, const Budget& budget) {
    std::vector<std::pair<Monomial, size_t>> leads;
    leads.reserve(basis.size());
    for (const auto& b : basis) leads.push_back({b.lead().m, b.lead().comp});
    tw.push_level(leads);

    std::vector<MVec> raw;
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i].lead().comp != basis[j].lead().comp) continue;
            const Monomial tau = Monomial::lcm(basis[i].lead().m, basis[j].lead().m);
            Monomial qi = tau / basis[i].lead().m;
            Monomial qj = tau / basis[j].lead().m;
            Rational ci = basis[i].lead().c.inverse();
            Rational cj = basis[j].lead().c.inverse();

            MVec s;
            s.t = basis[i].t;
            for (auto& t : s.t) {
                t.m = t.m * qi;
                t.c *= ci;
            }
            msub_mul(s, 0, basis[j], qj, cj, tw, level);

            std::vector<std::vector<Term>> quot(basis.size());
            MVec rem = mreduce(std::move(s), basis, tw, level, &quot);
            if (!rem.empty())
                throw std::logic_error("schreyer: s-vector did not reduce to zero");

            std::vector<MTerm> terms;
            terms.push_back({qi, i, ci});
            terms.push_back({qj, j, -cj});
            for (size_t h = 0; h < basis.size(); ++h)
                for (const auto& q : quot[h]) terms.push_back({q.m, h, -q.c});
            std::sort(terms.begin(), terms.end(), [&](const MTerm& a, const MTerm& b) {
                return tw.compare(level + 1, a.m, a.comp, b.m, b.comp) > 0;
            });
            MVec syz;
            syz.t = std::move(terms);
            if (syz.t.size() > budget.max_basis)
                throw budget_error("schreyer: syzygy size exceeds budget");
            raw.push_back(std::move(syz));
        }
    }
    return interreduce(std::move(raw), tw, level + 1);
}

long twist_of(const std::vector<std::vector<long>>& twists, size_t level_below, const MVec& v) {
    // internal degree of a homogeneous module element
    const MTerm& lt = v.lead();
    return lt.m.degree() + twists[level_below][lt.comp];
}

std::vector<std::vector<Polynomial>> level_matrix(const Ring& ring, const std::vector<MVec>& gens,
                                                  size_t rows) {
    std::vector<std::vector<Polynomial>> m(
        rows, std::vector<Polynomial>(gens.size(), Polynomial::zero(ring)));
    for (size_t c = 0; c < gens.size(); ++c) {
        std::vector<std::vector<Term>> per_row(rows);
        for (const auto& t : gens[c].t) per_row[t.comp].push_back({t.m, t.c});
        for (size_t r = 0; r < rows; ++r)
            if (!per_row[r].empty()) m[r][c] = Polynomial::from_terms(ring, std::move(per_row[r]));
    }
    return m;
}

// Unit-entry cancellation: repeatedly removes a pair of basis elements joined
// by a nonzero constant entry, adjusting the three adjacent maps.
void minimalize_complex(FreeResolution& res) {
    bool found = true;
    while (found) {
        found = false;
        for (size_t idx = 1; idx < res.maps.size() && !found; ++idx) {
            auto& A = res.maps[idx]; // F_{idx+1} -> F_idx
            for (size_t r0 = 0; r0 < A.size() && !found; ++r0) {
                for (size_t c0 = 0; c0 < (A.empty() ? 0 : A[r0].size()) && !found; ++c0) {
                    const Polynomial& u = A[r0][c0];
                    if (u.is_zero() || !u.is_unit_constant()) continue;
                    found = true;
                    const Rational uc = u.terms()[0].c;

                    // Schur complement on A, then drop row r0 / column c0.
                    for (size_t r = 0; r < A.size(); ++r) {
                        if (r == r0) continue;
                        if (A[r][c0].is_zero()) continue;
                        Polynomial factor = A[r][c0].scaled(uc.inverse());
                        for (size_t c = 0; c < A[r].size(); ++c) {
                            if (c == c0) continue;
                            if (!A[r0][c].is_zero()) A[r][c] -= factor * A[r0][c];
                        }
                    }
                    A.erase(A.begin() + static_cast<long>(r0));
                    for (auto& row : A) row.erase(row.begin() + static_cast<long>(c0));

                    // Next map up: drop the row for the removed F_{idx+1} basis element.
                    if (idx + 1 < res.maps.size()) {
                        auto& B = res.maps[idx + 1];
                        B.erase(B.begin() + static_cast<long>(c0));
                    }
                    // Map below: drop the column of the removed F_idx basis element.
                    auto& C = res.maps[idx - 1];
                    for (auto& row : C) row.erase(row.begin() + static_cast<long>(r0));

                    res.twists[idx].erase(res.twists[idx].begin() + static_cast<long>(r0));
                    res.twists[idx + 1].erase(res.twists[idx + 1].begin() + static_cast<long>(c0));
                }
            }
        }
    }
    // Trim trailing zero modules.
    while (res.twists.size() > 1 && res.twists.back().empty()) {
        res.twists.pop_back();
        res.maps.pop_back();
    }
}

} // namespace

std::vector<std::vector<Polynomial>> syzygies(const GroebnerBasis& gb, const Budget& budget) {
    if (gb.polys.empty()) return {};
    SchreyerTower tw(gb.order);
    std::vector<MVec> level1;
    for (const auto& p : gb.polys) {
        MVec v;
        for (const auto& t : p.terms()) v.t.push_back({t.m, 0, t.c});
        std::sort(v.t.begin(), v.t.end(), [&](const MTerm& a, const MTerm& b) {
            return gb.order.greater(a.m, b.m);
        });
        level1.push_back(std::move(v));
    }
    std::vector<MVec> syz = schreyer_syzygies(level1, tw, 0, budget);
    std::vector<std::vector<Polynomial>> out;
    for (const auto& s : syz) {
        std::vector<std::vector<Term>> per_comp(gb.polys.size());
        for (const auto& t : s.t) per_comp[t.comp].push_back({t.m, t.c});
        std::vector<Polynomial> row;
        for (auto& terms : per_comp)
            row.push_back(Polynomial::from_terms(gb.ring, std::move(terms)));
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

void require_standard_grading(const Ring& R, const char* who) {
    for (size_t v = 0; v < R.nvars(); ++v)
        if (R.weight(v) != 1)
            throw std::invalid_argument(std::string(who) + ": needs the standard grading");
}

} // namespace

std::pair<FreeResolution, BettiTable> minimal_free_resolution(const Ideal& I, const Budget& budget) {
    const Ring& R = I.ring();
    require_standard_grading(R, "minimal_free_resolution");
    for (const auto& g : I.gens())
        if (!g.is_homogeneous())
            throw std::invalid_argument("minimal_free_resolution: inhomogeneous generator");

    FreeResolution res;
    res.ring = R;
    res.twists.push_back({0});

    auto gb = I.groebner(MonomialOrder::grevlex(R), budget);

    BettiTable betti;
    if (gb->polys.empty()) { // zero ideal: R itself
        betti.entries[{0, 0}] = 1;
        return {std::move(res), std::move(betti)};
    }
    if (gb->size() == 1 && gb->polys[0].is_unit_constant()) { // unit ideal: R/I = 0
        res.twists.push_back({0});
        res.maps.push_back({{Polynomial::one(R)}});
        return {std::move(res), std::move(betti)};
    }

    SchreyerTower tw(gb->order);
    std::vector<MVec> cur;
    for (const auto& p : gb->polys) {
        MVec v;
        for (const auto& t : p.terms()) v.t.push_back({t.m, 0, t.c});
        std::sort(v.t.begin(), v.t.end(), [&](const MTerm& a, const MTerm& b) {
            return gb->order.greater(a.m, b.m);
        });
        cur.push_back(std::move(v));
    }
    std::sort(cur.begin(), cur.end(), [](const MVec& a, const MVec& b) {
        return a.lead().m.e > b.lead().m.e; // lex-descending leads
    });

    size_t level = 0;
    while (!cur.empty()) {
        std::vector<long> tw_level;
        for (const auto& v : cur) tw_level.push_back(twist_of(res.twists, level, v));
        res.maps.push_back(level_matrix(R, cur, res.twists[level].size()));
        res.twists.push_back(std::move(tw_level));
        if (res.twists.size() > R.nvars() + 3)
            throw budget_error("resolution: length exceeds variable count bound");
        cur = schreyer_syzygies(cur, tw, level, budget);
        ++level;
    }

    minimalize_complex(res);

    betti.entries[{0, 0}] = 1;
    for (size_t i = 1; i < res.twists.size(); ++i)
        for (long t : res.twists[i]) ++betti.entries[{static_cast<int>(i), t}];
    return {std::move(res), std::move(betti)};
}

long ring_dim_in_degree(size_t k, long d) {
    if (d < 0) return 0;
    if (k == 0) return d == 0 ? 1 : 0;
    // C(d+k-1, k-1)
    long n = d + static_cast<long>(k) - 1;
    long r = static_cast<long>(k) - 1;
    long v = 1;
    for (long i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

long free_module_dim_in_degree(const std::vector<long>& twists, size_t k, long d) {
    long s = 0;
    for (long t : twists) s += ring_dim_in_degree(k, d - t);
    return s;
}

std::vector<long> hilbert_function(const Ideal& I, long dmax, const Budget& budget) {
    const Ring& R = I.ring();
    require_standard_grading(R, "hilbert_function");
    auto gb = I.groebner(MonomialOrder::grevlex(R), budget);
    std::vector<Monomial> leads = gb->leads;

    std::vector<long> out;
    const size_t k = R.nvars();
    for (long d = 0; d <= dmax; ++d) {
        long count = 0;
        std::vector<int> exp(k, 0);
        std::function<void(size_t, long)> rec = [&](size_t v, long rem) {
            if (v + 1 == k) {
                exp[v] = static_cast<int>(rem);
                Monomial m{std::vector<int>(exp)};
                bool divisible = false;
                for (const auto& l : leads)
                    if (l.divides(m)) {
                        divisible = true;
                        break;
                    }
                if (!divisible) ++count;
                exp[v] = 0;
                return;
            }
            for (long take = 0; take <= rem; ++take) {
                exp[v] = static_cast<int>(take);
                rec(v + 1, rem - take);
            }
            exp[v] = 0;
        };
        if (k == 0) {
            out.push_back(d == 0 && leads.empty() ? 1 : 0);
            continue;
        }
        rec(0, d);
        out.push_back(count);
    }
    return out;
}

long krull_dimension(const Ideal& I, const Budget& budget) {
    const Ring& R = I.ring();
    if (R.nvars() > 32) throw std::invalid_argument("krull_dimension: too many variables");
    auto gb = I.groebner(MonomialOrder::grevlex(R), budget);
    if (gb->size() == 1 && gb->polys[0].is_unit_constant())
        throw std::invalid_argument("krull_dimension: unit ideal");

    // dim R/I = nvars - (minimum vertex cover of the lead supports).
    std::vector<uint32_t> supports;
    for (const auto& l : gb->leads) {
        uint32_t s = 0;
        for (size_t v = 0; v < l.e.size(); ++v)
            if (l.e[v] > 0) s |= (1u << v);
        supports.push_back(s);
    }
    size_t best = R.nvars() + 1;
    std::function<void(size_t, uint32_t, size_t)> cover = [&](size_t i, uint32_t chosen,
                                                              size_t used) {
        if (used >= best) return;
        while (i < supports.size() && (supports[i] & chosen)) ++i;
        if (i == supports.size()) {
            best = used;
            return;
        }
        uint32_t s = supports[i];
        for (size_t v = 0; v < R.nvars(); ++v)
            if (s & (1u << v)) cover(i + 1, chosen | (1u << v), used + 1);
    };
    cover(0, 0, 0);
    return static_cast<long>(R.nvars() - best);
}

bool verify_exactness(const FreeResolution& res, const Ideal& I, const Budget& budget) {
    const Ring& R = res.ring;
    // consecutive maps compose to zero
    for (size_t i = 0; i + 1 < res.maps.size(); ++i) {
        const auto& A = res.maps[i];     // F_{i+1} -> F_i
        const auto& B = res.maps[i + 1]; // F_{i+2} -> F_{i+1}
        size_t rows = res.twists[i].size();
        size_t mid = res.twists[i + 1].size();
        size_t cols = res.twists[i + 2].size();
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) {
                Polynomial s = Polynomial::zero(R);
                for (size_t m = 0; m < mid; ++m) s += A[r][m] * B[m][c];
                if (!s.is_zero()) return false;
            }
    }
    long max_twist = 0;
    for (const auto& tw : res.twists)
        for (long t : tw) max_twist = std::max(max_twist, t);
    std::vector<long> hf = hilbert_function(I, max_twist + 2, budget);
    for (long d = 0; d <= max_twist + 2; ++d) {
        long alt = 0;
        int sign = 1;
        for (const auto& tw : res.twists) {
            alt += sign * free_module_dim_in_degree(tw, R.nvars(), d);
            sign = -sign;
        }
        if (alt != hf[static_cast<size_t>(d)]) return false;
    }
    return true;
}

} // namespace foldprod
