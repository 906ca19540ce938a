#include "foldprod/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace foldprod {

namespace {

// Working representation inside the engine: terms sorted strictly descending
// under the active order.
struct EP {
    std::vector<Term> t;
    bool empty() const { return t.empty(); }
    const Term& lead() const { return t.front(); }
};

EP to_ep(const Polynomial& p, const MonomialOrder& ord) {
    EP e;
    e.t = p.terms();
    std::sort(e.t.begin(), e.t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    return e;
}

Polynomial from_ep(const Ring& r, EP e) { return Polynomial::from_terms(r, std::move(e.t)); }

// a := a[start..] - c * x^q * b, merged in descending order.
void sub_mul(EP& a, size_t start, const EP& b, const Monomial& q, const Rational& c,
             const MonomialOrder& ord) {
    std::vector<Term> out;
    out.reserve(a.t.size() - start + b.t.size());
    size_t i = start, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        Monomial bm = b.t[j].m * q;
        int cmp = ord.compare(a.t[i].m, bm);
        if (cmp > 0) {
            out.push_back(std::move(a.t[i++]));
        } else if (cmp < 0) {
            out.push_back({std::move(bm), -(c * b.t[j].c)});
            ++j;
        } else {
            Rational nc = a.t[i].c - c * b.t[j].c;
            if (!nc.is_zero()) out.push_back({a.t[i].m, std::move(nc)});
            ++i, ++j;
        }
    }
    while (i < a.t.size()) out.push_back(std::move(a.t[i++]));
    while (j < b.t.size()) {
        out.push_back({b.t[j].m * q, -(c * b.t[j].c)});
        ++j;
    }
    a.t = std::move(out);
}

// Fully reduces p: every term of the result avoids all leading monomials.
// When `quotients` is given, records p = sum quotients[i]*basis[i] + result.
EP reduce_full(EP p, const std::vector<EP>& basis, const std::vector<Monomial>& leads,
               const MonomialOrder& ord, std::vector<EP>* quotients = nullptr) {
    std::vector<Term> done;
    size_t start = 0;
    while (start < p.t.size()) {
        const Term& lt = p.t[start];
        size_t r = basis.size();
        for (size_t i = 0; i < basis.size(); ++i) {
            if (!basis[i].empty() && leads[i].divides(lt.m)) {
                r = i;
                break;
            }
        }
        if (r == basis.size()) {
            done.push_back(p.t[start]);
            ++start;
        } else {
            Monomial q = lt.m / leads[r];
            Rational c = lt.c / basis[r].lead().c;
            if (quotients) (*quotients)[r].t.push_back({q, c});
            sub_mul(p, start, basis[r], q, c, ord);
            start = 0;
        }
    }
    EP out;
    out.t = std::move(done);
    return out;
}

struct SPair {
    size_t i, j;
    Monomial lcm;
    long deg;
};

struct SPairCmp {
    const MonomialOrder* ord;
    bool operator()(const SPair& a, const SPair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

using PairSet = std::set<SPair, SPairCmp>;

// Gebauer-Moeller pair update on arrival of basis element t.
void update_pairs(PairSet& pairs, const std::vector<EP>& basis, const std::vector<Monomial>& leads,
                  size_t t, const Ring& ring) {
    const Monomial& lt = leads[t];
    struct Cand {
        size_t i;
        Monomial lcm;
        bool coprime;
        bool dead = false;
    };
    std::vector<Cand> cand;
    cand.reserve(t);
    for (size_t i = 0; i < t; ++i) {
        if (basis[i].empty()) continue;
        Monomial l = Monomial::lcm(leads[i], lt);
        cand.push_back({i, std::move(l), Monomial::coprime(leads[i], lt)});
    }

    // M: kill candidates whose lcm is a proper multiple of another candidate's.
    for (auto& a : cand) {
        if (a.dead) continue;
        for (const auto& b : cand) {
            if (&a == &b || b.dead) continue;
            if (b.lcm != a.lcm && b.lcm.divides(a.lcm)) {
                a.dead = true;
                break;
            }
        }
    }
    // F: in each equal-lcm class keep a single member, preferring one that the
    // product criterion removes anyway (then the class contributes nothing).
    for (size_t a = 0; a < cand.size(); ++a) {
        if (cand[a].dead) continue;
        size_t keep = a;
        for (size_t b = a + 1; b < cand.size(); ++b) {
            if (cand[b].dead || cand[b].lcm != cand[a].lcm) continue;
            if (cand[b].coprime && !cand[keep].coprime) {
                cand[keep].dead = true;
                keep = b;
            } else {
                cand[b].dead = true;
            }
        }
    }
    // B: prune old pairs now covered by lt.
    for (auto it = pairs.begin(); it != pairs.end();) {
        const SPair& p = *it;
        if (lt.divides(p.lcm) && Monomial::lcm(leads[p.i], lt) != p.lcm &&
            Monomial::lcm(leads[p.j], lt) != p.lcm) {
            it = pairs.erase(it);
        } else {
            ++it;
        }
    }
    for (auto& c : cand) {
        if (c.dead || c.coprime) continue;
        long deg = c.lcm.wdegree(ring);
        pairs.insert(SPair{c.i, t, std::move(c.lcm), deg});
    }
}

void check_budget(const EP& h, const Ring& ring, size_t basis_size, const Budget& budget) {
    if (basis_size > budget.max_basis)
        throw budget_error("groebner: basis size exceeds " + std::to_string(budget.max_basis));
    if (!h.empty() && h.lead().m.wdegree(ring) > budget.max_degree)
        throw budget_error("groebner: degree exceeds " + std::to_string(budget.max_degree));
}

} // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const Ring& ring,
                         const MonomialOrder& order, const Budget& budget) {
    for (const auto& g : gens)
        if (g.ring() != ring) throw std::invalid_argument("buchberger: generator ring mismatch");

    std::vector<EP> basis;
    std::vector<Monomial> leads;
    SPairCmp cmp{&order};
    PairSet pairs(cmp);

    auto add_element = [&](EP h) {
        check_budget(h, ring, basis.size() + 1, budget);
        leads.push_back(h.lead().m);
        basis.push_back(std::move(h));
        update_pairs(pairs, basis, leads, basis.size() - 1, ring);
    };

    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        // Seed with the normal form so repeated generators collapse early.
        EP h = reduce_full(to_ep(g, order), basis, leads, order);
        if (!h.empty()) add_element(std::move(h));
    }

    while (!pairs.empty()) {
        SPair p = *pairs.begin();
        pairs.erase(pairs.begin());
        const EP& f = basis[p.i];
        const EP& g = basis[p.j];
        if (f.empty() || g.empty()) continue;
        EP s;
        s.t = f.t;
        // S(f,g) = (lcm/lt_f) f / lc_f - (lcm/lt_g) g / lc_g, built monic-free.
        {
            Monomial qf = p.lcm / leads[p.i];
            for (auto& t : s.t) {
                t.m = t.m * qf;
                t.c /= f.lead().c;
            }
            // renaming by a fixed monomial keeps the descending order
            sub_mul(s, 0, g, p.lcm / leads[p.j], g.lead().c.inverse(), order);
        }
        EP h = reduce_full(std::move(s), basis, leads, order);
        if (!h.empty()) add_element(std::move(h));
    }

    // Minimalize: drop elements whose lead is a proper multiple of another lead.
    std::vector<size_t> keep;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].empty()) continue;
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || basis[j].empty()) continue;
            if (leads[j] != leads[i] && leads[j].divides(leads[i])) {
                redundant = true;
                break;
            }
        }
        if (!redundant) keep.push_back(i);
    }

    std::vector<EP> mini;
    std::vector<Monomial> mleads;
    for (size_t i : keep) {
        mini.push_back(std::move(basis[i]));
        mleads.push_back(leads[i]);
    }

    // Tail-reduce to the unique reduced basis. Leads are pairwise
    // non-divisible, so a single pass against the fixed lead set suffices.
    for (size_t i = 0; i < mini.size(); ++i) {
        EP self = std::move(mini[i]);
        mini[i].t.clear();
        mini[i] = reduce_full(std::move(self), mini, mleads, order);
    }
    for (auto& e : mini) {
        Rational inv = e.lead().c.inverse();
        for (auto& t : e.t) t.c *= inv;
    }

    std::vector<size_t> idx(mini.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return order.less(mleads[a], mleads[b]); });

    GroebnerBasis gb{ring, order, {}, {}};
    for (size_t i : idx) {
        gb.leads.push_back(mleads[i]);
        gb.polys.push_back(from_ep(ring, std::move(mini[i])));
    }
    return gb;
}

namespace {

std::pair<std::vector<EP>, std::vector<Monomial>> gb_eps(const GroebnerBasis& gb) {
    std::vector<EP> eps;
    eps.reserve(gb.polys.size());
    for (const auto& p : gb.polys) eps.push_back(to_ep(p, gb.order));
    return {std::move(eps), gb.leads};
}

} // namespace

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (p.ring() != gb.ring) throw std::invalid_argument("normal_form: ring mismatch");
    if (gb.polys.empty()) return p;
    auto [eps, leads] = gb_eps(gb);
    return from_ep(gb.ring, reduce_full(to_ep(p, gb.order), eps, leads, gb.order));
}

Polynomial divide(const Polynomial& p, const GroebnerBasis& gb,
                  std::vector<Polynomial>* quotients) {
    if (p.ring() != gb.ring) throw std::invalid_argument("divide: ring mismatch");
    auto [eps, leads] = gb_eps(gb);
    std::vector<EP> q(gb.polys.size());
    EP r = reduce_full(to_ep(p, gb.order), eps, leads, gb.order, &q);
    if (quotients) {
        quotients->clear();
        for (auto& e : q) quotients->push_back(from_ep(gb.ring, std::move(e)));
    }
    return from_ep(gb.ring, std::move(r));
}

Ideal::Ideal(Ring r, std::vector<Polynomial> gens)
    : ring_(std::move(r)), cache_(std::make_shared<Cache>()) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.ring() != ring_) throw std::invalid_argument("Ideal: generator ring mismatch");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner(const MonomialOrder& ord,
                                                     const Budget& budget) const {
    if (!cache_) throw std::logic_error("Ideal: uninitialized");
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->by_order.find(ord.cache_key());
        if (it != cache_->by_order.end()) return it->second;
    }
    auto gb = std::make_shared<const GroebnerBasis>(buchberger(gens_, ring_, ord, budget));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, fresh] = cache_->by_order.emplace(ord.cache_key(), gb);
    return it->second; // idempotent: first writer wins
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner(const Budget& budget) const {
    return groebner(MonomialOrder::grevlex(ring_), budget);
}

bool Ideal::is_zero_ideal(const Budget& budget) const { return groebner(budget)->polys.empty(); }

bool Ideal::is_unit_ideal(const Budget& budget) const {
    const auto gb = groebner(budget);
    return gb->size() == 1 && gb->polys[0].is_unit_constant();
}

bool contains(const Ideal& I, const Polynomial& p, const Budget& budget) {
    return normal_form(p, *I.groebner(budget)).is_zero();
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& g) {
    if (p.ring() != g.ring()) throw std::invalid_argument("exact_divide: ring mismatch");
    if (g.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
    MonomialOrder ord = MonomialOrder::grevlex(p.ring());
    EP a = to_ep(p, ord);
    EP b = to_ep(g, ord);
    std::vector<Term> quot;
    while (!a.empty()) {
        if (!b.lead().m.divides(a.lead().m))
            throw std::invalid_argument("exact_divide: not divisible");
        Monomial q = a.lead().m / b.lead().m;
        Rational c = a.lead().c / b.lead().c;
        quot.push_back({q, c});
        sub_mul(a, 0, b, q, c, ord);
    }
    return Polynomial::from_terms(p.ring(), std::move(quot));
}

Polynomial map_variables(const Polynomial& p, const Ring& target, const std::vector<int>& var_map) {
    if (var_map.size() != p.ring().nvars())
        throw std::invalid_argument("map_variables: map arity mismatch");
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        Monomial m(target.nvars());
        for (size_t v = 0; v < var_map.size(); ++v) {
            if (t.m.e[v] == 0) continue;
            if (var_map[v] < 0)
                throw std::invalid_argument("map_variables: dropped variable occurs");
            m.e[static_cast<size_t>(var_map[v])] += t.m.e[v];
        }
        out.push_back({std::move(m), t.c});
    }
    return Polynomial::from_terms(target, std::move(out));
}

Ideal eliminate(const Ideal& I, const std::vector<size_t>& drop, const Budget& budget) {
    const Ring& R = I.ring();
    if (drop.empty()) throw std::invalid_argument("eliminate: empty variable set");
    std::vector<bool> dropped(R.nvars(), false);
    for (size_t v : drop) {
        if (v >= R.nvars()) throw std::invalid_argument("eliminate: variable index out of range");
        dropped[v] = true;
    }

    // Permuted ring: dropped variables first.
    std::vector<std::string> names;
    std::vector<long> weights;
    std::vector<int> fwd(R.nvars(), -1);
    for (size_t v = 0; v < R.nvars(); ++v)
        if (dropped[v]) {
            fwd[v] = static_cast<int>(names.size());
            names.push_back(R.var(v));
            weights.push_back(R.weight(v));
        }
    const size_t block = names.size();
    std::vector<int> keep_src;
    for (size_t v = 0; v < R.nvars(); ++v)
        if (!dropped[v]) {
            fwd[v] = static_cast<int>(names.size());
            names.push_back(R.var(v));
            weights.push_back(R.weight(v));
            keep_src.push_back(static_cast<int>(v));
        }
    Ring P(names, weights);

    std::vector<Polynomial> pgens;
    for (const auto& g : I.gens()) pgens.push_back(map_variables(g, P, fwd));
    GroebnerBasis gb = buchberger(pgens, P, MonomialOrder::elim(P, block), budget);

    // Subring of the kept variables, original relative order.
    std::vector<std::string> knames;
    std::vector<long> kweights;
    for (int v : keep_src) {
        knames.push_back(R.var(static_cast<size_t>(v)));
        kweights.push_back(R.weight(static_cast<size_t>(v)));
    }
    Ring S(knames, kweights);
    std::vector<int> back(P.nvars(), -1);
    for (size_t v = block; v < P.nvars(); ++v) back[v] = static_cast<int>(v - block);

    std::vector<Polynomial> egens;
    for (const auto& g : gb.polys) {
        bool free_of_drop = true;
        for (const auto& t : g.terms())
            for (size_t v = 0; v < block && free_of_drop; ++v)
                if (t.m.e[v] != 0) free_of_drop = false;
        if (free_of_drop) egens.push_back(map_variables(g, S, back));
    }
    return Ideal(S, std::move(egens));
}

Ideal intersect(const Ideal& I, const Ideal& J, const Budget& budget) {
    const Ring& R = I.ring();
    if (R != J.ring()) throw std::invalid_argument("intersect: ring mismatch");

    std::vector<std::string> names = {"@w"};
    std::vector<long> weights = {1};
    for (size_t v = 0; v < R.nvars(); ++v) {
        names.push_back(R.var(v));
        weights.push_back(R.weight(v));
    }
    Ring P(names, weights);
    std::vector<int> fwd(R.nvars());
    for (size_t v = 0; v < R.nvars(); ++v) fwd[v] = static_cast<int>(v + 1);

    Polynomial w = Polynomial::variable(P, 0);
    Polynomial one = Polynomial::one(P);
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens()) gens.push_back(w * map_variables(f, P, fwd));
    for (const auto& g : J.gens()) gens.push_back((one - w) * map_variables(g, P, fwd));

    Ideal aux(P, std::move(gens));
    Ideal got = eliminate(aux, {0}, budget);
    // eliminate reproduces the original variable ring
    std::vector<int> id(R.nvars());
    for (size_t v = 0; v < R.nvars(); ++v) id[v] = static_cast<int>(v);
    std::vector<Polynomial> back;
    for (const auto& g : got.gens()) back.push_back(map_variables(g, R, id));
    return Ideal(R, std::move(back));
}

Ideal colon(const Ideal& I, const Polynomial& g, const Budget& budget) {
    if (g.ring() != I.ring()) throw std::invalid_argument("colon: ring mismatch");
    if (g.is_zero()) return Ideal::unit(I.ring());
    Ideal cap = intersect(I, Ideal(I.ring(), {g}), budget);
    std::vector<Polynomial> quots;
    for (const auto& h : cap.gens()) quots.push_back(exact_divide(h, g));
    return Ideal(I.ring(), std::move(quots));
}

Ideal colon_by_ideal(const Ideal& I, const Ideal& J, const Budget& budget) {
    if (J.has_no_gens()) return Ideal::unit(I.ring());
    bool first = true;
    Ideal acc;
    for (const auto& g : J.gens()) {
        Ideal c = colon(I, g, budget);
        acc = first ? c : intersect(acc, c, budget);
        first = false;
    }
    return acc;
}

Ideal saturate(const Ideal& I, const Budget& budget) {
    const Ring& R = I.ring();
    std::vector<Polynomial> mgens;
    for (size_t v = 0; v < R.nvars(); ++v) mgens.push_back(Polynomial::variable(R, v));
    Ideal m(R, std::move(mgens));

    Ideal cur = I;
    while (true) {
        Ideal next = colon_by_ideal(cur, m, budget);
        if (ideal_equal(next, cur, budget)) return cur;
        cur = next;
    }
}

Ideal ideal_power(const Ideal& I, long e) {
    if (e < 0) throw std::invalid_argument("ideal_power: negative exponent");
    if (e == 0) return Ideal::unit(I.ring());
    const auto& g = I.gens();
    std::vector<Polynomial> out;
    // multisets of generator indices of size e, nondecreasing
    std::vector<size_t> pick(static_cast<size_t>(e), 0);
    if (g.empty()) return Ideal::zero(I.ring());
    while (true) {
        Polynomial p = Polynomial::one(I.ring());
        for (size_t t : pick) p *= g[t];
        out.push_back(std::move(p));
        long i = e - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == g.size() - 1) --i;
        if (i < 0) break;
        size_t nv = ++pick[static_cast<size_t>(i)];
        for (size_t j = static_cast<size_t>(i) + 1; j < pick.size(); ++j) pick[j] = nv;
    }
    return Ideal(I.ring(), std::move(out));
}

Ideal max_ideal_power(const Ring& r, long e) {
    if (e < 0) throw std::invalid_argument("max_ideal_power: negative exponent");
    if (e == 0) return Ideal::unit(r);
    std::vector<Polynomial> gens;
    std::vector<int> exps(r.nvars(), 0);
    // all compositions of e into nvars parts, lexicographic
    std::function<void(size_t, int)> rec = [&](size_t v, int rem) {
        if (v + 1 == r.nvars()) {
            exps[v] = rem;
            gens.push_back(Polynomial::monomial(r, Monomial(std::vector<int>(exps)), Rational(1)));
            return;
        }
        for (int take = rem; take >= 0; --take) {
            exps[v] = take;
            rec(v + 1, rem - take);
        }
        exps[v] = 0;
    };
    if (r.nvars() == 0) return Ideal::zero(r);
    rec(0, static_cast<int>(e));
    return Ideal(r, std::move(gens));
}

} // namespace foldprod
