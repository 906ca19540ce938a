#include "foldprod/ot2.hpp"

#include "foldprod/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace foldprod {

namespace {

std::string t_name(size_t i, size_t j) {
    return "t_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

// Monomials of total degree d in `ring`, lexicographic by exponent vector.
std::vector<Monomial> monomials_of_degree(const Ring& ring, long d) {
    std::vector<Monomial> out;
    const size_t k = ring.nvars();
    std::vector<int> exp(k, 0);
    std::function<void(size_t, long)> rec = [&](size_t v, long rem) {
        if (v + 1 == k) {
            exp[v] = static_cast<int>(rem);
            out.emplace_back(std::vector<int>(exp));
            exp[v] = 0;
            return;
        }
        for (long take = rem; take >= 0; --take) {
            exp[v] = static_cast<int>(take);
            rec(v + 1, rem - take);
        }
        exp[v] = 0;
    };
    if (k == 0) {
        if (d == 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    rec(0, d);
    return out;
}

} // namespace

size_t FiberRing::t_index(size_t i, size_t j) const {
    if (i >= j || j >= n) throw std::invalid_argument("FiberRing: bad pair");
    // lexicographic position of (i, j) among pairs
    size_t pos = 0;
    for (size_t a = 0; a < i; ++a) pos += n - 1 - a;
    return pos + (j - i - 1);
}

std::pair<size_t, size_t> FiberRing::t_pair(size_t pos) const {
    for (size_t a = 0; a + 1 < n; ++a) {
        size_t block = n - 1 - a;
        if (pos < block) return {a, a + 1 + pos};
        pos -= block;
    }
    throw std::invalid_argument("FiberRing: bad position");
}

FiberRing make_fiber_ring(size_t n) {
    if (n < 2) throw std::invalid_argument("make_fiber_ring: need n >= 2");
    FiberRing fr;
    fr.n = n;
    std::vector<std::string> tnames;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) tnames.push_back(t_name(i, j));
    fr.t_ring = Ring(std::move(tnames));
    fr.y_ring = Ring::standard(n, "y");
    return fr;
}

Ot2Context::Ot2Context(Arrangement A) : A_(std::move(A)), fr_(make_fiber_ring(A_.size())) {
    if (!A_.is_reduced()) throw std::invalid_argument("Ot2Context: arrangement not reduced");
    const size_t n = A_.size();
    const Ring& R = A_.ring();

    std::vector<std::string> names = R.vars();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) names.push_back(t_name(i, j));
    rt_ = Ring(std::move(names));

    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Polynomial p = Polynomial::one(R);
            for (size_t u = 0; u < n; ++u)
                if (u != i && u != j) p *= A_.form(u).to_polynomial();
            f_.push_back(std::move(p));
        }
}

const Polynomial& Ot2Context::f(size_t i, size_t j) const { return f_[fr_.t_index(i, j)]; }

Polynomial Ot2Context::full_product() const {
    Polynomial p = Polynomial::one(A_.ring());
    for (const auto& f : A_.forms()) p *= f.to_polynomial();
    return p;
}

namespace {

Polynomial x_form_in_rt(const LinearForm& f, const Ring& rt) {
    std::vector<Term> terms;
    for (size_t v = 0; v < f.coeffs.size(); ++v) {
        if (f.coeffs[v].is_zero()) continue;
        Monomial m(rt.nvars());
        m.e[v] = 1;
        terms.push_back({std::move(m), f.coeffs[v]});
    }
    return Polynomial::from_terms(rt, std::move(terms));
}

} // namespace

Polynomial Ot2Context::syz_A(size_t a, size_t b, size_t c) const {
    const size_t k = x_count();
    Polynomial tab = Polynomial::variable(rt_, k + fr_.t_index(a, b));
    Polynomial tbc = Polynomial::variable(rt_, k + fr_.t_index(b, c));
    return x_form_in_rt(A_.form(a), rt_) * tab - x_form_in_rt(A_.form(c), rt_) * tbc;
}

Polynomial Ot2Context::syz_B(size_t a, size_t b, size_t c) const {
    const size_t k = x_count();
    Polynomial tac = Polynomial::variable(rt_, k + fr_.t_index(a, c));
    Polynomial tbc = Polynomial::variable(rt_, k + fr_.t_index(b, c));
    return x_form_in_rt(A_.form(a), rt_) * tac - x_form_in_rt(A_.form(b), rt_) * tbc;
}

Polynomial Ot2Context::syz_C(size_t a, size_t b, size_t c) const {
    const size_t k = x_count();
    Polynomial tab = Polynomial::variable(rt_, k + fr_.t_index(a, b));
    Polynomial tac = Polynomial::variable(rt_, k + fr_.t_index(a, c));
    return x_form_in_rt(A_.form(b), rt_) * tab - x_form_in_rt(A_.form(c), rt_) * tac;
}

Polynomial Ot2Context::lift_linear(const Circuit3& c) const {
    const size_t k = x_count();
    auto [i1, i2, i3] = c.indices;
    std::vector<Term> terms;
    auto add = [&](size_t i, size_t j, const Rational& q) {
        Monomial m(rt_.nvars());
        m.e[k + fr_.t_index(i, j)] = 1;
        terms.push_back({std::move(m), q});
    };
    add(i2, i3, c.coeffs[0]);
    add(i1, i3, c.coeffs[1]);
    add(i1, i2, c.coeffs[2]);
    return Polynomial::from_terms(rt_, std::move(terms));
}

Polynomial Ot2Context::evaluate_rt(const Polynomial& p) const {
    const Ring& R = A_.ring();
    std::vector<Polynomial> images;
    for (size_t v = 0; v < R.nvars(); ++v) images.push_back(Polynomial::variable(R, v));
    for (const auto& fij : f_) images.push_back(fij);
    return p.substitute(R, images);
}

Polynomial Ot2Context::evaluate_t(const Polynomial& p) const {
    return p.substitute(A_.ring(), f_);
}

std::vector<Polynomial> standard_linear_gens(const Arrangement& A, const FiberRing& fr) {
    std::vector<Polynomial> out;
    for (const auto& c : A.circuits3()) {
        auto [i1, i2, i3] = c.indices;
        std::vector<Term> terms;
        auto add = [&](size_t i, size_t j, const Rational& q) {
            Monomial m(fr.t_ring.nvars());
            m.e[fr.t_index(i, j)] = 1;
            terms.push_back({std::move(m), q});
        };
        add(i2, i3, c.coeffs[0]);
        add(i1, i3, c.coeffs[1]);
        add(i1, i2, c.coeffs[2]);
        out.push_back(Polynomial::from_terms(fr.t_ring, std::move(terms)));
    }
    return out;
}

std::vector<Polynomial> standard_quadratic_gens(const FiberRing& fr) {
    std::vector<Polynomial> out;
    if (fr.n < 4) return out;
    auto tmon = [&](size_t i, size_t j, size_t k, size_t l) {
        Monomial m(fr.t_ring.nvars());
        m.e[fr.t_index(i, j)] += 1;
        m.e[fr.t_index(k, l)] += 1;
        return m;
    };
    for (size_t u = 0; u < fr.n; ++u)
        for (size_t v = u + 1; v < fr.n; ++v)
            for (size_t w = v + 1; w < fr.n; ++w)
                for (size_t z = w + 1; z < fr.n; ++z) {
                    out.push_back(Polynomial::from_terms(
                        fr.t_ring, {{tmon(u, v, w, z), Rational(1)}, {tmon(u, w, v, z), Rational(-1)}}));
                    out.push_back(Polynomial::from_terms(
                        fr.t_ring, {{tmon(u, v, w, z), Rational(1)}, {tmon(u, z, v, w), Rational(-1)}}));
                }
    return out;
}

namespace {

// Kernel of a monomial map (new variables -> given polynomials) by block
// elimination in a combined ring; the new variables carry the image degree as
// weight so the elimination stays graded.
Ideal presentation_kernel(const Ring& R, const std::vector<std::string>& new_names,
                          const std::vector<Polynomial>& images, long image_degree,
                          const Ring& target_ring, const Budget& budget) {
    const size_t k = R.nvars();
    std::vector<std::string> names = R.vars();
    std::vector<long> weights(k, 1);
    for (size_t i = 0; i < new_names.size(); ++i) {
        names.push_back(new_names[i]);
        weights.push_back(image_degree);
    }
    Ring comb(names, weights);

    std::vector<int> fwd(k);
    for (size_t v = 0; v < k; ++v) fwd[v] = static_cast<int>(v);

    std::vector<Polynomial> gens;
    for (size_t i = 0; i < images.size(); ++i) {
        Polynomial ti = Polynomial::variable(comb, k + i);
        gens.push_back(ti - map_variables(images[i], comb, fwd));
    }
    std::vector<size_t> drop(k);
    for (size_t v = 0; v < k; ++v) drop[v] = v;
    Ideal elim = eliminate(Ideal(comb, std::move(gens)), drop, budget);

    // identity on names, but the target ring carries unit weights
    std::vector<int> id(target_ring.nvars());
    for (size_t v = 0; v < target_ring.nvars(); ++v) id[v] = static_cast<int>(v);
    std::vector<Polynomial> out;
    for (const auto& g : elim.gens()) out.push_back(map_variables(g, target_ring, id));
    return Ideal(target_ring, std::move(out));
}

} // namespace

Ideal ot2_ideal(const Arrangement& A, const Budget& budget) {
    if (!A.is_reduced()) throw std::invalid_argument("ot2_ideal: arrangement not reduced");
    const size_t n = A.size();
    if (n < 2) throw std::invalid_argument("ot2_ideal: need n >= 2");
    FiberRing fr = make_fiber_ring(n);
    if (n == 2) return Ideal::zero(fr.t_ring); // f_{1,2} = 1: degenerate by convention

    Ot2Context ctx(A);
    std::vector<std::string> tnames = fr.t_ring.vars();
    std::vector<Polynomial> images;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) images.push_back(ctx.f(i, j));
    return presentation_kernel(A.ring(), tnames, images, static_cast<long>(n) - 2, fr.t_ring,
                               budget);
}

Ideal ot_classical_ideal(const Arrangement& A, const Budget& budget) {
    if (!A.is_reduced()) throw std::invalid_argument("ot_classical_ideal: arrangement not reduced");
    const size_t n = A.size();
    if (n < 2) throw std::invalid_argument("ot_classical_ideal: need n >= 2");
    FiberRing fr = make_fiber_ring(n);
    const Ring& R = A.ring();

    std::vector<Polynomial> images;
    for (size_t i = 0; i < n; ++i) {
        Polynomial p = Polynomial::one(R);
        for (size_t u = 0; u < n; ++u)
            if (u != i) p *= A.form(u).to_polynomial();
        images.push_back(std::move(p));
    }
    return presentation_kernel(R, fr.y_ring.vars(), images, static_cast<long>(n) - 1, fr.y_ring,
                               budget);
}

Polynomial embed_t_to_y(const Polynomial& F, const FiberRing& fr) {
    if (F.ring() != fr.t_ring) throw std::invalid_argument("embed_t_to_y: not in the t-ring");
    std::vector<Polynomial> images;
    for (size_t pos = 0; pos < fr.t_ring.nvars(); ++pos) {
        auto [i, j] = fr.t_pair(pos);
        images.push_back(Polynomial::variable(fr.y_ring, i) * Polynomial::variable(fr.y_ring, j));
    }
    return F.substitute(fr.y_ring, images);
}

std::optional<Polynomial> pair_into_t(const Polynomial& G, const Monomial& M,
                                      const FiberRing& fr) {
    if (G.ring() != fr.y_ring) throw std::invalid_argument("pair_into_t: G not in the y-ring");
    Polynomial MG = G.times_monomial(M, Rational(1));

    std::vector<Term> t_terms;
    for (const auto& term : MG.terms()) {
        std::vector<int> cnt = term.m.e;
        long total = term.m.degree();
        if (total % 2 != 0) return std::nullopt;
        long mx = 0;
        for (int c : cnt) mx = std::max<long>(mx, c);
        if (2 * mx > total) return std::nullopt;

        Monomial tm(fr.t_ring.nvars());
        while (total > 0) {
            size_t a = 0;
            while (cnt[a] == 0) ++a;
            // most frequent other index, ties toward the smaller
            size_t b = fr.n;
            int best = 0;
            for (size_t i = 0; i < fr.n; ++i) {
                if (i == a || cnt[i] == 0) continue;
                if (cnt[i] > best) {
                    best = cnt[i];
                    b = i;
                }
            }
            if (b == fr.n) return std::nullopt;
            tm.e[fr.t_index(std::min(a, b), std::max(a, b))] += 1;
            --cnt[a];
            --cnt[b];
            total -= 2;
        }
        t_terms.push_back({std::move(tm), term.c});
    }
    Polynomial F = Polynomial::from_terms(fr.t_ring, std::move(t_terms));
    if (embed_t_to_y(F, fr) != MG)
        throw std::logic_error("pair_into_t: pairing does not invert the embedding");
    return F;
}

namespace {

// bidegree split of an R[t] monomial: x-exponents in [0,k), t beyond
long x_degree(const Monomial& m, size_t k) {
    long d = 0;
    for (size_t v = 0; v < k; ++v) d += m.e[v];
    return d;
}

} // namespace

SymGenerators sym_ideal(const Ot2Context& ctx, long strand_dmax, const Budget& budget) {
    const Arrangement& A = ctx.arrangement();
    const size_t n = A.size();
    if (n < 3) throw std::invalid_argument("sym_ideal: need n >= 3");
    const size_t k = ctx.x_count();
    const FiberRing& fr = ctx.fiber();
    const long m = binomial(static_cast<long>(n), 2);

    SymGenerators sg;
    sg.circuits = A.circuits3();
    for (const auto& c : sg.circuits) sg.linear.push_back(ctx.lift_linear(c));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            for (size_t c = b + 1; c < n; ++c) {
                sg.syz_a.push_back(ctx.syz_A(a, b, c));
                sg.syz_b.push_back(ctx.syz_B(a, b, c));
                sg.syz_c.push_back(ctx.syz_C(a, b, c));
            }

    sg.sound = true;
    auto check_zero = [&](const Polynomial& g) {
        if (!ctx.evaluate_rt(g).is_zero()) sg.sound = false;
    };
    for (const auto& g : sg.linear) check_zero(g);
    for (const auto& g : sg.syz_a) check_zero(g);
    for (const auto& g : sg.syz_b) check_zero(g);
    for (const auto& g : sg.syz_c) check_zero(g);

    // Minimal generators, bigraded. Bidegree (0,1): the circuit relations.
    QMatrix lin_rows;
    for (const auto& c : sg.circuits) {
        QVector v(static_cast<size_t>(m), Rational(0));
        auto [i1, i2, i3] = c.indices;
        v[fr.t_index(i2, i3)] = c.coeffs[0];
        v[fr.t_index(i1, i3)] = c.coeffs[1];
        v[fr.t_index(i1, i2)] = c.coeffs[2];
        lin_rows.push_back(std::move(v));
    }
    const long mu0 = lin_rows.empty() ? 0 : static_cast<long>(rank(lin_rows));

    // Bidegree (1,1): coordinates (x variable, t variable).
    auto rt_to_vec11 = [&](const Polynomial& g) {
        QVector v(k * static_cast<size_t>(m), Rational(0));
        for (const auto& t : g.terms()) {
            size_t xu = k, tp = 0;
            for (size_t u = 0; u < k; ++u)
                if (t.m.e[u] > 0) xu = u;
            for (size_t pos = 0; pos < static_cast<size_t>(m); ++pos)
                if (t.m.e[k + pos] > 0) tp = pos;
            v[xu * static_cast<size_t>(m) + tp] = t.c;
        }
        return v;
    };
    QMatrix xl_rows;
    for (const auto& lv : lin_rows)
        for (size_t u = 0; u < k; ++u) {
            QVector v(k * static_cast<size_t>(m), Rational(0));
            for (size_t pos = 0; pos < static_cast<size_t>(m); ++pos)
                v[u * static_cast<size_t>(m) + pos] = lv[pos];
            xl_rows.push_back(std::move(v));
        }
    const long dim_xl = xl_rows.empty() ? 0 : static_cast<long>(rank(xl_rows));

    QMatrix all_rows = xl_rows;
    for (const auto& g : sg.syz_a) all_rows.push_back(rt_to_vec11(g));
    for (const auto& g : sg.syz_b) all_rows.push_back(rt_to_vec11(g));
    for (const auto& g : sg.syz_c) all_rows.push_back(rt_to_vec11(g));
    const long dim_all = static_cast<long>(rank(all_rows));

    sg.minimal_count = mu0 + (dim_all - dim_xl);
    sg.expected_count = static_cast<long>(n) * (static_cast<long>(n) - 2) - A.p_invariant();

    // Strand spanning: in each x-degree d the generators span the full space
    // of t-degree-1 syzygies of the f_{i,j}.
    const Ring& R = A.ring();
    sg.strand_checked_to = strand_dmax;
    sg.strand_generated = true;
    for (long d = 0; d <= strand_dmax && sg.strand_generated; ++d) {
        std::vector<Monomial> cols_mon = monomials_of_degree(R, d);
        std::vector<Monomial> rows_mon = monomials_of_degree(R, d + static_cast<long>(n) - 2);
        std::map<Monomial, size_t> row_index;
        for (size_t i = 0; i < rows_mon.size(); ++i) row_index[rows_mon[i]] = i;

        // syzygy space = kernel of (h_ij) -> sum h_ij f_ij in degree d
        QMatrix phi(rows_mon.size(),
                    QVector(static_cast<size_t>(m) * cols_mon.size(), Rational(0)));
        for (size_t pos = 0; pos < static_cast<size_t>(m); ++pos) {
            auto [i, j] = fr.t_pair(pos);
            const Polynomial& fij = ctx.f(i, j);
            for (size_t cm = 0; cm < cols_mon.size(); ++cm) {
                for (const auto& t : fij.terms()) {
                    Monomial prod = t.m * cols_mon[cm];
                    phi[row_index.at(prod)][pos * cols_mon.size() + cm] += t.c;
                }
            }
        }
        long syz_dim = static_cast<long>(static_cast<size_t>(m) * cols_mon.size()) -
                       static_cast<long>(rank(phi));

        // span of monomial multiples of the generators in that degree
        std::map<Monomial, size_t> col_index;
        for (size_t i = 0; i < cols_mon.size(); ++i) col_index[cols_mon[i]] = i;
        QMatrix span_rows;
        auto add_gen_multiple = [&](const Polynomial& g, const Monomial& mult) {
            QVector v(static_cast<size_t>(m) * cols_mon.size(), Rational(0));
            for (const auto& t : g.terms()) {
                size_t tp = 0;
                for (size_t pos = 0; pos < static_cast<size_t>(m); ++pos)
                    if (t.m.e[k + pos] > 0) tp = pos;
                Monomial xm(R.nvars());
                for (size_t u = 0; u < k; ++u) xm.e[u] = t.m.e[u];
                v[tp * cols_mon.size() + col_index.at(xm * mult)] += t.c;
            }
            span_rows.push_back(std::move(v));
        };
        for (const auto& g : sg.linear)
            for (const auto& mon : cols_mon) add_gen_multiple(g, mon);
        if (d >= 1) {
            std::vector<Monomial> lower = monomials_of_degree(R, d - 1);
            for (const auto& mon : lower) {
                for (const auto& g : sg.syz_a) add_gen_multiple(g, mon);
                for (const auto& g : sg.syz_b) add_gen_multiple(g, mon);
                for (const auto& g : sg.syz_c) add_gen_multiple(g, mon);
            }
        }
        long span_dim = span_rows.empty() ? 0 : static_cast<long>(rank(span_rows));
        if (span_dim != syz_dim) sg.strand_generated = false;
    }

    (void)budget;
    sg.pass = sg.sound && mu0 == A.p_invariant() && sg.minimal_count == sg.expected_count &&
              sg.strand_generated;
    return sg;
}

namespace {

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, const Ring& ring) {
    const size_t n = m.size();
    if (n == 0) return Polynomial::one(ring);
    if (n == 1) return m[0][0];
    Polynomial det = Polynomial::zero(ring);
    // Laplace along the first row
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][c] * poly_det(minor, ring);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

} // namespace

SylvesterResult sylvester_form(const Ot2Context& ctx, std::span<const Polynomial> rows,
                               std::span<const LinearForm> seq) {
    const size_t len = rows.size();
    if (seq.size() != len) throw std::invalid_argument("sylvester_form: rows/sequence mismatch");
    if (len == 0) throw std::invalid_argument("sylvester_form: empty input");
    const Ring& R = ctx.arrangement().ring();
    const size_t k = R.nvars();
    const FiberRing& fr = ctx.fiber();
    const size_t m = fr.t_ring.nvars();

    QMatrix smat;
    for (const auto& f : seq) {
        if (f.ring != R) throw std::invalid_argument("sylvester_form: sequence ring mismatch");
        smat.push_back(f.coeffs);
    }
    if (rank(smat) != len)
        throw std::invalid_argument("sylvester_form: sequence is not linearly independent");

    SylvesterResult res;
    for (const auto& row : rows) {
        if (row.ring() != ctx.rt_ring())
            throw std::invalid_argument("sylvester_form: row not in R[t]");
        // split row = sum_u x_u * g_u(t)
        std::vector<Polynomial> g(k, Polynomial::zero(fr.t_ring));
        for (const auto& t : row.terms()) {
            if (x_degree(t.m, k) != 1)
                throw std::invalid_argument("sylvester_form: row is not linear in the variables");
            size_t xu = 0;
            for (size_t u = 0; u < k; ++u)
                if (t.m.e[u] > 0) xu = u;
            Monomial tm(m);
            for (size_t pos = 0; pos < m; ++pos) tm.e[pos] = t.m.e[k + pos];
            g[xu] += Polynomial::monomial(fr.t_ring, std::move(tm), t.c);
        }
        // solve sum_j c_j * seq_j = row coefficientwise: S^T c = g
        QMatrix M(k, QVector(len, Rational(0)));
        for (size_t j = 0; j < len; ++j)
            for (size_t u = 0; u < k; ++u) M[u][j] = seq[j].coeffs[u];
        std::vector<Polynomial> rhs(g);
        // forward elimination with exact pivoting
        size_t r = 0;
        std::vector<long> pivot_of_col(len, -1);
        for (size_t c = 0; c < len && r < k; ++c) {
            size_t piv = r;
            while (piv < k && M[piv][c].is_zero()) ++piv;
            if (piv == k) continue;
            std::swap(M[r], M[piv]);
            std::swap(rhs[r], rhs[piv]);
            Rational inv = M[r][c].inverse();
            for (size_t cc = c; cc < len; ++cc) M[r][cc] *= inv;
            rhs[r] = rhs[r].scaled(inv);
            for (size_t rr = 0; rr < k; ++rr) {
                if (rr == r || M[rr][c].is_zero()) continue;
                Rational f = M[rr][c];
                for (size_t cc = c; cc < len; ++cc) M[rr][cc] -= f * M[r][cc];
                rhs[rr] -= rhs[r].scaled(f);
            }
            pivot_of_col[c] = static_cast<long>(r);
            ++r;
        }
        for (size_t rr = r; rr < k; ++rr)
            if (!rhs[rr].is_zero())
                throw std::invalid_argument(
                    "sylvester_form: row not expressible in the given sequence");
        std::vector<Polynomial> content_row;
        for (size_t c = 0; c < len; ++c) {
            if (pivot_of_col[c] < 0)
                throw std::invalid_argument("sylvester_form: underdetermined content");
            content_row.push_back(rhs[static_cast<size_t>(pivot_of_col[c])]);
        }
        res.content.push_back(std::move(content_row));
    }

    res.determinant = poly_det(res.content, fr.t_ring);

    // split off the common t-monomial factor, if any
    Monomial content(m);
    bool first = true;
    for (const auto& t : res.determinant.terms()) {
        if (first) {
            content = t.m;
            first = false;
        } else {
            for (size_t v = 0; v < m; ++v) content.e[v] = std::min(content.e[v], t.m.e[v]);
        }
    }
    if (res.determinant.is_zero()) content = Monomial(m);
    res.content_monomial = content;
    if (content.is_one()) {
        res.cofactor = res.determinant;
    } else {
        std::vector<Term> terms;
        for (const auto& t : res.determinant.terms()) terms.push_back({t.m / content, t.c});
        res.cofactor = Polynomial::from_terms(fr.t_ring, std::move(terms));
    }

    res.in_rees_ideal = ctx.evaluate_t(res.determinant).is_zero();
    return res;
}

DimensionReport dimension_check(const Arrangement& A, const Budget& budget) {
    DimensionReport rep;
    rep.k = A.ring().nvars();
    if (!A.is_essential() || rep.k < 2)
        throw std::invalid_argument("dimension_check: arrangement not essential of rank >= 2");
    if (A.size() < 3)
        throw std::invalid_argument("dimension_check: need n >= 3");
    Ideal I = ot2_ideal(A, budget);
    rep.dim = krull_dimension(I, budget);
    rep.pass = rep.dim == static_cast<long>(rep.k);
    return rep;
}

PropertiesReport properties_check(const Arrangement& A, const Budget& budget) {
    PropertiesReport rep;
    FiberRing fr = make_fiber_ring(A.size());
    Ideal I2 = ot2_ideal(A, budget);
    auto gb = I2.groebner(budget);

    std::vector<Polynomial> jgens;
    for (const auto& g : gb->polys) jgens.push_back(embed_t_to_y(g, fr));
    Ideal J(fr.y_ring, std::move(jgens));

    std::vector<Polynomial> ys;
    for (size_t i = 0; i < fr.n; ++i) ys.push_back(Polynomial::variable(fr.y_ring, i));
    Ideal yideal(fr.y_ring, std::move(ys));

    Ideal lhs = colon_by_ideal(J, yideal, budget);
    Ideal IA = ot_classical_ideal(A, budget);
    rep.equality = ideal_equal(lhs, IA, budget);
    rep.pass = rep.equality;
    return rep;
}

} // namespace foldprod
