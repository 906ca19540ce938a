#include "foldprod/polynomial.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace foldprod {

namespace {

// Canonical storage order: descending grevlex of the ring.
bool storage_greater(const Ring& r, const Monomial& a, const Monomial& b) {
    return MonomialOrder::grevlex(r).greater(a, b);
}

} // namespace

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (ring_ != o.ring_)
        throw std::invalid_argument("Polynomial: operands live in different rings");
}

Polynomial Polynomial::constant(const Ring& r, Rational c) {
    Polynomial p(r);
    if (!c.is_zero()) p.terms_.push_back({Monomial(r.nvars()), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(const Ring& r, size_t i) {
    if (i >= r.nvars()) throw std::invalid_argument("Polynomial: variable index out of range");
    Monomial m(r.nvars());
    m.e[i] = 1;
    return monomial(r, std::move(m), Rational(1));
}

Polynomial Polynomial::monomial(const Ring& r, Monomial m, Rational c) {
    if (m.nvars() != r.nvars()) throw std::invalid_argument("Polynomial: monomial arity mismatch");
    Polynomial p(r);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(const Ring& r, std::vector<Term> terms) {
    std::map<Monomial, Rational> acc;
    for (auto& t : terms) {
        if (t.m.nvars() != r.nvars())
            throw std::invalid_argument("Polynomial: monomial arity mismatch");
        auto [it, fresh] = acc.emplace(std::move(t.m), t.c);
        if (!fresh) it->second += t.c;
    }
    Polynomial p(r);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.push_back({m, c});
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&](const Term& a, const Term& b) { return storage_greater(r, a.m, b.m); });
    return p;
}

long Polynomial::degree() const {
    long d = kMinusInfinityDegree;
    for (const auto& t : terms_) d = std::max(d, t.m.wdegree(ring_));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = terms_[0].m.wdegree(ring_);
    for (const auto& t : terms_)
        if (t.m.wdegree(ring_) != d) return false;
    return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.m == m) return t.c;
    return Rational(0);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        if (a.terms_[i].m == b.terms_[j].m) {
            Rational c = a.terms_[i].c + b.terms_[j].c;
            if (!c.is_zero()) r.terms_.push_back({a.terms_[i].m, std::move(c)});
            ++i, ++j;
        } else if (storage_greater(a.ring_, a.terms_[i].m, b.terms_[j].m)) {
            r.terms_.push_back(a.terms_[i++]);
        } else {
            r.terms_.push_back(b.terms_[j++]);
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            out.push_back({ta.m * tb.m, ta.c * tb.c});
    return Polynomial::from_terms(a.ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r; // multiplying by a fixed monomial preserves the term order
}

Polynomial Polynomial::pow(unsigned long n) const {
    Polynomial r = Polynomial::one(ring_);
    for (unsigned long i = 0; i < n; ++i) r *= *this;
    return r;
}

Polynomial Polynomial::substitute(const Ring& target, std::span<const Polynomial> images) const {
    if (images.size() != ring_.nvars())
        throw std::invalid_argument("Polynomial: substitution arity mismatch");
    Polynomial out = Polynomial::zero(target);
    for (const auto& t : terms_) {
        Polynomial term = Polynomial::constant(target, t.c);
        for (size_t v = 0; v < ring_.nvars(); ++v)
            if (t.m.e[v] > 0) term *= images[v].pow(static_cast<unsigned long>(t.m.e[v]));
        out += term;
    }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.c;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            c = c.abs();
        }
        first = false;
        bool coeff_shown = !(c.is_one() && !t.m.is_one());
        if (coeff_shown) os << c.str();
        bool any_var = false;
        for (size_t v = 0; v < t.m.e.size(); ++v) {
            if (t.m.e[v] == 0) continue;
            if (coeff_shown || any_var) os << "*";
            os << ring_.var(v);
            if (t.m.e[v] > 1) os << "^" << t.m.e[v];
            any_var = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

} // namespace foldprod
