#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace foldprod {

/// Descriptor of a polynomial ring over the rationals: variable names plus an
/// optional positive degree weight per variable (default 1). Cheap to copy;
/// two rings compare equal when their names and weights agree.
class Ring {
public:
    Ring() = default;
    explicit Ring(std::vector<std::string> vars, std::vector<long> weights = {}) {
        if (weights.empty()) weights.assign(vars.size(), 1);
        if (weights.size() != vars.size())
            throw std::invalid_argument("Ring: weight count != variable count");
        for (long w : weights)
            if (w <= 0) throw std::invalid_argument("Ring: weights must be positive");
        d_ = std::make_shared<const Data>(Data{std::move(vars), std::move(weights)});
    }

    size_t nvars() const { return d_ ? d_->vars.size() : 0; }
    const std::string& var(size_t i) const { return d_->vars.at(i); }
    const std::vector<std::string>& vars() const { return d_->vars; }
    long weight(size_t i) const { return d_->weights[i]; }
    const std::vector<long>& weights() const { return d_->weights; }

    /// Index of a variable name, or -1 when absent.
    int var_index(const std::string& name) const {
        if (!d_) return -1;
        for (size_t i = 0; i < d_->vars.size(); ++i)
            if (d_->vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        if (a.d_ == b.d_) return true;
        if (!a.d_ || !b.d_) return false;
        return a.d_->vars == b.d_->vars && a.d_->weights == b.d_->weights;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

    /// Ring in x_1..x_k with unit weights.
    static Ring standard(size_t k, const std::string& stem = "x");

private:
    struct Data {
        std::vector<std::string> vars;
        std::vector<long> weights;
    };
    std::shared_ptr<const Data> d_;
};

/// Exponent vector; length always equals the ambient ring's variable count.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    size_t nvars() const { return e.size(); }
    long degree() const { return std::accumulate(e.begin(), e.end(), 0L); }
    long wdegree(const Ring& r) const {
        long d = 0;
        for (size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * r.weight(i);
        return d;
    }
    bool is_one() const {
        for (int x : e) if (x != 0) return false;
        return true;
    }
    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }
    /// Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] > 0 && b.e[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
    /// Plain lexicographic on exponent vectors; used only for canonical container keys.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
};

/// Total order on monomials compatible with multiplication.
///
/// Two kinds: weighted graded reverse lexicographic, and a two-block
/// elimination order (block = first `block_size` variables) where any
/// monomial involving a first-block variable exceeds every monomial that
/// does not.
class MonomialOrder {
public:
    enum class Kind : uint8_t { Grevlex, Elim };

    static MonomialOrder grevlex(const Ring& r) { return MonomialOrder(Kind::Grevlex, r, 0); }
    static MonomialOrder elim(const Ring& r, size_t block_size) {
        if (block_size == 0 || block_size > r.nvars())
            throw std::invalid_argument("MonomialOrder: bad elimination block");
        return MonomialOrder(Kind::Elim, r, block_size);
    }

    Kind kind() const { return kind_; }
    size_t block_size() const { return block_; }
    const Ring& ring() const { return ring_; }

    /// -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (kind_ == Kind::Grevlex) return cmp_grevlex(a, b, 0, a.e.size());
        int c = cmp_grevlex(a, b, 0, block_);
        if (c != 0) return c;
        return cmp_grevlex(a, b, block_, a.e.size());
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && block_ == o.block_ && ring_ == o.ring_;
    }

    /// Stable identity for Groebner-basis caching.
    std::string cache_key() const {
        return (kind_ == Kind::Grevlex ? "grevlex" : "elim:" + std::to_string(block_));
    }

private:
    MonomialOrder(Kind k, Ring r, size_t b) : kind_(k), ring_(std::move(r)), block_(b) {}

    int cmp_grevlex(const Monomial& a, const Monomial& b, size_t lo, size_t hi) const {
        long da = 0, db = 0;
        for (size_t i = lo; i < hi; ++i) {
            da += static_cast<long>(a.e[i]) * ring_.weight(i);
            db += static_cast<long>(b.e[i]) * ring_.weight(i);
        }
        if (da != db) return da < db ? -1 : 1;
        for (size_t i = hi; i-- > lo;) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        return 0;
    }

    Kind kind_;
    Ring ring_;
    size_t block_;
};

} // namespace foldprod
