#include "foldprod/fold.hpp"

#include "foldprod/batch.hpp"

#include <numeric>

namespace foldprod {

FoldIdeal fold_ideal(const Arrangement& S, long a) {
    if (a < 0) throw std::invalid_argument("fold_ideal: negative a");
    const Ring& R = S.ring();
    const long n = static_cast<long>(S.size());
    if (a == 0) return {S, 0, Ideal::unit(R)};
    if (a > n) return {S, a, Ideal::zero(R)};

    std::vector<Polynomial> gens;
    std::vector<size_t> idx(static_cast<size_t>(a));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Polynomial p = Polynomial::one(R);
        for (size_t t : idx) p *= S.form(t).to_polynomial();
        gens.push_back(std::move(p));
        // next subset in lexicographic order
        long i = a;
        while (i > 0 && idx[static_cast<size_t>(i - 1)] ==
                            static_cast<size_t>(n - a + (i - 1)))
            --i;
        if (i == 0) break;
        ++idx[static_cast<size_t>(i - 1)];
        for (long j = i; j < a; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return {S, a, Ideal(R, std::move(gens))};
}

PowerIdentityReport check_power_identity(const Arrangement& S, const Budget& budget) {
    PowerIdentityReport rep;
    rep.min_distance = S.min_distance(); // rejects non-essential input
    for (long a = 1; a <= rep.min_distance; ++a) {
        Ideal Ia = fold_ideal(S, a).ideal;
        Ideal ma = max_ideal_power(S.ring(), a);
        if (!ideal_equal(Ia, ma, budget)) {
            rep.first_failure = a;
            rep.pass = false;
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

Arrangement remove_form(const Arrangement& S, size_t index) {
    if (index >= S.size()) throw std::invalid_argument("remove_form: index out of range");
    std::vector<LinearForm> forms;
    for (size_t i = 0; i < S.size(); ++i)
        if (i != index) forms.push_back(S.form(i));
    return Arrangement(S.ring(), std::move(forms));
}

bool colon_step_check(const Arrangement& S, size_t form_index, long a, const Budget& budget) {
    if (form_index >= S.size())
        throw std::invalid_argument("colon_step_check: form not in the collection");
    Ideal Ia = fold_ideal(S, a).ideal;
    Ideal lhs = colon(Ia, S.form(form_index).to_polynomial(), budget);
    Ideal rhs = fold_ideal(remove_form(S, form_index), a - 1).ideal;
    return ideal_equal(lhs, rhs, budget);
}

} // namespace foldprod
