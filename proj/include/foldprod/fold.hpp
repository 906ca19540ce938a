#pragma once

#include "foldprod/arrangement.hpp"
#include "foldprod/groebner.hpp"

namespace foldprod {

/// The ideal generated by all a-fold products of the forms of a multiset,
/// one generator per a-subset in subset-lexicographic order. Generators are
/// kept verbatim (never deduplicated): multiset semantics must survive for
/// collections with repeated forms.
struct FoldIdeal {
    Arrangement source;
    long a = 0;
    Ideal ideal; // a = 0: unit ideal; a > n: zero ideal
};

FoldIdeal fold_ideal(const Arrangement& S, long a);

/// Verdict of the power identity check I_a = m^a for 1 <= a <= min distance.
struct PowerIdentityReport {
    long min_distance = 0;
    long first_failure = 0; // 0 when all pass
    bool pass = false;
};

/// Computes d = min_distance(S) and verifies I_a(S) = m^a for each
/// 1 <= a <= d by two-sided membership. Requires an essential multiset.
PowerIdentityReport check_power_identity(const Arrangement& S, const Budget& budget = {});

/// True iff I_a(S) : l equals I_{a-1}(S minus one occurrence of l).
/// `form_index` selects the occurrence of l in S.
bool colon_step_check(const Arrangement& S, size_t form_index, long a, const Budget& budget = {});

/// S with the form at `index` removed (one occurrence).
Arrangement remove_form(const Arrangement& S, size_t index);

} // namespace foldprod
