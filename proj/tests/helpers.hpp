#pragma once

#include "foldprod/arrangement.hpp"
#include "foldprod/parse.hpp"
#include "foldprod/verify.hpp"

#include <string>
#include <vector>

namespace fptest {

using namespace foldprod;

inline Arrangement arr(const std::vector<std::string>& forms, const std::vector<std::string>& vars) {
    Ring R((std::vector<std::string>(vars)));
    std::vector<LinearForm> fs;
    for (const auto& s : forms) fs.push_back(parse_linear_form(s, R));
    return Arrangement(R, std::move(fs));
}

/// Pencil of three lines plus a transversal: x1, x2, x1+x2, x3.
inline Arrangement pencil_plus_line() {
    return arr({"x1", "x2", "x1 + x2", "x3"}, {"x1", "x2", "x3"});
}

inline Polynomial parse_poly(const Ring& R, const std::vector<std::pair<std::vector<int>, long>>& terms) {
    std::vector<Term> ts;
    for (const auto& [e, c] : terms) ts.push_back({Monomial(std::vector<int>(e)), Rational(c)});
    return Polynomial::from_terms(R, std::move(ts));
}

} // namespace fptest
