#include "foldprod/rational.hpp"

#include <ostream>

namespace foldprod {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty literal");
    // mpq_class(string) accepts "a/b" but silently tolerates some junk; validate first.
    size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    if (i == text.size()) throw std::invalid_argument("Rational: bad literal '" + text + "'");
    bool seen_slash = false;
    for (size_t j = i; j < text.size(); ++j) {
        char c = text[j];
        if (c == '/') {
            if (seen_slash || j == i || j + 1 == text.size())
                throw std::invalid_argument("Rational: bad literal '" + text + "'");
            seen_slash = true;
        } else if (c < '0' || c > '9') {
            throw std::invalid_argument("Rational: bad literal '" + text + "'");
        }
    }
    // mpq_set_str does not accept a leading '+'
    mpq_class v(text[0] == '+' ? text.substr(1) : text);
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    v.canonicalize();
    if (v.get_den() < 0) throw std::invalid_argument("Rational: negative denominator in '" + text + "'");
    return Rational(std::move(v));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

} // namespace foldprod
