#include "foldprod/parse.hpp"

#include <cctype>
#include <sstream>

namespace foldprod {

namespace {

// Replaces U+2212 (minus sign) with ASCII '-' so pasted text parses.
std::string normalize_minus(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
            static_cast<unsigned char>(s[i + 1]) == 0x88 &&
            static_cast<unsigned char>(s[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
        } else {
            out.push_back(s[i]);
        }
    }
    return out;
}

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    size_t line;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line, pos + 1); }
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

Rational read_rational(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.pos;
    if (cur.peek() == '+' || cur.peek() == '-') ++cur.pos;
    size_t digits = 0;
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) { ++cur.pos; ++digits; }
    if (digits == 0) cur.fail("expected a rational number");
    if (cur.peek() == '/') {
        ++cur.pos;
        size_t den_digits = 0;
        while (std::isdigit(static_cast<unsigned char>(cur.peek()))) { ++cur.pos; ++den_digits; }
        if (den_digits == 0) cur.fail("expected a denominator");
    }
    return Rational::parse(cur.s.substr(start, cur.pos - start));
}

std::string read_identifier(Cursor& cur) {
    cur.skip_ws();
    if (!is_ident_start(cur.peek())) cur.fail("expected a variable name");
    size_t start = cur.pos;
    while (is_ident_char(cur.peek())) ++cur.pos;
    return cur.s.substr(start, cur.pos - start);
}

// True when the whole line is a whitespace-separated list of rationals.
bool looks_like_vector(const std::string& s) {
    bool any = false;
    for (char c : s) {
        if (c == ' ' || c == '\t') continue;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '/') {
            any = true;
            continue;
        }
        return false;
    }
    return any;
}

LinearForm parse_vector_mode(const std::string& text, const Ring& ring, size_t line_no) {
    Cursor cur{text, 0, line_no};
    std::vector<Rational> coeffs;
    while (!cur.done()) coeffs.push_back(read_rational(cur));
    if (coeffs.size() != ring.nvars()) {
        std::ostringstream msg;
        msg << "coefficient vector has " << coeffs.size() << " entries, ring has "
            << ring.nvars() << " variables";
        throw parse_error(msg.str(), line_no, 1);
    }
    return LinearForm(ring, std::move(coeffs));
}

} // namespace

LinearForm parse_linear_form(const std::string& raw, const Ring& ring, size_t line_no) {
    std::string text = normalize_minus(raw);
    if (looks_like_vector(text)) {
        LinearForm f = parse_vector_mode(text, ring, line_no);
        if (f.is_zero()) throw parse_error("zero form", line_no, 1);
        return f;
    }

    Cursor cur{text, 0, line_no};
    std::vector<Rational> coeffs(ring.nvars(), Rational(0));
    bool any_term = false;
    int sign = 1;
    cur.skip_ws();
    if (cur.peek() == '+' || cur.peek() == '-') {
        sign = cur.peek() == '-' ? -1 : 1;
        ++cur.pos;
    }
    while (true) {
        cur.skip_ws();
        Rational coeff(1);
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = read_rational(cur);
            cur.skip_ws();
            if (cur.peek() != '*') cur.fail("expected '*' between coefficient and variable");
            ++cur.pos;
        }
        std::string name = read_identifier(cur);
        int vi = ring.var_index(name);
        if (vi < 0) cur.fail("unknown variable '" + name + "'");
        cur.skip_ws();
        if (cur.peek() == '^') cur.fail("nonlinear term");
        coeffs[static_cast<size_t>(vi)] += sign < 0 ? -coeff : coeff;
        any_term = true;

        if (cur.done()) break;
        char op = cur.peek();
        if (op != '+' && op != '-') cur.fail("expected '+' or '-'");
        sign = op == '-' ? -1 : 1;
        ++cur.pos;
    }
    if (!any_term) throw parse_error("empty linear form", line_no, 1);

    LinearForm f(ring, std::move(coeffs));
    if (f.is_zero()) throw parse_error("zero form", line_no, 1);
    return f;
}

std::string render_linear_form(const LinearForm& f) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        const Rational& c = f.coeffs[i];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = c.abs();
        if (!a.is_one()) os << a.str() << "*";
        os << f.ring.var(i);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace foldprod
