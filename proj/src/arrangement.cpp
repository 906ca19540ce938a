#include "foldprod/arrangement.hpp"

#include "foldprod/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace foldprod {

long binomial(long n, long r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long v = 1;
    for (long i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

Arrangement::Arrangement(Ring r, std::vector<LinearForm> forms)
    : ring_(std::move(r)), forms_(std::move(forms)) {
    for (size_t i = 0; i < forms_.size(); ++i) {
        if (forms_[i].ring != ring_)
            throw std::invalid_argument("Arrangement: form ring mismatch");
        if (forms_[i].is_zero())
            throw std::invalid_argument("Arrangement: zero form at position " + std::to_string(i + 1));
    }
}

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

Arrangement Arrangement::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    bool have_ring = false;
    Ring ring;
    std::vector<LinearForm> forms;
    std::vector<std::pair<std::string, size_t>> pending; // form lines seen before vars

    auto parse_form = [&](const std::string& body, size_t ln) {
        forms.push_back(parse_linear_form(body, ring, ln));
    };

    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;

        if (line.rfind("vars:", 0) == 0) {
            if (have_ring) throw parse_error("duplicate vars: line", line_no, 1);
            if (!pending.empty() || !forms.empty())
                throw parse_error("vars: must precede all form: lines", line_no, 1);
            std::istringstream vs(line.substr(5));
            std::vector<std::string> names;
            std::string name;
            while (vs >> name) names.push_back(name);
            if (names.empty()) throw parse_error("vars: names no variables", line_no, 6);
            ring = Ring(std::move(names));
            have_ring = true;
        } else if (line.rfind("form:", 0) == 0) {
            std::string body = strip(line.substr(5));
            if (!have_ring) {
                // Infer the variable count from the first vector-mode form.
                std::istringstream cs(body);
                std::vector<std::string> toks;
                std::string tok;
                while (cs >> tok) toks.push_back(tok);
                bool vectorish = !toks.empty() &&
                                 (std::isdigit(static_cast<unsigned char>(toks[0][0])) ||
                                  toks[0][0] == '-' || toks[0][0] == '+');
                if (!vectorish)
                    throw parse_error("no vars: line; first form must be a coefficient vector",
                                      line_no, 1);
                ring = Ring::standard(toks.size());
                have_ring = true;
            }
            parse_form(body, line_no);
        } else {
            throw parse_error("expected 'vars:' or 'form:'", line_no, 1);
        }
    }
    if (!have_ring || forms.empty()) throw parse_error("no forms in arrangement file", line_no, 1);
    return Arrangement(ring, std::move(forms));
}

Arrangement Arrangement::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open arrangement file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

QMatrix Arrangement::coefficient_matrix() const {
    QMatrix m;
    m.reserve(forms_.size());
    for (const auto& f : forms_) m.push_back(f.coeffs);
    return m;
}

Arrangement Arrangement::reduced_support(std::vector<long>* multiplicities) const {
    std::vector<LinearForm> support;
    std::vector<long> mult;
    for (const auto& f : forms_) {
        bool found = false;
        for (size_t i = 0; i < support.size(); ++i) {
            if (LinearForm::proportional(f, support[i])) {
                ++mult[i];
                found = true;
                break;
            }
        }
        if (!found) {
            support.push_back(f);
            mult.push_back(1);
        }
    }
    if (multiplicities) *multiplicities = std::move(mult);
    return Arrangement(ring_, std::move(support));
}

bool Arrangement::is_reduced() const {
    for (size_t i = 0; i < forms_.size(); ++i)
        for (size_t j = i + 1; j < forms_.size(); ++j)
            if (LinearForm::proportional(forms_[i], forms_[j])) return false;
    return true;
}

size_t Arrangement::rank() const { return foldprod::rank(coefficient_matrix()); }

void Arrangement::require_reduced(const char* op) const {
    if (!is_reduced())
        throw std::invalid_argument(std::string(op) + ": arrangement has proportional forms");
}

std::vector<Flat2> Arrangement::rank2_flats() const {
    require_reduced("rank2_flats");
    const size_t n = forms_.size();

    // Union-find over index pairs: two pairs are merged whenever a dependent
    // triple links them, which is exactly "same 2-dimensional span".
    auto pair_id = [&](size_t i, size_t j) { return i * n + j; }; // i < j
    std::vector<size_t> parent(n * n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](size_t a, size_t b) { parent[find(a)] = find(b); };

    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t l = j + 1; l < n; ++l) {
                QMatrix m = {forms_[i].coeffs, forms_[j].coeffs, forms_[l].coeffs};
                if (foldprod::rank(std::move(m)) == 2) {
                    unite(pair_id(i, j), pair_id(i, l));
                    unite(pair_id(i, j), pair_id(j, l));
                }
            }

    std::map<size_t, std::set<size_t>> classes;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            auto& members = classes[find(pair_id(i, j))];
            members.insert(i);
            members.insert(j);
        }

    std::vector<Flat2> flats;
    for (auto& [root, members] : classes) {
        Flat2 f;
        f.members.assign(members.begin(), members.end());
        f.witness = {forms_[f.members[0]], forms_[f.members[1]]};
        flats.push_back(std::move(f));
    }
    std::sort(flats.begin(), flats.end(),
              [](const Flat2& a, const Flat2& b) { return a.members < b.members; });
    return flats;
}

std::vector<Circuit3> Arrangement::circuits3() const {
    require_reduced("circuits3");
    const size_t n = forms_.size();
    std::vector<Circuit3> out;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t l = j + 1; l < n; ++l) {
                // Null space of the k x 3 matrix whose columns are the three forms.
                const size_t k = ring_.nvars();
                QMatrix m(k, QVector(3, Rational(0)));
                for (size_t v = 0; v < k; ++v) {
                    m[v][0] = forms_[i].coeffs[v];
                    m[v][1] = forms_[j].coeffs[v];
                    m[v][2] = forms_[l].coeffs[v];
                }
                auto ns = nullspace(m);
                if (ns.empty()) continue;
                QVector c = ns[0];
                // Pairwise nonproportional forms make every null coefficient nonzero
                // and the null space one-dimensional.
                Rational lead = c[0];
                Circuit3 circ;
                circ.indices = {i, j, l};
                for (int t = 0; t < 3; ++t) circ.coeffs[t] = c[t] / lead;
                out.push_back(std::move(circ));
            }
    return out;
}

long Arrangement::p_invariant() const {
    long p = 0;
    for (const auto& f : rank2_flats()) p += binomial(static_cast<long>(f.members.size()) - 1, 2);
    return p;
}

long Arrangement::min_distance() const {
    const size_t n = forms_.size();
    const size_t k = ring_.nvars();
    if (n == 0 || k == 0) throw std::invalid_argument("min_distance: empty arrangement");
    if (!is_essential())
        throw std::invalid_argument("min_distance: arrangement is not essential; reduce variables first");
    if (n > 20) throw std::invalid_argument("min_distance: n > 20 not supported");

    // d = n - max{ |T| : rank of the forms indexed by T <= k-1 }. Scan subset
    // sizes downward; for s <= k-1 the rank condition is automatic, so the
    // loop always terminates with d <= n-k+1 (Singleton bound).
    for (size_t s = n - 1; ; --s) {
        if (s <= k - 1) return static_cast<long>(n - s);
        std::vector<size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            QMatrix m;
            m.reserve(s);
            for (size_t t : idx) m.push_back(forms_[t].coeffs);
            if (foldprod::rank(std::move(m)) <= k - 1) return static_cast<long>(n - s);
            // next combination
            size_t i = s;
            while (i > 0 && idx[i - 1] == n - s + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

Arrangement Arrangement::essentialize(QMatrix* basis_rows) const {
    QMatrix m = coefficient_matrix();
    QMatrix red = m;
    std::vector<size_t> pivots = rref(red);
    const size_t r = pivots.size();
    QMatrix basis(red.begin(), red.begin() + static_cast<long>(r));

    std::vector<std::string> names;
    for (size_t i = 0; i < r; ++i) names.push_back(ring_.var(i));
    Ring small(std::move(names));

    std::vector<LinearForm> out;
    for (const auto& f : forms_) {
        // Coordinates of f in the row-space basis: since `basis` is in reduced
        // echelon form, the coordinate on basis row t is the pivot-column entry.
        QVector coords(r);
        for (size_t t = 0; t < r; ++t) coords[t] = f.coeffs[pivots[t]];
        out.emplace_back(small, std::move(coords));
    }
    if (basis_rows) *basis_rows = std::move(basis);
    return Arrangement(small, std::move(out));
}

} // namespace foldprod
