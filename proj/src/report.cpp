#include "foldprod/report.hpp"

#include <sstream>

namespace foldprod {

std::string input_digest(const std::string& bytes) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

Json poly_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json term = Json::array();
        term.push_back(t.m.e);
        term.push_back(t.c.str());
        terms.push_back(std::move(term));
    }
    return terms;
}

Json betti_to_json(const BettiTable& b) {
    Json out = Json::array();
    for (const auto& [key, v] : b.entries) {
        if (v == 0) continue;
        out.push_back(Json{{"i", key.first}, {"j", key.second}, {"beta", v}});
    }
    return out;
}

Json arrangement_to_json(const Arrangement& A) {
    Json out;
    out["vars"] = A.ring().vars();
    Json forms = Json::array();
    for (const auto& f : A.forms()) {
        Json coeffs = Json::array();
        for (const auto& c : f.coeffs) coeffs.push_back(c.str());
        forms.push_back(std::move(coeffs));
    }
    out["forms"] = std::move(forms);
    return out;
}

Json flats_to_json(const std::vector<Flat2>& flats) {
    Json out = Json::array();
    for (const auto& f : flats) {
        Json members = Json::array();
        for (size_t m : f.members) members.push_back(m + 1); // 1-based for display
        out.push_back(std::move(members));
    }
    return out;
}

Json circuits_to_json(const std::vector<Circuit3>& circuits) {
    Json out = Json::array();
    for (const auto& c : circuits) {
        Json indices = Json::array();
        for (size_t i : c.indices) indices.push_back(i + 1);
        Json coeffs = Json::array();
        for (const auto& q : c.coeffs) coeffs.push_back(q.str());
        out.push_back(Json{{"indices", indices}, {"coeffs", coeffs}});
    }
    return out;
}

Json singular_points_to_json(const std::vector<SingularPoint>& pts) {
    Json out = Json::array();
    for (const auto& sp : pts) {
        Json point = Json::array();
        for (const auto& c : sp.point) point.push_back(c.str());
        Json lines = Json::array();
        for (size_t l : sp.lines) lines.push_back(l + 1);
        Json primes = Json::array();
        for (const auto& g : sp.prime.gens()) primes.push_back(g.str());
        out.push_back(Json{{"point", point}, {"lines", lines}, {"prime", primes}});
    }
    return out;
}

Json report_header(const std::string& command, const std::string& digest) {
    Json out;
    out["schema"] = kReportSchema;
    out["command"] = command;
    out["input_digest"] = digest;
    return out;
}

} // namespace foldprod
