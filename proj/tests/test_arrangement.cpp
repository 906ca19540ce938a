#include "helpers.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace foldprod;
using fptest::arr;
using fptest::pencil_plus_line;

TEST_CASE("reduced support and multiplicities") {
    std::vector<long> mult;
    Arrangement S = arr({"x", "x", "y"}, {"x", "y"});
    Arrangement A = S.reduced_support(&mult);
    CHECK(A.size() == 2);
    CHECK(mult == std::vector<long>{2, 1});

    Arrangement P = pencil_plus_line();
    std::vector<long> m2;
    CHECK(P.reduced_support(&m2).size() == 4);
    CHECK(m2 == std::vector<long>{1, 1, 1, 1});

    std::vector<long> m3;
    Arrangement prop = arr({"x", "2*x", "3*x"}, {"x", "y"});
    CHECK(prop.reduced_support(&m3).size() == 1);
    CHECK(m3 == std::vector<long>{3});
}

TEST_CASE("rank") {
    CHECK(pencil_plus_line().rank() == 3);
    CHECK(arr({"x", "y", "x + y"}, {"x", "y"}).rank() == 2);
    CHECK(Arrangement(Ring::standard(2), {}).rank() == 0);
}

TEST_CASE("rank-2 flats partition the pairs") {
    Arrangement P = pencil_plus_line();
    auto flats = P.rank2_flats();
    REQUIRE(flats.size() == 4);
    CHECK(flats[0].members == std::vector<size_t>{0, 1, 2});
    CHECK(flats[1].members == std::vector<size_t>{0, 3});
    CHECK(flats[2].members == std::vector<size_t>{1, 3});
    CHECK(flats[3].members == std::vector<size_t>{2, 3});

    Arrangement two = arr({"x", "y", "x + y"}, {"x", "y"});
    auto f2 = two.rank2_flats();
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].members == std::vector<size_t>{0, 1, 2});

    Arrangement gen = arr({"x", "y", "z", "x + y + z"}, {"x", "y", "z"});
    auto fg = gen.rank2_flats();
    CHECK(fg.size() == 6);
    for (const auto& f : fg) CHECK(f.members.size() == 2);
}

namespace {

// brute-force oracle: classify pairs by the row space of their span
bool same_span2(const Arrangement& A, size_t a, size_t b, size_t c, size_t d) {
    QMatrix m = {A.form(a).coeffs, A.form(b).coeffs, A.form(c).coeffs, A.form(d).coeffs};
    return rank(std::move(m)) == 2;
}

} // namespace

TEST_CASE("flats agree with the pairwise span classification") {
    for (const Arrangement& A :
         {pencil_plus_line(), arr({"x", "y", "x + y", "x - y"}, {"x", "y"}),
          arr({"x", "y", "z", "x + y + z", "x + 2*y + 3*z"}, {"x", "y", "z"})}) {
        auto flats = A.rank2_flats();
        const size_t n = A.size();
        // every pair in exactly one flat
        std::set<std::pair<size_t, size_t>> seen;
        for (const auto& f : flats)
            for (size_t i = 0; i < f.members.size(); ++i)
                for (size_t j = i + 1; j < f.members.size(); ++j) {
                    auto pr = std::make_pair(f.members[i], f.members[j]);
                    CHECK(!seen.count(pr));
                    seen.insert(pr);
                }
        CHECK(seen.size() == n * (n - 1) / 2);
        // members of one flat span rank 2 jointly
        for (const auto& f : flats)
            for (size_t i = 0; i + 1 < f.members.size(); ++i)
                for (size_t j = i + 1; j < f.members.size(); ++j)
                    CHECK(same_span2(A, f.members[0], f.members[1], f.members[i], f.members[j]));
    }
}

TEST_CASE("circuits with exact normalized coefficients") {
    Arrangement P = pencil_plus_line();
    auto cs = P.circuits3();
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].indices == std::array<size_t, 3>{0, 1, 2});
    CHECK(cs[0].coeffs == std::array<Rational, 3>{Rational(1), Rational(1), Rational(-1)});

    CHECK(arr({"x", "y", "z", "x + y + z"}, {"x", "y", "z"}).circuits3().empty());

    Arrangement four = arr({"x", "y", "x + y", "x - y"}, {"x", "y"});
    auto c4 = four.circuits3();
    REQUIRE(c4.size() == 4);
    CHECK(c4[0].coeffs == std::array<Rational, 3>{Rational(1), Rational(1), Rational(-1)});
    CHECK(c4[1].coeffs == std::array<Rational, 3>{Rational(1), Rational(-1), Rational(-1)});
    CHECK(c4[2].coeffs == std::array<Rational, 3>{Rational(1), Rational(-1, 2), Rational(-1, 2)});
    CHECK(c4[3].coeffs == std::array<Rational, 3>{Rational(1), Rational(-1, 2), Rational(1, 2)});
    // dependency really vanishes
    for (const auto& c : c4) {
        Polynomial s = Polynomial::zero(four.ring());
        for (int t = 0; t < 3; ++t)
            s += four.form(c.indices[static_cast<size_t>(t)]).to_polynomial().scaled(
                c.coeffs[static_cast<size_t>(t)]);
        CHECK(s.is_zero());
    }
}

TEST_CASE("circuits are exactly the triples inside a flat of size >= 3") {
    uint64_t st = 2024;
    for (int trial = 0; trial < 15; ++trial) {
        Arrangement A = random_arrangement(st, 3, 5);
        auto circuits = A.circuits3();
        std::set<std::array<size_t, 3>> circ_set;
        for (const auto& c : circuits) circ_set.insert(c.indices);
        auto flats = A.rank2_flats();
        std::set<std::array<size_t, 3>> flat_triples;
        for (const auto& f : flats)
            for (size_t i = 0; i < f.members.size(); ++i)
                for (size_t j = i + 1; j < f.members.size(); ++j)
                    for (size_t l = j + 1; l < f.members.size(); ++l)
                        flat_triples.insert({f.members[i], f.members[j], f.members[l]});
        CHECK(circ_set == flat_triples);
    }
}

TEST_CASE("p invariant") {
    CHECK(pencil_plus_line().p_invariant() == 1);
    CHECK(arr({"x", "y", "x + y"}, {"x", "y"}).p_invariant() == 1);
    CHECK(arr({"x", "y", "z", "x + y + z"}, {"x", "y", "z"}).p_invariant() == 0);
    CHECK(arr({"x", "y", "x + y", "x - y"}, {"x", "y"}).p_invariant() == 3);
}

TEST_CASE("minimum distance") {
    CHECK(arr({"x", "y", "x + y"}, {"x", "y"}).min_distance() == 2);
    CHECK(arr({"x", "y", "x + y", "x - y"}, {"x", "y"}).min_distance() == 3);
    CHECK(arr({"x", "y", "z", "x + y + z"}, {"x", "y", "z"}).min_distance() == 2);
    CHECK(arr({"x", "x", "y"}, {"x", "y"}).min_distance() == 1);
    CHECK(pencil_plus_line().min_distance() == 1);

    Arrangement bad = arr({"x", "y", "x + y"}, {"x", "y", "z"});
    CHECK_THROWS_AS(bad.min_distance(), std::invalid_argument);
    QMatrix basis;
    Arrangement fixed = bad.essentialize(&basis);
    CHECK(fixed.ring().nvars() == 2);
    CHECK(basis.size() == 2);
    CHECK(fixed.min_distance() == 2);
}

TEST_CASE("minimum distance bounds, with equality exactly for MDS") {
    uint64_t st = 5150;
    int done = 0;
    while (done < 30) {
        size_t k = 2 + splitmix64_next(st) % 2;
        size_t n = k + 1 + splitmix64_next(st) % 3;
        Arrangement A = random_arrangement(st, k, n, false);
        if (A.rank() != k) continue;
        ++done;
        long d = A.min_distance();
        CHECK(d >= 1);
        CHECK(d <= static_cast<long>(n - k + 1));

        // every k-subset independent?
        bool mds = true;
        std::vector<size_t> idx(k);
        std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t lo) {
            if (!mds) return;
            if (pos == k) {
                QMatrix m;
                for (size_t i : idx) m.push_back(A.form(i).coeffs);
                if (rank(std::move(m)) < k) mds = false;
                return;
            }
            for (size_t i = lo; i < n; ++i) {
                idx[pos] = i;
                rec(pos + 1, i + 1);
            }
        };
        rec(0, 0);
        CHECK((d == static_cast<long>(n - k + 1)) == mds);
    }
}

TEST_CASE("3-generic detection") {
    CHECK(arr({"x", "y", "z", "x + y + z"}, {"x", "y", "z"}).is_generic3());
    CHECK(!pencil_plus_line().is_generic3());
    CHECK(!arr({"x", "y", "x + y"}, {"x", "y"}).is_generic3());
}

TEST_CASE("flat partition identity on random reduced arrangements") {
    uint64_t st = 31337;
    for (int trial = 0; trial < 25; ++trial) {
        size_t k = 2 + splitmix64_next(st) % 3;
        size_t n = 3 + splitmix64_next(st) % 4;
        Arrangement A = random_arrangement(st, k, n);
        long sum = 0;
        for (const auto& f : A.rank2_flats())
            sum += binomial(static_cast<long>(f.members.size()), 2);
        CHECK(sum == binomial(static_cast<long>(n), 2));
    }
}

TEST_CASE("rank-2 flat inequality for rank >= 3") {
    uint64_t st = 424242;
    int done = 0;
    while (done < 30) {
        size_t k = 3 + splitmix64_next(st) % 2;
        size_t n = 4 + splitmix64_next(st) % 3;
        Arrangement A = random_arrangement(st, k, n);
        if (A.rank() < 3) continue;
        ++done;
        Claim4Report rep = claim4_check(A);
        CHECK(rep.holds);
    }
}
