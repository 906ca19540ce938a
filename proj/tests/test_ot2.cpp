#include "helpers.hpp"

#include "foldprod/batch.hpp"
#include "foldprod/ot2.hpp"

#include <doctest.h>

using namespace foldprod;
using fptest::arr;
using fptest::pencil_plus_line;

namespace {

Polynomial tvar(const FiberRing& fr, size_t i, size_t j) {
    return Polynomial::variable(fr.t_ring, fr.t_index(i, j));
}

} // namespace

TEST_CASE("fiber ring indexing") {
    FiberRing fr = make_fiber_ring(4);
    CHECK(fr.t_ring.nvars() == 6);
    CHECK(fr.t_index(0, 1) == 0);
    CHECK(fr.t_index(2, 3) == 5);
    CHECK(fr.t_pair(3) == std::pair<size_t, size_t>{1, 2});
    CHECK(fr.t_ring.var(0) == "t_1_2");
    CHECK(fr.t_ring.var(5) == "t_3_4");
}

TEST_CASE("standard generators of the worked example") {
    Arrangement P = pencil_plus_line();
    FiberRing fr = make_fiber_ring(4);

    auto lin = standard_linear_gens(P, fr);
    REQUIRE(lin.size() == 1);
    CHECK(lin[0] == tvar(fr, 1, 2) + tvar(fr, 0, 2) - tvar(fr, 0, 1));

    auto quad = standard_quadratic_gens(fr);
    REQUIRE(quad.size() == 2);
    CHECK(quad[0] == tvar(fr, 0, 1) * tvar(fr, 2, 3) - tvar(fr, 0, 2) * tvar(fr, 1, 3));
    CHECK(quad[1] == tvar(fr, 0, 1) * tvar(fr, 2, 3) - tvar(fr, 0, 3) * tvar(fr, 1, 2));

    CHECK(standard_quadratic_gens(make_fiber_ring(3)).empty());
    CHECK(standard_quadratic_gens(make_fiber_ring(5)).size() == 10);

    CHECK(standard_linear_gens(arr({"x", "y", "z", "x + y + z"}, {"x", "y", "z"}), fr).empty());
    auto rank2 = standard_linear_gens(arr({"x", "y", "x + y", "x - y"}, {"x", "y"}), fr);
    CHECK(rank2.size() == 4);
}

TEST_CASE("presentation ideal of the worked example") {
    Arrangement P = pencil_plus_line();
    FiberRing fr = make_fiber_ring(4);
    Ideal I = ot2_ideal(P);

    Polynomial L = tvar(fr, 1, 2) + tvar(fr, 0, 2) - tvar(fr, 0, 1);
    Polynomial Q1 = tvar(fr, 0, 1) * tvar(fr, 2, 3) - tvar(fr, 0, 2) * tvar(fr, 1, 3);
    Polynomial Q2 = tvar(fr, 0, 1) * tvar(fr, 2, 3) - tvar(fr, 0, 3) * tvar(fr, 1, 2);
    Polynomial extra = tvar(fr, 1, 3) * tvar(fr, 2, 3) + tvar(fr, 0, 3) * tvar(fr, 2, 3) -
                       tvar(fr, 0, 3) * tvar(fr, 1, 3);
    Ideal expected(fr.t_ring, {L, Q1, Q2, extra});
    CHECK(ideal_equal(I, expected));

    // every standard generator reduces to zero against the eliminated ideal
    auto gb = I.groebner();
    for (const auto& g : standard_linear_gens(P, fr)) CHECK(normal_form(g, *gb).is_zero());
    for (const auto& g : standard_quadratic_gens(fr)) CHECK(normal_form(g, *gb).is_zero());

    // elimination soundness: generators vanish under t -> f
    Ot2Context ctx(P);
    for (const auto& g : I.gens()) CHECK(ctx.evaluate_t(g).is_zero());
}

TEST_CASE("degenerate presentation ideals") {
    CHECK(ot2_ideal(arr({"x", "y", "z"}, {"x", "y", "z"})).is_zero_ideal());
    CHECK(ot2_ideal(arr({"x", "y"}, {"x", "y"})).is_zero_ideal());
}

TEST_CASE("classical presentation ideal") {
    Arrangement P = pencil_plus_line();
    FiberRing fr = make_fiber_ring(4);
    Ideal IA = ot_classical_ideal(P);
    Polynomial y1 = Polynomial::variable(fr.y_ring, 0), y2 = Polynomial::variable(fr.y_ring, 1),
               y3 = Polynomial::variable(fr.y_ring, 2);
    Polynomial G = y2 * y3 + y1 * y3 - y1 * y2;
    CHECK(normal_form(G, *IA.groebner()).is_zero());

    CHECK(ot_classical_ideal(arr({"x", "y", "z"}, {"x", "y", "z"})).is_zero_ideal());

    Ideal rank2 = ot_classical_ideal(arr({"x", "y", "x + y"}, {"x", "y"}));
    FiberRing fr3 = make_fiber_ring(3);
    Polynomial b1 = Polynomial::variable(fr3.y_ring, 0), b2 = Polynomial::variable(fr3.y_ring, 1),
               b3 = Polynomial::variable(fr3.y_ring, 2);
    CHECK(ideal_equal(rank2, Ideal(fr3.y_ring, {b2 * b3 + b1 * b3 - b1 * b2})));
}

TEST_CASE("classical ideal equals the circuit-boundary ideal") {
    // independent construction: one generator per circuit, each term the
    // circuit coefficient times the product of the other y variables
    auto boundary3 = [](const FiberRing& fr, const Circuit3& c) {
        Polynomial out = Polynomial::zero(fr.y_ring);
        for (int t = 0; t < 3; ++t) {
            Polynomial term = Polynomial::constant(fr.y_ring, c.coeffs[static_cast<size_t>(t)]);
            for (int u = 0; u < 3; ++u)
                if (u != t)
                    term *= Polynomial::variable(fr.y_ring, c.indices[static_cast<size_t>(u)]);
            out += term;
        }
        return out;
    };

    // all circuits have size 3
    for (const Arrangement& A :
         {pencil_plus_line(), arr({"x", "y", "x + y", "x - y"}, {"x", "y"})}) {
        FiberRing fr = make_fiber_ring(A.size());
        std::vector<Polynomial> gens;
        for (const auto& c : A.circuits3()) gens.push_back(boundary3(fr, c));
        CHECK(ideal_equal(ot_classical_ideal(A), Ideal(fr.y_ring, std::move(gens))));
    }

    // generic four lines: a single circuit of size 4
    Arrangement G = arr({"x", "y", "z", "x + y + z"}, {"x", "y", "z"});
    FiberRing fr = make_fiber_ring(4);
    QMatrix m(3, QVector(4, Rational(0)));
    for (size_t v = 0; v < 3; ++v)
        for (size_t i = 0; i < 4; ++i) m[v][i] = G.form(i).coeffs[v];
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    Polynomial b4 = Polynomial::zero(fr.y_ring);
    for (size_t t = 0; t < 4; ++t) {
        Polynomial term = Polynomial::constant(fr.y_ring, ns[0][t]);
        for (size_t u = 0; u < 4; ++u)
            if (u != t) term *= Polynomial::variable(fr.y_ring, u);
        b4 += term;
    }
    CHECK(ideal_equal(ot_classical_ideal(G), Ideal(fr.y_ring, {b4})));
}

TEST_CASE("embedding t -> y y") {
    Arrangement P = pencil_plus_line();
    FiberRing fr = make_fiber_ring(4);
    Polynomial y1 = Polynomial::variable(fr.y_ring, 0), y2 = Polynomial::variable(fr.y_ring, 1),
               y3 = Polynomial::variable(fr.y_ring, 2), y4 = Polynomial::variable(fr.y_ring, 3);

    CHECK(embed_t_to_y(tvar(fr, 0, 1), fr) == y1 * y2);

    Polynomial L = tvar(fr, 1, 2) + tvar(fr, 0, 2) - tvar(fr, 0, 1);
    CHECK(embed_t_to_y(L, fr) == y2 * y3 + y1 * y3 - y1 * y2);

    Polynomial Q1 = tvar(fr, 0, 1) * tvar(fr, 2, 3) - tvar(fr, 0, 2) * tvar(fr, 1, 3);
    CHECK(embed_t_to_y(Q1, fr).is_zero());

    // image of the eliminated ideal lands in the classical ideal
    Ideal I2 = ot2_ideal(P);
    Ideal IA = ot_classical_ideal(P);
    auto gbA = IA.groebner();
    for (const auto& g : I2.gens()) CHECK(normal_form(embed_t_to_y(g, fr), *gbA).is_zero());

    // algebra map on random inputs
    uint64_t st = 909;
    for (int t = 0; t < 20; ++t) {
        std::vector<Term> ta, tb;
        for (int i = 0; i < 3; ++i) {
            Monomial ma(fr.t_ring.nvars()), mb(fr.t_ring.nvars());
            ma.e[splitmix64_next(st) % 6] += 1;
            ma.e[splitmix64_next(st) % 6] += 1;
            mb.e[splitmix64_next(st) % 6] += 1;
            ta.push_back({ma, Rational(static_cast<long>(splitmix64_next(st) % 7) - 3)});
            tb.push_back({mb, Rational(static_cast<long>(splitmix64_next(st) % 7) - 3)});
        }
        Polynomial a = Polynomial::from_terms(fr.t_ring, ta);
        Polynomial b = Polynomial::from_terms(fr.t_ring, tb);
        CHECK(embed_t_to_y(a * b, fr) == embed_t_to_y(a, fr) * embed_t_to_y(b, fr));
        CHECK(embed_t_to_y(a + b, fr) == embed_t_to_y(a, fr) + embed_t_to_y(b, fr));
    }
}

TEST_CASE("pairing a circuit relation into the t-ring") {
    Arrangement P = pencil_plus_line();
    FiberRing fr = make_fiber_ring(4);
    Polynomial y1 = Polynomial::variable(fr.y_ring, 0), y2 = Polynomial::variable(fr.y_ring, 1),
               y3 = Polynomial::variable(fr.y_ring, 2);
    Polynomial G = y2 * y3 + y1 * y3 - y1 * y2;

    // M = y4^2 gives the fourth minimal generator
    Monomial y4sq(std::vector<int>{0, 0, 0, 2});
    auto F = pair_into_t(G, y4sq, fr);
    REQUIRE(F.has_value());
    Polynomial expected = tvar(fr, 1, 3) * tvar(fr, 2, 3) + tvar(fr, 0, 3) * tvar(fr, 2, 3) -
                          tvar(fr, 0, 3) * tvar(fr, 1, 3);
    CHECK(*F == expected);
    CHECK(normal_form(*F, *ot2_ideal(P).groebner()).is_zero());

    // M = y1 y4: congruent to t_{1,4} L modulo the two standard quadrics
    Monomial y1y4(std::vector<int>{1, 0, 0, 1});
    auto F2 = pair_into_t(G, y1y4, fr);
    REQUIRE(F2.has_value());
    Polynomial L = tvar(fr, 1, 2) + tvar(fr, 0, 2) - tvar(fr, 0, 1);
    Polynomial diff = *F2 - tvar(fr, 0, 3) * L;
    Ideal quads(fr.t_ring, standard_quadratic_gens(fr));
    CHECK(normal_form(diff, *quads.groebner()).is_zero());

    // odd degree: no pairing
    Monomial y1only(std::vector<int>{1, 0, 0, 0});
    CHECK(!pair_into_t(G, y1only, fr).has_value());

    // majority obstruction: y1^2 against the y2 y3 term is not pairable
    Monomial y1sq(std::vector<int>{2, 0, 0, 0});
    CHECK(!pair_into_t(G, y1sq, fr).has_value());
}

TEST_CASE("symmetric ideal generators and counts") {
    Ot2Context ctx(pencil_plus_line());
    SymGenerators sg = sym_ideal(ctx);
    CHECK(sg.sound);
    CHECK(sg.expected_count == 4 * 2 - 1);
    CHECK(sg.minimal_count == 7);
    CHECK(sg.strand_generated);
    CHECK(sg.pass);
    CHECK(sg.linear.size() == 1);
    CHECK(sg.syz_a.size() == 4); // one per triple

    Ot2Context gen(arr({"x", "y", "z", "x + y + z"}, {"x", "y", "z"}));
    SymGenerators sg2 = sym_ideal(gen);
    CHECK(sg2.pass);
    CHECK(sg2.minimal_count == 8);
    CHECK(sg2.linear.empty());

    // every generator has t-degree exactly one
    const size_t k = ctx.x_count();
    auto tdeg_is_one = [&](const Polynomial& g) {
        for (const auto& t : g.terms()) {
            long td = 0;
            for (size_t v = k; v < ctx.rt_ring().nvars(); ++v) td += t.m.e[v];
            if (td != 1) return false;
        }
        return true;
    };
    for (const auto& g : sg.linear) CHECK(tdeg_is_one(g));
    for (const auto& g : sg.syz_a) CHECK(tdeg_is_one(g));
    for (const auto& g : sg.syz_b) CHECK(tdeg_is_one(g));
    for (const auto& g : sg.syz_c) CHECK(tdeg_is_one(g));
}

TEST_CASE("first content determinant: two rows against a dependent triple") {
    // l3 = a1 l1 + a2 l2 with a1 = a2 = 1
    Ot2Context ctx(pencil_plus_line());
    const FiberRing& fr = ctx.fiber();
    std::vector<Polynomial> rows = {ctx.syz_A(0, 1, 2), ctx.syz_B(0, 1, 2)};
    std::vector<LinearForm> seq = {ctx.arrangement().form(0), ctx.arrangement().form(1)};
    SylvesterResult res = sylvester_form(ctx, rows, seq);
    CHECK(res.in_rees_ideal);

    Polynomial L = tvar(fr, 1, 2) + tvar(fr, 0, 2) - tvar(fr, 0, 1);
    Polynomial t23 = tvar(fr, 1, 2);
    CHECK((res.determinant == t23 * L || res.determinant == -(t23 * L)));
    // the monomial content is t_{2,3}; the cofactor is the linear generator
    CHECK((res.cofactor == L || res.cofactor == -L));
    CHECK(normal_form(res.cofactor, *ot2_ideal(ctx.arrangement()).groebner()).is_zero());
}

TEST_CASE("second content determinant: three rows, full 4-dependency") {
    // l4 = a1 l1 + a2 l2 + a3 l3 with independent l1, l2, l3
    Arrangement A = arr({"x", "y", "z", "x + y + z"}, {"x", "y", "z"});
    Ot2Context ctx(A);
    const FiberRing& fr = ctx.fiber();
    std::vector<Polynomial> rows = {ctx.syz_A(0, 1, 2), ctx.syz_B(0, 1, 2), ctx.syz_A(0, 1, 3)};
    std::vector<LinearForm> seq = {A.form(0), A.form(1), A.form(2)};
    SylvesterResult res = sylvester_form(ctx, rows, seq);
    CHECK(res.in_rees_ideal);

    // expected: t_{2,3} * (a3 t_{1,2} t_{2,4} + a2 t_{1,3} t_{2,4} + a1 t_{2,3} t_{2,4}
    //                      - t_{1,2} t_{2,3}) with a1 = a2 = a3 = 1
    Polynomial F = tvar(fr, 0, 1) * tvar(fr, 1, 3) + tvar(fr, 0, 2) * tvar(fr, 1, 3) +
                   tvar(fr, 1, 2) * tvar(fr, 1, 3) - tvar(fr, 0, 1) * tvar(fr, 1, 2);
    Polynomial t23 = tvar(fr, 1, 2);
    CHECK((res.determinant == t23 * F || res.determinant == -(t23 * F)));
    CHECK((res.cofactor == F || res.cofactor == -F));
    // F itself lies in the presentation ideal
    CHECK(normal_form(F, *ot2_ideal(A).groebner()).is_zero());
}

TEST_CASE("third content determinant: the standard quadric") {
    Arrangement P = pencil_plus_line();
    Ot2Context ctx(P);
    const FiberRing& fr = ctx.fiber();
    std::vector<Polynomial> rows = {ctx.syz_A(0, 1, 3), ctx.syz_A(0, 2, 3)};
    std::vector<LinearForm> seq = {P.form(0), P.form(3)};
    SylvesterResult res = sylvester_form(ctx, rows, seq);
    CHECK(res.in_rees_ideal);

    Polynomial Q1 = tvar(fr, 0, 1) * tvar(fr, 2, 3) - tvar(fr, 0, 2) * tvar(fr, 1, 3);
    CHECK((res.determinant == Q1 || res.determinant == -Q1));
    CHECK(res.content_monomial.is_one());
}

TEST_CASE("content extraction rejects bad input") {
    Ot2Context ctx(pencil_plus_line());
    std::vector<Polynomial> rows = {ctx.syz_A(0, 1, 2), ctx.syz_B(0, 1, 2)};
    std::vector<LinearForm> dep = {ctx.arrangement().form(0), ctx.arrangement().form(0)};
    CHECK_THROWS_AS(sylvester_form(ctx, rows, dep), std::invalid_argument);

    // A_{1,2,4} involves l4 = x3, outside the span of l1, l2
    std::vector<Polynomial> rows2 = {ctx.syz_A(0, 1, 2), ctx.syz_A(0, 1, 3)};
    std::vector<LinearForm> seq2 = {ctx.arrangement().form(0), ctx.arrangement().form(1)};
    CHECK_THROWS_AS(sylvester_form(ctx, rows2, seq2), std::invalid_argument);
}

TEST_CASE("dimension of the second-order algebra") {
    DimensionReport d1 = dimension_check(pencil_plus_line());
    CHECK(d1.pass);
    CHECK(d1.dim == 3);

    DimensionReport d2 = dimension_check(arr({"x", "y", "x + y"}, {"x", "y"}));
    CHECK(d2.pass);
    CHECK(d2.dim == 2);

    DimensionReport d3 =
        dimension_check(arr({"x", "y", "z", "x + y + z", "x + 2*y + 3*z"}, {"x", "y", "z"}));
    CHECK(d3.pass);

    CHECK_THROWS_AS(dimension_check(arr({"x", "y", "x + y"}, {"x", "y", "z"})),
                    std::invalid_argument);
}

TEST_CASE("colon property of the image ideal") {
    PropertiesReport p1 = properties_check(pencil_plus_line());
    CHECK(p1.pass);

    PropertiesReport p2 = properties_check(arr({"x", "y", "z"}, {"x", "y", "z"}));
    CHECK(p2.pass); // both sides zero

    PropertiesReport p3 = properties_check(arr({"x", "y", "x + y"}, {"x", "y"}));
    CHECK(p3.pass); // the colon recovers the circuit boundary quadric

    PropertiesReport p4 = properties_check(arr({"x", "y", "z", "x + y + z"}, {"x", "y", "z"}));
    CHECK(p4.pass); // size-4 circuit: the boundary only appears after the colon
}
