#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "poisson/bracket.hpp"
#include "poisson/center.hpp"
#include "poisson/derivation.hpp"
#include "poisson/parse.hpp"
#include "testutil.hpp"

using namespace poisson;

namespace {

Polynomial P(const Ring& r, const std::string& src) { return parse_polynomial(src, r); }

PoissonStructure homogenized_weyl() {
    Ring r = make_ring({"x", "y", "t"});
    return from_table(r, {{0, 1, P(r, "t^2")}});
}

PoissonStructure jacobian_xyz() {
    Ring r = testutil::ring_xyz();
    return from_potential(P(r, "x^2 - y*z"));
}

}  // namespace

TEST_CASE("biderivation extension on the Weyl bracket") {
    PoissonStructure W = symplectic(1);
    const Ring& r = W.ring();
    CHECK(W.bracket(P(r, "x"), P(r, "y")) == P(r, "1"));
    CHECK(W.bracket(P(r, "x^2"), P(r, "y")) == P(r, "2*x"));
    Polynomial f = P(r, "x^3 - 2*x*y");
    CHECK(W.bracket(f, f).is_zero());
    CHECK_THROWS_AS(W.bracket(f, Polynomial::variable(testutil::ring_xyz(), 0)), Error);
}

TEST_CASE("jacobi check") {
    SUBCASE("Jacobian brackets always pass") { CHECK(jacobian_xyz().jacobi_verified()); }
    SUBCASE("skew quadratic always passes") {
        SkewMatrix lam = SkewMatrix::from_upper(3, {rational(1), rational(2), rational(3)});
        CHECK(skew_quadratic(lam).jacobi_verified());
    }
    SUBCASE("broken table fails with the hand-computed witness") {
        Ring r = testutil::ring_xyz();
        PoissonStructure bad =
            from_table(r, {{0, 1, P(r, "z")}, {1, 2, P(r, "x")}, {2, 0, P(r, "x")}});
        CHECK_FALSE(bad.jacobi_verified());
        auto fail = jacobi_check(bad);
        REQUIRE(fail.has_value());
        CHECK(fail->i == 0);
        CHECK(fail->j == 1);
        CHECK(fail->k == 2);
        CHECK(fail->jacobiator == P(r, "-z"));
    }
}

TEST_CASE("from_potential") {
    Ring r = testutil::ring_xyz();
    SUBCASE("f = x^2 - y*z") {
        PoissonStructure A = from_potential(P(r, "x^2 - y*z"));
        CHECK(A.generator_bracket(0, 1) == P(r, "-y"));   // {x,y} = f_z
        CHECK(A.generator_bracket(1, 2) == P(r, "2*x"));  // {y,z} = f_x
        CHECK(A.generator_bracket(2, 0) == P(r, "-z"));   // {z,x} = f_y
        CHECK(A.jacobi_verified());
    }
    SUBCASE("zero potential gives the trivial bracket") {
        PoissonStructure A = from_potential(Polynomial::zero(r));
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = i + 1; j < 3; ++j) CHECK(A.table_entry(i, j).is_zero());
    }
    SUBCASE("Fermat cubic") {
        PoissonStructure A = from_potential(P(r, "x^3 + y^3 + z^3"));
        CHECK(A.generator_bracket(0, 1) == P(r, "3*z^2"));
        CHECK(A.generator_bracket(1, 2) == P(r, "3*x^2"));
        CHECK(A.generator_bracket(2, 0) == P(r, "3*y^2"));
    }
    SUBCASE("needs exactly three variables") {
        CHECK_THROWS_AS(from_potential(P(testutil::ring_xy(), "x^2")), Error);
    }
}

TEST_CASE("skew quadratic constructor") {
    SUBCASE("n = 2") {
        SkewMatrix lam(2);
        lam.set(0, 1, rational(5));
        PoissonStructure A = skew_quadratic(lam);
        CHECK(A.table_entry(0, 1) == P(A.ring(), "5*x1*x2"));
    }
    SUBCASE("zero matrix gives the trivial bracket") {
        PoissonStructure A = skew_quadratic(SkewMatrix(2));
        CHECK(A.table_entry(0, 1).is_zero());
    }
    SUBCASE("n = 3 entries") {
        SkewMatrix lam = SkewMatrix::from_upper(3, {rational(1), rational(2), rational(3)});
        PoissonStructure A = skew_quadratic(lam);
        const Ring& r = A.ring();
        CHECK(A.table_entry(0, 1) == P(r, "x1*x2"));
        CHECK(A.table_entry(0, 2) == P(r, "2*x1*x3"));
        CHECK(A.table_entry(1, 2) == P(r, "3*x2*x3"));
    }
}

TEST_CASE("symplectic constructor") {
    SUBCASE("n = 1 is the first Poisson Weyl algebra") {
        PoissonStructure W = symplectic(1);
        CHECK(W.ring()->names() == std::vector<std::string>{"x", "y"});
        CHECK(W.table_entry(0, 1) == P(W.ring(), "1"));
    }
    SUBCASE("n = 2 pairs x_i with y_i only") {
        PoissonStructure W = symplectic(2);
        const Ring& r = W.ring();
        CHECK(W.bracket(P(r, "x1"), P(r, "y1")) == P(r, "1"));
        CHECK(W.bracket(P(r, "x2"), P(r, "y2")) == P(r, "1"));
        CHECK(W.bracket(P(r, "x1"), P(r, "x2")).is_zero());
        CHECK(W.bracket(P(r, "x1"), P(r, "y2")).is_zero());
        CHECK(W.jacobi_verified());
    }
}

TEST_CASE("Kirillov-Kostant brackets") {
    SUBCASE("sl2") {
        Ring r = make_ring({"h", "e", "f"});
        PoissonStructure A = linear_from_lie(
            r, {{0, 1, P(r, "2*e")}, {0, 2, P(r, "-2*f")}, {1, 2, P(r, "h")}});
        CHECK(A.jacobi_verified());
        CHECK(A.bracket(P(r, "h"), P(r, "e")) == P(r, "2*e"));
    }
    SUBCASE("abelian constants give the trivial bracket") {
        Ring r = testutil::ring_xyz();
        PoissonStructure A = linear_from_lie(r, {});
        CHECK(A.table_entry(0, 1).is_zero());
        CHECK(A.jacobi_verified());
    }
    SUBCASE("non-Lie constants are rejected with the witness") {
        Ring r = testutil::ring_xyz();
        try {
            linear_from_lie(r, {{0, 1, P(r, "z")}, {1, 2, P(r, "x")}, {2, 0, P(r, "x")}});
            FAIL("expected JacobiError");
        } catch (const JacobiError& e) {
            CHECK(e.failure.jacobiator == P(r, "-z"));
        }
    }
    SUBCASE("entries must be linear") {
        Ring r = testutil::ring_xyz();
        CHECK_THROWS_AS(linear_from_lie(r, {{0, 1, P(r, "x^2")}}), Error);
    }
}

TEST_CASE("tensor products") {
    SUBCASE("adjoining a central variable") {
        PoissonStructure W = symplectic(1);
        PoissonStructure T = tensor(W, trivial_structure(make_ring({"t"})));
        const Ring& r = T.ring();
        CHECK(r->names() == std::vector<std::string>{"x", "y", "t"});
        CHECK(T.bracket(P(r, "x"), P(r, "y")) == P(r, "1"));
        CHECK(T.bracket(P(r, "t"), P(r, "x")).is_zero());
        CHECK(T.bracket(P(r, "t"), P(r, "y")).is_zero());
    }
    SUBCASE("trivial times trivial is trivial") {
        PoissonStructure T =
            tensor(trivial_structure(testutil::ring_xy()), trivial_structure(make_ring({"u"})));
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = i + 1; j < 3; ++j) CHECK(T.table_entry(i, j).is_zero());
    }
    SUBCASE("relations survive the tensor product") {
        PoissonStructure H = homogenized_weyl();
        PoissonStructure Q = quotient(H, make_poisson_ideal(H, {P(H.ring(), "t - 1")}));
        PoissonStructure T = tensor(Q, trivial_structure(make_ring({"u"})));
        REQUIRE(T.has_relations());
        const Ring& r = T.ring();
        CHECK(T.bracket(P(r, "x"), P(r, "y")) == P(r, "1"));
        CHECK(T.reduce(P(r, "t")) == P(r, "1"));
        CHECK(T.bracket(P(r, "u"), P(r, "x")).is_zero());
    }
    SUBCASE("Weyl tensor Weyl matches symplectic(2) up to renaming") {
        PoissonStructure T = tensor(symplectic(1), symplectic(1));
        // Right factor collides on x and y; renamed x2, y2.
        CHECK(T.ring()->names() == std::vector<std::string>{"x", "y", "x2", "y2"});
        PoissonStructure S = symplectic(2);
        for (size_t i = 0; i < 4; ++i) {
            for (size_t j = i + 1; j < 4; ++j) {
                // Match variables by block: (x,y,x2,y2) vs (x1,x2,y1,y2).
                auto slot = [](size_t k) { return std::vector<size_t>{0, 2, 1, 3}[k]; };
                Polynomial lhs = T.generator_bracket(i, j);
                Polynomial rhs = S.generator_bracket(slot(i), slot(j));
                CHECK(lhs.is_zero() == rhs.is_zero());
                if (!lhs.is_zero()) CHECK(lhs.is_constant());
                if (!lhs.is_zero()) CHECK(lhs.constant_value() == rhs.constant_value());
            }
        }
    }
}

TEST_CASE("Poisson-Ore extensions") {
    SUBCASE("alpha = delta = 0 is the central polynomial extension") {
        PoissonStructure W = symplectic(1);
        PoissonStructure E = ore_extend(W, Derivation::zero(W.ring()),
                                        Derivation::zero(W.ring()), "z");
        const Ring& r = E.ring();
        CHECK(E.bracket(P(r, "z"), P(r, "x")).is_zero());
        CHECK(E.bracket(P(r, "z"), P(r, "y")).is_zero());
        CHECK(E.bracket(P(r, "x"), P(r, "y")) == P(r, "1"));

        // Table equality with the tensor route.
        PoissonStructure T = tensor(W, trivial_structure(make_ring({"z"})));
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = i + 1; j < 3; ++j)
                CHECK(E.table_entry(i, j) == T.table_entry(i, j));
    }
    SUBCASE("d/dy as delta rebuilds the Weyl bracket") {
        Ring base = make_ring({"y"});
        PoissonStructure A = trivial_structure(base);
        PoissonStructure E =
            ore_extend(A, Derivation::zero(base), Derivation::partial(base, 0), "x");
        const Ring& r = E.ring();
        CHECK(E.bracket(P(r, "x"), P(r, "y")) == P(r, "1"));
    }
    SUBCASE("delta = -t^2 d/dx rebuilds the homogenized Weyl bracket") {
        Ring base = make_ring({"x", "t"});
        PoissonStructure A = trivial_structure(base);
        Derivation delta = Derivation::make(
            base, {P(base, "-t^2"), Polynomial::zero(base)});
        PoissonStructure E = ore_extend(A, Derivation::zero(base), delta, "y");
        const Ring& r = E.ring();
        CHECK(E.bracket(P(r, "x"), P(r, "y")) == P(r, "t^2"));
        CHECK(E.bracket(P(r, "t"), P(r, "y")).is_zero());
    }
    SUBCASE("the new variable must be fresh") {
        PoissonStructure W = symplectic(1);
        CHECK_THROWS_AS(
            ore_extend(W, Derivation::zero(W.ring()), Derivation::zero(W.ring()), "x"), Error);
    }
    SUBCASE("nonzero alpha scales the new variable") {
        Ring base = make_ring({"a"});
        PoissonStructure A = trivial_structure(base);
        Derivation scale = Derivation::make(base, {P(base, "a")});
        PoissonStructure E = ore_extend(A, scale, Derivation::zero(base), "z");
        const Ring& r = E.ring();
        CHECK(E.bracket(P(r, "z"), P(r, "a")) == P(r, "a*z"));
    }
    SUBCASE("alpha must be a Poisson derivation") {
        Ring r = testutil::ring_xy();
        PoissonStructure A = from_table(r, {{0, 1, P(r, "x*y")}});
        Derivation ydx = Derivation::make(r, {P(r, "y"), Polynomial::zero(r)});
        CHECK_THROWS_AS(ore_extend(A, ydx, Derivation::zero(r), "z"), Error);
    }
    SUBCASE("delta must satisfy the alpha-derivation law") {
        // With alpha = 0 the law degenerates to the Poisson-derivation law,
        // which y d/dx fails on {x,y} = x*y.
        Ring r = testutil::ring_xy();
        PoissonStructure A = from_table(r, {{0, 1, P(r, "x*y")}});
        Derivation ydx = Derivation::make(r, {P(r, "y"), Polynomial::zero(r)});
        CHECK_THROWS_AS(ore_extend(A, Derivation::zero(r), ydx, "z"), Error);
    }
}

TEST_CASE("Poisson ideals") {
    SUBCASE("(t - a) is Poisson in the homogenized Weyl algebra for every a") {
        PoissonStructure H = homogenized_weyl();
        const Ring& r = H.ring();
        for (const char* val : {"t", "t - 1", "t + 3", "t - 5/2"})
            CHECK(is_poisson_ideal(H, {P(r, val)}).ok);
    }
    SUBCASE("single variables are Poisson in skew quadratic algebras") {
        SkewMatrix lam = SkewMatrix::from_upper(2, {rational(3)});
        PoissonStructure A = skew_quadratic(lam);
        CHECK(is_poisson_ideal(A, {P(A.ring(), "x1")}).ok);
    }
    SUBCASE("x1 + x2 is not Poisson when lambda_12 != 0") {
        SkewMatrix lam = SkewMatrix::from_upper(2, {rational(3)});
        PoissonStructure A = skew_quadratic(lam);
        auto check = is_poisson_ideal(A, {P(A.ring(), "x1 + x2")});
        CHECK_FALSE(check.ok);
        REQUIRE(check.residue.has_value());
        CHECK_FALSE(check.residue->is_zero());
    }
}

TEST_CASE("quotients") {
    PoissonStructure H = homogenized_weyl();
    const Ring& r = H.ring();
    SUBCASE("H/(t-1) is the Weyl bracket") {
        PoissonStructure Q = quotient(H, make_poisson_ideal(H, {P(r, "t - 1")}));
        CHECK(Q.bracket(P(r, "x"), P(r, "y")) == P(r, "1"));
        CHECK(Q.jacobi_verified());
    }
    SUBCASE("H/(t) is the trivial bracket on two variables") {
        PoissonStructure Q = quotient(H, make_poisson_ideal(H, {P(r, "t")}));
        CHECK(Q.bracket(P(r, "x"), P(r, "y")).is_zero());
    }
    SUBCASE("quotient by the zero ideal changes nothing") {
        PoissonStructure Q = quotient(H, make_poisson_ideal(H, {}));
        CHECK(Q.bracket(P(r, "x"), P(r, "y")) == H.bracket(P(r, "x"), P(r, "y")));
        CHECK(center_basis(Q, 2).basis.size() == center_basis(H, 2).basis.size());
    }
    SUBCASE("non-Poisson ideals are rejected") {
        CHECK_THROWS_AS(make_poisson_ideal(H, {P(r, "x")}), Error);
    }
}

TEST_CASE("poisson points") {
    SUBCASE("Weyl has none") {
        CHECK(poisson_points(symplectic(1)).is_unit_ideal());
    }
    SUBCASE("homogenized Weyl degenerates along t = 0") {
        GroebnerBasis pts = poisson_points(homogenized_weyl());
        REQUIRE(pts.generators.size() == 1);
        CHECK(pts.generators[0] == P(homogenized_weyl().ring(), "t^2"));
    }
    SUBCASE("the Jacobian bracket of x^2 - y*z vanishes only at the origin") {
        GroebnerBasis pts = poisson_points(jacobian_xyz());
        REQUIRE(pts.generators.size() == 3);
        CHECK(is_zero_dimensional(pts));
        CHECK(quotient_dimension(pts) == 1);
    }
}

TEST_CASE("antisymmetry and Leibniz on random pairs") {
    std::mt19937_64 rng(550001);
    std::vector<PoissonStructure> fixtures = {symplectic(1), jacobian_xyz(), homogenized_weyl()};
    for (const auto& A : fixtures) {
        const Ring& r = A.ring();
        for (int i = 0; i < 170; ++i) {
            Polynomial f = testutil::random_poly(rng, r, 3, 4);
            Polynomial g = testutil::random_poly(rng, r, 3, 4);
            Polynomial h = testutil::random_poly(rng, r, 3, 4);
            CHECK(A.bracket(f, g) == -A.bracket(g, f));
            CHECK(A.bracket(f, g * h) == A.bracket(f, g) * h + g * A.bracket(f, h));
        }
    }
}

TEST_CASE("generator-level Jacobi extends to random triples") {
    std::mt19937_64 rng(550002);
    SkewMatrix lam = SkewMatrix::from_upper(3, {rational(1), rational(-2), rational(1, 2)});
    std::vector<PoissonStructure> fixtures = {jacobian_xyz(), skew_quadratic(lam), symplectic(1)};
    for (const auto& A : fixtures) {
        REQUIRE(A.jacobi_verified());
        const Ring& r = A.ring();
        for (int i = 0; i < 50; ++i) {
            Polynomial f = testutil::random_poly(rng, r, 3, 3);
            Polynomial g = testutil::random_poly(rng, r, 3, 3);
            Polynomial h = testutil::random_poly(rng, r, 3, 3);
            Polynomial J = A.bracket(f, A.bracket(g, h)) + A.bracket(g, A.bracket(h, f)) +
                           A.bracket(h, A.bracket(f, g));
            CHECK(J.is_zero());
        }
    }
}

TEST_CASE("quotient respects brackets") {
    std::mt19937_64 rng(550003);
    PoissonStructure H = homogenized_weyl();
    const Ring& r = H.ring();
    PoissonStructure Q = quotient(H, make_poisson_ideal(H, {P(r, "t - 2")}));
    for (int i = 0; i < 60; ++i) {
        Polynomial f = testutil::random_poly(rng, r, 3, 4);
        Polynomial g = testutil::random_poly(rng, r, 3, 4);
        // bracket then reduce = reduce then bracket
        CHECK(Q.reduce(H.bracket(f, g)) == Q.bracket(Q.reduce(f), Q.reduce(g)));
    }
}

TEST_CASE("tensor center law for Weyl tensor Q[t]") {
    // pcnt(A tensor Q[t]) = pcnt(A) tensor Q[t], checked degreewise.
    PoissonStructure T = tensor(symplectic(1), trivial_structure(make_ring({"t"})));
    const Ring& r = T.ring();
    for (int d = 0; d <= 6; ++d) {
        CenterReport report = center_basis(T, d);
        std::vector<Polynomial> expected;
        for (int k = 0; k <= d; ++k)
            expected.push_back(P(r, k == 0 ? std::string("1") : "t^" + std::to_string(k)));
        CHECK(testutil::same_span(report.basis, expected));
    }
}

TEST_CASE("tensor center law over a base with nontrivial center") {
    // The truncated center of H is spanned by t^a, so the center of
    // H tensor Q[u] must be spanned by the products t^a u^b degreewise.
    PoissonStructure T = tensor(homogenized_weyl(), trivial_structure(make_ring({"u"})));
    const Ring& r = T.ring();
    for (int d = 0; d <= 5; ++d) {
        CenterReport report = center_basis(T, d);
        std::vector<Polynomial> expected;
        for (int a = 0; a <= d; ++a)
            for (int b = 0; a + b <= d; ++b) {
                Monomial m = Monomial::one(4);
                m.exponents[2] = a;  // t
                m.exponents[3] = b;  // u
                expected.push_back(Polynomial::term(r, m, Rational(1)));
            }
        CHECK(testutil::same_span(report.basis, expected));
    }
}
