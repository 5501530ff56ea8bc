#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "poisson/center.hpp"
#include "poisson/discriminant.hpp"
#include "poisson/parse.hpp"
#include "testutil.hpp"

using namespace poisson;

namespace {

Polynomial P(const Ring& r, const std::string& src) { return parse_polynomial(src, r); }

PoissonStructure homogenized_weyl() {
    Ring r = make_ring({"x", "y", "t"});
    return from_table(r, {{0, 1, P(r, "t^2")}});
}

// Test-local Euclid over one variable, independent of the library's
// squarefree machinery.
Polynomial euclid_gcd(Polynomial a, Polynomial b, size_t var) {
    auto deg_in = [var](const Polynomial& p) {
        int d = -1;
        for (const auto& [m, c] : p.terms()) d = std::max(d, m[var]);
        return d;
    };
    auto coeff_at = [var](const Polynomial& p, int d) {
        for (const auto& [m, c] : p.terms())
            if (m[var] == d) return c;
        return Rational(0);
    };
    while (!b.is_zero()) {
        Polynomial rem = a;
        int db = deg_in(b);
        Rational lb = coeff_at(b, db);
        while (!rem.is_zero() && deg_in(rem) >= db) {
            int dr = deg_in(rem);
            rem -= Polynomial::term(rem.ring(), Monomial::var(rem.nvars(), var, dr - db),
                                    coeff_at(rem, dr) / lb) *
                   b;
        }
        a = b;
        b = rem;
    }
    if (!a.is_zero()) {
        int da = deg_in(a);
        a = Rational(1 / coeff_at(a, da)) * a;
    }
    return a;
}

}  // namespace

TEST_CASE("homogenized Weyl: d = t") {
    PoissonStructure H = homogenized_weyl();
    const Ring& r = H.ring();
    DiscriminantReport report = discriminant_poisson_points(H, P(r, "t"));
    CHECK(report.critical_polynomial == P(report.critical_polynomial.ring(), "w"));
    CHECK(report.discriminant == P(r, "t"));
    CHECK(report.locus_note == "positive-dimensional poisson-point set");
}

TEST_CASE("Jacobian bracket of x^2 - y*z: d = f") {
    Ring r = testutil::ring_xyz();
    Polynomial f = P(r, "x^2 - y*z");
    PoissonStructure A = from_potential(f);
    DiscriminantReport report = discriminant_poisson_points(A, f);
    CHECK(report.critical_polynomial == P(report.critical_polynomial.ring(), "w"));
    CHECK(report.discriminant == f);
    CHECK(report.locus_note == "finite poisson-point set");
}

TEST_CASE("Weyl bracket: empty discriminant set, d = 1") {
    PoissonStructure W = symplectic(1);
    DiscriminantReport report =
        discriminant_poisson_points(W, Polynomial::constant(W.ring(), Rational(1)));
    CHECK(report.discriminant == P(W.ring(), "1"));
    CHECK(report.critical_polynomial.is_constant());
    CHECK(report.locus_note == "empty poisson-point set");
}

TEST_CASE("two isolated critical values") {
    // f = x^2 + y^2 + z^2 - z^3 has critical points (0,0,0) and (0,0,2/3)
    // with critical values 0 and 4/27, so d = f * (f - 4/27) before
    // normalization; the squarefree critical polynomial is w^2 - 4/27 w.
    Ring r = testutil::ring_xyz();
    Polynomial f = P(r, "x^2 + y^2 + z^2 - z^3");
    PoissonStructure A = from_potential(f);
    REQUIRE(is_central(A, f));
    DiscriminantReport report = discriminant_poisson_points(A, f);
    const Ring& w = report.critical_polynomial.ring();
    CHECK(report.critical_polynomial == P(w, "w^2 - 4/27*w"));
    CHECK(report.discriminant == f * f - rational(4, 27) * f);

    SUBCASE("rational roots bound actual poisson points") {
        for (const char* root : {"0", "4/27"}) {
            PoissonStructure Q =
                quotient(A, make_poisson_ideal(A, {f - P(r, root)}));
            CHECK_FALSE(poisson_points(Q).is_unit_ideal());
        }
        for (const char* non_root : {"1", "-2", "1/27"}) {
            PoissonStructure Q =
                quotient(A, make_poisson_ideal(A, {f - P(r, non_root)}));
            CHECK(poisson_points(Q).is_unit_ideal());
        }
    }
    SUBCASE("critical polynomial is squarefree") {
        const Polynomial& p = report.critical_polynomial;
        CHECK(euclid_gcd(p, p.partial(0), 0).is_constant());
    }
}

TEST_CASE("errors") {
    SUBCASE("non-central designated element") {
        PoissonStructure H = homogenized_weyl();
        CHECK_THROWS_AS(discriminant_poisson_points(H, P(H.ring(), "x")), Error);
    }
    SUBCASE("positive-dimensional critical-value set") {
        PoissonStructure A = trivial_structure(testutil::ring_xy());
        CHECK_THROWS_AS(discriminant_poisson_points(A, P(A.ring(), "x")), Error);
    }
}

TEST_CASE("permutation invariance of the pipeline") {
    // Cyclic relabeling x -> y -> z -> x carries the Jacobian structure of f
    // to the one of the relabeled potential; p(w) agrees and d maps along.
    Ring r = testutil::ring_xyz();
    Polynomial f = P(r, "x^2 - y*z");
    Polynomial f_cycled = P(r, "y^2 - z*x");
    DiscriminantReport a = discriminant_poisson_points(from_potential(f), f);
    DiscriminantReport b = discriminant_poisson_points(from_potential(f_cycled), f_cycled);
    CHECK(a.critical_polynomial == b.critical_polynomial);
    std::vector<Polynomial> cycle = {P(r, "y"), P(r, "z"), P(r, "x")};
    CHECK(a.discriminant.substitute(cycle) == b.discriminant);
}

TEST_CASE("the discriminant is central") {
    Ring r = testutil::ring_xyz();
    Polynomial f = P(r, "x^2 + y^2 + z^2 - z^3");
    PoissonStructure A = from_potential(f);
    DiscriminantReport report = discriminant_poisson_points(A, f);
    CHECK(is_central(A, report.discriminant));

    PoissonStructure H = homogenized_weyl();
    CHECK(is_central(H, discriminant_poisson_points(H, P(H.ring(), "t")).discriminant));
}

TEST_CASE("singular locus") {
    Ring r = testutil::ring_xyz();
    SUBCASE("cone x^2 - y*z") {
        SingularLocusReport report = singular_locus(P(r, "x^2 - y*z"));
        CHECK(report.isolated);
        REQUIRE(report.milnor_dimension.has_value());
        CHECK(*report.milnor_dimension == 1);
        REQUIRE(report.jacobian_ideal.generators.size() == 3);
    }
    SUBCASE("Fermat cubic") {
        SingularLocusReport report = singular_locus(P(r, "x^3 + y^3 + z^3"));
        CHECK(report.isolated);
        CHECK(*report.milnor_dimension == 8);
    }
    SUBCASE("x^2 is singular along a plane") {
        SingularLocusReport report = singular_locus(P(r, "x^2"));
        CHECK_FALSE(report.isolated);
        CHECK_FALSE(report.milnor_dimension.has_value());
    }
    SUBCASE("three variables required") {
        CHECK_THROWS_AS(singular_locus(P(testutil::ring_xy(), "x^2")), Error);
    }
}

TEST_CASE("effectiveness certificates") {
    SUBCASE("any nonzero univariate element") {
        Ring t = make_ring({"t"});
        CHECK(effectiveness_certificate(P(t, "t"), RingKind::Univariate) ==
              Effectiveness::EffectiveCertified);
        CHECK(effectiveness_certificate(P(t, "t^3 - 2*t + 1/2"), RingKind::Univariate) ==
              Effectiveness::EffectiveCertified);
    }
    SUBCASE("dominating monomial with all-positive exponents") {
        Ring r = testutil::ring_xy();
        CHECK(effectiveness_certificate(P(r, "x^2*y + x"), RingKind::Multivariate) ==
              Effectiveness::EffectiveCertified);
        CHECK(effectiveness_certificate(P(r, "3*x*y - 1"), RingKind::Multivariate) ==
              Effectiveness::EffectiveCertified);
    }
    SUBCASE("no dominating monomial: Unknown, never a refutation") {
        Ring r = testutil::ring_xy();
        CHECK(effectiveness_certificate(P(r, "x + y"), RingKind::Multivariate) ==
              Effectiveness::Unknown);
        CHECK(effectiveness_certificate(P(r, "x^2 + y^2"), RingKind::Multivariate) ==
              Effectiveness::Unknown);
        // x^2*y is the component-wise max of the support but misses y's slot.
        CHECK(effectiveness_certificate(P(r, "x^2 + x^2*y"), RingKind::Multivariate) ==
              Effectiveness::EffectiveCertified);
        CHECK(effectiveness_certificate(P(r, "x^2 + x^2*y") - P(r, "x^2*y"),
                                        RingKind::Multivariate) == Effectiveness::Unknown);
    }
    SUBCASE("errors") {
        Ring r = testutil::ring_xy();
        CHECK_THROWS_AS(effectiveness_certificate(Polynomial::zero(r), RingKind::Multivariate),
                        Error);
        CHECK_THROWS_AS(effectiveness_certificate(P(r, "x"), RingKind::Univariate), Error);
    }
}

TEST_CASE("squarefree part") {
    Ring t = make_ring({"w"});
    CHECK(squarefree_part_univariate(P(t, "w^2")) == P(t, "w"));
    CHECK(squarefree_part_univariate(P(t, "w^3 - w^2")) == P(t, "w^2 - w"));
    CHECK(squarefree_part_univariate(P(t, "2*w + 2")) == P(t, "w + 1"));
    CHECK(squarefree_part_univariate(P(t, "5")) == P(t, "1"));
}
