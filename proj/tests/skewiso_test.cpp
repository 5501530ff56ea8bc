#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "poisson/parse.hpp"
#include "poisson/skewiso.hpp"
#include "testutil.hpp"

using namespace poisson;

namespace {

SkewMatrix upper3(long a, long b, long c) {
    return SkewMatrix::from_upper(3, {rational(a), rational(b), rational(c)});
}

// Exhaustive S_n sweep; the oracle for small dimensions.
bool brute_force_isomorphic(const SkewMatrix& a, const SkewMatrix& b) {
    if (a.dim() != b.dim()) return false;
    std::vector<size_t> perm(a.dim());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (size_t i = 0; i < a.dim() && match; ++i)
            for (size_t j = 0; j < a.dim() && match; ++j)
                if (!(a.at(i, j) == b.at(perm[i], perm[j]))) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

SkewMatrix random_skew(std::mt19937_64& rng, size_t n) {
    std::uniform_int_distribution<long> entry(-2, 2);
    SkewMatrix m(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) m.set(i, j, rational(entry(rng)));
    return m;
}

SkewMatrix conjugate_by_permutation(const SkewMatrix& b, const std::vector<size_t>& sigma) {
    // a with a_ij = b_{sigma(i) sigma(j)} is isomorphic to b via sigma.
    SkewMatrix a(b.dim());
    for (size_t i = 0; i < b.dim(); ++i)
        for (size_t j = i + 1; j < b.dim(); ++j) a.set(i, j, b.at(sigma[i], sigma[j]));
    return a;
}

}  // namespace

TEST_CASE("find_permutation examples") {
    SUBCASE("reversal matches (1,2,3) with (-3,-2,-1)") {
        auto sigma = find_permutation(upper3(1, 2, 3), upper3(-3, -2, -1));
        REQUIRE(sigma.has_value());
        CHECK(*sigma == std::vector<size_t>{2, 1, 0});
    }
    SUBCASE("no match for (1,2,3) vs (1,2,4)") {
        CHECK_FALSE(find_permutation(upper3(1, 2, 3), upper3(1, 2, 4)).has_value());
    }
    SUBCASE("identity on equal matrices") {
        auto sigma = find_permutation(upper3(1, 2, 3), upper3(1, 2, 3));
        REQUIRE(sigma.has_value());
        CHECK(*sigma == std::vector<size_t>{0, 1, 2});
    }
}

TEST_CASE("iso_decision") {
    SUBCASE("self isomorphism, n = 2") {
        SkewMatrix q = SkewMatrix::from_upper(2, {rational(5)});
        IsoDecision d = iso_decision(q, q);
        CHECK(d.isomorphic);
        CHECK(*d.sigma == std::vector<size_t>{0, 1});
        CHECK(d.map_verified);
        CHECK(d.hypothesis_holds);
    }
    SUBCASE("reversal with verified relabeling") {
        IsoDecision d = iso_decision(upper3(1, 2, 3), upper3(-3, -2, -1));
        REQUIRE(d.isomorphic);
        CHECK(*d.sigma == std::vector<size_t>{2, 1, 0});
        CHECK(d.map_verified);
    }
    SUBCASE("dimension mismatch") {
        SkewMatrix two = SkewMatrix::from_upper(2, {rational(1)});
        CHECK_FALSE(iso_decision(two, upper3(1, 1, 1)).isomorphic);
    }
    SUBCASE("hypothesis flag reports zero entries") {
        CHECK_FALSE(iso_decision(upper3(1, 0, 3), upper3(1, 0, 3)).hypothesis_holds);
    }
}

TEST_CASE("degree-one principal Poisson ideals") {
    SkewMatrix lam = upper3(1, 2, 3);
    Ring r = make_ring({"x1", "x2", "x3"});
    CHECK(degree_one_principal_poisson(lam, parse_polynomial("x1", r)));
    CHECK_FALSE(degree_one_principal_poisson(lam, parse_polynomial("x1 + x2", r)));
    CHECK(degree_one_principal_poisson(lam, parse_polynomial("5*x3", r)));
    CHECK_THROWS_AS(degree_one_principal_poisson(lam, parse_polynomial("x1^2", r)), Error);
    CHECK_THROWS_AS(degree_one_principal_poisson(lam, parse_polynomial("x1 + 1", r)), Error);
}

TEST_CASE("returned permutations are sound and invertible") {
    std::mt19937_64 rng(880001);
    for (int trial = 0; trial < 30; ++trial) {
        size_t n = 2 + trial % 4;
        SkewMatrix b = random_skew(rng, n);
        std::vector<size_t> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        SkewMatrix a = conjugate_by_permutation(b, sigma);

        IsoDecision d = iso_decision(a, b);
        REQUIRE(d.isomorphic);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                CHECK(a.at(i, j) == b.at((*d.sigma)[i], (*d.sigma)[j]));

        // Symmetry: the reverse decision inverts sigma.
        IsoDecision back = iso_decision(b, a);
        REQUIRE(back.isomorphic);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                CHECK(b.at(i, j) == a.at((*back.sigma)[i], (*back.sigma)[j]));
    }
}

TEST_CASE("agreement with the brute-force sweep on random pairs") {
    std::mt19937_64 rng(880002);
    for (int trial = 0; trial < 60; ++trial) {
        size_t n = 2 + trial % 3;
        SkewMatrix a = random_skew(rng, n);
        SkewMatrix b = random_skew(rng, n);
        CHECK(iso_decision(a, b).isomorphic == brute_force_isomorphic(a, b));
    }
}

TEST_CASE("self isomorphism always holds") {
    std::mt19937_64 rng(880003);
    for (int trial = 0; trial < 20; ++trial) {
        SkewMatrix a = random_skew(rng, 2 + trial % 4);
        CHECK(iso_decision(a, a).isomorphic);
    }
}
