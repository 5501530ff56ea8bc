#include "poisson/skewiso.hpp"

#include <algorithm>
#include <set>

#include "poisson/bracket.hpp"
#include "poisson/derivation.hpp"

namespace poisson {

namespace {

std::multiset<Rational> row_multiset(const SkewMatrix& m, size_t i) {
    std::multiset<Rational> row;
    for (size_t j = 0; j < m.dim(); ++j)
        if (j != i) row.insert(m.at(i, j));
    return row;
}

bool extend(const SkewMatrix& a, const SkewMatrix& b, std::vector<size_t>& sigma,
            std::vector<bool>& used, size_t i,
            const std::vector<std::vector<bool>>& candidate) {
    const size_t n = a.dim();
    if (i == n) return true;
    for (size_t target = 0; target < n; ++target) {
        if (used[target] || !candidate[i][target]) continue;
        bool consistent = true;
        for (size_t j = 0; j < i && consistent; ++j) {
            if (!(a.at(i, j) == b.at(target, sigma[j]))) consistent = false;
        }
        if (!consistent) continue;
        sigma[i] = target;
        used[target] = true;
        if (extend(a, b, sigma, used, i + 1, candidate)) return true;
        used[target] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<size_t>> find_permutation(const SkewMatrix& a, const SkewMatrix& b) {
    if (a.dim() != b.dim()) return std::nullopt;
    const size_t n = a.dim();
    if (n == 0) return std::vector<size_t>{};

    std::vector<std::multiset<Rational>> rows_a(n), rows_b(n);
    for (size_t i = 0; i < n; ++i) {
        rows_a[i] = row_multiset(a, i);
        rows_b[i] = row_multiset(b, i);
    }
    std::vector<std::vector<bool>> candidate(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) {
        bool any = false;
        for (size_t j = 0; j < n; ++j) {
            candidate[i][j] = rows_a[i] == rows_b[j];
            any = any || candidate[i][j];
        }
        if (!any) return std::nullopt;
    }

    std::vector<size_t> sigma(n, 0);
    std::vector<bool> used(n, false);
    if (!extend(a, b, sigma, used, 0, candidate)) return std::nullopt;

    // Re-verify entrywise before reporting.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!(a.at(i, j) == b.at(sigma[i], sigma[j])))
                throw Error("find_permutation: internal verification failed");
    return sigma;
}

IsoDecision iso_decision(const SkewMatrix& a, const SkewMatrix& b) {
    IsoDecision decision;
    decision.hypothesis_holds = a.all_offdiag_nonzero();
    decision.sigma = find_permutation(a, b);
    decision.isomorphic = decision.sigma.has_value();
    if (!decision.isomorphic) return decision;

    // Verify the induced relabeling x_i -> x_{sigma(i)} as a Poisson map.
    PoissonStructure A = skew_quadratic(a);
    PoissonStructure B = skew_quadratic(b);
    RingMap phi;
    phi.source = A.ring();
    phi.target = B.ring();
    for (size_t i = 0; i < a.dim(); ++i)
        phi.images.push_back(Polynomial::variable(B.ring(), (*decision.sigma)[i]));
    decision.map_verified = is_poisson_map(A, B, phi);
    if (!decision.map_verified)
        throw Error("iso_decision: permutation found but the relabeling is not a Poisson map");
    return decision;
}

bool degree_one_principal_poisson(const SkewMatrix& lambda, const Polynomial& f) {
    if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != 1)
        throw Error("degree_one_principal_poisson: f must be homogeneous of degree one");
    PoissonStructure P = skew_quadratic(lambda, f.ring());
    bool ideal_answer = is_poisson_ideal(P, {f}).ok;

    size_t support = 0;
    for (const auto& [m, c] : f.terms()) support += (c != 0);
    bool syntactic = support == 1;

    if (lambda.all_offdiag_nonzero() && ideal_answer != syntactic)
        throw Error(
            "degree_one_principal_poisson: ideal test disagrees with the single-variable "
            "criterion under the all-nonzero hypothesis");
    return ideal_answer;
}

}  // namespace poisson
