#include "poisson/center.hpp"

#include <algorithm>
#include <map>

#include "poisson/linalg.hpp"

namespace poisson {

namespace {

// A table is graded when all nonzero entries (and all relations) are
// homogeneous of one common degree >= 1; then brackets shift degrees
// uniformly and central elements split into central homogeneous parts.
bool graded_table(const PoissonStructure& P) {
    int common = -1;
    for (size_t i = 0; i < P.nvars(); ++i) {
        for (size_t j = i + 1; j < P.nvars(); ++j) {
            const Polynomial& e = P.table_entry(i, j);
            if (e.is_zero()) continue;
            if (!e.is_homogeneous()) return false;
            int d = e.total_degree();
            if (common < 0)
                common = d;
            else if (common != d)
                return false;
        }
    }
    if (common < 1) return false;
    if (P.has_relations())
        for (const auto& g : P.relations().generators)
            if (!g.is_homogeneous()) return false;
    return true;
}

std::vector<Monomial> basis_monomials(const PoissonStructure& P, int dmax) {
    GroebnerBasis rel;
    if (P.has_relations())
        rel = P.relations();
    else
        rel.ring = P.ring();
    return standard_monomials_up_to(rel, dmax);
}

// Solve {z, x_i} = 0 over the span of the given monomials.
std::vector<Polynomial> solve_block(const PoissonStructure& P,
                                    const std::vector<Monomial>& mons) {
    if (mons.empty()) return {};
    std::map<std::pair<size_t, Monomial>, size_t> row_of;
    std::vector<std::map<size_t, Rational>> cols(mons.size());
    for (size_t mi = 0; mi < mons.size(); ++mi) {
        Polynomial mono = Polynomial::term(P.ring(), mons[mi], Rational(1));
        for (size_t v = 0; v < P.nvars(); ++v) {
            Polynomial b = P.bracket(mono, Polynomial::variable(P.ring(), v));
            for (const auto& [m, c] : b.terms()) {
                auto key = std::make_pair(v, m);
                auto it = row_of.find(key);
                if (it == row_of.end()) it = row_of.emplace(key, row_of.size()).first;
                cols[mi][it->second] += c;
            }
        }
    }
    Matrix m(row_of.size(), Vector(mons.size(), Rational(0)));
    for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : cols[c]) m[r][c] = v;

    std::vector<Polynomial> out;
    for (const auto& v : null_space(m, mons.size())) {
        Polynomial z = Polynomial::zero(P.ring());
        for (size_t mi = 0; mi < mons.size(); ++mi)
            if (v[mi] != 0) z += Polynomial::term(P.ring(), mons[mi], v[mi]);
        out.push_back(z);
    }
    return out;
}

}  // namespace

CenterReport center_basis(const PoissonStructure& P, int dmax) {
    if (dmax < 0) throw Error("center_basis: dmax must be >= 0");
    CenterReport report;
    report.max_degree = dmax;
    report.complete_up_to = dmax;

    std::vector<Monomial> all = basis_monomials(P, dmax);
    if (graded_table(P)) {
        for (int d = 0; d <= dmax; ++d) {
            std::vector<Monomial> slice;
            for (const auto& m : all)
                if (m.degree() == d) slice.push_back(m);
            for (auto& z : solve_block(P, slice)) report.basis.push_back(std::move(z));
        }
    } else {
        report.basis = solve_block(P, all);
    }

    std::sort(report.basis.begin(), report.basis.end(),
              [](const Polynomial& a, const Polynomial& b) {
                  int da = a.is_zero() ? -1 : a.total_degree();
                  int db = b.is_zero() ? -1 : b.total_degree();
                  if (da != db) return da < db;
                  return a.str() < b.str();
              });
    return report;
}

bool is_central(const PoissonStructure& P, const Polynomial& z) {
    if (!same_ring(z.ring(), P.ring())) throw Error("is_central: polynomial outside the ring");
    for (size_t i = 0; i < P.nvars(); ++i)
        if (!P.bracket(z, Polynomial::variable(P.ring(), i)).is_zero()) return false;
    return true;
}

}  // namespace poisson
