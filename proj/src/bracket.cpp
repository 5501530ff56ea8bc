#include "poisson/bracket.hpp"

#include <algorithm>

#include "poisson/derivation.hpp"

namespace poisson {

PoissonStructure::PoissonStructure(Ring ring, std::vector<Polynomial> upper_table,
                                   std::optional<GroebnerBasis> relations, bool jacobi_verified)
    : ring_(std::move(ring)),
      table_(std::move(upper_table)),
      relations_(std::move(relations)),
      jacobi_verified_(jacobi_verified) {
    const size_t n = ring_->size();
    if (table_.size() != n * (n - 1) / 2)
        throw Error("poisson structure: table must cover the strict upper triangle");
    for (const auto& entry : table_)
        if (!same_ring(entry.ring(), ring_))
            throw Error("poisson structure: table entry outside the ambient ring");
}

size_t PoissonStructure::slot(size_t i, size_t j) const {
    return i * nvars() - i * (i + 1) / 2 + (j - i - 1);
}

const Polynomial& PoissonStructure::table_entry(size_t i, size_t j) const {
    if (!(i < j && j < nvars())) throw Error("table_entry: need i < j < n");
    return table_[slot(i, j)];
}

Polynomial PoissonStructure::generator_bracket(size_t i, size_t j) const {
    if (i == j) return Polynomial::zero(ring_);
    return i < j ? table_entry(i, j) : -table_entry(j, i);
}

Polynomial PoissonStructure::reduce(const Polynomial& p) const {
    return relations_ ? normal_form(p, *relations_) : p;
}

Polynomial PoissonStructure::bracket(const Polynomial& f, const Polynomial& g) const {
    if (!same_ring(f.ring(), ring_) || !same_ring(g.ring(), ring_))
        throw Error("bracket: arguments outside the structure's ring");
    const size_t n = nvars();
    std::vector<Polynomial> df, dg;
    df.reserve(n);
    dg.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        df.push_back(f.partial(i));
        dg.push_back(g.partial(i));
    }
    Polynomial acc = Polynomial::zero(ring_);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const Polynomial& L = table_entry(i, j);
            if (L.is_zero()) continue;
            acc += L * (df[i] * dg[j] - df[j] * dg[i]);
        }
    }
    return reduce(acc);
}

std::optional<JacobiFailure> jacobi_check(const PoissonStructure& P) {
    const size_t n = P.nvars();
    std::vector<Polynomial> vars;
    for (size_t i = 0; i < n; ++i) vars.push_back(Polynomial::variable(P.ring(), i));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            for (size_t k = j + 1; k < n; ++k) {
                Polynomial J = P.bracket(vars[i], P.bracket(vars[j], vars[k]));
                J += P.bracket(vars[j], P.bracket(vars[k], vars[i]));
                J += P.bracket(vars[k], P.bracket(vars[i], vars[j]));
                J = P.reduce(J);
                if (!J.is_zero()) return JacobiFailure{i, j, k, J};
            }
        }
    }
    return std::nullopt;
}

PoissonStructure trivial_structure(Ring r) {
    const size_t n = r->size();
    std::vector<Polynomial> table(n * (n - 1) / 2, Polynomial::zero(r));
    return PoissonStructure(std::move(r), std::move(table), std::nullopt, true);
}

PoissonStructure from_table(Ring r,
                            const std::vector<std::tuple<size_t, size_t, Polynomial>>& entries) {
    const size_t n = r->size();
    std::vector<Polynomial> table(n * (n - 1) / 2, Polynomial::zero(r));
    std::vector<bool> set(table.size(), false);
    for (const auto& [i, j, p] : entries) {
        if (i >= n || j >= n || i == j) throw Error("from_table: bad generator pair");
        size_t a = std::min(i, j), b = std::max(i, j);
        size_t s = a * n - a * (a + 1) / 2 + (b - a - 1);
        if (set[s]) throw Error("from_table: duplicate bracket pair");
        set[s] = true;
        table[s] = (i < j) ? lift_to(p, r) : -lift_to(p, r);
    }
    PoissonStructure probe(r, table, std::nullopt, false);
    bool ok = !jacobi_check(probe).has_value();
    return PoissonStructure(std::move(r), std::move(table), std::nullopt, ok);
}

PoissonStructure from_potential(const Polynomial& f) {
    const Ring& r = f.ring();
    if (r->size() != 3) throw Error("from_potential: the ring must have exactly 3 variables");
    // {x,y} = f_z, {y,z} = f_x, {z,x} = f_y
    std::vector<std::tuple<size_t, size_t, Polynomial>> entries = {
        {0, 1, f.partial(2)}, {1, 2, f.partial(0)}, {2, 0, f.partial(1)}};
    PoissonStructure P = from_table(r, entries);
    if (!P.jacobi_verified()) {
        auto fail = jacobi_check(P);
        throw JacobiError(*fail, "from_potential: Jacobi identity failed unexpectedly");
    }
    return P;
}

PoissonStructure skew_quadratic(const SkewMatrix& lambda, Ring r) {
    const size_t n = lambda.dim();
    if (!r) {
        std::vector<std::string> names;
        for (size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        r = make_ring(std::move(names));
    }
    if (r->size() != n) throw Error("skew_quadratic: ring size must match the matrix dimension");
    std::vector<std::tuple<size_t, size_t, Polynomial>> entries;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            entries.emplace_back(
                i, j,
                lambda.upper(i, j) * (Polynomial::variable(r, i) * Polynomial::variable(r, j)));
    PoissonStructure P = from_table(r, entries);
    if (!P.jacobi_verified()) {
        auto fail = jacobi_check(P);
        throw JacobiError(*fail, "skew_quadratic: Jacobi identity failed unexpectedly");
    }
    return P;
}

PoissonStructure symplectic(size_t n) {
    if (n == 0) throw Error("symplectic: n must be positive");
    std::vector<std::string> names;
    if (n == 1) {
        names = {"x", "y"};
    } else {
        for (size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        for (size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    }
    Ring r = make_ring(std::move(names));
    std::vector<std::tuple<size_t, size_t, Polynomial>> entries;
    for (size_t i = 0; i < n; ++i)
        entries.emplace_back(i, n + i, Polynomial::constant(r, Rational(1)));
    return from_table(r, entries);
}

PoissonStructure linear_from_lie(
    Ring r, const std::vector<std::tuple<size_t, size_t, Polynomial>>& linear_entries) {
    for (const auto& [i, j, p] : linear_entries) {
        if (!p.is_zero() && (!p.is_homogeneous() || p.total_degree() != 1))
            throw Error("linear_from_lie: table entries must be homogeneous of degree one");
    }
    PoissonStructure P = from_table(std::move(r), linear_entries);
    if (!P.jacobi_verified()) {
        auto fail = jacobi_check(P);
        throw JacobiError(*fail, "linear_from_lie: structure constants violate the Jacobi identity");
    }
    return P;
}

PoissonStructure tensor(const PoissonStructure& A, const PoissonStructure& B) {
    const size_t na = A.nvars(), nb = B.nvars();
    std::vector<std::string> names = A.ring()->names();
    std::vector<std::string> b_names;
    for (size_t i = 0; i < nb; ++i) {
        std::string candidate = fresh_name(make_ring(names), B.ring()->name(i));
        names.push_back(candidate);
        b_names.push_back(candidate);
    }
    Ring joint = make_ring(names);

    // Lift a right-factor polynomial through the rename map.
    auto lift_b = [&](const Polynomial& p) {
        std::vector<Polynomial> images;
        for (size_t i = 0; i < nb; ++i) images.push_back(Polynomial::variable(joint, b_names[i]));
        return p.substitute(images);
    };

    std::vector<std::tuple<size_t, size_t, Polynomial>> entries;
    for (size_t i = 0; i < na; ++i)
        for (size_t j = i + 1; j < na; ++j)
            entries.emplace_back(i, j, lift_to(A.table_entry(i, j), joint));
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = i + 1; j < nb; ++j)
            entries.emplace_back(na + i, na + j, lift_b(B.table_entry(i, j)));

    std::vector<Polynomial> relation_gens;
    if (A.has_relations())
        for (const auto& g : A.relations().generators) relation_gens.push_back(lift_to(g, joint));
    if (B.has_relations())
        for (const auto& g : B.relations().generators) relation_gens.push_back(lift_b(g));

    PoissonStructure flat = from_table(joint, entries);
    if (relation_gens.empty()) return flat;
    return quotient(flat, make_poisson_ideal(flat, relation_gens));
}

PoissonStructure ore_extend(const PoissonStructure& P, const Derivation& alpha,
                            const Derivation& delta, const std::string& z_name) {
    if (auto w = poisson_derivation_witness(P, alpha))
        throw Error("ore_extend: alpha is not a Poisson derivation (witness pair x" +
                    std::to_string(w->i + 1) + ", x" + std::to_string(w->j + 1) + ")");
    // Poisson alpha-derivation law on generator pairs:
    // delta({a,b}) = {delta a, b} + {a, delta b} + alpha(a) delta(b) - delta(a) alpha(b)
    const size_t n = P.nvars();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            Polynomial xi = Polynomial::variable(P.ring(), i);
            Polynomial xj = Polynomial::variable(P.ring(), j);
            Polynomial lhs = apply(P, delta, P.generator_bracket(i, j));
            Polynomial rhs = P.bracket(apply(P, delta, xi), xj) +
                             P.bracket(xi, apply(P, delta, xj)) +
                             apply(P, alpha, xi) * apply(P, delta, xj) -
                             apply(P, delta, xi) * apply(P, alpha, xj);
            if (!(P.reduce(lhs - rhs)).is_zero())
                throw Error("ore_extend: delta fails the Poisson alpha-derivation law on (" +
                            P.ring()->name(i) + ", " + P.ring()->name(j) + ")");
        }
    }

    Ring ext = extend_ring(P.ring(), {z_name});
    const size_t zi = ext->size() - 1;
    std::vector<std::tuple<size_t, size_t, Polynomial>> entries;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) entries.emplace_back(i, j, lift_to(P.table_entry(i, j), ext));
    Polynomial z = Polynomial::variable(ext, zi);
    for (size_t i = 0; i < n; ++i) {
        Polynomial xi = Polynomial::variable(P.ring(), i);
        Polynomial entry = lift_to(apply(P, alpha, xi), ext) * z + lift_to(apply(P, delta, xi), ext);
        entries.emplace_back(zi, i, entry);  // {z, x_i}
    }

    std::vector<Polynomial> relation_gens;
    if (P.has_relations())
        for (const auto& g : P.relations().generators) relation_gens.push_back(lift_to(g, ext));

    PoissonStructure flat = from_table(ext, entries);
    PoissonStructure result = relation_gens.empty()
                                  ? flat
                                  : quotient(flat, make_poisson_ideal(flat, relation_gens));
    if (auto fail = jacobi_check(result))
        throw JacobiError(*fail, "ore_extend: extension violates the Jacobi identity");
    return result;
}

PoissonIdealCheck is_poisson_ideal(const PoissonStructure& P,
                                   const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> all = gens;
    if (P.has_relations())
        for (const auto& g : P.relations().generators) all.push_back(g);
    GroebnerBasis gb = buchberger(all);
    PoissonIdealCheck check;
    for (size_t k = 0; k < gens.size(); ++k) {
        for (size_t i = 0; i < P.nvars(); ++i) {
            Polynomial b = P.bracket(gens[k], Polynomial::variable(P.ring(), i));
            Polynomial residue = normal_form(b, gb);
            if (!residue.is_zero()) {
                check.ok = false;
                check.gen = k;
                check.var = i;
                check.residue = std::move(residue);
                return check;
            }
        }
    }
    check.ok = true;
    return check;
}

PoissonIdeal make_poisson_ideal(const PoissonStructure& P, std::vector<Polynomial> gens) {
    auto check = is_poisson_ideal(P, gens);
    if (!check.ok)
        throw Error("poisson ideal: {" + gens[check.gen].str() + ", " +
                    P.ring()->name(check.var) + "} has nonzero residue " + check.residue->str());
    PoissonIdeal ideal;
    ideal.gb = [&] {
        std::vector<Polynomial> all = gens;
        if (P.has_relations())
            for (const auto& g : P.relations().generators) all.push_back(g);
        return buchberger(all);
    }();
    if (!ideal.gb.ring) ideal.gb.ring = P.ring();  // zero ideal from no generators
    ideal.generators = std::move(gens);
    return ideal;
}

PoissonStructure quotient(const PoissonStructure& P, const PoissonIdeal& I) {
    const size_t n = P.nvars();
    std::vector<Polynomial> table;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            table.push_back(normal_form(P.table_entry(i, j), I.gb));
    PoissonStructure probe(P.ring(), table, I.gb, false);
    bool ok = !jacobi_check(probe).has_value();
    return PoissonStructure(P.ring(), std::move(table), I.gb, ok);
}

GroebnerBasis poisson_points(const PoissonStructure& P) {
    std::vector<Polynomial> gens;
    for (size_t i = 0; i < P.nvars(); ++i)
        for (size_t j = i + 1; j < P.nvars(); ++j)
            if (!P.table_entry(i, j).is_zero()) gens.push_back(P.table_entry(i, j));
    if (P.has_relations())
        for (const auto& g : P.relations().generators) gens.push_back(g);
    if (gens.empty()) {
        GroebnerBasis gb;
        gb.ring = P.ring();
        return gb;  // trivial bracket, no relations: the zero ideal
    }
    return buchberger(gens);
}

}  // namespace poisson
