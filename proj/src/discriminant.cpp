#include "poisson/discriminant.hpp"

#include <algorithm>

#include "poisson/center.hpp"

namespace poisson {

namespace {

// Index of the single variable occurring in p; nullopt for constants.
std::optional<size_t> active_variable(const Polynomial& p) {
    std::optional<size_t> var;
    for (const auto& [m, c] : p.terms()) {
        for (size_t i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (var && *var != i) throw Error("expected a univariate polynomial: " + p.str());
            var = i;
        }
    }
    return var;
}

// Remainder of univariate division.
Polynomial uni_rem(Polynomial a, const Polynomial& b, size_t var) {
    if (b.is_zero()) throw Error("univariate division by zero");
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
    const int db = deg_in(b);
    const Rational lb = coeff_at(b, db);
    while (!a.is_zero()) {
        int da = deg_in(a);
        if (da < db) break;
        Rational factor = coeff_at(a, da) / lb;
        Monomial shift = Monomial::var(a.nvars(), var, da - db);
        a -= Polynomial::term(a.ring(), shift, factor) * b;
    }
    return a;
}

Polynomial uni_gcd(Polynomial a, Polynomial b, size_t var) {
    while (!b.is_zero()) {
        Polynomial r = uni_rem(a, b, var);
        a = b;
        b = r;
    }
    return a;
}

Polynomial make_monic_univariate(const Polynomial& p, size_t var) {
    int d = -1;
    Rational lead;
    for (const auto& [m, c] : p.terms()) {
        if (m[var] > d) {
            d = m[var];
            lead = c;
        }
    }
    if (d < 0) return p;  // constant
    return Rational(1 / lead) * p;
}

}  // namespace

Polynomial squarefree_part_univariate(const Polynomial& p) {
    if (p.is_zero()) throw Error("squarefree_part: zero polynomial");
    auto var = active_variable(p);
    if (!var) return Polynomial::constant(p.ring(), Rational(1));
    Polynomial g = uni_gcd(p, p.partial(*var), *var);
    if (g.is_constant()) return make_monic_univariate(p, *var);
    // p / gcd(p, p'): exact division via remainderless quotient.
    Polynomial q = Polynomial::zero(p.ring());
    Polynomial rem = p;
    auto deg_in = [&](const Polynomial& f) {
        int d = -1;
        for (const auto& [m, c] : f.terms()) d = std::max(d, m[(*var)]);
        return d;
    };
    auto coeff_at = [&](const Polynomial& f, int d) {
        for (const auto& [m, c] : f.terms())
            if (m[(*var)] == d) return c;
        return Rational(0);
    };
    const int dg = deg_in(g);
    const Rational lg = coeff_at(g, dg);
    while (!rem.is_zero() && deg_in(rem) >= dg) {
        int dr = deg_in(rem);
        Rational factor = coeff_at(rem, dr) / lg;
        Polynomial t = Polynomial::term(p.ring(), Monomial::var(p.nvars(), *var, dr - dg), factor);
        q += t;
        rem -= t * g;
    }
    if (!rem.is_zero()) throw Error("squarefree_part: non-exact division (unexpected)");
    return make_monic_univariate(q, *var);
}

DiscriminantReport discriminant_poisson_points(const PoissonStructure& P, const Polynomial& g) {
    if (!is_central(P, g))
        throw Error("discriminant: the designated element is not Poisson-central: " + g.str());

    const std::string w_name = fresh_name(P.ring(), "w");
    Ring ext = extend_ring(P.ring(), {w_name});
    const size_t wi = ext->size() - 1;

    std::vector<Polynomial> gens;
    for (size_t i = 0; i < P.nvars(); ++i)
        for (size_t j = i + 1; j < P.nvars(); ++j)
            if (!P.table_entry(i, j).is_zero()) gens.push_back(lift_to(P.table_entry(i, j), ext));
    if (P.has_relations())
        for (const auto& r : P.relations().generators) gens.push_back(lift_to(r, ext));
    gens.push_back(Polynomial::variable(ext, wi) - lift_to(g, ext));

    std::vector<Polynomial> elim = eliminate(gens, {w_name});
    if (elim.empty())
        throw Error(
            "discriminant: the critical-value set has positive dimension "
            "(zero elimination ideal); no discriminant element exists");

    // The elimination ideal of a univariate slice is principal; a reduced
    // basis has exactly one generator.
    Polynomial p0 = elim.front();
    Ring wring = make_ring({w_name});
    Polynomial p_w = Polynomial::zero(wring);
    for (const auto& [m, c] : p0.terms()) {
        p_w += Polynomial::term(wring, Monomial::var(1, 0, m[wi]), c);
    }

    Polynomial critical = Polynomial::constant(wring, Rational(1));
    Polynomial d = Polynomial::constant(P.ring(), Rational(1));
    if (!p_w.is_constant()) {
        critical = squarefree_part_univariate(p_w);
        d = P.reduce(critical.substitute({g}));
    }

    GroebnerBasis points = poisson_points(P);
    std::string note;
    if (points.is_unit_ideal())
        note = "empty poisson-point set";
    else if (is_zero_dimensional(points))
        note = "finite poisson-point set";
    else
        note = "positive-dimensional poisson-point set";
    return DiscriminantReport{g, std::move(critical), std::move(d), std::move(note)};
}

SingularLocusReport singular_locus(const Polynomial& f) {
    if (f.ring()->size() != 3) throw Error("singular_locus: the ring must have 3 variables");
    std::vector<Polynomial> partials;
    for (size_t i = 0; i < 3; ++i)
        if (!f.partial(i).is_zero()) partials.push_back(f.partial(i));
    SingularLocusReport report;
    if (partials.empty()) {
        report.jacobian_ideal.ring = f.ring();
        report.isolated = false;
        return report;
    }
    report.jacobian_ideal = buchberger(partials);
    report.isolated = is_zero_dimensional(report.jacobian_ideal);
    if (report.isolated) report.milnor_dimension = quotient_dimension(report.jacobian_ideal);
    return report;
}

Effectiveness effectiveness_certificate(const Polynomial& d, RingKind kind) {
    if (d.is_zero()) throw Error("effectiveness_certificate: zero element");
    if (kind == RingKind::Univariate) {
        if (d.ring()->size() != 1)
            throw Error("effectiveness_certificate: univariate rule needs a one-variable ring");
        return Effectiveness::EffectiveCertified;
    }
    // Component-wise dominance: the exponent-wise max over the support must
    // itself be a term of d, with every exponent positive.
    const size_t n = d.nvars();
    Monomial top = Monomial::one(n);
    for (const auto& [m, c] : d.terms())
        for (size_t i = 0; i < n; ++i)
            top.exponents[i] = std::max(top.exponents[i], m[i]);
    if (d.coefficient(top) == 0) return Effectiveness::Unknown;
    for (size_t i = 0; i < n; ++i)
        if (top[i] == 0) return Effectiveness::Unknown;
    return Effectiveness::EffectiveCertified;
}

}  // namespace poisson
