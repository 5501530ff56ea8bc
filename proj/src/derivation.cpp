#include "poisson/derivation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "poisson/linalg.hpp"

namespace poisson {

Derivation Derivation::zero(Ring r) {
    std::vector<Polynomial> images(r->size(), Polynomial::zero(r));
    return Derivation{std::move(r), std::move(images)};
}

Derivation Derivation::partial(Ring r, size_t i) {
    Derivation d = zero(r);
    d.images.at(i) = Polynomial::constant(r, Rational(1));
    return d;
}

Derivation Derivation::make(Ring r, std::vector<Polynomial> images) {
    if (images.size() != r->size())
        throw Error("derivation: need exactly one image per ring variable");
    for (const auto& img : images)
        if (!same_ring(img.ring(), r)) throw Error("derivation: image outside the ring");
    return Derivation{std::move(r), std::move(images)};
}

bool Derivation::is_zero() const {
    return std::all_of(images.begin(), images.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

std::string Derivation::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < images.size(); ++i) {
        if (i) os << ", ";
        os << ring->name(i) << " -> " << images[i].str();
    }
    return os.str();
}

Polynomial apply(const Derivation& d, const Polynomial& p) {
    if (!same_ring(d.ring, p.ring())) throw Error("apply: polynomial outside the derivation's ring");
    Polynomial acc = Polynomial::zero(d.ring);
    for (size_t i = 0; i < d.images.size(); ++i) {
        if (d.images[i].is_zero()) continue;
        acc += d.images[i] * p.partial(i);
    }
    return acc;
}

Polynomial apply(const PoissonStructure& P, const Derivation& d, const Polynomial& p) {
    return P.reduce(apply(d, p));
}

std::optional<DerivationLawWitness> poisson_derivation_witness(const PoissonStructure& P,
                                                               const Derivation& d) {
    if (!same_ring(P.ring(), d.ring)) throw Error("poisson_derivation_witness: ring mismatch");
    if (P.has_relations()) {
        for (const auto& r : P.relations().generators) {
            if (!P.reduce(apply(d, r)).is_zero())
                throw Error("derivation does not preserve the relation ideal (moves " + r.str() +
                            ")");
        }
    }
    const size_t n = P.nvars();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            Polynomial xi = Polynomial::variable(P.ring(), i);
            Polynomial xj = Polynomial::variable(P.ring(), j);
            Polynomial lhs = apply(P, d, P.generator_bracket(i, j));
            Polynomial rhs =
                P.bracket(apply(P, d, xi), xj) + P.bracket(xi, apply(P, d, xj));
            rhs = P.reduce(rhs);
            if (!(lhs == rhs)) return DerivationLawWitness{i, j, lhs, rhs};
        }
    }
    return std::nullopt;
}

bool is_poisson_derivation(const PoissonStructure& P, const Derivation& d) {
    return !poisson_derivation_witness(P, d).has_value();
}

namespace {

// p == c * q for some nonzero scalar c? Returns c.
std::optional<Rational> proportional_to(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return std::nullopt;
    if (p.terms().size() != q.terms().size()) return std::nullopt;
    const auto& [m0, c0] = *q.terms().begin();
    Rational pc = p.coefficient(m0);
    if (pc == 0) return std::nullopt;
    Rational ratio = pc / c0;
    for (const auto& [m, c] : q.terms()) {
        if (!(p.coefficient(m) == ratio * c)) return std::nullopt;
    }
    return ratio;
}

NilpotencyStatus lnd_status_impl(const PoissonStructure* P, const Derivation& d, int bound) {
    if (bound < 1) throw Error("lnd_status: bound must be >= 1");
    auto reduce = [&](const Polynomial& p) { return P ? P->reduce(p) : p; };
    if (P && P->has_relations()) {
        for (const auto& r : P->relations().generators)
            if (!P->reduce(apply(d, r)).is_zero())
                throw Error("lnd_status: derivation does not preserve the relation ideal");
    }
    NilpotencyStatus status;
    int max_order = 0;
    bool all_certified = true;
    for (size_t v = 0; v < d.ring->size(); ++v) {
        std::vector<Polynomial> iterates{reduce(Polynomial::variable(d.ring, v))};
        bool settled = false;
        for (int k = 1; k <= bound && !settled; ++k) {
            Polynomial next = reduce(apply(d, iterates.back()));
            if (next.is_zero()) {
                max_order = std::max(max_order, k);
                settled = true;
                break;
            }
            for (int j = 0; j < static_cast<int>(iterates.size()); ++j) {
                if (auto c = proportional_to(next, iterates[j])) {
                    status.kind = NilpotencyKind::NotNilpotentCertified;
                    status.witness_var = v;
                    status.cycle_from = j;
                    status.cycle_to = k;
                    status.cycle_scalar = *c;
                    return status;
                }
            }
            iterates.push_back(std::move(next));
        }
        if (!settled) all_certified = false;
    }
    if (all_certified) {
        status.kind = NilpotencyKind::NilpotentCertified;
        status.order = max_order;
    } else {
        status.kind = NilpotencyKind::Unknown;
    }
    return status;
}

}  // namespace

NilpotencyStatus lnd_status(const PoissonStructure& P, const Derivation& d, int bound) {
    return lnd_status_impl(&P, d, bound);
}

NilpotencyStatus lnd_status(const Derivation& d, int bound) {
    return lnd_status_impl(nullptr, d, bound);
}

Polynomial HigherDerivation::image(size_t var, int n) const {
    if (n < 1) throw Error("higher derivation: image() expects n >= 1");
    const auto& column = images.at(var);
    if (static_cast<size_t>(n - 1) < column.size()) return column[n - 1];
    return Polynomial::zero(ring);
}

int HigherDerivation::max_index() const {
    size_t m = 0;
    for (const auto& column : images) m = std::max(m, column.size());
    return static_cast<int>(m);
}

std::string HigherDerivation::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t v = 0; v < images.size(); ++v) {
        for (size_t k = 0; k < images[v].size(); ++k) {
            if (images[v][k].is_zero()) continue;
            if (!first) os << ", ";
            os << "d" << (k + 1) << "(" << ring->name(v) << ") -> " << images[v][k].str();
            first = false;
        }
    }
    if (first) os << "0";
    return os.str();
}

namespace {

struct HigherApply {
    const HigherDerivation& hd;
    std::map<std::pair<Monomial, int>, Polynomial> memo;

    Polynomial on_monomial(const Monomial& m, int n) {
        if (n == 0) return Polynomial::term(hd.ring, m, Rational(1));
        if (m.is_one()) return Polynomial::zero(hd.ring);
        auto key = std::make_pair(m, n);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        size_t v = 0;
        while (m[v] == 0) ++v;
        Monomial rest = m;
        rest.exponents[v] -= 1;

        Polynomial acc = Polynomial::zero(hd.ring);
        // d_n(x_v * rest) = sum_{a+b=n} d_a(x_v) d_b(rest)
        Polynomial tail = on_monomial(rest, n);
        acc += Polynomial::variable(hd.ring, v) * tail;
        for (int a = 1; a <= n; ++a) {
            Polynomial head = hd.image(v, a);
            if (head.is_zero()) continue;
            acc += head * on_monomial(rest, n - a);
        }
        memo.emplace(std::move(key), acc);
        return acc;
    }
};

}  // namespace

Polynomial apply(const HigherDerivation& hd, int n, const Polynomial& p) {
    if (!same_ring(hd.ring, p.ring()))
        throw Error("apply: polynomial outside the higher derivation's ring");
    if (n < 0) throw Error("apply: negative index");
    if (n == 0) return p;
    HigherApply engine{hd, {}};
    Polynomial acc = Polynomial::zero(hd.ring);
    for (const auto& [m, c] : p.terms()) acc += c * engine.on_monomial(m, n);
    return acc;
}

Polynomial apply(const PoissonStructure& P, const HigherDerivation& hd, int n,
                 const Polynomial& p) {
    return P.reduce(apply(hd, n, p));
}

HigherDerivation higher_from_iterative(const PoissonStructure& P, const Derivation& d,
                                       int bound) {
    NilpotencyStatus status = lnd_status(P, d, bound);
    if (status.kind != NilpotencyKind::NilpotentCertified)
        throw Error("higher_from_iterative: derivation is not certified locally nilpotent");
    HigherDerivation hd;
    hd.ring = d.ring;
    hd.iterative = true;
    hd.images.resize(d.ring->size());
    for (size_t v = 0; v < d.ring->size(); ++v) {
        Polynomial it = P.reduce(d.images[v]);
        Integer fact = 1;
        int k = 1;
        while (!it.is_zero()) {
            hd.images[v].push_back(Rational(Rational(1) / Rational(fact)) * it);
            ++k;
            fact *= k;
            it = P.reduce(apply(d, it));
        }
    }
    return hd;
}

std::optional<HigherLawWitness> higher_poisson_witness(const PoissonStructure& P,
                                                       const HigherDerivation& hd, int nmax) {
    const size_t n = P.nvars();
    std::vector<Polynomial> vars;
    for (size_t i = 0; i < n; ++i) vars.push_back(Polynomial::variable(P.ring(), i));
    for (int level = 0; level <= nmax; ++level) {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                Polynomial lhs = apply(P, hd, level, P.generator_bracket(i, j));
                Polynomial rhs = Polynomial::zero(P.ring());
                for (int a = 0; a <= level; ++a)
                    rhs += P.bracket(apply(P, hd, a, vars[i]), apply(P, hd, level - a, vars[j]));
                rhs = P.reduce(rhs);
                if (!(lhs == rhs)) return HigherLawWitness{level, i, j, lhs, rhs};
            }
        }
    }
    return std::nullopt;
}

bool is_higher_poisson(const PoissonStructure& P, const HigherDerivation& hd, int nmax) {
    return !higher_poisson_witness(P, hd, nmax).has_value();
}

HigherDerivation dt_higher_derivation(const PoissonStructure& P, size_t t_index) {
    if (t_index >= P.nvars()) throw Error("dt_higher_derivation: variable index out of range");
    Polynomial t = Polynomial::variable(P.ring(), t_index);
    for (size_t j = 0; j < P.nvars(); ++j) {
        if (j == t_index) continue;
        if (!P.bracket(t, Polynomial::variable(P.ring(), j)).is_zero())
            throw Error("dt_higher_derivation: " + P.ring()->name(t_index) +
                        " is not Poisson-central");
    }
    HigherDerivation hd;
    hd.ring = P.ring();
    hd.iterative = true;
    hd.images.resize(P.nvars());
    hd.images[t_index].push_back(Polynomial::constant(P.ring(), Rational(1)));
    return hd;
}

std::string RingMap::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < images.size(); ++i) {
        if (i) os << ", ";
        os << source->name(i) << " -> " << images[i].str();
    }
    return os.str();
}

Polynomial apply(const RingMap& f, const Polynomial& p) {
    if (!same_ring(f.source, p.ring())) throw Error("ring map: argument outside the source ring");
    return p.substitute(f.images);
}

RingMap compose(const RingMap& second, const RingMap& first) {
    if (!same_ring(first.target, second.source))
        throw Error("compose: inner target differs from outer source");
    RingMap out;
    out.source = first.source;
    out.target = second.target;
    for (const auto& img : first.images) out.images.push_back(apply(second, img));
    return out;
}

RingMap identity_map(Ring r) {
    RingMap f;
    f.source = f.target = r;
    for (size_t i = 0; i < r->size(); ++i) f.images.push_back(Polynomial::variable(r, i));
    return f;
}

RingMap automorphism_specialize(const HigherDerivation& hd, const Rational& c) {
    if (!hd.iterative) throw Error("automorphism: higher derivation must be iterative");
    RingMap f;
    f.source = f.target = hd.ring;
    for (size_t v = 0; v < hd.ring->size(); ++v) {
        Polynomial img = Polynomial::variable(hd.ring, v);
        Rational ck(1);
        for (int k = 1; k <= static_cast<int>(hd.images[v].size()); ++k) {
            ck *= c;
            if (ck == 0) break;
            img += ck * hd.image(v, k);
        }
        f.images.push_back(std::move(img));
    }
    return f;
}

RingMap automorphism_formal(const HigherDerivation& hd, const std::string& t_name,
                            bool negative_parameter) {
    if (!hd.iterative) throw Error("automorphism: higher derivation must be iterative");
    Ring ext = extend_ring(hd.ring, {t_name});
    const size_t ti = ext->size() - 1;
    RingMap f;
    f.source = f.target = ext;
    Polynomial t = Polynomial::variable(ext, ti);
    if (negative_parameter) t = -t;
    for (size_t v = 0; v < hd.ring->size(); ++v) {
        Polynomial img = Polynomial::variable(ext, v);
        Polynomial tk = Polynomial::constant(ext, Rational(1));
        for (int k = 1; k <= static_cast<int>(hd.images[v].size()); ++k) {
            tk = tk * t;
            img += lift_to(hd.image(v, k), ext) * tk;
        }
        f.images.push_back(std::move(img));
    }
    f.images.push_back(Polynomial::variable(ext, ti));  // t -> t
    return f;
}

std::optional<MapWitness> poisson_map_witness(const PoissonStructure& P,
                                              const PoissonStructure& Q, const RingMap& phi) {
    if (!same_ring(phi.source, P.ring()) || !same_ring(phi.target, Q.ring()))
        throw Error("poisson_map_witness: map endpoints do not match the structures");
    if (P.has_relations()) {
        for (const auto& r : P.relations().generators) {
            if (!Q.reduce(apply(phi, r)).is_zero())
                throw Error("map is ill-defined on the relation " + r.str());
        }
    }
    const size_t n = P.nvars();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            Polynomial lhs = Q.reduce(apply(phi, P.generator_bracket(i, j)));
            Polynomial rhs = Q.bracket(phi.images[i], phi.images[j]);
            if (!(lhs == rhs)) return MapWitness{i, j, lhs, rhs};
        }
    }
    return std::nullopt;
}

bool is_poisson_map(const PoissonStructure& P, const PoissonStructure& Q, const RingMap& phi) {
    return !poisson_map_witness(P, Q, phi).has_value();
}

namespace {

std::vector<Monomial> image_monomials(const PoissonStructure& P, int degree_bound) {
    GroebnerBasis rel;
    if (P.has_relations())
        rel = P.relations();
    else
        rel.ring = P.ring();
    return standard_monomials_up_to(rel, degree_bound);
}

// Scale to integer coefficients with content 1 and a positive first entry.
Derivation normalize_derivation(const Derivation& d) {
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& img : d.images) {
        for (const auto& [m, c] : img.terms()) {
            num_gcd = gcd(num_gcd, c.get_num());
            den_lcm = lcm(den_lcm, c.get_den());
        }
    }
    if (num_gcd == 0) return d;
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (const auto& img : d.images) {
        if (!img.is_zero()) {
            if (img.terms().begin()->second < 0) scale = -scale;
            break;
        }
    }
    Derivation out = d;
    for (auto& img : out.images) img = scale * img;
    return out;
}

}  // namespace

LndSearchResult find_poisson_lnds(const PoissonStructure& P, int image_degree_bound,
                                  int nilpotency_bound, int combination_breadth) {
    if (image_degree_bound < 0 || nilpotency_bound < 1)
        throw Error("find_poisson_lnds: bounds must be positive");
    const size_t n = P.nvars();
    std::vector<Monomial> mons = image_monomials(P, image_degree_bound);
    const size_t ncols = n * mons.size();
    auto column = [&](size_t var, size_t mi) { return var * mons.size() + mi; };

    std::vector<Polynomial> vars;
    for (size_t i = 0; i < n; ++i) vars.push_back(Polynomial::variable(P.ring(), i));

    // Row space: one block per generator pair (plus relation constraints),
    // one row per monomial appearing in that block's condition polynomial.
    std::map<std::pair<size_t, Monomial>, size_t> row_of;
    std::vector<std::map<size_t, Rational>> sparse_cols(ncols);

    auto add_poly = [&](size_t block, size_t col, const Polynomial& contribution) {
        for (const auto& [m, c] : contribution.terms()) {
            auto key = std::make_pair(block, m);
            auto it = row_of.find(key);
            if (it == row_of.end()) it = row_of.emplace(key, row_of.size()).first;
            sparse_cols[col][it->second] += c;
        }
    };

    size_t block = 0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j, ++block) {
            const Polynomial bij = P.generator_bracket(i, j);
            for (size_t k = 0; k < n; ++k) {
                Polynomial dk = bij.partial(k);
                for (size_t mi = 0; mi < mons.size(); ++mi) {
                    Polynomial mono = Polynomial::term(P.ring(), mons[mi], Rational(1));
                    Polynomial contrib = P.reduce(mono * dk);
                    if (k == i) contrib -= P.bracket(mono, vars[j]);
                    if (k == j) contrib -= P.bracket(vars[i], mono);
                    contrib = P.reduce(contrib);
                    if (!contrib.is_zero()) add_poly(block, column(k, mi), contrib);
                }
            }
        }
    }
    if (P.has_relations()) {
        for (const auto& r : P.relations().generators) {
            for (size_t k = 0; k < n; ++k) {
                Polynomial dk = r.partial(k);
                for (size_t mi = 0; mi < mons.size(); ++mi) {
                    Polynomial mono = Polynomial::term(P.ring(), mons[mi], Rational(1));
                    Polynomial contrib = P.reduce(mono * dk);
                    if (!contrib.is_zero()) add_poly(block, column(k, mi), contrib);
                }
            }
            ++block;
        }
    }

    Matrix m(row_of.size(), Vector(ncols, Rational(0)));
    for (size_t c = 0; c < ncols; ++c)
        for (const auto& [r, v] : sparse_cols[c]) m[r][c] = v;

    std::vector<Vector> basis = null_space(m, ncols);

    LndSearchResult result;
    result.pder_dimension = basis.size();

    auto to_derivation = [&](const Vector& v) {
        std::vector<Polynomial> images;
        for (size_t k = 0; k < n; ++k) {
            Polynomial img = Polynomial::zero(P.ring());
            for (size_t mi = 0; mi < mons.size(); ++mi) {
                const Rational& c = v[column(k, mi)];
                if (c != 0) img += Polynomial::term(P.ring(), mons[mi], c);
            }
            images.push_back(P.reduce(img));
        }
        return normalize_derivation(Derivation::make(P.ring(), std::move(images)));
    };

    std::set<std::string> seen;
    auto consider = [&](const Derivation& d) {
        if (d.is_zero()) return;
        std::string key = d.str();
        if (!seen.insert(key).second) return;
        ++result.candidates_tested;
        if (lnd_status(P, d, nilpotency_bound).kind == NilpotencyKind::NilpotentCertified)
            result.certified.push_back(d);
    };

    for (const auto& v : basis) consider(to_derivation(v));

    // Bounded +/- combinations; nilpotent derivations are not a subspace, so
    // basis filtering alone can miss members. Heuristic by design.
    if (combination_breadth >= 2 && basis.size() >= 2) {
        size_t budget = 2000;
        for (size_t a = 0; a < basis.size() && budget; ++a) {
            for (size_t b = a + 1; b < basis.size() && budget; ++b) {
                for (int sign = 0; sign < 2 && budget; ++sign, --budget) {
                    Vector v(ncols, Rational(0));
                    for (size_t c = 0; c < ncols; ++c)
                        v[c] = basis[a][c] + (sign ? -basis[b][c] : basis[b][c]);
                    consider(to_derivation(v));
                }
            }
        }
    }
    return result;
}

namespace {

void require_certified(const PoissonStructure& P, const FamilyMember& member,
                       int nilpotency_bound) {
    if (std::holds_alternative<Derivation>(member)) {
        const auto& d = std::get<Derivation>(member);
        if (poisson_derivation_witness(P, d))
            throw Error("ml_kernel: family member is not a Poisson derivation");
        if (lnd_status(P, d, nilpotency_bound).kind != NilpotencyKind::NilpotentCertified)
            throw Error("ml_kernel: family member is not certified locally nilpotent");
    } else {
        const auto& hd = std::get<HigherDerivation>(member);
        if (!hd.iterative)
            throw Error("ml_kernel: higher family members must be iterative");
        int nmax = std::max(4, 2 * hd.max_index());
        if (higher_poisson_witness(P, hd, nmax))
            throw Error("ml_kernel: family member is not a higher Poisson derivation");
    }
}

bool annihilates(const PoissonStructure& P, const FamilyMember& member, const Polynomial& d) {
    if (std::holds_alternative<Derivation>(member))
        return apply(P, std::get<Derivation>(member), d).is_zero();
    const auto& hd = std::get<HigherDerivation>(member);
    int bound = hd.max_index() * std::max(1, d.is_zero() ? 1 : d.total_degree()) + 1;
    for (int k = 1; k <= bound; ++k)
        if (!apply(P, hd, k, d).is_zero()) return false;
    return true;
}

}  // namespace

MLReport ml_kernel(const PoissonStructure& P, const std::vector<FamilyMember>& family, int dmax,
                   const std::optional<Polynomial>& relative_d, int nilpotency_bound) {
    if (dmax < 0) throw Error("ml_kernel: dmax must be >= 0");
    MLReport report;
    report.dmax = dmax;

    std::optional<Polynomial> rel_d;
    if (relative_d) {
        rel_d = P.reduce(*relative_d);
        if (rel_d->is_zero()) throw Error("ml_kernel: relative element is zero");
        for (size_t i = 0; i < P.nvars(); ++i)
            if (!P.bracket(*rel_d, Polynomial::variable(P.ring(), i)).is_zero())
                throw Error("ml_kernel: relative element is not Poisson-central");
    }

    for (const auto& member : family) {
        require_certified(P, member, nilpotency_bound);
        if (rel_d && !annihilates(P, member, *rel_d)) {
            report.notices.push_back("dropped a family member that moves the relative element");
            continue;
        }
        report.family.push_back(member);
    }

    std::vector<Monomial> mons = image_monomials(P, dmax);
    std::map<std::pair<size_t, Monomial>, size_t> row_of;
    std::vector<std::map<size_t, Rational>> sparse_cols(mons.size());
    auto add_poly = [&](size_t block, size_t col, const Polynomial& value) {
        for (const auto& [m, c] : value.terms()) {
            auto key = std::make_pair(block, m);
            auto it = row_of.find(key);
            if (it == row_of.end()) it = row_of.emplace(key, row_of.size()).first;
            sparse_cols[col][it->second] += c;
        }
    };

    size_t block = 0;
    for (const auto& member : report.family) {
        if (std::holds_alternative<Derivation>(member)) {
            const auto& d = std::get<Derivation>(member);
            for (size_t mi = 0; mi < mons.size(); ++mi) {
                Polynomial mono = Polynomial::term(P.ring(), mons[mi], Rational(1));
                add_poly(block, mi, apply(P, d, mono));
            }
            ++block;
        } else {
            const auto& hd = std::get<HigherDerivation>(member);
            int bound = hd.max_index() * std::max(1, dmax);
            for (int k = 1; k <= bound; ++k, ++block) {
                for (size_t mi = 0; mi < mons.size(); ++mi) {
                    Polynomial mono = Polynomial::term(P.ring(), mons[mi], Rational(1));
                    add_poly(block, mi, apply(P, hd, k, mono));
                }
            }
        }
    }

    Matrix m(row_of.size(), Vector(mons.size(), Rational(0)));
    for (size_t c = 0; c < mons.size(); ++c)
        for (const auto& [r, v] : sparse_cols[c]) m[r][c] = v;

    for (const auto& v : null_space(m, mons.size())) {
        Polynomial p = Polynomial::zero(P.ring());
        for (size_t mi = 0; mi < mons.size(); ++mi)
            if (v[mi] != 0) p += Polynomial::term(P.ring(), mons[mi], v[mi]);
        report.kernel_basis.push_back(p);
    }
    std::sort(report.kernel_basis.begin(), report.kernel_basis.end(),
              [](const Polynomial& a, const Polynomial& b) {
                  int da = a.is_zero() ? -1 : a.total_degree();
                  int db = b.is_zero() ? -1 : b.total_degree();
                  if (da != db) return da < db;
                  return a.str() < b.str();
              });
    return report;
}

}  // namespace poisson
