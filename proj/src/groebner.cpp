#include "poisson/groebner.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace poisson {

namespace {

// One full division step sweep: remainder of p modulo the current basis.
Polynomial reduce_by(const Polynomial& p, const std::vector<Polynomial>& basis,
                     const std::vector<Monomial>& leads, const MonomialOrder& ord) {
    Polynomial remainder = Polynomial::zero(p.ring());
    Polynomial work = p;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial(ord);
        const Rational lc = work.leading_coefficient(ord);
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (leads[i].divides(lm)) {
                Monomial q = lm.divided_by(leads[i]);
                Rational factor = lc / basis[i].leading_coefficient(ord);
                work -= Polynomial::term(work.ring(), q, factor) * basis[i];
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            Polynomial t = Polynomial::term(work.ring(), lm, lc);
            remainder += t;
            work -= t;
        }
    }
    return remainder;
}

struct Pair {
    size_t i, j;
    Monomial lcm;
    int degree;
};

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> gens, MonomialOrder order) {
    GroebnerBasis gb;
    gb.order = order;

    std::vector<Polynomial> basis;
    for (auto& g : gens) {
        if (!g.is_zero()) {
            if (basis.empty())
                gb.ring = g.ring();
            else
                check_same_ring(g, basis.front(), "buchberger");
            basis.push_back(g.monic(order));
        } else if (!gb.ring) {
            gb.ring = g.ring();
        }
    }
    if (basis.empty()) return gb;  // zero ideal

    std::vector<Monomial> leads;
    for (const auto& g : basis) leads.push_back(g.leading_monomial(order));

    auto make_pair = [&](size_t i, size_t j) {
        Pair p{i, j, Monomial::lcm(leads[i], leads[j]), 0};
        p.degree = p.lcm.degree();
        return p;
    };

    std::vector<Pair> queue;
    std::set<std::pair<size_t, size_t>> handled;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) queue.push_back(make_pair(i, j));

    while (!queue.empty()) {
        // Normal selection: smallest lcm under the order; ties by index.
        size_t best = 0;
        for (size_t k = 1; k < queue.size(); ++k) {
            auto cmp = order.compare(queue[k].lcm, queue[best].lcm);
            if (cmp == std::strong_ordering::less ||
                (cmp == std::strong_ordering::equal &&
                 std::tie(queue[k].i, queue[k].j) < std::tie(queue[best].i, queue[best].j)))
                best = k;
        }
        Pair pr = queue[best];
        queue.erase(queue.begin() + best);
        handled.insert({pr.i, pr.j});

        // First Buchberger criterion: coprime leading terms.
        if (leads[pr.i].coprime_to(leads[pr.j])) continue;

        // Chain criterion: some k divides the lcm and both side pairs are
        // already handled.
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j || !leads[k].divides(pr.lcm)) continue;
            auto key_ik = std::minmax(pr.i, k);
            auto key_jk = std::minmax(pr.j, k);
            if (handled.count({key_ik.first, key_ik.second}) &&
                handled.count({key_jk.first, key_jk.second}))
                chained = true;
        }
        if (chained) continue;

        const Polynomial& f = basis[pr.i];
        const Polynomial& g = basis[pr.j];
        Polynomial spoly =
            Polynomial::term(gb.ring, pr.lcm.divided_by(leads[pr.i]), Rational(1)) * f -
            Polynomial::term(gb.ring, pr.lcm.divided_by(leads[pr.j]), Rational(1)) * g;
        Polynomial r = reduce_by(spoly, basis, leads, order);
        if (r.is_zero()) continue;

        basis.push_back(r.monic(order));
        leads.push_back(basis.back().leading_monomial(order));
        size_t n = basis.size() - 1;
        for (size_t i = 0; i < n; ++i) queue.push_back(make_pair(i, n));
    }

    // Interreduce to the unique reduced basis: drop generators whose lead is
    // divisible by another lead, then take tails to normal form.
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (leads[j].divides(leads[i]) &&
                (leads[i] != leads[j] || j < i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Monomial> min_leads;
    for (const auto& g : minimal) min_leads.push_back(g.leading_monomial(order));
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        std::vector<Monomial> other_leads;
        for (size_t j = 0; j < minimal.size(); ++j) {
            if (j == i) continue;
            others.push_back(minimal[j]);
            other_leads.push_back(min_leads[j]);
        }
        Polynomial r = others.empty() ? minimal[i]
                                      : reduce_by(minimal[i], others, other_leads, order);
        reduced.push_back(r.monic(order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.greater(a.leading_monomial(order), b.leading_monomial(order));
    });
    gb.generators = std::move(reduced);
    return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (gb.is_zero_ideal()) return p;
    check_same_ring(p, gb.generators.front(), "normal_form");
    std::vector<Monomial> leads;
    for (const auto& g : gb.generators) leads.push_back(g.leading_monomial(gb.order));
    return reduce_by(p, gb.generators, leads, gb.order);
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::set<std::string>& keep) {
    if (gens.empty()) return {};
    const Ring& ring = gens.front().ring();
    std::vector<bool> eliminated(ring->size(), true);
    for (const auto& name : keep) {
        auto idx = ring->index_of(name);
        if (!idx) throw Error("eliminate: unknown variable '" + name + "'");
        eliminated[*idx] = false;
    }
    if (std::none_of(eliminated.begin(), eliminated.end(), [](bool b) { return b; }))
        throw Error("eliminate: kept set must be a proper subset of the ring variables");

    GroebnerBasis gb = buchberger(gens, MonomialOrder::elimination(eliminated));
    std::vector<Polynomial> result;
    for (const auto& g : gb.generators) {
        bool block_free = true;
        for (const auto& [m, c] : g.terms()) {
            for (size_t i = 0; i < ring->size() && block_free; ++i)
                if (eliminated[i] && m[i] > 0) block_free = false;
            if (!block_free) break;
        }
        if (block_free) result.push_back(g);
    }
    return result;
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
    if (gb.is_unit_ideal()) return true;
    if (gb.is_zero_ideal()) return gb.ring && gb.ring->size() == 0;
    const size_t n = gb.ring->size();
    for (size_t v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& g : gb.generators) {
            const Monomial& lm = g.leading_monomial(gb.order);
            bool pure = lm[v] > 0;
            for (size_t i = 0; i < n && pure; ++i)
                if (i != v && lm[i] > 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

namespace {

void count_standard(const std::vector<Monomial>& leads, Monomial& current, size_t var,
                    const std::vector<int>& cap, std::uint64_t& count) {
    if (var == current.nvars()) {
        for (const auto& l : leads)
            if (l.divides(current)) return;
        ++count;
        return;
    }
    for (int e = 0; e <= cap[var]; ++e) {
        current.exponents[var] = e;
        count_standard(leads, current, var + 1, cap, count);
    }
    current.exponents[var] = 0;
}

}  // namespace

std::uint64_t quotient_dimension(const GroebnerBasis& gb) {
    if (!is_zero_dimensional(gb)) throw Error("quotient_dimension: ideal is not zero-dimensional");
    if (gb.is_unit_ideal()) return 0;
    const size_t n = gb.ring->size();
    std::vector<Monomial> leads;
    for (const auto& g : gb.generators) leads.push_back(g.leading_monomial(gb.order));
    // Exponents beyond the pure-power lead for a variable are never standard.
    std::vector<int> cap(n, 0);
    for (size_t v = 0; v < n; ++v) {
        for (const auto& lm : leads) {
            bool pure = lm[v] > 0;
            for (size_t i = 0; i < n && pure; ++i)
                if (i != v && lm[i] > 0) pure = false;
            if (pure) cap[v] = std::max(cap[v], lm[v] - 1);
        }
    }
    std::uint64_t count = 0;
    Monomial current = Monomial::one(n);
    count_standard(leads, current, 0, cap, count);
    return count;
}

namespace {

void collect_up_to(const std::vector<Monomial>& leads, Monomial& current, size_t var, int budget,
                   std::vector<Monomial>& out) {
    if (var == current.nvars()) {
        for (const auto& l : leads)
            if (l.divides(current)) return;
        out.push_back(current);
        return;
    }
    for (int e = 0; e <= budget; ++e) {
        current.exponents[var] = e;
        collect_up_to(leads, current, var + 1, budget - e, out);
    }
    current.exponents[var] = 0;
}

}  // namespace

std::vector<Monomial> standard_monomials_up_to(const GroebnerBasis& gb, int dmax) {
    std::vector<Monomial> leads;
    for (const auto& g : gb.generators) leads.push_back(g.leading_monomial(gb.order));
    std::vector<Monomial> out;
    if (!gb.ring || dmax < 0) return out;
    Monomial current = Monomial::one(gb.ring->size());
    collect_up_to(leads, current, 0, dmax, out);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return grlex_compare(a, b) == std::strong_ordering::less;
    });
    return out;
}

}  // namespace poisson
