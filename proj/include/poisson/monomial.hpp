#pragma once

#include <compare>
#include <vector>

#include "poisson/rational.hpp"

namespace poisson {

// Exponent vector, one slot per ring variable. The built-in comparison is
// structural (used for map keys and equality); mathematical term orders live
// in MonomialOrder.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exponents(std::move(exps)) {}

    static Monomial one(size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial var(size_t nvars, size_t i, int e = 1) {
        Monomial m = one(nvars);
        m.exponents[i] = e;
        return m;
    }

    size_t nvars() const { return exponents.size(); }
    int degree() const;
    bool is_one() const;
    int operator[](size_t i) const { return exponents[i]; }

    bool divides(const Monomial& other) const;
    Monomial divided_by(const Monomial& d) const;
    bool coprime_to(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);

    auto operator<=>(const Monomial&) const = default;
};

}  // namespace poisson
