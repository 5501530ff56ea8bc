#include "poisson/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace poisson {

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool Monomial::is_one() const {
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > other.exponents[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
    Monomial q = *this;
    for (size_t i = 0; i < exponents.size(); ++i) q.exponents[i] -= d.exponents[i];
    return q;
}

bool Monomial::coprime_to(const Monomial& other) const {
    for (size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > 0 && other.exponents[i] > 0) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial p = a;
    for (size_t i = 0; i < p.exponents.size(); ++i) p.exponents[i] += b.exponents[i];
    return p;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (size_t i = 0; i < m.exponents.size(); ++i)
        m.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
    return m;
}

}  // namespace poisson
