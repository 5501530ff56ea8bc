#pragma once

#include <compare>
#include <string>
#include <vector>

#include "poisson/monomial.hpp"

namespace poisson {

// Total multiplicative well-ordering of monomials. Elimination orders carry
// the set of variables that form the dominating block; any monomial touching
// that block sorts above every block-free monomial.
class MonomialOrder {
  public:
    enum class Kind { Lex, DegRevLex, Elimination };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, {}); }
    // First `leading` variables form the eliminated block.
    static MonomialOrder elimination(size_t leading, size_t nvars);
    static MonomialOrder elimination(std::vector<bool> eliminated);

    Kind kind() const { return kind_; }
    const std::vector<bool>& eliminated_block() const { return eliminated_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }

    bool operator==(const MonomialOrder& other) const {
        return kind_ == other.kind_ && eliminated_ == other.eliminated_;
    }

    std::string str() const;

  private:
    MonomialOrder(Kind k, std::vector<bool> elim) : kind_(k), eliminated_(std::move(elim)) {}

    Kind kind_;
    std::vector<bool> eliminated_;  // used when kind_ == Elimination
};

// Printing/presentation order: total degree first, then lexicographic on the
// exponent vector. Not used for Groebner computations.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

}  // namespace poisson
