#include "poisson/order.hpp"

namespace poisson {

namespace {

std::strong_ordering lex_on(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

// Graded reverse lexicographic: higher total degree wins; on ties, the
// monomial with the smaller exponent at the last differing slot is greater.
std::strong_ordering degrevlex_on(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

// degrevlex restricted to the slots selected by the mask value.
std::strong_ordering masked_degrevlex(const Monomial& a, const Monomial& b,
                                      const std::vector<bool>& mask, bool value) {
    int da = 0, db = 0;
    for (size_t i = 0; i < a.nvars(); ++i) {
        if (mask[i] == value) {
            da += a[i];
            db += b[i];
        }
    }
    if (da != db) return da <=> db;
    for (size_t i = a.nvars(); i-- > 0;) {
        if (mask[i] == value && a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

}  // namespace

MonomialOrder MonomialOrder::elimination(size_t leading, size_t nvars) {
    std::vector<bool> elim(nvars, false);
    for (size_t i = 0; i < leading && i < nvars; ++i) elim[i] = true;
    return MonomialOrder(Kind::Elimination, std::move(elim));
}

MonomialOrder MonomialOrder::elimination(std::vector<bool> eliminated) {
    return MonomialOrder(Kind::Elimination, std::move(eliminated));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Lex:
            return lex_on(a, b);
        case Kind::DegRevLex:
            return degrevlex_on(a, b);
        case Kind::Elimination: {
            auto head = masked_degrevlex(a, b, eliminated_, true);
            if (head != std::strong_ordering::equal) return head;
            return masked_degrevlex(a, b, eliminated_, false);
        }
    }
    return std::strong_ordering::equal;
}

std::string MonomialOrder::str() const {
    switch (kind_) {
        case Kind::Lex:
            return "lex";
        case Kind::DegRevLex:
            return "degrevlex";
        case Kind::Elimination: {
            std::string s = "elimination[";
            bool first = true;
            for (size_t i = 0; i < eliminated_.size(); ++i) {
                if (eliminated_[i]) {
                    if (!first) s += ',';
                    s += std::to_string(i);
                    first = false;
                }
            }
            return s + "]";
        }
    }
    return "?";
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

}  // namespace poisson
