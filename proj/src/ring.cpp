#include "poisson/ring.hpp"

#include <algorithm>
#include <set>

namespace poisson {

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw Error("ring: empty variable name");
        if (!seen.insert(n).second) throw Error("ring: duplicate variable name '" + n + "'");
    }
}

std::optional<size_t> VariableContext::index_of(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Ring make_ring(std::vector<std::string> names) {
    return std::make_shared<const VariableContext>(std::move(names));
}

Ring extend_ring(const Ring& r, const std::vector<std::string>& extra) {
    std::vector<std::string> names = r->names();
    names.insert(names.end(), extra.begin(), extra.end());
    return make_ring(std::move(names));
}

std::string fresh_name(const Ring& r, const std::string& stem) {
    if (!r->index_of(stem)) return stem;
    for (int k = 2;; ++k) {
        std::string candidate = stem + std::to_string(k);
        if (!r->index_of(candidate)) return candidate;
    }
}

}  // namespace poisson
