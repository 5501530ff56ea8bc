#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poisson/rational.hpp"

namespace poisson {

// Ordered list of variable names. The position of a name is fixed at
// creation and defines the exponent slot of every monomial over this ring.
class VariableContext {
  public:
    explicit VariableContext(std::vector<std::string> names);

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<size_t> index_of(std::string_view name) const;

    bool operator==(const VariableContext& other) const { return names_ == other.names_; }

  private:
    std::vector<std::string> names_;
};

using Ring = std::shared_ptr<const VariableContext>;

Ring make_ring(std::vector<std::string> names);

inline bool same_ring(const Ring& a, const Ring& b) {
    return a == b || (a && b && *a == *b);
}

// Ring with the given names appended. Throws on name collision.
Ring extend_ring(const Ring& r, const std::vector<std::string>& extra);

// "stem" if unused, otherwise stem2, stem3, ...
std::string fresh_name(const Ring& r, const std::string& stem);

}  // namespace poisson
