#include "groewalk/context.hpp"

#include <set>

#include "groewalk/errors.hpp"

namespace groewalk {

VariableContext::VariableContext(std::vector<std::string> x_vars, std::vector<std::string> u_vars)
    : names_(std::move(x_vars)), n_x_(names_.size()) {
    names_.insert(names_.end(), u_vars.begin(), u_vars.end());
    if (names_.empty()) throw DomainError("variable context needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw DomainError("empty variable name");
        if (!seen.insert(n).second) throw DomainError("duplicate variable name: " + n);
    }
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

ContextPtr make_context(std::vector<std::string> x_vars, std::vector<std::string> u_vars) {
    return std::make_shared<VariableContext>(std::move(x_vars), std::move(u_vars));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace groewalk
