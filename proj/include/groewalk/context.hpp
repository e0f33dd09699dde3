#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace groewalk {

// The polynomial ring's variables, split into the kept block X and the block
// U to eliminate. The global variable order is the X block followed by the
// U block.
class VariableContext {
public:
    VariableContext(std::vector<std::string> x_vars, std::vector<std::string> u_vars);

    std::size_t size() const { return names_.size(); }
    std::size_t x_count() const { return n_x_; }
    std::size_t u_count() const { return names_.size() - n_x_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    bool is_x(std::size_t i) const { return i < n_x_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VariableContext& other) const { return names_ == other.names_ && n_x_ == other.n_x_; }

private:
    std::vector<std::string> names_;  // X block then U block
    std::size_t n_x_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<std::string> x_vars, std::vector<std::string> u_vars);

bool same_context(const ContextPtr& a, const ContextPtr& b);

}  // namespace groewalk
