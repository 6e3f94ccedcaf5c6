#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace matsos {

/// Ordered, duplicate-free list of variable names. The position of a name is
/// its index in every Monomial built against this set.
class VarSet {
public:
    VarSet() = default;
    /// Throws DomainError on duplicate or syntactically invalid names.
    explicit VarSet(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> index_of(const std::string& name) const;

    /// x1, x2, ..., xn
    static VarSet numbered(std::size_t n, const std::string& prefix = "x");

    friend bool operator==(const VarSet&, const VarSet&) = default;

private:
    std::vector<std::string> names_;
};

bool is_identifier(const std::string& s);

}  // namespace matsos
