#include "matsos/multipoly/varset.hpp"

#include "matsos/errors.hpp"

#include <algorithm>
#include <cctype>

namespace matsos {

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    auto first = static_cast<unsigned char>(s[0]);
    if (!std::isalpha(first) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!is_identifier(names_[i])) throw DomainError("invalid variable name '" + names_[i] + "'");
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) throw DomainError("duplicate variable '" + names_[i] + "'");
        }
    }
}

std::optional<std::size_t> VarSet::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

VarSet VarSet::numbered(std::size_t n, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return VarSet(std::move(names));
}

}  // namespace matsos
