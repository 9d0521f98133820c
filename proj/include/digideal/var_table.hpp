#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace digideal {

/// Ordered set of distinct variable names. Index of a name never changes.
class VarTable {
public:
    VarTable() = default;
    explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
        index_.reserve(names_.size());
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw UsageError("VarTable: empty variable name");
            if (!index_.emplace(names_[i], i).second)
                throw UsageError("VarTable: duplicate variable name '" + names_[i] + "'");
        }
    }

    static std::shared_ptr<const VarTable> make(std::vector<std::string> names) {
        return std::make_shared<const VarTable>(std::move(names));
    }

    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] const std::string& name(std::size_t i) const { return names_.at(i); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    [[nodiscard]] std::size_t index(std::string_view name) const {
        auto i = find(name);
        if (!i) throw UsageError("unknown variable '" + std::string(name) + "'");
        return *i;
    }
    [[nodiscard]] bool contains(std::string_view name) const { return find(name).has_value(); }

    /// A name starting with `stem` that is not yet in the table.
    [[nodiscard]] std::string fresh_name(const std::string& stem) const {
        if (!contains(stem)) return stem;
        for (std::size_t k = 1;; ++k) {
            std::string candidate = stem + "_" + std::to_string(k);
            if (!contains(candidate)) return candidate;
        }
    }

    friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace digideal
