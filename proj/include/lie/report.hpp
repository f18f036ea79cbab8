#pragma once

#include "lie/rational.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace lie {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    std::vector<std::string> witness;  ///< coordinates of a witness vector or matrix entries, if any
};

/// Named pass/fail checks plus a dimensions table. Order of insertion is preserved.
struct Report {
    std::string title;
    std::vector<Check> checks;
    std::vector<std::pair<std::string, long long>> dims;
    std::vector<std::string> notes;

    Check& add(std::string name, bool pass, std::string detail = {}, std::vector<std::string> witness = {}) {
        checks.push_back({std::move(name), pass, std::move(detail), std::move(witness)});
        return checks.back();
    }

    void dim(std::string name, long long value) { dims.emplace_back(std::move(name), value); }

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }

    const Check* find(std::string_view name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    bool passed(std::string_view name) const {
        const Check* c = find(name);
        return c != nullptr && c->pass;
    }

    long long dimension(std::string_view name) const {
        for (const auto& [k, v] : dims)
            if (k == name) return v;
        return -1;
    }

    /// Appends another report's checks with a name prefix.
    void merge(const Report& other, const std::string& prefix) {
        for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.detail, c.witness});
        for (const auto& [k, v] : other.dims) dims.emplace_back(prefix + k, v);
        for (const auto& n : other.notes) notes.push_back(n);
    }
};

}  // namespace lie
