#pragma once

#include "wonderful/locus.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wonderful {

enum class CheckStatus { Pass, Fail, Skip };
std::string_view to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

/// Walks every collection of item indices on which at least one predicate
/// holds, extending only such collections. Both predicates must be closed
/// under taking subsets for the walk to be exhaustive. Returns the first
/// collection (as sorted indices) where they disagree.
template <class P, class Q>
std::optional<std::vector<std::size_t>> first_disagreement(std::size_t items, P&& p, Q&& q,
                                                           std::uint64_t* visited = nullptr)
{
    std::vector<std::size_t> current;
    std::optional<std::vector<std::size_t>> found;
    auto walk = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t k = from; k < items && !found; ++k) {
            current.push_back(k);
            bool a = p(current);
            bool b = q(current);
            if (visited)
                ++*visited;
            if (a != b)
                found = current;
            else if (a)
                self(self, k + 1);
            current.pop_back();
        }
    };
    walk(walk, 0);
    return found;
}

/// Cross-validation suites for one geometry plus the fixed M_{0,n} checks.
/// Suites that would exceed the divisor budget are reported as skipped.
std::vector<CheckResult> run_certification(const GeometryConfig& g, int workers = 1);

} // namespace wonderful
