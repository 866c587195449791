#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ciliate/pattern.hpp"
#include "ciliate/rules.hpp"

namespace ciliate {

// Brute-force exploration of the rewriting system. These are the reference
// oracles the characterization procedures are checked against; they are
// exponential and refuse inputs whose domain exceeds `bound`.

/// All successful S-reductions of u (up to `limit`), depth first, children in
/// applicable_rules order. Dead ends are memoized on the exact string.
std::vector<Reduction> enumerate_successful_reductions(const LegalString& u, RuleSet s, std::size_t limit,
                                                       std::size_t bound = kDefaultSearchBound);

/// Some S-reduction taking u to exactly v, if any. Only rules outside dom(v) are
/// tried, so the bound applies to |dom(u)| - |dom(v)|.
std::optional<Reduction> find_reduction(const LegalString& u, const LegalString& v, RuleSet s,
                                        std::size_t bound = kDefaultSearchBound);

inline bool is_reducible_oracle(const LegalString& u, const LegalString& v, RuleSet s,
                                std::size_t bound = kDefaultSearchBound) {
    return find_reduction(u, v, s, bound).has_value();
}

/// Every string reachable from u by S-reductions, u included, in sorted order.
std::vector<LegalString> reachable_strings(const LegalString& u, RuleSet s, std::size_t bound = kDefaultSearchBound);

}  // namespace ciliate
