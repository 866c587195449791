#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ciliate/pointer.hpp"

namespace ciliate {

/// One MDS occurrence in a micronuclear pattern: M_index or its inversion.
struct Mds {
    int index;
    bool inverted = false;
    friend bool operator==(const Mds&, const Mds&) = default;
};

/// A permutation of M_1 ... M_kappa with some entries possibly inverted.
struct MicronuclearPattern {
    std::vector<Mds> mds;
    int kappa = 0;

    /// Throws ValidationError unless kappa >= 2 and `mds` is a permutation of 1..kappa.
    void validate() const;

    friend bool operator==(const MicronuclearPattern&, const MicronuclearPattern&) = default;
};

/// Tokens "Mi" or "~Mi"; kappa is the largest index. Throws ValidationError unless the result is a pattern.
MicronuclearPattern parse_pattern(std::string_view text);
std::string format_pattern(const MicronuclearPattern& pattern);

/// Image of a single MDS: 2 for M_1, kappa for M_kappa, i(i+1) otherwise; inversion maps to the inverse image.
PointerString encode_mds(Mds m, int kappa);

/// Concatenated MDS images. The result is realistic and therefore legal.
LegalString encode_pattern(const MicronuclearPattern& pattern);

/// A witness pattern whose encoding equals `u`, if one exists.
/// kappa is fixed to max(dom(u) u {2}); strings with identity gaps are rejected.
std::optional<MicronuclearPattern> realistic_witness(const LegalString& u);
inline bool is_realistic(const LegalString& u) { return realistic_witness(u).has_value(); }

inline constexpr std::size_t kDefaultSearchBound = 8;

/// Some bar-commuting renaming of dom(u) onto {2, ..., |dom(u)| + 1} yields a realistic string.
/// Throws CapacityError when |dom(u)| exceeds `bound`.
bool is_realizable(const LegalString& u, std::size_t bound = kDefaultSearchBound);

}  // namespace ciliate
