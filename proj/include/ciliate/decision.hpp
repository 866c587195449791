#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ciliate/pattern.hpp"
#include "ciliate/pointer.hpp"
#include "ciliate/reduction_graph.hpp"
#include "ciliate/rules.hpp"

namespace ciliate {

/// Identities of dom(u) as vertices, signed by positivity, with an edge for every overlapping pair.
struct OverlapGraph {
    std::vector<int> vertices;                  // sorted
    std::vector<bool> positive;                 // parallel to vertices
    std::vector<std::pair<int, int>> edges;     // (smaller, larger), sorted

    bool is_positive(int id) const;
};

OverlapGraph overlap_graph(const LegalString& u);

/// red(u, D): label of the s-t walk of R_{u,D}. Linear in |u|.
PointerString reduct_of(const LegalString& u, const PointerIdSet& removed);

/// Cyclic components of R_{u,D}: the number of snr steps in every reduction of u
/// whose result has domain exactly D.
std::size_t snr_count(const LegalString& u, const PointerIdSet& removed = {});

/// Some reduction of u leaves exactly the identities D: red(u, D) is legal with domain D.
bool exists_reduction_to_domain(const LegalString& u, const PointerIdSet& removed);

/// Successfulness in S, decided by the characterization for each of the eight rule subsets.
bool successful_in(const LegalString& u, RuleSet s);

enum class VerdictReason { Ok, DomainNotSubset, ReductMismatch, RemovalNotSuccessful };

std::string to_string(VerdictReason reason);

struct ReducibilityVerdict {
    bool reducible = false;
    VerdictReason reason = VerdictReason::Ok;
    /// Present only when reducible, requested, and |dom(u)| - |dom(v)| is within the search bound.
    std::optional<Reduction> witness;
};

/// u is reducible to v in S iff rem_D(u) is successful in S and red(u, D) = v, with D = dom(v).
/// The witness comes from a bounded search for an S-reduction of u to v.
ReducibilityVerdict is_reducible(const LegalString& u, const LegalString& v, RuleSet s, bool want_witness = false,
                                 std::size_t bound = kDefaultSearchBound);

/// Reducibility in {Spr, Sdr}: R_{u,D} has no cyclic component and red(u, D) = v.
/// Throws DomainError unless dom(v) is a subset of dom(u).
bool is_reducible_spr_sdr(const LegalString& u, const LegalString& v);

}  // namespace ciliate
