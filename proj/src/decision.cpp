#include "ciliate/decision.hpp"

#include <algorithm>
#include <unordered_map>

#include "ciliate/errors.hpp"
#include "ciliate/search.hpp"

namespace ciliate {

bool OverlapGraph::is_positive(int id) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), id);
    if (it == vertices.end() || *it != id) throw DomainError("identity " + std::to_string(id) + " is not a vertex");
    return positive[static_cast<std::size_t>(it - vertices.begin())];
}

OverlapGraph overlap_graph(const LegalString& u) {
    OverlapGraph g;
    const auto occ = occurrence_map(u);
    std::vector<Interval> intervals;
    for (const auto& [id, iv] : occ) {
        g.vertices.push_back(id);
        g.positive.push_back(u[iv.start].barred() != u[iv.end].barred());
        intervals.push_back(iv);
    }
    for (std::size_t a = 0; a < intervals.size(); ++a) {
        for (std::size_t b = a + 1; b < intervals.size(); ++b) {
            const Interval& x = intervals[a];
            const Interval& y = intervals[b];
            if ((x.start < y.start && y.start < x.end && x.end < y.end) ||
                (y.start < x.start && x.start < y.end && y.end < x.end)) {
                g.edges.emplace_back(g.vertices[a], g.vertices[b]);
            }
        }
    }
    return g;
}

PointerString reduct_of(const LegalString& u, const PointerIdSet& removed) {
    return reduct(build_reduction_graph(u, removed));
}

std::size_t snr_count(const LegalString& u, const PointerIdSet& removed) {
    return cyclic_component_count(build_reduction_graph(u, removed));
}

bool exists_reduction_to_domain(const LegalString& u, const PointerIdSet& removed) {
    const PointerString red = reduct_of(u, removed);
    return is_legal(red) && domain(red) == removed;
}

namespace {

bool no_cyclic_component(const LegalString& u) { return snr_count(u) == 0; }

// Shortest nonempty legal window of a nonempty legal string; it has no proper
// legal substring, so it is elementary.
Interval shortest_legal_window(const LegalString& u) {
    Interval best{0, u.size() - 1};
    std::unordered_map<int, int> parity;
    for (std::size_t i = 0; i < u.size(); ++i) {
        parity.clear();
        std::size_t odd = 0;
        for (std::size_t j = i; j < u.size() && j - i < best.end - best.start; ++j) {
            int& c = parity[u[j].id()];
            c ^= 1;
            if (c) ++odd; else --odd;
            if (odd == 0) {
                best = {i, j};
                break;
            }
        }
    }
    return best;
}

bool elementary_successful(const LegalString& e, RuleSet s) {
    const bool has_positive = !all_negative(e);
    if (s.snr) return has_positive || (e.size() == 2 && e[0] == e[1]);  // {Snr, Spr}
    return has_positive && no_cyclic_component(e);                      // {Spr}
}

// u = alpha v beta with v legal: u is successful iff v and alpha beta are.
// Peel off elementary windows one at a time.
bool successful_by_decomposition(LegalString u, RuleSet s) {
    while (!u.empty()) {
        const Interval w = shortest_legal_window(u);
        const auto first = u.begin() + static_cast<std::ptrdiff_t>(w.start);
        const auto last = u.begin() + static_cast<std::ptrdiff_t>(w.end) + 1;
        if (!elementary_successful(LegalString::assume_legal(PointerString(first, last)), s)) return false;
        PointerString rest(u.begin(), first);
        rest.insert(rest.end(), last, u.end());
        u = LegalString::assume_legal(std::move(rest));
    }
    return true;
}

}  // namespace

bool successful_in(const LegalString& u, RuleSet s) {
    if (u.empty()) return true;
    switch (s.bits()) {
        case 0b000: return false;
        case 0b001: return all_negative(u) && !has_overlapping_pointers(u);            // {Snr}
        case 0b010: return successful_by_decomposition(u, s);                          // {Spr}
        case 0b011: return successful_by_decomposition(u, s);                          // {Snr, Spr}
        case 0b100: return all_negative(u) && no_cyclic_component(u);                  // {Sdr}
        case 0b101: return all_negative(u);                                            // {Snr, Sdr}
        case 0b110: return no_cyclic_component(u);                                     // {Spr, Sdr}
        default: return true;                                                          // all three
    }
}

std::string to_string(VerdictReason reason) {
    switch (reason) {
        case VerdictReason::Ok: return "ok";
        case VerdictReason::DomainNotSubset: return "domain-not-subset";
        case VerdictReason::ReductMismatch: return "reduct-mismatch";
        case VerdictReason::RemovalNotSuccessful: return "rem-not-successful-in-S";
    }
    return {};
}

ReducibilityVerdict is_reducible(const LegalString& u, const LegalString& v, RuleSet s, bool want_witness,
                                 std::size_t bound) {
    const PointerIdSet du = domain(u);
    const PointerIdSet dv = domain(v);
    if (!std::includes(du.begin(), du.end(), dv.begin(), dv.end())) {
        return {false, VerdictReason::DomainNotSubset, std::nullopt};
    }
    if (reduct_of(u, dv) != v.symbols()) return {false, VerdictReason::ReductMismatch, std::nullopt};
    const LegalString rest = remove_pointers(u, dv);
    if (!successful_in(rest, s)) return {false, VerdictReason::RemovalNotSuccessful, std::nullopt};

    ReducibilityVerdict verdict{true, VerdictReason::Ok, std::nullopt};
    if (want_witness && domain(rest).size() <= bound) verdict.witness = find_reduction(u, v, s, bound);
    return verdict;
}

bool is_reducible_spr_sdr(const LegalString& u, const LegalString& v) {
    const PointerIdSet du = domain(u);
    const PointerIdSet dv = domain(v);
    if (!std::includes(du.begin(), du.end(), dv.begin(), dv.end())) {
        throw DomainError("dom(v) = {" + format_id_set(dv) + "} is not a subset of dom(u) = {" + format_id_set(du) +
                          "}");
    }
    const ReductionGraph g = build_reduction_graph(u, dv);
    return cyclic_component_count(g) == 0 && reduct(g) == v.symbols();
}

}  // namespace ciliate
