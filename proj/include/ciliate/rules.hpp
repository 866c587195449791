#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ciliate/errors.hpp"
#include "ciliate/pointer.hpp"

namespace ciliate {

enum class RuleKind { Snr, Spr, Sdr };

/// snr_p, spr_p or sdr_{p,q}. Parameters keep their orientation: snr_2 and snr_-2 are different rules.
class ReductionRule {
public:
    static ReductionRule snr(Pointer p) { return ReductionRule(RuleKind::Snr, p, std::nullopt); }
    static ReductionRule spr(Pointer p) { return ReductionRule(RuleKind::Spr, p, std::nullopt); }
    /// Throws ValidationError when p and q share an identity.
    static ReductionRule sdr(Pointer p, Pointer q);

    RuleKind kind() const noexcept { return kind_; }
    Pointer p() const noexcept { return p_; }
    /// Present iff kind() == RuleKind::Sdr.
    std::optional<Pointer> q() const noexcept { return q_; }

    friend bool operator==(const ReductionRule&, const ReductionRule&) = default;
    /// Canonical order: snr < spr < sdr, then (id, barred) of p, then of q.
    friend auto operator<=>(const ReductionRule&, const ReductionRule&) = default;

private:
    ReductionRule(RuleKind kind, Pointer p, std::optional<Pointer> q) : kind_(kind), p_(p), q_(q) {}

    RuleKind kind_;
    Pointer p_;
    std::optional<Pointer> q_;
};

/// Rules stored in application order (steps[0] is applied first).
/// The usual composition notation is written right to left, so
/// "snr_3 spr_2" corresponds to steps {spr:2, snr:3}.
struct Reduction {
    std::vector<ReductionRule> steps;
    friend bool operator==(const Reduction&, const Reduction&) = default;
};

/// Subset of {Snr, Spr, Sdr}.
struct RuleSet {
    bool snr = false;
    bool spr = false;
    bool sdr = false;

    static constexpr RuleSet all() { return {true, true, true}; }
    static constexpr RuleSet none() { return {}; }
    bool contains(RuleKind k) const noexcept {
        return k == RuleKind::Snr ? snr : k == RuleKind::Spr ? spr : sdr;
    }
    bool is_all() const noexcept { return snr && spr && sdr; }
    /// Index 0..7 with bit 0 = snr, bit 1 = spr, bit 2 = sdr.
    unsigned bits() const noexcept { return (snr ? 1u : 0u) | (spr ? 2u : 0u) | (sdr ? 4u : 0u); }
    static constexpr RuleSet from_bits(unsigned b) { return {(b & 1u) != 0, (b & 2u) != 0, (b & 4u) != 0}; }

    friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

/// Raised by apply_rule when the rule's schema does not match.
class ApplicabilityError : public Error {
public:
    ApplicabilityError(ReductionRule rule, PointerString input, const std::string& what)
        : Error(what), rule_(rule), input_(std::move(input)) {}
    const ReductionRule& rule() const noexcept { return rule_; }
    const PointerString& input() const noexcept { return input_; }

private:
    ReductionRule rule_;
    PointerString input_;
};

/// Raised by apply_reduction; `step` is the 0-based index of the failing rule and
/// `intermediate` the string it was applied to.
class ReductionError : public Error {
public:
    ReductionError(std::size_t step, ReductionRule rule, LegalString intermediate, const std::string& what)
        : Error(what), step_(step), rule_(rule), intermediate_(std::move(intermediate)) {}
    std::size_t step() const noexcept { return step_; }
    const ReductionRule& rule() const noexcept { return rule_; }
    const LegalString& intermediate() const noexcept { return intermediate_; }

private:
    std::size_t step_;
    ReductionRule rule_;
    LegalString intermediate_;
};

// Text syntax: "snr:2", "spr:-3", "sdr:2,-3"; reductions are "; "-separated in application order.
ReductionRule parse_rule(std::string_view text);
std::string format_rule(const ReductionRule& rule);
Reduction parse_reduction(std::string_view text);
std::string format_reduction(const Reduction& phi);

/// Comma list of snr, spr, sdr (any order). Empty text is the empty set.
RuleSet parse_rule_set(std::string_view text);
std::string format_rule_set(RuleSet s);

bool rule_applicable(const ReductionRule& rule, const LegalString& u);

/// snr_p(u1 p p u2) = u1 u2, spr_p(u1 p u2 -p u3) = u1 inv(u2) u3,
/// sdr_{p,q}(u1 p u2 q u3 p u4 q u5) = u1 u4 u3 u2 u5.
/// Throws ApplicabilityError when the schema does not match.
LegalString apply_rule(const ReductionRule& rule, const LegalString& u);

PointerIdSet rule_domain(const ReductionRule& rule);
PointerIdSet reduction_domain(const Reduction& phi);

/// Left fold of apply_rule. Throws ReductionError naming the failing step.
LegalString apply_reduction(const Reduction& phi, const LegalString& u);

/// Number of snr steps in a reduction.
std::size_t snr_steps(const Reduction& phi);

/// All rules of `s` applicable to `u`, in canonical order.
std::vector<ReductionRule> applicable_rules(const LegalString& u, RuleSet s);

}  // namespace ciliate
