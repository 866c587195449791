#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "ciliate/decision.hpp"
#include "ciliate/errors.hpp"
#include "ciliate/search.hpp"
#include "support.hpp"

using namespace ciliate;
using ciliate::testing::L;
using ciliate::testing::P;

namespace {

const RuleSet kSnr{true, false, false};
const RuleSet kSnrSpr{true, true, false};
const RuleSet kSprSdr{false, true, true};

bool oracle_successful(const LegalString& u, RuleSet s) {
    return !enumerate_successful_reductions(u, s, 1).empty();
}

// Every connected component of the overlap graph has a positive vertex or is a single vertex.
bool overlap_graph_criterion(const LegalString& u) {
    const OverlapGraph g = overlap_graph(u);
    const std::size_t n = g.vertices.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto index = [&](int id) {
        return static_cast<std::size_t>(std::lower_bound(g.vertices.begin(), g.vertices.end(), id) - g.vertices.begin());
    };
    for (const auto& [a, b] : g.edges) parent[find(index(a))] = find(index(b));
    std::vector<std::size_t> size(n, 0);
    std::vector<bool> positive(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        ++size[find(i)];
        if (g.positive[i]) positive[find(i)] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (find(i) == i && size[i] > 1 && !positive[i]) return false;
    }
    return true;
}

PointerIdSet random_subset(std::mt19937& rng, const PointerIdSet& ids) {
    PointerIdSet out;
    for (int id : ids) {
        if (rng() % 2) out.insert(id);
    }
    return out;
}

}  // namespace

TEST_CASE("overlap graph") {
    const OverlapGraph g = overlap_graph(L("2 3 -2 -3"));
    CHECK(g.vertices == std::vector<int>{2, 3});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{2, 3}});
    CHECK(g.is_positive(2));
    CHECK(g.is_positive(3));
    CHECK_THROWS_AS((void)g.is_positive(4), DomainError);

    const OverlapGraph h = overlap_graph(L("2 2 3 3"));
    CHECK(h.edges.empty());
    CHECK_FALSE(h.is_positive(2));
    CHECK_FALSE(h.is_positive(3));

    CHECK(overlap_graph(LegalString{}).vertices.empty());
}

TEST_CASE("reducts and snr counts") {
    CHECK(reduct_of(L("5 2 6 8 8 3 -2 5 -4 3 7 7 4 6"), {5, 6, 7, 8}) == P("5 6"));
    CHECK(snr_count(L("2 3 -2 -4 3 4")) == 1);
    CHECK(snr_count(L("2 2 3 3")) == 2);
    CHECK(snr_count(L("3 -2 2 3")) == 1);
    CHECK(snr_count(L("2 2"), {2}) == 0);
}

TEST_CASE("reductions to a domain") {
    const LegalString ex1 = L("5 2 6 8 8 3 -2 5 -4 3 7 7 4 6");
    CHECK_FALSE(exists_reduction_to_domain(ex1, {5, 6, 7, 8}));
    CHECK(exists_reduction_to_domain(ex1, domain(ex1)));
    CHECK(exists_reduction_to_domain(ex1, {}));

    std::mt19937 rng(83);
    for (int trial = 0; trial < 300; ++trial) {
        const LegalString u = ciliate::testing::random_legal(rng, 1, 5);
        const PointerIdSet d = random_subset(rng, domain(u));
        bool expected = false;
        for (const LegalString& v : reachable_strings(u, RuleSet::all())) {
            if (domain(v) == d) expected = true;
        }
        CAPTURE(format_string(u));
        CAPTURE(format_id_set(d));
        CHECK(exists_reduction_to_domain(u, d) == expected);
    }
}

TEST_CASE("successfulness examples") {
    CHECK_FALSE(successful_in(L("2 3 -3 2 4 -4"), kSprSdr));
    CHECK(successful_in(L("2 2 3 3"), kSnr));
    CHECK(successful_in(L("3 2 4 5 -4 5 -3 -2"), kSnrSpr));
    CHECK_FALSE(successful_in(L("2 3 2 3"), kSnrSpr));
    CHECK(successful_in(L("2 3 2 3"), RuleSet{false, false, true}));
    CHECK(successful_in(LegalString{}, RuleSet::none()));
    CHECK_FALSE(successful_in(L("2 2"), RuleSet::none()));
}

TEST_CASE("successfulness agrees with the search on every string up to three identities") {
    std::size_t checked = 0;
    ciliate::testing::for_each_legal_up_to(4, [&](const LegalString& u) {
        for (unsigned b = 0; b < 8; ++b) {
            const RuleSet s = RuleSet::from_bits(b);
            CAPTURE(format_string(u));
            CAPTURE(format_rule_set(s));
            CHECK(successful_in(u, s) == oracle_successful(u, s));
            ++checked;
        }
    });
    CHECK(checked > 40000);
}

TEST_CASE("successfulness agrees with the search on random strings") {
    std::mt19937 rng(89);
    for (int trial = 0; trial < 300; ++trial) {
        const LegalString u = ciliate::testing::random_legal(rng, 1, 6);
        const RuleSet s = RuleSet::from_bits(static_cast<unsigned>(rng() % 8));
        CAPTURE(format_string(u));
        CAPTURE(format_rule_set(s));
        CHECK(successful_in(u, s) == oracle_successful(u, s));
    }
}

TEST_CASE("concatenated legal strings are successful iff both parts are") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 300; ++trial) {
        const LegalString inner = ciliate::testing::random_legal(rng, 1, 3);
        const LegalString outer_src = ciliate::testing::random_legal(rng, 1, 3);
        PointerString outer;
        for (const Pointer& p : outer_src) outer.emplace_back(p.id() + 10, p.barred());
        const std::size_t cut = rng() % (outer.size() + 1);
        PointerString joined(outer.begin(), outer.begin() + static_cast<std::ptrdiff_t>(cut));
        append(joined, inner.symbols());
        joined.insert(joined.end(), outer.begin() + static_cast<std::ptrdiff_t>(cut), outer.end());
        const LegalString u(std::move(joined));
        for (const RuleSet s : {RuleSet{false, true, false}, kSnrSpr}) {
            CAPTURE(format_string(u));
            CAPTURE(format_rule_set(s));
            const bool parts = successful_in(inner, s) && successful_in(LegalString(outer), s);
            CHECK(successful_in(u, s) == parts);
            CHECK(successful_in(u, s) == oracle_successful(u, s));
        }
    }
}

TEST_CASE("successfulness is monotone in the rule set") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 500; ++trial) {
        const LegalString u = ciliate::testing::random_legal(rng, 1, 7);
        for (unsigned a = 0; a < 8; ++a) {
            for (unsigned b = 0; b < 8; ++b) {
                if ((a & b) != a) continue;
                if (successful_in(u, RuleSet::from_bits(a))) CHECK(successful_in(u, RuleSet::from_bits(b)));
            }
        }
        CHECK(successful_in(u, RuleSet::all()));
    }
}

TEST_CASE("the overlap graph criterion matches snr and spr") {
    std::mt19937 rng(103);
    ciliate::testing::for_each_legal_up_to(4, [&](const LegalString& u) {
        CAPTURE(format_string(u));
        CHECK(successful_in(u, kSnrSpr) == overlap_graph_criterion(u));
    });
    for (int trial = 0; trial < 500; ++trial) {
        const LegalString u = ciliate::testing::random_legal(rng, 1, 9);
        CAPTURE(format_string(u));
        CHECK(successful_in(u, kSnrSpr) == overlap_graph_criterion(u));
    }
}

TEST_CASE("reducibility verdicts") {
    const LegalString u = L("3 2 4 5 -4 5 -3 -2");
    const LegalString v = L("-5 4 -5 -4");
    const ReducibilityVerdict yes = is_reducible(u, v, kSnrSpr, true);
    CHECK(yes.reducible);
    CHECK(yes.reason == VerdictReason::Ok);
    REQUIRE(yes.witness);
    CHECK(apply_reduction(*yes.witness, u) == v);

    CHECK(is_reducible(u, u, RuleSet::none()).reducible);

    const LegalString w = L("3 2 4 5 -4 5 -3 6 6 -2");
    const LegalString x = L("-5 4 -5 -4 6 6");
    for (unsigned b = 0; b < 8; ++b) {
        const ReducibilityVerdict no = is_reducible(w, x, RuleSet::from_bits(b));
        CHECK_FALSE(no.reducible);
        CHECK(no.reason == VerdictReason::ReductMismatch);
    }

    CHECK(is_reducible(L("2 2"), L("3 3"), RuleSet::all()).reason == VerdictReason::DomainNotSubset);
    CHECK(is_reducible(L("2 3 2 3 4 4"), L("4 4"), kSnrSpr).reason == VerdictReason::RemovalNotSuccessful);
    CHECK(to_string(VerdictReason::RemovalNotSuccessful) == "rem-not-successful-in-S");
}

TEST_CASE("reducibility agrees with the search") {
    std::mt19937 rng(107);
    int positives = 0;
    int negatives = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const LegalString u = ciliate::testing::random_legal(rng, 1, 5);
        const RuleSet s = RuleSet::from_bits(static_cast<unsigned>(rng() % 8));
        std::vector<LegalString> candidates = reachable_strings(u, RuleSet::all());
        candidates.push_back(ciliate::testing::random_legal(rng, 0, 2));
        for (const LegalString& v : candidates) {
            const ReducibilityVerdict verdict = is_reducible(u, v, s, true);
            const bool expected = is_reducible_oracle(u, v, s);
            CAPTURE(format_string(u));
            CAPTURE(format_string(v));
            CAPTURE(format_rule_set(s));
            CHECK(verdict.reducible == expected);
            if (verdict.reducible) {
                REQUIRE(verdict.witness);
                CHECK(apply_reduction(*verdict.witness, u) == v);
                ++positives;
            } else {
                ++negatives;
            }
        }
    }
    CHECK(positives > 100);
    CHECK(negatives > 100);
}

TEST_CASE("every reduction to a domain uses the same number of snr steps") {
    std::mt19937 rng(109);
    for (int trial = 0; trial < 300; ++trial) {
        const LegalString u = ciliate::testing::random_legal(rng, 1, 6);
        for (const Reduction& phi : enumerate_successful_reductions(u, RuleSet::all(), 30)) {
            CHECK(snr_steps(phi) == snr_count(u));
        }

        const PointerIdSet d = random_subset(rng, domain(u));
        for (int walk = 0; walk < 5; ++walk) {
            Reduction phi;
            LegalString cur = u;
            for (;;) {
                std::vector<ReductionRule> options;
                for (const ReductionRule& r : applicable_rules(cur, RuleSet::all())) {
                    const PointerIdSet rd = rule_domain(r);
                    if (std::none_of(rd.begin(), rd.end(), [&](int id) { return d.contains(id); })) {
                        options.push_back(r);
                    }
                }
                if (options.empty()) break;
                phi.steps.push_back(options[rng() % options.size()]);
                cur = apply_rule(phi.steps.back(), cur);
            }
            if (domain(cur) != d) continue;
            CAPTURE(format_string(u));
            CAPTURE(format_reduction(phi));
            CHECK(snr_steps(phi) == snr_count(u, d));
        }
    }
}

TEST_CASE("each rule changes the cyclic count as its kind dictates") {
    std::mt19937 rng(113);
    int checked = 0;
    while (checked < 1000) {
        const LegalString u = ciliate::testing::random_legal(rng, 1, 8);
        const auto options = applicable_rules(u, RuleSet::all());
        if (options.empty()) continue;
        const ReductionRule rule = options[rng() % options.size()];
        const std::size_t before = snr_count(u);
        const std::size_t after = snr_count(apply_rule(rule, u));
        CAPTURE(format_string(u));
        CAPTURE(format_rule(rule));
        CHECK(after + (rule.kind() == RuleKind::Snr ? 1 : 0) == before);
        ++checked;
    }
}

TEST_CASE("reducibility with spr and sdr") {
    const LegalString u = L("2 3 -3 2 4 -4");
    CHECK(is_reducible_spr_sdr(u, L("2 2")));
    CHECK(is_reducible_oracle(u, L("2 2"), kSprSdr));
    CHECK(cyclic_component_count(build_reduction_graph(u, {2})) == 0);
    CHECK(is_reducible_spr_sdr(u, u));
    CHECK_FALSE(is_reducible_spr_sdr(u, LegalString{}));
    CHECK_THROWS_AS((void)is_reducible_spr_sdr(u, L("7 7")), DomainError);

    std::mt19937 rng(127);
    for (int trial = 0; trial < 300; ++trial) {
        const LegalString w = ciliate::testing::random_legal(rng, 1, 5);
        for (const LegalString& v : reachable_strings(w, RuleSet::all())) {
            CAPTURE(format_string(w));
            CAPTURE(format_string(v));
            CHECK(is_reducible_spr_sdr(w, v) == is_reducible(w, v, kSprSdr).reducible);
        }
    }
}
