#include "ciliate/search.hpp"

#include <algorithm>
#include <unordered_set>

namespace ciliate {

namespace {

using StringSet = std::unordered_set<LegalString, PointerStringHash>;

void check_bound(std::size_t n, std::size_t bound) {
    if (n > bound) {
        throw CapacityError("brute-force search limited to " + std::to_string(bound) + " identities, string has " +
                            std::to_string(n));
    }
}

class SuccessEnumerator {
public:
    SuccessEnumerator(RuleSet s, std::size_t limit) : s_(s), limit_(limit) {}

    std::vector<Reduction> run(const LegalString& u) {
        if (limit_ > 0) visit(u);
        return std::move(found_);
    }

private:
    bool done() const { return found_.size() >= limit_; }

    // Returns whether some successful reduction passes through w.
    bool visit(const LegalString& w) {
        if (w.empty()) {
            found_.push_back(path_);
            return true;
        }
        if (dead_.contains(w)) return false;
        bool any = false;
        for (const ReductionRule& rule : applicable_rules(w, s_)) {
            path_.steps.push_back(rule);
            any = visit(apply_rule(rule, w)) || any;
            path_.steps.pop_back();
            if (done()) return true;
        }
        if (!any) dead_.insert(w);
        return any;
    }

    RuleSet s_;
    std::size_t limit_;
    Reduction path_;
    std::vector<Reduction> found_;
    StringSet dead_;
};

class TargetSearch {
public:
    TargetSearch(const LegalString& v, RuleSet s) : v_(v), keep_(domain(v)), s_(s) {}

    bool visit(const LegalString& w) {
        if (w == v_) return true;
        if (w.size() <= v_.size() || failed_.contains(w)) return false;
        for (const ReductionRule& rule : applicable_rules(w, s_)) {
            // Rules only ever remove identities, so touching dom(v) is a dead end.
            const PointerIdSet touched = rule_domain(rule);
            if (std::any_of(touched.begin(), touched.end(), [&](int id) { return keep_.contains(id); })) continue;
            path_.steps.push_back(rule);
            if (visit(apply_rule(rule, w))) return true;
            path_.steps.pop_back();
        }
        failed_.insert(w);
        return false;
    }

    Reduction path_;

private:
    const LegalString& v_;
    PointerIdSet keep_;
    RuleSet s_;
    StringSet failed_;
};

}  // namespace

std::vector<Reduction> enumerate_successful_reductions(const LegalString& u, RuleSet s, std::size_t limit,
                                                       std::size_t bound) {
    check_bound(domain(u).size(), bound);
    return SuccessEnumerator(s, limit).run(u);
}

std::optional<Reduction> find_reduction(const LegalString& u, const LegalString& v, RuleSet s, std::size_t bound) {
    const PointerIdSet du = domain(u);
    const PointerIdSet dv = domain(v);
    if (!std::includes(du.begin(), du.end(), dv.begin(), dv.end())) return std::nullopt;
    check_bound(du.size() - dv.size(), bound);
    TargetSearch search(v, s);
    if (!search.visit(u)) return std::nullopt;
    return search.path_;
}

std::vector<LegalString> reachable_strings(const LegalString& u, RuleSet s, std::size_t bound) {
    check_bound(domain(u).size(), bound);
    StringSet seen{u};
    std::vector<LegalString> stack{u};
    while (!stack.empty()) {
        LegalString w = std::move(stack.back());
        stack.pop_back();
        for (const ReductionRule& rule : applicable_rules(w, s)) {
            LegalString child = apply_rule(rule, w);
            if (seen.insert(child).second) stack.push_back(std::move(child));
        }
    }
    std::vector<LegalString> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ciliate
