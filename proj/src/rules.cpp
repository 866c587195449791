#include "ciliate/rules.hpp"

#include <algorithm>
#include <map>

namespace ciliate {

ReductionRule ReductionRule::sdr(Pointer p, Pointer q) {
    if (p.id() == q.id()) {
        throw ValidationError("sdr needs two distinct identities, got " + format_pointer(p) + "," + format_pointer(q));
    }
    return ReductionRule(RuleKind::Sdr, p, q);
}

namespace {

std::string_view trim(std::string_view s) {
    auto space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (!s.empty() && space(s.front())) s.remove_prefix(1);
    while (!s.empty() && space(s.back())) s.remove_suffix(1);
    return s;
}

Pointer parse_single_pointer(std::string_view token, std::string_view whole) {
    PointerString parsed;
    try {
        parsed = parse_string(token);
    } catch (const ParseError&) {
        parsed.clear();
    }
    if (parsed.size() != 1) {
        throw ParseError(std::string(whole), 1, "invalid rule \"" + std::string(whole) + "\"");
    }
    return parsed.front();
}

}  // namespace

ReductionRule parse_rule(std::string_view text) {
    const std::string_view whole = trim(text);
    const auto colon = whole.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError(std::string(whole), 1,
                         "invalid rule \"" + std::string(whole) + "\" (expected snr:P, spr:P or sdr:P,Q)");
    }
    const std::string_view name = trim(whole.substr(0, colon));
    const std::string_view args = whole.substr(colon + 1);
    if (name == "snr") return ReductionRule::snr(parse_single_pointer(args, whole));
    if (name == "spr") return ReductionRule::spr(parse_single_pointer(args, whole));
    if (name == "sdr") {
        const auto comma = args.find(',');
        if (comma == std::string_view::npos) {
            throw ParseError(std::string(whole), 1, "invalid rule \"" + std::string(whole) + "\" (sdr needs P,Q)");
        }
        const Pointer p = parse_single_pointer(args.substr(0, comma), whole);
        const Pointer q = parse_single_pointer(args.substr(comma + 1), whole);
        if (p.id() == q.id()) {
            throw ParseError(std::string(whole), 1, "invalid rule \"" + std::string(whole) + "\" (sdr on one identity)");
        }
        return ReductionRule::sdr(p, q);
    }
    throw ParseError(std::string(whole), 1, "unknown rule kind \"" + std::string(name) + "\"");
}

std::string format_rule(const ReductionRule& rule) {
    switch (rule.kind()) {
        case RuleKind::Snr: return "snr:" + format_pointer(rule.p());
        case RuleKind::Spr: return "spr:" + format_pointer(rule.p());
        case RuleKind::Sdr: return "sdr:" + format_pointer(rule.p()) + "," + format_pointer(*rule.q());
    }
    return {};
}

Reduction parse_reduction(std::string_view text) {
    Reduction phi;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view piece = trim(text.substr(start, end - start));
        if (!piece.empty()) {
            try {
                phi.steps.push_back(parse_rule(piece));
            } catch (const ParseError& e) {
                throw ParseError(e.token(), phi.steps.size() + 1, e.what());
            }
        }
        start = end + 1;
    }
    return phi;
}

std::string format_reduction(const Reduction& phi) {
    std::string out;
    for (const ReductionRule& rule : phi.steps) {
        if (!out.empty()) out += "; ";
        out += format_rule(rule);
    }
    return out;
}

RuleSet parse_rule_set(std::string_view text) {
    RuleSet s;
    std::size_t start = 0;
    std::size_t position = 1;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view name = trim(text.substr(start, end - start));
        if (name == "snr") {
            s.snr = true;
        } else if (name == "spr") {
            s.spr = true;
        } else if (name == "sdr") {
            s.sdr = true;
        } else if (!name.empty()) {
            throw ParseError(std::string(name), position,
                             "unknown rule type \"" + std::string(name) + "\" (expected snr, spr or sdr)");
        }
        ++position;
        start = end + 1;
    }
    return s;
}

std::string format_rule_set(RuleSet s) {
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!out.empty()) out += ',';
        out += name;
    };
    add(s.snr, "snr");
    add(s.spr, "spr");
    add(s.sdr, "sdr");
    return out;
}

namespace {

// Positions of the two occurrences of `id`, or nullopt when absent.
std::optional<Interval> find_occurrences(const LegalString& u, int id) {
    std::size_t found = 0;
    Interval iv{0, 0};
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].id() != id) continue;
        (found == 0 ? iv.start : iv.end) = i;
        if (++found == 2) return iv;
    }
    return std::nullopt;
}

// Match positions for a rule: for snr/spr the p-interval, for sdr both intervals.
struct Match {
    Interval p;
    Interval q;
};

std::optional<Match> match(const ReductionRule& rule, const LegalString& u) {
    const auto ip = find_occurrences(u, rule.p().id());
    if (!ip) return std::nullopt;
    const Pointer p = rule.p();
    switch (rule.kind()) {
        case RuleKind::Snr:
            if (ip->end == ip->start + 1 && u[ip->start] == p && u[ip->end] == p) return Match{*ip, {}};
            return std::nullopt;
        case RuleKind::Spr:
            if (u[ip->start] == p && u[ip->end] == p.bar()) return Match{*ip, {}};
            return std::nullopt;
        case RuleKind::Sdr: {
            const Pointer q = *rule.q();
            const auto iq = find_occurrences(u, q.id());
            if (!iq) return std::nullopt;
            if (u[ip->start] != p || u[ip->end] != p || u[iq->start] != q || u[iq->end] != q) return std::nullopt;
            if (ip->start < iq->start && iq->start < ip->end && ip->end < iq->end) return Match{*ip, *iq};
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace

bool rule_applicable(const ReductionRule& rule, const LegalString& u) { return match(rule, u).has_value(); }

LegalString apply_rule(const ReductionRule& rule, const LegalString& u) {
    const auto m = match(rule, u);
    if (!m) {
        throw ApplicabilityError(rule, u.symbols(),
                                 format_rule(rule) + " is not applicable to \"" + format_string(u) + "\"");
    }
    const PointerView s = u.view();
    auto range = [&](std::size_t from, std::size_t to) { return s.subspan(from, to - from); };
    PointerString out;
    out.reserve(u.size());
    switch (rule.kind()) {
        case RuleKind::Snr:
            append(out, range(0, m->p.start));
            append(out, range(m->p.end + 1, s.size()));
            break;
        case RuleKind::Spr:
            append(out, range(0, m->p.start));
            append(out, inverse(range(m->p.start + 1, m->p.end)));
            append(out, range(m->p.end + 1, s.size()));
            break;
        case RuleKind::Sdr: {
            // u1 p u2 q u3 p u4 q u5  ->  u1 u4 u3 u2 u5
            const std::size_t i1 = m->p.start, i2 = m->q.start, j1 = m->p.end, j2 = m->q.end;
            append(out, range(0, i1));
            append(out, range(j1 + 1, j2));
            append(out, range(i2 + 1, j1));
            append(out, range(i1 + 1, i2));
            append(out, range(j2 + 1, s.size()));
            break;
        }
    }
    return LegalString::assume_legal(std::move(out));
}

PointerIdSet rule_domain(const ReductionRule& rule) {
    PointerIdSet ids{rule.p().id()};
    if (rule.q()) ids.insert(rule.q()->id());
    return ids;
}

PointerIdSet reduction_domain(const Reduction& phi) {
    PointerIdSet ids;
    for (const ReductionRule& rule : phi.steps) ids.merge(rule_domain(rule));
    return ids;
}

LegalString apply_reduction(const Reduction& phi, const LegalString& u) {
    LegalString current = u;
    for (std::size_t k = 0; k < phi.steps.size(); ++k) {
        const ReductionRule& rule = phi.steps[k];
        if (!rule_applicable(rule, current)) {
            throw ReductionError(k, rule, current,
                                 "step " + std::to_string(k) + " (" + format_rule(rule) + ") is not applicable to \"" +
                                     format_string(current) + "\"");
        }
        current = apply_rule(rule, current);
    }
    return current;
}

std::size_t snr_steps(const Reduction& phi) {
    return static_cast<std::size_t>(std::count_if(phi.steps.begin(), phi.steps.end(),
                                                  [](const ReductionRule& r) { return r.kind() == RuleKind::Snr; }));
}

std::vector<ReductionRule> applicable_rules(const LegalString& u, RuleSet s) {
    std::vector<ReductionRule> out;
    if (u.empty() || s == RuleSet::none()) return out;
    const auto occ = occurrence_map(u);
    for (const auto& [id, iv] : occ) {
        const Pointer first = u[iv.start];
        const Pointer second = u[iv.end];
        if (s.snr && first == second && iv.end == iv.start + 1) out.push_back(ReductionRule::snr(first));
        if (s.spr && first == second.bar()) out.push_back(ReductionRule::spr(first));
    }
    if (s.sdr) {
        for (auto a = occ.begin(); a != occ.end(); ++a) {
            if (u[a->second.start] != u[a->second.end]) continue;
            for (auto b = std::next(a); b != occ.end(); ++b) {
                if (u[b->second.start] != u[b->second.end]) continue;
                // p is whichever interval opens first.
                const bool a_first = a->second.start < b->second.start;
                const Interval& ip = a_first ? a->second : b->second;
                const Interval& iq = a_first ? b->second : a->second;
                if (iq.start < ip.end && ip.end < iq.end) {
                    out.push_back(ReductionRule::sdr(u[ip.start], u[iq.start]));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ciliate
