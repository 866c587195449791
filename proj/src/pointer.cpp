#include "ciliate/pointer.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <unordered_map>

#include "ciliate/errors.hpp"

namespace ciliate {

Pointer::Pointer(int id, bool barred) : id_(id), barred_(barred) {
    if (id < 2) {
        throw ValidationError("pointer identity must be >= 2, got " + std::to_string(id));
    }
}

LegalString::LegalString(PointerString symbols) : symbols_(std::move(symbols)) {
    if (!is_legal(symbols_)) {
        throw ValidationError("not a legal string: \"" + format_string(symbols_) + "\"");
    }
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

template <class F>
void for_each_token(std::string_view text, char extra_separator, F&& f) {
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (is_space(text[i]) || text[i] == extra_separator)) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_space(text[j]) && text[j] != extra_separator) ++j;
        if (j > i) f(text.substr(i, j - i));
        i = j;
    }
}

}  // namespace

PointerString parse_string(std::string_view text) {
    PointerString out;
    std::size_t position = 1;
    for_each_token(text, '\0', [&](std::string_view token) {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        const bool whole = ec == std::errc{} && ptr == token.data() + token.size();
        if (!whole || value == 0 || value == 1 || value == -1 ||
            value > std::numeric_limits<int>::max() || value < -std::numeric_limits<int>::max()) {
            throw ParseError(std::string(token), position,
                             "invalid pointer token \"" + std::string(token) + "\" at token " +
                                 std::to_string(position) + " (expected a signed integer with |k| >= 2)");
        }
        out.emplace_back(static_cast<int>(value < 0 ? -value : value), value < 0);
        ++position;
    });
    return out;
}

std::string format_pointer(Pointer p) {
    return p.barred() ? "-" + std::to_string(p.id()) : std::to_string(p.id());
}

std::string format_string(PointerView u) {
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) out += ' ';
        out += format_pointer(u[i]);
    }
    return out;
}

LegalString parse_legal(std::string_view text) { return LegalString(parse_string(text)); }

PointerIdSet parse_id_set(std::string_view text) {
    PointerIdSet ids;
    std::size_t position = 1;
    for_each_token(text, ',', [&](std::string_view token) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || value < 2) {
            throw ParseError(std::string(token), position,
                             "invalid identity \"" + std::string(token) + "\" at token " +
                                 std::to_string(position) + " (expected an integer >= 2)");
        }
        ids.insert(value);
        ++position;
    });
    return ids;
}

std::string format_id_set(const PointerIdSet& ids) {
    std::string out;
    for (int id : ids) {
        if (!out.empty()) out += ',';
        out += std::to_string(id);
    }
    return out;
}

PointerString inverse(PointerView u) {
    PointerString out;
    out.reserve(u.size());
    for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(it->bar());
    return out;
}

PointerIdSet domain(PointerView u) {
    PointerIdSet ids;
    for (const Pointer& p : u) ids.insert(p.id());
    return ids;
}

bool is_legal(PointerView u) {
    if (u.size() % 2 != 0) return false;
    std::unordered_map<int, int> counts;
    counts.reserve(u.size());
    for (const Pointer& p : u) {
        if (++counts[p.id()] > 2) return false;
    }
    return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second == 2; });
}

std::map<int, Interval> occurrence_map(const LegalString& u) {
    std::map<int, Interval> out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        auto [it, inserted] = out.try_emplace(u[i].id(), Interval{i, i});
        if (!inserted) it->second.end = i;
    }
    return out;
}

bool is_elementary(const LegalString& u) {
    if (u.empty()) throw PreconditionError("is_elementary requires a nonempty string");
    // A proper legal substring exists iff some window [i, j] other than the
    // whole string has no identity with an odd count.
    const std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::unordered_map<int, int> parity;
        std::size_t odd = 0;
        for (std::size_t j = i; j < n; ++j) {
            int& c = parity[u[j].id()];
            c ^= 1;
            if (c) ++odd; else --odd;
            if (odd == 0 && !(i == 0 && j == n - 1)) return false;
        }
    }
    return true;
}

namespace {

Interval find_interval(const LegalString& u, int id) {
    std::size_t found = 0;
    Interval iv{0, 0};
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].id() != id) continue;
        (found == 0 ? iv.start : iv.end) = i;
        if (++found == 2) return iv;
    }
    throw DomainError("identity " + std::to_string(id) + " does not occur in \"" + format_string(u) + "\"");
}

}  // namespace

bool is_positive(const LegalString& u, int id) {
    const Interval iv = find_interval(u, id);
    return u[iv.start].barred() != u[iv.end].barred();
}

Interval interval(const LegalString& u, Pointer p) { return find_interval(u, p.id()); }

bool pointers_overlap(const LegalString& u, int id1, int id2) {
    if (id1 == id2) throw DomainError("overlap needs two distinct identities, got " + std::to_string(id1) + " twice");
    const Interval a = find_interval(u, id1);
    const Interval b = find_interval(u, id2);
    return (a.start < b.start && b.start < a.end && a.end < b.end) ||
           (b.start < a.start && a.start < b.end && b.end < a.end);
}

bool all_negative(const LegalString& u) {
    std::unordered_map<int, bool> first;
    first.reserve(u.size());
    for (const Pointer& p : u) {
        auto [it, inserted] = first.try_emplace(p.id(), p.barred());
        if (!inserted && it->second != p.barred()) return false;
    }
    return true;
}

bool has_overlapping_pointers(const LegalString& u) {
    // Non-overlapping intervals nest like parentheses.
    std::vector<int> open;
    std::unordered_map<int, bool> seen;
    seen.reserve(u.size());
    for (const Pointer& p : u) {
        auto [it, inserted] = seen.try_emplace(p.id(), true);
        if (inserted) {
            open.push_back(p.id());
        } else {
            if (open.empty() || open.back() != p.id()) return true;
            open.pop_back();
        }
    }
    return false;
}

LegalString remove_pointers(const LegalString& u, const PointerIdSet& ids) {
    if (ids.empty()) return u;
    PointerString out;
    out.reserve(u.size());
    for (const Pointer& p : u) {
        if (!ids.contains(p.id())) out.push_back(p);
    }
    return LegalString::assume_legal(std::move(out));
}

std::size_t PointerStringHash::operator()(PointerView u) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const Pointer& p : u) {
        h ^= static_cast<std::size_t>(p.id()) * 2 + (p.barred() ? 1 : 0);
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace ciliate
