#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ciliate {

/// A pointer: an unbarred identity >= 2 plus an orientation.
class Pointer {
public:
    /// Throws ValidationError when id < 2.
    Pointer(int id, bool barred = false);

    int id() const noexcept { return id_; }
    bool barred() const noexcept { return barred_; }

    Pointer bar() const noexcept { return Pointer(id_, !barred_, Unchecked{}); }

    friend bool operator==(const Pointer&, const Pointer&) = default;
    friend auto operator<=>(const Pointer&, const Pointer&) = default;

private:
    struct Unchecked {};
    Pointer(int id, bool barred, Unchecked) noexcept : id_(id), barred_(barred) {}

    int id_;
    bool barred_;
};

/// Raw string over the pointer alphabet; the empty vector is the empty string.
using PointerString = std::vector<Pointer>;
using PointerView = std::span<const Pointer>;

/// Set of unbarred pointer identities.
using PointerIdSet = std::set<int>;

/// A string in which every identity occurs exactly twice, counting both orientations.
class LegalString {
public:
    LegalString() = default;
    /// Throws ValidationError if `symbols` is not legal.
    explicit LegalString(PointerString symbols);

    /// For results of operations that preserve legality by construction.
    static LegalString assume_legal(PointerString symbols) {
        LegalString s;
        s.symbols_ = std::move(symbols);
        return s;
    }

    const PointerString& symbols() const noexcept { return symbols_; }
    PointerView view() const noexcept { return symbols_; }
    operator PointerView() const noexcept { return symbols_; }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const Pointer& operator[](std::size_t i) const { return symbols_[i]; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    friend bool operator==(const LegalString&, const LegalString&) = default;
    friend auto operator<=>(const LegalString&, const LegalString&) = default;

private:
    PointerString symbols_;
};

/// Inclusive 0-based positions of the two occurrences of an identity.
struct Interval {
    std::size_t start;
    std::size_t end;
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Text format: whitespace separated signed integers, "-k" is the barred pointer k.
PointerString parse_string(std::string_view text);
std::string format_string(PointerView u);
std::string format_pointer(Pointer p);

/// Parses and checks legality in one go.
LegalString parse_legal(std::string_view text);

/// Comma separated identity list, e.g. "5,6,7,8". Empty text is the empty set.
PointerIdSet parse_id_set(std::string_view text);
std::string format_id_set(const PointerIdSet& ids);

PointerString inverse(PointerView u);
PointerIdSet domain(PointerView u);
bool is_legal(PointerView u);

/// Positions of both occurrences of every identity, keyed by identity.
std::map<int, Interval> occurrence_map(const LegalString& u);

/// No proper nonempty substring of `u` is legal. Throws PreconditionError on the empty string.
bool is_elementary(const LegalString& u);

/// Both orientations of `id` occur. Throws DomainError when id is not in dom(u).
bool is_positive(const LegalString& u, int id);

Interval interval(const LegalString& u, Pointer p);

/// Strict interleaving of the two intervals. Throws DomainError for absent or equal identities.
bool pointers_overlap(const LegalString& u, int id1, int id2);

/// Every pointer of `u` is negative.
bool all_negative(const LegalString& u);

/// Some pair of pointers overlaps in `u`. Linear: a stack scan that only ever closes the top interval.
bool has_overlapping_pointers(const LegalString& u);

/// Erases every occurrence of the identities in `ids`; absent identities erase nothing.
LegalString remove_pointers(const LegalString& u, const PointerIdSet& ids);

/// Concatenation helper used by the rules and tests.
inline void append(PointerString& out, PointerView part) {
    out.insert(out.end(), part.begin(), part.end());
}

struct PointerStringHash {
    std::size_t operator()(PointerView u) const noexcept;
    std::size_t operator()(const PointerString& u) const noexcept { return (*this)(PointerView(u)); }
    std::size_t operator()(const LegalString& u) const noexcept { return (*this)(u.view()); }
};

}  // namespace ciliate
