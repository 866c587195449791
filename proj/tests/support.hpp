#pragma once

// Generators and independent brute-force oracles shared by the test suites.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ciliate/pattern.hpp"
#include "ciliate/pointer.hpp"

namespace ciliate::testing {

inline LegalString L(std::string_view text) { return parse_legal(text); }
inline PointerString P(std::string_view text) { return parse_string(text); }

/// Random legal string over identities 2..k+1 with random positions and orientations.
inline LegalString random_legal(std::mt19937& rng, int k) {
    PointerString s;
    for (int id = 2; id < k + 2; ++id) {
        s.emplace_back(id);
        s.emplace_back(id);
    }
    std::shuffle(s.begin(), s.end(), rng);
    std::bernoulli_distribution coin(0.5);
    for (Pointer& p : s) {
        if (coin(rng)) p = p.bar();
    }
    return LegalString(std::move(s));
}

/// Same, with a random number of identities in [lo, hi].
inline LegalString random_legal(std::mt19937& rng, int lo, int hi) {
    return random_legal(rng, std::uniform_int_distribution<int>(lo, hi)(rng));
}

/// Every arrangement of two occurrences of each identity in `ids`, each occurrence in both orientations.
inline void for_each_legal(const std::vector<int>& ids, const std::function<void(const LegalString&)>& f) {
    std::vector<int> multiset;
    for (int id : ids) multiset.insert(multiset.end(), {id, id});
    std::sort(multiset.begin(), multiset.end());
    const std::size_t n = multiset.size();
    do {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            PointerString s;
            for (std::size_t i = 0; i < n; ++i) s.emplace_back(multiset[i], ((mask >> i) & 1u) != 0);
            f(LegalString::assume_legal(std::move(s)));
        }
    } while (std::next_permutation(multiset.begin(), multiset.end()));
}

/// Every legal string whose domain is a subset of {2, ..., max_id}.
inline void for_each_legal_up_to(int max_id, const std::function<void(const LegalString&)>& f) {
    const int k = max_id - 1;
    for (unsigned subset = 0; subset < (1u << k); ++subset) {
        std::vector<int> ids;
        for (int b = 0; b < k; ++b) {
            if (subset & (1u << b)) ids.push_back(b + 2);
        }
        for_each_legal(ids, f);
    }
}

/// Legal strings with exactly k identities named 2, 3, ... in order of first
/// occurrence (one representative per renaming class), all orientations.
inline void for_each_canonical_legal(int k, const std::function<void(const LegalString&)>& f) {
    std::vector<int> ids(static_cast<std::size_t>(2 * k), 0);
    std::vector<int> count(static_cast<std::size_t>(k) + 2, 0);
    std::function<void(std::size_t, int)> place = [&](std::size_t pos, int next_new) {
        if (pos == ids.size()) {
            for (std::size_t mask = 0; mask < (std::size_t{1} << ids.size()); ++mask) {
                PointerString s;
                for (std::size_t i = 0; i < ids.size(); ++i) s.emplace_back(ids[i], ((mask >> i) & 1u) != 0);
                f(LegalString::assume_legal(std::move(s)));
            }
            return;
        }
        for (int id = 2; id < next_new; ++id) {
            if (count[static_cast<std::size_t>(id)] == 1) {
                ids[pos] = id;
                count[static_cast<std::size_t>(id)] = 2;
                place(pos + 1, next_new);
                count[static_cast<std::size_t>(id)] = 1;
            }
        }
        if (next_new < k + 2) {
            ids[pos] = next_new;
            count[static_cast<std::size_t>(next_new)] = 1;
            place(pos + 1, next_new + 1);
            count[static_cast<std::size_t>(next_new)] = 0;
        }
    };
    place(0, 2);
}

/// Cubic scan: some proper nonempty window is legal.
inline bool is_elementary_oracle(const LegalString& u) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j <= u.size(); ++j) {
            if (j - i == u.size()) continue;
            if (is_legal(PointerView(u.symbols()).subspan(i, j - i))) return false;
        }
    }
    return true;
}

/// All realistic strings for a given kappa, by encoding every signed permutation.
inline std::set<PointerString> all_realistic(int kappa) {
    std::set<PointerString> out;
    std::vector<int> perm(static_cast<std::size_t>(kappa));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (unsigned mask = 0; mask < (1u << kappa); ++mask) {
            MicronuclearPattern pattern;
            pattern.kappa = kappa;
            for (int i = 0; i < kappa; ++i) pattern.mds.push_back({perm[static_cast<std::size_t>(i)], ((mask >> i) & 1u) != 0});
            out.insert(encode_pattern(pattern).symbols());
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Exhaustive realizability: every bijection dom(u) -> {2..|dom|+1} with every flip vector.
inline bool is_realizable_oracle(const LegalString& u) {
    const PointerIdSet dom = domain(u);
    if (dom.empty()) return false;
    const int n = static_cast<int>(dom.size());
    static std::map<int, std::set<PointerString>> cache;
    auto it = cache.find(n + 1);
    if (it == cache.end()) it = cache.emplace(n + 1, all_realistic(n + 1)).first;
    const auto& targets = it->second;
    std::vector<int> src(dom.begin(), dom.end());
    std::vector<int> image(src.size());
    std::iota(image.begin(), image.end(), 2);
    do {
        for (unsigned flips = 0; flips < (1u << n); ++flips) {
            PointerString renamed;
            for (const Pointer& p : u) {
                const auto k = static_cast<std::size_t>(std::lower_bound(src.begin(), src.end(), p.id()) - src.begin());
                const bool flip = ((flips >> k) & 1u) != 0;
                renamed.emplace_back(image[k], p.barred() != flip);
            }
            if (targets.contains(renamed)) return true;
        }
    } while (std::next_permutation(image.begin(), image.end()));
    return false;
}

}  // namespace ciliate::testing
