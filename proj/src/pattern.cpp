#include "ciliate/pattern.hpp"

#include <algorithm>
#include <charconv>

#include "ciliate/errors.hpp"

namespace ciliate {

void MicronuclearPattern::validate() const {
    if (kappa < 2) throw ValidationError("micronuclear pattern needs kappa >= 2, got " + std::to_string(kappa));
    if (mds.size() != static_cast<std::size_t>(kappa)) {
        throw ValidationError("micronuclear pattern has " + std::to_string(mds.size()) + " entries, expected " +
                              std::to_string(kappa));
    }
    std::vector<bool> seen(static_cast<std::size_t>(kappa) + 1, false);
    for (const Mds& m : mds) {
        if (m.index < 1 || m.index > kappa || seen[static_cast<std::size_t>(m.index)]) {
            throw ValidationError("micronuclear pattern is not a permutation of M1..M" + std::to_string(kappa));
        }
        seen[static_cast<std::size_t>(m.index)] = true;
    }
}

MicronuclearPattern parse_pattern(std::string_view text) {
    MicronuclearPattern pattern;
    std::size_t position = 1;
    std::size_t i = 0;
    auto space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (i < text.size()) {
        while (i < text.size() && space(text[i])) ++i;
        std::size_t j = i;
        while (j < text.size() && !space(text[j])) ++j;
        if (j == i) break;
        std::string_view token = text.substr(i, j - i);
        i = j;

        Mds m{0, false};
        std::string_view rest = token;
        if (!rest.empty() && rest.front() == '~') {
            m.inverted = true;
            rest.remove_prefix(1);
        }
        bool ok = rest.size() >= 2 && rest.front() == 'M';
        if (ok) {
            rest.remove_prefix(1);
            auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), m.index);
            ok = ec == std::errc{} && ptr == rest.data() + rest.size() && m.index >= 1;
        }
        if (!ok) {
            throw ParseError(std::string(token), position,
                             "invalid MDS token \"" + std::string(token) + "\" at token " +
                                 std::to_string(position) + " (expected Mi or ~Mi)");
        }
        pattern.mds.push_back(m);
        pattern.kappa = std::max(pattern.kappa, m.index);
        ++position;
    }
    pattern.validate();
    return pattern;
}

std::string format_pattern(const MicronuclearPattern& pattern) {
    std::string out;
    for (const Mds& m : pattern.mds) {
        if (!out.empty()) out += ' ';
        if (m.inverted) out += '~';
        out += 'M' + std::to_string(m.index);
    }
    return out;
}

PointerString encode_mds(Mds m, int kappa) {
    PointerString image;
    if (m.index == 1) {
        image.emplace_back(2);
    } else if (m.index == kappa) {
        image.emplace_back(kappa);
    } else {
        image.emplace_back(m.index);
        image.emplace_back(m.index + 1);
    }
    return m.inverted ? inverse(image) : image;
}

LegalString encode_pattern(const MicronuclearPattern& pattern) {
    pattern.validate();
    PointerString out;
    for (const Mds& m : pattern.mds) append(out, encode_mds(m, pattern.kappa));
    return LegalString::assume_legal(std::move(out));
}

namespace {

// Segments a string into MDS images under a partial renaming of identities.
// An entry of `rename` maps a source identity to a target identity plus a
// flag telling whether orientation flips; it may be fixed up front (realistic
// check) or filled in while matching (realizability search).
class Segmenter {
public:
    struct Renaming {
        int target = 0;  // 0 = unassigned
        bool flip = false;
    };

    Segmenter(const LegalString& u, int kappa, std::vector<int> ids)
        : u_(u), kappa_(kappa), ids_(std::move(ids)), rename_(ids_.size()),
          source_of_(static_cast<std::size_t>(kappa) + 2, -1), used_(static_cast<std::size_t>(kappa) + 1, false) {
        for (int j = 1; j <= kappa_; ++j) {
            images_.push_back(encode_mds({j, false}, kappa_));
            images_.push_back(encode_mds({j, true}, kappa_));
        }
    }

    void fix_identity() {
        for (std::size_t k = 0; k < ids_.size(); ++k) {
            rename_[k] = {ids_[k], false};
            source_of_[static_cast<std::size_t>(ids_[k])] = static_cast<int>(k);
        }
    }

    bool run() { return step(0); }
    const std::vector<Mds>& chosen() const { return chosen_; }

private:
    std::size_t slot(int id) const {
        return static_cast<std::size_t>(std::lower_bound(ids_.begin(), ids_.end(), id) - ids_.begin());
    }

    bool step(std::size_t pos) {
        if (pos == u_.size()) return chosen_.size() == static_cast<std::size_t>(kappa_);
        for (int j = 1; j <= kappa_; ++j) {
            if (used_[static_cast<std::size_t>(j)]) continue;
            for (int inv = 0; inv < 2; ++inv) {
                const PointerString& image = images_[static_cast<std::size_t>(2 * (j - 1) + inv)];
                std::vector<std::size_t> assigned;
                if (!unify(pos, image, assigned)) {
                    undo(assigned);
                    continue;
                }
                used_[static_cast<std::size_t>(j)] = true;
                chosen_.push_back({j, inv == 1});
                if (step(pos + image.size())) return true;
                chosen_.pop_back();
                used_[static_cast<std::size_t>(j)] = false;
                undo(assigned);
            }
        }
        return false;
    }

    bool unify(std::size_t pos, const PointerString& image, std::vector<std::size_t>& assigned) {
        if (pos + image.size() > u_.size()) return false;
        for (std::size_t k = 0; k < image.size(); ++k) {
            const Pointer& src = u_[pos + k];
            const Pointer& dst = image[k];
            const std::size_t s = slot(src.id());
            const bool flip = src.barred() != dst.barred();
            Renaming& r = rename_[s];
            if (r.target != 0) {
                if (r.target != dst.id() || r.flip != flip) return false;
                continue;
            }
            int& back = source_of_[static_cast<std::size_t>(dst.id())];
            if (back != -1) return false;
            r = {dst.id(), flip};
            back = static_cast<int>(s);
            assigned.push_back(s);
        }
        return true;
    }

    void undo(const std::vector<std::size_t>& assigned) {
        for (std::size_t s : assigned) {
            source_of_[static_cast<std::size_t>(rename_[s].target)] = -1;
            rename_[s] = {};
        }
    }

    const LegalString& u_;
    int kappa_;
    std::vector<int> ids_;
    std::vector<Renaming> rename_;
    std::vector<int> source_of_;
    std::vector<bool> used_;
    std::vector<PointerString> images_;
    std::vector<Mds> chosen_;
};

}  // namespace

std::optional<MicronuclearPattern> realistic_witness(const LegalString& u) {
    const PointerIdSet dom = domain(u);
    const int kappa = dom.empty() ? 2 : std::max(2, *dom.rbegin());
    // Every identity 2..kappa must occur; a gap can never be segmented.
    if (static_cast<int>(dom.size()) != kappa - 1) return std::nullopt;
    Segmenter seg(u, kappa, std::vector<int>(dom.begin(), dom.end()));
    seg.fix_identity();
    if (!seg.run()) return std::nullopt;
    return MicronuclearPattern{seg.chosen(), kappa};
}

bool is_realizable(const LegalString& u, std::size_t bound) {
    const PointerIdSet dom = domain(u);
    if (dom.size() > bound) {
        throw CapacityError("realizability search limited to " + std::to_string(bound) + " identities, string has " +
                            std::to_string(dom.size()));
    }
    if (dom.empty()) return false;
    Segmenter seg(u, static_cast<int>(dom.size()) + 1, std::vector<int>(dom.begin(), dom.end()));
    return seg.run();
}

}  // namespace ciliate
