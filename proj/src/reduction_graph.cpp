#include "ciliate/reduction_graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "ciliate/errors.hpp"

namespace ciliate {

std::string Vertex::name() const {
    switch (kind) {
        case VertexKind::Source: return "s";
        case VertexKind::Target: return "t";
        case VertexKind::In: return "I" + std::to_string(position);
        case VertexKind::Out: return "I" + std::to_string(position) + "p";
    }
    return {};
}

ReductionGraph::ReductionGraph(std::vector<Vertex> vertices, std::vector<RealityEdge> reality,
                               std::vector<DesireEdge> desire)
    : vertices_(std::move(vertices)), reality_(std::move(reality)), desire_(std::move(desire)),
      links_(vertices_.size()), flags_(vertices_.size(), 0), reality_at_(vertices_.size(), npos) {
    for (VertexIndex v = 0; v < vertices_.size(); ++v) {
        VertexIndex* slot = vertices_[v].kind == VertexKind::Source   ? &source_
                            : vertices_[v].kind == VertexKind::Target ? &target_
                                                                      : nullptr;
        if (!slot) continue;
        if (*slot != npos) throw StructuralError("graph has more than one " + vertices_[v].name() + " vertex");
        *slot = v;
    }
    if (source_ == npos || target_ == npos) throw StructuralError("graph lacks a source or target vertex");

    auto check = [&](VertexIndex v, bool reality_colour) {
        const char* colour = reality_colour ? "reality" : "desire";
        if (v >= vertices_.size()) throw StructuralError(std::string(colour) + " edge refers to a missing vertex");
        if ((reality_colour ? links_[v].reality : links_[v].desire) != npos) {
            throw StructuralError("vertex " + vertices_[v].name() + " meets more than one " + colour + " edge");
        }
    };
    for (VertexIndex e = 0; e < reality_.size(); ++e) {
        const RealityEdge& edge = reality_[e];
        if (edge.from == edge.to) throw StructuralError("reality edge is a loop");
        check(edge.from, true);
        check(edge.to, true);
        const std::uint8_t labelled = edge.label.empty() ? 0 : kLabelled;
        links_[edge.from].reality = edge.to;
        links_[edge.to].reality = edge.from;
        flags_[edge.from] = labelled | kForward;
        flags_[edge.to] = labelled;
        reality_at_[edge.from] = e;
        reality_at_[edge.to] = e;
    }
    for (const DesireEdge& edge : desire_) {
        if (edge.from == edge.to) throw StructuralError("desire edge is a loop");
        check(edge.from, false);
        check(edge.to, false);
        links_[edge.from].desire = edge.to;
        links_[edge.to].desire = edge.from;
    }
}

std::optional<ReductionGraph::Step> ReductionGraph::follow_reality(VertexIndex v) const {
    if (links_[v].reality == npos) return std::nullopt;
    const PointerString& label = reality_[reality_at_[v]].label;
    return Step{links_[v].reality, reality_forward(v) ? label : inverse(label)};
}

std::optional<VertexIndex> ReductionGraph::follow_desire(VertexIndex v) const {
    const VertexIndex to = links_[v].desire;
    if (to == npos) return std::nullopt;
    return to;
}

std::vector<DirectedEdge> ReductionGraph::directed_reality_edges() const {
    std::vector<DirectedEdge> out;
    out.reserve(2 * reality_.size());
    for (const RealityEdge& e : reality_) {
        out.push_back({e.from, e.label, e.to});
        out.push_back({e.to, inverse(e.label), e.from});
    }
    return out;
}

std::vector<DirectedEdge> ReductionGraph::directed_desire_edges() const {
    std::vector<DirectedEdge> out;
    out.reserve(2 * desire_.size());
    for (const DesireEdge& e : desire_) {
        out.push_back({e.from, {}, e.to});
        out.push_back({e.to, {}, e.from});
    }
    return out;
}

void ReductionGraph::validate() const {
    for (VertexIndex v = 0; v < vertices_.size(); ++v) {
        const Vertex& x = vertices_[v];
        if (x.labelled()) {
            if (x.label < 2) throw StructuralError("vertex " + x.name() + " has no pointer label");
            if (links_[v].reality == npos || links_[v].desire == npos) {
                throw StructuralError("vertex " + x.name() + " must meet one reality and one desire edge");
            }
        } else {
            if (x.label != 0) throw StructuralError("vertex " + x.name() + " must be unlabelled");
            if (links_[v].reality == npos || links_[v].desire != npos) {
                throw StructuralError("vertex " + x.name() + " must meet exactly one reality edge and no desire edge");
            }
        }
    }
    for (const DesireEdge& e : desire_) {
        if (vertices_[e.from].label != vertices_[e.to].label) {
            throw StructuralError("desire edge " + vertices_[e.from].name() + " -- " + vertices_[e.to].name() +
                                  " joins different labels");
        }
    }
    (void)reduct(*this);
}

ReductionGraph build_reduction_graph(const LegalString& u, const PointerIdSet& removed) {
    // Membership tables are dense arrays when identities are small, which
    // keeps construction linear without hashing.
    int max_id = 0;
    for (const Pointer& p : u) max_id = std::max(max_id, p.id());
    const bool dense = static_cast<std::size_t>(max_id) <= 4 * u.size() + 64;

    std::vector<char> present_dense;
    std::unordered_map<int, char> present_sparse;
    if (dense) {
        present_dense.assign(static_cast<std::size_t>(max_id) + 1, 0);
        for (const Pointer& p : u) present_dense[static_cast<std::size_t>(p.id())] = 1;
    } else {
        for (const Pointer& p : u) present_sparse[p.id()] = 1;
    }
    std::vector<char> in_removed_dense;
    if (dense) in_removed_dense.assign(static_cast<std::size_t>(max_id) + 1, 0);
    for (int id : removed) {
        const bool present = dense ? id <= max_id && present_dense[static_cast<std::size_t>(id)]
                                   : present_sparse.contains(id);
        if (!present) {
            throw DomainError("identity " + std::to_string(id) + " is not in dom(u) for \"" + format_string(u) + "\"");
        }
        if (dense) in_removed_dense[static_cast<std::size_t>(id)] = 1;
    }
    auto kept = [&](int id) {
        return dense ? in_removed_dense[static_cast<std::size_t>(id)] == 0 : !removed.contains(id);
    };

    std::size_t n = 0;
    for (const Pointer& p : u) n += kept(p.id()) ? 1 : 0;

    std::vector<Vertex> vertices;
    vertices.reserve(2 * n + 2);
    vertices.push_back({VertexKind::Source, 0, 0});
    vertices.push_back({VertexKind::Target, 0, 0});
    auto in_vertex = [](std::size_t i) { return static_cast<VertexIndex>(2 * i); };       // I_i, i >= 1
    auto out_vertex = [](std::size_t i) { return static_cast<VertexIndex>(2 * i + 1); };  // I'_i

    std::vector<RealityEdge> reality;
    reality.reserve(n + 1);
    std::vector<DesireEdge> desire;
    desire.reserve(n);

    // First occurrence per identity: 1-based kept index shifted left once, low bit = barred.
    std::vector<std::uint32_t> first_dense;
    std::unordered_map<int, std::uint32_t> first_sparse;
    if (dense) {
        first_dense.assign(static_cast<std::size_t>(max_id) + 1, 0);
    } else {
        first_sparse.reserve(n);
    }

    // Each label is copied in one piece once the next kept pointer is seen.
    auto segment_start = u.begin();
    VertexIndex previous = 0;  // s
    std::size_t i = 0;
    for (auto it = u.begin(); it != u.end(); ++it) {
        const Pointer& p = *it;
        if (!kept(p.id())) continue;
        ++i;
        vertices.push_back({VertexKind::In, static_cast<std::uint32_t>(i), p.id()});
        vertices.push_back({VertexKind::Out, static_cast<std::uint32_t>(i), p.id()});
        reality.push_back({previous, PointerString(segment_start, it), in_vertex(i)});
        segment_start = it + 1;
        previous = out_vertex(i);

        std::uint32_t& first = dense ? first_dense[static_cast<std::size_t>(p.id())] : first_sparse[p.id()];
        if (first == 0) {
            first = static_cast<std::uint32_t>(i << 1 | (p.barred() ? 1 : 0));
            continue;
        }
        const std::size_t j = first >> 1;  // earlier occurrence, j < i
        if ((first & 1) == (p.barred() ? 1u : 0u)) {
            desire.push_back({out_vertex(j), in_vertex(i)});
            desire.push_back({in_vertex(j), out_vertex(i)});
        } else {
            desire.push_back({in_vertex(j), in_vertex(i)});
            desire.push_back({out_vertex(j), out_vertex(i)});
        }
    }
    reality.push_back({previous, PointerString(segment_start, u.end()), 1});  // to t
    return ReductionGraph(std::move(vertices), std::move(reality), std::move(desire));
}

namespace {

// Walks a component alternating colours, starting at `start` and leaving along
// `first_reality ? reality : desire`. Stops on return to `start` or at a dead end.
// on_edge(from, to, reality) sees every traversed edge.
template <class F>
void walk_alternating(const ReductionGraph& g, VertexIndex start, bool first_reality, F&& on_edge) {
    VertexIndex v = start;
    bool reality = first_reality;
    const std::size_t limit = g.vertices().size() + 1;
    for (std::size_t steps = 0; steps < limit; ++steps) {
        const VertexIndex next = reality ? g.reality_neighbour(v) : g.desire_neighbour(v);
        if (next == ReductionGraph::npos) return;
        on_edge(v, next, reality);
        v = next;
        reality = !reality;
        if (v == start) return;
    }
    throw StructuralError("alternating walk does not terminate");
}

// Appends the label of the reality edge at a vertex, read away from it.
void append_reality_label(PointerString& out, const ReductionGraph& g, VertexIndex v) {
    if (!g.reality_labelled(v)) return;
    const PointerString& label = g.reality_edges()[g.reality_edge_at(v)].label;
    if (g.reality_forward(v)) {
        append(out, label);
    } else {
        for (auto it = label.rbegin(); it != label.rend(); ++it) out.push_back(it->bar());
    }
}

}  // namespace

PointerString reduct(const ReductionGraph& g) {
    PointerString out;
    VertexIndex last = g.source();
    walk_alternating(g, g.source(), true, [&](VertexIndex from, VertexIndex to, bool reality) {
        if (reality) append_reality_label(out, g, from);
        last = to;
    });
    if (last != g.target()) throw StructuralError("alternating walk from s does not reach t");
    return out;
}

ComponentSummary components(const ReductionGraph& g) {
    ComponentSummary summary;
    const std::size_t nv = g.vertices().size();
    std::vector<char> seen(nv, 0);

    auto trace = [&](VertexIndex start, bool linear) {
        Component c;
        c.linear = linear;
        c.vertices.push_back(start);
        seen[start] = 1;
        walk_alternating(g, start, true, [&](VertexIndex from, VertexIndex to, bool reality) {
            if (reality && g.reality_labelled(from)) c.reality_labels_empty = false;
            if (to != start) {
                c.vertices.push_back(to);
                seen[to] = 1;
            }
        });
        return c;
    };

    Component linear = trace(g.source(), true);
    if (!seen[g.target()]) throw StructuralError("s and t are not in one component");
    summary.components.push_back(std::move(linear));
    for (VertexIndex v = 0; v < nv; ++v) {
        if (seen[v]) continue;
        summary.components.push_back(trace(v, false));
        ++summary.count_cyclic;
    }
    summary.count_total = summary.components.size();
    return summary;
}

std::size_t cyclic_component_count(const ReductionGraph& g) { return components(g).count_cyclic; }

std::string format_components(const ReductionGraph& g) {
    std::string out;
    for (const Component& c : components(g).components) {
        out += c.linear ? "linear:" : "cyclic:";
        for (VertexIndex v : c.vertices) {
            const Vertex& x = g.vertices()[v];
            if (x.labelled()) out += ' ' + std::to_string(x.label);
        }
        out += '\n';
    }
    return out;
}

ReductionGraph reduction_function(const ReductionGraph& g, int label) {
    const auto& vs = g.vertices();
    auto hit = [&](VertexIndex v) { return vs[v].labelled() && vs[v].label == label; };

    std::vector<VertexIndex> remap(vs.size(), ReductionGraph::npos);
    std::vector<Vertex> vertices;
    bool any = false;
    for (VertexIndex v = 0; v < vs.size(); ++v) {
        if (hit(v)) {
            any = true;
            continue;
        }
        remap[v] = static_cast<VertexIndex>(vertices.size());
        vertices.push_back(vs[v]);
    }
    if (!any) throw DomainError("no vertex carries label " + std::to_string(label));

    std::vector<RealityEdge> reality;
    for (const RealityEdge& e : g.reality_edges()) {
        if (!hit(e.from) && !hit(e.to)) reality.push_back({remap[e.from], e.label, remap[e.to]});
    }
    std::vector<DesireEdge> desire;
    for (const DesireEdge& e : g.desire_edges()) {
        if (!hit(e.from) && !hit(e.to)) desire.push_back({remap[e.from], remap[e.to]});
    }

    // Merged edges: from each surviving vertex whose reality edge enters the
    // label, follow reality/desire alternately across labelled vertices until
    // a surviving vertex is reached. Each walk is found from both ends; keep
    // the copy starting at the smaller index.
    for (VertexIndex x = 0; x < vs.size(); ++x) {
        if (hit(x)) continue;
        auto step = g.follow_reality(x);
        if (!step || !hit(step->to)) continue;
        PointerString merged = std::move(step->label);
        VertexIndex v = step->to;
        std::size_t guard = 0;
        while (hit(v)) {
            if (++guard > vs.size()) throw StructuralError("merged walk does not terminate");
            const auto d = g.follow_desire(v);
            if (!d) throw StructuralError("vertex " + vs[v].name() + " lacks a desire edge");
            auto r = g.follow_reality(*d);
            if (!r) throw StructuralError("vertex " + vs[*d].name() + " lacks a reality edge");
            append(merged, r->label);
            v = r->to;
        }
        if (x <= v) reality.push_back({remap[x], std::move(merged), remap[v]});
    }
    return ReductionGraph(std::move(vertices), std::move(reality), std::move(desire));
}

namespace {

constexpr std::int64_t kSourceToken = -1;
constexpr std::int64_t kTargetToken = -2;
constexpr std::int64_t kRealityToken = -3;
constexpr std::int64_t kDesireToken = -4;

std::int64_t vertex_token(const Vertex& v) {
    if (v.kind == VertexKind::Source) return kSourceToken;
    if (v.kind == VertexKind::Target) return kTargetToken;
    return v.label;
}

void push_label(std::vector<std::int64_t>& out, PointerView label) {
    out.push_back(static_cast<std::int64_t>(label.size()));
    for (const Pointer& p : label) out.push_back(2 * static_cast<std::int64_t>(p.id()) + (p.barred() ? 1 : 0));
}

std::vector<std::int64_t> walk_word(const ReductionGraph& g, VertexIndex start, bool first_reality, EdgeLabels mode) {
    std::vector<std::int64_t> word{vertex_token(g.vertices()[start])};
    PointerString label;
    walk_alternating(g, start, first_reality, [&](VertexIndex from, VertexIndex to, bool reality) {
        word.push_back(reality ? kRealityToken : kDesireToken);
        if (reality && mode == EdgeLabels::Compare) {
            label.clear();
            append_reality_label(label, g, from);
            push_label(word, label);
        }
        word.push_back(vertex_token(g.vertices()[to]));
    });
    return word;
}

}  // namespace

std::vector<std::vector<std::int64_t>> canonical_form(const ReductionGraph& g, EdgeLabels mode) {
    const ComponentSummary summary = components(g);
    std::vector<std::vector<std::int64_t>> form;
    form.push_back(walk_word(g, g.source(), true, mode));
    std::vector<std::vector<std::int64_t>> cycles;
    for (const Component& c : summary.components) {
        if (c.linear) continue;
        std::vector<std::int64_t> best;
        for (VertexIndex v : c.vertices) {
            for (bool first_reality : {true, false}) {
                auto w = walk_word(g, v, first_reality, mode);
                if (best.empty() || w < best) best = std::move(w);
            }
        }
        cycles.push_back(std::move(best));
    }
    std::sort(cycles.begin(), cycles.end());
    form.insert(form.end(), std::make_move_iterator(cycles.begin()), std::make_move_iterator(cycles.end()));
    return form;
}

bool graphs_isomorphic(const ReductionGraph& a, const ReductionGraph& b, EdgeLabels mode) {
    if (a.vertices().size() != b.vertices().size() || a.reality_edges().size() != b.reality_edges().size() ||
        a.desire_edges().size() != b.desire_edges().size()) {
        return false;
    }
    return canonical_form(a, mode) == canonical_form(b, mode);
}

std::string export_dot(const ReductionGraph& g) {
    const auto& vs = g.vertices();
    std::vector<VertexIndex> order(vs.size());
    std::iota(order.begin(), order.end(), VertexIndex{0});
    auto rank = [](const Vertex& v) { return static_cast<int>(v.kind); };
    std::stable_sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) {
        if (rank(vs[a]) != rank(vs[b])) return rank(vs[a]) < rank(vs[b]);
        return vs[a].position < vs[b].position;
    });

    std::string out = "graph reduction_graph {\n";
    for (VertexIndex v : order) {
        const Vertex& x = vs[v];
        const std::string text = x.labelled() ? std::to_string(x.label) : x.name();
        out += "  " + x.name() + " [label=\"" + text + "\"];\n";
    }
    for (const RealityEdge& e : g.reality_edges()) {
        out += "  " + vs[e.from].name() + " -- " + vs[e.to].name() + " [label=\"" + format_string(e.label) +
               "\", style=solid];\n";
    }
    for (const DesireEdge& e : g.desire_edges()) {
        out += "  " + vs[e.from].name() + " -- " + vs[e.to].name() + " [style=dashed];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace ciliate
