#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ciliate/pointer.hpp"

namespace ciliate {

using VertexIndex = std::uint32_t;

enum class VertexKind : std::uint8_t { Source, Target, In, Out };

/// A vertex of a reduction graph. In/Out are I_i and I'_i for the i-th (1-based)
/// occurrence of a pointer outside D; `label` is that pointer's identity, 0 for s and t.
struct Vertex {
    VertexKind kind;
    std::uint32_t position = 0;
    int label = 0;

    bool labelled() const noexcept { return kind == VertexKind::In || kind == VertexKind::Out; }
    /// "s", "t", "I3" or "I3p".
    std::string name() const;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// One reality edge together with its reversal: traversing from `to` to
/// `from` reads the inverse of `label`.
struct RealityEdge {
    VertexIndex from;
    PointerString label;
    VertexIndex to;
};

/// One desire edge together with its reversal; desire edges are labelled by the empty string.
struct DesireEdge {
    VertexIndex from;
    VertexIndex to;
};

/// Directed edge of the reversal-closed edge sets.
struct DirectedEdge {
    VertexIndex from;
    PointerString label;
    VertexIndex to;
};

/// 2-edge coloured two-ended graph with reality edges (labelled by strings over
/// the kept pointers) and desire edges (unlabelled). Every vertex meets at most
/// one edge of each colour; the constructor rejects anything else.
class ReductionGraph {
public:
    static constexpr VertexIndex npos = static_cast<VertexIndex>(-1);

    /// Throws StructuralError if s or t is missing or duplicated, an edge refers
    /// to a missing vertex, or a vertex meets two edges of one colour.
    ReductionGraph(std::vector<Vertex> vertices, std::vector<RealityEdge> reality, std::vector<DesireEdge> desire);

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const std::vector<RealityEdge>& reality_edges() const noexcept { return reality_; }
    const std::vector<DesireEdge>& desire_edges() const noexcept { return desire_; }
    VertexIndex source() const noexcept { return source_; }
    VertexIndex target() const noexcept { return target_; }

    /// Neighbours of v along each colour, or npos.
    VertexIndex reality_neighbour(VertexIndex v) const { return links_[v].reality; }
    VertexIndex desire_neighbour(VertexIndex v) const { return links_[v].desire; }
    /// Index into reality_edges(), or npos.
    VertexIndex reality_edge_at(VertexIndex v) const { return reality_at_[v]; }
    /// Whether v is the `from` end of its reality edge, and whether that edge has a nonempty label.
    bool reality_forward(VertexIndex v) const { return flags_[v] & kForward; }
    bool reality_labelled(VertexIndex v) const { return flags_[v] & kLabelled; }

    /// Follows the reality edge at v: the other endpoint and the label read in that direction.
    struct Step {
        VertexIndex to;
        PointerString label;
    };
    std::optional<Step> follow_reality(VertexIndex v) const;
    std::optional<VertexIndex> follow_desire(VertexIndex v) const;

    /// Both directions of every edge, as the edge sets are formally defined.
    std::vector<DirectedEdge> directed_reality_edges() const;
    std::vector<DirectedEdge> directed_desire_edges() const;

    /// Checks every reduction-graph invariant; throws StructuralError naming the first violation.
    void validate() const;

private:
    std::vector<Vertex> vertices_;
    std::vector<RealityEdge> reality_;
    std::vector<DesireEdge> desire_;
    struct Link {
        VertexIndex reality = npos;
        VertexIndex desire = npos;
    };
    static constexpr std::uint8_t kForward = 1;
    static constexpr std::uint8_t kLabelled = 2;

    // Walks touch links_ and flags_ only; reality_at_ is needed just for labels.
    std::vector<Link> links_;
    std::vector<std::uint8_t> flags_;
    std::vector<VertexIndex> reality_at_;
    VertexIndex source_ = npos;
    VertexIndex target_ = npos;
};

/// R_{u,D}. Linear in |u|. Throws DomainError unless D is a subset of dom(u).
ReductionGraph build_reduction_graph(const LegalString& u, const PointerIdSet& removed);

struct Component {
    /// Vertices in traversal order: from s for the linear component, otherwise
    /// from the smallest vertex index leaving along its reality edge.
    std::vector<VertexIndex> vertices;
    bool linear = false;
    bool reality_labels_empty = true;
};

struct ComponentSummary {
    std::size_t count_total = 0;
    std::size_t count_cyclic = 0;
    /// Linear component first, then cyclic components by smallest vertex index.
    std::vector<Component> components;
};

ComponentSummary components(const ReductionGraph& g);
std::size_t cyclic_component_count(const ReductionGraph& g);

/// One line per component: "linear:" or "cyclic:" followed by the vertex labels in traversal order.
std::string format_components(const ReductionGraph& g);

/// Label of the alternating walk from s to t. Throws StructuralError if the walk does not reach t.
PointerString reduct(const ReductionGraph& g);

/// rf_label: drops every vertex with that label and merges each maximal
/// alternating walk across them into one reality edge. Throws DomainError
/// when no vertex carries the label.
ReductionGraph reduction_function(const ReductionGraph& g, int label);

enum class EdgeLabels { Compare, Ignore };

/// Canonical form: the linear component read from s, then the sorted minimal
/// rotation/reflection words of the cyclic components.
std::vector<std::vector<std::int64_t>> canonical_form(const ReductionGraph& g, EdgeLabels mode = EdgeLabels::Compare);

/// Isomorphism preserving s, t, vertex labels, edge labels and edge colours.
bool graphs_isomorphic(const ReductionGraph& a, const ReductionGraph& b, EdgeLabels mode = EdgeLabels::Compare);

/// Graphviz text: one undirected edge per reversal pair, reality solid, desire dashed.
std::string export_dot(const ReductionGraph& g);

}  // namespace ciliate
