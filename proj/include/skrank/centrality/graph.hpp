#ifndef SKRANK_CENTRALITY_GRAPH_HPP_
#define SKRANK_CENTRALITY_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <skrank/core/candidate.hpp>

namespace skrank {

/// How repeated src->dst edges are ingested.
enum class ParallelEdges {
    collapse,  // keep one edge of weight 1
    sum,       // one edge whose weight is the sum of all repeats
};

struct IngestStats {
    std::size_t edges_read = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t parallel_merged = 0;
};

/**
 * Directed graph with positive edge weights. Nodes are dense indices
 * 0..node_count()-1 mapped to candidate ids in insertion order. There are no
 * self loops and at most one edge per ordered pair.
 */
class Graph {
public:
    using Node = std::uint32_t;

    struct Edge {
        Node src;
        Node dst;
        double weight;
    };

    struct Arc {
        Node node;  // the other endpoint
        double weight;
    };

    class Builder {
    public:
        explicit Builder(ParallelEdges mode = ParallelEdges::collapse) : mode_(mode) {}

        Node add_node(const CandidateId &id);
        /// Self loops are counted and dropped. Throws InvalidArgument for a
        /// non-positive or non-finite weight.
        void add_edge(const CandidateId &src, const CandidateId &dst, double weight = 1.0);

        const IngestStats &stats() const noexcept { return stats_; }
        Graph build() &&;

    private:
        ParallelEdges mode_;
        IngestStats stats_;
        std::vector<CandidateId> names_;
        std::unordered_map<CandidateId, Node> index_;
        std::unordered_map<std::uint64_t, double> edges_;
        std::vector<std::uint64_t> edge_order_;
    };

    Graph() = default;

    std::size_t node_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const CandidateId &name(Node u) const { return names_[u]; }
    const std::vector<CandidateId> &names() const noexcept { return names_; }
    std::optional<Node> find(const CandidateId &id) const;

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Arc> out_arcs(Node u) const;
    std::span<const Arc> in_arcs(Node u) const;

    /// Same nodes, every edge reversed.
    Graph reversed() const;

private:
    void index_arcs();

    std::vector<CandidateId> names_;
    std::unordered_map<CandidateId, Node> index_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_offsets_, in_offsets_;
    std::vector<Arc> out_arcs_, in_arcs_;
};

/**
 * Edge list: one edge per line, `src<TAB>dst[<TAB>weight]`. Lines starting
 * with '#' and blank lines are ignored. Fields may also be separated by
 * spaces. Throws ParseError with the line number on malformed input.
 */
Graph read_edge_list(std::istream &in, ParallelEdges mode, IngestStats *stats = nullptr,
                     const std::string &source = "<stream>");
Graph read_edge_list_file(const std::string &path, ParallelEdges mode, IngestStats *stats = nullptr);

} // namespace skrank

#endif // SKRANK_CENTRALITY_GRAPH_HPP_
