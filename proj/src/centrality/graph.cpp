#include <skrank/centrality/graph.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include <skrank/core/error.hpp>

namespace skrank {

namespace {

std::uint64_t pair_key(Graph::Node u, Graph::Node v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace

Graph::Node Graph::Builder::add_node(const CandidateId &id) {
    auto [it, inserted] = index_.emplace(id, static_cast<Node>(names_.size()));
    if (inserted) {
        names_.push_back(id);
    }
    return it->second;
}

void Graph::Builder::add_edge(const CandidateId &src, const CandidateId &dst, double weight) {
    if (!std::isfinite(weight) || weight <= 0.0) {
        throw InvalidArgument("edge weight must be positive and finite");
    }
    ++stats_.edges_read;
    const Node u = add_node(src);
    const Node v = add_node(dst);
    if (u == v) {
        ++stats_.self_loops_dropped;
        return;
    }
    auto [it, inserted] = edges_.emplace(pair_key(u, v), mode_ == ParallelEdges::collapse ? 1.0 : weight);
    if (inserted) {
        edge_order_.push_back(it->first);
    } else {
        ++stats_.parallel_merged;
        if (mode_ == ParallelEdges::sum) {
            it->second += weight;
        }
    }
}

Graph Graph::Builder::build() && {
    Graph g;
    g.names_ = std::move(names_);
    g.index_ = std::move(index_);
    g.edges_.reserve(edge_order_.size());
    for (auto key : edge_order_) {
        g.edges_.push_back({static_cast<Node>(key >> 32), static_cast<Node>(key & 0xFFFFFFFFULL), edges_.at(key)});
    }
    g.index_arcs();
    return g;
}

void Graph::index_arcs() {
    const std::size_t n = names_.size();
    out_offsets_.assign(n + 1, 0);
    in_offsets_.assign(n + 1, 0);
    for (const auto &e : edges_) {
        ++out_offsets_[e.src + 1];
        ++in_offsets_[e.dst + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        out_offsets_[i + 1] += out_offsets_[i];
        in_offsets_[i + 1] += in_offsets_[i];
    }
    out_arcs_.resize(edges_.size());
    in_arcs_.resize(edges_.size());
    std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
    std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
    for (const auto &e : edges_) {
        out_arcs_[out_fill[e.src]++] = {e.dst, e.weight};
        in_arcs_[in_fill[e.dst]++] = {e.src, e.weight};
    }
}

std::optional<Graph::Node> Graph::find(const CandidateId &id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::span<const Graph::Arc> Graph::out_arcs(Node u) const {
    return std::span<const Arc>(out_arcs_).subspan(out_offsets_[u], out_offsets_[u + 1] - out_offsets_[u]);
}

std::span<const Graph::Arc> Graph::in_arcs(Node u) const {
    return std::span<const Arc>(in_arcs_).subspan(in_offsets_[u], in_offsets_[u + 1] - in_offsets_[u]);
}

Graph Graph::reversed() const {
    Graph g;
    g.names_ = names_;
    g.index_ = index_;
    g.edges_.reserve(edges_.size());
    for (const auto &e : edges_) {
        g.edges_.push_back({e.dst, e.src, e.weight});
    }
    g.index_arcs();
    return g;
}

Graph read_edge_list(std::istream &in, ParallelEdges mode, IngestStats *stats, const std::string &source) {
    Graph::Builder builder(mode);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::istringstream fields(line);
        std::string src, dst, weight_text, extra;
        if (!(fields >> src)) continue;
        if (!(fields >> dst)) {
            throw ParseError(source, line_no, "expected 'src<TAB>dst[<TAB>weight]'");
        }
        double weight = 1.0;
        if (fields >> weight_text) {
            auto [ptr, ec] = std::from_chars(weight_text.data(), weight_text.data() + weight_text.size(), weight);
            if (ec != std::errc() || ptr != weight_text.data() + weight_text.size() || !std::isfinite(weight) ||
                weight <= 0.0) {
                throw ParseError(source, line_no, "malformed edge weight '" + weight_text + "'");
            }
        }
        if (fields >> extra) {
            throw ParseError(source, line_no, "unexpected trailing field '" + extra + "'");
        }
        builder.add_edge(CandidateId(src), CandidateId(dst), weight);
    }
    if (stats) {
        *stats = builder.stats();
    }
    return std::move(builder).build();
}

Graph read_edge_list_file(const std::string &path, ParallelEdges mode, IngestStats *stats) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open edge list '" + path + "'");
    }
    return read_edge_list(in, mode, stats, path);
}

} // namespace skrank
