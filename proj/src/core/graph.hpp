#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace dfl {

// Undirected simple graph over node ids 0..n-1. No self-loops, no duplicate
// edges; adjacency lists are kept sorted ascending.
class Graph {
public:
    explicit Graph(std::uint32_t n) : adj_(n) {}

    std::uint32_t node_count() const { return static_cast<std::uint32_t>(adj_.size()); }
    std::uint64_t edge_count() const { return edge_count_; }

    bool has_edge(std::uint32_t i, std::uint32_t j) const;
    void add_edge(std::uint32_t i, std::uint32_t j);
    void remove_edge(std::uint32_t i, std::uint32_t j);

    // V_i, sorted ascending. Throws NodeOutOfRange.
    const std::vector<std::uint32_t>& neighbors(std::uint32_t i) const;
    std::uint32_t degree(std::uint32_t i) const;

    // all edges as (i,j) with i<j, ascending lexicographic
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

    bool operator==(const Graph& other) const;

private:
    std::vector<std::vector<std::uint32_t>> adj_;
    std::uint64_t edge_count_ = 0;
};

struct SmallWorldParams {
    std::uint32_t n = 0;
    std::uint32_t k = 0;  // even ring-lattice degree, 2 <= k < n
    double beta = 0.0;    // rewire probability in [0,1]
    std::uint64_t seed = 0;
};

struct ScaleFreeParams {
    std::uint32_t n = 0;
    std::uint32_t m0 = 0;  // initial complete-graph size, m <= m0 <= n
    std::uint32_t m = 0;   // edges added per new node, >= 1
    std::uint64_t seed = 0;
};

struct RewireEntry {
    std::uint32_t kept_endpoint;
    std::uint32_t old_endpoint;
    std::uint32_t new_endpoint;
};

using RewireLog = std::vector<RewireEntry>;

// Watts-Strogatz: ring lattice plus per-edge far-endpoint rewiring with
// probability beta. Edge count is n*k/2 regardless of beta.
std::pair<Graph, RewireLog> generate_small_world(const SmallWorldParams& params);

// Barabasi-Albert: complete graph on the first m0 nodes, then each new node
// attaches m edges to distinct targets drawn proportionally to degree.
Graph generate_scale_free(const ScaleFreeParams& params);

// K_n
Graph make_complete(std::uint32_t n);

bool is_connected(const Graph& g);

// (node id, degree) sorted by degree descending, ties by ascending id
std::vector<std::pair<std::uint32_t, std::uint32_t>> degree_sequence(const Graph& g);

// Text format: first line "n <node count>", then one "i j" line per edge with
// i < j, ascending lexicographic order.
void write_edge_list(const Graph& g, std::ostream& out);
Graph read_edge_list(std::istream& in);

}  // namespace dfl
