#include "core/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace dfl {

namespace {

void check_node(const Graph& g, std::uint32_t i) {
    if (i >= g.node_count()) {
        throw Error(ErrorCode::NodeOutOfRange,
                    "node " + std::to_string(i) + " not in 0.." + std::to_string(g.node_count() - 1));
    }
}

}  // namespace

bool Graph::has_edge(std::uint32_t i, std::uint32_t j) const {
    check_node(*this, i);
    check_node(*this, j);
    const auto& a = adj_[i];
    return std::binary_search(a.begin(), a.end(), j);
}

void Graph::add_edge(std::uint32_t i, std::uint32_t j) {
    check_node(*this, i);
    check_node(*this, j);
    if (i == j) throw Error(ErrorCode::InvalidParams, "self-loop at node " + std::to_string(i));
    if (has_edge(i, j)) {
        throw Error(ErrorCode::InvalidParams,
                    "duplicate edge " + std::to_string(i) + " " + std::to_string(j));
    }
    auto insert_sorted = [](std::vector<std::uint32_t>& v, std::uint32_t x) {
        v.insert(std::upper_bound(v.begin(), v.end(), x), x);
    };
    insert_sorted(adj_[i], j);
    insert_sorted(adj_[j], i);
    ++edge_count_;
}

void Graph::remove_edge(std::uint32_t i, std::uint32_t j) {
    if (!has_edge(i, j)) {
        throw Error(ErrorCode::InvalidParams,
                    "no edge " + std::to_string(i) + " " + std::to_string(j));
    }
    auto erase_sorted = [](std::vector<std::uint32_t>& v, std::uint32_t x) {
        v.erase(std::lower_bound(v.begin(), v.end(), x));
    };
    erase_sorted(adj_[i], j);
    erase_sorted(adj_[j], i);
    --edge_count_;
}

const std::vector<std::uint32_t>& Graph::neighbors(std::uint32_t i) const {
    check_node(*this, i);
    return adj_[i];
}

std::uint32_t Graph::degree(std::uint32_t i) const {
    check_node(*this, i);
    return static_cast<std::uint32_t>(adj_[i].size());
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(edge_count_);
    for (std::uint32_t i = 0; i < node_count(); ++i) {
        for (std::uint32_t j : adj_[i]) {
            if (i < j) out.emplace_back(i, j);
        }
    }
    return out;  // already ascending lexicographic: i ascending, adj sorted
}

bool Graph::operator==(const Graph& other) const {
    return adj_ == other.adj_;
}

std::pair<Graph, RewireLog> generate_small_world(const SmallWorldParams& params) {
    const auto [n, k, beta, seed] = params;
    if (n == 0 || k < 2 || k % 2 != 0 || k >= n) {
        throw Error(ErrorCode::InvalidParams,
                    "small-world requires even k with 2 <= k < n (got n=" + std::to_string(n) +
                        ", k=" + std::to_string(k) + ")");
    }
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw Error(ErrorCode::InvalidParams, "beta must be in [0,1]");
    }

    Graph g(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 1; j <= k / 2; ++j) {
            g.add_edge(i, (i + j) % n);
        }
    }

    RewireLog log;
    Rng rng(seed);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 1; j <= k / 2; ++j) {
            const std::uint32_t old_endpoint = (i + j) % n;
            if (rng.uniform01() >= beta) continue;
            if (g.degree(i) == n - 1) continue;  // saturated, no valid target
            std::uint32_t target;
            do {
                target = static_cast<std::uint32_t>(rng.below(n));
            } while (target == i || g.has_edge(i, target));
            g.remove_edge(i, old_endpoint);
            g.add_edge(i, target);
            log.push_back({i, old_endpoint, target});
        }
    }
    return {std::move(g), std::move(log)};
}

Graph generate_scale_free(const ScaleFreeParams& params) {
    const auto [n, m0, m, seed] = params;
    if (m < 1 || m > m0 || m0 > n || n == 0) {
        throw Error(ErrorCode::InvalidParams,
                    "scale-free requires 1 <= m <= m0 <= n (got n=" + std::to_string(n) +
                        ", m0=" + std::to_string(m0) + ", m=" + std::to_string(m) + ")");
    }

    Graph g(n);
    // degree-proportional sampling pool: node id appears once per incident edge
    std::vector<std::uint32_t> pool;
    pool.reserve(static_cast<std::size_t>(m0) * (m0 - 1) + 2ull * m * (n - m0));
    for (std::uint32_t i = 0; i < m0; ++i) {
        for (std::uint32_t j = i + 1; j < m0; ++j) {
            g.add_edge(i, j);
            pool.push_back(i);
            pool.push_back(j);
        }
    }

    Rng rng(seed);
    std::vector<std::uint32_t> chosen;
    for (std::uint32_t v = m0; v < n; ++v) {
        chosen.clear();
        // draws see the degrees as of the previous node's completion
        while (chosen.size() < m) {
            const std::uint32_t t = pool[rng.below(pool.size())];
            if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
                chosen.push_back(t);
            }
        }
        for (std::uint32_t t : chosen) {
            g.add_edge(v, t);
            pool.push_back(t);
            pool.push_back(v);
        }
    }
    return g;
}

Graph make_complete(std::uint32_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidParams, "complete graph requires n >= 1");
    Graph g(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

bool is_connected(const Graph& g) {
    const std::uint32_t n = g.node_count();
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    std::deque<std::uint32_t> queue{0};
    seen[0] = true;
    std::uint32_t reached = 1;
    while (!queue.empty()) {
        const std::uint32_t i = queue.front();
        queue.pop_front();
        for (std::uint32_t j : g.neighbors(i)) {
            if (!seen[j]) {
                seen[j] = true;
                ++reached;
                queue.push_back(j);
            }
        }
    }
    return reached == n;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> degree_sequence(const Graph& g) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> seq;
    seq.reserve(g.node_count());
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        seq.emplace_back(i, g.degree(i));
    }
    std::stable_sort(seq.begin(), seq.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return seq;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "n " << g.node_count() << "\n";
    for (const auto& [i, j] : g.edges()) {
        out << i << " " << j << "\n";
    }
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) parse_fail(1, "missing header");
    ++line_no;
    std::istringstream header(line);
    std::string tag;
    std::uint32_t n = 0;
    if (!(header >> tag >> n) || tag != "n" || (header >> tag)) {
        parse_fail(line_no, "expected header 'n <count>'");
    }

    Graph g(n);
    std::pair<std::uint32_t, std::uint32_t> prev{0, 0};
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        std::uint32_t i = 0, j = 0;
        std::string extra;
        if (!(row >> i >> j) || (row >> extra)) parse_fail(line_no, "expected 'i j'");
        if (i >= n || j >= n) parse_fail(line_no, "endpoint out of range");
        if (i == j) parse_fail(line_no, "self-loop");
        if (i > j) parse_fail(line_no, "expected i < j");
        if (g.has_edge(i, j)) parse_fail(line_no, "duplicate edge");
        if (!first && std::make_pair(i, j) <= prev) parse_fail(line_no, "edges not in ascending order");
        g.add_edge(i, j);
        prev = {i, j};
        first = false;
    }
    return g;
}

}  // namespace dfl
