#pragma once

#include <string>
#include <vector>

#include "gsynt/common.hpp"

namespace gsynt {

/// A finite directed graph with string-named vertices. Vertices are
/// stored in lexicographic id order, so vertex indices are canonical
/// for a given vertex set; all adjacency lists are ascending.
struct Graph {
    std::vector<std::string> ids;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in;

    int size() const { return static_cast<int>(ids.size()); }
    int index_of(const std::string& id) const;
    bool has_edge(int a, int b) const;
    std::vector<std::pair<int, int>> edge_list() const;  // sorted by (src, dst)
    int max_out_degree() const;
    int max_total_degree() const;  // in + out, the paper-style degree bound

    bool operator==(const Graph&) const = default;
};

class GraphBuilder {
public:
    GraphBuilder& vertex(const std::string& id);
    GraphBuilder& edge(const std::string& a, const std::string& b);
    Graph build() const;  // throws ValidationError on dangling endpoints / bad ids

private:
    std::vector<std::string> ids_;
    std::vector<std::pair<std::string, std::string>> edges_;
};

/// `graph` / `vertex <id>` / `edge <id> <id>` text format.
Graph parse_graph(std::string_view text);
std::string emit_graph(const Graph& g);

/// Strongly connected components of the subgraph induced by `active`
/// (Tarjan, iterative). Returns component ids, -1 for inactive vertices.
std::vector<int> scc_components(const std::vector<std::vector<int>>& adj,
                                const std::vector<char>& active);

}  // namespace gsynt
