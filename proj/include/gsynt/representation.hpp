#pragma once

#include <string>
#include <vector>

#include "gsynt/arena.hpp"
#include "gsynt/graph.hpp"
#include "gsynt/solve.hpp"

namespace gsynt::repr {

/// d tagged copies of a base graph: vertices `<id>@<k>`, edges only
/// inside a copy. P_k membership and the same-base relation are exposed
/// as queries on the vertex names.
struct CopiedGraph {
    Graph base;
    int copy_count = 0;
    Graph product;

    int product_vertex(int base_vertex, int copy) const;
    int copy_of(int product_vertex) const;
    int base_of(int product_vertex) const;
    bool in_copy(int product_vertex, int k) const { return copy_of(product_vertex) == k; }
    bool same_base(int v, int w) const { return base_of(v) == base_of(w); }
};

CopiedGraph copy_graph(const Graph& g, int d);

/// The i-th isomorphic copy, with the base ids restored.
Graph project(const CopiedGraph& c, int i);

/// A graph G embedded in a bigger graph: the designated G-vertices plus
/// proper vertices; G's edges are recovered as paths through proper
/// vertices only.
struct GraphRepresentation {
    Graph big;
    std::vector<char> is_g_vertex;  // by big index

    std::vector<int> g_vertices() const;
};

GraphRepresentation make_graph_representation(Graph big, const std::vector<std::string>& g_ids);

/// E(v1,v2) iff the big graph has an edge or a proper-interior path from
/// v1 to v2; per-source BFS restricted to proper vertices. Pairs of big
/// indices, sorted.
std::vector<std::pair<int, int>> induced_edges(const GraphRepresentation& rep);

/// Representation of the game G by a parity game built on two copies of
/// the representing graph: copy 0 hosts player I's vertices, copy 1
/// player II's, proper vertices are doubled. G-vertex colors are
/// shifted up by 2; each side's proper vertices carry the least color
/// above the shifted range that is unfavorable to their owner (odd for
/// player I, even for player II), so stalling on one's own propers
/// loses and finite traversals never disturb the parity.
struct GameRepresentation {
    parity::ParityArena base_game;
    parity::ParityArena big;
    std::vector<int> big_of_base;  // base vertex -> its diagonal big vertex
    std::vector<int> base_of_big;  // big vertex -> base vertex or -1 (proper)
};

/// Requires `rep.big`'s G-vertices to be exactly the game's vertex ids.
/// Validates the result: no proper vertex may serve both players.
GameRepresentation build_game_representation(const parity::ParityArena& game,
                                             const GraphRepresentation& rep);

/// Walks the big game's winning strategies through proper vertices and
/// returns positional strategies on the base game; outside the winning
/// region vertices get first-edge filler. Throws when a walk revisits a
/// proper vertex before reaching a G-vertex (the input strategies were
/// not winning).
std::pair<parity::PositionalStrategy, parity::PositionalStrategy> pull_back_strategy(
    const GameRepresentation& rep, const parity::SolveResult& big_solution);

/// Representation text format: a `graph` or `arena` file followed by
/// `gvertices <id> ...` lines.
GraphRepresentation parse_graph_representation(std::string_view text);
std::string emit_graph_representation(const GraphRepresentation& rep);

}  // namespace gsynt::repr
