#pragma once

#include <vector>

#include "gsynt/graph.hpp"
#include "gsynt/solve.hpp"

namespace gsynt::parity {

/// A coloring of the vertices with classes in [0, d^2+1) such that all
/// out-neighbours of any vertex carry pairwise distinct classes. Sorting
/// an out-neighbourhood by class yields a uniform local linear order.
struct LocalLinearOrder {
    std::vector<int> clazz;
    int class_bound = 0;  // d^2 + 1 for the declared degree bound d

    bool before(int a, int b) const { return clazz[a] < clazz[b]; }
};

/// Builds the order by coloring the derived graph that joins co-out-
/// neighbours: (v,u) in E' iff v != u and some w has edges to both.
/// Greedy coloring in vertex order needs at most d^2+1 classes when the
/// total degree (in + out) is at most d. Throws if the bound is violated.
LocalLinearOrder local_linear_order(const Graph& g, int degree_bound);

/// A memoryless strategy coded as a partition index per vertex: if the
/// out-neighbours of v ordered by the local linear order are
/// y_0 < ... < y_k, index i at v selects y_i.
struct StrategyCode {
    Player player = Player::I;
    std::vector<int> index_of;  // -1 where the strategy is undefined

    bool operator==(const StrategyCode&) const = default;
};

StrategyCode encode_strategy(const ParityArena& arena, const LocalLinearOrder& order,
                             const PositionalStrategy& strategy);

/// Total on in-range codes; throws when an index is >= the out-degree
/// of its vertex.
PositionalStrategy decode_strategy(const ParityArena& arena, const LocalLinearOrder& order,
                                   const StrategyCode& code);

/// Ascending out-neighbour list of v under the order.
std::vector<int> ordered_out_neighbours(const ParityArena& arena, const LocalLinearOrder& order,
                                        int v);

}  // namespace gsynt::parity
