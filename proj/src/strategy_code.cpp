#include "gsynt/strategy_code.hpp"

#include <algorithm>
#include <set>

namespace gsynt::parity {

LocalLinearOrder local_linear_order(const Graph& g, int degree_bound) {
    int n = g.size();
    if (g.max_total_degree() > degree_bound)
        throw ValidationError("degree bound violated: graph has a vertex of degree " +
                              std::to_string(g.max_total_degree()) + " > " +
                              std::to_string(degree_bound));

    // E': two distinct vertices are adjacent when they share an in-neighbour
    std::vector<std::set<int>> shared(n);
    for (int w = 0; w < n; ++w) {
        const auto& succ = g.out[w];
        for (std::size_t i = 0; i < succ.size(); ++i)
            for (std::size_t j = i + 1; j < succ.size(); ++j) {
                if (succ[i] == succ[j]) continue;
                shared[succ[i]].insert(succ[j]);
                shared[succ[j]].insert(succ[i]);
            }
    }

    LocalLinearOrder order;
    order.class_bound = degree_bound * degree_bound + 1;
    order.clazz.assign(n, 0);
    std::vector<char> used;
    for (int v = 0; v < n; ++v) {
        used.assign(order.class_bound, 0);
        for (int u : shared[v])
            if (u < v) used[order.clazz[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        order.clazz[v] = c;
    }
    return order;
}

std::vector<int> ordered_out_neighbours(const ParityArena& arena, const LocalLinearOrder& order,
                                        int v) {
    std::vector<int> succ = arena.out[v];
    std::sort(succ.begin(), succ.end(),
              [&](int a, int b) { return order.clazz[a] < order.clazz[b]; });
    for (std::size_t i = 1; i < succ.size(); ++i)
        if (order.clazz[succ[i - 1]] == order.clazz[succ[i]])
            throw ValidationError("local linear order invalid at " + arena.ids[v] +
                                  ": out-neighbours share a class");
    return succ;
}

StrategyCode encode_strategy(const ParityArena& arena, const LocalLinearOrder& order,
                             const PositionalStrategy& strategy) {
    StrategyCode code;
    code.player = strategy.player;
    code.index_of.assign(arena.size(), -1);
    for (int v = 0; v < arena.size(); ++v) {
        int m = v < static_cast<int>(strategy.moves.size()) ? strategy.moves[v] : -1;
        if (m < 0) continue;
        if (arena.owners[v] != strategy.player)
            throw ValidationError("strategy maps vertex " + arena.ids[v] +
                                  " not owned by player " + player_name(strategy.player));
        if (!arena.has_edge(v, m))
            throw ValidationError("strategy move at " + arena.ids[v] + " is not an edge");
        auto succ = ordered_out_neighbours(arena, order, v);
        auto it = std::find(succ.begin(), succ.end(), m);
        code.index_of[v] = static_cast<int>(it - succ.begin());
    }
    return code;
}

PositionalStrategy decode_strategy(const ParityArena& arena, const LocalLinearOrder& order,
                                   const StrategyCode& code) {
    PositionalStrategy s;
    s.player = code.player;
    s.moves.assign(arena.size(), -1);
    for (int v = 0; v < arena.size(); ++v) {
        int i = v < static_cast<int>(code.index_of.size()) ? code.index_of[v] : -1;
        if (i < 0) continue;
        auto succ = ordered_out_neighbours(arena, order, v);
        if (i >= static_cast<int>(succ.size()))
            throw ValidationError("code index " + std::to_string(i) + " >= out-degree at " +
                                  arena.ids[v]);
        s.moves[v] = succ[i];
    }
    return s;
}

}  // namespace gsynt::parity
