#pragma once

#include <vector>

#include "gsynt/arena.hpp"

namespace gsynt::parity {

/// A memoryless strategy for one player: moves[v] is the chosen
/// successor for every vertex owned by the player, -1 elsewhere.
/// On the player's winning region the moves are winning; outside it
/// they are legal filler (first out-edge), so the map is total on the
/// player's vertices and the uniformity of the strategy is checkable.
struct PositionalStrategy {
    Player player = Player::I;
    std::vector<int> moves;

    bool operator==(const PositionalStrategy&) const = default;
};

struct WinningRegions {
    std::vector<Player> winner_of;  // per vertex

    std::vector<int> region(Player p) const {
        std::vector<int> r;
        for (int v = 0; v < static_cast<int>(winner_of.size()); ++v)
            if (winner_of[v] == p) r.push_back(v);
        return r;
    }

    bool operator==(const WinningRegions&) const = default;
};

struct SolveResult {
    WinningRegions regions;
    PositionalStrategy strategy_i;
    PositionalStrategy strategy_ii;

    const PositionalStrategy& strategy(Player p) const {
        return p == Player::I ? strategy_i : strategy_ii;
    }
};

/// Solves the parity game by Zielonka's recursion. The returned regions
/// partition the vertex set and both strategies are uniform memoryless
/// winning strategies for their regions. Ties between equally winning
/// moves are broken toward the lowest vertex index, so the result is a
/// deterministic function of the arena.
SolveResult solve(const ParityArena& arena);

}  // namespace gsynt::parity
