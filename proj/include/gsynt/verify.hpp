#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gsynt/solve.hpp"

namespace gsynt::parity {

/// Certificate of a strategy-verification failure: an edge escaping the
/// claimed region, or a reachable cycle whose minimal color favors the
/// opponent under the fixed strategy.
struct EscapeWitness {
    int from = -1;
    int to = -1;
};
struct CycleWitness {
    std::vector<int> cycle;
};

struct VerifyResult {
    bool ok = false;
    std::string reason;
    std::optional<std::variant<EscapeWitness, CycleWitness>> witness;
};

/// Checks that `strategy` wins from every vertex of `claimed_region`:
/// fixing the player's moves and leaving the opponent free, the region
/// must be closed under all remaining moves and must contain no cycle
/// whose minimal color favors the opponent. Independent of the solver.
VerifyResult verify_strategy(const ParityArena& arena, const PositionalStrategy& strategy,
                             const std::vector<int>& claimed_region);

struct Lasso {
    std::vector<int> stem;
    std::vector<int> cycle;
    Player winner = Player::I;
};

/// Plays both positional strategies from `start`; the unique play is
/// eventually periodic and is returned as its lasso decomposition.
/// Throws if a strategy is undefined at a reached vertex.
Lasso play_positional(const ParityArena& arena, const PositionalStrategy& s_i,
                      const PositionalStrategy& s_ii, int start);

/// Independent solver oracle for small arenas (|V| <= 8): enumerates all
/// memoryless player-I strategies and evaluates each fixed one-player
/// game exactly, so regionI is the set of vertices from which some
/// memoryless I-strategy beats every memoryless II-strategy.
WinningRegions brute_force_regions(const ParityArena& arena);

}  // namespace gsynt::parity
