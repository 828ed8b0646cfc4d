#pragma once

#include <functional>

#include "gsynt/arena.hpp"
#include "gsynt/common.hpp"
#include "gsynt/graph.hpp"
#include "gsynt/labelled_graph.hpp"
#include "gsynt/representation.hpp"
#include "gsynt/solve.hpp"

namespace gsynt {

/// Reproducible random instances for the property suites. Every
/// generator is a pure function of the Rng state, so a seed pins the
/// instance bytes exactly.

parity::ParityArena random_arena(Rng& rng, int max_vertices, int max_colors,
                                 int max_out_degree = 3);

/// Random positional strategy: a legal move at every vertex of `p`.
parity::PositionalStrategy random_strategy(Rng& rng, const parity::ParityArena& a,
                                           parity::Player p);

Graph random_graph(Rng& rng, int max_vertices, int max_out_degree = 2,
                   bool allow_sinks = true);

/// Enumerates every arena with exactly `n` vertices, colors below
/// `colors`, all owner assignments and all edge sets with out-degree
/// >= 1, invoking `fn` on each. Feasible for n <= 3.
void for_each_arena(int n, int colors, const std::function<void(const parity::ParityArena&)>& fn);

/// Labelled graph over a prefix of {a,b,c,d}; mostly single labels with
/// occasional two-letter sets so that label multiplicity is exercised
/// without blowing up the path-enumeration oracles.
labels::LabelledGraph random_lgraph(Rng& rng, int max_vertices, int letters,
                                    int max_out_degree = 2);

labels::Dfa random_dfa(Rng& rng, int max_states, const std::vector<std::string>& alphabet);

/// A game plus a representation of its arena: each game edge becomes
/// either a direct edge or a fresh proper-vertex chain of length 1..3,
/// so the induced edges recover the game exactly.
struct RepresentedGame {
    parity::ParityArena game;
    repr::GraphRepresentation rep;
};
RepresentedGame random_represented_game(Rng& rng, int max_vertices, int max_colors);

}  // namespace gsynt
