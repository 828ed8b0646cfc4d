#include "gsynt/generate.hpp"

#include <functional>

namespace gsynt {

using parity::ArenaBuilder;
using parity::ParityArena;
using parity::Player;
using parity::PositionalStrategy;

namespace {

std::string vertex_name(int i) { return "v" + std::to_string(i); }

}  // namespace

ParityArena random_arena(Rng& rng, int max_vertices, int max_colors, int max_out_degree) {
    int n = rng.range(1, max_vertices);
    ArenaBuilder b;
    for (int i = 0; i < n; ++i)
        b.vertex(vertex_name(i), rng.chance(1, 2) ? Player::I : Player::II,
                 rng.range(0, max_colors - 1));
    for (int i = 0; i < n; ++i) {
        int deg = rng.range(1, std::min(max_out_degree, n));
        // distinct successors via a small reservoir
        std::vector<int> pool(n);
        for (int j = 0; j < n; ++j) pool[j] = j;
        for (int k = 0; k < deg; ++k) {
            int pick = k + static_cast<int>(rng.below(pool.size() - k));
            std::swap(pool[k], pool[pick]);
            b.edge(vertex_name(i), vertex_name(pool[k]));
        }
    }
    return b.build();
}

PositionalStrategy random_strategy(Rng& rng, const ParityArena& a, Player p) {
    PositionalStrategy s;
    s.player = p;
    s.moves.assign(a.size(), -1);
    for (int v = 0; v < a.size(); ++v)
        if (a.owners[v] == p) s.moves[v] = a.out[v][rng.below(a.out[v].size())];
    return s;
}

Graph random_graph(Rng& rng, int max_vertices, int max_out_degree, bool allow_sinks) {
    int n = rng.range(1, max_vertices);
    GraphBuilder b;
    for (int i = 0; i < n; ++i) b.vertex(vertex_name(i));
    for (int i = 0; i < n; ++i) {
        int lo = allow_sinks ? 0 : 1;
        int deg = rng.range(lo, std::min(max_out_degree, n));
        std::vector<int> pool(n);
        for (int j = 0; j < n; ++j) pool[j] = j;
        for (int k = 0; k < deg; ++k) {
            int pick = k + static_cast<int>(rng.below(pool.size() - k));
            std::swap(pool[k], pool[pick]);
            b.edge(vertex_name(i), vertex_name(pool[k]));
        }
    }
    return b.build();
}

labels::LabelledGraph random_lgraph(Rng& rng, int max_vertices, int letters, int max_out_degree) {
    std::vector<std::string> sigma;
    for (int i = 0; i < letters; ++i) sigma.push_back(std::string(1, static_cast<char>('a' + i)));
    labels::LabelledGraphBuilder b;
    b.alphabet(sigma);
    auto label_set = [&]() {
        std::vector<std::string> ls{rng.pick(sigma)};
        if (rng.chance(1, 5)) {
            std::string extra = rng.pick(sigma);
            if (extra != ls[0]) ls.push_back(extra);
        }
        return ls;
    };
    int n = rng.range(1, max_vertices);
    for (int i = 0; i < n; ++i) b.vertex(vertex_name(i), label_set());
    for (int i = 0; i < n; ++i) {
        int deg = rng.range(0, std::min(max_out_degree, n));
        std::vector<int> pool(n);
        for (int j = 0; j < n; ++j) pool[j] = j;
        for (int k = 0; k < deg; ++k) {
            int pick = k + static_cast<int>(rng.below(pool.size() - k));
            std::swap(pool[k], pool[pick]);
            b.edge(vertex_name(i), vertex_name(pool[k]), label_set());
        }
    }
    return b.build();
}

labels::Dfa random_dfa(Rng& rng, int max_states, const std::vector<std::string>& alphabet) {
    int n = rng.range(1, max_states);
    labels::DfaBuilder b;
    for (int i = 0; i < n; ++i) b.state("q" + std::to_string(i), i == 0, rng.chance(2, 5));
    for (int i = 0; i < n; ++i)
        for (const auto& l : alphabet)
            b.trans("q" + std::to_string(i), l, "q" + std::to_string(rng.range(0, n - 1)));
    return b.build();
}

RepresentedGame random_represented_game(Rng& rng, int max_vertices, int max_colors) {
    RepresentedGame out;
    out.game = random_arena(rng, max_vertices, max_colors);
    GraphBuilder b;
    for (const auto& id : out.game.ids) b.vertex(id);
    int fresh = 0;
    for (int v = 0; v < out.game.size(); ++v) {
        for (int w : out.game.out[v]) {
            int hops = rng.range(0, 3);  // 0 = direct edge
            std::string prev = out.game.ids[v];
            for (int h = 0; h < hops; ++h) {
                std::string p = "p" + std::to_string(fresh++);
                b.vertex(p);
                b.edge(prev, p);
                prev = p;
            }
            b.edge(prev, out.game.ids[w]);
        }
    }
    out.rep = repr::make_graph_representation(
        b.build(), std::vector<std::string>(out.game.ids.begin(), out.game.ids.end()));
    return out;
}

void for_each_arena(int n, int colors,
                    const std::function<void(const ParityArena&)>& fn) {
    // all nonempty successor sets per vertex, owners and colorings
    int edge_opts = (1 << n) - 1;
    std::vector<int> succ_mask(n, 1), owner_mask{0}, color_of(n, 0);
    std::function<void(int)> colorings = [&](int v) {
        if (v == n) {
            ArenaBuilder b;
            for (int i = 0; i < n; ++i)
                b.vertex(vertex_name(i),
                         (owner_mask[0] >> i) & 1 ? Player::II : Player::I, color_of[i]);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if ((succ_mask[i] >> j) & 1) b.edge(vertex_name(i), vertex_name(j));
            fn(b.build());
            return;
        }
        for (color_of[v] = 0; color_of[v] < colors; ++color_of[v]) colorings(v + 1);
        color_of[v] = 0;
    };
    std::function<void(int)> edges = [&](int v) {
        if (v == n) {
            for (owner_mask[0] = 0; owner_mask[0] < (1 << n); ++owner_mask[0]) colorings(0);
            owner_mask[0] = 0;
            return;
        }
        for (succ_mask[v] = 1; succ_mask[v] <= edge_opts; ++succ_mask[v]) edges(v + 1);
        succ_mask[v] = 1;
    };
    edges(0);
}

}  // namespace gsynt
