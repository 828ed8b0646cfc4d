#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "gsynt/generate.hpp"
#include "gsynt/labelled_graph.hpp"
#include "gsynt/regexp.hpp"
#include "gsynt/representation.hpp"
#include "gsynt/verify.hpp"
#include "helpers.hpp"

using namespace gsynt;
using namespace gsynt::repr;
using parity::ArenaBuilder;
using parity::ParityArena;
using parity::Player;
using parity::SolveResult;

namespace {

std::string pad2(int n) {
    std::string s = std::to_string(n);
    return std::string(2 - s.size(), '0') + s;
}

// Truncation of the short/long-edge representing graph: G-vertices
// 0..top, short edges n -> n+1, long edges through chains of proper
// (n,side,step) vertices advancing by 3.
Graph short_long_graph(int top) {
    GraphBuilder b;
    auto g = [&](int n) { return "n" + pad2(n); };
    auto p = [&](int n, int side) { return "q" + pad2(n) + (side == 0 ? "I" : "II"); };
    for (int n = 0; n <= top; ++n) b.vertex(g(n));
    for (int n = 0; n <= top; ++n)
        for (int side = 0; side < 2; ++side) b.vertex(p(n, side));
    for (int n = 0; n < top; ++n) b.edge(g(n), g(n + 1));
    for (int n = 0; n <= top; ++n) {
        int side = n % 2;
        if (n + 3 <= top) b.edge(g(n), p(n + 3, side));
    }
    for (int n = 0; n <= top; ++n)
        for (int side = 0; side < 2; ++side) {
            b.edge(p(n, side), g(n));
            if (n + 3 <= top) b.edge(p(n, side), p(n + 3, side));
        }
    return b.build();
}

std::set<std::pair<std::string, std::string>> named_edges(const GraphRepresentation& rep,
                                                          const std::vector<std::pair<int, int>>& es) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [a, b] : es) out.emplace(rep.big.ids[a], rep.big.ids[b]);
    return out;
}

// Brute-force oracle: enumerate vertex paths of length <= |big| whose
// interior is proper, collect endpoint pairs.
std::set<std::pair<int, int>> induced_oracle(const GraphRepresentation& rep) {
    std::set<std::pair<int, int>> out;
    const Graph& g = rep.big;
    for (int src = 0; src < g.size(); ++src) {
        if (!rep.is_g_vertex[src]) continue;
        std::vector<int> path{src};
        std::vector<char> used(g.size(), 0);
        std::function<void()> rec = [&]() {
            int v = path.back();
            for (int w : g.out[v]) {
                if (rep.is_g_vertex[w]) {
                    out.emplace(src, w);
                    continue;
                }
                if (used[w]) continue;  // revisiting a proper vertex never adds endpoints
                used[w] = 1;
                path.push_back(w);
                rec();
                path.pop_back();
                used[w] = 0;
            }
        };
        rec();
    }
    return out;
}

}  // namespace

TEST_CASE("copying") {
    Rng rng(9);
    Graph g = random_graph(rng, 5, 2, false);
    CopiedGraph one = copy_graph(g, 1);
    CHECK(project(one, 1 - 1) == g);
    CHECK(one.product.size() == g.size());

    Graph two_base = GraphBuilder{}.vertex("a").vertex("b").edge("a", "b").build();
    CopiedGraph two = copy_graph(two_base, 2);
    CHECK(two.product.size() == 4);
    // no cross-copy edges
    for (auto [v, w] : two.product.edge_list()) CHECK(two.copy_of(v) == two.copy_of(w));

    CHECK_THROWS_AS(copy_graph(g, 0), ValidationError);

    // P_k and the same-base relation, extensionally
    for (int i = 0; i < 10; ++i) {
        Graph base = random_graph(rng, 4, 2);
        int d = rng.range(1, 3);
        CopiedGraph c = copy_graph(base, d);
        CHECK(c.product.size() == base.size() * d);
        for (int v = 0; v < c.product.size(); ++v) {
            int k = c.copy_of(v);
            CHECK(c.in_copy(v, k));
            CHECK(c.product_vertex(c.base_of(v), k) == v);
            for (int w = 0; w < c.product.size(); ++w) {
                bool same = c.base.ids[c.base_of(v)] == c.base.ids[c.base_of(w)];
                CHECK(c.same_base(v, w) == same);
                bool base_edge = c.base.has_edge(c.base_of(v), c.base_of(w));
                CHECK(c.product.has_edge(v, w) == (base_edge && c.copy_of(v) == c.copy_of(w)));
            }
        }
    }
}

TEST_CASE("induced edges") {
    // no proper vertices: the graph's own edges come back
    Rng rng(21);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_graph(rng, 5, 2);
        GraphRepresentation rep = make_graph_representation(
            g, std::vector<std::string>(g.ids.begin(), g.ids.end()));
        CHECK(induced_edges(rep) == g.edge_list());
    }

    // random chains against the path-enumeration oracle
    for (int i = 0; i < 60; ++i) {
        RepresentedGame rg = random_represented_game(rng, 5, 3);
        auto got = induced_edges(rg.rep);
        std::set<std::pair<int, int>> gotset(got.begin(), got.end());
        CHECK(gotset == induced_oracle(rg.rep));
    }
}

TEST_CASE("worked example: short and long edges on the 0..15 truncation") {
    Graph big = short_long_graph(15);
    std::vector<std::string> gids;
    for (int n = 0; n <= 15; ++n) gids.push_back("n" + pad2(n));
    GraphRepresentation rep = make_graph_representation(big, gids);

    std::set<std::pair<std::string, std::string>> expect;
    for (int x = 0; x <= 15; ++x)
        for (int y = 0; y <= 15; ++y)
            if (y - x == 1 || (y > x && (y - x) % 3 == 0))
                expect.emplace("n" + pad2(x), "n" + pad2(y));
    CHECK(named_edges(rep, induced_edges(rep)) == expect);
}

TEST_CASE("representation file format") {
    RepresentedGame rg = [] {
        Rng rng(2);
        return random_represented_game(rng, 4, 3);
    }();
    std::string text = emit_graph_representation(rg.rep);
    GraphRepresentation back = parse_graph_representation(text);
    CHECK(back.big == rg.rep.big);
    CHECK(back.is_g_vertex == rg.rep.is_g_vertex);
    CHECK(emit_graph_representation(back) == text);

    CHECK_THROWS_AS(parse_graph_representation("graph\nvertex a\nedge a a\n"), ValidationError);
}

TEST_CASE("game representation structure") {
    Rng rng(4);
    // no proper vertices: the doubled game is the game with colors + 2
    for (int i = 0; i < 15; ++i) {
        ParityArena g = random_arena(rng, 5, 3);
        GraphRepresentation rep = make_graph_representation(
            g.graph(), std::vector<std::string>(g.ids.begin(), g.ids.end()));
        GameRepresentation game_rep = build_game_representation(g, rep);
        CHECK(game_rep.big.size() == g.size());
        for (int v = 0; v < g.size(); ++v) {
            int bg = game_rep.big_of_base[v];
            CHECK(game_rep.big.colors[bg] == g.colors[v] + 2);
            CHECK(game_rep.big.owners[bg] == g.owners[v]);
        }
    }

    // colors: G-vertices shifted by 2; propers sit above the shifted
    // range with the parity that loses for their owner
    for (int i = 0; i < 15; ++i) {
        RepresentedGame rg = random_represented_game(rng, 5, 3);
        GameRepresentation game_rep = build_game_representation(rg.game, rg.rep);
        int shifted_max = rg.game.color_count - 1 + 2;
        for (int v = 0; v < game_rep.big.size(); ++v) {
            if (game_rep.base_of_big[v] >= 0) {
                int base = game_rep.base_of_big[v];
                CHECK(game_rep.big.colors[v] == rg.game.colors[base] + 2);
            } else {
                CHECK(game_rep.big.colors[v] > shifted_max);
                bool odd = game_rep.big.colors[v] % 2 == 1;
                CHECK(odd == (game_rep.big.owners[v] == Player::I));
            }
        }
        // bounded out-degree is preserved up to the doubling
        CHECK(game_rep.big.max_out_degree() <= 2 * rg.rep.big.max_out_degree());
    }

    // stalling on one's own proper vertices loses: a play confined to
    // player-p propers has minimal color unfavorable to p
    {
        RepresentedGame rg = random_represented_game(rng, 4, 3);
        GameRepresentation game_rep = build_game_representation(rg.game, rg.rep);
        for (int v = 0; v < game_rep.big.size(); ++v) {
            if (game_rep.base_of_big[v] >= 0) continue;
            CHECK_FALSE(parity::color_favors(game_rep.big.colors[v], game_rep.big.owners[v]));
        }
    }
}

TEST_CASE("winning regions transfer through the representation") {
    Rng rng(33);
    for (int i = 0; i < 60; ++i) {
        RepresentedGame rg = random_represented_game(rng, 6, 3);
        GameRepresentation game_rep = build_game_representation(rg.game, rg.rep);
        SolveResult big = parity::solve(game_rep.big);
        SolveResult direct = parity::solve(rg.game);
        for (int v = 0; v < rg.game.size(); ++v) {
            CAPTURE(parity::emit_arena(rg.game));
            REQUIRE(big.regions.winner_of[game_rep.big_of_base[v]] ==
                    direct.regions.winner_of[v]);
        }
    }
}

TEST_CASE("strategy pull-back wins the represented game") {
    Rng rng(14);
    for (int i = 0; i < 60; ++i) {
        RepresentedGame rg = random_represented_game(rng, 6, 3);
        GameRepresentation game_rep = build_game_representation(rg.game, rg.rep);
        SolveResult big = parity::solve(game_rep.big);
        auto [si, sii] = pull_back_strategy(game_rep, big);

        SolveResult direct = parity::solve(rg.game);
        auto vi = parity::verify_strategy(rg.game, si, direct.regions.region(Player::I));
        CAPTURE(vi.reason);
        CHECK(vi.ok);
        auto vii = parity::verify_strategy(rg.game, sii, direct.regions.region(Player::II));
        CAPTURE(vii.reason);
        CHECK(vii.ok);
    }

    // no propers: pull-back is the restriction
    ParityArena g = random_arena(rng, 5, 3);
    GraphRepresentation rep = make_graph_representation(
        g.graph(), std::vector<std::string>(g.ids.begin(), g.ids.end()));
    GameRepresentation game_rep = build_game_representation(g, rep);
    SolveResult big = parity::solve(game_rep.big);
    auto [si, sii] = pull_back_strategy(game_rep, big);
    SolveResult direct = parity::solve(g);
    for (int v = 0; v < g.size(); ++v) {
        Player p = g.owners[v];
        if (direct.regions.winner_of[v] != p) continue;
        const auto& pulled = p == Player::I ? si : sii;
        int big_move = big.strategy(p).moves[game_rep.big_of_base[v]];
        CHECK(game_rep.base_of_big[big_move] == pulled.moves[v]);
    }
}

TEST_CASE("representation soundness for regexp-defined graphs") {
    Rng rng(7);
    std::vector<std::string> sigma{"a", "b"};
    for (int i = 0; i < 40; ++i) {
        labels::LabelledGraph g = random_lgraph(rng, 5, 2);
        labels::Dfa d = labels::normalize_dfa(random_dfa(rng, 4, sigma));
        auto el = labels::edges_by_language(g, d);
        auto rr = labels::represent_by_regexp(g, d);
        GraphRepresentation rep = make_graph_representation(rr.graph, rr.g_vertex_ids);
        auto induced = named_edges(rep, induced_edges(rep));
        std::set<std::pair<std::string, std::string>> expect;
        for (auto [u, v] : el)
            expect.emplace(g.ids[u] + "@" + d.states[d.initial],
                           g.ids[v] + "@" + d.states[d.initial]);
        CHECK(induced == expect);
    }
}
