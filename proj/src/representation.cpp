#include "gsynt/representation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace gsynt::repr {

using parity::ParityArena;
using parity::Player;
using parity::PositionalStrategy;
using parity::SolveResult;

namespace {

std::string copy_name(const std::string& id, int k) { return id + "@" + std::to_string(k); }

}  // namespace

int CopiedGraph::product_vertex(int base_vertex, int copy) const {
    return product.index_of(copy_name(base.ids[base_vertex], copy));
}

int CopiedGraph::copy_of(int product_vertex) const {
    const std::string& id = product.ids[product_vertex];
    return std::stoi(id.substr(id.rfind('@') + 1));
}

int CopiedGraph::base_of(int product_vertex) const {
    const std::string& id = product.ids[product_vertex];
    return base.index_of(id.substr(0, id.rfind('@')));
}

CopiedGraph copy_graph(const Graph& g, int d) {
    if (d < 1) throw ValidationError("copy count must be at least 1");
    CopiedGraph c;
    c.base = g;
    c.copy_count = d;
    GraphBuilder b;
    for (int k = 0; k < d; ++k)
        for (const auto& id : g.ids) b.vertex(copy_name(id, k));
    for (int k = 0; k < d; ++k)
        for (int v = 0; v < g.size(); ++v)
            for (int w : g.out[v]) b.edge(copy_name(g.ids[v], k), copy_name(g.ids[w], k));
    c.product = b.build();
    return c;
}

Graph project(const CopiedGraph& c, int i) {
    if (i < 0 || i >= c.copy_count) throw ValidationError("no such copy");
    GraphBuilder b;
    for (const auto& id : c.base.ids) b.vertex(id);
    for (int v = 0; v < c.base.size(); ++v)
        for (int w : c.base.out[v]) b.edge(c.base.ids[v], c.base.ids[w]);
    return b.build();
}

std::vector<int> GraphRepresentation::g_vertices() const {
    std::vector<int> vs;
    for (int v = 0; v < big.size(); ++v)
        if (is_g_vertex[v]) vs.push_back(v);
    return vs;
}

GraphRepresentation make_graph_representation(Graph big, const std::vector<std::string>& g_ids) {
    GraphRepresentation rep;
    rep.is_g_vertex.assign(big.size(), 0);
    for (const auto& id : g_ids) {
        int v = big.index_of(id);
        if (v < 0) throw ValidationError("gvertex " + id + " not in the graph");
        rep.is_g_vertex[v] = 1;
    }
    rep.big = std::move(big);
    return rep;
}

std::vector<std::pair<int, int>> induced_edges(const GraphRepresentation& rep) {
    const Graph& g = rep.big;
    std::vector<std::pair<int, int>> result;
    std::vector<char> reached(g.size());
    for (int src = 0; src < g.size(); ++src) {
        if (!rep.is_g_vertex[src]) continue;
        std::fill(reached.begin(), reached.end(), 0);
        std::vector<char> hit(g.size(), 0);
        std::deque<int> q;
        // first hop is unrestricted; afterwards only proper vertices extend
        for (int w : g.out[src]) {
            if (rep.is_g_vertex[w]) {
                hit[w] = 1;
            } else if (!reached[w]) {
                reached[w] = 1;
                q.push_back(w);
            }
        }
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.out[v]) {
                if (rep.is_g_vertex[w]) {
                    hit[w] = 1;
                } else if (!reached[w]) {
                    reached[w] = 1;
                    q.push_back(w);
                }
            }
        }
        for (int v = 0; v < g.size(); ++v)
            if (hit[v]) result.emplace_back(src, v);
    }
    return result;
}

GameRepresentation build_game_representation(const ParityArena& game,
                                             const GraphRepresentation& rep) {
    // the representation's G-vertices must be exactly the game vertices
    std::vector<int> gvs = rep.g_vertices();
    if (static_cast<int>(gvs.size()) != game.size())
        throw ValidationError("graph representation does not match the game's vertex set");
    for (int v : gvs)
        if (game.index_of(rep.big.ids[v]) < 0)
            throw ValidationError("gvertex " + rep.big.ids[v] + " is not a game vertex");

    const Graph& big = rep.big;
    auto side_of = [&](int base) { return game.owners[base] == Player::I ? 0 : 1; };

    // keep proper vertices that can still move somewhere; dead-end
    // propers never lie on an induced path
    std::vector<char> alive(big.size(), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < big.size(); ++v) {
            if (!alive[v] || rep.is_g_vertex[v]) continue;
            bool has_succ = false;
            for (int w : big.out[v])
                if (alive[w]) { has_succ = true; break; }
            if (!has_succ) {
                alive[v] = 0;
                changed = true;
            }
        }
    }

    // Proper vertices must punish the player who stalls on them forever
    // while staying neutral on plays that keep returning to G-vertices.
    // Under the min-parity convention that means colors above the
    // shifted range: odd for player I's propers, even for player II's.
    int base_color = (game.color_count - 1) + 2;
    int proper_i = base_color + (base_color % 2 == 0 ? 1 : 2);
    int proper_ii = base_color + (base_color % 2 == 0 ? 2 : 1);

    parity::ArenaBuilder b;
    for (int v = 0; v < big.size(); ++v) {
        if (!alive[v]) continue;
        if (rep.is_g_vertex[v]) {
            int base = game.index_of(big.ids[v]);
            b.vertex(copy_name(big.ids[v], side_of(base)), game.owners[base],
                     game.colors[base] + 2);
        } else {
            b.vertex(copy_name(big.ids[v], 0), Player::I, proper_i);
            b.vertex(copy_name(big.ids[v], 1), Player::II, proper_ii);
        }
    }
    auto target_name = [&](int w, int j) {
        if (rep.is_g_vertex[w])
            return copy_name(big.ids[w], side_of(game.index_of(big.ids[w])));
        return copy_name(big.ids[w], j);
    };
    for (int v = 0; v < big.size(); ++v) {
        if (!alive[v]) continue;
        std::vector<int> copies;
        if (rep.is_g_vertex[v]) copies = {side_of(game.index_of(big.ids[v]))};
        else copies = {0, 1};
        for (int j : copies)
            for (int w : big.out[v]) {
                if (!alive[w]) continue;
                b.edge(copy_name(big.ids[v], j), target_name(w, j));
            }
    }

    GameRepresentation out;
    out.base_game = game;
    out.big = b.build();
    out.big_of_base.assign(game.size(), -1);
    out.base_of_big.assign(out.big.size(), -1);
    for (int v = 0; v < game.size(); ++v) {
        int bg = out.big.index_of(copy_name(game.ids[v], side_of(v)));
        if (bg < 0)
            throw ValidationError("game vertex " + game.ids[v] +
                                  " lost all moves in the representation");
        out.big_of_base[v] = bg;
        out.base_of_big[bg] = v;
    }

    // Def-style sanity: propers are reachable through propers from one
    // player's G-vertices only. Here the copies separate the players by
    // construction, so a violation indicates a malformed representation.
    for (int v = 0; v < out.big.size(); ++v) {
        if (out.base_of_big[v] >= 0) continue;
        const std::string& id = out.big.ids[v];
        int copy = std::stoi(id.substr(id.rfind('@') + 1));
        if ((copy == 0) != (out.big.owners[v] == Player::I))
            throw ValidationError("proper vertex " + id + " serves the wrong player");
    }
    return out;
}

std::pair<PositionalStrategy, PositionalStrategy> pull_back_strategy(
    const GameRepresentation& rep, const SolveResult& big_solution) {
    const ParityArena& game = rep.base_game;
    const ParityArena& big = rep.big;
    std::pair<PositionalStrategy, PositionalStrategy> out{
        {Player::I, std::vector<int>(game.size(), -1)},
        {Player::II, std::vector<int>(game.size(), -1)}};

    for (int v = 0; v < game.size(); ++v) {
        Player p = game.owners[v];
        PositionalStrategy& target = p == Player::I ? out.first : out.second;
        if (big_solution.regions.winner_of[rep.big_of_base[v]] != p) {
            target.moves[v] = game.out[v][0];  // legal filler outside the region
            continue;
        }
        const PositionalStrategy& s = big_solution.strategy(p);
        std::set<int> visited;
        int cur = rep.big_of_base[v];
        int next = s.moves[cur];
        while (next >= 0 && rep.base_of_big[next] < 0) {
            if (!visited.insert(next).second)
                throw ValidationError("strategy walk loops on proper vertices from " +
                                      game.ids[v] + " (input strategies are not winning)");
            if (big.owners[next] != p)
                throw ValidationError("strategy walk from " + game.ids[v] +
                                      " crosses an opponent proper vertex");
            next = s.moves[next];
        }
        if (next < 0)
            throw ValidationError("big-game strategy undefined along the walk from " +
                                  game.ids[v]);
        target.moves[v] = rep.base_of_big[next];
    }
    return out;
}

GraphRepresentation parse_graph_representation(std::string_view text) {
    // split off gvertices lines, feed the rest to the graph/arena parser
    std::string body;
    std::vector<std::string> g_ids;
    bool is_arena = false, first = true;
    for (const auto& [lineno, line] : format_lines(text)) {
        auto toks = split_tokens(line);
        if (first) {
            is_arena = toks.size() == 1 && toks[0] == "arena";
            first = false;
        }
        if (toks[0] == "gvertices") {
            g_ids.insert(g_ids.end(), toks.begin() + 1, toks.end());
            continue;
        }
        body += line + "\n";
    }
    if (g_ids.empty()) throw ValidationError("representation file has no gvertices line");
    Graph big = is_arena ? parity::parse_arena(body).graph() : parse_graph(body);
    return make_graph_representation(std::move(big), g_ids);
}

std::string emit_graph_representation(const GraphRepresentation& rep) {
    std::string out = emit_graph(rep.big);
    std::vector<std::string> ids;
    for (int v : rep.g_vertices()) ids.push_back(rep.big.ids[v]);
    out += "gvertices " + join(ids, " ") + "\n";
    return out;
}

}  // namespace gsynt::repr
