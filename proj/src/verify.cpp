#include "gsynt/verify.hpp"

#include <algorithm>
#include <deque>

#include "gsynt/graph.hpp"

namespace gsynt::parity {

namespace {

// Finds a cycle within the restricted graph whose minimal color favors
// `beneficiary`, or nullopt. adj lists only mention active vertices.
std::optional<std::vector<int>> find_favorable_cycle(const ParityArena& a,
                                                     const std::vector<std::vector<int>>& adj,
                                                     const std::vector<char>& active,
                                                     Player beneficiary) {
    int n = a.size();
    for (int c = 0; c < a.color_count; ++c) {
        if (!color_favors(c, beneficiary)) continue;
        std::vector<char> high(n, 0);
        bool any = false;
        for (int v = 0; v < n; ++v) {
            high[v] = active[v] && a.colors[v] >= c;
            any = any || high[v];
        }
        if (!any) continue;
        std::vector<int> comp = scc_components(adj, high);
        // a component carries a witness cycle iff it has an internal edge
        // and a vertex of color exactly c
        int ncomp = 0;
        for (int v = 0; v < n; ++v) ncomp = std::max(ncomp, comp[v] + 1);
        std::vector<char> has_edge(ncomp, 0);
        std::vector<int> seed(ncomp, -1);
        for (int v = 0; v < n; ++v) {
            if (!high[v]) continue;
            for (int w : adj[v])
                if (high[w] && comp[w] == comp[v]) has_edge[comp[v]] = 1;
            if (a.colors[v] == c && seed[comp[v]] < 0) seed[comp[v]] = v;
        }
        for (int k = 0; k < ncomp; ++k) {
            if (!has_edge[k] || seed[k] < 0) continue;
            // recover a concrete cycle: BFS within the component from the
            // seed's successors back to the seed
            int s = seed[k];
            std::vector<int> pred(n, -1);
            std::deque<int> q;
            for (int w : adj[s]) {
                if (!high[w] || comp[w] != k || pred[w] >= 0) continue;
                pred[w] = s;
                if (w == s) break;
                q.push_back(w);
            }
            if (pred[s] < 0) {
                while (!q.empty()) {
                    int v = q.front();
                    q.pop_front();
                    bool done = false;
                    for (int w : adj[v]) {
                        if (!high[w] || comp[w] != k || pred[w] >= 0) continue;
                        pred[w] = v;
                        if (w == s) {
                            done = true;
                            break;
                        }
                        q.push_back(w);
                    }
                    if (done) break;
                }
            }
            std::vector<int> cyc;
            int v = s;
            do {
                cyc.push_back(v);
                v = pred[v];
            } while (v != s && v >= 0);
            std::reverse(cyc.begin(), cyc.end());
            return cyc;
        }
    }
    return std::nullopt;
}

}  // namespace

VerifyResult verify_strategy(const ParityArena& arena, const PositionalStrategy& strategy,
                             const std::vector<int>& claimed_region) {
    VerifyResult r;
    int n = arena.size();
    Player p = strategy.player;
    std::vector<char> in_region(n, 0);
    for (int v : claimed_region) {
        if (v < 0 || v >= n) {
            r.reason = "claimed region mentions an unknown vertex";
            return r;
        }
        in_region[v] = 1;
    }

    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        if (!in_region[v]) continue;
        if (arena.owners[v] == p) {
            int m = v < static_cast<int>(strategy.moves.size()) ? strategy.moves[v] : -1;
            if (m < 0) {
                r.reason = "strategy undefined at " + arena.ids[v] + " inside the claimed region";
                return r;
            }
            if (!arena.has_edge(v, m)) {
                r.reason = "strategy move " + arena.ids[v] + " -> " + arena.ids[m] + " is not an edge";
                return r;
            }
            if (!in_region[m]) {
                r.reason = "strategy escapes the claimed region at " + arena.ids[v];
                r.witness = EscapeWitness{v, m};
                return r;
            }
            adj[v].push_back(m);
        } else {
            for (int w : arena.out[v]) {
                if (!in_region[w]) {
                    r.reason = "opponent can escape the claimed region at " + arena.ids[v];
                    r.witness = EscapeWitness{v, w};
                    return r;
                }
                adj[v].push_back(w);
            }
        }
    }

    auto bad = find_favorable_cycle(arena, adj, in_region, opponent(p));
    if (bad) {
        r.reason = "reachable cycle with minimal color favoring the opponent";
        r.witness = CycleWitness{*bad};
        return r;
    }
    r.ok = true;
    return r;
}

Lasso play_positional(const ParityArena& arena, const PositionalStrategy& s_i,
                      const PositionalStrategy& s_ii, int start) {
    int n = arena.size();
    if (start < 0 || start >= n) throw ValidationError("unknown start vertex");
    std::vector<int> seen_at(n, -1);
    std::vector<int> path;
    int v = start;
    while (seen_at[v] < 0) {
        seen_at[v] = static_cast<int>(path.size());
        path.push_back(v);
        const PositionalStrategy& s = arena.owners[v] == Player::I ? s_i : s_ii;
        int m = v < static_cast<int>(s.moves.size()) ? s.moves[v] : -1;
        if (m < 0)
            throw ValidationError("strategy undefined at reached vertex " + arena.ids[v]);
        if (!arena.has_edge(v, m))
            throw ValidationError("strategy move at " + arena.ids[v] + " is not an edge");
        v = m;
    }
    Lasso l;
    int loop = seen_at[v];
    l.stem.assign(path.begin(), path.begin() + loop);
    l.cycle.assign(path.begin() + loop, path.end());
    int min_color = arena.colors[l.cycle[0]];
    for (int u : l.cycle) min_color = std::min(min_color, arena.colors[u]);
    l.winner = color_favors(min_color, Player::I) ? Player::I : Player::II;
    return l;
}

WinningRegions brute_force_regions(const ParityArena& arena) {
    int n = arena.size();
    if (n > 8) throw ValidationError("brute_force_regions size guard exceeded (|V| <= 8)");

    std::vector<int> mine;  // player-I vertices
    for (int v = 0; v < n; ++v)
        if (arena.owners[v] == Player::I) mine.push_back(v);

    std::vector<char> wins(n, 0);
    std::vector<std::size_t> choice(mine.size(), 0);
    std::vector<std::vector<int>> adj(n);
    std::vector<char> all(n, 1);
    while (true) {
        // fixed player-I strategy; player II keeps every edge
        for (int v = 0; v < n; ++v) {
            adj[v].clear();
            if (arena.owners[v] == Player::II) adj[v] = arena.out[v];
        }
        for (std::size_t i = 0; i < mine.size(); ++i)
            adj[mine[i]].push_back(arena.out[mine[i]][choice[i]]);

        // player II beats this strategy from v iff some reachable cycle
        // has odd minimal color; compute the set that can reach one
        std::vector<char> bad(n, 0);
        for (int c = 0; c < arena.color_count; ++c) {
            if (!color_favors(c, Player::II)) continue;
            std::vector<char> high(n, 0);
            for (int v = 0; v < n; ++v) high[v] = arena.colors[v] >= c;
            std::vector<int> comp = scc_components(adj, high);
            int ncomp = 0;
            for (int v = 0; v < n; ++v) ncomp = std::max(ncomp, comp[v] + 1);
            std::vector<char> has_edge(ncomp, 0), has_color(ncomp, 0);
            for (int v = 0; v < n; ++v) {
                if (!high[v]) continue;
                for (int w : adj[v])
                    if (high[w] && comp[w] == comp[v]) has_edge[comp[v]] = 1;
                if (arena.colors[v] == c) has_color[comp[v]] = 1;
            }
            for (int v = 0; v < n; ++v)
                if (high[v] && has_edge[comp[v]] && has_color[comp[v]]) bad[v] = 1;
        }
        // backward closure over the restricted edges
        std::vector<std::vector<int>> radj(n);
        for (int v = 0; v < n; ++v)
            for (int w : adj[v]) radj[w].push_back(v);
        std::deque<int> q;
        for (int v = 0; v < n; ++v)
            if (bad[v]) q.push_back(v);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : radj[v])
                if (!bad[w]) {
                    bad[w] = 1;
                    q.push_back(w);
                }
        }
        for (int v = 0; v < n; ++v)
            if (!bad[v]) wins[v] = 1;

        // next strategy assignment
        std::size_t i = 0;
        for (; i < mine.size(); ++i) {
            if (++choice[i] < arena.out[mine[i]].size()) break;
            choice[i] = 0;
        }
        if (i == mine.size()) break;
    }

    WinningRegions r;
    r.winner_of.assign(n, Player::II);
    for (int v = 0; v < n; ++v)
        if (wins[v]) r.winner_of[v] = Player::I;
    return r;
}

}  // namespace gsynt::parity
