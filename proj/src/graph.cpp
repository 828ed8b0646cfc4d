#include "gsynt/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gsynt {

int Graph::index_of(const std::string& id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it != ids.end() && *it == id) return static_cast<int>(it - ids.begin());
    return -1;
}

bool Graph::has_edge(int a, int b) const {
    return std::binary_search(out[a].begin(), out[a].end(), b);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < size(); ++v)
        for (int w : out[v]) es.emplace_back(v, w);
    return es;
}

int Graph::max_out_degree() const {
    int d = 0;
    for (const auto& o : out) d = std::max(d, static_cast<int>(o.size()));
    return d;
}

int Graph::max_total_degree() const {
    int d = 0;
    for (int v = 0; v < size(); ++v)
        d = std::max(d, static_cast<int>(out[v].size() + in[v].size()));
    return d;
}

GraphBuilder& GraphBuilder::vertex(const std::string& id) {
    ids_.push_back(id);
    return *this;
}

GraphBuilder& GraphBuilder::edge(const std::string& a, const std::string& b) {
    edges_.emplace_back(a, b);
    return *this;
}

Graph GraphBuilder::build() const {
    Graph g;
    std::set<std::string> seen;
    for (const auto& id : ids_) {
        if (!valid_id(id)) throw ValidationError("bad vertex id '" + id + "'");
        if (!seen.insert(id).second) throw ValidationError("duplicate vertex " + id);
    }
    g.ids.assign(seen.begin(), seen.end());
    g.out.resize(g.ids.size());
    g.in.resize(g.ids.size());
    std::set<std::pair<int, int>> es;
    for (const auto& [a, b] : edges_) {
        int ia = g.index_of(a);
        int ib = g.index_of(b);
        if (ia < 0) throw ValidationError("unknown vertex " + a);
        if (ib < 0) throw ValidationError("unknown vertex " + b);
        es.emplace(ia, ib);
    }
    for (const auto& [a, b] : es) {
        g.out[a].push_back(b);
        g.in[b].push_back(a);
    }
    return g;
}

Graph parse_graph(std::string_view text) {
    GraphBuilder b;
    bool header = false;
    for (const auto& [lineno, line] : format_lines(text)) {
        auto toks = split_tokens(line);
        if (!header) {
            if (toks.size() != 1 || toks[0] != "graph")
                throw ValidationError("line " + std::to_string(lineno) + ": expected 'graph' header");
            header = true;
            continue;
        }
        if (toks[0] == "vertex" && toks.size() == 2) {
            b.vertex(toks[1]);
        } else if (toks[0] == "edge" && toks.size() == 3) {
            b.edge(toks[1], toks[2]);
        } else {
            throw ValidationError("line " + std::to_string(lineno) + ": bad graph line '" + line + "'");
        }
    }
    if (!header) throw ValidationError("missing 'graph' header");
    return b.build();
}

std::vector<int> scc_components(const std::vector<std::vector<int>>& adj,
                                const std::vector<char>& active) {
    int n = static_cast<int>(adj.size());
    std::vector<int> comp(n, -1), low(n, 0), disc(n, -1), stk;
    std::vector<char> on_stack(n, 0);
    int timer = 0, ncomp = 0;

    struct Item {
        int v;
        std::size_t ei;
    };
    std::vector<Item> call;
    for (int root = 0; root < n; ++root) {
        if (!active[root] || disc[root] >= 0) continue;
        call.push_back({root, 0});
        disc[root] = low[root] = timer++;
        stk.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, ei] = call.back();
            if (ei < adj[v].size()) {
                int w = adj[v][ei++];
                if (!active[w]) continue;
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    stk.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                if (low[v] == disc[v]) {
                    while (true) {
                        int w = stk.back();
                        stk.pop_back();
                        on_stack[w] = 0;
                        comp[w] = ncomp;
                        if (w == v) break;
                    }
                    ++ncomp;
                }
                int vv = v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[vv]);
            }
        }
    }
    return comp;
}

std::string emit_graph(const Graph& g) {
    std::string out = "graph\n";
    for (const auto& id : g.ids) out += "vertex " + id + "\n";
    for (const auto& [a, b] : g.edge_list())
        out += "edge " + g.ids[a] + " " + g.ids[b] + "\n";
    return out;
}

}  // namespace gsynt
