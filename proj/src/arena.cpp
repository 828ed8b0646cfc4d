#include "gsynt/arena.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gsynt::parity {

int ParityArena::index_of(const std::string& id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it != ids.end() && *it == id) return static_cast<int>(it - ids.begin());
    return -1;
}

bool ParityArena::has_edge(int a, int b) const {
    return std::binary_search(out[a].begin(), out[a].end(), b);
}

std::vector<std::pair<int, int>> ParityArena::edge_list() const {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < size(); ++v)
        for (int w : out[v]) es.emplace_back(v, w);
    return es;
}

Graph ParityArena::graph() const {
    Graph g;
    g.ids = ids;
    g.out = out;
    g.in = in;
    return g;
}

int ParityArena::max_out_degree() const {
    int d = 0;
    for (const auto& o : out) d = std::max(d, static_cast<int>(o.size()));
    return d;
}

ArenaBuilder& ArenaBuilder::vertex(const std::string& id, Player owner, int color) {
    vertices_.push_back({id, owner, color});
    return *this;
}

ArenaBuilder& ArenaBuilder::edge(const std::string& a, const std::string& b) {
    edges_.emplace_back(a, b);
    return *this;
}

ParityArena ArenaBuilder::build() const {
    std::map<std::string, std::pair<Player, int>> decl;
    for (const auto& v : vertices_) {
        if (!valid_id(v.id)) throw ValidationError("bad vertex id '" + v.id + "'");
        if (v.color < 0) throw ValidationError("negative color at " + v.id);
        if (!decl.emplace(v.id, std::make_pair(v.owner, v.color)).second)
            throw ValidationError("duplicate vertex " + v.id);
    }
    if (decl.empty()) throw ValidationError("arena has no vertices");

    ParityArena a;
    for (const auto& [id, oc] : decl) {
        a.ids.push_back(id);
        a.owners.push_back(oc.first);
        a.colors.push_back(oc.second);
        a.color_count = std::max(a.color_count, oc.second + 1);
    }
    a.out.resize(a.size());
    a.in.resize(a.size());

    std::set<std::pair<int, int>> es;
    for (const auto& [s, t] : edges_) {
        int is = a.index_of(s);
        int it = a.index_of(t);
        if (is < 0) throw ValidationError("unknown vertex " + s);
        if (it < 0) throw ValidationError("unknown vertex " + t);
        es.emplace(is, it);
    }
    for (const auto& [s, t] : es) {
        a.out[s].push_back(t);
        a.in[t].push_back(s);
    }
    for (int v = 0; v < a.size(); ++v)
        if (a.out[v].empty()) throw ValidationError("out-degree 0 at " + a.ids[v]);
    return a;
}

ParityArena parse_arena(std::string_view text) {
    ArenaBuilder b;
    bool header = false;
    for (const auto& [lineno, line] : format_lines(text)) {
        auto toks = split_tokens(line);
        auto bad = [&](const std::string& why) {
            return ValidationError("line " + std::to_string(lineno) + ": " + why);
        };
        if (!header) {
            if (toks.size() != 1 || toks[0] != "arena") throw bad("expected 'arena' header");
            header = true;
            continue;
        }
        if (toks[0] == "vertex") {
            if (toks.size() != 4) throw bad("vertex line needs: vertex <id> owner=<I|II> color=<uint>");
            Player owner;
            if (toks[2] == "owner=I") owner = Player::I;
            else if (toks[2] == "owner=II") owner = Player::II;
            else throw bad("missing owner on vertex " + toks[1]);
            if (toks[3].rfind("color=", 0) != 0) throw bad("missing color on vertex " + toks[1]);
            int color;
            try {
                std::size_t used = 0;
                color = std::stoi(toks[3].substr(6), &used);
                if (used != toks[3].size() - 6 || color < 0) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw bad("bad color on vertex " + toks[1]);
            }
            b.vertex(toks[1], owner, color);
        } else if (toks[0] == "edge") {
            if (toks.size() != 3) throw bad("edge line needs: edge <id> <id>");
            b.edge(toks[1], toks[2]);
        } else {
            throw bad("unknown directive '" + toks[0] + "'");
        }
    }
    if (!header) throw ValidationError("missing 'arena' header");
    return b.build();
}

std::string emit_arena(const ParityArena& a) {
    std::string out = "arena\n";
    for (int v = 0; v < a.size(); ++v)
        out += "vertex " + a.ids[v] + " owner=" + player_name(a.owners[v]) +
               " color=" + std::to_string(a.colors[v]) + "\n";
    for (const auto& [s, t] : a.edge_list())
        out += "edge " + a.ids[s] + " " + a.ids[t] + "\n";
    return out;
}

}  // namespace gsynt::parity
