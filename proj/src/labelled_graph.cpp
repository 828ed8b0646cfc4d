#include "gsynt/labelled_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace gsynt::labels {

bool valid_letter(std::string_view letter) {
    if (letter.empty()) return false;
    for (char c : letter) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '@' || c == '-';
        if (!ok) return false;
    }
    return true;
}

int LabelledGraph::index_of(const std::string& id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it != ids.end() && *it == id) return static_cast<int>(it - ids.begin());
    return -1;
}

int LabelledGraph::edge_index(int src, int dst) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(src, dst));
    if (it != edges.end() && *it == std::make_pair(src, dst))
        return static_cast<int>(it - edges.begin());
    return -1;
}

std::vector<std::vector<int>> LabelledGraph::out_adjacency() const {
    std::vector<std::vector<int>> adj(size());
    for (const auto& [a, b] : edges) adj[a].push_back(b);
    return adj;
}

LabelledGraphBuilder& LabelledGraphBuilder::alphabet(std::vector<std::string> letters) {
    alphabet_ = std::move(letters);
    return *this;
}

LabelledGraphBuilder& LabelledGraphBuilder::vertex(const std::string& id,
                                                   std::vector<std::string> labels) {
    vertices_.emplace_back(id, std::move(labels));
    return *this;
}

LabelledGraphBuilder& LabelledGraphBuilder::edge(const std::string& a, const std::string& b,
                                                 std::vector<std::string> labels) {
    edges_.emplace_back(a, b, std::move(labels));
    return *this;
}

LabelledGraph LabelledGraphBuilder::build() const {
    LabelledGraph g;
    std::set<std::string> sigma;
    for (const auto& l : alphabet_) {
        if (!valid_letter(l)) throw ValidationError("bad letter '" + l + "'");
        if (!sigma.insert(l).second) throw ValidationError("duplicate alphabet letter " + l);
    }
    g.alphabet = alphabet_;

    auto check_labels = [&](const std::vector<std::string>& ls, const std::string& where) {
        if (ls.empty()) throw ValidationError("empty label set on " + where);
        for (const auto& l : ls)
            if (!sigma.count(l))
                throw ValidationError("label " + l + " on " + where + " not in the alphabet");
        std::vector<std::string> s = ls;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    };

    std::map<std::string, std::vector<std::string>> decl;
    for (const auto& [id, ls] : vertices_) {
        if (!valid_id(id)) throw ValidationError("bad vertex id '" + id + "'");
        if (!decl.emplace(id, check_labels(ls, "vertex " + id)).second)
            throw ValidationError("duplicate vertex " + id);
    }
    for (const auto& [id, ls] : decl) {
        g.ids.push_back(id);
        g.vertex_labels.push_back(ls);
    }
    std::map<std::pair<int, int>, std::vector<std::string>> es;
    for (const auto& [a, b, ls] : edges_) {
        int ia = g.index_of(a);
        int ib = g.index_of(b);
        if (ia < 0) throw ValidationError("unknown vertex " + a);
        if (ib < 0) throw ValidationError("unknown vertex " + b);
        if (!es.emplace(std::make_pair(ia, ib), check_labels(ls, "edge " + a + " " + b)).second)
            throw ValidationError("duplicate edge " + a + " " + b);
    }
    for (const auto& [e, ls] : es) {
        g.edges.push_back(e);
        g.edge_labels.push_back(ls);
    }
    return g;
}

int Dfa::state_index(const std::string& id) const {
    auto it = std::lower_bound(states.begin(), states.end(), id);
    if (it != states.end() && *it == id) return static_cast<int>(it - states.begin());
    return -1;
}

int Dfa::letter_index(const std::string& letter) const {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), letter);
    if (it != alphabet.end() && *it == letter) return static_cast<int>(it - alphabet.begin());
    return -1;
}

int Dfa::step(int q, const std::string& letter) const {
    int l = letter_index(letter);
    if (l < 0) throw ValidationError("letter " + letter + " unknown to the automaton");
    return delta[q][l];
}

bool Dfa::accepts(const std::vector<std::string>& word) const {
    int q = initial;
    for (const auto& l : word) q = step(q, l);
    return accepting[q];
}

bool Dfa::initial_has_incoming() const {
    for (int q = 0; q < size(); ++q)
        for (int t : delta[q])
            if (t == initial) return true;
    return false;
}

DfaBuilder& DfaBuilder::state(const std::string& id, bool initial, bool accepting) {
    states_.emplace_back(id, initial, accepting);
    return *this;
}

DfaBuilder& DfaBuilder::trans(const std::string& src, const std::string& letter,
                              const std::string& dst) {
    trans_.emplace_back(src, letter, dst);
    return *this;
}

Dfa DfaBuilder::build() const {
    Dfa d;
    std::map<std::string, std::pair<bool, bool>> decl;
    for (const auto& [id, ini, acc] : states_) {
        if (!valid_id(id)) throw ValidationError("bad state id '" + id + "'");
        if (!decl.emplace(id, std::make_pair(ini, acc)).second)
            throw ValidationError("duplicate state " + id);
    }
    if (decl.empty()) throw ValidationError("automaton has no states");
    int initial = -1;
    for (const auto& [id, fl] : decl) {
        d.states.push_back(id);
        d.accepting.push_back(fl.second);
        if (fl.first) {
            if (initial >= 0) throw ValidationError("multiple initial states");
            initial = static_cast<int>(d.states.size()) - 1;
        }
    }
    if (initial < 0) throw ValidationError("no initial state");
    d.initial = initial;

    std::set<std::string> letters;
    for (const auto& [s, l, t] : trans_) {
        if (!valid_letter(l)) throw ValidationError("bad letter '" + l + "'");
        letters.insert(l);
    }
    d.alphabet.assign(letters.begin(), letters.end());
    d.delta.assign(d.size(), std::vector<int>(d.alphabet.size(), -1));
    for (const auto& [s, l, t] : trans_) {
        int is = d.state_index(s);
        int it = d.state_index(t);
        if (is < 0) throw ValidationError("unknown state " + s);
        if (it < 0) throw ValidationError("unknown state " + t);
        int il = d.letter_index(l);
        int& cell = d.delta[is][il];
        if (cell >= 0 && cell != it)
            throw ValidationError("nondeterministic transition at " + s + " on " + l);
        cell = it;
    }
    for (int q = 0; q < d.size(); ++q)
        for (std::size_t l = 0; l < d.alphabet.size(); ++l)
            if (d.delta[q][l] < 0)
                throw ValidationError("incomplete transition: state " + d.states[q] +
                                      " has no move on " + d.alphabet[l]);
    return d;
}

Dfa normalize_dfa(const Dfa& dfa) {
    if (!dfa.initial_has_incoming()) return dfa;
    std::string fresh = dfa.states[dfa.initial] + "@init";
    while (dfa.state_index(fresh) >= 0) fresh += "_";

    DfaBuilder b;
    b.state(fresh, true, dfa.accepting[dfa.initial]);
    for (int q = 0; q < dfa.size(); ++q) b.state(dfa.states[q], false, dfa.accepting[q]);
    for (int q = 0; q < dfa.size(); ++q)
        for (std::size_t l = 0; l < dfa.alphabet.size(); ++l)
            b.trans(dfa.states[q], dfa.alphabet[l], dfa.states[dfa.delta[q][l]]);
    for (std::size_t l = 0; l < dfa.alphabet.size(); ++l)
        b.trans(fresh, dfa.alphabet[l], dfa.states[dfa.delta[dfa.initial][l]]);
    return b.build();
}

std::vector<std::vector<std::string>> path_labels(const LabelledGraph& g,
                                                  const std::vector<int>& path) {
    if (path.empty()) throw ValidationError("path must contain at least one vertex");
    // interleaved label choice lists: v1, e1, v2, e2, ..., vn
    std::vector<const std::vector<std::string>*> slots;
    slots.push_back(&g.vertex_labels[path[0]]);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int e = g.edge_index(path[i], path[i + 1]);
        if (e < 0)
            throw ValidationError("not a path: no edge " + g.ids[path[i]] + " -> " +
                                  g.ids[path[i + 1]]);
        slots.push_back(&g.edge_labels[e]);
        slots.push_back(&g.vertex_labels[path[i + 1]]);
    }
    std::set<std::vector<std::string>> words;
    std::vector<std::string> word(slots.size());
    std::vector<std::size_t> pick(slots.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < slots.size(); ++i) word[i] = (*slots[i])[pick[i]];
        words.insert(word);
        std::size_t i = 0;
        for (; i < slots.size(); ++i) {
            if (++pick[i] < slots[i]->size()) break;
            pick[i] = 0;
        }
        if (i == slots.size()) break;
    }
    return {words.begin(), words.end()};
}

namespace {

void require_letters_known(const LabelledGraph& g, const Dfa& dfa) {
    for (const auto& l : g.alphabet)
        if (dfa.letter_index(l) < 0)
            throw ValidationError("graph letter " + l + " unknown to the automaton");
}

}  // namespace

std::vector<std::pair<int, int>> edges_by_language(const LabelledGraph& g, const Dfa& dfa) {
    require_letters_known(g, dfa);
    int n = g.size();
    int nq = dfa.size();
    auto adj = g.out_adjacency();
    std::vector<std::pair<int, int>> result;
    std::vector<char> seen(static_cast<std::size_t>(n) * nq);
    for (int u = 0; u < n; ++u) {
        std::fill(seen.begin(), seen.end(), 0);
        std::deque<std::pair<int, int>> q;
        for (const auto& l : g.vertex_labels[u]) {
            int s = dfa.step(dfa.initial, l);
            if (!seen[u * nq + s]) {
                seen[u * nq + s] = 1;
                q.emplace_back(u, s);
            }
        }
        std::vector<char> hit(n, 0);
        while (!q.empty()) {
            auto [v, s] = q.front();
            q.pop_front();
            if (dfa.accepting[s]) hit[v] = 1;
            for (int w : adj[v]) {
                int e = g.edge_index(v, w);
                for (const auto& a : g.edge_labels[e]) {
                    int mid = dfa.delta[s][dfa.letter_index(a)];
                    for (const auto& b : g.vertex_labels[w]) {
                        int t = dfa.delta[mid][dfa.letter_index(b)];
                        if (!seen[w * nq + t]) {
                            seen[w * nq + t] = 1;
                            q.emplace_back(w, t);
                        }
                    }
                }
            }
        }
        for (int v = 0; v < n; ++v)
            if (hit[v]) result.emplace_back(u, v);
    }
    return result;
}

RegexpRepresentation represent_by_regexp(const LabelledGraph& g, const Dfa& dfa) {
    require_letters_known(g, dfa);
    if (dfa.initial_has_incoming())
        throw ValidationError("represent_by_regexp needs a normalized automaton "
                              "(initial state without incoming transitions)");
    auto name = [&](int v, int q) { return g.ids[v] + "@" + dfa.states[q]; };
    GraphBuilder b;
    for (int v = 0; v < g.size(); ++v)
        for (int q = 0; q < dfa.size(); ++q) b.vertex(name(v, q));

    int q0 = dfa.initial;
    for (int v = 0; v < g.size(); ++v) {
        for (const auto& l : g.vertex_labels[v])
            b.edge(name(v, q0), name(v, dfa.step(q0, l)));
        // accepting states return to the initial layer; the q0 self-loop
        // is excluded so that the empty word never induces an edge
        for (int q = 0; q < dfa.size(); ++q)
            if (q != q0 && dfa.accepting[q]) b.edge(name(v, q), name(v, q0));
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [v1, v2] = g.edges[e];
        for (int q1 = 0; q1 < dfa.size(); ++q1) {
            if (q1 == q0) continue;
            for (const auto& a : g.edge_labels[e]) {
                int mid = dfa.delta[q1][dfa.letter_index(a)];
                for (const auto& bl : g.vertex_labels[v2]) {
                    int q2 = dfa.delta[mid][dfa.letter_index(bl)];
                    if (q2 != q0) b.edge(name(v1, q1), name(v2, q2));
                }
            }
        }
    }
    RegexpRepresentation rep;
    rep.graph = b.build();
    for (int v = 0; v < g.size(); ++v) rep.g_vertex_ids.push_back(name(v, q0));
    std::sort(rep.g_vertex_ids.begin(), rep.g_vertex_ids.end());
    return rep;
}

LabelledGraph parse_lgraph(std::string_view text) {
    LabelledGraphBuilder b;
    bool header = false, seen_alphabet = false;
    for (const auto& [lineno, line] : format_lines(text)) {
        auto toks = split_tokens(line);
        auto bad = [&](const std::string& why) {
            return ValidationError("line " + std::to_string(lineno) + ": " + why);
        };
        if (!header) {
            if (toks.size() != 1 || toks[0] != "lgraph") throw bad("expected 'lgraph' header");
            header = true;
            continue;
        }
        auto labels_of = [&](const std::string& tok) {
            if (tok.rfind("labels=", 0) != 0) throw bad("expected labels=<l1,l2,...>");
            return split_commas(tok.substr(7));
        };
        if (toks[0] == "alphabet") {
            if (seen_alphabet) throw bad("duplicate alphabet line");
            seen_alphabet = true;
            b.alphabet({toks.begin() + 1, toks.end()});
        } else if (toks[0] == "vertex" && toks.size() == 3) {
            b.vertex(toks[1], labels_of(toks[2]));
        } else if (toks[0] == "edge" && toks.size() == 4) {
            b.edge(toks[1], toks[2], labels_of(toks[3]));
        } else {
            throw bad("bad lgraph line '" + line + "'");
        }
    }
    if (!header) throw ValidationError("missing 'lgraph' header");
    return b.build();
}

std::string emit_lgraph(const LabelledGraph& g) {
    std::string out = "lgraph\nalphabet " + join(g.alphabet, " ") + "\n";
    for (int v = 0; v < g.size(); ++v)
        out += "vertex " + g.ids[v] + " labels=" + join(g.vertex_labels[v], ",") + "\n";
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        out += "edge " + g.ids[g.edges[e].first] + " " + g.ids[g.edges[e].second] +
               " labels=" + join(g.edge_labels[e], ",") + "\n";
    return out;
}

Dfa parse_dfa(std::string_view text) {
    DfaBuilder b;
    bool header = false;
    for (const auto& [lineno, line] : format_lines(text)) {
        auto toks = split_tokens(line);
        auto bad = [&](const std::string& why) {
            return ValidationError("line " + std::to_string(lineno) + ": " + why);
        };
        if (!header) {
            if (toks.size() != 1 || toks[0] != "dfa") throw bad("expected 'dfa' header");
            header = true;
            continue;
        }
        if (toks[0] == "state" && toks.size() >= 2 && toks.size() <= 4) {
            bool ini = false, acc = false;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                if (toks[i] == "initial") ini = true;
                else if (toks[i] == "accepting") acc = true;
                else throw bad("unknown state flag " + toks[i]);
            }
            b.state(toks[1], ini, acc);
        } else if (toks[0] == "trans" && toks.size() == 4) {
            b.trans(toks[1], toks[2], toks[3]);
        } else {
            throw bad("bad dfa line '" + line + "'");
        }
    }
    if (!header) throw ValidationError("missing 'dfa' header");
    return b.build();
}

std::string emit_dfa(const Dfa& d) {
    std::string out = "dfa\n";
    for (int q = 0; q < d.size(); ++q) {
        out += "state " + d.states[q];
        if (q == d.initial) out += " initial";
        if (d.accepting[q]) out += " accepting";
        out += "\n";
    }
    for (int q = 0; q < d.size(); ++q)
        for (std::size_t l = 0; l < d.alphabet.size(); ++l)
            out += "trans " + d.states[q] + " " + d.alphabet[l] + " " +
                   d.states[d.delta[q][l]] + "\n";
    return out;
}

}  // namespace gsynt::labels
