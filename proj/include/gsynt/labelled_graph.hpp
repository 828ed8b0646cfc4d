#pragma once

#include <string>
#include <vector>

#include "gsynt/common.hpp"
#include "gsynt/graph.hpp"

namespace gsynt::labels {

/// Letters are whitespace-free tokens over [A-Za-z0-9_@-], so negative
/// numerals like "-1" are single letters.
bool valid_letter(std::string_view letter);

/// A graph whose vertices and edges carry nonempty sets of letters from
/// a declared finite alphabet. Vertices sorted by id, edges by (src,dst),
/// label sets sorted; the alphabet keeps its declaration order.
struct LabelledGraph {
    std::vector<std::string> alphabet;
    std::vector<std::string> ids;
    std::vector<std::vector<std::string>> vertex_labels;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<std::string>> edge_labels;

    int size() const { return static_cast<int>(ids.size()); }
    int index_of(const std::string& id) const;
    int edge_index(int src, int dst) const;  // -1 when absent
    std::vector<std::vector<int>> out_adjacency() const;

    bool operator==(const LabelledGraph&) const = default;
};

class LabelledGraphBuilder {
public:
    LabelledGraphBuilder& alphabet(std::vector<std::string> letters);
    LabelledGraphBuilder& vertex(const std::string& id, std::vector<std::string> labels);
    LabelledGraphBuilder& edge(const std::string& a, const std::string& b,
                               std::vector<std::string> labels);
    LabelledGraph build() const;

private:
    std::vector<std::string> alphabet_;
    std::vector<std::pair<std::string, std::vector<std::string>>> vertices_;
    std::vector<std::tuple<std::string, std::string, std::vector<std::string>>> edges_;
};

/// Complete deterministic finite automaton. States sorted by id, the
/// alphabet is the sorted set of letters seen on transitions, and the
/// transition function must be total.
struct Dfa {
    std::vector<std::string> states;
    int initial = 0;
    std::vector<char> accepting;
    std::vector<std::string> alphabet;
    std::vector<std::vector<int>> delta;  // [state][letter index]

    int size() const { return static_cast<int>(states.size()); }
    int state_index(const std::string& id) const;
    int letter_index(const std::string& letter) const;  // -1 when unknown
    int step(int q, const std::string& letter) const;   // throws on unknown letter
    bool accepts(const std::vector<std::string>& word) const;
    bool initial_has_incoming() const;

    bool operator==(const Dfa&) const = default;
};

class DfaBuilder {
public:
    DfaBuilder& state(const std::string& id, bool initial, bool accepting);
    DfaBuilder& trans(const std::string& src, const std::string& letter, const std::string& dst);
    Dfa build() const;  // validates: one initial, totality over seen letters

private:
    std::vector<std::tuple<std::string, bool, bool>> states_;
    std::vector<std::tuple<std::string, std::string, std::string>> trans_;
};

/// Language-preserving copy whose initial state has no incoming
/// transitions: a fresh initial duplicates the old one's outgoing
/// behaviour and acceptance. Returns the input unchanged when it
/// already has the property.
Dfa normalize_dfa(const Dfa& dfa);

/// All label words of the path (one letter choice per vertex and edge),
/// sorted and deduplicated. A single-vertex path yields that vertex's
/// labels. Throws when consecutive entries are not edges.
std::vector<std::vector<std::string>> path_labels(const LabelledGraph& g,
                                                  const std::vector<int>& path);

/// The edge relation E_L: (u,v) present iff some path from u to v has a
/// label word accepted by the automaton. Computed per source by a
/// reachability fixpoint over (vertex, state) pairs.
std::vector<std::pair<int, int>> edges_by_language(const LabelledGraph& g, const Dfa& dfa);

/// The bounded-out-degree graph on V x Q that represents E_L: edges from
/// (v,q0) by v's labels, letter-then-vertex-label steps between non-
/// initial states, and returns to (v,q0) from accepting states. Requires
/// a normalized automaton.
struct RegexpRepresentation {
    Graph graph;
    std::vector<std::string> g_vertex_ids;  // the V x {q0} layer, sorted
};
RegexpRepresentation represent_by_regexp(const LabelledGraph& g, const Dfa& dfa);

LabelledGraph parse_lgraph(std::string_view text);
std::string emit_lgraph(const LabelledGraph& g);
Dfa parse_dfa(std::string_view text);
std::string emit_dfa(const Dfa& d);

}  // namespace gsynt::labels
