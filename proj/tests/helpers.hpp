#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gsynt/labelled_graph.hpp"

namespace test_helpers {

// Product automaton accepting the union of the two languages; both
// automata must share the alphabet.
inline gsynt::labels::Dfa dfa_union(const gsynt::labels::Dfa& a, const gsynt::labels::Dfa& b) {
    using namespace gsynt::labels;
    if (a.alphabet != b.alphabet) throw gsynt::ValidationError("alphabet mismatch");
    DfaBuilder out;
    auto name = [](int x, int y) { return "u" + std::to_string(x) + "_" + std::to_string(y); };
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < b.size(); ++y)
            out.state(name(x, y), x == a.initial && y == b.initial,
                      a.accepting[x] || b.accepting[y]);
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < b.size(); ++y)
            for (std::size_t l = 0; l < a.alphabet.size(); ++l)
                out.trans(name(x, y), a.alphabet[l], name(a.delta[x][l], b.delta[y][l]));
    return out.build();
}

// Calls fn on every word over `alphabet` of length <= max_len.
inline void for_each_word(const std::vector<std::string>& alphabet, int max_len,
                          const std::function<void(const std::vector<std::string>&)>& fn) {
    std::vector<std::string> word;
    std::function<void()> rec = [&]() {
        fn(word);
        if (static_cast<int>(word.size()) == max_len) return;
        for (const auto& l : alphabet) {
            word.push_back(l);
            rec();
            word.pop_back();
        }
    };
    rec();
}

inline bool languages_equal_upto(const gsynt::labels::Dfa& a, const gsynt::labels::Dfa& b,
                                 int max_len) {
    bool equal = true;
    for_each_word(a.alphabet, max_len, [&](const std::vector<std::string>& w) {
        if (a.accepts(w) != b.accepts(w)) equal = false;
    });
    return equal;
}

// Path-enumeration oracle for E_L: walks every vertex sequence of length
// <= max_len from u and asks whether some label word is accepted.
inline std::set<std::pair<int, int>> edges_by_language_oracle(const gsynt::labels::LabelledGraph& g,
                                                              const gsynt::labels::Dfa& dfa,
                                                              int max_len) {
    std::set<std::pair<int, int>> found;
    auto adj = g.out_adjacency();
    for (int u = 0; u < g.size(); ++u) {
        std::vector<int> path{u};
        std::function<void()> rec = [&]() {
            for (const auto& word : gsynt::labels::path_labels(g, path))
                if (dfa.accepts(word)) found.emplace(u, path.back());
            if (static_cast<int>(path.size()) > max_len) return;
            for (int w : adj[path.back()]) {
                path.push_back(w);
                rec();
                path.pop_back();
            }
        };
        rec();
    }
    return found;
}

}  // namespace test_helpers
