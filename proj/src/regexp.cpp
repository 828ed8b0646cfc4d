#include "gsynt/regexp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gsynt::cli {

namespace {

struct Token {
    char op;             // '(' ')' '.' '+' '*' or 0 for a letter
    std::string letter;
};

std::vector<Token> lex(std::string_view expr) {
    std::vector<Token> toks;
    std::size_t i = 0;
    auto is_letter_char = [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
               c == '_' || c == '@' || c == '-';
    };
    while (i < expr.size()) {
        char c = expr[i];
        if (c == ' ' || c == '\t') {
            ++i;
        } else if (c == '(' || c == ')' || c == '.' || c == '+' || c == '*') {
            toks.push_back({c, {}});
            ++i;
        } else if (is_letter_char(c)) {
            std::size_t j = i;
            while (j < expr.size() && is_letter_char(expr[j])) ++j;
            toks.push_back({0, std::string(expr.substr(i, j - i))});
            i = j;
        } else {
            throw ValidationError(std::string("bad character '") + c + "' in regexp");
        }
    }
    return toks;
}

// Thompson construction. Transitions carry a letter index or -1 for
// epsilon; each fragment has one start and one accept state.
struct Nfa {
    std::vector<std::vector<std::pair<int, int>>> edges;  // state -> (letter, target)
    int fresh() {
        edges.emplace_back();
        return static_cast<int>(edges.size()) - 1;
    }
};

struct Frag {
    int start, accept;
};

class Parser {
public:
    Parser(const std::vector<Token>& toks, const std::vector<std::string>& alphabet, Nfa& nfa)
        : toks_(toks), alphabet_(alphabet), nfa_(nfa) {}

    Frag parse() {
        Frag f = parse_union();
        if (pos_ != toks_.size()) throw ValidationError("trailing input in regexp");
        return f;
    }

private:
    Frag parse_union() {
        Frag f = parse_concat();
        while (peek('+')) {
            ++pos_;
            Frag g = parse_concat();
            int s = nfa_.fresh(), a = nfa_.fresh();
            nfa_.edges[s].emplace_back(-1, f.start);
            nfa_.edges[s].emplace_back(-1, g.start);
            nfa_.edges[f.accept].emplace_back(-1, a);
            nfa_.edges[g.accept].emplace_back(-1, a);
            f = {s, a};
        }
        return f;
    }

    Frag parse_concat() {
        Frag f = parse_star();
        while (peek('.')) {
            ++pos_;
            Frag g = parse_star();
            nfa_.edges[f.accept].emplace_back(-1, g.start);
            f = {f.start, g.accept};
        }
        return f;
    }

    Frag parse_star() {
        Frag f = parse_atom();
        while (peek('*')) {
            ++pos_;
            int s = nfa_.fresh(), a = nfa_.fresh();
            nfa_.edges[s].emplace_back(-1, f.start);
            nfa_.edges[s].emplace_back(-1, a);
            nfa_.edges[f.accept].emplace_back(-1, f.start);
            nfa_.edges[f.accept].emplace_back(-1, a);
            f = {s, a};
        }
        return f;
    }

    Frag parse_atom() {
        if (pos_ >= toks_.size()) throw ValidationError("regexp ends unexpectedly");
        if (peek('(')) {
            ++pos_;
            Frag f = parse_union();
            if (!peek(')')) throw ValidationError("missing ')' in regexp");
            ++pos_;
            return f;
        }
        const Token& t = toks_[pos_];
        if (t.op != 0) throw ValidationError(std::string("unexpected '") + t.op + "' in regexp");
        auto it = std::find(alphabet_.begin(), alphabet_.end(), t.letter);
        if (it == alphabet_.end())
            throw ValidationError("regexp letter " + t.letter + " not in the alphabet");
        ++pos_;
        int s = nfa_.fresh(), a = nfa_.fresh();
        nfa_.edges[s].emplace_back(static_cast<int>(it - alphabet_.begin()), a);
        return {s, a};
    }

    bool peek(char op) const { return pos_ < toks_.size() && toks_[pos_].op == op; }

    const std::vector<Token>& toks_;
    const std::vector<std::string>& alphabet_;
    Nfa& nfa_;
    std::size_t pos_ = 0;
};

std::set<int> eps_closure(const Nfa& nfa, std::set<int> states) {
    std::vector<int> work(states.begin(), states.end());
    while (!work.empty()) {
        int s = work.back();
        work.pop_back();
        for (auto [l, t] : nfa.edges[s])
            if (l < 0 && states.insert(t).second) work.push_back(t);
    }
    return states;
}

}  // namespace

labels::Dfa compile_regexp(std::string_view expr, const std::vector<std::string>& alphabet) {
    Nfa nfa;
    Frag frag = Parser(lex(expr), alphabet, nfa).parse();

    // subset construction, BFS order for stable state names
    std::map<std::set<int>, int> index;
    std::vector<std::set<int>> subsets;
    std::vector<std::vector<int>> delta;
    auto intern = [&](const std::set<int>& s) {
        auto [it, fresh] = index.emplace(s, static_cast<int>(subsets.size()));
        if (fresh) {
            subsets.push_back(s);
            delta.emplace_back(alphabet.size(), -1);
        }
        return it->second;
    };
    intern(eps_closure(nfa, {frag.start}));
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t l = 0; l < alphabet.size(); ++l) {
            std::set<int> next;
            for (int s : subsets[i])
                for (auto [el, t] : nfa.edges[s])
                    if (el == static_cast<int>(l)) next.insert(t);
            delta[i][l] = intern(eps_closure(nfa, std::move(next)));
        }
    }

    int width = 1, n = static_cast<int>(subsets.size());
    for (int k = n; k >= 10; k /= 10) ++width;
    auto name = [&](int i) {
        std::string num = std::to_string(i);
        return "s" + std::string(width - num.size(), '0') + num;
    };
    labels::DfaBuilder b;
    for (int i = 0; i < n; ++i)
        b.state(name(i), i == 0, subsets[i].count(frag.accept) > 0);
    for (int i = 0; i < n; ++i)
        for (std::size_t l = 0; l < alphabet.size(); ++l)
            b.trans(name(i), alphabet[l], name(delta[i][l]));
    return labels::normalize_dfa(b.build());
}

}  // namespace gsynt::cli
