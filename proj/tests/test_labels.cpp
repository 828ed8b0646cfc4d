#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "gsynt/generate.hpp"
#include "gsynt/labelled_graph.hpp"
#include "gsynt/regexp.hpp"
#include "helpers.hpp"

using namespace gsynt;
using namespace gsynt::labels;
using test_helpers::edges_by_language_oracle;
using test_helpers::for_each_word;

namespace {

// The worked line-graph example: vertices 0..12 labelled 0, forward
// edges labelled 1, backward edges labelled -1.
LabelledGraph line_graph(int top) {
    LabelledGraphBuilder b;
    b.alphabet({"0", "1", "-1"});
    auto name = [](int n) {
        std::string s = std::to_string(n);
        return "n" + std::string(2 - s.size(), '0') + s;
    };
    for (int n = 0; n <= top; ++n) b.vertex(name(n), {"0"});
    for (int n = 0; n < top; ++n) {
        b.edge(name(n), name(n + 1), {"1"});
        b.edge(name(n + 1), name(n), {"-1"});
    }
    return b.build();
}

Dfa all_single_letters(const std::vector<std::string>& sigma) {
    DfaBuilder b;
    b.state("s", true, false).state("one", false, true).state("dead", false, false);
    for (const auto& l : sigma) {
        b.trans("s", l, "one");
        b.trans("one", l, "dead");
        b.trans("dead", l, "dead");
    }
    return b.build();
}

}  // namespace

TEST_CASE("labelled graph validation and round trip") {
    CHECK_THROWS_AS(LabelledGraphBuilder{}.alphabet({"a"}).vertex("v", {}).build(),
                    ValidationError);
    CHECK_THROWS_AS(LabelledGraphBuilder{}.alphabet({"a"}).vertex("v", {"b"}).build(),
                    ValidationError);

    Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        LabelledGraph g = random_lgraph(rng, 6, 3);
        CHECK(parse_lgraph(emit_lgraph(g)) == g);
    }
    LabelledGraph line = line_graph(12);
    CHECK(parse_lgraph(emit_lgraph(line)) == line);
}

TEST_CASE("dfa validation, round trip, normalize") {
    CHECK_THROWS_AS(parse_dfa("dfa\nstate a initial\nstate b\ntrans a x a\n"), ValidationError);
    CHECK_THROWS_AS(parse_dfa("dfa\nstate a\ntrans a x a\n"), ValidationError);
    CHECK_THROWS_AS(
        parse_dfa("dfa\nstate a initial\ntrans a x a\ntrans a x b\nstate b\n"),
        ValidationError);

    // already normalized: returned unchanged
    Dfa line = parse_dfa("dfa\nstate s initial\nstate t accepting\ntrans s x t\ntrans t x t\n");
    CHECK(normalize_dfa(line) == line);

    // single all-accepting state: fresh initial, same language
    Dfa loop = parse_dfa("dfa\nstate q initial accepting\ntrans q x q\ntrans q y q\n");
    Dfa norm = normalize_dfa(loop);
    CHECK(norm.size() == 2);
    CHECK_FALSE(norm.initial_has_incoming());
    CHECK(test_helpers::languages_equal_upto(loop, norm, 6));

    Rng rng(5);
    std::vector<std::string> sigma{"a", "b", "c", "d"};
    for (int i = 0; i < 30; ++i) {
        Dfa d = random_dfa(rng, 4, sigma);
        Dfa n = normalize_dfa(d);
        CHECK_FALSE(n.initial_has_incoming());
        CHECK(test_helpers::languages_equal_upto(d, n, 8));
        CHECK(parse_dfa(emit_dfa(d)) == d);
    }
}

TEST_CASE("path labels") {
    LabelledGraphBuilder b;
    b.alphabet({"a", "b", "x"});
    b.vertex("u", {"a"}).vertex("v", {"b"}).edge("u", "v", {"x"});
    LabelledGraph g = b.build();

    auto single = path_labels(g, {g.index_of("u")});
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::vector<std::string>{"a"});

    auto two = path_labels(g, {g.index_of("u"), g.index_of("v")});
    REQUIRE(two.size() == 1);
    CHECK(two[0] == std::vector<std::string>{"a", "x", "b"});

    CHECK_THROWS_AS(path_labels(g, {g.index_of("v"), g.index_of("u")}), ValidationError);
    CHECK_THROWS_AS(path_labels(g, {}), ValidationError);

    // two labels on the start vertex: two words
    LabelledGraphBuilder c;
    c.alphabet({"a", "b", "x"});
    c.vertex("u", {"a", "b"}).vertex("v", {"b"}).edge("u", "v", {"x"});
    CHECK(path_labels(c.build(), {0, 1}).size() == 2);
}

TEST_CASE("edges_by_language: all single letters give the self pairs") {
    Rng rng(77);
    for (int i = 0; i < 20; ++i) {
        LabelledGraph g = random_lgraph(rng, 5, 3);
        Dfa d = all_single_letters(g.alphabet);
        auto el = edges_by_language(g, d);
        std::vector<std::pair<int, int>> expect;
        for (int v = 0; v < g.size(); ++v) expect.emplace_back(v, v);
        CHECK(el == expect);
    }
}

TEST_CASE("edges_by_language matches the worked line-graph example") {
    LabelledGraph g = line_graph(12);
    Dfa d = cli::compile_regexp("((0.1.0.1.0.1)* + (0.-1.0.-1.0.-1)*).0", g.alphabet);
    auto el = edges_by_language(g, d);
    std::set<std::pair<int, int>> got(el.begin(), el.end());
    std::set<std::pair<int, int>> expect;
    for (int n = 0; n <= 12; ++n)
        for (int m = 0; m <= 12; ++m)
            if ((m - n) % 3 == 0) expect.emplace(n, m);
    CHECK(got == expect);
}

TEST_CASE("edges_by_language matches bounded path enumeration") {
    Rng rng(13);
    std::vector<std::string> sigma{"a", "b"};
    for (int i = 0; i < 40; ++i) {
        LabelledGraph g = random_lgraph(rng, 4, 2);
        Dfa d = random_dfa(rng, 3, sigma);
        auto el = edges_by_language(g, d);
        std::set<std::pair<int, int>> got(el.begin(), el.end());
        CHECK(got == edges_by_language_oracle(g, d, g.size() * d.size()));
    }
}

TEST_CASE("edges_by_language is monotone in the language") {
    Rng rng(80);
    std::vector<std::string> sigma{"a", "b"};
    for (int i = 0; i < 30; ++i) {
        LabelledGraph g = random_lgraph(rng, 5, 2);
        Dfa d1 = random_dfa(rng, 3, sigma);
        Dfa d2 = test_helpers::dfa_union(d1, random_dfa(rng, 3, sigma));
        auto e1 = edges_by_language(g, d1);
        auto e2 = edges_by_language(g, d2);
        CHECK(std::includes(e2.begin(), e2.end(), e1.begin(), e1.end()));
    }
}

TEST_CASE("represent_by_regexp structure") {
    // empty language: no returns to the initial layer at all
    LabelledGraph g = line_graph(3);
    Dfa empty = parse_dfa(
        "dfa\nstate s initial\nstate t\n"
        "trans s 0 t\ntrans s 1 t\ntrans s -1 t\n"
        "trans t 0 t\ntrans t 1 t\ntrans t -1 t\n");
    auto rep = represent_by_regexp(g, empty);
    std::set<std::string> layer(rep.g_vertex_ids.begin(), rep.g_vertex_ids.end());
    for (auto [a, b] : rep.graph.edge_list())
        CHECK_FALSE(layer.count(rep.graph.ids[b]));
    CHECK(edges_by_language(g, empty).empty());

    // degree bound: out-degree <= d_out(G) * |Q| + |Q|
    Rng rng(3);
    std::vector<std::string> sigma{"a", "b"};
    for (int i = 0; i < 30; ++i) {
        LabelledGraph lg = random_lgraph(rng, 5, 2);
        Dfa d = normalize_dfa(random_dfa(rng, 4, sigma));
        auto r = represent_by_regexp(lg, d);
        int dout = 0;
        std::vector<std::vector<int>> adj = lg.out_adjacency();
        for (const auto& row : adj) dout = std::max(dout, static_cast<int>(row.size()));
        CHECK(r.graph.max_out_degree() <= dout * d.size() + d.size());
    }

    // non-normalized automata are rejected
    Dfa loop = parse_dfa("dfa\nstate q initial accepting\ntrans q 0 q\ntrans q 1 q\ntrans q -1 q\n");
    CHECK_THROWS_AS(represent_by_regexp(g, loop), ValidationError);
}

TEST_CASE("regexp compiler") {
    std::vector<std::string> sigma{"a", "b"};
    Dfa d = cli::compile_regexp("(a.b)*", sigma);
    CHECK(d.accepts({}));
    CHECK(d.accepts({"a", "b"}));
    CHECK(d.accepts({"a", "b", "a", "b"}));
    CHECK_FALSE(d.accepts({"a"}));
    CHECK_FALSE(d.accepts({"b", "a"}));

    Dfa u = cli::compile_regexp("a+b.b*", sigma);
    CHECK(u.accepts({"a"}));
    CHECK(u.accepts({"b"}));
    CHECK(u.accepts({"b", "b", "b"}));
    CHECK_FALSE(u.accepts({}));
    CHECK_FALSE(u.accepts({"a", "b"}));

    CHECK_THROWS_AS(cli::compile_regexp("a.(b", sigma), ValidationError);
    CHECK_THROWS_AS(cli::compile_regexp("c", sigma), ValidationError);
    CHECK_THROWS_AS(cli::compile_regexp("", sigma), ValidationError);
}
