#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "support.hpp"

using namespace linkinv;
using testsupport::fixture_path;
using testsupport::load_fixture;
using testsupport::read_file;

TEST_CASE("parser builds a two-vertex graph in file order") {
    auto in = parse_plumbing("vertex a -2\nvertex b -3\nedge a b\n");
    REQUIRE(in.graph.size() == 2);
    CHECK(in.graph.vertex(0).id == "a");
    CHECK(in.graph.vertex(0).weight == -2);
    CHECK(in.graph.vertex(1).weight == -3);
    CHECK(in.graph.edges().size() == 1);
    CHECK_FALSE(in.seifert.has_value());
}

TEST_CASE("D4 fixture is a four-vertex star of -2s") {
    PlumbingGraph g = load_fixture("corpus/d4.plumb");
    REQUIRE(g.size() == 4);
    for (const Vertex& v : g.vertices()) CHECK(v.weight == -2);
    CHECK(g.degree(g.index_of("c")) == 3);
    CHECK(g.is_tree());
}

TEST_CASE("parser error cases") {
    CHECK_THROWS_WITH_AS(parse_plumbing("edge a b\n"), doctest::Contains("dangling endpoint a"),
                         ParseError);
    CHECK_THROWS_AS(parse_plumbing("vertex a -2\nvertex a -3\n"), ParseError);
    CHECK_THROWS_WITH_AS(parse_plumbing("vertex a -2\nedge a a\n"),
                         doctest::Contains("self-loop"), ParseError);
    CHECK_THROWS_AS(parse_plumbing("vertex a -2\nvertex b -2\nedge a b\nedge b a\n"), ParseError);
    // syntax errors carry line numbers
    try {
        parse_plumbing("vertex a -2\nfrobnicate\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    try {
        parse_plumbing("vertex a -2\nvertex b x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_plumbing("seifert -2 1/2 1/2 3/2\n"), ParseError);
    CHECK_THROWS_AS(parse_plumbing("vertex a -2\nseifert -2 1/2 1/2 1/2\n"), ParseError);
}

TEST_CASE("parser accepts nonzero genus, comments, and CRLF line endings") {
    auto in = parse_plumbing("# a comment\nvertex a -2 genus 1  # trailing\n");
    CHECK(in.graph.vertex(0).genus == 1);
    auto crlf = parse_plumbing("vertex a -2\r\nvertex b -3\r\nedge a b\r\n");
    CHECK(crlf.graph.size() == 2);
}

TEST_CASE("hj expansion of integers and small rationals") {
    CHECK(hj_expansion(Rat(-2)).terms == std::vector<Int>{-2});
    CHECK(hj_expansion(Rat(-3, 2)).terms == std::vector<Int>{-2, -2});
    CHECK(hj_expansion(Rat(-9, 4)).terms == std::vector<Int>{-3, -2, -2, -2});

    auto [num, den] = oracles::cf_fold(hj_expansion(Rat(-9, 4)).terms);
    CHECK(num == -9);
    CHECK(den == 4);
}

TEST_CASE("no shorter all-below-minus-one expansion hits -9/4") {
    // any candidate term outside [-9,-2] overshoots; enumerate the rest
    for (int len = 1; len <= 3; ++len) {
        std::vector<int> idx(len, 0);
        for (;;) {
            std::vector<Int> terms(len);
            for (int i = 0; i < len; ++i) terms[i] = Int(-2 - idx[i]);
            auto [num, den] = oracles::cf_fold(terms);
            CHECK((num != -9 || den != 4));
            int pos = 0;
            while (pos < len && idx[pos] == 7) idx[pos++] = 0;
            if (pos == len) break;
            ++idx[pos];
        }
    }
}

TEST_CASE("hj expansion rejects x >= -1") {
    CHECK_THROWS_AS(hj_expansion(Rat(-1)), PreconditionError);
    CHECK_THROWS_AS(hj_expansion(Rat(-1, 2)), PreconditionError);
    CHECK_THROWS_AS(hj_expansion(Rat(2)), PreconditionError);
}

TEST_CASE("hj round trip for all p/q with p <= 200") {
    for (long p = 2; p <= 200; ++p)
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            CFExpansion cf = hj_expansion(Rat(-p, q));
            for (const Int& t : cf.terms) REQUIRE(t <= -2);
            auto [num, den] = oracles::cf_fold(cf.terms);
            REQUIRE(num == -p);
            REQUIRE(den == q);
            REQUIRE(evaluate(cf) == Rat(-p, q));
        }
}

TEST_CASE("seifert conversion: D4") {
    SeifertData s{-2, Rat(1, 2), Rat(1, 2), Rat(1, 2)};
    PlumbingGraph g = seifert_to_plumbing(s);
    REQUIRE(g.size() == 4);
    CHECK(g.vertex(0).id == "v0");
    CHECK(g.vertex(0).weight == -2);
    for (std::size_t i = 1; i < 4; ++i) CHECK(g.vertex(i).weight == -2);
    CHECK(g.degree(0) == 3);
    CHECK(vertex_degrees(g) == std::vector<Int>{3, 1, 1, 1});
}

TEST_CASE("seifert conversion: Gamma_p legs") {
    long p = 4;
    SeifertData s{-2, Rat(1, 3), Rat(2, 3), Rat(p, p + 1)};
    PlumbingGraph g = seifert_to_plumbing(s);
    REQUIRE(g.size() == static_cast<std::size_t>(1 + 1 + 2 + p));
    CHECK(g.vertex(g.index_of("a1")).weight == -3);
    CHECK(g.vertex(g.index_of("b1")).weight == -2);
    CHECK(g.vertex(g.index_of("b2")).weight == -2);
    for (long i = 1; i <= p; ++i)
        CHECK(g.vertex(g.index_of("c" + std::to_string(i))).weight == -2);
}

TEST_CASE("seifert conversion: the degenerate -6/5 example") {
    CHECK(hj_expansion(Rat(-6, 5)).terms == std::vector<Int>(5, Int(-2)));
    SeifertData s{-2, Rat(1, 2), Rat(2, 3), Rat(5, 6)};
    PlumbingGraph g = seifert_to_plumbing(s);
    CHECK(g.size() == 9);  // 1 + 1 + 2 + 5
}

TEST_CASE("seifert vertex count equals 1 + sum of leg lengths") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        long q1 = std::uniform_int_distribution<long>(2, 30)(rng);
        long p1 = std::uniform_int_distribution<long>(1, q1 - 1)(rng);
        long q2 = std::uniform_int_distribution<long>(2, 30)(rng);
        long p2 = std::uniform_int_distribution<long>(1, q2 - 1)(rng);
        long q3 = std::uniform_int_distribution<long>(2, 30)(rng);
        long p3 = std::uniform_int_distribution<long>(1, q3 - 1)(rng);
        SeifertData s{-3, Rat(p1, q1), Rat(p2, q2), Rat(p3, q3)};
        std::size_t total = 1;
        for (const Rat& r : {s.r1, s.r2, s.r3}) total += hj_expansion(Rat(-1) / r).terms.size();
        CHECK(seifert_to_plumbing(s).size() == total);
    }
}

TEST_CASE("seifert rejects coefficients outside (0,1)") {
    CHECK_THROWS_AS(seifert_to_plumbing(SeifertData{-2, Rat(1), Rat(1, 2), Rat(1, 2)}),
                    PreconditionError);
    CHECK_THROWS_AS(seifert_to_plumbing(SeifertData{-2, Rat(0), Rat(1, 2), Rat(1, 2)}),
                    PreconditionError);
}

TEST_CASE("vertex degrees") {
    auto single = parse_plumbing("vertex a -5\n").graph;
    CHECK(vertex_degrees(single) == std::vector<Int>{0});
    PlumbingGraph gp = testsupport::gamma_family(3);
    std::vector<Int> d = vertex_degrees(gp);
    CHECK(d[gp.index_of("c")] == 3);
    CHECK(d[gp.index_of("b1")] == 2);
    CHECK(d[gp.index_of("b2")] == 1);
    CHECK(d[gp.index_of("a")] == 1);
}

TEST_CASE("parse of serialize is the identity") {
    for (const char* name :
         {"corpus/d4.plumb", "corpus/gamma_p3.plumb", "corpus/m2.plumb", "corpus/e8.plumb"}) {
        PlumbingGraph g = load_fixture(name);
        PlumbingGraph round = parse_plumbing(g.serialize()).graph;
        CHECK(round == g);
        CHECK(round.serialize() == g.serialize());
    }
    // genus survives the round trip
    PlumbingGraph g = parse_plumbing("vertex a -2 genus 2\nvertex b -3\nedge a b\n").graph;
    CHECK(parse_plumbing(g.serialize()).graph == g);
}

TEST_CASE("seifert fixture parses to graph plus seifert data") {
    auto in = parse_plumbing(read_file(fixture_path("corpus/y335.plumb")));
    REQUIRE(in.seifert.has_value());
    CHECK(in.seifert->e0 == -3);
    CHECK(in.graph.size() == 4);
}
