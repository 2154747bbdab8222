#include <map>
#include <sstream>

#include "linkinv/mcg.hpp"

// Fixture tables for the model surfaces. Curve systems on a surface are
// fixed only up to symmetry; these coordinates are pinned by the relation and
// derivation test suites. Basis per surface: a, b (genus pair), then puncture classes
// d_1, d_2, ...; the remaining boundary class is minus their sum. The alpha
// curves are parallel copies of a separated by the punctures, so consecutive
// ones differ by the puncture class between them.

namespace linkinv {

namespace {

std::vector<Int> vec(std::initializer_list<long> v) {
    std::vector<Int> out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

Relation make_relation(const SurfaceModel& s, const std::string& name,
                       std::initializer_list<const char*> lhs,
                       std::initializer_list<const char*> rhs) {
    std::vector<std::string> l(lhs.begin(), lhs.end());
    std::vector<std::string> r(rhs.begin(), rhs.end());
    return Relation{name, parse_word(s, l), parse_word(s, r)};
}

SurfaceModel build_one_holed_torus() {
    SurfaceModel s("one_holed_torus", 1, 1);
    s.add_curve("a", vec({1, 0}));
    s.add_curve("b", vec({0, 1}));
    s.add_curve("g", vec({1, 1}));
    s.add_curve("d", vec({0, 0}));
    s.declare_disjoint("a", "d");
    s.declare_disjoint("b", "d");
    s.declare_disjoint("g", "d");
    return s;
}

SurfaceModel build_two_holed_torus() {
    SurfaceModel s("two_holed_torus", 1, 2);
    s.add_curve("a1", vec({1, 0, 0}));
    s.add_curve("a2", vec({1, 0, 1}));
    s.add_curve("b", vec({0, 1, 0}));
    s.add_curve("g", vec({1, 1, 0}));
    s.add_curve("d1", vec({0, 0, 1}));
    s.add_curve("d2", vec({0, 0, -1}));
    s.add_curve("x", vec({0, 0, 1}));  // encircles the puncture, boundary-parallel here
    s.declare_disjoint("a1", "a2");
    for (const char* c : {"a1", "a2", "b", "g", "x"}) {
        s.declare_disjoint(c, "d1");
        s.declare_disjoint(c, "d2");
    }
    s.declare_disjoint("d1", "d2");
    for (const char* c : {"a1", "a2", "b", "g"}) s.declare_disjoint(c, "x");
    return s;
}

SurfaceModel build_three_holed_torus() {
    SurfaceModel s("three_holed_torus", 1, 3);
    s.add_curve("a1", vec({1, 0, 0, 0}));
    s.add_curve("a2", vec({1, 0, 1, 1}));
    s.add_curve("b", vec({0, 1, 0, 0}));
    s.add_curve("g", vec({1, 1, 0, 0}));
    s.add_curve("d1", vec({0, 0, 1, 0}));
    s.add_curve("d2", vec({0, 0, 0, 1}));
    s.add_curve("d3", vec({0, 0, -1, -1}));
    s.add_curve("x", vec({0, 0, 1, 1}));  // encircles both punctures
    s.declare_disjoint("a1", "a2");
    for (const char* c : {"a1", "a2", "b", "g", "x"})
        for (const char* d : {"d1", "d2", "d3"}) s.declare_disjoint(c, d);
    s.declare_disjoint("d1", "d2");
    s.declare_disjoint("d1", "d3");
    s.declare_disjoint("d2", "d3");
    s.declare_disjoint("x", "a1");
    s.declare_disjoint("x", "a2");
    return s;
}

SurfaceModel build_four_holed_torus() {
    SurfaceModel s("four_holed_torus", 1, 4);
    s.add_curve("a1", vec({1, 0, 0, 0, 0}));
    s.add_curve("a2", vec({1, 0, 1, 0, 0}));
    s.add_curve("a3", vec({1, 0, 1, 1, 0}));
    s.add_curve("a4", vec({1, 0, 1, 1, 1}));
    s.add_curve("b", vec({0, 1, 0, 0, 0}));
    s.add_curve("b1", vec({0, 1, 0, 1, 0}));  // beta pushed across the d2 puncture
    s.add_curve("g1", vec({1, 1, 1, 1, 0}));  // t_b(a3)
    s.add_curve("g2", vec({1, 1, 1, 1, 1}));  // t_b(a4)
    s.add_curve("d1", vec({0, 0, 1, 0, 0}));
    s.add_curve("d2", vec({0, 0, 0, 1, 0}));
    s.add_curve("d3", vec({0, 0, 0, 0, 1}));
    s.add_curve("d4", vec({0, 0, -1, -1, -1}));
    const char* alphas[] = {"a1", "a2", "a3", "a4"};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) s.declare_disjoint(alphas[i], alphas[j]);
    for (const char* c : {"a1", "a2", "a3", "a4", "b", "b1", "g1", "g2"})
        for (const char* d : {"d1", "d2", "d3", "d4"}) s.declare_disjoint(c, d);
    const char* ds[] = {"d1", "d2", "d3", "d4"};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) s.declare_disjoint(ds[i], ds[j]);
    s.declare_disjoint("b", "b1");
    return s;
}

std::map<std::string, std::vector<Relation>> build_relations(
    const std::map<std::string, SurfaceModel>& models) {
    std::map<std::string, std::vector<Relation>> out;
    {
        const SurfaceModel& s = models.at("one_holed_torus");
        std::vector<Relation> r;
        r.push_back(make_relation(s, "braid_a_b", {"a", "b", "a"}, {"b", "a", "b"}));
        r.push_back(make_relation(s, "braid_g_b", {"g", "b", "g"}, {"b", "g", "b"}));
        r.push_back(make_relation(s, "gamma_beta", {"g", "b"}, {"b", "a"}));
        r.push_back(make_relation(s, "chain_one_holed", {"d"},
                                  {"a", "b", "a", "b", "a", "b", "a", "b", "a", "b", "a", "b"}));
        out.emplace(s.name(), std::move(r));
    }
    {
        const SurfaceModel& s = models.at("two_holed_torus");
        std::vector<Relation> r;
        r.push_back(make_relation(s, "braid_a1_b", {"a1", "b", "a1"}, {"b", "a1", "b"}));
        r.push_back(make_relation(s, "braid_a2_b", {"a2", "b", "a2"}, {"b", "a2", "b"}));
        r.push_back(make_relation(s, "braid_g_b", {"g", "b", "g"}, {"b", "g", "b"}));
        r.push_back(make_relation(s, "gamma_beta", {"g", "b"}, {"b", "a1"}));
        r.push_back(make_relation(s, "chain_two_holed", {"d2", "x"},
                                  {"a1", "a2", "b", "a1", "a2", "b", "a1", "a2", "b", "a1", "a2",
                                   "b"}));
        out.emplace(s.name(), std::move(r));
    }
    {
        const SurfaceModel& s = models.at("three_holed_torus");
        std::vector<Relation> r;
        r.push_back(make_relation(s, "braid_a1_b", {"a1", "b", "a1"}, {"b", "a1", "b"}));
        r.push_back(make_relation(s, "braid_a2_b", {"a2", "b", "a2"}, {"b", "a2", "b"}));
        r.push_back(make_relation(s, "gamma_beta", {"g", "b"}, {"b", "a1"}));
        r.push_back(make_relation(s, "chain_two_holed", {"d3", "x"},
                                  {"a1", "a2", "b", "a1", "a2", "b", "a1", "a2", "b", "a1", "a2",
                                   "b"}));
        out.emplace(s.name(), std::move(r));
    }
    {
        const SurfaceModel& s = models.at("four_holed_torus");
        std::vector<Relation> r;
        for (const char* a : {"a1", "a2", "a3", "a4"})
            r.push_back(make_relation(s, std::string("braid_") + a + "_b", {a, "b", a},
                                      {"b", a, "b"}));
        r.push_back(make_relation(s, "gamma1_beta", {"g1", "b"}, {"b", "a3"}));
        r.push_back(make_relation(s, "gamma2_beta", {"g2", "b"}, {"b", "a4"}));
        r.push_back(make_relation(s, "beta1_slide", {"b1", "a2", "a3^-1"}, {"a2", "a3^-1", "b"}));
        r.push_back(make_relation(s, "chain_four_holed",
                                  {"a1", "a3", "b", "a2", "a4", "b", "a1", "a3", "b", "a2", "a4",
                                   "b"},
                                  {"d1", "d2", "d3", "d4"}));
        out.emplace(s.name(), std::move(r));
    }
    return out;
}

}  // namespace

const std::map<std::string, SurfaceModel>& standard_models() {
    static const std::map<std::string, SurfaceModel> models = [] {
        std::map<std::string, SurfaceModel> m;
        m.emplace("one_holed_torus", build_one_holed_torus());
        m.emplace("two_holed_torus", build_two_holed_torus());
        m.emplace("three_holed_torus", build_three_holed_torus());
        m.emplace("four_holed_torus", build_four_holed_torus());
        return m;
    }();
    return models;
}

const SurfaceModel& standard_model(const std::string& name) {
    const auto& models = standard_models();
    auto it = models.find(name);
    if (it == models.end()) throw PreconditionError("unknown surface model " + name);
    return it->second;
}

const std::vector<Relation>& standard_relations(const SurfaceModel& s) {
    static const std::map<std::string, std::vector<Relation>> relations =
        build_relations(standard_models());
    auto it = relations.find(s.name());
    if (it == relations.end()) throw PreconditionError("no relations registered for " + s.name());
    return it->second;
}

Derivation parse_derivation_script(std::string_view text) {
    Derivation d;
    const SurfaceModel* model = nullptr;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool expect_word = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) {
            if (t[0] == '#') break;
            toks.push_back(t);
        }
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "surface") {
            if (model) throw ParseError(lineno, "second surface line");
            if (toks.size() != 2) throw ParseError(lineno, "expected: surface <model-name>");
            try {
                model = &standard_model(toks[1]);
            } catch (const PreconditionError& e) {
                throw ParseError(lineno, e.what());
            }
            d.model = toks[1];
        } else if (kw == "word") {
            if (!model) throw ParseError(lineno, "word before surface line");
            if (!expect_word) throw ParseError(lineno, "expected a move line");
            if (toks.size() < 2) throw ParseError(lineno, "empty word");
            try {
                d.words.push_back(
                    parse_word(*model, std::vector<std::string>(toks.begin() + 1, toks.end())));
            } catch (const PreconditionError& e) {
                throw ParseError(lineno, e.what());
            }
            expect_word = false;
        } else if (kw == "move") {
            if (!model) throw ParseError(lineno, "move before surface line");
            if (expect_word) throw ParseError(lineno, "expected a word line");
            if (toks.size() != 2) throw ParseError(lineno, "expected: move <rule-name>");
            Move mv;
            if (toks[1] == "rotate")
                mv.kind = MoveKind::Rotate;
            else if (toks[1] == "commute")
                mv.kind = MoveKind::Commute;
            else if (toks[1] == "cancel")
                mv.kind = MoveKind::Cancel;
            else if (toks[1] == "search")
                mv.kind = MoveKind::Search;
            else
                mv = Move{MoveKind::Rule, toks[1]};
            d.moves.push_back(std::move(mv));
            expect_word = true;
        } else {
            throw ParseError(lineno, "unknown statement '" + kw + "'");
        }
    }
    if (!model) throw ParseError(0, "missing surface line");
    if (d.words.size() < 2) throw ParseError(0, "derivation needs at least two word lines");
    if (d.moves.size() + 1 != d.words.size())
        throw ParseError(0, "derivation must end with a word line");
    return d;
}

}  // namespace linkinv
