#include "linkinv/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace linkinv {

namespace {

std::pair<std::string, std::string> normalized(const std::string& a, const std::string& b) {
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

PlumbingGraph::PlumbingGraph(std::vector<Vertex> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges)
    : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Vertex& v = vertices_[i];
        if (v.genus < 0) throw ParseError(0, "vertex " + v.id + " has negative genus");
        if (!index_.emplace(v.id, i).second)
            throw ParseError(0, "duplicate vertex id " + v.id);
    }
    adjacency_.resize(vertices_.size());
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [a, b] : edges) {
        auto ia = index_.find(a);
        if (ia == index_.end()) throw ParseError(0, "dangling endpoint " + a);
        auto ib = index_.find(b);
        if (ib == index_.end()) throw ParseError(0, "dangling endpoint " + b);
        if (ia->second == ib->second) throw ParseError(0, "self-loop at " + a);
        std::pair<std::size_t, std::size_t> key = std::minmax(ia->second, ib->second);
        if (!seen.insert(key).second) throw ParseError(0, "duplicate edge " + a + " " + b);
        edges_.emplace_back(ia->second, ib->second);
        adjacency_[ia->second].push_back(ib->second);
        adjacency_[ib->second].push_back(ia->second);
    }
}

std::size_t PlumbingGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw PreconditionError("unknown vertex id " + id);
    return it->second;
}

bool PlumbingGraph::connected() const {
    if (vertices_.empty()) return true;
    std::vector<bool> seen(vertices_.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adjacency_[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == vertices_.size();
}

bool PlumbingGraph::is_tree() const {
    return connected() && edges_.size() + 1 == vertices_.size();
}

bool PlumbingGraph::all_genus_zero() const {
    return std::all_of(vertices_.begin(), vertices_.end(),
                       [](const Vertex& v) { return v.genus == 0; });
}

PlumbingGraph PlumbingGraph::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != vertices_.size())
        throw PreconditionError("permutation size mismatch");
    std::vector<Vertex> verts;
    verts.reserve(perm.size());
    for (std::size_t old : perm) verts.push_back(vertices_.at(old));
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [a, b] : edges_)
        edges.emplace_back(vertices_[a].id, vertices_[b].id);
    return PlumbingGraph(std::move(verts), edges);
}

std::string PlumbingGraph::serialize() const {
    std::ostringstream out;
    for (const Vertex& v : vertices_) {
        out << "vertex " << v.id << ' ' << v.weight.get_str();
        if (v.genus != 0) out << " genus " << v.genus.get_str();
        out << '\n';
    }
    std::vector<std::pair<std::string, std::string>> lines;
    for (const auto& [a, b] : edges_)
        lines.push_back(normalized(vertices_[a].id, vertices_[b].id));
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, b] : lines) out << "edge " << a << ' ' << b << '\n';
    return out.str();
}

bool PlumbingGraph::operator==(const PlumbingGraph& other) const {
    if (vertices_ != other.vertices_) return false;
    std::set<std::pair<std::size_t, std::size_t>> mine, theirs;
    for (const auto& [a, b] : edges_) mine.insert(std::minmax(a, b));
    for (const auto& [a, b] : other.edges_) theirs.insert(std::minmax(a, b));
    return mine == theirs;
}

Rat evaluate(const CFExpansion& cf) {
    if (cf.terms.empty()) throw PreconditionError("empty continued fraction");
    Rat v(cf.terms.back());
    for (std::size_t i = cf.terms.size() - 1; i-- > 0;) {
        if (v == 0) throw PreconditionError("zero intermediate in continued fraction");
        v = Rat(cf.terms[i]) - 1 / v;
    }
    return v;
}

CFExpansion hj_expansion(const Rat& x) {
    Rat cur = x;
    cur.canonicalize();  // mpq_class(p, q) arrives unreduced
    if (!(cur < -1)) throw PreconditionError("hj_expansion requires x < -1");
    CFExpansion cf;
    for (;;) {
        Int a;
        mpz_fdiv_q(a.get_mpz_t(), cur.get_num().get_mpz_t(), cur.get_den().get_mpz_t());
        cf.terms.push_back(a);
        Rat rem = cur - Rat(a);  // in [0,1)
        if (rem == 0) break;
        cur = Rat(-1) / rem;     // again < -1
    }
    return cf;
}

PlumbingGraph seifert_to_plumbing(const SeifertData& s) {
    Rat rs[3] = {s.r1, s.r2, s.r3};
    for (Rat& r : rs) {
        r.canonicalize();
        if (!(r > 0 && r < 1))
            throw PreconditionError("seifert coefficient " + r.get_str() + " outside (0,1)");
    }
    std::vector<Vertex> verts;
    std::vector<std::pair<std::string, std::string>> edges;
    verts.push_back(Vertex{"v0", s.e0, 0});
    const char* prefix[3] = {"a", "b", "c"};
    for (int leg = 0; leg < 3; ++leg) {
        CFExpansion cf = hj_expansion(Rat(-1) / rs[leg]);
        std::string prev = "v0";
        for (std::size_t j = 0; j < cf.terms.size(); ++j) {
            std::string id = prefix[leg] + std::to_string(j + 1);
            verts.push_back(Vertex{id, cf.terms[j], 0});
            edges.emplace_back(prev, id);
            prev = id;
        }
    }
    return PlumbingGraph(std::move(verts), edges);
}

std::vector<Int> vertex_degrees(const PlumbingGraph& g) {
    std::vector<Int> d;
    d.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) d.push_back(Int(static_cast<long>(g.degree(i))));
    return d;
}

namespace {

std::vector<std::string> tokenize(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

Int parse_int(const std::string& tok, int line) {
    try {
        return Int(tok);
    } catch (const std::invalid_argument&) {
        throw ParseError(line, "expected integer, got '" + tok + "'");
    }
}

Rat parse_fraction(const std::string& tok, int line) {
    auto slash = tok.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == tok.size())
        throw ParseError(line, "expected fraction p/q, got '" + tok + "'");
    Int p = parse_int(tok.substr(0, slash), line);
    Int q = parse_int(tok.substr(slash + 1), line);
    if (q == 0) throw ParseError(line, "zero denominator in '" + tok + "'");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace

ParsedInput parse_plumbing(std::string_view text) {
    std::vector<Vertex> verts;
    std::vector<std::pair<std::string, std::string>> edges;
    std::optional<SeifertData> seifert;
    bool saw_vertex_or_edge = false;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "vertex") {
            if (seifert) throw ParseError(lineno, "vertex line after seifert line");
            if (toks.size() != 3 && toks.size() != 5)
                throw ParseError(lineno, "expected: vertex <id> <weight> [genus <g>]");
            Vertex v;
            v.id = toks[1];
            v.weight = parse_int(toks[2], lineno);
            if (toks.size() == 5) {
                if (toks[3] != "genus") throw ParseError(lineno, "expected 'genus', got '" + toks[3] + "'");
                v.genus = parse_int(toks[4], lineno);
                if (v.genus < 0) throw ParseError(lineno, "negative genus");
            }
            verts.push_back(std::move(v));
            saw_vertex_or_edge = true;
        } else if (kw == "edge") {
            if (seifert) throw ParseError(lineno, "edge line after seifert line");
            if (toks.size() != 3) throw ParseError(lineno, "expected: edge <id> <id>");
            edges.emplace_back(toks[1], toks[2]);
            saw_vertex_or_edge = true;
        } else if (kw == "seifert") {
            if (saw_vertex_or_edge)
                throw ParseError(lineno, "seifert line mixed with vertex/edge lines");
            if (seifert) throw ParseError(lineno, "second seifert line");
            if (toks.size() != 5)
                throw ParseError(lineno, "expected: seifert <e0> <p1>/<q1> <p2>/<q2> <p3>/<q3>");
            SeifertData s;
            s.e0 = parse_int(toks[1], lineno);
            s.r1 = parse_fraction(toks[2], lineno);
            s.r2 = parse_fraction(toks[3], lineno);
            s.r3 = parse_fraction(toks[4], lineno);
            for (const Rat& r : {s.r1, s.r2, s.r3})
                if (!(r > 0 && r < 1))
                    throw ParseError(lineno, "seifert coefficient " + r.get_str() + " outside (0,1)");
            seifert = s;
        } else {
            throw ParseError(lineno, "unknown statement '" + kw + "'");
        }
    }

    if (seifert) return ParsedInput{seifert_to_plumbing(*seifert), seifert};
    return ParsedInput{PlumbingGraph(std::move(verts), edges), std::nullopt};
}

}  // namespace linkinv
