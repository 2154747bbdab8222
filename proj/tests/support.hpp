#pragma once

// Shared fixtures for the test suites: the worked graph families in their
// reference enumerations (top row left to right, bottom vertex last).

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linkinv/cycle.hpp"
#include "linkinv/graph.hpp"
#include "linkinv/lattice.hpp"

namespace testsupport {

using namespace linkinv;

inline std::string fixture_path(const std::string& rel) {
    return std::string(LINKINV_FIXTURE_DIR) + "/" + rel;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline PlumbingGraph load_fixture(const std::string& rel) {
    return parse_plumbing(read_file(fixture_path(rel))).graph;
}

// N_n = Y(-2; 1/2, 1/2, 1/n): -2, center -2, -2 on the top row, -n last.
inline PlumbingGraph n_family(long n) {
    std::vector<Vertex> v{{"t1", -2}, {"c", -2}, {"t2", -2}, {"m", Int(-n)}};
    return PlumbingGraph(v, {{"c", "t1"}, {"c", "t2"}, {"c", "m"}});
}

// M_k = Y(-2; 1/3, 1/3, (2k+1)/(2k+3)): -3, center, k-chain of -2, -3; bottom -3 last.
inline PlumbingGraph m_family(long k) {
    std::vector<Vertex> v{{"l", -3}, {"c", -2}};
    std::vector<std::pair<std::string, std::string>> e{{"l", "c"}};
    std::string prev = "c";
    for (long i = 1; i <= k; ++i) {
        std::string id = "k" + std::to_string(i);
        v.push_back({id, -2});
        e.emplace_back(prev, id);
        prev = id;
    }
    v.push_back({"e", -3});
    e.emplace_back(prev, "e");
    v.push_back({"m", -3});
    e.emplace_back("c", "m");
    return PlumbingGraph(v, e);
}

// Gamma_p = resolution graph of Y(-2; 1/3, 2/3, p/(p+1)). Top row reads the
// p-chain outermost first, then the center and the two-vertex leg; -3 last.
inline PlumbingGraph gamma_family(long p) {
    std::vector<Vertex> v;
    std::vector<std::pair<std::string, std::string>> e;
    for (long i = p; i >= 1; --i) {
        v.push_back({"c" + std::to_string(i), -2});
        if (i < p) e.emplace_back("c" + std::to_string(i + 1), "c" + std::to_string(i));
    }
    v.push_back({"c", -2});
    e.emplace_back("c1", "c");
    v.push_back({"b1", -2});
    v.push_back({"b2", -2});
    e.emplace_back("c", "b1");
    e.emplace_back("b1", "b2");
    v.push_back({"a", -3});
    e.emplace_back("c", "a");
    return PlumbingGraph(v, e);
}

// P_n = Y(-2; 1/(n+1), n/(n+1), n/(n+1)).
inline PlumbingGraph p_family(long n) {
    std::vector<Vertex> v;
    std::vector<std::pair<std::string, std::string>> e;
    for (long i = n; i >= 1; --i) {
        v.push_back({"u" + std::to_string(i), -2});
        if (i < n) e.emplace_back("u" + std::to_string(i + 1), "u" + std::to_string(i));
    }
    v.push_back({"c", -2});
    e.emplace_back("u1", "c");
    std::string prev = "c";
    for (long i = 1; i <= n; ++i) {
        std::string id = "w" + std::to_string(i);
        v.push_back({id, -2});
        e.emplace_back(prev, id);
        prev = id;
    }
    v.push_back({"m", Int(-(n + 1))});
    e.emplace_back("c", "m");
    return PlumbingGraph(v, e);
}

// E6/E7/E8 trees, all weights -2, chain enumeration with the short leg last.
inline PlumbingGraph e_tree(int rank) {
    int chain = rank - 1;
    int branch_at = rank == 6 ? 3 : rank == 7 ? 4 : 5;
    std::vector<Vertex> v;
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = 1; i <= chain; ++i) {
        v.push_back({"v" + std::to_string(i), -2});
        if (i > 1) e.emplace_back("v" + std::to_string(i - 1), "v" + std::to_string(i));
    }
    v.push_back({"v" + std::to_string(rank), -2});
    e.emplace_back("v" + std::to_string(branch_at), "v" + std::to_string(rank));
    return PlumbingGraph(v, e);
}

// Linear chain for L(p,q) from the expansion of -p/q.
inline PlumbingGraph lens_chain(long p, long q) {
    CFExpansion cf = hj_expansion(Rat(-p, q));
    std::vector<Vertex> v;
    std::vector<std::pair<std::string, std::string>> e;
    for (std::size_t i = 0; i < cf.terms.size(); ++i) {
        v.push_back({"c" + std::to_string(i + 1), cf.terms[i]});
        if (i > 0) e.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
    }
    return PlumbingGraph(v, e);
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Random tree with all weights in [-7,-2] and no bad vertices; such trees are
// automatically negative definite (weak diagonal dominance, strict at leaves).
inline PlumbingGraph random_no_bad_vertex_tree(std::size_t size, std::mt19937_64& rng) {
    std::vector<std::size_t> parent(size, 0);
    std::vector<int> degree(size, 0);
    for (std::size_t i = 1; i < size; ++i) {
        parent[i] = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
        degree[i] += 1;
        degree[parent[i]] += 1;
    }
    std::vector<Vertex> v;
    std::vector<std::pair<std::string, std::string>> e;
    for (std::size_t i = 0; i < size; ++i) {
        long lo = -7;
        long hi = std::min(-2L, -static_cast<long>(degree[i]));  // e + d <= 0
        long w = std::uniform_int_distribution<long>(lo, hi)(rng);
        v.push_back({"v" + std::to_string(i), Int(w)});
        if (i > 0) e.emplace_back("v" + std::to_string(parent[i]), "v" + std::to_string(i));
    }
    return PlumbingGraph(v, e);
}

}  // namespace testsupport
