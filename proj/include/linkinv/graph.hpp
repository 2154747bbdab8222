#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linkinv/common.hpp"

namespace linkinv {

struct Vertex {
    std::string id;
    Int weight;
    Int genus = 0;

    bool operator==(const Vertex&) const = default;
};

// Weighted plumbing graph. Vertex order is significant: it fixes matrix row
// order and tuple enumeration everywhere downstream.
class PlumbingGraph {
public:
    PlumbingGraph() = default;  // empty graph
    PlumbingGraph(std::vector<Vertex> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    std::size_t index_of(const std::string& id) const;  // throws if unknown
    bool has_vertex(const std::string& id) const { return index_.count(id) != 0; }

    const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }
    std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }

    bool connected() const;
    bool is_tree() const;  // connected and acyclic
    bool all_genus_zero() const;

    // Same graph with vertices reordered: new position i holds old vertex perm[i].
    PlumbingGraph permuted(const std::vector<std::size_t>& perm) const;

    // Vertices in order, then edges with endpoints and lines sorted lexicographically.
    std::string serialize() const;

    bool operator==(const PlumbingGraph& other) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct SeifertData {
    Int e0;
    Rat r1, r2, r3;  // each must lie in the open interval (0,1)
};

// Continued fraction a1 - 1/(a2 - 1/(...)) with every term <= -2.
struct CFExpansion {
    std::vector<Int> terms;
};

Rat evaluate(const CFExpansion& cf);

// Unique all-(<= -2) expansion of a rational x < -1.
CFExpansion hj_expansion(const Rat& x);

// Star-shaped tree: center first (id "v0"), then legs for r1, r2, r3 (id
// prefixes "a", "b", "c"), each from the vertex adjacent to the center outward.
PlumbingGraph seifert_to_plumbing(const SeifertData& s);

std::vector<Int> vertex_degrees(const PlumbingGraph& g);

struct ParsedInput {
    PlumbingGraph graph;
    std::optional<SeifertData> seifert;  // set when the file was a seifert line
};

// Line grammar: `vertex <id> <weight> [genus <g>]`, `edge <id> <id>`,
// `seifert <e0> <p1>/<q1> <p2>/<q2> <p3>/<q3>` (whole-file alternative),
// `#` comments, one statement per line.
ParsedInput parse_plumbing(std::string_view text);

}  // namespace linkinv
