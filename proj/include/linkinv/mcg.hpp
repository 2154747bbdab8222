#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "linkinv/common.hpp"
#include "linkinv/lattice.hpp"

namespace linkinv {

// Compact oriented surface of genus g with b boundary components, carrying a
// set of named curves with integer homology classes in the rank-(2g+b-1)
// basis (a_1, b_1, ..., a_g, b_g, d_1, ..., d_{b-1}). The intersection form
// is symplectic on the genus pairs and zero on the boundary classes.
// Geometric disjointness of curves is fixture data: homology pairing zero is
// not evidence that two twists commute.
class SurfaceModel {
public:
    SurfaceModel(std::string name, int genus, int boundary);

    const std::string& name() const { return name_; }
    int genus() const { return genus_; }
    int boundary_count() const { return boundary_; }
    std::size_t rank() const { return 2 * static_cast<std::size_t>(genus_) + boundary_ - 1; }
    Int euler_characteristic() const { return Int(2 - 2 * genus_ - boundary_); }

    void add_curve(const std::string& name, std::vector<Int> cls);
    void declare_disjoint(const std::string& c1, const std::string& c2);

    bool has_curve(const std::string& name) const { return curves_.count(name) != 0; }
    const std::vector<Int>& curve(const std::string& name) const;  // throws on unknown name
    const std::map<std::string, std::vector<Int>>& curves() const { return curves_; }
    bool disjoint(const std::string& c1, const std::string& c2) const;

    Int pairing(const std::vector<Int>& u, const std::vector<Int>& v) const;
    IntMatrix form_matrix() const;  // the skew matrix J with <u,v> = u^T J v

private:
    std::string name_;
    int genus_;
    int boundary_;
    std::map<std::string, std::vector<Int>> curves_;
    std::set<std::pair<std::string, std::string>> disjoint_;
};

// One signed Dehn twist; a bare name is right-handed (+1), name^-1 left-handed.
struct Twist {
    std::string curve;
    int exponent = 1;

    bool operator==(const Twist&) const = default;
};

using TwistWord = std::vector<Twist>;

TwistWord parse_word(const SurfaceModel& s, const std::vector<std::string>& tokens);
std::string word_to_string(const TwistWord& w);
TwistWord inverse_word(const TwistWord& w);
TwistWord concat(const TwistWord& u, const TwistWord& v);

// Transvection of a single twist: x -> x + e <x,c> c.
IntMatrix transvection(const SurfaceModel& s, const Twist& t);

// Product of transvections, rightmost twist applied first.
IntMatrix homology_action(const SurfaceModel& s, const TwistWord& w);

struct Relation {
    std::string name;
    TwistWord lhs;
    TwistWord rhs;
};

enum class RelationVerdict { EqualOnHomology, DistinctOnHomology };

// Necessary, not sufficient: boundary-parallel twists act trivially, so the
// homology action is not faithful.
RelationVerdict verify_relation(const SurfaceModel& s, const Relation& r);

enum class MoveKind { Rule, Rotate, Commute, Cancel, Search };

struct Move {
    MoveKind kind = MoveKind::Rule;
    std::string rule_name;  // set for Rule moves
};

struct Derivation {
    std::string model;
    std::vector<TwistWord> words;  // n >= 2 steps
    std::vector<Move> moves;       // n - 1 moves, moves[i] connects words[i] -> words[i+1]
};

struct DerivationVerdict {
    bool valid = false;
    std::size_t failing_step = 0;  // 1-based index of the first bad move, 0 when valid
    std::string reason;
    // Accumulated conjugator from rotate moves: action(first) = C action(last) C^-1.
    IntMatrix conjugator;
    bool conjugated = false;  // any rotate move present
};

// Each adjacent pair must differ by exactly one move: a subword replacement
// from the registered rules (either direction), a cyclic rotation, a
// commutation of disjoint twists (trace equivalence), an adjacent t t^-1
// cancellation/insertion, or a bounded rewrite search bridging the pair.
// Rule, commute, cancel and search steps must be equal on homology; rotate
// steps conjugate by the rotated prefix.
DerivationVerdict verify_derivation(const SurfaceModel& s, const Derivation& d,
                                    const std::vector<Relation>& rules,
                                    std::size_t search_depth = 6);

// Words equal modulo reordering of disjoint twists (Mazurkiewicz traces).
bool trace_equivalent(const SurfaceModel& s, const TwistWord& u, const TwistWord& v);

struct SquareVerdict {
    bool equal_on_homology = false;   // action(w.w) == action(target)
    std::optional<bool> script_valid; // set when a reduction script was supplied
    std::string detail;
};

// Checks homology_action(w.w) == homology_action(target); a supplied script
// must additionally derive w.w -> target move by move.
SquareVerdict check_square_identity(const SurfaceModel& s, const TwistWord& w,
                                    const TwistWord& target, const std::vector<Relation>& rules,
                                    const Derivation* reduction_script = nullptr);

struct AbstractOpenBook {
    SurfaceModel page;
    TwistWord monodromy;
};

struct StabilizationSpec {
    std::string curve_name;     // name for the new curve over the handle
    std::vector<Int> old_part;  // routing through the old surface, old-basis coordinates
};

// Attach a 1-handle along one boundary component (b grows by 1, homology rank
// by 1) and compose the monodromy with the right twist over the new curve,
// which crosses the handle exactly once.
AbstractOpenBook positive_stabilization(const AbstractOpenBook& ob, const StabilizationSpec& spec);

// Breadth-first search for a move-by-move derivation from `start` to any word
// trace-equivalent to `target`, up to `depth` moves. Moves: registered rules
// both ways, adjacent disjoint transpositions, adjacent cancellations.
std::optional<Derivation> bounded_rewrite_search(const SurfaceModel& s, const TwistWord& start,
                                                 const TwistWord& target,
                                                 const std::vector<Relation>& rules,
                                                 std::size_t depth = 6);

// Fixture tables for the standard model surfaces: "one_holed_torus",
// "two_holed_torus", "three_holed_torus", "four_holed_torus".
const std::map<std::string, SurfaceModel>& standard_models();
const SurfaceModel& standard_model(const std::string& name);
const std::vector<Relation>& standard_relations(const SurfaceModel& s);

// Script format: `surface <model-name>` line, then alternating
// `word <tokens...>` and `move <rule-name>` lines; token x^-1 for a left
// twist, x^k expands to k copies. Built-in move names: rotate, commute,
// cancel, search.
Derivation parse_derivation_script(std::string_view text);

}  // namespace linkinv
