#include "linkinv/mcg.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace linkinv {

SurfaceModel::SurfaceModel(std::string name, int genus, int boundary)
    : name_(std::move(name)), genus_(genus), boundary_(boundary) {
    if (genus < 0 || boundary < 1)
        throw PreconditionError("surface model needs genus >= 0 and boundary >= 1");
}

void SurfaceModel::add_curve(const std::string& name, std::vector<Int> cls) {
    if (cls.size() != rank())
        throw PreconditionError("curve " + name + " has wrong homology dimension");
    if (!curves_.emplace(name, std::move(cls)).second)
        throw PreconditionError("duplicate curve name " + name);
}

void SurfaceModel::declare_disjoint(const std::string& c1, const std::string& c2) {
    curve(c1);
    curve(c2);
    disjoint_.insert(c1 <= c2 ? std::make_pair(c1, c2) : std::make_pair(c2, c1));
}

const std::vector<Int>& SurfaceModel::curve(const std::string& name) const {
    auto it = curves_.find(name);
    if (it == curves_.end())
        throw PreconditionError("unknown curve name " + name + " on " + name_);
    return it->second;
}

bool SurfaceModel::disjoint(const std::string& c1, const std::string& c2) const {
    if (c1 == c2) return true;  // twists along one curve commute
    auto key = c1 <= c2 ? std::make_pair(c1, c2) : std::make_pair(c2, c1);
    return disjoint_.count(key) != 0;
}

Int SurfaceModel::pairing(const std::vector<Int>& u, const std::vector<Int>& v) const {
    // Basis a_1, b_1, ..., a_g, b_g, d_1, ..., d_{b-1}; <a_i,b_i> = 1, d's central.
    Int sum = 0;
    for (int i = 0; i < genus_; ++i)
        sum += u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i];
    return sum;
}

IntMatrix SurfaceModel::form_matrix() const {
    IntMatrix j(rank());
    for (int i = 0; i < genus_; ++i) {
        j(2 * i, 2 * i + 1) = 1;
        j(2 * i + 1, 2 * i) = -1;
    }
    return j;
}

TwistWord parse_word(const SurfaceModel& s, const std::vector<std::string>& tokens) {
    TwistWord w;
    for (const std::string& tok : tokens) {
        std::string name = tok;
        long power = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            try {
                power = std::stol(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw PreconditionError("bad exponent in token '" + tok + "'");
            }
            if (power == 0) throw PreconditionError("zero exponent in token '" + tok + "'");
        }
        s.curve(name);  // validates the name
        int exp = power < 0 ? -1 : 1;
        for (long k = 0; k < (power < 0 ? -power : power); ++k) w.push_back(Twist{name, exp});
    }
    return w;
}

std::string word_to_string(const TwistWord& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out << ' ';
        out << w[i].curve;
        if (w[i].exponent < 0) out << "^-1";
    }
    return out.str();
}

TwistWord inverse_word(const TwistWord& w) {
    TwistWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(Twist{it->curve, -it->exponent});
    return out;
}

TwistWord concat(const TwistWord& u, const TwistWord& v) {
    TwistWord out = u;
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

IntMatrix transvection(const SurfaceModel& s, const Twist& t) {
    const std::vector<Int>& c = s.curve(t.curve);
    const std::size_t n = s.rank();
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> ej(n, Int(0));
        ej[j] = 1;
        Int coef = s.pairing(ej, c) * t.exponent;
        if (coef == 0) continue;
        for (std::size_t i = 0; i < n; ++i) m(i, j) += coef * c[i];
    }
    return m;
}

IntMatrix homology_action(const SurfaceModel& s, const TwistWord& w) {
    IntMatrix m = IntMatrix::identity(s.rank());
    for (const Twist& t : w) m = m * transvection(s, t);
    return m;
}

RelationVerdict verify_relation(const SurfaceModel& s, const Relation& r) {
    return homology_action(s, r.lhs) == homology_action(s, r.rhs)
               ? RelationVerdict::EqualOnHomology
               : RelationVerdict::DistinctOnHomology;
}

namespace {

bool letters_commute(const SurfaceModel& s, const Twist& x, const Twist& y) {
    return s.disjoint(x.curve, y.curve);
}

TwistWord project(const TwistWord& w, const Twist& x, const Twist& y) {
    TwistWord out;
    for (const Twist& t : w)
        if (t == x || t == y) out.push_back(t);
    return out;
}

bool same_letter_counts(const TwistWord& u, const TwistWord& v) {
    auto key = [](const Twist& t) { return t.curve + (t.exponent < 0 ? "^-1" : ""); };
    std::unordered_map<std::string, long> counts;
    for (const Twist& t : u) ++counts[key(t)];
    for (const Twist& t : v) --counts[key(t)];
    for (const auto& [k, c] : counts)
        if (c != 0) return false;
    return true;
}

}  // namespace

bool trace_equivalent(const SurfaceModel& s, const TwistWord& u, const TwistWord& v) {
    if (u.size() != v.size()) return false;
    if (!same_letter_counts(u, v)) return false;
    // Projection lemma: equal counts plus equal projections onto every
    // dependent letter pair characterize trace equivalence.
    std::vector<Twist> letters;
    for (const Twist& t : u)
        if (std::find(letters.begin(), letters.end(), t) == letters.end()) letters.push_back(t);
    for (std::size_t i = 0; i < letters.size(); ++i)
        for (std::size_t j = i + 1; j < letters.size(); ++j) {
            if (letters_commute(s, letters[i], letters[j])) continue;
            if (project(u, letters[i], letters[j]) != project(v, letters[i], letters[j]))
                return false;
        }
    return true;
}

namespace {

bool rule_step_matches(const TwistWord& w, const TwistWord& next, const TwistWord& from,
                       const TwistWord& to) {
    if (w.size() < from.size() || next.size() != w.size() - from.size() + to.size()) return false;
    for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
        if (!std::equal(from.begin(), from.end(), w.begin() + pos)) continue;
        if (std::equal(w.begin(), w.begin() + pos, next.begin()) &&
            std::equal(to.begin(), to.end(), next.begin() + pos) &&
            std::equal(w.begin() + pos + from.size(), w.end(), next.begin() + pos + to.size()))
            return true;
    }
    return false;
}

// next == w with one adjacent t t^-1 pair inserted or deleted.
bool cancel_step_matches(const TwistWord& w, const TwistWord& next) {
    const TwistWord* longer = &w;
    const TwistWord* shorter = &next;
    if (longer->size() < shorter->size()) std::swap(longer, shorter);
    if (longer->size() != shorter->size() + 2) return false;
    for (std::size_t pos = 0; pos + 1 < longer->size(); ++pos) {
        if ((*longer)[pos].curve != (*longer)[pos + 1].curve ||
            (*longer)[pos].exponent != -(*longer)[pos + 1].exponent)
            continue;
        if (std::equal(longer->begin(), longer->begin() + pos, shorter->begin()) &&
            std::equal(longer->begin() + pos + 2, longer->end(), shorter->begin() + pos))
            return true;
    }
    return false;
}

// Rotation offsets k with next == w[k:] + w[:k].
std::optional<std::size_t> rotation_offset(const TwistWord& w, const TwistWord& next) {
    if (w.size() != next.size()) return std::nullopt;
    for (std::size_t k = 0; k < std::max<std::size_t>(w.size(), 1); ++k) {
        bool ok = true;
        for (std::size_t i = 0; i < w.size() && ok; ++i)
            ok = w[(k + i) % w.size()] == next[i];
        if (ok) return k;
    }
    return std::nullopt;
}

}  // namespace

DerivationVerdict verify_derivation(const SurfaceModel& s, const Derivation& d,
                                    const std::vector<Relation>& rules,
                                    std::size_t search_depth) {
    DerivationVerdict verdict;
    verdict.conjugator = IntMatrix::identity(s.rank());
    if (d.words.size() < 2) {
        verdict.reason = "derivation needs at least two words";
        return verdict;
    }
    if (d.moves.size() + 1 != d.words.size()) {
        verdict.reason = "move count does not match word count";
        return verdict;
    }

    for (std::size_t step = 0; step < d.moves.size(); ++step) {
        const TwistWord& w = d.words[step];
        const TwistWord& next = d.words[step + 1];
        const Move& mv = d.moves[step];
        verdict.failing_step = step + 1;

        switch (mv.kind) {
            case MoveKind::Rule: {
                const Relation* rule = nullptr;
                for (const Relation& r : rules)
                    if (r.name == mv.rule_name) {
                        rule = &r;
                        break;
                    }
                if (!rule) {
                    verdict.reason = "unknown rule " + mv.rule_name;
                    return verdict;
                }
                if (!rule_step_matches(w, next, rule->lhs, rule->rhs) &&
                    !rule_step_matches(w, next, rule->rhs, rule->lhs)) {
                    verdict.reason = "rule " + mv.rule_name + " does not connect the words";
                    return verdict;
                }
                break;
            }
            case MoveKind::Rotate: {
                auto k = rotation_offset(w, next);
                if (!k) {
                    verdict.reason = "words are not cyclic rotations of each other";
                    return verdict;
                }
                TwistWord prefix(w.begin(), w.begin() + *k);
                verdict.conjugator = verdict.conjugator * homology_action(s, prefix);
                verdict.conjugated = verdict.conjugated || *k != 0;
                break;
            }
            case MoveKind::Commute:
                if (!trace_equivalent(s, w, next)) {
                    verdict.reason = "words are not related by commutations of disjoint twists";
                    return verdict;
                }
                break;
            case MoveKind::Cancel:
                if (!cancel_step_matches(w, next)) {
                    verdict.reason = "words do not differ by one adjacent t t^-1 pair";
                    return verdict;
                }
                break;
            case MoveKind::Search:
                if (!bounded_rewrite_search(s, w, next, rules, search_depth)) {
                    verdict.reason = "no rewrite path within depth " +
                                     std::to_string(search_depth);
                    return verdict;
                }
                break;
        }

        if (mv.kind != MoveKind::Rotate &&
            homology_action(s, w) != homology_action(s, next)) {
            verdict.reason = "step is not equal on homology";
            return verdict;
        }
    }

    // action(first) = C action(last) C^-1 by construction; check without inverting.
    if (homology_action(s, d.words.front()) * verdict.conjugator !=
        verdict.conjugator * homology_action(s, d.words.back()))
        throw std::logic_error("derivation conjugator bookkeeping failed");

    verdict.valid = true;
    verdict.failing_step = 0;
    return verdict;
}

SquareVerdict check_square_identity(const SurfaceModel& s, const TwistWord& w,
                                    const TwistWord& target, const std::vector<Relation>& rules,
                                    const Derivation* reduction_script) {
    SquareVerdict out;
    TwistWord square = concat(w, w);
    out.equal_on_homology = homology_action(s, square) == homology_action(s, target);
    if (!out.equal_on_homology) out.detail = "square and target differ on homology";
    if (reduction_script) {
        if (reduction_script->words.empty() || reduction_script->words.front() != square ||
            reduction_script->words.back() != target) {
            out.script_valid = false;
            out.detail = "reduction script endpoints do not match w.w -> target";
            return out;
        }
        DerivationVerdict dv = verify_derivation(s, *reduction_script, rules);
        out.script_valid = dv.valid;
        if (!dv.valid)
            out.detail = "reduction script fails at step " + std::to_string(dv.failing_step) +
                         ": " + dv.reason;
    }
    return out;
}

AbstractOpenBook positive_stabilization(const AbstractOpenBook& ob,
                                        const StabilizationSpec& spec) {
    const SurfaceModel& old = ob.page;
    if (spec.old_part.size() != old.rank())
        throw PreconditionError("stabilizing curve routing has wrong dimension");
    if (old.has_curve(spec.curve_name))
        throw PreconditionError("curve name " + spec.curve_name + " already in use");

    // One handle with both feet on a boundary component: b grows by 1; the new
    // basis vector is the new boundary class, crossed once by the new curve.
    SurfaceModel page(old.name() + "+", old.genus(), old.boundary_count() + 1);
    for (const auto& [name, cls] : old.curves()) {
        std::vector<Int> ext = cls;
        ext.push_back(0);
        page.add_curve(name, std::move(ext));
    }
    std::vector<Int> cls = spec.old_part;
    cls.push_back(1);
    page.add_curve(spec.curve_name, std::move(cls));

    AbstractOpenBook out{std::move(page), ob.monodromy};
    out.monodromy.push_back(Twist{spec.curve_name, 1});
    return out;
}

namespace {

std::string word_key(const TwistWord& w) { return word_to_string(w); }

}  // namespace

std::optional<Derivation> bounded_rewrite_search(const SurfaceModel& s, const TwistWord& start,
                                                 const TwistWord& target,
                                                 const std::vector<Relation>& rules,
                                                 std::size_t depth) {
    struct Node {
        TwistWord word;
        std::size_t parent;
        Move move;
        std::size_t dist;
    };
    std::vector<Node> nodes{{start, 0, Move{}, 0}};
    std::unordered_set<std::string> visited{word_key(start)};
    std::deque<std::size_t> queue{0};

    auto reconstruct = [&](std::size_t idx) {
        Derivation d;
        d.model = s.name();
        std::vector<std::size_t> path;
        for (std::size_t cur = idx; cur != 0; cur = nodes[cur].parent) path.push_back(cur);
        d.words.push_back(start);
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            d.moves.push_back(nodes[*it].move);
            d.words.push_back(nodes[*it].word);
        }
        return d;
    };

    if (trace_equivalent(s, start, target)) {
        Derivation d;
        d.model = s.name();
        d.words = {start, target};
        d.moves = {Move{MoveKind::Commute, ""}};
        return d;
    }

    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        if (nodes[cur].dist == depth) continue;
        const TwistWord w = nodes[cur].word;

        auto visit = [&](TwistWord&& next, Move mv) -> std::optional<Derivation> {
            if (!visited.insert(word_key(next)).second) return std::nullopt;
            nodes.push_back(Node{std::move(next), cur, std::move(mv), nodes[cur].dist + 1});
            if (trace_equivalent(s, nodes.back().word, target)) {
                std::size_t idx = nodes.size() - 1;
                Derivation d = reconstruct(idx);
                if (d.words.back() != target) {
                    d.moves.push_back(Move{MoveKind::Commute, ""});
                    d.words.push_back(target);
                }
                return d;
            }
            queue.push_back(nodes.size() - 1);
            return std::nullopt;
        };

        // Registered rules, both directions, every position.
        for (const Relation& r : rules) {
            for (int direction = 0; direction < 2; ++direction) {
                const TwistWord& from = direction == 0 ? r.lhs : r.rhs;
                const TwistWord& to = direction == 0 ? r.rhs : r.lhs;
                if (w.size() < from.size()) continue;
                for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
                    if (!std::equal(from.begin(), from.end(), w.begin() + pos)) continue;
                    TwistWord next(w.begin(), w.begin() + pos);
                    next.insert(next.end(), to.begin(), to.end());
                    next.insert(next.end(), w.begin() + pos + from.size(), w.end());
                    if (auto d = visit(std::move(next), Move{MoveKind::Rule, r.name})) return d;
                }
            }
        }
        // Adjacent transpositions of commuting twists.
        for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
            if (w[pos] == w[pos + 1] || !letters_commute(s, w[pos], w[pos + 1])) continue;
            TwistWord next = w;
            std::swap(next[pos], next[pos + 1]);
            if (auto d = visit(std::move(next), Move{MoveKind::Commute, ""})) return d;
        }
        // Adjacent cancellations.
        for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
            if (w[pos].curve != w[pos + 1].curve || w[pos].exponent != -w[pos + 1].exponent)
                continue;
            TwistWord next(w.begin(), w.begin() + pos);
            next.insert(next.end(), w.begin() + pos + 2, w.end());
            if (auto d = visit(std::move(next), Move{MoveKind::Cancel, ""})) return d;
        }
    }
    return std::nullopt;
}

}  // namespace linkinv
