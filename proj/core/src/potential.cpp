#include "ptri/potential.hpp"

#include "ptri/linear.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace ptri {

std::vector<int> canonical_rotation(const std::vector<int>& cycle) {
    std::vector<int> best = cycle;
    for (std::size_t r = 1; r < cycle.size(); ++r) {
        std::vector<int> rot(cycle.begin() + r, cycle.end());
        rot.insert(rot.end(), cycle.begin(), cycle.begin() + r);
        if (rot < best) best = std::move(rot);
    }
    return best;
}

void add_term(Potential& w, const Scalar& c, const std::vector<int>& cycle) {
    const auto key = canonical_rotation(cycle);
    for (auto it = w.terms.begin(); it != w.terms.end(); ++it)
        if (it->cycle == key) {
            it->coeff += c;
            if (it->coeff.is_zero()) w.terms.erase(it);
            return;
        }
    if (!c.is_zero()) w.terms.push_back({c, key});
}

std::string Potential::to_string(const Quiver& q) const {
    std::ostringstream os;
    if (terms.empty()) return "0";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        Scalar c = terms[i].coeff;
        const bool negative = c.ring().is_rational() && c.rational() < 0;
        if (negative) c = -c;
        if (i)
            os << (negative ? " - " : " + ");
        else if (negative)
            os << "-";
        if (!c.is_one()) os << c << "·";
        os << arrow_word(q, terms[i].cycle);
    }
    return os.str();
}

bool is_triangulation(const PartialTriangulation& t, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    const SurfaceMap map(t);
    for (int c = 0; c < t.boundary_count; ++c) {
        if (t.boundary_points(c).empty())
            return fail("boundary component " + std::to_string(c) + " carries no marked point");
        if (!map.component_attached(c)) return fail("boundary component " + std::to_string(c) + " meets no arc");
    }
    for (const auto& r : map.regions()) {
        if (!r.empty_disc()) return fail("face " + r.id + " is not an empty disc");
        if (map.walks()[r.walks[0]].size() != 3) return fail("face " + r.id + " is not a triangle");
    }
    return true;
}

Potential build_potential(const PartialTriangulation& t, const Quiver& q) {
    std::string why;
    if (!is_triangulation(t, &why)) throw InputError("not a triangulation: " + why);
    Potential w;
    w.ring = t.ring;
    const Rotation rot(t);
    std::set<std::vector<int>> seen;
    for (const auto& tri : small_triangles(t)) {
        std::vector<int> cycle;
        for (int x : tri.corners) cycle.push_back(q.arrow_at(x));
        if (seen.insert(canonical_rotation(cycle)).second) add_term(w, Scalar::one(t.ring), cycle);
    }
    for (std::size_t p = 0; p < t.points.size(); ++p) {
        const auto& pt = t.points[p];
        if (pt.on_boundary || t.rotation[p].empty()) continue;
        const Scalar m(t.ring, static_cast<long>(pt.multiplicity));
        if (m.is_zero()) throw InputError("m_" + pt.id + " = " + std::to_string(pt.multiplicity) + " is not invertible in " + t.ring.name());
        int start = -1;
        for (int h : t.rotation[p])
            if (start < 0 || t.halfedges[h].arc < t.halfedges[start].arc ||
                (t.halfedges[h].arc == t.halfedges[start].arc && h < start))
                start = h;
        std::vector<int> cycle;
        const int len = pt.multiplicity * t.degree(static_cast<int>(p));
        for (int k = 0; k < len; ++k) cycle.push_back(q.arrow_at(rot.advance(start, k)));
        add_term(w, -(pt.lambda / m), cycle);
    }
    return w;
}

PathSum cyclic_derivative(const Potential& w, int arrow) {
    PathSum out;
    for (const auto& term : w.terms) {
        const auto& c = term.cycle;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] != arrow) continue;
            std::vector<int> word(c.begin() + i + 1, c.end());
            word.insert(word.end(), c.begin(), c.begin() + i);
            if (word.empty()) throw InternalError("cyclic derivative of a single-arrow cycle");
            auto [it, fresh] = out.try_emplace(word, Scalar::zero(w.ring));
            it->second += term.coeff;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

std::vector<PathSum> presentation_relations(const Algebra& alg) {
    const auto& t = alg.triangulation();
    const auto& q = alg.quiver();
    const RingSpec ring = alg.ring();
    std::vector<PathSum> rels;
    auto full = [&](int h) { return alg.winding_path({h, alg.full_length(h)}); };
    auto add = [&](PathSum& s, const std::vector<int>& w, const Scalar& c) {
        auto [it, fresh] = s.try_emplace(w, Scalar::zero(ring));
        it->second += c;
        if (it->second.is_zero()) s.erase(it);
    };
    for (const auto& arc : t.arcs) {
        PathSum r;
        const int h0 = arc.ends[0], h1 = arc.ends[1];
        if (t.interior(t.halfedges[h0].point)) add(r, full(h0), t.points[t.halfedges[h0].point].lambda);
        if (t.interior(t.halfedges[h1].point)) add(r, full(h1), -t.points[t.halfedges[h1].point].lambda);
        if (!r.empty()) rels.push_back(std::move(r));
    }
    for (std::size_t h = 0; h < t.halfedges.size(); ++h) {
        if (!t.interior(t.halfedges[h].point)) continue;
        const auto w = full(static_cast<int>(h));
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].source_arc != t.halfedges[h].arc) continue;
            auto word = w;
            word.push_back(static_cast<int>(a));
            rels.push_back({{word, Scalar::one(ring)}});
        }
    }
    for (const auto& bp : alg.bouncing()) {
        PathSum r{{{bp.in_arrow, bp.out_arrow}, Scalar::one(ring)}};
        if (bp.triangle && bp.triangle->replacement)
            add(r, alg.winding_path(*bp.triangle->replacement), -bp.triangle->coefficient);
        rels.push_back(std::move(r));
    }
    return rels;
}

namespace {

// Prefix tree of the paths that avoid every single-term relation.
class PathTrie {
public:
    PathTrie(const Quiver& q, const std::vector<std::vector<int>>& monomials, int max_length, std::size_t budget)
        : q_(q), out_(q.vertices.size()), slot_of_(q.arrows.size(), -1) {
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            auto& v = out_[q.arrows[a].source_arc];
            slot_of_[a] = static_cast<int>(v.size());
            v.push_back(static_cast<int>(a));
        }
        std::vector<std::vector<std::vector<int>>> by_last(q.arrows.size());
        for (const auto& m : monomials)
            if (!m.empty()) by_last[m.back()].push_back(m);
        for (std::size_t v = 0; v < q.vertices.size(); ++v) make(-1, -1, static_cast<int>(v), 0);
        for (std::size_t n = 0; n < parent_.size(); ++n) {
            const int len = length_[n];
            const int vtx = vertex_[n];
            base_[n] = static_cast<int>(slots_.size());
            slots_.resize(slots_.size() + out_[vtx].size(), -1);
            if (len >= max_length) continue;
            for (std::size_t s = 0; s < out_[vtx].size(); ++s) {
                const int a = out_[vtx][s];
                if (contains_suffix(static_cast<int>(n), by_last[a])) continue;
                if (parent_.size() >= budget)
                    throw InputError("path oracle exceeds its budget of " + std::to_string(budget) + " paths");
                const int child = make(static_cast<int>(n), a, q.arrows[a].target_arc, len + 1);
                slots_[base_[n] + s] = child;
            }
        }
    }

    std::size_t size() const { return parent_.size(); }
    int length(int n) const { return length_[n]; }
    int root(int vertex) const { return vertex; }
    int child(int n, int arrow) const {
        if (q_.arrows[arrow].source_arc != vertex_[n]) return -1;
        return slots_[base_[n] + slot_of_[arrow]];
    }
    /// Node of the given path from its source, -1 when it is not in the trie.
    int find(const std::vector<int>& word) const {
        if (word.empty()) return -1;
        int n = root(q_.arrows[word[0]].source_arc);
        for (int a : word) {
            n = child(n, a);
            if (n < 0) return -1;
        }
        return n;
    }
    std::vector<int> word(int n) const {
        std::vector<int> w;
        for (; arrow_[n] >= 0; n = parent_[n]) w.push_back(arrow_[n]);
        std::reverse(w.begin(), w.end());
        return w;
    }
    int prepend(int arrow, int n) const {
        if (q_.arrows[arrow].target_arc != (arrow_[n] >= 0 ? source_of(n) : vertex_[n])) return -1;
        int m = child(root(q_.arrows[arrow].source_arc), arrow);
        for (int a : word(n)) {
            if (m < 0) return -1;
            m = child(m, a);
        }
        return m;
    }

private:
    int source_of(int n) const {
        while (parent_[n] >= 0) n = parent_[n];
        return vertex_[n];
    }
    int make(int parent, int arrow, int vertex, int length) {
        parent_.push_back(parent);
        arrow_.push_back(arrow);
        vertex_.push_back(vertex);
        length_.push_back(length);
        base_.push_back(-1);
        return static_cast<int>(parent_.size()) - 1;
    }
    bool contains_suffix(int n, const std::vector<std::vector<int>>& candidates) const {
        for (const auto& m : candidates) {
            if (static_cast<int>(m.size()) > length_[n] + 1) continue;
            int k = n;
            bool match = true;
            for (int i = static_cast<int>(m.size()) - 2; i >= 0; --i) {
                if (arrow_[k] != m[i]) {
                    match = false;
                    break;
                }
                k = parent_[k];
            }
            if (match) return true;
        }
        return false;
    }

    const Quiver& q_;
    std::vector<std::vector<int>> out_;
    std::vector<int> slot_of_;
    std::vector<int> parent_, arrow_, vertex_, length_, base_, slots_;
};

using Row = SparseRowReducer::Row;

std::size_t closure_rank(const PathTrie& trie, const Quiver& q, RingSpec ring, const std::vector<PathSum>& relations,
                         int bound) {
    SparseRowReducer red(ring);
    std::deque<std::size_t> queue;
    auto push = [&](Row row) {
        if (row.empty()) return;
        if (auto lead = red.insert(std::move(row))) queue.push_back(*lead);
    };
    for (const auto& r : relations) {
        Row row;
        for (const auto& [w, c] : r) {
            const int n = trie.find(w);
            if (n < 0 || trie.length(n) > bound) continue;
            auto [it, fresh] = row.try_emplace(static_cast<std::size_t>(n), Scalar::zero(ring));
            it->second += c;
        }
        push(std::move(row));
    }
    while (!queue.empty()) {
        const Row base = red.pivot_rows().at(queue.front());
        queue.pop_front();
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            for (int side = 0; side < 2; ++side) {
                Row row;
                for (const auto& [n, c] : base) {
                    const int m = side == 0 ? trie.child(static_cast<int>(n), static_cast<int>(a))
                                            : trie.prepend(static_cast<int>(a), static_cast<int>(n));
                    if (m < 0 || trie.length(m) > bound) continue;
                    row.emplace(static_cast<std::size_t>(m), c);
                }
                push(std::move(row));
            }
        }
    }
    return red.rank();
}

std::vector<std::vector<int>> monomials_of(const std::vector<PathSum>& relations) {
    std::vector<std::vector<int>> out;
    for (const auto& r : relations)
        if (r.size() == 1) out.push_back(r.begin()->first);
    return out;
}

std::size_t count_up_to(const PathTrie& trie, int bound) {
    std::size_t c = 0;
    for (std::size_t n = 0; n < trie.size(); ++n)
        if (trie.length(static_cast<int>(n)) <= bound) ++c;
    return c;
}

}  // namespace

std::size_t quotient_dimension(const Quiver& q, RingSpec ring, const std::vector<PathSum>& relations, int bound,
                               std::size_t path_budget, std::size_t* path_count) {
    const auto monomials = monomials_of(relations);
    const PathTrie trie(q, monomials, bound, path_budget);
    if (path_count) *path_count = trie.size();
    return trie.size() - closure_rank(trie, q, ring, relations, bound);
}

PathIdealQuotient quotient_dimension_oracle(const Quiver& q, RingSpec ring, const std::vector<PathSum>& relations,
                                            int bound, std::size_t path_budget) {
    PathIdealQuotient out;
    out.bound = bound;
    const auto monomials = monomials_of(relations);
    const PathTrie trie(q, monomials, bound + 1, path_budget);
    out.paths = trie.size();
    out.dimension = count_up_to(trie, bound) - closure_rank(trie, q, ring, relations, bound);
    out.dimension_next = trie.size() - closure_rank(trie, q, ring, relations, bound + 1);
    return out;
}

int default_oracle_bound(const PartialTriangulation& t) {
    int best = 0;
    for (std::size_t p = 0; p < t.points.size(); ++p)
        best = std::max(best, t.points[p].multiplicity * t.degree(static_cast<int>(p)));
    return 2 * best + 2;
}

PathIdealQuotient presentation_oracle(const Algebra& alg, std::size_t path_budget) {
    const auto rels = presentation_relations(alg);
    const int full = default_oracle_bound(alg.triangulation());
    try {
        return quotient_dimension_oracle(alg.quiver(), alg.ring(), rels, full, path_budget);
    } catch (const InputError&) {
        auto q = quotient_dimension_oracle(alg.quiver(), alg.ring(), rels, full / 2 + 1, path_budget);
        q.reduced_bound = true;
        return q;
    }
}

bool JacobianReport::derivatives_ok() const {
    return std::all_of(derivatives_vanish.begin(), derivatives_vanish.end(), [](const auto& d) { return d.second; });
}

JacobianReport jacobian_consistency_check(const Algebra& alg, std::optional<int> bound, bool run_oracle) {
    const auto& t = alg.triangulation();
    JacobianReport rep;
    rep.potential = build_potential(t, alg.quiver());
    rep.rank = rank_formula(t);
    std::vector<PathSum> derivatives;
    for (std::size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
        auto d = cyclic_derivative(rep.potential, static_cast<int>(a));
        Element value;
        for (const auto& [w, c] : d) {
            const auto p = alg.reduce_path(w);
            if (p.is_zero()) continue;
            auto [it, fresh] = value.try_emplace(p.index, Scalar::zero(alg.ring()));
            it->second += c * p.coeff;
            if (it->second.is_zero()) value.erase(it);
        }
        rep.derivatives_vanish.emplace_back(static_cast<int>(a), value.empty());
        if (!d.empty()) derivatives.push_back(std::move(d));
    }
    if (run_oracle) {
        int b = bound.value_or(default_oracle_bound(t) / 2 + 1);
        rep.oracle = quotient_dimension_oracle(alg.quiver(), alg.ring(), derivatives, b);
    }
    return rep;
}

}  // namespace ptri
