#include "ptri/algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ptri {

long rank_formula(const PartialTriangulation& t) {
    const auto stats = degree_stats(t);
    long r = stats.boundary_arcs;
    for (std::size_t p = 0; p < t.points.size(); ++p) {
        const long d = stats.degree[p];
        if (t.points[p].on_boundary)
            r += d * (d - 1) / 2;
        else
            r += t.points[p].multiplicity * d * d;
    }
    return r;
}

Element StructureConstants::multiply(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
            const auto& p = at(i, j);
            if (p.is_zero()) continue;
            auto [it, fresh] = out.try_emplace(p.index, Scalar::zero(ring));
            it->second += a * b * p.coeff;
            if (it->second.is_zero()) out.erase(it);
        }
    return out;
}

Element StructureConstants::unit() const {
    Element u;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].kind == BasisElement::Kind::idempotent) u.emplace(static_cast<int>(i), Scalar::one(ring));
    return u;
}

AssociativityReport check_associativity(const StructureConstants& sc, std::size_t exhaustive_bound,
                                        std::size_t samples, std::uint64_t seed) {
    AssociativityReport rep;
    const std::size_t n = sc.size();
    auto times = [&](const ScaledBasis& x, std::size_t k, bool left) {
        if (x.is_zero()) return ScaledBasis::zero(sc.ring);
        const auto& p = left ? sc.at(x.index, k) : sc.at(k, x.index);
        if (p.is_zero()) return p;
        return ScaledBasis{p.index, p.coeff * x.coeff};
    };
    auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
        ++rep.triples_checked;
        const auto lhs = times(sc.at(i, j), k, true);
        const auto rhs = times(sc.at(j, k), i, false);
        if (!(lhs == rhs)) {
            if (rep.failures++ == 0)
                rep.first_failure = "(" + sc.names[i] + " " + sc.names[j] + ") " + sc.names[k];
        }
    };
    if (n == 0) {
        rep.exhaustive = true;
        return rep;
    }
    if (n <= exhaustive_bound) {
        rep.exhaustive = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) check(i, j, k);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t s = 0; s < samples; ++s) check(pick(rng), pick(rng), pick(rng));
    }
    return rep;
}

Algebra::Algebra(PartialTriangulation t) : Algebra(t, small_triangles(t)) {}

Algebra::Algebra(PartialTriangulation t, const std::vector<SmallTriangle>& triangles)
    : t_(std::move(t)), rot_(t_), quiver_(build_quiver(t_)) {
    bouncing_ = bouncing_pairs(t_, quiver_, triangles);
    for (std::size_t i = 0; i < bouncing_.size(); ++i)
        bounce_index_.emplace(std::make_pair(bouncing_[i].in_arrow, bouncing_[i].out_arrow), static_cast<int>(i));
    for (std::size_t p = 0; p < t_.points.size(); ++p)
        fuel_base_ += 8L * t_.points[p].multiplicity * t_.degree(static_cast<int>(p));
    enumerate();
    radical_dim_ = static_cast<long>(basis_.size() - t_.arcs.size());
    fuel_base_ += 2 * radical_dim_;
}

int Algebra::full_length(int h) const {
    const int p = t_.halfedges[h].point;
    return t_.points[p].multiplicity * t_.degree(p);
}

void Algebra::enumerate() {
    using K = BasisElement::Kind;
    idempotent_index_.assign(t_.arcs.size(), -1);
    socle_index_.assign(t_.arcs.size(), -1);
    for (std::size_t a = 0; a < t_.arcs.size(); ++a) {
        idempotent_index_[a] = static_cast<int>(basis_.size());
        basis_.push_back({K::idempotent, static_cast<int>(a), {}});
    }
    for (std::size_t p = 0; p < t_.points.size(); ++p) {
        std::vector<int> hs = t_.rotation[p];
        std::sort(hs.begin(), hs.end());
        for (int h : hs) {
            const int cap = t_.points[p].on_boundary ? t_.degree(static_cast<int>(p)) - 1 - rot_.position(h)
                                                     : full_length(h) - 1;
            for (int len = 1; len <= cap; ++len) {
                winding_index_.emplace(std::make_pair(h, len), static_cast<int>(basis_.size()));
                basis_.push_back({K::winding, -1, {h, len}});
            }
        }
    }
    for (std::size_t a = 0; a < t_.arcs.size(); ++a) {
        if (t_.arc_touches_boundary(static_cast<int>(a))) continue;
        socle_index_[a] = static_cast<int>(basis_.size());
        basis_.push_back({K::socle, static_cast<int>(a), {}});
    }
    for (const auto& b : basis_) {
        if (b.kind == K::winding) {
            source_.push_back(t_.halfedges[b.winding.start].arc);
            target_.push_back(t_.halfedges[rot_.advance(b.winding.start, b.winding.length)].arc);
        } else {
            source_.push_back(b.arc);
            target_.push_back(b.arc);
        }
    }
}

int Algebra::index_of(const BasisElement& b) const {
    switch (b.kind) {
        case BasisElement::Kind::idempotent:
            return b.arc >= 0 && b.arc < static_cast<int>(idempotent_index_.size()) ? idempotent_index_[b.arc] : -1;
        case BasisElement::Kind::socle:
            return b.arc >= 0 && b.arc < static_cast<int>(socle_index_.size()) ? socle_index_[b.arc] : -1;
        case BasisElement::Kind::winding: {
            auto it = winding_index_.find({b.winding.start, b.winding.length});
            return it == winding_index_.end() ? -1 : it->second;
        }
    }
    return -1;
}

std::vector<int> Algebra::winding_path(const WindingSpec& w) const {
    std::vector<int> arrows;
    for (int k = 0; k < w.length; ++k) {
        const int h = rot_.advance(w.start, k);
        if (h < 0 || quiver_.arrow_at(h) < 0) throw std::invalid_argument("winding leaves its point's arrows");
        arrows.push_back(quiver_.arrow_at(h));
    }
    return arrows;
}

std::string Algebra::name(int i) const {
    const auto& b = basis_[i];
    switch (b.kind) {
        case BasisElement::Kind::idempotent: return "e_" + t_.arcs[b.arc].id;
        case BasisElement::Kind::socle: return "z_" + t_.arcs[b.arc].id;
        case BasisElement::Kind::winding: return arrow_word(quiver_, winding_path(b.winding));
    }
    return "?";
}

int Algebra::end_dart(const Seg& s) const { return rot_.advance(s.start, s.length); }

ScaledBasis Algebra::reduce(Scalar coeff, std::vector<Seg> segs, int fallback_arc) const {
    const RingSpec ring = t_.ring;
    long fuel = fuel_base_;
    for (const auto& s : segs) fuel += s.length;
    while (true) {
        if (--fuel < 0) throw InternalError("normal form reduction ran out of fuel");
        if (segs.empty()) return {idempotent_index_[fallback_arc], coeff};
        // rad^{r+1} = 0 for r = dim rad, and every arrow lies in rad. Needed:
        // leftmost rewriting can return to p = p y for a closed path y.
        long total = 0;
        for (const auto& s : segs) total += s.length;
        if (total > radical_dim_) return ScaledBasis::zero(ring);
        for (const auto& s : segs) {
            const int p = t_.halfedges[s.start].point;
            if (t_.points[p].on_boundary) {
                if (rot_.position(s.start) + s.length > t_.degree(p) - 1) return ScaledBasis::zero(ring);
            } else {
                const int full = full_length(s.start);
                if (s.length > full) return ScaledBasis::zero(ring);
                // the full winding lies in the socle, annihilated by every arrow
                if (s.length == full && segs.size() > 1) return ScaledBasis::zero(ring);
            }
        }
        if (segs.size() == 1) {
            const auto& s = segs[0];
            const int p = t_.halfedges[s.start].point;
            if (!t_.points[p].on_boundary && s.length == full_length(s.start)) {
                const int u = t_.halfedges[s.start].arc;
                if (socle_index_[u] < 0) return ScaledBasis::zero(ring);
                return {socle_index_[u], coeff * t_.points[p].lambda.inverse()};
            }
            return {winding_index_.at({s.start, s.length}), coeff};
        }
        std::size_t i = 0;
        const int seam_end = end_dart(segs[0]);
        if (seam_end == segs[1].start) {
            segs[0].length += segs[1].length;
            segs.erase(segs.begin() + 1);
            continue;
        }
        const int alpha = quiver_.arrow_at(rot_.advance(segs[i].start, segs[i].length - 1));
        const int beta = quiver_.arrow_at(segs[i + 1].start);
        auto it = bounce_index_.find({alpha, beta});
        if (it == bounce_index_.end()) return ScaledBasis::zero(ring);
        const auto& bp = bouncing_[it->second];
        if (!bp.triangle || !bp.triangle->replacement) return ScaledBasis::zero(ring);
        const auto& tr = *bp.triangle;
        coeff *= tr.coefficient;
        std::vector<Seg> next;
        if (segs[i].length > 1) next.push_back({segs[i].start, segs[i].length - 1});
        if (tr.replacement->length > 0) next.push_back({tr.replacement->start, tr.replacement->length});
        if (segs[i + 1].length > 1)
            next.push_back({rot_.advance(segs[i + 1].start, 1), segs[i + 1].length - 1});
        next.insert(next.end(), segs.begin() + 2, segs.end());
        fallback_arc = t_.halfedges[tr.replacement->start].arc;
        segs = std::move(next);
    }
}

ScaledBasis Algebra::reduce_path(const std::vector<int>& arrows) const {
    if (arrows.empty()) throw std::invalid_argument("reduce_path: empty path");
    std::vector<Seg> segs;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        if (k && quiver_.arrows[arrows[k - 1]].target_arc != quiver_.arrows[arrows[k]].source_arc)
            return ScaledBasis::zero(t_.ring);
        segs.push_back({quiver_.arrows[arrows[k]].from, 1});
    }
    return reduce(Scalar::one(t_.ring), std::move(segs), quiver_.arrows[arrows[0]].source_arc);
}

ScaledBasis Algebra::mul_basis(int i, int j) const {
    using K = BasisElement::Kind;
    const RingSpec ring = t_.ring;
    const auto& x = basis_.at(i);
    const auto& y = basis_.at(j);
    if (target_[i] != source_[j]) return ScaledBasis::zero(ring);
    if (x.kind == K::idempotent) return {j, Scalar::one(ring)};
    if (y.kind == K::idempotent) return {i, Scalar::one(ring)};
    if (x.kind == K::socle || y.kind == K::socle) return ScaledBasis::zero(ring);
    return reduce(Scalar::one(ring), {{x.winding.start, x.winding.length}, {y.winding.start, y.winding.length}},
                  source_[i]);
}

Element Algebra::mul(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
            const auto p = mul_basis(i, j);
            if (p.is_zero()) continue;
            auto [it, fresh] = out.try_emplace(p.index, Scalar::zero(t_.ring));
            it->second += a * b * p.coeff;
            if (it->second.is_zero()) out.erase(it);
        }
    return out;
}

Element Algebra::path_element(const std::vector<int>& arrows) const {
    const auto r = reduce_path(arrows);
    Element e;
    if (!r.is_zero()) e.emplace(r.index, r.coeff);
    return e;
}

StructureConstants Algebra::structure_table() const {
    StructureConstants sc;
    sc.ring = t_.ring;
    sc.basis = basis_;
    sc.source = source_;
    sc.target = target_;
    const std::size_t n = basis_.size();
    for (std::size_t i = 0; i < n; ++i) sc.names.push_back(name(static_cast<int>(i)));
    sc.table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sc.table.push_back(mul_basis(static_cast<int>(i), static_cast<int>(j)));
    return sc;
}

StructureConstants truncate_idempotent(const StructureConstants& sc, const std::set<int>& arcs) {
    StructureConstants out;
    out.ring = sc.ring;
    std::vector<int> remap(sc.size(), -1);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < sc.size(); ++i)
        if (arcs.count(sc.source[i]) && arcs.count(sc.target[i])) {
            remap[i] = static_cast<int>(kept.size());
            kept.push_back(i);
            out.basis.push_back(sc.basis[i]);
            out.names.push_back(sc.names[i]);
            out.source.push_back(sc.source[i]);
            out.target.push_back(sc.target[i]);
        }
    for (std::size_t i : kept)
        for (std::size_t j : kept) {
            auto p = sc.at(i, j);
            if (!p.is_zero()) {
                if (remap[p.index] < 0) throw InternalError("truncation is not closed under products");
                p.index = remap[p.index];
            }
            out.table.push_back(p);
        }
    return out;
}

namespace {

std::string term(const Algebra& alg, const Scalar& coeff, const std::vector<int>& path, int power_of) {
    std::ostringstream os;
    if (!coeff.is_one()) os << coeff << "·";
    const auto& q = alg.quiver();
    if (power_of > 1) {
        std::vector<int> base(path.begin(), path.begin() + path.size() / power_of);
        const std::string w = arrow_word(q, base);
        os << (base.size() > 1 ? "(" + w + ")" : w) << "^" << power_of;
    } else {
        os << arrow_word(q, path);
    }
    return os.str();
}

}  // namespace

std::vector<RelationCheck> relation_sanity_check(const Algebra& alg) {
    const auto& t = alg.triangulation();
    const auto& q = alg.quiver();
    const RingSpec ring = alg.ring();
    std::vector<RelationCheck> out;

    auto full_winding = [&](int h, Scalar& lambda, std::vector<int>& path) {
        const int p = t.halfedges[h].point;
        if (t.points[p].on_boundary) return false;
        lambda = t.points[p].lambda;
        path = alg.winding_path({h, alg.full_length(h)});
        return true;
    };

    for (const auto& arc : t.arcs) {
        Element lhs, rhs;
        std::string sides[2];
        Element* parts[2] = {&lhs, &rhs};
        for (int k = 0; k < 2; ++k) {
            const int h = arc.ends[k];
            Scalar lambda(ring);
            std::vector<int> path;
            if (full_winding(h, lambda, path)) {
                for (auto& [i, c] : alg.path_element(path)) (*parts[k])[i] = c * lambda;
                sides[k] = term(alg, lambda, path, t.points[t.halfedges[h].point].multiplicity);
            } else {
                sides[k] = "0";
            }
        }
        out.push_back({1, sides[0] + " = " + sides[1], lhs == rhs});
    }
    for (std::size_t h = 0; h < t.halfedges.size(); ++h) {
        Scalar lambda(ring);
        std::vector<int> path;
        if (!full_winding(static_cast<int>(h), lambda, path)) continue;
        const int u = t.halfedges[h].arc;
        for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
            const auto& a = q.arrows[ai];
            if (a.source_arc != u) continue;
            auto p = path;
            p.push_back(static_cast<int>(ai));
            const std::string w = term(alg, Scalar::one(ring), path, t.points[t.halfedges[h].point].multiplicity);
            out.push_back({2, w + "·" + a.id + " = 0", alg.path_element(p).empty()});
        }
    }
    for (const auto& bp : alg.bouncing()) {
        const std::vector<int> pair{bp.in_arrow, bp.out_arrow};
        const Element lhs = alg.path_element(pair);
        if (bp.triangle) {
            Element rhs;
            std::string rtext = "0";
            if (bp.triangle->replacement) {
                const auto path = alg.winding_path(*bp.triangle->replacement);
                for (auto& [i, c] : alg.path_element(path)) rhs[i] = c * bp.triangle->coefficient;
                rtext = term(alg, bp.triangle->coefficient, path, 1);
            }
            out.push_back({3, arrow_word(q, pair) + " = " + rtext, lhs == rhs});
        } else {
            out.push_back({4, arrow_word(q, pair) + " = 0", lhs.empty()});
        }
    }
    return out;
}

}  // namespace ptri
