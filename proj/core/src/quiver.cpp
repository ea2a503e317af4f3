#include "ptri/quiver.hpp"

#include <algorithm>

namespace ptri {

Rotation::Rotation(const PartialTriangulation& t)
    : t_(&t), next_(t.halfedges.size(), -1), position_(t.halfedges.size(), -1), point_(t.halfedges.size(), -1) {
    for (std::size_t p = 0; p < t.points.size(); ++p) {
        const auto& rot = t.rotation[p];
        const int d = static_cast<int>(rot.size());
        for (int i = 0; i < d; ++i) {
            position_[rot[i]] = i;
            point_[rot[i]] = static_cast<int>(p);
            if (t.points[p].on_boundary)
                next_[rot[i]] = i + 1 < d ? rot[i + 1] : -1;
            else
                next_[rot[i]] = rot[(i + 1) % d];
        }
    }
}

int Rotation::advance(int h, int k) const {
    const int p = point_[h];
    const auto& rot = t_->rotation[p];
    const int d = static_cast<int>(rot.size());
    if (t_->points[p].on_boundary) {
        const int pos = position_[h] + k;
        return pos < d ? rot[pos] : -1;
    }
    return rot[(position_[h] + k) % d];
}

int Quiver::find(std::string_view id) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id == id) return static_cast<int>(i);
    return -1;
}

namespace {

std::string arrow_name(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "a" + std::to_string(i);
}

}  // namespace

Quiver build_quiver(const PartialTriangulation& t) {
    Rotation rot(t);
    Quiver q;
    for (std::size_t a = 0; a < t.arcs.size(); ++a) q.vertices.push_back(static_cast<int>(a));
    q.arrow_from.assign(t.halfedges.size(), -1);
    for (std::size_t h = 0; h < t.halfedges.size(); ++h) {
        const int to = rot.next(static_cast<int>(h));
        if (to < 0) continue;
        Arrow a;
        a.id = arrow_name(q.arrows.size());
        a.from = static_cast<int>(h);
        a.to = to;
        a.pivot = t.halfedges[h].point;
        a.source_arc = t.halfedges[h].arc;
        a.target_arc = t.halfedges[to].arc;
        q.arrow_from[h] = static_cast<int>(q.arrows.size());
        q.arrows.push_back(std::move(a));
    }
    return q;
}

std::optional<WindingSpec> omega(const PartialTriangulation& t, int h) {
    const int p = t.halfedges[h].point;
    if (t.points[p].on_boundary) return std::nullopt;
    return WindingSpec{h, t.degree(p)};
}

std::vector<BouncingPair> bouncing_pairs(const PartialTriangulation& t, const Quiver& q,
                                         const std::vector<SmallTriangle>& triangles) {
    std::map<std::pair<int, int>, TriangleRelation> rel;
    for (const auto& tri : triangles) {
        for (int i = 0; i < 3; ++i) {
            const int x_in = tri.corners[i], x_out = tri.corners[(i + 1) % 3], x_opp = tri.corners[(i + 2) % 3];
            TriangleRelation r;
            r.in_arrow = q.arrow_at(x_in);
            r.out_arrow = q.arrow_at(x_out);
            if (r.in_arrow < 0 || r.out_arrow < 0) throw InternalError("triangle corner without an arrow");
            r.corner = t.halfedges[x_opp].point;
            const auto& pt = t.points[r.corner];
            r.coefficient = pt.lambda;
            if (!pt.on_boundary)
                r.replacement = WindingSpec{t.mate(x_in), pt.multiplicity * t.degree(r.corner) - 1};
            rel.emplace(std::make_pair(r.in_arrow, r.out_arrow), r);
        }
    }
    std::vector<BouncingPair> out;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        for (std::size_t b = 0; b < q.arrows.size(); ++b) {
            const auto& x = q.arrows[a];
            const auto& y = q.arrows[b];
            if (x.target_arc != y.source_arc || x.to == y.from) continue;
            BouncingPair bp{static_cast<int>(a), static_cast<int>(b), std::nullopt};
            auto it = rel.find({bp.in_arrow, bp.out_arrow});
            if (it != rel.end()) bp.triangle = it->second;
            out.push_back(std::move(bp));
        }
    return out;
}

std::vector<BouncingPair> bouncing_pairs(const PartialTriangulation& t) {
    return bouncing_pairs(t, build_quiver(t), small_triangles(t));
}

std::string arrow_word(const Quiver& q, const std::vector<int>& arrows) {
    const bool short_ids = std::all_of(arrows.begin(), arrows.end(), [&](int a) { return q.arrows[a].id.size() == 1; });
    std::string s;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (i && !short_ids) s += '.';
        s += q.arrows[arrows[i]].id;
    }
    return s;
}

std::vector<int> parse_arrow_word(const Quiver& q, std::string_view word) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < word.size()) {
        if (word[i] == '.' || word[i] == ' ') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < word.size() && word[j] != '.' && word[j] != ' ') ++j;
        const auto token = word.substr(i, j - i);
        int a = q.find(token);
        if (a >= 0) {
            out.push_back(a);
        } else {
            for (char c : token) {
                int b = q.find(std::string_view(&c, 1));
                if (b < 0) throw InputError("unknown arrow in word '" + std::string(word) + "'");
                out.push_back(b);
            }
        }
        i = j;
    }
    if (out.empty()) throw InputError("empty arrow word");
    return out;
}

}  // namespace ptri
