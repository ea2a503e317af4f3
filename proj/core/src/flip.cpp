#include "ptri/flip.hpp"

#include <algorithm>
#include <set>

namespace ptri {

std::string to_string(FlipCase::Kind k) {
    switch (k) {
        case FlipCase::Kind::F1: return "F1";
        case FlipCase::Kind::F2: return "F2";
        case FlipCase::Kind::F3: return "F3";
    }
    return "?";
}

namespace {

int step(const PartialTriangulation& t, int h, bool ccw) {
    const auto& rot = t.rotation[t.halfedges[h].point];
    const int d = static_cast<int>(rot.size());
    const int pos = static_cast<int>(std::find(rot.begin(), rot.end(), h) - rot.begin());
    return rot[(pos + (ccw ? 1 : d - 1)) % d];
}

// steps from h to the first dart not belonging to u, or -1
int first_other(const PartialTriangulation& t, int h, int u, bool ccw, int* distance = nullptr) {
    int x = h;
    for (int k = 1; k <= t.degree(t.halfedges[h].point); ++k) {
        x = step(t, x, ccw);
        if (x == h) break;
        if (t.halfedges[x].arc != u) {
            if (distance) *distance = k;
            return x;
        }
    }
    return -1;
}

FlipCase classify(const PartialTriangulation& t, int u, std::optional<int> end, bool ccw) {
    if (u < 0 || u >= static_cast<int>(t.arcs.size())) throw FlipError("no such arc");
    const auto& arc = t.arcs[u];
    if (t.arc_touches_boundary(u)) throw FlipError("arc " + arc.id + " touches the boundary");
    FlipCase c;
    c.arc = u;
    c.counter_clockwise = ccw;
    int fixed = -1;
    for (int k = 0; k < 2; ++k) {
        const int h = arc.ends[k];
        const int p = t.halfedges[h].point;
        if (t.degree(p) == 1) {
            fixed = k;
            continue;
        }
        const int x = first_other(t, h, u, ccw);
        if (x < 0) throw FlipError("arc " + arc.id + ": no other arc next to it at " + t.points[p].id);
        const int v = t.halfedges[x].arc;
        if (t.arc_touches_boundary(v))
            throw FlipError("arc " + arc.id + ": neighbouring arc " + t.arcs[v].id + " at " + t.points[p].id +
                            " touches the boundary");
        c.slides[k] = SlideEnd{h, p, v, t.mate(x)};
    }
    if (!c.slides[0] && !c.slides[1]) throw FlipError("arc " + arc.id + " has no neighbouring arc");
    if (fixed >= 0) {
        c.kind = FlipCase::Kind::F1;
        c.fixed_end_point = t.halfedges[arc.ends[fixed]].point;
    } else if (t.is_loop(u) && (step(t, arc.ends[0], ccw) == arc.ends[1] || step(t, arc.ends[1], ccw) == arc.ends[0])) {
        // the empty sector between the two ends faces the enclosed side
        const int first = step(t, arc.ends[0], ccw) == arc.ends[1] ? 0 : 1;
        const int side = ccw ? first : 1 - first;
        const auto regions = enclosed_region(t, u);
        const auto& s = regions.side[side];
        if (!s.separating || s.genus != 0 || s.boundary_components != 0 || s.points.size() != 1)
            throw FlipError("loop " + arc.id + " does not cut off a once-punctured disc");
        c.kind = FlipCase::Kind::F2;
        c.enclosed = s.points[0];
    } else {
        c.kind = FlipCase::Kind::F3;
    }
    if (end) {
        if (*end != 0 && *end != 1) throw FlipError("end must be 0 or 1");
        if (!c.slides[*end]) throw FlipError("end " + std::to_string(*end) + " of " + arc.id + " cannot slide");
    }
    return c;
}

struct Slot {
    int halfedge;
    int anchor;
    int distance;
};

PartialTriangulation surgery(const PartialTriangulation& t, const FlipCase& c) {
    PartialTriangulation out = t;
    std::vector<Slot> slots;
    for (const auto& s : c.slides) {
        if (!s) continue;
        int dist = 0;
        first_other(t, s->halfedge, c.arc, c.counter_clockwise, &dist);
        slots.push_back({s->halfedge, s->anchor, dist});
    }
    for (const auto& s : slots) {
        auto& rot = out.rotation[t.halfedges[s.halfedge].point];
        rot.erase(std::find(rot.begin(), rot.end(), s.halfedge));
    }
    // the farther end goes in first so the nearer one lands next to the anchor
    std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
        return a.anchor == b.anchor && a.distance > b.distance;
    });
    for (const auto& s : slots) {
        const int p = t.halfedges[s.anchor].point;
        auto& rot = out.rotation[p];
        auto it = std::find(rot.begin(), rot.end(), s.anchor);
        if (c.counter_clockwise) ++it;
        rot.insert(it, s.halfedge);
        out.halfedges[s.halfedge].point = p;
    }
    out.faces.clear();
    return out;
}

FaceSide anchor_of(const SurfaceMap& m, const std::vector<int>& walk) {
    const int h = static_cast<int>(m.triangulation().halfedges.size());
    for (int x : walk)
        if (x < h) return {x, true};
    for (int x : walk)
        if (m.next(x) < h) return {m.next(x), false};
    throw InternalError("face walk without an arc side");
}

// Region annotations of t carried over to the surgered triangulation: regions
// away from u keep their walks, the content left of u stays left of u*. When
// both ends slide along the same arc (F2) the sides trade places, so the
// enclosed disc stays enclosed.
std::vector<FaceAnnotation> transport(const PartialTriangulation& t, const PartialTriangulation& after, int u,
                                      bool swap_sides) {
    const SurfaceMap m0(t), m1(after);
    const int ha = t.arcs[u].ends[0];
    auto in_u = [&](int d) { return d < static_cast<int>(t.halfedges.size()) && t.halfedges[d].arc == u; };

    std::vector<int> image(m0.walks().size(), -1);
    for (std::size_t w = 0; w < m0.walks().size(); ++w) {
        bool keeps = true;
        for (int x : m0.walks()[w])
            if (in_u(x) || in_u(m0.next(x)) || m1.next(x) != m0.next(x)) keeps = false;
        if (keeps) image[w] = m1.walk_of_corner(m0.walks()[w][0]);
    }
    const int rl = m0.region_of_corner(ha), rr = m0.region_of_corner(m0.prev(ha));
    int nl = m1.walk_of_corner(ha), nr = m1.walk_of_corner(m1.prev(ha));
    if (swap_sides) std::swap(nl, nr);
    if (rl != rr && nl == nr) throw FlipError("cannot transport face annotations across the flip");

    struct Pending {
        Region region;
        std::set<int> walks;
    };
    std::vector<Pending> regions;
    std::vector<int> owner(m1.walks().size(), -1);
    auto claim = [&](int walk, int r) {
        if (owner[walk] >= 0 && owner[walk] != r) throw FlipError("cannot transport face annotations across the flip");
        owner[walk] = r;
        regions[r].walks.insert(walk);
    };
    for (std::size_t r = 0; r < m0.regions().size(); ++r) {
        regions.push_back({m0.regions()[r], {}});
        for (int w : m0.regions()[r].walks)
            if (image[w] >= 0) claim(image[w], static_cast<int>(r));
        if (static_cast<int>(r) == rl) claim(nl, static_cast<int>(r));
        if (static_cast<int>(r) == rr) claim(nr, static_cast<int>(r));
    }
    for (int o : owner)
        if (o < 0) throw FlipError("cannot transport face annotations across the flip");
    if (rl == rr) {
        auto& p = regions[rl];
        const int chi = p.region.euler();
        const int twice = 2 - static_cast<int>(p.region.enclosed_boundaries.size()) - static_cast<int>(p.walks.size()) - chi;
        if (twice < 0 || twice % 2) throw FlipError("flip changes the topology of a face");
        p.region.genus = twice / 2;
    }

    std::set<std::string> used;
    for (const auto& p : regions)
        if (!p.region.id.empty() && p.region.id[0] != '_') used.insert(p.region.id);
    std::vector<FaceAnnotation> faces;
    int fresh = 0;
    for (auto& p : regions) {
        if (p.walks.empty()) continue;
        Region r = p.region;
        r.walks.assign(p.walks.begin(), p.walks.end());
        if (r.empty_disc()) continue;
        FaceAnnotation f;
        f.id = r.id;
        if (f.id.empty() || f.id[0] == '_') {
            while (used.count("f" + std::to_string(fresh))) ++fresh;
            f.id = "f" + std::to_string(fresh);
            used.insert(f.id);
        }
        f.genus = r.genus;
        f.enclosed_boundaries = r.enclosed_boundaries;
        f.isolated_points = r.isolated_points;
        for (int w : r.walks) f.sides.push_back(anchor_of(m1, m1.walks()[w]));
        faces.push_back(std::move(f));
    }
    return faces;
}

std::map<int, LambdaChange> lambda_update(const PartialTriangulation& t, const FlipCase& c) {
    std::map<int, Scalar> factor;
    const RingSpec ring = t.ring;
    const Scalar minus = -Scalar::one(ring);
    auto scale = [&](int p, const Scalar& s) {
        auto [it, fresh] = factor.try_emplace(p, Scalar::one(ring));
        it->second *= s;
    };
    switch (c.kind) {
        case FlipCase::Kind::F1:
            scale(c.fixed_end_point, minus);
            for (const auto& s : c.slides)
                if (s && t.points[s->pivot].multiplicity % 2) scale(s->pivot, minus);
            break;
        case FlipCase::Kind::F2: scale(c.enclosed, minus); break;
        case FlipCase::Kind::F3: break;
    }
    std::map<int, LambdaChange> out;
    for (const auto& [p, f] : factor) {
        const Scalar before = t.points[p].lambda;
        const Scalar after = before * f;
        if (after != before) out.emplace(p, LambdaChange{before, after});
    }
    return out;
}

void finish(const PartialTriangulation& t, FlipResult& r, int u) {
    r.same_coefficients.faces = transport(t, r.same_coefficients, u, r.flip_case.kind == FlipCase::Kind::F2);
    const auto rep = validate(r.same_coefficients);
    if (!rep.ok()) {
        std::string codes;
        for (const auto& v : rep.violations) codes += (codes.empty() ? "" : ", ") + v.code;
        throw FlipError("flipped triangulation does not validate (" + codes + ")");
    }
    r.triangulation = r.same_coefficients;
    for (const auto& [p, ch] : r.lambda_update) r.triangulation.points[p].lambda = ch.after;
}

}  // namespace

FlipCase classify_flip(const PartialTriangulation& t, int arc, std::optional<int> end) {
    return classify(t, arc, end, true);
}

FlipResult flip(const PartialTriangulation& t, int arc, std::optional<int> end) {
    FlipResult r;
    r.flip_case = classify(t, arc, end, true);
    r.same_coefficients = surgery(t, r.flip_case);
    r.lambda_update = lambda_update(t, r.flip_case);
    finish(t, r, arc);
    return r;
}

FlipResult inverse_flip(const PartialTriangulation& t, int arc, std::optional<int> end) {
    FlipResult r;
    r.flip_case = classify(t, arc, end, false);
    r.same_coefficients = surgery(t, r.flip_case);
    r.same_coefficients.faces = transport(t, r.same_coefficients, arc, r.flip_case.kind == FlipCase::Kind::F2);
    // every update is a sign change, so the forward update from the result undoes itself
    const FlipCase forward = classify(r.same_coefficients, arc, std::nullopt, true);
    r.lambda_update = lambda_update(r.same_coefficients, forward);
    finish(t, r, arc);
    return r;
}

FlipComparison flip_and_compare(const PartialTriangulation& t, int arc, std::optional<int> end) {
    FlipComparison c;
    c.result = flip(t, arc, end);
    const auto before = Algebra(t).structure_table();
    const auto after = Algebra(c.result.triangulation).structure_table();
    const auto rb = invariant_report(before, t.arcs.size());
    c.with_update = derived_invariant_report(rb, invariant_report(after, t.arcs.size()));
    if (!c.result.lambda_update.empty()) {
        const auto plain = Algebra(c.result.same_coefficients).structure_table();
        c.without_update = derived_invariant_report(rb, invariant_report(plain, t.arcs.size()));
    }
    c.rank_before = before.size();
    c.rank_after = after.size();
    return c;
}

}  // namespace ptri
