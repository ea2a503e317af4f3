#include "ptri/surface.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptri {

namespace {

template <class Vec>
int find_by_id(const Vec& v, std::string_view id) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].id == id) return static_cast<int>(i);
    return -1;
}

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> parent;
};

}  // namespace

int PartialTriangulation::find_point(std::string_view id) const { return find_by_id(points, id); }
int PartialTriangulation::find_arc(std::string_view id) const { return find_by_id(arcs, id); }
int PartialTriangulation::find_halfedge(std::string_view id) const { return find_by_id(halfedges, id); }

int PartialTriangulation::point_index(std::string_view id) const {
    int p = find_point(id);
    if (p < 0) throw InputError("unknown marked point '" + std::string(id) + "'");
    return p;
}

int PartialTriangulation::arc_index(std::string_view id) const {
    int a = find_arc(id);
    if (a < 0) throw InputError("unknown arc '" + std::string(id) + "'");
    return a;
}

bool PartialTriangulation::arc_touches_boundary(int arc) const {
    for (int h : arcs[arc].ends)
        if (points[halfedges[h].point].on_boundary) return true;
    return false;
}

std::vector<int> PartialTriangulation::boundary_points(int component) const {
    std::vector<int> out;
    for (std::size_t p = 0; p < points.size(); ++p)
        if (points[p].on_boundary && points[p].component == component) out.push_back(static_cast<int>(p));
    std::sort(out.begin(), out.end(),
              [&](int a, int b) { return points[a].position < points[b].position; });
    return out;
}

void check_well_formed(const PartialTriangulation& t) {
    if (t.genus < 0 || t.boundary_count < 0) throw InputError("negative genus or boundary count");
    if (t.rotation.size() != t.points.size()) throw InputError("rotation table size mismatch");
    for (const auto& p : t.points) {
        if (p.multiplicity < 1) throw InputError("point " + p.id + ": multiplicity must be >= 1");
        if (p.lambda.is_zero()) throw InputError("point " + p.id + ": lambda must be a unit");
        if (!(p.lambda.ring() == t.ring)) throw InputError("point " + p.id + ": lambda over wrong field");
        if (p.on_boundary && (p.component < 0 || p.component >= t.boundary_count))
            throw InputError("point " + p.id + ": boundary component out of range");
    }
    for (int c = 0; c < t.boundary_count; ++c) {
        auto pts = t.boundary_points(c);
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (t.points[pts[i]].position != static_cast<int>(i))
                throw InputError("boundary component " + std::to_string(c) +
                                 ": positions must be 0..n-1 without gaps");
    }
    for (std::size_t a = 0; a < t.arcs.size(); ++a)
        for (int h : t.arcs[a].ends)
            if (h < 0 || h >= static_cast<int>(t.halfedges.size()) || t.halfedges[h].arc != static_cast<int>(a))
                throw InputError("arc " + t.arcs[a].id + ": inconsistent half-edges");
    std::vector<int> seen(t.halfedges.size(), 0);
    for (std::size_t p = 0; p < t.points.size(); ++p)
        for (int h : t.rotation[p]) {
            if (h < 0 || h >= static_cast<int>(t.halfedges.size()))
                throw InputError("rotation at " + t.points[p].id + ": bad half-edge");
            if (t.halfedges[h].point != static_cast<int>(p))
                throw InputError("rotation at " + t.points[p].id + ": half-edge " + t.halfedges[h].id +
                                 " belongs to another point");
            ++seen[h];
        }
    for (std::size_t h = 0; h < seen.size(); ++h)
        if (seen[h] != 1)
            throw InputError("half-edge " + t.halfedges[h].id + " must appear exactly once in the rotation");
}

SurfaceMap::SurfaceMap(const PartialTriangulation& t) : t_(&t) {
    check_well_formed(t);
    halfedge_count_ = static_cast<int>(t.halfedges.size());

    attached_.assign(t.boundary_count, false);
    for (std::size_t p = 0; p < t.points.size(); ++p)
        if (t.points[p].on_boundary && !t.rotation[p].empty()) attached_[t.points[p].component] = true;

    // segment s joins position i to position i+1; dart 2s at i, 2s+1 at i+1
    std::vector<int> seg_out(t.points.size(), -1), seg_in(t.points.size(), -1);
    for (int c = 0; c < t.boundary_count; ++c) {
        if (!attached_[c]) continue;
        auto pts = t.boundary_points(c);
        const int n = static_cast<int>(pts.size());
        for (int i = 0; i < n; ++i) {
            const int s = static_cast<int>(segment_component_.size());
            segment_component_.push_back(c);
            seg_out[pts[i]] = halfedge_count_ + 2 * s;
            seg_in[pts[(i + 1) % n]] = halfedge_count_ + 2 * s + 1;
        }
    }
    const int darts = halfedge_count_ + 2 * segment_count();
    next_.assign(darts, -1);
    prev_.assign(darts, -1);
    mate_.assign(darts, -1);
    point_.assign(darts, -1);
    segment_.assign(darts, -1);
    exterior_.assign(darts, false);
    for (int h = 0; h < halfedge_count_; ++h) {
        mate_[h] = t.mate(h);
        point_[h] = t.halfedges[h].point;
    }
    for (int s = 0; s < segment_count(); ++s) {
        mate_[halfedge_count_ + 2 * s] = halfedge_count_ + 2 * s + 1;
        mate_[halfedge_count_ + 2 * s + 1] = halfedge_count_ + 2 * s;
        segment_[halfedge_count_ + 2 * s] = s;
        segment_[halfedge_count_ + 2 * s + 1] = s;
    }
    for (std::size_t p = 0; p < t.points.size(); ++p) {
        std::vector<int> cyc;
        if (t.points[p].on_boundary) {
            if (!attached_[t.points[p].component]) continue;
            cyc.push_back(seg_out[p]);
            cyc.insert(cyc.end(), t.rotation[p].begin(), t.rotation[p].end());
            cyc.push_back(seg_in[p]);
            exterior_[seg_in[p]] = true;
        } else {
            cyc = t.rotation[p];
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int d = cyc[i], nd = cyc[(i + 1) % cyc.size()];
            next_[d] = nd;
            prev_[nd] = d;
            point_[d] = static_cast<int>(p);
        }
    }

    walk_of_.assign(darts, -1);
    for (int d = 0; d < darts; ++d) {
        if (exterior_[d] || walk_of_[d] >= 0) continue;
        std::vector<int> walk;
        int x = d;
        do {
            if (exterior_[x]) throw InternalError("face walk entered an exterior corner");
            walk_of_[x] = static_cast<int>(walks_.size());
            walk.push_back(x);
            x = mate_[next_[x]];
        } while (x != d);
        walks_.push_back(std::move(walk));
    }
    build_regions();
}

bool SurfaceMap::point_in_graph(int p) const {
    const auto& pt = t_->points[p];
    return pt.on_boundary ? attached_[pt.component] : !t_->rotation[p].empty();
}

int SurfaceMap::walk_of_side(const FaceSide& s) const {
    if (s.halfedge < 0 || s.halfedge >= halfedge_count_) return -1;
    return s.left ? walk_of_[s.halfedge] : walk_of_[prev_[s.halfedge]];
}

void SurfaceMap::build_regions() {
    const auto& t = *t_;
    region_of_walk_.assign(walks_.size(), -1);
    for (const auto& a : t.faces) {
        Region r;
        r.id = a.id;
        r.genus = a.genus;
        r.enclosed_boundaries = a.enclosed_boundaries;
        r.isolated_points = a.isolated_points;
        const int idx = static_cast<int>(regions_.size());
        for (const auto& side : a.sides) {
            const int w = walk_of_side(side);
            if (w < 0) {
                problems_.push_back("face " + a.id + ": side anchor is not a half-edge");
                continue;
            }
            if (region_of_walk_[w] >= 0) {
                if (region_of_walk_[w] == idx) continue;
                problems_.push_back("face " + a.id + ": walk already annotated by face " +
                                    regions_[region_of_walk_[w]].id);
                continue;
            }
            region_of_walk_[w] = idx;
            r.walks.push_back(w);
        }
        if (r.walks.empty() && !walks_.empty())
            problems_.push_back("face " + a.id + ": no side anchors a traced face");
        regions_.push_back(std::move(r));
    }
    if (walks_.empty() && regions_.empty()) {
        // arcless surface: a single region carrying the whole topology
        Region r;
        r.id = "f0";
        r.genus = t.genus;
        for (int c = 0; c < t.boundary_count; ++c) r.enclosed_boundaries.push_back(c);
        for (std::size_t p = 0; p < t.points.size(); ++p)
            if (!t.points[p].on_boundary) r.isolated_points.push_back(static_cast<int>(p));
        regions_.push_back(std::move(r));
    }
    for (std::size_t w = 0; w < walks_.size(); ++w) {
        if (region_of_walk_[w] >= 0) continue;
        Region r;
        r.id = "_w" + std::to_string(w);
        r.walks.push_back(static_cast<int>(w));
        region_of_walk_[w] = static_cast<int>(regions_.size());
        regions_.push_back(std::move(r));
    }
}

std::vector<std::vector<int>> trace_faces(const PartialTriangulation& t) { return SurfaceMap(t).walks(); }

bool ValidationReport::has(std::string_view code) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.code == code; });
}

LoopRegions enclosed_region(const PartialTriangulation& t, int loop_arc) {
    return enclosed_region(SurfaceMap(t), loop_arc);
}

LoopRegions enclosed_region(const SurfaceMap& map, int loop_arc) {
    const auto& t = map.triangulation();
    if (loop_arc < 0 || loop_arc >= static_cast<int>(t.arcs.size()) || !t.is_loop(loop_arc))
        throw std::invalid_argument("enclosed_region: arc is not a loop");
    const int base = t.halfedges[t.arcs[loop_arc].ends[0]].point;
    const auto& regions = map.regions();
    UnionFind uf(regions.size());
    for (std::size_t e = 0; e < t.arcs.size(); ++e) {
        if (static_cast<int>(e) == loop_arc) continue;
        const int d = t.arcs[e].ends[0];
        uf.unite(map.region_of_corner(d), map.region_of_corner(map.prev(d)));
    }
    const int side_root[2] = {uf.find(map.region_of_corner(t.arcs[loop_arc].ends[0])),
                              uf.find(map.region_of_corner(t.arcs[loop_arc].ends[1]))};
    LoopRegions out;
    for (int s = 0; s < 2; ++s) {
        const int root = side_root[s];
        SideSummary& sum = out.side[s];
        sum.separating = side_root[0] != side_root[1];
        int chi = 0;
        std::set<int> pts;
        for (std::size_t r = 0; r < regions.size(); ++r) {
            if (uf.find(static_cast<int>(r)) != root) continue;
            chi += regions[r].euler();
            sum.boundary_components += static_cast<int>(regions[r].enclosed_boundaries.size());
            pts.insert(regions[r].isolated_points.begin(), regions[r].isolated_points.end());
            for (int c : regions[r].enclosed_boundaries)
                for (int p : t.boundary_points(c)) pts.insert(p);
        }
        for (std::size_t e = 0; e < t.arcs.size(); ++e)
            if (static_cast<int>(e) != loop_arc && uf.find(map.region_of_corner(t.arcs[e].ends[0])) == root) --chi;
        std::set<int> touched_components;
        for (int sgm = 0; sgm < map.segment_count(); ++sgm) {
            const int dart = static_cast<int>(t.halfedges.size()) + 2 * sgm;
            if (uf.find(map.region_of_corner(dart)) == root) {
                --chi;
                touched_components.insert(map.segment_component(sgm));
            }
        }
        sum.boundary_components += static_cast<int>(touched_components.size());
        for (std::size_t p = 0; p < t.points.size(); ++p) {
            if (static_cast<int>(p) == base || !map.point_in_graph(static_cast<int>(p))) continue;
            int dart = -1;
            for (int d = 0; d < map.dart_count() && dart < 0; ++d)
                if (map.point(d) == static_cast<int>(p) && !map.exterior_corner(d)) dart = d;
            if (dart >= 0 && uf.find(map.region_of_corner(dart)) == root) {
                ++chi;
                pts.insert(static_cast<int>(p));
            }
        }
        const int ends = sum.separating ? 1 : 2;
        sum.genus = (2 - sum.boundary_components - ends - chi) / 2;
        sum.points.assign(pts.begin(), pts.end());
    }
    return out;
}

ValidationReport validate(const PartialTriangulation& t) {
    ValidationReport rep;
    SurfaceMap map(t);
    const int npts = static_cast<int>(t.points.size());

    if (t.genus == 0 && t.boundary_count == 0 && npts < 5)
        rep.violations.push_back({'a', "sphere_min_points", "surface",
                                  "a sphere needs at least 5 marked points, found " + std::to_string(npts)});
    if (t.genus == 0 && t.boundary_count == 1 && npts < 3)
        rep.violations.push_back({'a', "disc_min_points", "surface",
                                  "a disc needs at least 3 marked points, found " + std::to_string(npts)});

    for (const auto& p : map.annotation_problems()) rep.violations.push_back({'f', "face_annotation", "faces", p});

    // (f) assignment of isolated points and arc-free boundary components
    std::vector<int> point_uses(npts, 0), comp_uses(t.boundary_count, 0);
    for (const auto& r : map.regions()) {
        for (int p : r.isolated_points) {
            if (p < 0 || p >= npts) continue;
            ++point_uses[p];
            if (t.points[p].on_boundary || map.point_in_graph(p))
                rep.violations.push_back({'f', "face_assignment", t.points[p].id,
                                          "face " + r.id + " lists " + t.points[p].id + " which is not isolated"});
        }
        for (int c : r.enclosed_boundaries) {
            if (c < 0 || c >= t.boundary_count) {
                rep.violations.push_back({'f', "face_assignment", r.id, "unknown boundary component"});
                continue;
            }
            ++comp_uses[c];
            if (map.component_attached(c))
                rep.violations.push_back({'f', "face_assignment", "boundary " + std::to_string(c),
                                          "face " + r.id + " encloses a boundary component carrying arcs"});
        }
    }
    for (int p = 0; p < npts; ++p)
        if (!t.points[p].on_boundary && !map.point_in_graph(p) && point_uses[p] != 1)
            rep.violations.push_back({'f', "face_assignment", t.points[p].id,
                                      "isolated point assigned to " + std::to_string(point_uses[p]) + " faces"});
    for (int c = 0; c < t.boundary_count; ++c)
        if (!map.component_attached(c) && comp_uses[c] != 1)
            rep.violations.push_back({'f', "face_assignment", "boundary " + std::to_string(c),
                                      "arc-free boundary component assigned to " + std::to_string(comp_uses[c]) +
                                          " faces"});

    // (b) Euler characteristic
    int vertices = 0;
    for (int p = 0; p < npts; ++p)
        if (map.point_in_graph(p)) ++vertices;
    int chi = vertices - static_cast<int>(t.arcs.size()) - map.segment_count();
    for (const auto& r : map.regions()) {
        if (r.genus < 0)
            rep.violations.push_back({'b', "euler_characteristic", r.id, "negative face genus"});
        chi += r.euler();
    }
    const int expected = 2 - 2 * t.genus - t.boundary_count;
    if (chi != expected)
        rep.violations.push_back({'b', "euler_characteristic", "surface",
                                  "annotated cell structure has Euler characteristic " + std::to_string(chi) +
                                      ", surface has " + std::to_string(expected)});

    // (c), (d): empty monogons and bigons
    for (const auto& r : map.regions()) {
        if (!r.empty_disc()) continue;
        const auto& walk = map.walks()[r.walks[0]];
        auto side_arc = [&](int corner) {
            const int d = map.next(corner);
            return map.is_segment(d) ? -1 : t.halfedges[d].arc;
        };
        if (walk.size() == 1 && side_arc(walk[0]) >= 0)
            rep.violations.push_back({'c', "contractible_arc", t.arcs[side_arc(walk[0])].id,
                                      "arc bounds an empty monogon (homotopic to a point)"});
        if (walk.size() == 2) {
            const int a0 = side_arc(walk[0]), a1 = side_arc(walk[1]);
            if (a0 >= 0 && a1 >= 0 && a0 != a1)
                rep.violations.push_back({'d', "duplicate_arc", t.arcs[a0].id + "," + t.arcs[a1].id,
                                          "arcs bound an empty bigon (homotopic arcs)"});
            else if ((a0 >= 0) != (a1 >= 0))
                rep.violations.push_back({'d', "boundary_parallel_arc", t.arcs[std::max(a0, a1)].id,
                                          "arc is homotopic to a boundary segment"});
        }
    }

    // (e): loops around a single point of small multiplicity
    for (std::size_t a = 0; a < t.arcs.size(); ++a) {
        if (!t.is_loop(static_cast<int>(a))) continue;
        auto lr = enclosed_region(map, static_cast<int>(a));
        for (const auto& side : lr.side) {
            if (!side.separating || side.genus != 0) continue;
            if (side.boundary_components == 0 && side.points.size() == 1 &&
                t.points[side.points[0]].multiplicity <= 2)
                rep.violations.push_back({'e', "small_enclosed_loop", t.arcs[a].id,
                                          "loop encloses only " + t.points[side.points[0]].id +
                                              " whose multiplicity is <= 2"});
            if (side.boundary_components == 1 && side.points.empty())
                rep.warnings.push_back("loop " + t.arcs[a].id + " is parallel to an unmarked boundary component");
        }
    }
    return rep;
}

DegreeStats degree_stats(const PartialTriangulation& t) {
    DegreeStats s;
    s.degree.resize(t.points.size());
    for (std::size_t p = 0; p < t.points.size(); ++p) s.degree[p] = t.degree(static_cast<int>(p));
    for (const auto& a : t.arcs)
        if (t.points[t.halfedges[a.ends[0]].point].on_boundary && t.points[t.halfedges[a.ends[1]].point].on_boundary)
            ++s.boundary_arcs;
    return s;
}

std::vector<SmallTriangle> small_triangles(const PartialTriangulation& t) { return small_triangles(SurfaceMap(t)); }

std::vector<SmallTriangle> small_triangles(const SurfaceMap& map) {
    const auto& t = map.triangulation();
    std::vector<SmallTriangle> out;
    for (const auto& r : map.regions()) {
        if (!r.empty_disc()) continue;
        const auto& walk = map.walks()[r.walks[0]];
        if (walk.size() != 3) continue;
        bool arcs_only = true;
        for (int x : walk)
            if (map.is_segment(x) || map.is_segment(map.next(x))) arcs_only = false;
        if (!arcs_only) continue;
        SmallTriangle tri;
        for (int i = 0; i < 3; ++i) {
            tri.corners[i] = walk[i];
            tri.arcs[i] = t.halfedges[walk[i]].arc;
        }
        // u = arc(x1) joins M = point(x3) and N = point(x1); P = point(x2)
        tri.points = {map.point(walk[2]), map.point(walk[0]), map.point(walk[1])};
        out.push_back(tri);
    }
    return out;
}

PartialTriangulation restrict_to(const PartialTriangulation& t, const std::set<int>& keep) {
    SurfaceMap old_map(t);
    PartialTriangulation out;
    out.genus = t.genus;
    out.boundary_count = t.boundary_count;
    out.ring = t.ring;
    out.points = t.points;

    std::vector<int> new_half(t.halfedges.size(), -1), old_half;
    for (std::size_t a = 0; a < t.arcs.size(); ++a) {
        if (!keep.count(static_cast<int>(a))) continue;
        Arc na{t.arcs[a].id, {-1, -1}};
        const int arc_idx = static_cast<int>(out.arcs.size());
        for (int k = 0; k < 2; ++k) {
            const int h = t.arcs[a].ends[k];
            new_half[h] = static_cast<int>(out.halfedges.size());
            old_half.push_back(h);
            out.halfedges.push_back({t.halfedges[h].id, arc_idx, t.halfedges[h].point});
            na.ends[k] = new_half[h];
        }
        out.arcs.push_back(na);
    }
    out.rotation.resize(t.points.size());
    for (std::size_t p = 0; p < t.points.size(); ++p)
        for (int h : t.rotation[p])
            if (new_half[h] >= 0) out.rotation[p].push_back(new_half[h]);

    const auto& old_regions = old_map.regions();
    UnionFind uf(old_regions.size());
    for (std::size_t a = 0; a < t.arcs.size(); ++a) {
        if (keep.count(static_cast<int>(a))) continue;
        const int d = t.arcs[a].ends[0];
        uf.unite(old_map.region_of_corner(d), old_map.region_of_corner(old_map.prev(d)));
    }

    SurfaceMap new_map(out);
    struct Acc {
        int chi = 0;
        std::set<int> enclosed, isolated;
        std::vector<int> walks;
        bool used = false;
    };
    std::map<int, Acc> acc;
    for (std::size_t r = 0; r < old_regions.size(); ++r) {
        auto& a = acc[uf.find(static_cast<int>(r))];
        a.used = true;
        a.chi += old_regions[r].euler();
        a.enclosed.insert(old_regions[r].enclosed_boundaries.begin(), old_regions[r].enclosed_boundaries.end());
        a.isolated.insert(old_regions[r].isolated_points.begin(), old_regions[r].isolated_points.end());
    }
    for (std::size_t a = 0; a < t.arcs.size(); ++a)
        if (!keep.count(static_cast<int>(a)))
            acc[uf.find(old_map.region_of_corner(t.arcs[a].ends[0]))].chi -= 1;
    for (int s = 0; s < old_map.segment_count(); ++s) {
        const int c = old_map.segment_component(s);
        if (new_map.component_attached(c)) continue;
        const int dart = static_cast<int>(t.halfedges.size()) + 2 * s;
        auto& a = acc[uf.find(old_map.region_of_corner(dart))];
        a.chi -= 1;
        a.enclosed.insert(c);
    }
    for (std::size_t p = 0; p < t.points.size(); ++p) {
        if (!old_map.point_in_graph(static_cast<int>(p)) || new_map.point_in_graph(static_cast<int>(p))) continue;
        int dart = -1;
        for (int d = 0; d < old_map.dart_count() && dart < 0; ++d)
            if (old_map.point(d) == static_cast<int>(p) && !old_map.exterior_corner(d)) dart = d;
        auto& a = acc[uf.find(old_map.region_of_corner(dart))];
        a.chi += 1;
        if (!t.points[p].on_boundary) a.isolated.insert(static_cast<int>(p));
    }
    std::vector<FaceSide> anchors(new_map.walks().size());
    for (std::size_t w = 0; w < new_map.walks().size(); ++w) {
        int anchor = -1;
        for (int x : new_map.walks()[w])
            if (!new_map.is_segment(x)) {
                anchor = x;
                break;
            }
        if (anchor < 0) throw InternalError("restrict: face walk without an arc corner");
        anchors[w] = {anchor, true};
        acc[uf.find(old_map.region_of_corner(old_half[anchor]))].walks.push_back(static_cast<int>(w));
    }

    std::vector<std::pair<int, FaceAnnotation>> faces;
    for (auto& [root, a] : acc) {
        if (!a.used) continue;
        if (a.walks.empty() && !new_map.walks().empty())
            throw InternalError("restrict: merged region lost all of its face walks");
        FaceAnnotation f;
        const int k = static_cast<int>(a.walks.size());
        const int b = static_cast<int>(a.enclosed.size());
        f.genus = (2 - b - k - a.chi) / 2;
        f.enclosed_boundaries.assign(a.enclosed.begin(), a.enclosed.end());
        f.isolated_points.assign(a.isolated.begin(), a.isolated.end());
        std::sort(a.walks.begin(), a.walks.end());
        for (int w : a.walks) f.sides.push_back(anchors[w]);
        const bool plain = f.genus == 0 && f.enclosed_boundaries.empty() && f.isolated_points.empty() && k == 1;
        if (!plain) faces.emplace_back(k ? a.walks[0] : -1, std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < faces.size(); ++i) {
        faces[i].second.id = "f" + std::to_string(i);
        out.faces.push_back(std::move(faces[i].second));
    }
    return out;
}

std::string canonical_signature(const PartialTriangulation& t) {
    SurfaceMap map(t);
    auto label = [&](int d) -> std::string {
        if (map.is_segment(d))
            return "seg" + std::to_string(map.segment_component(map.segment_of(d))) + "@" +
                   t.points[map.point(d)].id + (d % 2 == static_cast<int>(t.halfedges.size()) % 2 ? "+" : "-");
        return t.arcs[t.halfedges[d].arc].id + "@" + t.points[map.point(d)].id;
    };
    auto canonical_cycle = [](std::vector<std::string> v) {
        if (v.empty()) return std::string();
        std::vector<std::string> best;
        for (std::size_t r = 0; r < v.size(); ++r) {
            std::vector<std::string> rot(v.begin() + r, v.end());
            rot.insert(rot.end(), v.begin(), v.begin() + r);
            if (best.empty() || rot < best) best = rot;
        }
        std::string s;
        for (auto& x : best) s += x + " ";
        return s;
    };
    std::ostringstream os;
    os << "g" << t.genus << " b" << t.boundary_count << "\n";
    std::vector<std::string> lines;
    for (std::size_t p = 0; p < t.points.size(); ++p) {
        const auto& pt = t.points[p];
        std::ostringstream l;
        l << "P " << pt.id << " " << (pt.on_boundary ? std::to_string(pt.component) + ":" + std::to_string(pt.position)
                                                      : std::string("int"))
          << " m" << pt.multiplicity << " l" << pt.lambda << " rot:";
        std::vector<std::string> rot;
        for (int h : t.rotation[p]) rot.push_back(label(h));
        if (pt.on_boundary) {
            for (auto& x : rot) l << " " << x;
        } else {
            l << " " << canonical_cycle(rot);
        }
        lines.push_back(l.str());
    }
    for (const auto& a : t.arcs) {
        std::string e0 = t.points[t.halfedges[a.ends[0]].point].id, e1 = t.points[t.halfedges[a.ends[1]].point].id;
        if (e1 < e0) std::swap(e0, e1);
        lines.push_back("A " + a.id + " " + e0 + " " + e1);
    }
    for (const auto& r : map.regions()) {
        std::vector<std::string> walks;
        for (int w : r.walks) {
            std::vector<std::string> sides;
            for (int x : map.walks()[w]) sides.push_back(label(map.next(x)));
            walks.push_back("(" + canonical_cycle(sides) + ")");
        }
        std::sort(walks.begin(), walks.end());
        std::ostringstream l;
        l << "F g" << r.genus << " enc[";
        for (int c : r.enclosed_boundaries) l << c << ",";
        l << "] iso[";
        std::vector<std::string> iso;
        for (int p : r.isolated_points) iso.push_back(t.points[p].id);
        std::sort(iso.begin(), iso.end());
        for (auto& x : iso) l << x << ",";
        l << "]";
        for (auto& w : walks) l << " " << w;
        lines.push_back(l.str());
    }
    std::sort(lines.begin(), lines.end());
    for (auto& l : lines) os << l << "\n";
    return os.str();
}

}  // namespace ptri
