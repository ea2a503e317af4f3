#pragma once

#include "ptri/scalar.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ptri {

struct MarkedPoint {
    std::string id;
    bool on_boundary = false;
    int component = -1;  // boundary component index, -1 for interior points
    int position = -1;   // counter-clockwise position on the component
    int multiplicity = 1;
    Scalar lambda;
};

struct HalfEdge {
    std::string id;
    int arc = -1;
    int point = -1;
};

struct Arc {
    std::string id;
    std::array<int, 2> ends{-1, -1};  // half-edge indices
};

/// Anchors an annotation to a traced face: the corner just counter-clockwise
/// of the half-edge (L) or just clockwise of it (R).
struct FaceSide {
    int halfedge = -1;
    bool left = true;
    friend bool operator==(const FaceSide&, const FaceSide&) = default;
};

/// User-supplied topology of one complementary region of the arc graph.
/// A region bounded by several walks lists one side per walk.
struct FaceAnnotation {
    std::string id;
    int genus = 0;
    std::vector<int> enclosed_boundaries;
    std::vector<int> isolated_points;
    std::vector<FaceSide> sides;
};

struct PartialTriangulation {
    int genus = 0;
    int boundary_count = 0;
    RingSpec ring = RingSpec::rationals();
    std::vector<MarkedPoint> points;
    std::vector<HalfEdge> halfedges;
    std::vector<Arc> arcs;
    /// Per point: counter-clockwise half-edge order (cyclic for interior
    /// points, linear from one boundary segment to the other otherwise).
    std::vector<std::vector<int>> rotation;
    std::vector<FaceAnnotation> faces;

    int find_point(std::string_view id) const;
    int find_arc(std::string_view id) const;
    int find_halfedge(std::string_view id) const;
    int point_index(std::string_view id) const;  // throws InputError when absent
    int arc_index(std::string_view id) const;

    int mate(int h) const {
        const auto& a = arcs[halfedges[h].arc];
        return a.ends[0] == h ? a.ends[1] : a.ends[0];
    }
    bool is_loop(int arc) const {
        return halfedges[arcs[arc].ends[0]].point == halfedges[arcs[arc].ends[1]].point;
    }
    bool interior(int point) const { return !points[point].on_boundary; }
    bool arc_touches_boundary(int arc) const;
    int degree(int point) const { return static_cast<int>(rotation[point].size()); }
    /// Points on boundary component c ordered by position.
    std::vector<int> boundary_points(int component) const;
};

/// Throws InputError when the rotation data is not a well-formed map.
void check_well_formed(const PartialTriangulation& t);

/// Region of the surface cut along the arc graph, with resolved annotation.
struct Region {
    std::string id;
    int genus = 0;
    std::vector<int> walks;
    std::vector<int> enclosed_boundaries;
    std::vector<int> isolated_points;
    int euler() const {
        return 2 - 2 * genus - static_cast<int>(enclosed_boundaries.size()) - static_cast<int>(walks.size());
    }
    bool empty_disc() const {
        return genus == 0 && enclosed_boundaries.empty() && isolated_points.empty() && walks.size() == 1;
    }
};

/// The combinatorial map of a partial triangulation, boundary segments
/// included as edges. Darts [0, #halfedges) are the half-edges; segment darts
/// follow. next() is the counter-clockwise successor at a point.
class SurfaceMap {
public:
    explicit SurfaceMap(const PartialTriangulation& t);

    const PartialTriangulation& triangulation() const { return *t_; }
    int dart_count() const { return static_cast<int>(point_.size()); }
    int next(int d) const { return next_[d]; }
    int prev(int d) const { return prev_[d]; }
    int mate(int d) const { return mate_[d]; }
    int point(int d) const { return point_[d]; }
    bool is_segment(int d) const { return d >= halfedge_count_; }
    /// A corner starts at dart d and runs to next(d); exterior corners face
    /// away from the surface at boundary points.
    bool exterior_corner(int d) const { return exterior_[d]; }
    /// Index of the boundary segment owning a segment dart.
    int segment_of(int d) const { return segment_[d]; }
    int segment_count() const { return static_cast<int>(segment_component_.size()); }
    int segment_component(int s) const { return segment_component_[s]; }
    bool component_attached(int c) const { return attached_[c]; }
    bool point_in_graph(int p) const;

    /// Face walks as sequences of corner-start darts; walk i starts at its
    /// least dart. Exterior walks are excluded.
    const std::vector<std::vector<int>>& walks() const { return walks_; }
    int walk_of_corner(int d) const { return walk_of_[d]; }
    /// Walk containing the given annotation side.
    int walk_of_side(const FaceSide& s) const;

    const std::vector<Region>& regions() const { return regions_; }
    int region_of_walk(int w) const { return region_of_walk_[w]; }
    int region_of_corner(int d) const { return region_of_walk_[walk_of_[d]]; }
    /// Problems met while resolving annotations (reported by validate).
    const std::vector<std::string>& annotation_problems() const { return problems_; }

private:
    void build_regions();

    const PartialTriangulation* t_;
    int halfedge_count_ = 0;
    std::vector<int> next_, prev_, mate_, point_, segment_;
    std::vector<bool> exterior_;
    std::vector<int> segment_component_;
    std::vector<bool> attached_;
    std::vector<std::vector<int>> walks_;
    std::vector<int> walk_of_;
    std::vector<Region> regions_;
    std::vector<int> region_of_walk_;
    std::vector<std::string> problems_;
};

/// Face walks of t (see SurfaceMap::walks).
std::vector<std::vector<int>> trace_faces(const PartialTriangulation& t);

struct Violation {
    char rule;         // 'a'..'f' as listed in validate, 's' for annotation structure
    std::string code;  // stable machine-readable code
    std::string object;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> warnings;
    bool ok() const { return violations.empty(); }
    bool has(std::string_view code) const;
};

/// Checks, each reported separately:
///  (a) sphere needs >= 5 marked points, disc >= 3;
///  (b) Euler characteristic of the annotated cell structure;
///  (c) no empty monogon (arc homotopic to a point);
///  (d) no empty bigon (duplicate arcs, or arc parallel to a boundary segment);
///  (e) no loop cutting off a disc with one point of multiplicity <= 2;
///  (f) every isolated point / arc-free boundary assigned to exactly one face.
ValidationReport validate(const PartialTriangulation& t);

struct DegreeStats {
    std::vector<int> degree;  // per point; loops count twice
    int boundary_arcs = 0;    // arcs with both endpoints on the boundary
};

DegreeStats degree_stats(const PartialTriangulation& t);

/// A small triangle (u, v, w) with corners M, N, P: u joins M and N, v joins
/// N and P, w joins P and M, enclosing an empty disc clockwise. corner[i] is
/// the half-edge where the corresponding face corner starts: corner[0] is
/// u's half-edge at N, corner[1] v's at P, corner[2] w's at M.
struct SmallTriangle {
    std::array<int, 3> arcs;     // u, v, w
    std::array<int, 3> points;   // M, N, P
    std::array<int, 3> corners;  // start darts at N, P, M
    bool self_folded() const { return arcs[0] == arcs[1] || arcs[1] == arcs[2] || arcs[0] == arcs[2]; }
};

std::vector<SmallTriangle> small_triangles(const PartialTriangulation& t);
std::vector<SmallTriangle> small_triangles(const SurfaceMap& map);

/// Deletes every arc not in keep, merging faces and transporting annotations.
PartialTriangulation restrict_to(const PartialTriangulation& t, const std::set<int>& keep);

struct SideSummary {
    int genus = 0;
    int boundary_components = 0;
    std::vector<int> points;  // marked points strictly inside (base point excluded)
    bool separating = false;  // this side is not reachable from the other side
};

struct LoopRegions {
    std::array<SideSummary, 2> side;  // side[0] is counter-clockwise of ends[0]
};

/// Parts of the surface on each side of the loop u, reachable without
/// crossing u. Throws std::invalid_argument when u is not a loop.
LoopRegions enclosed_region(const PartialTriangulation& t, int loop_arc);
LoopRegions enclosed_region(const SurfaceMap& map, int loop_arc);

/// Canonical form ignoring face ids and half-edge list order; used to compare
/// triangulations built along different paths.
std::string canonical_signature(const PartialTriangulation& t);

}  // namespace ptri
