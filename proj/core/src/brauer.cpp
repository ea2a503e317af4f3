#include "ptri/brauer.hpp"

#include "ptri/format.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace ptri {

BrauerGraph parse_brauer(std::string_view text, RingSpec ring) {
    bool has_surface = false;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line.substr(0, line.find('#')));
        std::string kw;
        ls >> kw;
        if (kw == "surface") has_surface = true;
    }
    // the genus is irrelevant for the algebra; the embedding recomputes it
    BrauerGraph g{parse_ptri(has_surface ? std::string(text) : "surface genus=0 boundaries=0\n" + std::string(text), ring)};
    if (g.ribbon.boundary_count != 0) throw InputError("Brauer graphs have no boundary");
    g.ribbon.faces.clear();  // faces come from tracing
    return g;
}

BrauerGraph load_brauer(const std::string& path, RingSpec ring) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_brauer(ss.str(), ring);
}

BrauerCase is_brauer_case(const PartialTriangulation& t) {
    BrauerCase c;
    for (std::size_t a = 0; a < t.arcs.size(); ++a)
        if (t.arc_touches_boundary(static_cast<int>(a))) c.reasons.push_back("arc " + t.arcs[a].id + " touches the boundary");
    for (const auto& tri : small_triangles(t))
        c.reasons.push_back("small triangle " + t.arcs[tri.arcs[0]].id + " " + t.arcs[tri.arcs[1]].id + " " +
                            t.arcs[tri.arcs[2]].id);
    c.holds = c.reasons.empty();
    return c;
}

StructureConstants brauer_algebra_direct(const BrauerGraph& g) { return Algebra(g.ribbon, {}).structure_table(); }

TableComparison compare_tables(const StructureConstants& a, const StructureConstants& b, std::size_t max_report) {
    TableComparison c;
    c.size_a = a.size();
    c.size_b = b.size();
    auto note = [&](const std::string& s) {
        if (c.mismatches.size() < max_report) c.mismatches.push_back(s);
    };
    if (a.size() != b.size()) {
        note("sizes differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
        return c;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a.basis[i] == b.basis[i])) note("basis element " + std::to_string(i) + " differs");
    auto show = [&](const StructureConstants& s, const ScaledBasis& p) {
        return p.is_zero() ? std::string("0") : p.coeff.to_string() + "·" + s.names[p.index];
    };
    std::size_t bad = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!(a.at(i, j) == b.at(i, j))) {
                ++bad;
                note(a.names[i] + " * " + a.names[j] + ": " + show(a, a.at(i, j)) + " vs " + show(b, b.at(i, j)));
            }
    c.equal = bad == 0 && c.mismatches.empty();
    return c;
}

TableComparison compare_with_delta(const PartialTriangulation& t) {
    const auto bc = is_brauer_case(t);
    if (!bc.holds) throw InputError("not a Brauer case: " + bc.reasons.front());
    BrauerGraph g{t};
    g.ribbon.faces.clear();
    return compare_tables(Algebra(t).structure_table(), brauer_algebra_direct(g));
}

std::vector<std::vector<int>> ribbon_faces(const PartialTriangulation& r) {
    const Rotation rot(r);
    std::vector<std::vector<int>> faces;
    std::vector<bool> seen(r.halfedges.size(), false);
    for (std::size_t h = 0; h < r.halfedges.size(); ++h) {
        if (seen[h]) continue;
        std::vector<int> walk;
        int x = static_cast<int>(h);
        while (!seen[x]) {
            seen[x] = true;
            walk.push_back(x);
            x = r.mate(rot.next(x));
        }
        faces.push_back(std::move(walk));
    }
    return faces;
}

PartialTriangulation embed_brauer_graph(const BrauerGraph& g) {
    const auto& r = g.ribbon;
    if (r.arcs.empty()) throw InputError("Brauer graph has no edges");
    std::vector<int> comp(r.points.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (const auto& a : r.arcs) comp[find(r.halfedges[a.ends[0]].point)] = find(r.halfedges[a.ends[1]].point);
    for (std::size_t p = 0; p < r.points.size(); ++p)
        if (find(static_cast<int>(p)) != find(0)) throw InputError("Brauer graph is disconnected");

    const auto faces = ribbon_faces(r);
    const int chi = static_cast<int>(r.points.size()) - static_cast<int>(r.arcs.size()) + static_cast<int>(faces.size());
    if (chi % 2 != 0 || chi > 2) throw InputError("rotation data does not describe an orientable surface");

    PartialTriangulation t = r;
    t.genus = (2 - chi) / 2;
    t.boundary_count = 0;
    t.faces.clear();
    auto fresh_point = [&](int n) {
        std::string id = "F" + std::to_string(n);
        while (t.find_point(id) >= 0) id = "_" + id;
        MarkedPoint p;
        p.id = id;
        p.multiplicity = 3;
        p.lambda = Scalar::one(t.ring);
        t.points.push_back(p);
        t.rotation.emplace_back();
        return static_cast<int>(t.points.size()) - 1;
    };
    int n = 0;
    for (const auto& walk : faces) {
        FaceAnnotation f;
        f.id = "f" + std::to_string(n);
        f.isolated_points.push_back(fresh_point(n++));
        f.sides.push_back({walk.front(), true});
        t.faces.push_back(std::move(f));
    }
    while (t.genus == 0 && t.points.size() < 5) t.faces.front().isolated_points.push_back(fresh_point(n++));
    const auto rep = validate(t);
    if (!rep.ok()) throw InternalError("embedded Brauer graph does not validate: " + rep.violations.front().message);
    return t;
}

BrauerGraph random_brauer_graph(std::uint64_t seed, int max_edges, int max_multiplicity, RingSpec ring) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int edges = uniform(1, max_edges);
    const int vertices = uniform(1, edges + 1);
    PartialTriangulation t;
    t.ring = ring;
    static const long lambdas[][2] = {{1, 1}, {-1, 1}, {2, 1}, {-3, 1}, {1, 2}, {-2, 3}};
    for (int v = 0; v < vertices; ++v) {
        MarkedPoint p;
        p.id = "V" + std::to_string(v);
        p.multiplicity = uniform(1, max_multiplicity);
        const auto& l = lambdas[uniform(0, 5)];
        p.lambda = Scalar(ring, mpq_class(l[0], l[1]));
        if (p.lambda.is_zero()) p.lambda = Scalar::one(ring);
        t.points.push_back(p);
        t.rotation.emplace_back();
    }
    auto add_edge = [&](int a, int b) {
        const int e = static_cast<int>(t.arcs.size());
        Arc arc;
        arc.id = "e" + std::to_string(e);
        for (int k = 0; k < 2; ++k) {
            HalfEdge h;
            h.id = arc.id + (k ? "b" : "a");
            h.arc = e;
            h.point = k ? b : a;
            arc.ends[k] = static_cast<int>(t.halfedges.size());
            t.rotation[h.point].push_back(arc.ends[k]);
            t.halfedges.push_back(h);
        }
        t.arcs.push_back(arc);
    };
    for (int v = 1; v < vertices; ++v) add_edge(uniform(0, v - 1), v);
    while (static_cast<int>(t.arcs.size()) < edges) add_edge(uniform(0, vertices - 1), uniform(0, vertices - 1));
    for (auto& rot : t.rotation) std::shuffle(rot.begin(), rot.end(), rng);
    return BrauerGraph{t};
}

}  // namespace ptri
