#include <doctest.h>

#include "instances.hpp"

#include "ptri/invariants.hpp"

#include <numeric>

using namespace ptri;
using namespace ptri::testing;

namespace {

// Entry (u, v) counted straight from the rotation data: idempotent and socle
// on the diagonal, one winding prefix per (start, length).
std::vector<std::vector<long>> cartan_by_count(const PartialTriangulation& t) {
    const std::size_t n = t.arcs.size();
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
        c[a][a] += 1;
        if (!t.arc_touches_boundary(static_cast<int>(a))) c[a][a] += 1;
    }
    for (std::size_t p = 0; p < t.points.size(); ++p) {
        const auto& rot = t.rotation[p];
        const long d = static_cast<long>(rot.size());
        for (long i = 0; i < d; ++i) {
            const int u = t.halfedges[rot[i]].arc;
            if (t.interior(static_cast<int>(p))) {
                for (long len = 1; len < t.points[p].multiplicity * d; ++len) ++c[u][t.halfedges[rot[(i + len) % d]].arc];
            } else {
                for (long len = 1; i + len < d; ++len) ++c[u][t.halfedges[rot[i + len]].arc];
            }
        }
    }
    return c;
}

long leibniz(const std::vector<std::vector<long>>& m) {
    std::vector<int> p(m.size());
    std::iota(p.begin(), p.end(), 0);
    long total = 0;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
        long prod = inv % 2 ? -1 : 1;
        for (std::size_t i = 0; i < p.size(); ++i) prod *= m[i][p[i]];
        total += prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Center as the kernel of x -> (x b_j - b_j x)_j, assembled densely here.
std::size_t center_by_kernel(const StructureConstants& sc) {
    const std::size_t n = sc.size();
    Matrix m(sc.ring, n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& l = sc.at(i, j);
            const auto& r = sc.at(j, i);
            if (!l.is_zero()) m(j * n + l.index, i) += l.coeff;
            if (!r.is_zero()) m(j * n + r.index, i) -= r.coeff;
        }
    return n - rank_of(m);
}

}  // namespace

TEST_CASE("Cartan matrix against a direct count") {
    for (const auto* name : {"disc_abcd", "torus_loop", "triangle_mnp", "loop_n", "loop_f2", "path_tpq",
                             "torus_triangulation"}) {
        CAPTURE(name);
        const auto t = fixture(name);
        const auto cm = cartan_matrix(Algebra(t).structure_table(), t.arcs.size());
        const auto oracle = cartan_by_count(t);
        CHECK(cm.entries == oracle);
        CHECK(cm.determinant() == leibniz(oracle));
        CHECK(cm.total() == rank_formula(t));
    }
}

TEST_CASE("worked flip example invariants") {
    const auto tri = invariant_report(Algebra(fixture("triangle_mnp")).structure_table(), 3);
    const auto loop = invariant_report(Algebra(fixture("loop_n")).structure_table(), 3);
    CHECK(tri.simples == 3);
    CHECK(loop.simples == 3);
    CHECK(abs(tri.cartan_determinant) == 108);
    CHECK(abs(loop.cartan_determinant) == 108);
    CHECK(tri.center_dimension == 10);
    CHECK(loop.center_dimension == 10);
    CHECK(tri.total_rank == 36);
    CHECK(loop.total_rank == 54);
    CHECK(derived_invariant_report(tri, loop).consistent());
}

TEST_CASE("center against the commutator kernel and the trace space") {
    for (const auto* name : {"disc_abcd", "torus_loop", "triangle_mnp", "loop_n", "path_tpq"}) {
        CAPTURE(name);
        const auto sc = Algebra(fixture(name)).structure_table();
        const auto z = center(sc);
        CHECK(z.verified);
        CHECK(z.dimension() == center_by_kernel(sc));
        // for a symmetric algebra dim Z(A) = dim (A/[A,A])*
        const auto f = symmetrizing_form(sc, 16, 0);
        if (f.found) CHECK(f.trace_space_dim == z.dimension());
    }
    for (int m = 1; m <= 3; ++m) {
        const auto sc = Algebra(with_m(fixture("torus_loop"), "M", m)).structure_table();
        CHECK(center(sc).dimension() == center_by_kernel(sc));
    }
}

TEST_CASE("radical") {
    for (int m = 1; m <= 3; ++m) {
        const auto r = radical_and_simples(Algebra(with_m(fixture("torus_loop"), "M", m)).structure_table());
        CHECK(r.ok());
        CHECK(r.simples == 1);
        CHECK(r.radical.size() == 4u * m - 1);
        CHECK(r.nilpotency_index == 2 * m + 1);  // socle (ab)^m has length 2m
    }
    const auto left = radical_and_simples(Algebra(fixture("disc_abcd")).structure_table());
    CHECK(left.ok());
    CHECK(left.simples == 4);
    CHECK(left.nilpotency_index == 4);  // dfd is the longest nonzero path
}

TEST_CASE("symmetrising forms") {
    for (const auto* name : {"torus_loop", "triangle_mnp", "loop_n", "torus_triangulation", "sphere_triangle"}) {
        CAPTURE(name);
        const auto sc = Algebra(fixture(name)).structure_table();
        const auto f = symmetrizing_form(sc, 16, 0);
        REQUIRE(f.found);
        CHECK(f.verified);
        CHECK(verify_symmetrizing_form(sc, f.form));
    }
    // an arc on the boundary breaks symmetry: the left disc has a zero-socle idempotent
    const auto left = Algebra(fixture("disc_abcd")).structure_table();
    const auto f = symmetrizing_form(left, 32, 0);
    CHECK_FALSE(f.found);
    std::vector<Scalar> zero(left.size(), Scalar::zero(left.ring));
    CHECK_FALSE(verify_symmetrizing_form(left, zero));
}

TEST_CASE("symmetric search is deterministic in the seed") {
    const auto sc = Algebra(fixture("loop_f2")).structure_table();
    const auto a = symmetrizing_form(sc, 8, 42), b = symmetrizing_form(sc, 8, 42);
    CHECK(a.found == b.found);
    CHECK(a.form == b.form);
    CHECK(a.candidates_tried == b.candidates_tried);
}

TEST_CASE("derived comparison uses absolute determinants") {
    InvariantReport a, b;
    a.simples = b.simples = 2;
    a.cartan_determinant = 3;
    b.cartan_determinant = -3;
    a.center_dimension = b.center_dimension = 4;
    a.total_rank = 8;
    b.total_rank = 9;
    const auto c = derived_invariant_report(a, b);
    CHECK(c.consistent());
    b.center_dimension = 5;
    CHECK_FALSE(derived_invariant_report(a, b).consistent());
}
