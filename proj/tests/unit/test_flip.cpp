#include <doctest.h>

#include "instances.hpp"

using namespace ptri;
using namespace ptri::testing;

TEST_CASE("worked example: PM becomes the loop at N") {
    const auto tri = fixture("triangle_mnp");
    const int pm = tri.arc_index("PM");
    const auto c = classify_flip(tri, pm);
    CHECK(c.kind == FlipCase::Kind::F3);
    const auto r = flip(tri, pm);
    CHECK(r.lambda_update.empty());
    auto renamed = r.triangulation;
    renamed.arcs[pm].id = "L";
    CHECK(canonical_signature(renamed) == canonical_signature(fixture("loop_n")));
    CHECK(canonical_signature(inverse_flip(r.triangulation, pm).triangulation) == canonical_signature(tri));
}

TEST_CASE("F1 signs") {
    const auto t = fixture("path_tpq");
    const int u = t.arc_index("u");
    const auto r = flip(t, u);
    CHECK(r.flip_case.kind == FlipCase::Kind::F1);
    CHECK(t.points[r.flip_case.fixed_end_point].id == "T");
    const int T = t.point_index("T"), P = t.point_index("P");
    REQUIRE(r.lambda_update.count(T));
    CHECK(r.lambda_update.at(T).after == -t.points[T].lambda);
    // m_P = 3: (-1)^3
    REQUIRE(r.lambda_update.count(P));
    CHECK(r.lambda_update.at(P).after == -t.points[P].lambda);
    const auto even = flip(with_m(t, "P", 2), u);
    CHECK_FALSE(even.lambda_update.count(P));
    CHECK(validate(r.triangulation).ok());
    CHECK(canonical_signature(inverse_flip(r.triangulation, u).triangulation) == canonical_signature(t));
    CHECK(flip_and_compare(t, u).with_update.consistent());
}

TEST_CASE("F2 negates the enclosed point") {
    const auto t = fixture("loop_f2");
    const int l = t.arc_index("L");
    const auto r = flip(t, l);
    CHECK(r.flip_case.kind == FlipCase::Kind::F2);
    CHECK(t.points[r.flip_case.enclosed].id == "M");
    const int M = t.point_index("M");
    REQUIRE(r.lambda_update.size() == 1);
    CHECK(r.lambda_update.at(M).after == -t.points[M].lambda);
    CHECK(r.triangulation.points[M].lambda == -t.points[M].lambda);
    CHECK(r.same_coefficients.points[M].lambda == t.points[M].lambda);
    CHECK(canonical_signature(inverse_flip(r.triangulation, l).triangulation) == canonical_signature(t));
    const auto cmp = flip_and_compare(t, l);
    CHECK(cmp.with_update.consistent());
    CHECK(cmp.without_update.has_value());
}

TEST_CASE("flip errors") {
    CHECK_THROWS_AS(flip(fixture("torus_loop"), 0), FlipError);
    const auto left = fixture("disc_abcd");
    for (int a = 0; a < 4; ++a) CHECK_THROWS_AS(flip(left, a), FlipError);
    const auto t = fixture("path_tpq");
    const int u = t.arc_index("u");
    const int t_end = t.halfedges[t.arcs[u].ends[0]].point == t.point_index("T") ? 0 : 1;
    CHECK_THROWS_AS(flip(t, u, t_end), FlipError);  // the degree-one end does not move
    CHECK_NOTHROW(flip(t, u, 1 - t_end));
    CHECK_THROWS_AS(flip(t, u, 2), FlipError);
}

TEST_CASE("flip then inverse on random instances") {
    int flipped = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto t = random_closed_instance(seed);
        for (int a = 0; a < static_cast<int>(t.arcs.size()); ++a) {
            FlipResult r;
            try {
                r = flip(t, a);
            } catch (const FlipError&) {
                continue;
            }
            ++flipped;
            CAPTURE(seed);
            CAPTURE(a);
            CHECK(validate(r.triangulation).ok());
            CHECK(canonical_signature(inverse_flip(r.triangulation, a).triangulation) == canonical_signature(t));
            try {
                const auto back = inverse_flip(t, a);
                CHECK(canonical_signature(flip(back.triangulation, a).triangulation) == canonical_signature(t));
            } catch (const FlipError&) {
                // the clockwise move can leave an enclosed loop on its own
            }
        }
    }
    CHECK(flipped > 20);
}

TEST_CASE("derived invariants on the fixtures' flips") {
    for (const auto* name : {"triangle_mnp", "loop_n", "path_tpq", "loop_f2"}) {
        const auto t = fixture(name);
        for (int a = 0; a < static_cast<int>(t.arcs.size()); ++a) {
            CAPTURE(name);
            CAPTURE(a);
            try {
                const auto c = flip_and_compare(t, a);
                CHECK(c.with_update.consistent());
            } catch (const FlipError&) {
            }
        }
    }
}
