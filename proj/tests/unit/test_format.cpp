#include <doctest.h>

#include "instances.hpp"

#include <filesystem>

using namespace ptri;
using namespace ptri::testing;

TEST_CASE("round trip on every fixture") {
    for (const auto& entry : std::filesystem::recursive_directory_iterator(PTRI_FIXTURE_DIR)) {
        if (entry.path().extension() != ".ptri") continue;
        CAPTURE(entry.path().string());
        const auto t = load_ptri(entry.path().string());
        const auto text = serialize_ptri(t);
        const auto back = parse_ptri(text);
        CHECK(serialize_ptri(back) == text);
        if (validate(t).ok()) CHECK(canonical_signature(back) == canonical_signature(t));
    }
}

TEST_CASE("fixture contents") {
    const auto left = fixture("disc_abcd");
    CHECK(left.arcs.size() == 4);
    CHECK(left.points.size() == 4);
    CHECK(left.boundary_count == 1);
    CHECK(left.points[left.point_index("C")].multiplicity == 2);
    CHECK(left.points[left.point_index("D")].multiplicity == 3);
    const auto torus = fixture("torus_loop");
    CHECK(torus.arcs.size() == 1);
    CHECK(torus.genus == 1);
}

TEST_CASE("syntax errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_ptri(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("surface genus=0 boundaries=1\npoint A boundary=0:x\n") == 2);
    CHECK(line_of("surface genus=0 boundaries=1\n\n# c\nbogus line\n") == 4);
    CHECK(line_of("surface genus=0 boundaries=0\npoint A interior m=0\n") == 2);
    CHECK(line_of("surface genus=0 boundaries=0\npoint A interior lambda=0\n") == 2);
    CHECK(line_of("surface genus=0 boundaries=0\npoint A interior\npoint A interior\n") == 3);
    CHECK(line_of("surface genus=0 boundaries=0\npoint A interior\narc u h1@A h2@B\n") == 3);
}

TEST_CASE("map errors") {
    const std::string head = "surface genus=0 boundaries=0\npoint A interior\npoint B interior\narc u h1@A h2@B\n";
    CHECK_THROWS_AS(parse_ptri(head + "rotation A: h1\n"), InputError);               // h2 never placed
    CHECK_THROWS_AS(parse_ptri(head + "rotation A: h1 h2\nrotation B: h2\n"), InputError);  // wrong point
    CHECK_NOTHROW(parse_ptri(head + "rotation A: h1\nrotation B: h2\n"));
    CHECK_THROWS_AS(load_ptri(fixture_path("does_not_exist.ptri")), InputError);
}

TEST_CASE("change of ring maps coefficients") {
    auto t = fixture("loop_f2");
    const auto f5 = change_ring(t, RingSpec::prime_field(5));
    CHECK(f5.points[f5.point_index("M")].lambda.to_string() == "2");
    auto s = t;
    s.points[s.point_index("M")].lambda = Scalar::parse(t.ring, "1/2");
    CHECK(change_ring(s, RingSpec::prime_field(5)).points[s.point_index("M")].lambda.to_string() == "3");
    s.points[s.point_index("M")].lambda = Scalar(t.ring, 5L);
    CHECK_THROWS_AS(change_ring(s, RingSpec::prime_field(5)), InputError);
}
