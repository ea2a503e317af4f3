// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "instances.hpp"

#include "ptri/invariants.hpp"
#include "ptri/potential.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace ptri;
using namespace ptri::testing;

namespace {

struct Check {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << "failed: ";
            else detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

std::vector<int> word(const Algebra& alg, const std::string& w, int power = 1) {
    const auto one = parse_arrow_word(alg.quiver(), w);
    std::vector<int> out;
    for (int k = 0; k < power; ++k) out.insert(out.end(), one.begin(), one.end());
    return out;
}

Element scaled(const Element& x, const Scalar& c) {
    Element out;
    for (const auto& [i, v] : x)
        if (!(v * c).is_zero()) out.emplace(i, v * c);
    return out;
}

// Nontrivial relations of families 1, 3 and 4 as unordered sides.
std::set<std::set<std::string>> listed_relations(const Algebra& alg, bool* all_hold) {
    std::set<std::set<std::string>> out;
    *all_hold = true;
    for (const auto& r : relation_sanity_check(alg)) {
        *all_hold = *all_hold && r.holds;
        if (r.family == 2) continue;
        const auto eq = r.text.find(" = ");
        std::set<std::string> sides{r.text.substr(0, eq), r.text.substr(eq + 3)};
        if (sides == std::set<std::string>{"0"}) continue;
        out.insert(sides);
    }
    return out;
}

void criterion1(Check& c) {
    const auto left = fixture("disc_abcd");
    for (int mc = 1; mc <= 3; ++mc)
        for (int md = 1; md <= 3; ++md) {
            const auto t = with_m(with_m(left, "C", mc), "D", md);
            const long expected = 5 + 4 * mc + md;
            const long basis = static_cast<long>(Algebra(t).basis().size());
            c.require(basis == expected && rank_formula(t) == expected,
                      "left(" + std::to_string(mc) + "," + std::to_string(md) + ") basis " + std::to_string(basis));
        }
    for (int m = 1; m <= 3; ++m) {
        const auto t = with_m(fixture("torus_loop"), "M", m);
        const long basis = static_cast<long>(Algebra(t).basis().size());
        c.require(basis == 4 * m && rank_formula(t) == 4 * m, "torus m=" + std::to_string(m));
    }
    c.detail << "left rank 5+4m_C+m_D for m_C,m_D in 1..3 (16 at 2,3); torus 4m_M for m_M in 1..3";
}

void criterion2(Check& c) {
    {
        const auto t = with_m(with_m(fixture("disc_abcd"), "C", 2), "D", 3);
        const Algebra alg(t);
        bool hold = false;
        const std::set<std::set<std::string>> expected{{"a^3", "0"}, {"(df)^2", "0"}, {"(fd)^2", "0"}, {"ab", "0"},
                                                      {"cd", "0"},  {"de", "0"},     {"ec", "fdf"}};
        c.require(listed_relations(alg, &hold) == expected, "left relation list differs");
        c.require(hold, "left relation fails");
        // evaluated directly, with a coefficient that is visible
        for (const auto& lc : {Scalar(t.ring, 1L), Scalar(t.ring, -3L), Scalar(t.ring, mpq_class(2, 5))}) {
            auto s = t;
            s.points[s.point_index("C")].lambda = lc;
            const Algebra a(s);
            auto zero = [&](const std::vector<int>& p) { return a.path_element(p).empty(); };
            c.require(zero(word(a, "a", 3)) && zero(word(a, "df", 2)) && zero(word(a, "fd", 2)), "left family 1");
            c.require(zero(word(a, "ab")) && zero(word(a, "cd")) && zero(word(a, "de")), "left bouncing zero");
            c.require(a.path_element(word(a, "ec")) == scaled(a.path_element(word(a, "fdf")), lc),
                      "ec = lambda_C fdf at lambda_C = " + lc.to_string());
            c.require(!a.path_element(word(a, "fdf")).empty(), "fdf nonzero");
        }
    }
    for (int m = 1; m <= 3; ++m) {
        const Algebra alg(with_m(fixture("torus_loop"), "M", m));
        bool hold = false;
        const std::string ab = m == 1 ? "ab" : "(ab)^" + std::to_string(m);
        const std::string ba = m == 1 ? "ba" : "(ba)^" + std::to_string(m);
        const std::set<std::set<std::string>> expected{{ab, ba}, {"aa", "0"}, {"bb", "0"}};
        c.require(listed_relations(alg, &hold) == expected, "torus relation list differs at m=" + std::to_string(m));
        c.require(hold, "torus relation fails");
        c.require(alg.path_element(word(alg, "ab", m)) == alg.path_element(word(alg, "ba", m)) &&
                      !alg.path_element(word(alg, "ab", m)).empty(),
                  "(ab)^m = (ba)^m != 0");
        c.require(alg.path_element(word(alg, "aa")).empty() && alg.path_element(word(alg, "bb")).empty(), "a^2 = b^2 = 0");
    }
    c.detail << "left: a^3=(df)^2=(fd)^2=0, ab=cd=de=0, ec=lambda_C fdf (lambda_C in {1,-3,2/5}); torus: (ab)^m=(ba)^m, "
                "a^2=b^2=0";
}

void criterion3(Check& c) {
    const auto left = with_m(with_m(fixture("disc_abcd"), "C", 2), "D", 3);
    const auto torus = with_m(fixture("torus_loop"), "M", 2);
    for (const auto& [name, t] : {std::pair{"left", left}, std::pair{"torus", torus}}) {
        const auto sc = Algebra(t).structure_table();
        const auto r = check_associativity(sc, 64);
        const auto n = static_cast<std::uint64_t>(sc.size());
        c.require(r.exhaustive && r.triples_checked == n * n * n && r.failures == 0,
                  std::string(name) + " " + r.first_failure);
        c.detail << name << " " << r.triples_checked << " triples, " << r.failures << " failures; ";
    }
}

void criterion4(Check& c) {
    auto run = [&](const std::string& name, const PartialTriangulation& t) {
        const Algebra alg(t);
        const auto o = presentation_oracle(alg);
        const bool ok = o.stabilized() && static_cast<long>(o.dimension) == rank_formula(t);
        c.require(ok, name + ": oracle " + std::to_string(o.dimension) + "/" + std::to_string(o.dimension_next) +
                          " at B=" + std::to_string(o.bound) + ", formula " + std::to_string(rank_formula(t)));
        return o;
    };
    const auto l = run("left", with_m(with_m(fixture("disc_abcd"), "C", 2), "D", 3));
    const auto r = run("torus", with_m(fixture("torus_loop"), "M", 2));
    c.detail << "left " << l.dimension << " at B=" << l.bound << ", torus " << r.dimension << " at B=" << r.bound;
    std::ostringstream sizes;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto t = random_closed_instance(seed);
        const auto o = run("random seed " + std::to_string(seed), t);
        sizes << (seed ? "," : "") << o.dimension;
    }
    c.detail << "; 10 random closed instances, ranks " << sizes.str();
}

void criterion5(Check& c) {
    const auto left = with_m(with_m(fixture("disc_abcd"), "C", 2), "D", 3);
    const auto sc = Algebra(left).structure_table();
    int subsets = 0;
    for (unsigned mask = 1; mask < 16; ++mask) {
        std::set<int> tau;
        for (int a = 0; a < 4; ++a)
            if (mask >> a & 1) tau.insert(a);
        const auto sub = restrict_to(left, tau);
        const auto trunc = truncate_idempotent(sc, tau);
        c.require(static_cast<long>(trunc.size()) == rank_formula(sub) &&
                      Algebra(sub).basis().size() == trunc.size(),
                  "subset mask " + std::to_string(mask));
        ++subsets;
    }
    c.detail << subsets << " subsets of the left fixture";
}

void criterion6(Check& c) {
    c.require(compare_with_delta(fixture("torus_loop")).equal, "torus fixture");
    std::ostringstream sizes;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = random_brauer_graph(1000 + seed, 6, 3, RingSpec::rationals());
        const auto t = embed_brauer_graph(g);
        long expected = 0;
        for (std::size_t v = 0; v < g.ribbon.points.size(); ++v) {
            const long d = g.ribbon.degree(static_cast<int>(v));
            expected += g.ribbon.points[v].multiplicity * d * d;
        }
        const auto cmp = compare_with_delta(t);
        c.require(is_brauer_case(t).holds && cmp.equal && static_cast<long>(cmp.size_a) == expected,
                  "random graph seed " + std::to_string(1000 + seed));
        sizes << (seed ? "," : "") << g.ribbon.arcs.size() << "e/" << cmp.size_a;
    }
    c.detail << "torus fixture and 10 random embedded graphs (edges/rank " << sizes.str() << ")";
}

void criterion7(Check& c) {
    for (int m = 1; m <= 2; ++m) {
        const Algebra alg(with_all_m(fixture("torus_triangulation"), m));
        const auto r = jacobian_consistency_check(alg);
        c.require(r.derivatives_ok(), "derivative nonzero at m=" + std::to_string(m));
        c.require(r.ok(), "jacobian dimension at m=" + std::to_string(m));
        c.detail << "m=" << m << ": " << r.derivatives_vanish.size() << " derivatives vanish, dim "
                 << (r.oracle ? r.oracle->dimension : 0) << " = rank " << r.rank << "; ";
    }
}

void criterion8(Check& c) {
    for (const auto* name : {"torus_loop", "triangle_mnp"}) {
        const auto sc = Algebra(fixture(name)).structure_table();
        const auto f = symmetrizing_form(sc, 16, 0);
        c.require(f.found && f.verified && verify_symmetrizing_form(sc, f.form), name);
        c.detail << name << " witness after " << f.candidates_tried << " candidate(s); ";
    }
}

PartialTriangulation rename_arc(PartialTriangulation t, const std::string& from, const std::string& to) {
    t.arcs[t.arc_index(from)].id = to;
    return t;
}

void criterion9(Check& c) {
    const auto tri = fixture("triangle_mnp");
    const int pm = tri.arc_index("PM");
    const auto cmp = flip_and_compare(tri, pm);
    const auto& flipped = cmp.result.triangulation;
    c.require(canonical_signature(rename_arc(flipped, "PM", "L")) == canonical_signature(fixture("loop_n")),
              "flip of PM is not the loop fixture");
    const auto& w = cmp.with_update;
    c.require(w.consistent(), "derived invariants differ");
    c.require(w.first.simples == 3 && w.second.simples == 3, "simples");
    c.require(cmp.rank_before == 36 && cmp.rank_after == 54, "ranks");
    const auto back = inverse_flip(flipped, pm).triangulation;
    c.require(canonical_signature(back) == canonical_signature(tri), "double flip");
    c.detail << to_string(cmp.result.flip_case.kind) << " flip; simples " << w.first.simples << "=" << w.second.simples
             << ", |det C| " << abs(w.first.cartan_determinant) << "=" << abs(w.second.cartan_determinant)
             << ", center " << w.first.center_dimension << "=" << w.second.center_dimension << ", ranks "
             << cmp.rank_before << "!=" << cmp.rank_after << " (excluded); flip back restores";
}

void criterion10(Check& c) {
    const std::pair<const char*, const char*> cases[] = {{"invalid/sphere_four_points", "sphere_min_points"},
                                                         {"invalid/disc_two_points", "disc_min_points"},
                                                         {"invalid/small_loop", "small_enclosed_loop"}};
    for (const auto& [file, code] : cases) {
        const auto r = validate(fixture(file));
        c.require(!r.ok() && r.has(code), std::string(file) + " lacks " + code);
        c.detail << code << "; ";
    }
    c.require(validate(fixture("disc_abcd")).ok() && validate(fixture("torus_loop")).ok(), "fixtures validate");
    c.detail << "both fixtures valid";
}

}  // namespace

int main() {
    const std::vector<std::function<void(Check&)>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                             criterion5, criterion6, criterion7, criterion8,
                                                             criterion9, criterion10};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i](c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::string detail = c.detail.str();
        while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
        std::cout << "criterion " << i + 1 << ": " << (c.pass ? "PASS" : "FAIL") << "  [" << ms << " ms]  " << detail
                  << "\n";
        failed += !c.pass;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria pass")) << "\n";
    return failed ? 1 : 0;
}
