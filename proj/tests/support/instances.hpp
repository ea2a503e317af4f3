#pragma once

#include "ptri/brauer.hpp"
#include "ptri/flip.hpp"
#include "ptri/format.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#ifndef PTRI_FIXTURE_DIR
#error "PTRI_FIXTURE_DIR must be defined"
#endif

namespace ptri::testing {

inline std::string fixture_path(const std::string& name) { return std::string(PTRI_FIXTURE_DIR) + "/" + name; }

inline PartialTriangulation fixture(const std::string& name, RingSpec ring = RingSpec::rationals()) {
    return load_ptri(fixture_path(name + ".ptri"), ring);
}

inline PartialTriangulation with_m(PartialTriangulation t, const std::string& point, int m) {
    t.points[t.point_index(point)].multiplicity = m;
    return t;
}

inline PartialTriangulation with_all_m(PartialTriangulation t, int m) {
    for (auto& p : t.points) p.multiplicity = m;
    return t;
}

inline long max_winding(const PartialTriangulation& t) {
    long w = 0;
    for (std::size_t p = 0; p < t.points.size(); ++p)
        if (t.interior(static_cast<int>(p))) w = std::max<long>(w, t.points[p].multiplicity * t.degree(static_cast<int>(p)));
    return w;
}

/// Seeded boundary-free instance with at most 5 arcs and m <= 3: a random
/// sub-triangulation of a closed base, occasionally flipped. Windings are kept
/// to at most 6 so the path oracle stays cheap.
inline PartialTriangulation random_closed_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const RingSpec q = RingSpec::rationals();
    for (;;) {
        PartialTriangulation base;
        switch (uniform(0, 2)) {
            case 0: base = fixture("torus_triangulation"); break;
            case 1: base = fixture("sphere_triangle"); break;
            default: base = embed_brauer_graph(random_brauer_graph(rng(), 5, 3, q)); break;
        }
        std::set<int> keep;
        for (int a = 0; a < static_cast<int>(base.arcs.size()); ++a)
            if (uniform(0, 3) != 0) keep.insert(a);
        if (keep.empty()) keep.insert(uniform(0, static_cast<int>(base.arcs.size()) - 1));
        auto t = restrict_to(base, keep);
        static const long lambdas[] = {1, -1, 2, 3, -2};
        for (auto& p : t.points) {
            if (p.multiplicity != 3 || uniform(0, 1)) p.multiplicity = uniform(1, 3);
            p.lambda = Scalar(q, lambdas[uniform(0, 4)]);
        }
        if (uniform(0, 2) == 0) {
            try {
                t = flip(t, uniform(0, static_cast<int>(t.arcs.size()) - 1)).triangulation;
            } catch (const InputError&) {
            }
        }
        if (t.arcs.size() > 5 || max_winding(t) > 6 || !validate(t).ok()) continue;
        return t;
    }
}

}  // namespace ptri::testing
