#pragma once

#include "ptri/algebra.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ptri {

/// Ribbon graph with multiplicities and coefficients at its vertices. Stored
/// as a triangulation with interior points only, no faces and no surface data.
struct BrauerGraph {
    PartialTriangulation ribbon;
};

/// Reduced dialect of the triangulation format: point / arc / rotation lines,
/// interior points only, the surface line and faces are not allowed.
BrauerGraph parse_brauer(std::string_view text, RingSpec ring = RingSpec::rationals());
BrauerGraph load_brauer(const std::string& path, RingSpec ring = RingSpec::rationals());

struct BrauerCase {
    bool holds = false;
    std::vector<std::string> reasons;  // why not
};

/// No small triangle and no arc touching the boundary.
BrauerCase is_brauer_case(const PartialTriangulation& t);

/// The Brauer graph algebra: the same engine with no triangle relations.
StructureConstants brauer_algebra_direct(const BrauerGraph& g);

struct TableComparison {
    bool equal = false;
    std::size_t size_a = 0, size_b = 0;
    std::vector<std::string> mismatches;  // first few, entry-wise
};

TableComparison compare_tables(const StructureConstants& a, const StructureConstants& b, std::size_t max_report = 10);

/// Compares the algebra of t with the Brauer graph algebra of its ribbon
/// graph. Throws InputError when t is not a Brauer case.
TableComparison compare_with_delta(const PartialTriangulation& t);

/// Closed surface of the ribbon graph with an isolated point (m = 3, lambda
/// = 1) in every face, padded to five points on the sphere. Throws InputError
/// for disconnected graphs and odd Euler characteristic.
PartialTriangulation embed_brauer_graph(const BrauerGraph& g);

/// Face walks of the ribbon graph, all corners cyclic.
std::vector<std::vector<int>> ribbon_faces(const PartialTriangulation& ribbon);

/// Connected ribbon graph with at most max_edges edges, loops allowed.
BrauerGraph random_brauer_graph(std::uint64_t seed, int max_edges, int max_multiplicity, RingSpec ring);

}  // namespace ptri
