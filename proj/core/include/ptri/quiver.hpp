#pragma once

#include "ptri/surface.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ptri {

/// Arrow winding counter-clockwise at `pivot` from half-edge `from` to its
/// successor `to`.
struct Arrow {
    std::string id;
    int from = -1;
    int to = -1;
    int pivot = -1;
    int source_arc = -1;
    int target_arc = -1;
};

/// Consecutive arrows around pivot(start), `length` of them.
struct WindingSpec {
    int start = -1;
    int length = 0;
    friend bool operator==(const WindingSpec&, const WindingSpec&) = default;
};

/// Local rotation data shared by the quiver and the algebra engine.
class Rotation {
public:
    explicit Rotation(const PartialTriangulation& t);

    /// Counter-clockwise successor at the same point, -1 past the end of a
    /// boundary point's linear order.
    int next(int h) const { return next_[h]; }
    /// Position of h in its point's order (0-based).
    int position(int h) const { return position_[h]; }
    int point(int h) const { return point_[h]; }
    /// k-th successor, -1 when it does not exist.
    int advance(int h, int k) const;

private:
    const PartialTriangulation* t_;
    std::vector<int> next_, position_, point_;
};

struct Quiver {
    std::vector<int> vertices;  // arc indices
    std::vector<Arrow> arrows;
    std::vector<int> arrow_from;  // half-edge -> arrow leaving it, or -1

    int arrow_at(int h) const { return arrow_from[h]; }
    int find(std::string_view id) const;
};

/// Arrows are numbered by the index of their starting half-edge and named
/// a, b, c, ... (a26, a27, ... beyond the alphabet).
Quiver build_quiver(const PartialTriangulation& t);

/// Winding once around the point of h, or nothing when that point is on the
/// boundary.
std::optional<WindingSpec> omega(const PartialTriangulation& t, int h);

/// The substitution attached to a bouncing pair that is two consecutive
/// corners of a small triangle. An absent replacement means the corner opposite
/// the middle arc lies on the boundary, so the product vanishes.
struct TriangleRelation {
    int in_arrow = -1;
    int out_arrow = -1;
    int corner = -1;
    std::optional<WindingSpec> replacement;
    Scalar coefficient;
};

struct BouncingPair {
    int in_arrow = -1;
    int out_arrow = -1;
    std::optional<TriangleRelation> triangle;  // empty: the product is zero
};

/// All composable arrow pairs that are not winding continuations, classified
/// against the given small triangles.
std::vector<BouncingPair> bouncing_pairs(const PartialTriangulation& t, const Quiver& q,
                                         const std::vector<SmallTriangle>& triangles);
std::vector<BouncingPair> bouncing_pairs(const PartialTriangulation& t);

/// Arrow word rendering: concatenated when every id is one character,
/// dot-separated otherwise.
std::string arrow_word(const Quiver& q, const std::vector<int>& arrows);

/// Parses a word of arrow ids ("fdf", "f.d.f", "a26.a27"). Throws InputError.
std::vector<int> parse_arrow_word(const Quiver& q, std::string_view word);

}  // namespace ptri
