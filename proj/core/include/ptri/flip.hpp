#pragma once

#include "ptri/invariants.hpp"
#include "ptri/surface.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace ptri {

/// Flip not applicable, or its result fails validation.
class FlipError : public InputError {
public:
    using InputError::InputError;
};

/// One endpoint of u moving along the neighbouring arc `along` to its far end.
struct SlideEnd {
    int halfedge = -1;  // u's half-edge at the pivot
    int pivot = -1;
    int along = -1;     // arc v
    int anchor = -1;    // v's half-edge at the far end; the new half-edge goes next to it
};

struct FlipCase {
    enum class Kind { F1, F2, F3 };
    Kind kind = Kind::F3;
    int arc = -1;
    /// Per end of u (index as in Arc::ends); empty when that end stays put.
    std::array<std::optional<SlideEnd>, 2> slides;
    int fixed_end_point = -1;  // F1: the endpoint that does not move
    int enclosed = -1;         // F2: the point inside the loop
    bool counter_clockwise = true;
};

std::string to_string(FlipCase::Kind k);

/// Both endpoints of u slide counter-clockwise to the far end of the next
/// arc. An endpoint of degree one stays (F1). A loop whose two ends are
/// adjacent and cut off a once-punctured disc is F2, everything else F3.
/// `end`, when given, must be a sliding endpoint. Throws FlipError.
FlipCase classify_flip(const PartialTriangulation& t, int arc, std::optional<int> end = std::nullopt);

struct LambdaChange {
    Scalar before, after;
};

struct FlipResult {
    FlipCase flip_case;
    PartialTriangulation triangulation;          // with the updated coefficients
    PartialTriangulation same_coefficients;      // same surgery, coefficients untouched
    std::map<int, LambdaChange> lambda_update;   // changed points only
};

FlipResult flip(const PartialTriangulation& t, int arc, std::optional<int> end = std::nullopt);

/// The clockwise move undoing flip: flip(inverse_flip(t, u).triangulation, u)
/// reproduces t, coefficients included.
FlipResult inverse_flip(const PartialTriangulation& t, int arc, std::optional<int> end = std::nullopt);

struct FlipComparison {
    FlipResult result;
    DerivedComparison with_update;
    /// Present when the update changed some coefficient.
    std::optional<DerivedComparison> without_update;
    std::size_t rank_before = 0, rank_after = 0;
};

FlipComparison flip_and_compare(const PartialTriangulation& t, int arc, std::optional<int> end = std::nullopt);

}  // namespace ptri
