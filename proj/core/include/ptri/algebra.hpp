#pragma once

#include "ptri/quiver.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ptri {

struct BasisElement {
    enum class Kind { idempotent, winding, socle };
    Kind kind = Kind::idempotent;
    int arc = -1;              // idempotent / socle
    WindingSpec winding{};     // winding only
    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Zero, or a nonzero multiple of one basis element.
struct ScaledBasis {
    int index = -1;  // -1: zero
    Scalar coeff;
    bool is_zero() const { return index < 0; }
    static ScaledBasis zero(RingSpec r) { return {-1, Scalar::zero(r)}; }
    friend bool operator==(const ScaledBasis& a, const ScaledBasis& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
        return a.index == b.index && a.coeff == b.coeff;
    }
};

/// Sparse linear combination of basis elements, no zero coefficients.
using Element = std::map<int, Scalar>;

struct StructureConstants {
    RingSpec ring = RingSpec::rationals();
    std::vector<BasisElement> basis;
    std::vector<std::string> names;
    std::vector<int> source, target;  // arc of each basis element
    std::vector<ScaledBasis> table;   // row-major basis.size()^2

    std::size_t size() const { return basis.size(); }
    const ScaledBasis& at(std::size_t i, std::size_t j) const { return table[i * basis.size() + j]; }
    Element multiply(const Element& x, const Element& y) const;
    /// Sum of the idempotents.
    Element unit() const;
};

struct AssociativityReport {
    std::uint64_t triples_checked = 0;
    std::uint64_t failures = 0;
    bool exhaustive = false;
    std::string first_failure;
};

/// Exhaustive when size <= exhaustive_bound, otherwise `samples` random triples.
AssociativityReport check_associativity(const StructureConstants& sc, std::size_t exhaustive_bound = 64,
                                        std::size_t samples = 20000, std::uint64_t seed = 0);

/// Rank from the degree statistics: boundary d(d-1)/2, interior m d^2, plus
/// the number of arcs with both ends on the boundary.
long rank_formula(const PartialTriangulation& t);

/// The algebra of a partial triangulation presented by its quiver, the
/// classification of bouncing pairs and the winding relations. Products of basis
/// elements are computed by rewriting concatenated paths to normal form.
class Algebra {
public:
    /// Uses the small triangles of t.
    explicit Algebra(PartialTriangulation t);
    /// Uses the given triangle relations (empty for Brauer graph algebras).
    Algebra(PartialTriangulation t, const std::vector<SmallTriangle>& triangles);

    const PartialTriangulation& triangulation() const { return t_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<BouncingPair>& bouncing() const { return bouncing_; }
    const RingSpec& ring() const { return t_.ring; }

    const std::vector<BasisElement>& basis() const { return basis_; }
    int index_of(const BasisElement& b) const;
    int idempotent(int arc) const { return idempotent_index_[arc]; }
    int source(int i) const { return source_[i]; }
    int target(int i) const { return target_[i]; }
    std::string name(int i) const;

    ScaledBasis mul_basis(int i, int j) const;
    /// Normal form of an arbitrary arrow path (non-empty, composable).
    ScaledBasis reduce_path(const std::vector<int>& arrows) const;
    /// Winding of given length as a path; used by relation checks.
    std::vector<int> winding_path(const WindingSpec& w) const;
    Element mul(const Element& x, const Element& y) const;
    Element path_element(const std::vector<int>& arrows) const;

    StructureConstants structure_table() const;

    /// Full winding around an interior point from h, as a path.
    int full_length(int h) const;

private:
    struct Seg {
        int start;
        int length;
    };
    ScaledBasis reduce(Scalar coeff, std::vector<Seg> segs, int fallback_arc) const;
    int end_dart(const Seg& s) const;
    void enumerate();

    PartialTriangulation t_;
    Rotation rot_;
    Quiver quiver_;
    std::vector<BouncingPair> bouncing_;
    std::map<std::pair<int, int>, int> bounce_index_;
    std::vector<BasisElement> basis_;
    std::map<std::pair<int, int>, int> winding_index_;  // (start, length) -> basis index
    std::vector<int> idempotent_index_, socle_index_;
    std::vector<int> source_, target_;
    long fuel_base_ = 0;
    long radical_dim_ = 0;
};

/// e_tau A e_tau as its own table: basis elements with source and target in tau.
StructureConstants truncate_idempotent(const StructureConstants& sc, const std::set<int>& arcs);

struct RelationCheck {
    int family = 0;  // 1..4 as in the presentation
    std::string text;
    bool holds = false;
};

/// Evaluates every generating relation on the structure constants.
std::vector<RelationCheck> relation_sanity_check(const Algebra& alg);

}  // namespace ptri
