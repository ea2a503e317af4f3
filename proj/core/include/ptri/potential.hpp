#pragma once

#include "ptri/algebra.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ptri {

/// Formal linear combination of non-empty arrow paths.
using PathSum = std::map<std::vector<int>, Scalar>;

struct PotentialTerm {
    Scalar coeff;
    std::vector<int> cycle;  // rotated to its least form
};

struct Potential {
    RingSpec ring = RingSpec::rationals();
    std::vector<PotentialTerm> terms;
    std::string to_string(const Quiver& q) const;
};

/// Least rotation of a cycle (lexicographic on arrow indices).
std::vector<int> canonical_rotation(const std::vector<int>& cycle);

/// Adds c * cycle, merging with an equal rotation already present.
void add_term(Potential& w, const Scalar& c, const std::vector<int>& cycle);

/// Every face is an empty disc bounded by three sides and every boundary
/// component carries a marked point.
bool is_triangulation(const PartialTriangulation& t, std::string* why = nullptr);

/// Sum of the small-triangle cycles minus (lambda_M / m_M) w^{m_M} at every
/// interior point, the winding starting at the incident arc of least index.
/// Throws InputError when t is not a triangulation or some m_M vanishes in k.
Potential build_potential(const PartialTriangulation& t, const Quiver& q);

PathSum cyclic_derivative(const Potential& w, int arrow);

/// Bouncing pairs, triangle substitutions, winding equalities and vanishing
/// past a full winding, as path sums.
std::vector<PathSum> presentation_relations(const Algebra& alg);

struct PathIdealQuotient {
    int bound = 0;
    std::size_t dimension = 0;           // at `bound`
    std::size_t dimension_next = 0;      // at bound + 1
    std::size_t paths = 0;               // monomial-free paths up to bound + 1
    bool reduced_bound = false;          // fell back from the default bound
    bool stabilized() const { return dimension == dimension_next; }
};

/// Dimension of kQ / (I + paths longer than B), spanning the ideal by
/// p r q. Paths containing a single-term relation are discarded up front.
/// Throws InputError when more than `path_budget` paths would be needed.
std::size_t quotient_dimension(const Quiver& q, RingSpec ring, const std::vector<PathSum>& relations, int bound,
                               std::size_t path_budget = 500'000, std::size_t* path_count = nullptr);

PathIdealQuotient quotient_dimension_oracle(const Quiver& q, RingSpec ring, const std::vector<PathSum>& relations,
                                            int bound, std::size_t path_budget = 500'000);

/// 2 max(m d) + 2 over the points.
int default_oracle_bound(const PartialTriangulation& t);

/// Oracle on the presentation relations of alg, at the default bound, or at
/// max(m d) + 2 when the default would exceed the path budget.
PathIdealQuotient presentation_oracle(const Algebra& alg, std::size_t path_budget = 500'000);

struct JacobianReport {
    Potential potential;
    std::vector<std::pair<int, bool>> derivatives_vanish;  // arrow, holds
    std::optional<PathIdealQuotient> oracle;
    long rank = 0;
    bool derivatives_ok() const;
    bool ok() const { return derivatives_ok() && oracle && oracle->stabilized() && oracle->dimension == static_cast<std::size_t>(rank); }
};

/// Checks that each cyclic derivative of W is zero in the algebra and that the
/// Jacobian quotient has the expected dimension. The default bound is
/// max(m d) + 2, enough because paths longer than any full winding vanish.
JacobianReport jacobian_consistency_check(const Algebra& alg, std::optional<int> bound = std::nullopt,
                                          bool run_oracle = true);

}  // namespace ptri
