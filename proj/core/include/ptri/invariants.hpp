#pragma once

#include "ptri/algebra.hpp"
#include "ptri/linear.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ptri {

/// entry (u, v): number of basis elements from arc u to arc v.
struct CartanMatrix {
    std::vector<std::vector<long>> entries;
    long total() const;
    mpz_class determinant() const;
};

CartanMatrix cartan_matrix(const StructureConstants& sc, std::size_t arc_count);

struct CenterResult {
    std::vector<Element> basis;
    std::size_t dimension() const { return basis.size(); }
    bool verified = false;  // every element re-checked against all basis elements
};

CenterResult center(const StructureConstants& sc);

struct RadicalResult {
    std::vector<int> radical;  // basis indices
    std::size_t simples = 0;
    bool is_ideal = false;
    bool nilpotent = false;
    int nilpotency_index = 0;  // least k with rad^k = 0
    bool orthogonal_idempotents = false;
    bool ok() const { return is_ideal && nilpotent && orthogonal_idempotents; }
};

RadicalResult radical_and_simples(const StructureConstants& sc);

struct SymmetrizingForm {
    bool found = false;
    std::vector<Scalar> form;      // values on the basis
    std::size_t trace_space_dim = 0;
    std::size_t candidates_tried = 0;
    bool socle_candidate = false;  // the witness is the socle-dual candidate
    bool verified = false;         // symmetric and Gram determinant nonzero
};

/// Searches the trace forms, the socle-dual candidate first, then `samples`
/// random combinations drawn from `seed`. A miss is evidence, not proof.
SymmetrizingForm symmetrizing_form(const StructureConstants& sc, std::size_t samples, std::uint64_t seed = 0);

/// Checks t(xy) = t(yx) on all basis pairs and det Gram != 0.
bool verify_symmetrizing_form(const StructureConstants& sc, const std::vector<Scalar>& form);

struct InvariantReport {
    std::size_t simples = 0;
    mpz_class cartan_determinant;
    std::size_t center_dimension = 0;
    std::size_t total_rank = 0;
    std::optional<bool> symmetric;  // empty when not computed
};

InvariantReport invariant_report(const StructureConstants& sc, std::size_t arc_count);

struct DerivedComparison {
    InvariantReport first, second;
    bool simples_agree = false;
    bool cartan_agree = false;  // absolute values
    bool center_agree = false;
    bool consistent() const { return simples_agree && cartan_agree && center_agree; }
};

DerivedComparison derived_invariant_report(const InvariantReport& a, const InvariantReport& b);

}  // namespace ptri
