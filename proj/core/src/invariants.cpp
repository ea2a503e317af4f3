#include "ptri/invariants.hpp"

#include <random>
#include <set>

namespace ptri {

long CartanMatrix::total() const {
    long s = 0;
    for (const auto& r : entries)
        for (long v : r) s += v;
    return s;
}

mpz_class CartanMatrix::determinant() const { return integer_determinant(entries); }

CartanMatrix cartan_matrix(const StructureConstants& sc, std::size_t arc_count) {
    CartanMatrix c;
    c.entries.assign(arc_count, std::vector<long>(arc_count, 0));
    for (std::size_t i = 0; i < sc.size(); ++i) ++c.entries[sc.source[i]][sc.target[i]];
    return c;
}

namespace {

bool is_idempotent(const StructureConstants& sc, std::size_t i) {
    return sc.basis[i].kind == BasisElement::Kind::idempotent;
}

void accumulate(SparseRowReducer::Row& row, const ScaledBasis& p, const Scalar& sign) {
    if (p.is_zero()) return;
    auto [it, fresh] = row.try_emplace(static_cast<std::size_t>(p.index), Scalar::zero(sign.ring()));
    it->second += sign * p.coeff;
}

Element to_element(const std::vector<Scalar>& v) {
    Element e;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) e.emplace(static_cast<int>(i), v[i]);
    return e;
}

}  // namespace

CenterResult center(const StructureConstants& sc) {
    const std::size_t n = sc.size();
    const RingSpec ring = sc.ring;
    // unknown x_i; for each basis b and output k: sum_i x_i [(b_i b)_k - (b b_i)_k] = 0
    std::vector<SparseRowReducer::Row> rows;
    for (std::size_t b = 0; b < n; ++b) {
        std::map<std::size_t, SparseRowReducer::Row> by_output;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& l = sc.at(i, b);
            const auto& r = sc.at(b, i);
            if (!l.is_zero()) {
                auto [it, f] = by_output[l.index].try_emplace(i, Scalar::zero(ring));
                it->second += l.coeff;
            }
            if (!r.is_zero()) {
                auto [it, f] = by_output[r.index].try_emplace(i, Scalar::zero(ring));
                it->second -= r.coeff;
            }
        }
        for (auto& [k, row] : by_output) rows.push_back(std::move(row));
    }
    CenterResult out;
    for (auto& v : sparse_null_space(ring, rows, n)) out.basis.push_back(to_element(v));
    out.verified = true;
    for (const auto& z : out.basis)
        for (std::size_t b = 0; b < n && out.verified; ++b) {
            const Element eb{{static_cast<int>(b), Scalar::one(ring)}};
            if (sc.multiply(z, eb) != sc.multiply(eb, z)) out.verified = false;
        }
    return out;
}

RadicalResult radical_and_simples(const StructureConstants& sc) {
    const std::size_t n = sc.size();
    RadicalResult out;
    std::set<int> rad;
    for (std::size_t i = 0; i < n; ++i)
        if (is_idempotent(sc, i))
            ++out.simples;
        else
            rad.insert(static_cast<int>(i));
    out.radical.assign(rad.begin(), rad.end());

    out.is_ideal = true;
    for (int r : rad)
        for (std::size_t i = 0; i < n && out.is_ideal; ++i) {
            const auto& a = sc.at(i, r);
            const auto& b = sc.at(r, i);
            if ((!a.is_zero() && !rad.count(a.index)) || (!b.is_zero() && !rad.count(b.index))) out.is_ideal = false;
        }

    // products of basis elements are scaled basis elements, so the support of
    // rad^k is an upper bound for a spanning set
    std::set<int> power = rad;
    out.nilpotency_index = 1;
    while (!power.empty()) {
        std::set<int> next;
        for (int p : power)
            for (int r : rad) {
                const auto& x = sc.at(p, r);
                if (!x.is_zero()) next.insert(x.index);
            }
        ++out.nilpotency_index;
        if (next == power || out.nilpotency_index > static_cast<int>(n) + 2) {
            out.nilpotency_index = 0;
            break;
        }
        power = std::move(next);
    }
    out.nilpotent = power.empty();
    if (!out.nilpotent) out.nilpotency_index = 0;

    out.orthogonal_idempotents = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_idempotent(sc, i)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_idempotent(sc, j)) continue;
            const auto& p = sc.at(i, j);
            const bool want = i == j;
            if (want ? (p.is_zero() || p.index != static_cast<int>(i) || !p.coeff.is_one()) : !p.is_zero())
                out.orthogonal_idempotents = false;
        }
    }
    return out;
}

namespace {

Scalar form_on(const std::vector<Scalar>& form, const ScaledBasis& p, RingSpec ring) {
    return p.is_zero() ? Scalar::zero(ring) : p.coeff * form[p.index];
}

Scalar gram_determinant(const StructureConstants& sc, const std::vector<Scalar>& form) {
    const std::size_t n = sc.size();
    Matrix g(sc.ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = form_on(form, sc.at(i, j), sc.ring);
    return determinant(std::move(g));
}

}  // namespace

bool verify_symmetrizing_form(const StructureConstants& sc, const std::vector<Scalar>& form) {
    const std::size_t n = sc.size();
    if (form.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (form_on(form, sc.at(i, j), sc.ring) != form_on(form, sc.at(j, i), sc.ring)) return false;
    return !gram_determinant(sc, form).is_zero();
}

SymmetrizingForm symmetrizing_form(const StructureConstants& sc, std::size_t samples, std::uint64_t seed) {
    const std::size_t n = sc.size();
    const RingSpec ring = sc.ring;
    SymmetrizingForm out;
    std::vector<SparseRowReducer::Row> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            SparseRowReducer::Row row;
            const Scalar one = Scalar::one(ring);
            accumulate(row, sc.at(i, j), one);
            accumulate(row, sc.at(j, i), -one);
            for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
            if (!row.empty()) rows.push_back(std::move(row));
        }
    const auto space = sparse_null_space(ring, rows, n);
    out.trace_space_dim = space.size();
    if (n == 0) {
        out.found = out.verified = true;
        return out;
    }

    std::vector<Scalar> socle_dual(n, Scalar::zero(ring));
    for (std::size_t i = 0; i < n; ++i)
        if (sc.basis[i].kind == BasisElement::Kind::socle) socle_dual[i] = Scalar::one(ring);

    auto accept = [&](std::vector<Scalar> f, bool socle) {
        ++out.candidates_tried;
        if (!verify_symmetrizing_form(sc, f)) return false;
        out.found = out.verified = true;
        out.form = std::move(f);
        out.socle_candidate = socle;
        return true;
    };
    if (accept(socle_dual, true)) return out;
    if (space.empty()) return out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-16, 16);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Scalar> f(n, Scalar::zero(ring));
        for (const auto& v : space) {
            const Scalar c(ring, coeff(rng));
            for (std::size_t i = 0; i < n; ++i) f[i] += c * v[i];
        }
        if (accept(std::move(f), false)) return out;
    }
    return out;
}

InvariantReport invariant_report(const StructureConstants& sc, std::size_t arc_count) {
    InvariantReport r;
    r.simples = radical_and_simples(sc).simples;
    r.cartan_determinant = cartan_matrix(sc, arc_count).determinant();
    r.center_dimension = center(sc).dimension();
    r.total_rank = sc.size();
    return r;
}

DerivedComparison derived_invariant_report(const InvariantReport& a, const InvariantReport& b) {
    DerivedComparison c{a, b};
    c.simples_agree = a.simples == b.simples;
    c.cartan_agree = abs(a.cartan_determinant) == abs(b.cartan_determinant);
    c.center_agree = a.center_dimension == b.center_dimension;
    return c;
}

}  // namespace ptri
