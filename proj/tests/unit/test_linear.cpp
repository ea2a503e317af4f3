#include <doctest.h>

#include "ptri/linear.hpp"

#include <numeric>
#include <random>

using namespace ptri;

namespace {

Matrix from_ints(const std::vector<std::vector<long>>& m) {
    const auto q = RingSpec::rationals();
    Matrix a(q, m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) a(i, j) = Scalar(q, m[i][j]);
    return a;
}

// Leibniz expansion, independent of elimination
long leibniz(const std::vector<std::vector<long>>& m) {
    std::vector<int> p(m.size());
    std::iota(p.begin(), p.end(), 0);
    long total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
        long prod = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < p.size(); ++i) prod *= m[i][p[i]];
        total += prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

}  // namespace

TEST_CASE("solve and kernel") {
    const auto q = RingSpec::rationals();
    const auto a = from_ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    const std::vector<Scalar> b{Scalar(q, 6L), Scalar(q, 12L), Scalar(q, 2L)};
    const auto s = solve_linear(a, b);
    REQUIRE(s.particular);
    CHECK(a.apply(*s.particular) == b);
    CHECK(s.rank == 2);
    REQUIRE(s.kernel.size() == 1);
    CHECK(a.apply(s.kernel[0]) == std::vector<Scalar>(3, Scalar::zero(q)));
    const std::vector<Scalar> bad{Scalar(q, 1L), Scalar(q, 1L), Scalar(q, 0L)};
    CHECK_FALSE(solve_linear(a, bad).particular);
    CHECK_THROWS_AS(solve_linear(a, {Scalar(q, 1L)}), std::invalid_argument);
}

TEST_CASE("determinants agree with the Leibniz expansion") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 5;
        std::vector<std::vector<long>> m(n, std::vector<long>(n));
        for (auto& row : m)
            for (auto& x : row) x = d(rng);
        const long expected = leibniz(m);
        CHECK(integer_determinant(m) == expected);
        CHECK(determinant(from_ints(m)) == Scalar(RingSpec::rationals(), expected));
        CHECK(static_cast<bool>(rank_of(from_ints(m)) == n) == (expected != 0));
    }
}

TEST_CASE("sparse reducer matches dense rank") {
    const auto q = RingSpec::rationals();
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = 6, cols = 5;
        Matrix a(q, rows, cols);
        std::vector<SparseRowReducer::Row> sparse(rows);
        SparseRowReducer red(q);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                const long x = trial % 3 == 0 ? d(rng) * (j < 2) : d(rng) * (d(rng) == 0);
                a(i, j) = Scalar(q, x);
                if (x) sparse[i][j] = Scalar(q, x);
            }
            red.add(sparse[i]);
        }
        CHECK(red.rank() == rank_of(a));
        const auto ker = sparse_null_space(q, sparse, cols);
        CHECK(ker.size() == cols - rank_of(a));
        for (const auto& v : ker) CHECK(a.apply(v) == std::vector<Scalar>(rows, Scalar::zero(q)));
        CHECK(null_space(a).size() == ker.size());
    }
}

TEST_CASE("rank over a prime field can drop") {
    const auto f3 = RingSpec::prime_field(3);
    Matrix a(f3, 2, 2);
    a(0, 0) = Scalar(f3, 1L);
    a(0, 1) = Scalar(f3, 2L);
    a(1, 0) = Scalar(f3, 2L);
    a(1, 1) = Scalar(f3, 1L);  // det = -3
    CHECK(rank_of(a) == 1);
    CHECK(rank_of(from_ints({{1, 2}, {2, 1}})) == 2);
}
