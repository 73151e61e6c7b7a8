#include "doctest.h"

#include "grmod/matrix.hpp"

using namespace grmod;

namespace {

Matrix from_ints(const Field& f, std::size_t rows, std::size_t cols, std::vector<long> entries) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::of_int(f, entries[i * cols + j]);
    return m;
}

std::vector<Scalar> vec(const Field& f, std::vector<long> entries) {
    std::vector<Scalar> v;
    for (long e : entries) v.push_back(Scalar::of_int(f, e));
    return v;
}

} // namespace

TEST_CASE("scalar arithmetic over Q and F_p") {
    Field Q = Field::rationals();
    Scalar half = Scalar::parse(Q, "1/2");
    Scalar third = Scalar::parse(Q, "-1/3");
    CHECK((half * third).str() == "-1/6");
    CHECK((half + half).is_one());
    CHECK_THROWS_AS(half + Scalar::one(Field::prime(5)), FieldMismatch);

    Field F7 = Field::prime(7);
    Scalar a = Scalar::of_int(F7, 3);
    CHECK((a.inv() * a).is_one());
    CHECK(Scalar::parse(F7, "10").str() == "3");
    CHECK_THROWS(Field::prime(6));
}

TEST_CASE("rank") {
    Field Q = Field::rationals();
    CHECK(rank(Matrix::identity(Q, 2)) == 2);
    CHECK(rank(Matrix::zero(Q, 3, 4)) == 0);
    // [[1,2],[2,4]] has rank 1 by row reduction
    CHECK(rank(from_ints(Q, 2, 2, {1, 2, 2, 4})) == 1);
}

TEST_CASE("kernel_basis") {
    Field Q = Field::rationals();
    CHECK(kernel_basis(Matrix::identity(Q, 3)).empty());
    CHECK(kernel_basis(Matrix::zero(Q, 2, 3)).size() == 3);

    // [[1,1]] over F_2: kernel spanned by (1,1)
    Field F2 = Field::prime(2);
    auto ker = kernel_basis(from_ints(F2, 1, 2, {1, 1}));
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == Scalar::one(F2));
    CHECK(ker[0][1] == Scalar::one(F2));
    // cross-check by enumerating F_2^2
    int count = 0;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            if ((x + y) % 2 == 0 && (x || y)) ++count;
    CHECK(count == 1);
}

TEST_CASE("solve") {
    Field Q = Field::rationals();
    auto sol = solve(Matrix::identity(Q, 2), vec(Q, {5, -3}));
    REQUIRE(sol);
    CHECK((*sol)[0] == Scalar::of_int(Q, 5));

    // [[1],[0]] x = (0,1) is inconsistent, and the augmented rank grows
    Matrix m10 = from_ints(Q, 2, 1, {1, 0});
    CHECK(!solve(m10, vec(Q, {0, 1})));
    Matrix aug = Matrix::hstack(m10, from_ints(Q, 2, 1, {0, 1}));
    CHECK(rank(aug) > rank(m10));

    // [[2]] x = (1) over Q gives 1/2
    auto half = solve(from_ints(Q, 1, 1, {2}), vec(Q, {1}));
    REQUIRE(half);
    CHECK((*half)[0].str() == "1/2");
}

TEST_CASE("solve consistency with augmented rank") {
    Field Q = Field::rationals();
    Matrix m = from_ints(Q, 3, 2, {1, 2, 2, 4, 1, 0});
    std::vector<Scalar> b = vec(Q, {1, 2, 1});
    auto x = solve(m, b);
    REQUIRE(x);
    // m x = b exactly
    Matrix xs = Matrix::from_rows(Q, 2, {*x});
    Matrix got = m * xs.transpose();
    for (std::size_t i = 0; i < 3; ++i) CHECK(got.at(i, 0) == b[i]);
}

TEST_CASE("subspace_quotient") {
    Field Q = Field::rationals();
    // sub = full space -> zero quotient
    auto full = subspace_quotient(Q, 2, {vec(Q, {1, 0}), vec(Q, {0, 1})});
    CHECK(full.quotient_dim == 0);
    // sub = 0 -> identity projection
    auto none = subspace_quotient(Q, 2, {});
    CHECK(none.quotient_dim == 2);
    CHECK((none.section * none.projection).is_identity());
    // ambient 2 modulo span{(1,1)}
    auto q = subspace_quotient(Q, 2, {vec(Q, {1, 1})});
    CHECK(q.quotient_dim == 1);
    CHECK((q.section * q.projection).is_identity());
    // the projection kills exactly the subspace
    Matrix v = Matrix::from_rows(Q, 2, {vec(Q, {1, 1})});
    CHECK((v * q.projection).is_zero());
    CHECK(rank(q.projection) == 1);
}

TEST_CASE("rank-nullity on seeded random matrices, Q and F_5") {
    for (auto field : {Field::rationals(), Field::prime(5)}) {
        std::uint64_t state = 12345;
        auto next = [&] {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            return static_cast<long>((state >> 33) % 7) - 3;
        };
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t r = 1 + trial % 5, c = 1 + (trial * 7) % 6;
            Matrix m(field, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::of_int(field, next());
            CHECK(rank(m) + kernel_basis(m).size() == c);
            // kernel vectors are exact: m v = 0
            for (const auto& v : kernel_basis(m)) {
                Matrix vm = Matrix::from_rows(field, c, {v});
                CHECK((m * vm.transpose()).is_zero());
            }
            // identical ranks under a different pivoting order (row reversal)
            Matrix rev(field, r, c);
            for (std::size_t i = 0; i < r; ++i) rev.set_row(i, m.row(r - 1 - i));
            CHECK(rank(rev) == rank(m));
            CHECK(rank(m.transpose()) == rank(m));
            // membership answers agree between the two routes
            RowSpace sp1(field, c), sp2(field, c);
            for (std::size_t i = 0; i < r; ++i) {
                sp1.add(m.row(i));
                sp2.add(rev.row(i));
            }
            for (std::size_t i = 0; i < r; ++i) CHECK(sp2.contains(m.row(i)));
        }
    }
}
