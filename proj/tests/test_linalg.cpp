#include <doctest.h>

#include "casilab/linalg.hpp"

using namespace casilab;

TEST_CASE("rank, determinant and inverse over exact scalars") {
    ScalarMat m(std::vector<std::vector<Scalar>>{
        {Scalar(1), Scalar(2)},
        {Scalar(3), Scalar(4)},
    });
    CHECK(m.rank() == 2);
    CHECK(m.det() == Scalar(-2));
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK((m * *inv) == ScalarMat::identity(2));

    ScalarMat sing(std::vector<std::vector<Scalar>>{
        {Scalar(1), Scalar(2)},
        {Scalar(2), Scalar(4)},
    });
    CHECK(sing.rank() == 1);
    CHECK(sing.det() == Scalar(0));
    CHECK_FALSE(sing.inverse().has_value());
}

TEST_CASE("complex entries are handled exactly") {
    Scalar i = Scalar::i();
    ScalarMat m(std::vector<std::vector<Scalar>>{
        {i, Scalar(1)},
        {Scalar(-1), i},
    });
    CHECK(m.det() == Scalar(0));  // i*i - (1)(-1) = -1 + 1
    CHECK(m.rank() == 1);
}

TEST_CASE("sparse rref computes exact nullspaces") {
    // x + y + z = 0; x - z = 0  ->  kernel spanned by (1, -2, 1)
    SparseRref rref(3);
    CHECK(rref.add_row({{0, Scalar(1)}, {1, Scalar(1)}, {2, Scalar(1)}}));
    CHECK(rref.add_row({{0, Scalar(1)}, {2, Scalar(-1)}}));
    CHECK_FALSE(rref.add_row({{0, Scalar(2)}, {1, Scalar(1)}}));  // dependent
    CHECK(rref.rank() == 2);
    auto ns = rref.nullspace();
    REQUIRE(ns.size() == 1);
    // normalize against the free-column convention
    const auto& v = ns[0];
    CHECK(v[0] * Scalar(-2) == v[1]);
    CHECK(v[0] == v[2]);
}

TEST_CASE("reduce detects span membership") {
    SparseRref rref(3);
    rref.add_row({{0, Scalar(1)}, {1, Scalar(2)}});
    rref.add_row({{1, Scalar(1)}, {2, Scalar(1)}});
    CHECK(rref.reduce({{0, Scalar(2)}, {1, Scalar(5)}, {2, Scalar(1)}}).empty());
    CHECK_FALSE(rref.reduce({{2, Scalar(1)}, {0, Scalar(1)}}).empty());
}
