#include "doctest.h"

#include "twistspec/twists.hpp"

#include <random>

using namespace twistspec;

namespace {

// column of m at the position of curve u, as (row curve, entry) pairs
Int entry(const CurveSystem& sys, const LinearMap& m, CurveId row, CurveId col) {
    return m.at(sys.index_of(row), sys.index_of(col));
}

}  // namespace

TEST_CASE("twist matrix implements mu -> mu + i(mu, x) x") {
    CurveSystem sys(5);
    LinearMap t = twist_map(sys, {Family::D, 0});
    // only row d0 deviates from the identity
    for (CurveId u : sys.basis()) {
        for (CurveId v : sys.basis()) {
            Int want = (u == v) ? 1 : 0;
            if (u == CurveId{Family::D, 0} && u != v) want = sys.intersection(v, u);
            CHECK(entry(sys, t, u, v) == want);
        }
    }
    CHECK(entry(sys, t, {Family::D, 0}, {Family::C, 0}) == 2);
    CHECK(entry(sys, t, {Family::D, 0}, {Family::A, 1}) == 1);
}

TEST_CASE("disjoint twists commute") {
    CurveSystem sys(7);
    LinearMap ta0 = twist_map(sys, {Family::A, 0});
    LinearMap tb1 = twist_map(sys, {Family::B, 1});
    LinearMap tc0 = twist_map(sys, {Family::C, 0});
    // a0, b1, c0 are pairwise disjoint, so their twist matrices commute
    CHECK(mul(ta0, tb1) == mul(tb1, ta0));
    CHECK(mul(ta0, tc0) == mul(tc0, ta0));
    CHECK(mul(tb1, tc0) == mul(tc0, tb1));
    // d0 meets all three; its twist must not commute with any of them
    LinearMap td0 = twist_map(sys, {Family::D, 0});
    CHECK(mul(ta0, td0) != mul(td0, ta0));
}

TEST_CASE("twists are unipotent") {
    CurveSystem sys(5);
    for (CurveId x : {CurveId{Family::A, 0}, CurveId{Family::B, 1}, CurveId{Family::C, 0},
                      CurveId{Family::D, 0}}) {
        LinearMap b = twist_map(sys, x);
        for (int i = 0; i < b.n; ++i) b.at(i, i) -= 1;
        for (const Int& e : mul(b, b).a) CHECK(e == 0);
    }
}

TEST_CASE("rotation matrix is the index-shift permutation") {
    CurveSystem sys(9);
    LinearMap r = rotation_map(sys, RotationDir::Plus);
    for (CurveId u : sys.basis())
        for (CurveId v : sys.basis())
            CHECK(entry(sys, r, u, v) == (u == sys.rotate(v, 1) ? 1 : 0));
    // minus direction is the transpose (inverse) of plus
    CHECK(rotation_map(sys, RotationDir::Minus) == transpose(r));
    CHECK(mul(rotation_map(sys, RotationDir::Minus), r) == LinearMap::identity(sys.dim()));
}

TEST_CASE("composite map: image of a1 is a1 + a2 + b2 + 2 c1 + d1") {
    for (int g : {4, 5, 9}) {
        CurveSystem sys(g);
        LinearMap m = phi_matrix(sys, RotationDir::Plus);
        CurveId a1{Family::A, 1};
        CHECK(entry(sys, m, {Family::A, 1}, a1) == 1);
        CHECK(entry(sys, m, {Family::A, 2 % sys.period()}, a1) == 1);
        CHECK(entry(sys, m, {Family::B, 2 % sys.period()}, a1) == 1);
        CHECK(entry(sys, m, {Family::C, 1}, a1) == 2);
        CHECK(entry(sys, m, {Family::D, 1}, a1) == 1);
        Int col_sum = 0;
        for (CurveId u : sys.basis()) col_sum += entry(sys, m, u, a1);
        CHECK(col_sum == 6);
    }
}

TEST_CASE("composite map is nonnegative with trace 1") {
    for (int g = 4; g <= 12; ++g) {
        LinearMap m = phi_matrix(g);
        CHECK(nonnegative(m));
        CHECK(trace(m) == 1);
    }
}

TEST_CASE("the unique diagonal entry sits at a1 under plus rotation") {
    CurveSystem sys(9);
    LinearMap plus = phi_matrix(sys, RotationDir::Plus);
    const int a1 = sys.index_of({Family::A, 1});
    for (int i = 0; i < plus.n; ++i) CHECK(plus.at(i, i) == (i == a1 ? 1 : 0));
    // under the minus rotation the loop lands at b0 instead
    LinearMap minus = phi_matrix(sys, RotationDir::Minus);
    const int b0 = sys.index_of({Family::B, 0});
    for (int i = 0; i < minus.n; ++i) CHECK(minus.at(i, i) == (i == b0 ? 1 : 0));
    CHECK(calibrate_rotation(9) == RotationDir::Plus);
    CHECK(calibrate_rotation(5) == RotationDir::Plus);
}

TEST_CASE("sequential twist application matches the composed matrix") {
    for (int g : {4, 6, 9}) {
        CurveSystem sys(g);
        LinearMap m = phi_matrix(sys, RotationDir::Plus);
        // basis vectors
        for (int i = 0; i < sys.dim(); ++i) {
            WeightVector e(sys.dim(), 0);
            e[i] = 1;
            CHECK(twistspec::apply(m, e) == sequential_phi_apply(sys, e));
        }
        // seeded random weights
        std::mt19937 gen(1234u + static_cast<unsigned>(g));
        for (int t = 0; t < 25; ++t) {
            WeightVector v(sys.dim());
            for (Int& x : v) x = static_cast<long>(gen() % 100);
            CHECK(twistspec::apply(m, v) == sequential_phi_apply(sys, v));
        }
    }
}

TEST_CASE("sequential application rejects wrong dimension") {
    CurveSystem sys(5);
    WeightVector v(7, 1);
    CHECK_THROWS_AS(sequential_phi_apply(sys, v), std::invalid_argument);
}

TEST_CASE("determinants: structural result agrees with elimination") {
    for (int g = 4; g <= 7; ++g) {
        CurveSystem sys(g);
        CHECK(phi_determinant(sys) == 1);
        CHECK(phi_determinant(sys, RotationDir::Minus) == 1);
        CHECK(bareiss_det(phi_matrix(sys)) == 1);
    }
    for (CurveId x : {CurveId{Family::A, 0}, CurveId{Family::D, 0}}) {
        CurveSystem sys(5);
        CHECK(bareiss_det(twist_map(sys, x)) == 1);
        CHECK(bareiss_det(rotation_map(sys)) == 1);
    }
}
