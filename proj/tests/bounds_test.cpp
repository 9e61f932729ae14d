#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrc/bounds.hpp"
#include "lrc/errors.hpp"

using namespace lrc;

TEST_CASE("singleton") {
    CHECK(singleton_bound(6, 2) == 5);
    CHECK(singleton_bound(240, 60) == 181);
    CHECK(singleton_bound(729, 4) == 726);
    CHECK_THROWS_AS((void)singleton_bound(3, 5), BadParams);
}

TEST_CASE("availability bound and rate cap") {
    CHECK(tamo_barg(729, 4, 2, 2).d_bound == 725);
    CHECK(render_decimal(tamo_barg_rate_cap(2, 2), 3) == "0.533");
    CHECK(render_decimal(tamo_barg_rate_cap(4, 2), 3) == "0.711");
    CHECK(render_decimal(tamo_barg_rate_cap(6, 2), 3) == "0.791");
    CHECK(tamo_barg(15625, 9168, 4, 2).d_bound == 3595);
}

TEST_CASE("ascending-locality bound") {
    CHECK(bhadane_thangaraj(60, 12, {3, 4}).d_bound == 46);
    CHECK(bhadane_thangaraj(24, 6, {2, 3}).d_bound == 17);
    CHECK(bhadane_thangaraj(240, 48, {3, 4}).d_bound == 175);  // l = 3 row
    auto unsorted = bhadane_thangaraj(60, 12, {4, 3});
    CHECK(unsorted.d_bound == 46);
    CHECK(unsorted.sorted_applied);
    // with no localities it degenerates to the Singleton bound
    CHECK(bhadane_thangaraj(60, 12, {}).d_bound == singleton_bound(60, 12));
}

TEST_CASE("locality-sum bound") {
    CHECK(bmq(60, 12, {3, 4}) == 47);
    CHECK(bmq(100, 1, {2, 5}) == 100);  // k = 1 degenerates to n
}

TEST_CASE("reference constructions") {
    auto r22 = reference_constructions(2, 2);
    CHECK(r22.product.n == 9);
    CHECK(r22.product.k == 4);
    CHECK(r22.product.d == 4);
    CHECK(r22.product.rate == BigRat(4, 9));

    auto r42 = reference_constructions(4, 2);
    CHECK(r42.wang.n == 15);
    CHECK(r42.wang.k == 10);
    CHECK(r42.wang.d == 3);
    CHECK(r42.wang.rate == BigRat(4, 6));

    auto r51 = reference_constructions(5, 1);
    CHECK(r51.product.n == 6);
    CHECK(r51.product.k == 5);
    CHECK(r51.product.d == 2);  // single parity check
}

TEST_CASE("rate cap versus product rate") {
    for (std::int64_t r = 1; r <= 8; ++r) {
        for (std::int64_t t = 1; t <= 8; ++t) {
            BigRat cap = tamo_barg_rate_cap(r, t);
            BigRat product = reference_constructions(r, t).product.rate;
            CHECK(cap >= product);
            if (t >= 2) CHECK(cap > product);
        }
    }
}

TEST_CASE("defect of the availability-2 Hermitian family") {
    auto [d4, rel4] = hermitian_defect(4);
    CHECK(d4 == 8);
    CHECK(render_decimal(rel4, 4) == "0.1333");
    CHECK(render_decimal(hermitian_defect(9).second, 4) == "0.0875");
    CHECK(hermitian_defect(2).first == 0);
}

TEST_CASE("bound report") {
    auto rep = bound_report(60, 12, {3, 4}, 38);
    CHECK(rep.singleton == 49);
    CHECK(rep.bhadane_thangaraj == 46);
    CHECK(rep.bmq == 47);
    CHECK(rep.defect == 8);
    CHECK(render_decimal(*rep.relative_defect, 4) == "0.1333");
}

TEST_CASE("decimal rendering rounds half to even") {
    CHECK(render_decimal(BigRat(1, 8), 2) == "0.12");    // 0.125 -> even
    CHECK(render_decimal(BigRat(3, 8), 2) == "0.38");    // 0.375 -> even
    CHECK(render_decimal(BigRat(1, 3), 4) == "0.3333");
    CHECK(render_decimal(BigRat(2, 3), 4) == "0.6667");
    CHECK(render_decimal(BigRat(0), 4) == "0.0000");
    CHECK(render_decimal(BigRat(5, 2), 0) == "2");       // ties to even integer
    CHECK(render_decimal(BigRat(7, 2), 0) == "4");
}
