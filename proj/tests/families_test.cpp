#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrc/errors.hpp"
#include "lrc/families.hpp"

using namespace lrc;

TEST_CASE("closed forms for the availability-2 Hermitian family") {
    auto shape = FamilyShape::make(Family::HermitianLrc2, 7, 4);  // q = 2401
    CHECK(shape.length() == BigInt("13841284800"));
    CHECK(shape.dimension(0) == 5762400);
    CHECK(shape.distance_lower_bound(0) == BigInt("13829760002"));
    CHECK(shape.witness_distance_formula(0).value() == BigInt("13829760002"));
    CHECK(shape.localities() == std::vector<std::uint64_t>{2400, 2401});

    auto small = FamilyShape::make(Family::HermitianLrc2, 3, 1);
    CHECK(small.length() == 24);
    CHECK(small.dimension(0) == 6);
    CHECK(small.split_count() == 2);
    CHECK(small.distance_lower_bound(0) == 14);
}

TEST_CASE("closed forms for the Artin-Schreier family") {
    auto shape = FamilyShape::make(Family::ArtinSchreier, 5, 2, 2);
    CHECK(shape.length() == 15625);
    CHECK(shape.dimension(572) == 9168);
    CHECK(shape.witness_distance_formula(572).value() == 545);
    CHECK(shape.max_l_positive() == 593);
    CHECK(shape.dimension(593) == 9504);
    CHECK(shape.distance_lower_bound(593) == 20);

    auto a92 = FamilyShape::make(Family::ArtinSchreier, 3, 2, 2);
    CHECK(a92.length() == 729);
    CHECK(a92.max_l_positive() == 74);
    CHECK(a92.witness_l_cap() == 60);
    CHECK(a92.dimension(74) == 300);
    CHECK(a92.distance_lower_bound(74) == 3);
    CHECK(a92.localities() == std::vector<std::uint64_t>{2, 2});
    CHECK(!a92.witness_distance_formula(61).has_value());
}

TEST_CASE("closed forms for the two-curve Hermitian family") {
    auto x3 = FamilyShape::make(Family::HermitianProduct, 3, 1);
    CHECK(x3.length() == 72);
    CHECK(x3.split_count() == 6);
    CHECK(x3.dimension(3) == 24);
    CHECK(x3.distance_lower_bound(3) == 2);
    CHECK(x3.max_l_positive() == 3);
    CHECK(!x3.witness_distance_formula(0).has_value());  // construction needs q > 3

    auto x4 = FamilyShape::make(Family::HermitianProduct, 2, 2);
    CHECK(x4.length() == 240);
    CHECK(x4.dimension(4) == 60);
    CHECK(x4.witness_distance_formula(4).value() == 62);
    CHECK(x4.localities() == std::vector<std::uint64_t>{4, 3});
    CHECK(x4.coordinate_degrees() == std::vector<BigInt>{16, 25});
    CHECK(x4.product_degree() == 20);
}

TEST_CASE("rational-map Hermitian family") {
    auto shape = FamilyShape::make(Family::HermitianRational, 3, 1);
    CHECK(shape.length() == 27);
    CHECK(shape.dimension(0) == 2);
    CHECK(shape.distance_lower_bound(0) == 23);
    CHECK(shape.witness_distance_formula(4).value() == 11);
    CHECK(shape.witness_l_cap() == 4);
    CHECK(!shape.witness_distance_formula(5).has_value());
}

TEST_CASE("dimension grows and the bound shrinks in l") {
    auto shape = FamilyShape::make(Family::ArtinSchreier, 3, 2, 2);
    for (std::uint64_t l = 1; l <= 74; ++l) {
        CHECK(shape.dimension(l) > shape.dimension(l - 1));
        CHECK(shape.distance_lower_bound(l) < shape.distance_lower_bound(l - 1));
    }
}

TEST_CASE("uniform-locality rate never beats the product-code rate") {
    for (auto [p, t] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {3, 2}, {3, 3}, {5, 2}, {2, 2}, {7, 2}}) {
        auto shape = FamilyShape::make(Family::ArtinSchreier, p, t, t);
        BigRat cap = big_pow(BigInt(p - 1), t);
        cap /= big_pow(BigInt(p), t);
        BigInt lmax = shape.max_l_positive();
        for (BigInt l = 0; l <= lmax; l += (lmax > 20 ? BigInt(lmax / 7 + 1) : BigInt(1)))
            CHECK(shape.rate(l) <= cap);
        CHECK(shape.rate(lmax) <= cap);
    }
}

TEST_CASE("family names round trip") {
    for (Family f : {Family::HermitianRational, Family::HermitianLrc2, Family::HermitianProduct,
                     Family::ArtinSchreier})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS((void)family_from_name("nope"), BadParams);
    CHECK_THROWS_AS((void)FamilyShape::make(Family::ArtinSchreier, 3, 2, 5), BadParams);
}
