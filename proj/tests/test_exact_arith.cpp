#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <srgh/quadext.hpp>
#include <srgh/rational.hpp>

#include "test_support.hpp"

using namespace srgh;
using srgh::testing::fixtures;
using srgh::testing::rat;

TEST_CASE("integer square root floor") {
    CHECK(isqrt_floor(BigInt(0)) == 0);
    CHECK(isqrt_floor(BigInt(1)) == 1);
    CHECK(isqrt_floor(BigInt(3)) == 1);
    CHECK(isqrt_floor(BigInt(4)) == 2);
    CHECK(isqrt_floor(BigInt(48)) == 6);
    CHECK(isqrt_floor(BigInt(49)) == 7);
    BigInt big = BigInt("123456789123456789");
    BigInt root = isqrt_floor(big * big + 7);
    CHECK(root == big);
}

TEST_CASE("exact square roots of integers and rationals") {
    CHECK(exact_sqrt(BigInt(49)).value() == 7);
    CHECK(exact_sqrt(BigInt(0)).value() == 0);
    CHECK_FALSE(exact_sqrt(BigInt(48)).has_value());
    CHECK_THROWS_AS(exact_sqrt(BigInt(-1)), NegativeInput);

    CHECK(rational_sqrt(rat("4/9")).value() == rat("2/3"));
    CHECK(rational_sqrt(BigRational(49)).value() == 7);
    CHECK_FALSE(rational_sqrt(rat("2/3")).has_value());
    CHECK_FALSE(rational_sqrt(rat("4/7")).has_value());
    CHECK_THROWS_AS(rational_sqrt(rat("-4/9")), NegativeInput);
}

TEST_CASE("squarefree decomposition matches frozen table") {
    for (const auto& [key, value] : fixtures()["misc"]["squarefree"].items()) {
        auto [c, d] = squarefree_decompose(BigInt(key));
        CHECK(c == BigInt(value[0].get<long long>()));
        CHECK(d == BigInt(value[1].get<long long>()));
        CHECK(c * c * d == BigInt(key));
    }
    CHECK_THROWS_AS(squarefree_decompose(BigInt(0)), NegativeInput);
}

TEST_CASE("principal square roots match frozen table") {
    for (const auto& [key, value] : fixtures()["misc"]["sqrt_quad"].items()) {
        QuadExt got = QuadExt::sqrt_of(rat(key));
        CHECK(got == quadext_from_json(value));
        CHECK(got * got == QuadExt(rat(key)));
    }
}

TEST_CASE("construction folds square factors and trivial discriminants") {
    QuadExt x(BigRational(0), BigRational(2), BigInt(8));  // 2*sqrt(8) = 4*sqrt(2)
    CHECK(x.b() == 4);
    CHECK(x.d() == 2);

    QuadExt collapsed(BigRational(1), BigRational(3), BigInt(1));  // 1 + 3*sqrt(1) = 4
    CHECK(collapsed.is_rational());
    CHECK(collapsed.rational_value() == 4);

    QuadExt zero_b(BigRational(2), BigRational(0), BigInt(5));
    CHECK(zero_b.is_rational());
    CHECK(zero_b.d() == 0);

    QuadExt y(BigRational(1), BigRational(-2), BigInt(12));  // 1 - 2*sqrt(12) = 1 - 4*sqrt(3)
    CHECK(y.b() == -4);
    CHECK(y.d() == 3);
}

TEST_CASE("field arithmetic, conjugation and norms") {
    QuadExt x(BigRational(1), BigRational(2), BigInt(3));
    QuadExt y(BigRational(2), BigRational(-1), BigInt(3));
    CHECK(x * y == QuadExt(BigRational(-4), BigRational(3), BigInt(3)));
    CHECK(x + y == QuadExt(BigRational(3), BigRational(1), BigInt(3)));
    CHECK(x / x == QuadExt(1));
    CHECK(x.field_norm() == rat("-11"));  // 1 - 4*3

    QuadExt z(rat("1/2"), rat("1/2"), BigInt(-3));
    CHECK(z.conj() == QuadExt(rat("1/2"), rat("-1/2"), BigInt(-3)));
    CHECK(z * z.conj() == QuadExt(1));
    CHECK(z.modulus_sq() == 1);
    CHECK(z.is_unit_modulus());

    QuadExt w(rat("3/5"), rat("4/5"), BigInt(-1));
    CHECK(w.is_unit_modulus());
    CHECK_FALSE(QuadExt(rat("1/2")).is_unit_modulus());

    CHECK(QuadExt::sqrt_of(BigRational(-3)).modulus_sq() == 3);
    CHECK_THROWS_AS(QuadExt(1) / QuadExt(0), DivisionByZero);
    CHECK_THROWS_AS(QuadExt::sqrt_of(BigRational(2)).modulus_sq(), Error);
}

TEST_CASE("mixing distinct irrational fields is rejected") {
    QuadExt r2 = QuadExt::sqrt_of(BigRational(2));
    QuadExt r3 = QuadExt::sqrt_of(BigRational(3));
    CHECK_THROWS_AS(r2 + r3, IncompatibleField);
    CHECK_THROWS_AS(r2 * r3, IncompatibleField);
    CHECK(r2 * QuadExt(5) == QuadExt(BigRational(0), BigRational(5), BigInt(2)));
    CHECK(r2 - r2 == QuadExt(0));
}

TEST_CASE("exact sign and cross-field comparison") {
    QuadExt r2 = QuadExt::sqrt_of(BigRational(2));
    CHECK(r2.sign() == 1);
    CHECK((-r2).sign() == -1);
    CHECK(QuadExt(0).sign() == 0);
    CHECK(QuadExt(BigRational(-2), BigRational(1), BigInt(2)).sign() == -1);  // sqrt(2) - 2
    CHECK(QuadExt(BigRational(-1), BigRational(1), BigInt(2)).sign() == 1);   // sqrt(2) - 1
    CHECK_THROWS_AS(QuadExt::sqrt_of(BigRational(-1)).sign(), NegativeInput);

    CHECK(compare_real(r2, QuadExt(rat("3/2"))) == -1);
    CHECK(compare_real(r2, QuadExt(rat("7/5"))) == 1);
    CHECK(compare_real(r2, QuadExt::sqrt_of(BigRational(3))) == -1);
    CHECK(compare_real(QuadExt::sqrt_of(rat("9/4")), QuadExt(rat("3/2"))) == 0);
    CHECK(compare_real(-r2, QuadExt::sqrt_of(BigRational(3))) == -1);
    CHECK_THROWS_AS(compare_real(QuadExt::sqrt_of(BigRational(-2)), QuadExt(0)), NegativeInput);
}

TEST_CASE("rational string round trips") {
    CHECK(rational_from_string("-22/7") == BigRational(-22, 7));
    CHECK(to_string(rat("-22/7")) == "-22/7");
    CHECK(to_string(BigRational(5)) == "5");
    CHECK(rational_from_string("0") == 0);
    QuadExt r2 = QuadExt::sqrt_of(BigRational(2));
    CHECK_FALSE(r2.str().empty());
    CHECK_THROWS_AS(r2.rational_value(), Error);
}
