#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <srgh/hadamard.hpp>

#include "test_support.hpp"

using namespace srgh;
using srgh::testing::fixtures;
using srgh::testing::rat;

namespace {
const QuadExt kOne{1};
const QuadExt kI{BigRational(0), BigRational(1), BigInt(-1)};

std::vector<QuadExt> as_vector(const CoreWeights& w) { return {w.w0, w.w1, w.w2}; }
}  // namespace

TEST_CASE("scheme eigenmatrices match frozen tables") {
    for (auto [tuple, key] : {std::pair{std::array{9, 4, 1, 2}, "eigenmatrix_9"},
                              std::pair{std::array{13, 6, 2, 3}, "eigenmatrix_13"}}) {
        SrgParams p = params_from_nklm(tuple[0], tuple[1], tuple[2], tuple[3]);
        SchemeData sc = scheme_from_params(p);
        CHECK(sc.d == 2);
        CHECK(sc.order() == tuple[0]);
        CHECK(sc.k == std::vector<BigRational>{1, BigRational(tuple[1]), BigRational(tuple[0] - 1 - tuple[1])});
        const auto& fx = fixtures()["hadamard"][key];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(sc.P[i][j] == quadext_from_json(fx[i][j]));
    }
}

TEST_CASE("border eigenvector values match frozen data") {
    SrgParams p = params_from_nklm(9, 4, 1, 2);
    SchemeData sc = scheme_from_params(p);
    CoreWeights w{-kOne, kI, -kI};
    const auto& fx = fixtures()["hadamard"]["beta1_paley9_ia"];
    CHECK(beta(sc, as_vector(w), 1) == quadext_from_json(fx["beta"]));
    CHECK(beta_abs_sq(sc, as_vector(w), 1) == QuadExt(rat(fx["abs2"].get<std::string>())));
}

TEST_CASE("row sum failure is reported exactly") {
    SrgParams p = params_from_nklm(9, 4, 1, 2);
    SchemeData sc = scheme_from_params(p);
    std::vector<QuadExt> w{kOne, kI, -kI};
    const auto& fx = fixtures()["hadamard"]["ek_paley9_w_1_i_minus_i"];

    CHECK(eval_ek(sc, w, 0) == quadext_from_json(fx["e0"]));
    CHECK_FALSE(ek_vanishes(sc, w, 0));
    CHECK(ek_vanishes(sc, w, 1) == fx["e1_vanishes"].get<bool>());
    CHECK(ek_vanishes(sc, w, 2) == fx["e2_vanishes"].get<bool>());

    SpectralOutcome out = verify_spectral(sc, w);
    CHECK_FALSE(out.ok);
    CHECK(out.k == 0);
    CHECK(out.which == "row_sum");
    CHECK(out.value == quadext_from_json(fx["e0"]));
}

TEST_CASE("closed-form weights pass the border conditions") {
    for (auto tuple : {std::array{5, 2, 0, 1}, std::array{9, 4, 1, 2}, std::array{13, 6, 2, 3},
                       std::array{25, 12, 5, 6}, std::array{15, 8, 4, 4}}) {
        SrgParams p = params_from_nklm(tuple[0], tuple[1], tuple[2], tuple[3]);
        SchemeData sc = scheme_from_params(p);
        auto families = applicable_families(p);
        CHECK(families.size() == (p.conference ? 4 : 1));
        for (const auto& [f, w] : families) {
            CAPTURE(family_name(f));
            w.validate();
            SpectralOutcome out = verify_spectral(sc, as_vector(w));
            CHECK(out.ok);
            for (int k = 0; k <= 2; ++k) CHECK(ek_vanishes(sc, as_vector(w), k));
        }
    }
    CHECK(applicable_families(params_from_nklm(10, 3, 0, 1)).empty());
}

TEST_CASE("closed-form weight values match frozen tables") {
    for (auto [k1, tuple] : {std::pair{2, std::array{5, 2, 0, 1}}, std::pair{4, std::array{9, 4, 1, 2}},
                             std::pair{6, std::array{13, 6, 2, 3}}, std::pair{12, std::array{25, 12, 5, 6}},
                             std::pair{24, std::array{49, 24, 11, 12}}}) {
        SrgParams p = params_from_nklm(tuple[0], tuple[1], tuple[2], tuple[3]);
        const auto& fx = fixtures()["hadamard"]["ib_w1_k" + std::to_string(k1)];
        CoreWeights w = theorem_weights(p, WeightFamily::ib_plus);
        CHECK(w.w0 == kOne);
        CHECK(w.w1 == quadext_from_json(fx["w1"]));
        CHECK(w.w2 == w.w1.conj());
        CHECK(theorem_weights(p, WeightFamily::ib_minus).w1 == w.w1.conj());

        CoreWeights a = theorem_weights(p, WeightFamily::ia_plus);
        CHECK(a.w0 == -kOne);
        CHECK(a.w1 == kI);
        CHECK(a.w2 == -kI);
        CHECK(theorem_weights(p, WeightFamily::ia_minus).w1 == -kI);
    }

    SrgParams q = params_from_nklm(15, 8, 4, 4);
    const auto& fx = fixtures()["hadamard"]["ii_weights"];
    CoreWeights w = theorem_weights(q, WeightFamily::ii);
    CHECK(w.w0 == quadext_from_json(fx[0]));
    CHECK(w.w1 == quadext_from_json(fx[1]));
    CHECK(w.w2 == quadext_from_json(fx[2]));

    CHECK_THROWS_AS(theorem_weights(q, WeightFamily::ia_plus), FamilyNotApplicable);
    CHECK_THROWS_AS(theorem_weights(params_from_nklm(9, 4, 1, 2), WeightFamily::ii), FamilyNotApplicable);
    CHECK_THROWS_AS(theorem_weights(params_from_nklm(10, 3, 0, 1), WeightFamily::ib_plus), FamilyNotApplicable);
}

TEST_CASE("family names round trip") {
    for (auto f : {WeightFamily::ia_plus, WeightFamily::ia_minus, WeightFamily::ib_plus,
                   WeightFamily::ib_minus, WeightFamily::ii})
        CHECK(family_from_string(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_string("bogus"), Error);
}

TEST_CASE("weight validation") {
    CHECK_THROWS_AS((CoreWeights{kOne, kI, kI}.validate()), Error);              // w1 = w2
    CHECK_THROWS_AS((CoreWeights{QuadExt(rat("1/2")), kI, -kI}.validate()), Error);  // not unit
    QuadExt omega(rat("-1/2"), rat("1/2"), BigInt(-3));
    CHECK_THROWS_AS((CoreWeights{kOne, kI, omega}.validate()), Error);           // mixed fields
    CoreWeights ok{kOne, omega, omega.conj()};
    ok.validate();
    CHECK(ok.discriminant() == -3);
    CoreWeights real{kOne, -kOne, kOne};
    real.validate();
    CHECK(real.discriminant() == 0);
}

TEST_CASE("core and border construction") {
    RelationMatrix g = paley_graph(5);
    CoreWeights w{-kOne, kI, -kI};
    ComplexMatrix core = build_core(g, w);
    CHECK(core.n == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(core.at(i, i) == -kOne);
        for (int j = 0; j < 5; ++j)
            if (i != j) CHECK((core.at(i, j) == kI || core.at(i, j) == -kI));
    }
    ComplexMatrix b = build_bordered(core);
    CHECK(b.n == 6);
    for (int j = 0; j < 6; ++j) {
        CHECK(b.at(0, j) == kOne);
        CHECK(b.at(j, 0) == kOne);
    }
    CHECK(b.at(1, 1) == -kOne);
}

TEST_CASE("gram verification is exact") {
    for (long q : {5L, 9L, 13L}) {
        RelationMatrix g = paley_graph(q);
        SrgParams p = verify_srg(g);
        for (const auto& [f, w] : applicable_families(p)) {
            ComplexMatrix b = build_bordered(build_core(g, w));
            GramOutcome out = verify_gram(b);
            CAPTURE(q);
            CAPTURE(family_name(f));
            CHECK(out.ok);
        }
    }

    // weights that violate the row-sum condition fail at the border
    RelationMatrix g = paley_graph(9);
    ComplexMatrix bad = build_bordered(build_core(g, CoreWeights{kOne, kI, -kI}));
    GramOutcome out = verify_gram(bad);
    CHECK_FALSE(out.ok);
    CHECK(out.i == 0);
}

TEST_CASE("triangular graph with real weights gives a real matrix") {
    RelationMatrix g = triangular_graph(6);
    SrgParams p = verify_srg(g);
    CoreWeights w = theorem_weights(p, WeightFamily::ii);
    ComplexMatrix b = build_bordered(build_core(g, w));
    CHECK(b.n == 16);
    CHECK(verify_gram(b).ok);
    for (const QuadExt& e : b.e) {
        CHECK(e.is_rational());
        CHECK((e == kOne || e == -kOne));
    }
}
