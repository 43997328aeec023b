#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <srgh/graphs.hpp>

#include "test_support.hpp"

using namespace srgh;
using srgh::testing::fixtures;

namespace {
RelationMatrix graph_by_name(const std::string& name) {
    if (name.rfind("paley", 0) == 0) return paley_graph(std::stol(name.substr(5)));
    if (name.rfind("triangular", 0) == 0) return triangular_graph(std::stoi(name.substr(10)));
    throw std::runtime_error("unknown fixture graph " + name);
}
}  // namespace

TEST_CASE("standard graphs match frozen parameters") {
    for (const auto& [name, value] : fixtures()["graphs"].items()) {
        CAPTURE(name);
        RelationMatrix g = graph_by_name(name);
        CHECK(g.n == value["n"].get<int>());
        SrgParams p = verify_srg(g);
        CHECK(p.n == BigInt(value["n"].get<long long>()));
        CHECK(p.k1 == BigInt(value["k1"].get<long long>()));
        CHECK(p.lambda == BigInt(value["lambda"].get<long long>()));
        CHECK(p.mu == BigInt(value["mu"].get<long long>()));
    }
}

TEST_CASE("relation matrices are well formed") {
    RelationMatrix g = paley_graph(13);
    for (int i = 0; i < g.n; ++i) {
        CHECK(g.at(i, i) == 0);
        for (int j = 0; j < g.n; ++j) {
            if (i != j) CHECK(g.at(i, j) >= 1);
            CHECK(g.at(i, j) == g.at(j, i));
        }
    }
}

TEST_CASE("text serialization round trips") {
    for (long q : {5L, 9L, 25L}) {
        RelationMatrix g = paley_graph(q);
        RelationMatrix back = relation_from_text(to_text(g));
        CHECK(back.n == g.n);
        CHECK(back.rel == g.rel);
    }
    CHECK_THROWS_AS(relation_from_text("abc"), Error);
    CHECK_THROWS_AS(relation_from_text("2\n01\n0"), Error);
    CHECK_THROWS_AS(relation_from_text("2\n03\n30"), Error);
}

TEST_CASE("complementation") {
    RelationMatrix g = triangular_graph(5);
    RelationMatrix gc = complement(g);
    CHECK(complement(gc).rel == g.rel);

    // the complement of T(5) is the (10,3,0,1) graph
    SrgParams p = verify_srg(gc);
    CHECK(p.k1 == 3);
    CHECK(p.lambda == 0);
    CHECK(p.mu == 1);

    // conference graphs are parameter-self-complementary
    SrgParams q = verify_srg(complement(paley_graph(13)));
    CHECK(q.k1 == 6);
    CHECK(q.lambda == 2);
    CHECK(q.mu == 3);
}

TEST_CASE("tampered graphs are rejected with a witness") {
    RelationMatrix g = paley_graph(9);
    RelationMatrix flipped = g;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}})
        flipped.at(i, j) = flipped.at(i, j) == 1 ? 2 : 1;
    CHECK_THROWS_AS(verify_srg(flipped), NotStronglyRegular);

    RelationMatrix asym = g;
    asym.at(0, 1) = asym.at(0, 1) == 1 ? 2 : 1;
    CHECK_THROWS_AS(verify_srg(asym), NotStronglyRegular);

    RelationMatrix diag = g;
    diag.at(2, 2) = 1;
    CHECK_THROWS_AS(verify_srg(diag), NotStronglyRegular);

    try {
        verify_srg(flipped);
        FAIL_CHECK("expected a strong regularity failure");
    } catch (const NotStronglyRegular& e) {
        CHECK_FALSE(e.code.empty());
        CHECK(e.i >= 0);
        CHECK(e.j >= 0);
    }
}

TEST_CASE("unsupported orders are refused") {
    CHECK_THROWS_AS(paley_graph(3), UnsupportedOrder);     // too small
    CHECK_THROWS_AS(paley_graph(11), UnsupportedOrder);    // 3 mod 4
    CHECK_THROWS_AS(paley_graph(15), UnsupportedOrder);    // not a prime power
    CHECK_THROWS_AS(paley_graph(21), UnsupportedOrder);    // 1 mod 4 but composite
    CHECK_THROWS_AS(paley_graph(125), UnsupportedOrder);   // odd power of a prime
    CHECK_THROWS_AS(paley_graph(2005), UnsupportedOrder);  // beyond the supported range
    CHECK_THROWS_AS(triangular_graph(4), UnsupportedOrder);
}

TEST_CASE("prime square fields are realized correctly") {
    // q = 25 and q = 49 exercise the GF(p^2) construction
    SrgParams p25 = verify_srg(paley_graph(25));
    CHECK(p25.conference);
    CHECK(p25.k1 == 12);
    SrgParams p49 = verify_srg(paley_graph(49));
    CHECK(p49.conference);
    CHECK(p49.k1 == 24);
    CHECK(p49.lambda == 11);
    CHECK(p49.mu == 12);
}
