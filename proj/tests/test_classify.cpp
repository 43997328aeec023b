#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <srgh/classify.hpp>

#include <algorithm>
#include <set>

#include "test_support.hpp"

using namespace srgh;
using srgh::testing::fixtures;
using srgh::testing::rat;

namespace {
std::pair<BigRational, BigRational> parse_rs(const std::string& key) {
    size_t comma = key.find(',');
    return {rat(key.substr(0, comma)), rat(key.substr(comma + 1))};
}

std::set<std::string> solution_families(const ClassificationReport& rep) {
    std::set<std::string> out;
    for (const auto& s : rep.solutions) out.insert(s.family);
    return out;
}
}  // namespace

TEST_CASE("cubic and quartic forms match frozen coefficients") {
    for (const auto& [key, value] : fixtures()["lms"].items()) {
        if (key == "values_at_k1") continue;
        CAPTURE(key);
        auto [r, s] = parse_rs(key);
        LmsForms f = lms_general(r, s);
        CHECK(f.L == poly_from_json(value["L"]));
        CHECK(f.M == poly_from_json(value["M"]));
        CHECK(f.S == poly_from_json(value["S"]));
        CHECK(f.L.leading() == 1);
        BigRational lead = (r + s + 1) * (r + s + 1);
        if (lead != 0) {
            CHECK(f.S.degree() == 4);
            CHECK(f.S.leading() == lead);
        } else {
            // the quartic term vanishes on the line r+s+1 = 0
            CHECK(f.S.degree() == 3);
            CHECK(f.S.leading() == 4 * r * s);
        }

        if (r + s == -1) {
            LmsForms c = lms_conference(r * (r + 1));
            CHECK(c.L == f.L);
            CHECK(c.M == f.M);
            CHECK(c.S == f.S);
        }
        if (s == -r) {
            LmsForms z = lms_rs0(r);
            CHECK(z.L == f.L);
            CHECK(z.M == f.M);
            CHECK(z.S == f.S);
        }
    }
}

TEST_CASE("values at the evaluation point match frozen data for conference parameters") {
    for (auto [k1, tuple] :
         {std::pair{4, std::array{9, 4, 1, 2}}, std::pair{6, std::array{13, 6, 2, 3}},
          std::pair{12, std::array{25, 12, 5, 6}}, std::pair{20, std::array{41, 20, 9, 10}}}) {
        const auto& fx = fixtures()["lms"]["values_at_k1"]["conference_k" + std::to_string(k1)];
        SrgParams p = params_from_nklm(tuple[0], tuple[1], tuple[2], tuple[3]);
        LmsEvaluation e = lms_at_k1(p);
        CHECK(e.k1 == k1);
        CHECK(e.Lk == rat(fx["L"].get<std::string>()));
        CHECK(e.Mk == rat(fx["M"].get<std::string>()));
        CHECK(e.Sk == rat(fx["S"].get<std::string>()));

        SignFilterOutcome filt = sign_filter(e);
        CHECK(filt.s_nonneg);
        CHECK(filt.plus_ok);
        CHECK(filt.minus_ok);

        QuadExt a1_plus = solve_a1(e, SolveBranch::plus);
        QuadExt a1_minus = solve_a1(e, SolveBranch::minus);
        CHECK(a1_plus == QuadExt(rat(fx["a1_roots"][0].get<std::string>())));
        CHECK(a1_minus == QuadExt(rat(fx["a1_roots"][1].get<std::string>())));

        auto [a0p, a2p] = solve_a0_a2(e, a1_plus);
        CHECK(a0p == QuadExt(rat(fx["a0_a2"][0][0].get<std::string>())));
        CHECK(a2p == QuadExt(rat(fx["a0_a2"][0][1].get<std::string>())));
        auto [a0m, a2m] = solve_a0_a2(e, a1_minus);
        CHECK(a0m == QuadExt(rat(fx["a0_a2"][1][0].get<std::string>())));
        CHECK(a2m == QuadExt(rat(fx["a0_a2"][1][1].get<std::string>())));
    }
}

TEST_CASE("values at the evaluation point match frozen data for the real family") {
    for (auto [r, tuple] : {std::pair{2, std::array{15, 8, 4, 4}}, std::pair{3, std::array{35, 18, 9, 9}}}) {
        const auto& fx = fixtures()["lms"]["values_at_k1"]["rs0_r" + std::to_string(r)];
        SrgParams p = params_from_nklm(tuple[0], tuple[1], tuple[2], tuple[3]);
        LmsEvaluation e = lms_at_k1(p);
        CHECK(e.Lk == rat(fx["L"].get<std::string>()));
        CHECK(e.Mk == rat(fx["M"].get<std::string>()));
        CHECK(e.Sk == rat(fx["S"].get<std::string>()));

        SignFilterOutcome filt = sign_filter(e);
        CHECK(filt.s_nonneg);
        CHECK(filt.sqrt_s == QuadExt(0));

        QuadExt a1 = solve_a1(e, SolveBranch::plus);
        CHECK(a1 == QuadExt(rat(fx["a1"].get<std::string>())));
        auto [a0, a2] = solve_a0_a2(e, a1);
        CHECK(a0 == QuadExt(rat(fx["a0"].get<std::string>())));
        CHECK(a2 == QuadExt(rat(fx["a2"].get<std::string>())));
    }
}

TEST_CASE("unit circle lift enumerates sign patterns") {
    SrgParams p = params_from_nklm(9, 4, 1, 2);
    auto sols = lift_to_unit_circle(p, QuadExt(-1), QuadExt(0), QuadExt(0));
    REQUIRE(sols.size() == 2);
    for (const auto& cand : sols) {
        CHECK(cand.w.w0 == QuadExt(-1));
        CHECK(cand.discriminant == -1);
        CHECK(cand.w.w1 == cand.w.w2.conj());
    }
    CHECK(sols[0].w.w1 != sols[1].w.w1);

    // a real triple lifts to a single real candidate
    SrgParams q = params_from_nklm(15, 8, 4, 4);
    auto real_sols = lift_to_unit_circle(q, QuadExt(1), QuadExt(-1), QuadExt(1));
    REQUIRE(real_sols.size() == 1);
    CHECK(real_sols[0].discriminant == 0);
    CHECK(real_sols[0].eps == std::array<int, 3>{0, 0, 0});

    CHECK_THROWS_AS(lift_to_unit_circle(p, QuadExt(0), QuadExt(rat("1/2")), QuadExt(rat("1/3"))),
                    MixedDiscriminants);
    CHECK_THROWS_AS(lift_to_unit_circle(p, QuadExt(2), QuadExt(0), QuadExt(rat("1/2"))), NegativeInput);
}

TEST_CASE("degenerate quadratic is refused") {
    LmsEvaluation e = lms_at_point(BigRational(1), BigRational(-2), BigRational(2));
    CHECK(e.Lk == e.Mk);
    CHECK_THROWS_AS(solve_a1(e, SolveBranch::plus), DegenerateQuadratic);
}

TEST_CASE("conference parameters admit exactly the four closed-form families") {
    ClassificationReport rep = classify_params(params_from_nklm(9, 4, 1, 2));
    CHECK_FALSE(rep.rejected());
    REQUIRE(rep.solutions.size() == 4);
    std::set<std::string> expected{"ia_plus", "ia_minus", "ib_plus", "ib_minus"};
    CHECK(solution_families(rep) == expected);
    CHECK(std::set<std::string>(rep.oracle_families.begin(), rep.oracle_families.end()) == expected);
    for (const auto& s : rep.solutions) {
        CHECK(s.verified);
        CoreWeights w = theorem_weights(*rep.params, family_from_string(s.family));
        CHECK(s.w.w0 == w.w0);
        CHECK(s.w.w1 == w.w1);
        CHECK(s.w.w2 == w.w2);
    }
    CHECK(rep.branches.size() == 2);
}

TEST_CASE("real-eigenvalue family parameters admit exactly the real solution") {
    ClassificationReport rep = classify_params(params_from_nklm(15, 8, 4, 4));
    REQUIRE(rep.solutions.size() == 1);
    CHECK(rep.solutions[0].family == "ii");
    CHECK(rep.solutions[0].verified);
    CHECK(rep.solutions[0].w.w0 == QuadExt(1));
    CHECK(rep.solutions[0].w.w1 == QuadExt(-1));
    CHECK(rep.solutions[0].w.w2 == QuadExt(1));
    CHECK(rep.oracle_families == std::vector<std::string>{"ii"});
}

TEST_CASE("parameters with no solutions report the filter that fired") {
    ClassificationReport petersen = classify_params(params_from_nklm(10, 3, 0, 1));
    CHECK(petersen.solutions.empty());
    CHECK(std::count(petersen.filters.begin(), petersen.filters.end(), "S_negative") == 1);
    CHECK(petersen.oracle_families.empty());

    ClassificationReport moore = classify_params(params_from_nklm(50, 7, 0, 1));
    CHECK(moore.solutions.empty());
    CHECK(std::count(moore.filters.begin(), moore.filters.end(), "bound:n_bound_s") == 1);

    ClassificationReport t5 = classify_params(params_from_nklm(10, 6, 3, 4));
    CHECK(t5.solutions.empty());
    CHECK_FALSE(t5.filters.empty());
}

TEST_CASE("infeasible tuples become rejection reports") {
    ClassificationReport rep = classify_tuple(15, 7, 3, 3);
    CHECK(rep.rejected());
    CHECK(rep.rejection_code == "m1_not_integral");
    CHECK(rep.rejection_witness == "21/4");
    CHECK(rep.input == std::array<BigInt, 4>{15, 7, 3, 3});

    CHECK(classify_tuple(35, 17, 8, 8).rejection_witness == "85/6");
    CHECK(classify_tuple(6, 3, 0, 3).rejection_code == "s_eq_minus_one");
    CHECK(classify_tuple(8, 3, 1, 1).rejection_code == "identity_violation");
    CHECK_FALSE(classify_tuple(9, 4, 1, 2).rejected());
}

TEST_CASE("scan replays the frozen landscape up to order fifty") {
    ScanResult sc = scan(50, 1);
    CHECK(sc.feasible == static_cast<long>(sc.reports.size()));
    CHECK(sc.tuples_examined >= sc.feasible);

    std::vector<long> conference_n;
    std::vector<std::array<long, 4>> real_family;
    std::set<std::string> seen_inputs;
    for (const auto& rep : sc.reports) {
        REQUIRE_FALSE(rep.rejected());
        std::string key;
        for (const auto& v : rep.input) key += v.str() + ",";
        CHECK(seen_inputs.insert(key).second);
        if (rep.solutions.size() == 4) {
            CHECK(rep.params->conference);
            conference_n.push_back(static_cast<long>(rep.params->n));
        } else if (rep.solutions.size() == 1) {
            real_family.push_back({static_cast<long>(rep.params->n), static_cast<long>(rep.params->k1),
                                   static_cast<long>(rep.params->lambda), static_cast<long>(rep.params->mu)});
        } else {
            CHECK(rep.solutions.empty());
        }
    }

    std::vector<long> expected_conference;
    for (const auto& v : fixtures()["scan300"]["conference_n"])
        if (v.get<long>() <= 50) expected_conference.push_back(v.get<long>());
    CHECK(conference_n == expected_conference);

    std::vector<std::array<long, 4>> expected_real;
    for (const auto& v : fixtures()["scan300"]["theorem_ii"])
        if (v[0].get<long>() <= 50)
            expected_real.push_back({v[0].get<long>(), v[1].get<long>(), v[2].get<long>(), v[3].get<long>()});
    CHECK(real_family == expected_real);

    // both graphs on ten vertices appear: the two tuple classes are distinct
    CHECK(seen_inputs.count("10,3,0,1,") == 1);
    CHECK(seen_inputs.count("10,6,3,4,") == 1);
}

TEST_CASE("parallel scan is deterministic") {
    ScanResult one = scan(40, 1);
    ScanResult four = scan(40, 4);
    CHECK(to_json(one) == to_json(four));
}
