#include "srgh/json_io.hpp"

#include <chrono>
#include <ctime>

#include "srgh/version.hpp"

namespace srgh {

namespace {

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    return BigInt(j.get<std::string>());
}

}  // namespace

Json to_json(const QuadExt& x) {
    return Json{{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"d", x.d().str()}};
}

QuadExt quadext_from_json(const Json& j) {
    if (j.is_string()) return QuadExt(rational_from_string(j.get<std::string>()));
    if (j.is_number_integer()) return QuadExt(BigRational(j.get<long long>()));
    BigRational a = rational_from_string(j.at("a").get<std::string>());
    BigRational b = j.contains("b") ? rational_from_string(j.at("b").get<std::string>())
                                    : BigRational(0);
    BigInt d = j.contains("d") ? bigint_from_json(j.at("d")) : BigInt(0);
    return QuadExt(a, b, d);
}

Json to_json(const SrgParams& p) {
    return Json{{"n", p.n.str()},
                {"k1", p.k1.str()},
                {"k2", p.k2.str()},
                {"lambda", p.lambda.str()},
                {"mu", p.mu.str()},
                {"r", to_json(p.r)},
                {"s", to_json(p.s)},
                {"m1", to_string(p.m1)},
                {"m2", to_string(p.m2)},
                {"conference", p.conference},
                {"complemented", p.swapped}};
}

Json to_json(const CoreWeights& w) {
    return Json{{"w0", to_json(w.w0)}, {"w1", to_json(w.w1)}, {"w2", to_json(w.w2)}};
}

CoreWeights weights_from_json(const Json& j) {
    CoreWeights w;
    w.w0 = quadext_from_json(j.at("w0"));
    w.w1 = quadext_from_json(j.at("w1"));
    w.w2 = quadext_from_json(j.at("w2"));
    return w;
}

Json to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"order", m.n}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
    ComplexMatrix m;
    m.n = j.at("order").get<int>();
    if (m.n <= 0) throw Error("matrix order must be positive");
    const Json& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != m.n) throw Error("entry row count differs from order");
    m.e.reserve(static_cast<size_t>(m.n) * m.n);
    for (const Json& row : rows) {
        if (static_cast<int>(row.size()) != m.n)
            throw Error("entry column count differs from order");
        for (const Json& cell : row) m.e.push_back(quadext_from_json(cell));
    }
    return m;
}

Json to_json(const GramOutcome& g) {
    Json j{{"ok", g.ok}};
    if (!g.ok) {
        j["row"] = g.i;
        j["col"] = g.j;
        j["inner_product"] = to_json(g.inner);
        j["expected"] = g.expected;
    }
    return j;
}

Json to_json(const SpectralOutcome& s) {
    Json j{{"ok", s.ok}};
    if (!s.ok) {
        j["k"] = s.k;
        j["which"] = s.which;
        j["value"] = to_json(s.value);
    }
    return j;
}

Json to_json(const FeasibilityResult& f) {
    Json j{{"pass", f.pass}};
    if (!f.pass) {
        j["bound"] = f.bound_id;
        j["detail"] = f.detail;
    }
    return j;
}

Json to_json(const CandidateSolution& c) {
    return Json{{"weights", to_json(c.w)},
                {"family", c.family},
                {"signs", Json{c.eps[0], c.eps[1], c.eps[2]}},
                {"discriminant", c.discriminant.str()},
                {"verified", c.verified}};
}

Json to_json(const ClassificationReport& r) {
    Json j;
    j["input"] = Json{r.input[0].str(), r.input[1].str(), r.input[2].str(), r.input[3].str()};
    if (r.rejected()) {
        j["accepted"] = false;
        j["rejection"] = Json{{"code", r.rejection_code}, {"witness", r.rejection_witness}};
        return j;
    }
    j["accepted"] = true;
    j["params"] = to_json(*r.params);
    j["filters"] = r.filters;
    Json branches = Json::array();
    for (const auto& b : r.branches)
        branches.push_back(Json{{"branch", b.branch},
                                {"a1", to_json(b.a1)},
                                {"a0", to_json(b.a0)},
                                {"a2", to_json(b.a2)}});
    j["branches"] = std::move(branches);
    Json sols = Json::array();
    for (const auto& s : r.solutions) sols.push_back(to_json(s));
    j["solutions"] = std::move(sols);
    j["closed_form_families"] = r.oracle_families;
    return j;
}

Json to_json(const ScanResult& s) {
    Json reports = Json::array();
    for (const auto& r : s.reports) reports.push_back(to_json(r));
    return Json{{"tuples_examined", s.tuples_examined},
                {"feasible", s.feasible},
                {"reports", std::move(reports)}};
}

Json to_json(const AuditResult& a) {
    Json fails = Json::array();
    for (const auto& f : a.failures)
        fails.push_back(Json{{"point", f.point}, {"detail", f.detail}});
    return Json{{"id", a.id},
                {"grid", a.grid},
                {"points_checked", a.points_checked},
                {"applicable", a.applicable},
                {"passed", a.passed},
                {"failures", std::move(fails)}};
}

Json to_json(const RatPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return coeffs;
}

RatPoly poly_from_json(const Json& j) {
    std::vector<BigRational> c;
    for (const Json& cell : j) {
        if (cell.is_string())
            c.push_back(rational_from_string(cell.get<std::string>()));
        else
            c.push_back(BigRational(cell.get<long long>()));
    }
    return RatPoly(std::move(c));
}

Json to_json(const SturmChain& c) {
    Json polys = Json::array();
    for (const auto& p : c.polys) polys.push_back(to_json(p));
    Json degs = Json::array();
    for (int d : c.degrees()) degs.push_back(d);
    Json lead = Json::array();
    for (int s : c.leading_signs()) lead.push_back(s);
    Json alt = Json::array();
    for (int s : c.alternating_signs()) alt.push_back(s);
    return Json{{"polynomials", std::move(polys)},
                {"degrees", std::move(degs)},
                {"signs_at_plus_infinity", std::move(lead)},
                {"signs_at_minus_infinity", std::move(alt)}};
}

Json certificate(const std::string& kind, const Json& inputs, const Json& result) {
    return Json{{"kind", kind},
                {"tool", Json{{"name", kToolName}, {"version", kToolVersion}}},
                {"exact_arithmetic", true},
                {"inputs", inputs},
                {"result", result},
                {"timestamp", iso_timestamp()}};
}

}  // namespace srgh
