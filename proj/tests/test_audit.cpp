#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <srgh/audit.hpp>

#include "test_support.hpp"

using namespace srgh;

TEST_CASE("audit identifiers enumerate every check") {
    auto ids = audit_ids();
    CHECK(ids == std::vector<std::string>{"factor-identities", "critical-order", "values-at-neg-rs",
                                          "root-locations", "conference-window", "inequalities"});
    CHECK_THROWS_AS(run_audit("no-such-check", AuditOptions{}), Error);
}

TEST_CASE("every audit passes on a reduced grid") {
    AuditOptions opt;
    opt.grid_max = 8;
    opt.samples = 15;
    opt.seed = 42;
    for (const AuditResult& res : run_all_audits(opt)) {
        CAPTURE(res.id);
        std::string failure_text;
        for (const auto& f : res.failures) failure_text += f.point + " " + f.detail + "; ";
        CAPTURE(failure_text);
        CHECK(res.passed);
        CHECK(res.failures.empty());
        CHECK(res.points_checked > 0);
        CHECK_FALSE(res.grid.empty());
    }
}

TEST_CASE("sampled identity audits honor the requested sample count") {
    AuditOptions opt;
    opt.samples = 10;
    opt.seed = 7;
    AuditResult res = run_audit("factor-identities", opt);
    CHECK(res.passed);
    CHECK(res.points_checked == 10);
}

TEST_CASE("sampled identity audits are deterministic per seed") {
    AuditOptions opt;
    opt.samples = 5;
    opt.seed = 11;
    AuditResult a = run_audit("factor-identities", opt);
    AuditResult b = run_audit("factor-identities", opt);
    CHECK(to_json(a) == to_json(b));
}

TEST_CASE("integer window spot checks find applicable points") {
    // 4T + 1 = 41^2 at (r, s) = (14, -2), so the integer-window clause applies there
    AuditOptions opt;
    opt.grid_max = 14;
    AuditResult res = run_audit("root-locations", opt);
    std::string failure_text;
    for (const auto& f : res.failures) failure_text += f.point + " " + f.detail + "; ";
    CAPTURE(failure_text);
    CHECK(res.passed);
    CHECK(res.applicable >= 1);
}
