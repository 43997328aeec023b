#include "srgh/audit.hpp"

#include <random>
#include <sstream>

#include "srgh/srg.hpp"

namespace srgh {

namespace {

std::string point_rs(const BigRational& r, const BigRational& s) {
    return "(r=" + to_string(r) + ", s=" + to_string(s) + ")";
}

void record(AuditResult& res, const std::string& point, const std::string& detail) {
    res.failures.push_back({point, detail});
}

BigRational rand_pos_rational(std::mt19937_64& rng, long max_num, long max_den) {
    long p = 1 + static_cast<long>(rng() % static_cast<unsigned long long>(max_num));
    long q = 1 + static_cast<long>(rng() % static_cast<unsigned long long>(max_den));
    return BigRational(p, q);
}

// M(z) <= +-sqrt(S(z))/2 <= L(z) for at least one sign
bool sandwich_at(const LmsForms& f, const BigRational& z) {
    BigRational Sz = f.S.eval(z);
    if (sgn(Sz) < 0) return false;
    QuadExt half = QuadExt::sqrt_of(Sz) / QuadExt(2);
    QuadExt lo(f.M.eval(z)), hi(f.L.eval(z));
    if (compare_real(lo, half) <= 0 && compare_real(half, hi) <= 0) return true;
    QuadExt neg = -half;
    return compare_real(lo, neg) <= 0 && compare_real(neg, hi) <= 0;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = poly_divrem(a, b).remainder;
        a = b;
        b = r.is_zero() ? r : r.content_normalized();
    }
    return a;
}

long count_in(const RatPoly& p, const QuadExt& lo) {
    return count_real_roots(p, Interval{lo, std::nullopt});
}

// iterates the integer grid r >= 3, s <= -2, r + s >= 1
template <typename Fn>
void for_grid_u_pos(long grid_max, Fn&& fn) {
    for (long r = 3; r <= grid_max; ++r)
        for (long s = -2; r + s >= 1 && -s <= grid_max; --s) fn(r, s);
}

AuditResult audit_factor_identities(const AuditOptions& opt) {
    AuditResult res;
    res.id = "factor-identities";
    res.grid = std::to_string(opt.samples) + " random rational pairs (r > 0, s < -1), seed " +
               std::to_string(opt.seed);
    std::mt19937_64 rng(opt.seed);
    RatPoly X = RatPoly::monomial(1, 1);
    for (int i = 0; i < opt.samples; ++i) {
        BigRational r = rand_pos_rational(rng, 24, 6);
        BigRational s = BigRational(-1) - rand_pos_rational(rng, 12, 6);
        ++res.points_checked;
        std::string pt = point_rs(r, s);
        LmsForms f = lms_general(r, s);
        CriticalQuadratics q = critical_quadratics(r, s);
        BigRational e2 = r * s;

        RatPoly shift = X + RatPoly::constant(e2);
        if (f.M != f.L - (shift * shift).scaled(4)) record(res, pt, "M != L - 4(X+rs)^2");
        RatPoly quarter_s = f.S.scaled(BigRational(1, 4));
        if (f.L * f.L - quarter_s != q.Qalpha * q.Qbeta * q.Qbeta)
            record(res, pt, "L^2 - S/4 != Qalpha * Qbeta^2");
        if (f.M * f.M - quarter_s != q.Qgamma * q.Qbeta1 * q.Qbeta1)
            record(res, pt, "M^2 - S/4 != Qgamma * Qbeta1^2");

        LmsForms conf = lms_general(r, BigRational(-1) - r);
        LmsForms conf2 = lms_conference(r * (r + 1));
        if (conf.L != conf2.L || conf.M != conf2.M || conf.S != conf2.S)
            record(res, pt, "general forms at s = -1-r differ from the r+s = -1 forms");
        LmsForms zero = lms_general(r, -r);
        LmsForms zero2 = lms_rs0(r);
        if (zero.L != zero2.L || zero.M != zero2.M || zero.S != zero2.S)
            record(res, pt, "general forms at s = -r differ from the r+s = 0 forms");
    }
    res.passed = res.failures.empty();
    return res;
}

AuditResult audit_critical_order(const AuditOptions& opt) {
    AuditResult res;
    res.id = "critical-order";
    res.grid = "integer r = 1.." + std::to_string(opt.grid_max) + ", s = -2..-" +
               std::to_string(opt.grid_max);
    for (long ri = 1; ri <= opt.grid_max; ++ri) {
        for (long si = -2; -si <= opt.grid_max; --si) {
            BigRational r(ri), s(si);
            ++res.points_checked;
            std::string pt = point_rs(r, s);
            try {
            BigRational e2 = r * s;
            BigRational T = r * (r + 1) * s * (s + 1);
            QuadExt edge(-e2);
            CriticalQuadratics q = critical_quadratics(r, s);
            CriticalPoints cp = critical_points(r, s);

            if (q.Qalpha.eval(-e2) != T || sgn(T) <= 0)
                record(res, pt, "Qalpha(-rs) != r(r+1)s(s+1) or T <= 0");
            if (count_in(q.Qalpha, edge) != 0) record(res, pt, "Qalpha has a root right of -rs");
            if (count_in(q.Qbeta, edge) != 1)
                record(res, pt, "Qbeta root count right of -rs != 1");
            if (count_in(q.Qgamma, edge) != 0) record(res, pt, "Qgamma has a root right of -rs");
            if (!q.Qbeta.eval(cp.beta_plus).is_zero()) record(res, pt, "Qbeta(beta+) != 0");
            if (!q.Qbeta1.eval(cp.beta_plus + QuadExt(1)).is_zero())
                record(res, pt, "Qbeta1(beta+ + 1) != 0");
            if (compare_real(cp.beta_minus, edge) >= 0) record(res, pt, "beta- >= -rs");
            if (compare_real(edge, cp.beta_plus) >= 0) record(res, pt, "beta+ <= -rs");
            if (compare_real(cp.beta_plus, cp.delta) >= 0) record(res, pt, "beta+ >= delta");
            if (cp.alpha_plus && compare_real(*cp.alpha_plus, edge) >= 0)
                record(res, pt, "alpha+ >= -rs");
            if (cp.gamma_plus && compare_real(*cp.gamma_plus, edge) >= 0)
                record(res, pt, "gamma+ >= -rs");
            } catch (const Error& ex) {
                record(res, pt, std::string("exception: ") + ex.what());
            }
        }
    }
    res.passed = res.failures.empty();
    return res;
}

AuditResult audit_values_at_neg_rs(const AuditOptions& opt) {
    AuditResult res;
    res.id = "values-at-neg-rs";
    res.grid = "integer r = 1.." + std::to_string(opt.grid_max) + ", s = -2..-" +
               std::to_string(opt.grid_max);
    for (long ri = 1; ri <= opt.grid_max; ++ri) {
        for (long si = -2; -si <= opt.grid_max; --si) {
            BigRational r(ri), s(si);
            ++res.points_checked;
            std::string pt = point_rs(r, s);
            LmsForms f = lms_general(r, s);
            BigRational x = -r * s;
            BigRational T = r * (r + 1) * s * (s + 1);
            BigRational Lx = f.L.eval(x), Mx = f.M.eval(x), Sx = f.S.eval(x);
            BigRational expect_l = T * ((2 * s + 1) * r + s + 1) / 2;
            if (Lx != expect_l || Mx != expect_l)
                record(res, pt, "L(-rs) or M(-rs) != T((2s+1)r+s+1)/2");
            if (sgn(Lx) >= 0) record(res, pt, "L(-rs) not negative");
            BigRational rps1 = r + s + 1;
            if (Sx != T * T * rps1 * rps1) record(res, pt, "S(-rs) != T^2 (r+s+1)^2");
            if (!(4 * Lx * Lx > Sx)) record(res, pt, "sqrt(S(-rs))/2 not below |L(-rs)|");
        }
    }
    res.passed = res.failures.empty();
    return res;
}

AuditResult audit_root_locations(const AuditOptions& opt) {
    AuditResult res;
    res.id = "root-locations";
    res.grid = "integer r = 3.." + std::to_string(opt.grid_max) + ", s = -2..1-r (r+s >= 1)";
    for_grid_u_pos(opt.grid_max, [&](long ri, long si) {
        BigRational r(ri), s(si);
        ++res.points_checked;
        std::string pt = point_rs(r, s);
        try {
        LmsForms f = lms_general(r, s);
        CriticalQuadratics q = critical_quadratics(r, s);
        CriticalPoints cp = critical_points(r, s);
        BigRational e2 = r * s;
        BigRational T = r * (r + 1) * s * (s + 1);
        QuadExt edge(-e2);

        if (q.Qalpha.eval(-e2) != T || count_in(q.Qalpha, edge) != 0)
            record(res, pt, "Qalpha not positive on (-rs, inf)");
        if (q.Qgamma.eval(-e2) != T || count_in(q.Qgamma, edge) != 0)
            record(res, pt, "Qgamma not positive on (-rs, inf)");
        if (count_in(f.L, edge) != 1 || sgn(f.L.eval(-e2)) >= 0)
            record(res, pt, "L does not cross zero exactly once right of -rs");
        if (count_in(f.M, edge) != 1 || sgn(f.M.eval(-e2)) >= 0)
            record(res, pt, "M does not cross zero exactly once right of -rs");
        if (poly_gcd(f.L, q.Qbeta).degree() != 0) record(res, pt, "L and Qbeta share a root");
        if (poly_gcd(f.M, q.Qbeta1).degree() != 0) record(res, pt, "M and Qbeta1 share a root");
        if (count_in(f.S, edge) != 2) record(res, pt, "S root count right of -rs != 2");
        long left = count_real_roots(f.S, Interval{cp.beta_plus, cp.delta});
        long right = count_real_roots(f.S, Interval{cp.delta, cp.beta_plus + QuadExt(1)});
        if (left != 1 || right != 1)
            record(res, pt, "S roots not pinned to (beta+, delta) and (delta, beta+ + 1)");

        // integer sandwich window: exactly {beta+, beta+ + 1} when 4T+1 is a
        // perfect square (both are then integers), empty otherwise
        BigRational fourT1 = 4 * T + 1;
        if (auto h = rational_sqrt(fourT1)) {
            ++res.applicable;
            BigRational bp = -e2 + (*h - 1) / 2;
            for (BigInt z = num(-e2) + 1; z <= num(bp) + 3; ++z) {
                bool hit = sandwich_at(f, BigRational(z));
                bool expected = z == num(bp) || z == num(bp) + 1;
                if (hit != expected)
                    record(res, pt, "integer sandwich window wrong at z = " + z.str());
            }
        } else {
            BigInt hi_root = isqrt_floor(num(fourT1));  // h < hi_root + 1
            BigInt z_lo = num(-e2) + 1;
            BigInt z_hi = num(-e2) + (hi_root + 3) / 2 + 2;  // past beta+ + 1
            for (BigInt z = z_lo; z <= z_hi; ++z) {
                if (sandwich_at(f, BigRational(z)))
                    record(res, pt, "integer sandwich at z = " + z.str());
            }
        }
        } catch (const Error& ex) {
            record(res, pt, std::string("exception: ") + ex.what());
        }
    });
    res.passed = res.failures.empty();
    return res;
}

AuditResult audit_conference_window(const AuditOptions& opt) {
    AuditResult res;
    res.id = "conference-window";
    res.grid = "r+s = -1 at rho = 1.." + std::to_string(opt.grid_max) + "; r+s = 0 at r = 2.." +
               std::to_string(opt.grid_max);
    RatPoly X = RatPoly::monomial(1, 1);
    for (long pi = 1; pi <= opt.grid_max; ++pi) {
        BigRational rho(pi);
        ++res.points_checked;
        std::string pt = "(rho=" + to_string(rho) + ")";
        LmsForms f = lms_conference(rho);
        BigRational k1 = 2 * rho;

        RatPoly s1(std::vector<BigRational>{16 * rho * rho * rho + rho,
                                            -(16 * rho * rho + 1), 4 * rho});
        if (f.S != -((X - RatPoly::constant(rho)) * s1))
            record(res, pt, "S != -(X - rho) * quadratic factor");

        QuadExt root = QuadExt::sqrt_of(4 * k1 * k1 + 1);
        QuadExt four_k1(4 * k1);
        QuadExt s_minus = (QuadExt(4 * k1 * k1 + 1) - root) / four_k1;
        QuadExt s_plus = (QuadExt(4 * k1 * k1 + 1) + root) / four_k1;
        if (!s1.eval(s_minus).is_zero() || !s1.eval(s_plus).is_zero())
            record(res, pt, "window endpoints are not roots of the quadratic factor");
        if (compare_real(QuadExt(k1 - 1), s_minus) >= 0 ||
            compare_real(s_minus, QuadExt(k1)) >= 0 ||
            compare_real(QuadExt(k1), s_plus) >= 0 ||
            compare_real(s_plus, QuadExt(k1 + 1)) >= 0)
            record(res, pt, "window not pinned between k1-1 and k1+1 around k1");
        if (compare_real(QuadExt(rho), s_minus) >= 0) record(res, pt, "rho >= lower endpoint");
        if (!sandwich_at(f, k1)) record(res, pt, "sandwich fails at z = k1");
        if (sandwich_at(f, k1 + 1)) record(res, pt, "sandwich holds at z = k1+1");
        if (k1 - 1 > rho && sandwich_at(f, k1 - 1)) record(res, pt, "sandwich holds at z = k1-1");
    }
    for (long ri = 2; ri <= opt.grid_max; ++ri) {
        BigRational r(ri);
        LmsForms f = lms_rs0(r);
        for (BigRational z = r * r + 1; z <= 2 * r * r + 3; z += 1) {
            ++res.points_checked;
            std::string pt = "(r=" + to_string(r) + ", z=" + to_string(z) + ")";
            bool expect = (z == 2 * r * r - 1) || (z == 2 * r * r);
            if (sandwich_at(f, z) != expect)
                record(res, pt, expect ? "sandwich expected but fails" : "unexpected sandwich");
            if ((f.S.eval(z) == 0) != expect)
                record(res, pt, "S(z) vanishing does not match the two-point window");
        }
    }
    res.passed = res.failures.empty();
    return res;
}

AuditResult audit_inequalities(const AuditOptions& opt) {
    AuditResult res;
    res.id = "inequalities";
    res.grid = "integer s = -2..-" + std::to_string(opt.grid_max) +
               " with -s+1 <= x <= -2s; integer r = 3.." + std::to_string(opt.grid_max) +
               ", s = -2..1-r";
    for (long si = -2; -si <= opt.grid_max; --si) {
        BigRational s(si);
        BigRational a = 2 * s + 1;
        for (BigRational x = -s + 1; x < -2 * s + 1; x += 1) {
            ++res.points_checked;
            BigRational kappa = a * a * x * x * x -
                                a * (8 * s * s * s - 2 * s * s - s + 2) * x * x -
                                (16 * s * s * s * s * s + 8 * s * s + 2 * s - 1) * x +
                                4 * s * s + s;
            if (sgn(kappa) >= 0)
                record(res, "(s=" + to_string(s) + ", x=" + to_string(x) + ")",
                       "cubic envelope not negative");
        }
    }
    for_grid_u_pos(opt.grid_max, [&](long ri, long si) {
        BigRational r(ri), s(si);
        ++res.points_checked;
        std::string pt = point_rs(r, s);
        try {
        BigRational u = r + s;
        BigRational psi = (s + 1) * (r + 1) * ((2 * s + 1) * r - 1);
        if (sgn(psi) <= 0) record(res, pt, "psi(r) not positive");
        BigRational phi = 2 * psi - (2 * s + 1) * (r + 2 * s - 1);
        if (sgn(phi) <= 0) record(res, pt, "phi(r) not positive");

        BigRational A = r * (r + 1) * (r - u) * (r - u - 1);  // = r(r+1)s(s+1)
        BigRational uu2 = u * (u + 2);
        BigRational g1 = 4 * uu2 * (uu2 - 2) * A + (u + 1) * (u + 1);
        BigRational g2 = 2 * A * (8 * uu2 * A + 7 * uu2 - 1) - 1;
        BigRational g3 = 16 * uu2 * A - 1;
        if (sgn(g1) <= 0 || sgn(g2) <= 0 || sgn(g3) <= 0)
            record(res, pt, "subresultant factor not positive");

        LmsForms f = lms_general(r, s);
        RatPoly spp = f.S.derivative().derivative();
        BigRational c1 = 3 * (u + 1) * (u + 1) * (2 * r * (r - u) - 1) +
                         3 * (r * (r + 1) + (r - u) * (r - u - 1));
        BigRational c2 = 12 * A * uu2 * (u * u + 2 * u - 2) + 3 * (u + 1) * (u + 1);
        // S has leading coefficient (u+1)^2, so S'' = 12(u+1)^2 X^2 - 4 c1 X + (c1^2-c2)/(3(u+1)^2)
        BigRational up1_sq = (u + 1) * (u + 1);
        RatPoly model(std::vector<BigRational>{(c1 * c1 - c2) / (3 * up1_sq), -4 * c1,
                                               12 * up1_sq});
        if (spp != model) record(res, pt, "S'' does not match its closed form");
        BigRational sum = c1 / (3 * up1_sq);
        BigRational prod = (c1 * c1 - c2) / (36 * up1_sq * up1_sq);
        BigRational rad = sum * sum - 4 * prod;
        if (sgn(rad) <= 0) {
            record(res, pt, "S'' root discriminant expression not positive");
        } else {
            QuadExt disc_rt = QuadExt::sqrt_of(rad);
            QuadExt tau_plus = (QuadExt(sum) + disc_rt) / QuadExt(2);
            QuadExt tau_minus = (QuadExt(sum) - disc_rt) / QuadExt(2);
            if (!spp.eval(tau_plus).is_zero() || !spp.eval(tau_minus).is_zero())
                record(res, pt, "closed-form points are not roots of S''");
            CriticalPoints cp = critical_points(r, s);
            if (compare_real(tau_plus, cp.beta_plus) >= 0) record(res, pt, "tau+ >= beta+");
        }

        SturmChain ch = sturm_chain(f.S);
        std::vector<int> want_deg{4, 3, 2, 1, 0};
        std::vector<int> want_lead{1, 1, 1, -1, -1};
        std::vector<int> want_alt{1, -1, 1, 1, -1};
        if (ch.degrees() != want_deg || ch.leading_signs() != want_lead ||
            ch.alternating_signs() != want_alt)
            record(res, pt, "chain degrees or sign rows differ from the table");
        if (count_real_roots(ch) != 2) record(res, pt, "S does not have exactly 2 real roots");
        if (ch.polys.size() == 5) {
            BigRational up1 = (u + 1) * (u + 1);
            if (ch.polys[2].leading() != g1 / (4 * up1))
                record(res, pt, "second remainder leading coefficient != g1/(4(u+1)^2)");
            BigRational c3 = -32 * u * u * up1 * (u + 2) * (u + 2) * A * g2 / (g1 * g1);
            if (ch.polys[3].leading() != c3)
                record(res, pt, "third remainder leading coefficient mismatch");
            BigRational c4 = -A * A * g1 * g1 * g3 / (4 * up1 * g2 * g2);
            if (ch.polys[4].leading() != c4)
                record(res, pt, "fourth remainder leading coefficient mismatch");
        }

        // near-integer eigenvalue windows exist only when 4T+1 is a square
        BigRational fourT1 = 4 * A + 1;
        if (auto h = rational_sqrt(fourT1)) {
            ++res.applicable;
            for (int e = -1; e <= 1; e += 2) {
                BigRational k1 = -r * s + (*h + e) / 2;
                BigRational k2 = k2_from_eigen(k1, QuadExt(r), QuadExt(s));
                BigRational n = 1 + k1 + k2;
                BigRational bound = -(2 * s + 1) * r + 2 + 2 * psi / (*h + 1);
                if (n < bound)
                    record(res, pt, "order bound fails at k1 = " + to_string(k1));
            }
        }
        } catch (const Error& ex) {
            record(res, pt, std::string("exception: ") + ex.what());
        }
    });
    res.passed = res.failures.empty();
    return res;
}

}  // namespace

std::vector<std::string> audit_ids() {
    return {"factor-identities", "critical-order",    "values-at-neg-rs",
            "root-locations",    "conference-window", "inequalities"};
}

AuditResult run_audit(const std::string& id, const AuditOptions& opt) {
    if (id == "factor-identities") return audit_factor_identities(opt);
    if (id == "critical-order") return audit_critical_order(opt);
    if (id == "values-at-neg-rs") return audit_values_at_neg_rs(opt);
    if (id == "root-locations") return audit_root_locations(opt);
    if (id == "conference-window") return audit_conference_window(opt);
    if (id == "inequalities") return audit_inequalities(opt);
    throw Error("unknown audit id: " + id);
}

std::vector<AuditResult> run_all_audits(const AuditOptions& opt) {
    std::vector<AuditResult> out;
    for (const auto& id : audit_ids()) out.push_back(run_audit(id, opt));
    return out;
}

}  // namespace srgh
