#include "srgh/classify.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <thread>
#include <tuple>

namespace srgh {

namespace {

// constant term of the linear relation fixing a0:
// 2 rs (k+rs)^2 a0 = 2 k^2 (k+rs)^2 a1 - h0
BigRational h0_value(const BigRational& k, const BigRational& e1, const BigRational& e2) {
    BigRational k2 = k * k, k3 = k2 * k, k4 = k3 * k, k5 = k4 * k;
    return -k5 + (e1 - 2 * e2 + 1) * k4 + 3 * e2 * (e1 + 1) * k3 -
           e2 * (e1 * e1 + 2 * e1 - 1) * k2 + 4 * e2 * e2 * k + 2 * e2 * e2 * e2;
}

// constant term of the linear relation fixing a2:
// 2 (k+rs) T a2 = 2 (k+rs)^3 a1 + l0
BigRational l0_value(const BigRational& k, const BigRational& e1, const BigRational& e2) {
    return k * (k - e1 - 1) * (k * k + 2 * e2 * k - e2 * (e1 + 1));
}

bool within_unit_interval(const QuadExt& x) {
    return compare_real(x, QuadExt(-1)) >= 0 && compare_real(x, QuadExt(1)) <= 0;
}

void label_solutions(ClassificationReport& rep, const SrgParams& p) {
    auto oracle = theorem_oracle(p);
    for (auto& sol : rep.solutions) {
        for (const auto& [name, w] : oracle) {
            if (sol.w.w0 == w.w0 && sol.w.w1 == w.w1 && sol.w.w2 == w.w2) {
                sol.family = name;
                break;
            }
        }
    }
}

void check_against_oracle(const ClassificationReport& rep) {
    if (!rep.params) return;
    std::multiset<std::string> found, expected(rep.oracle_families.begin(),
                                               rep.oracle_families.end());
    for (const auto& sol : rep.solutions) found.insert(sol.family);
    if (found != expected) {
        std::string msg = "solutions {";
        for (const auto& f : found) msg += f + " ";
        msg += "} vs closed-form {";
        for (const auto& f : expected) msg += f + " ";
        msg += "} at n=" + rep.params->n.str() + " k1=" + rep.params->k1.str() +
               " lambda=" + rep.params->lambda.str() + " mu=" + rep.params->mu.str();
        throw OracleMismatch(msg);
    }
}

}  // namespace

SignFilterOutcome sign_filter(const LmsEvaluation& e) {
    SignFilterOutcome out;
    if (sgn(e.Sk) < 0) return out;
    out.s_nonneg = true;
    out.sqrt_s = QuadExt::sqrt_of(e.Sk);
    QuadExt half = out.sqrt_s / QuadExt(2);
    QuadExt lo(e.Mk), hi(e.Lk);
    out.plus_ok = compare_real(lo, half) <= 0 && compare_real(half, hi) <= 0;
    QuadExt neg_half = -half;
    out.minus_ok = compare_real(lo, neg_half) <= 0 && compare_real(neg_half, hi) <= 0;
    return out;
}

QuadExt solve_a1(const LmsEvaluation& e, SolveBranch branch) {
    if (sgn(e.Sk) < 0) throw NegativeInput("S(k1) < 0, no real a1");
    BigRational denom = e.Lk - e.Mk;
    if (denom == 0) throw DegenerateQuadratic("L(k1) = M(k1)");
    QuadExt root = QuadExt::sqrt_of(e.Sk);
    QuadExt numer = QuadExt(-(e.Lk + e.Mk)) + (branch == SolveBranch::plus ? root : -root);
    return numer / QuadExt(denom);
}

std::pair<QuadExt, QuadExt> solve_a0_a2(const LmsEvaluation& e, const QuadExt& a1) {
    const BigRational& k = e.k1;
    const BigRational& e1 = e.rps;
    const BigRational& e2 = e.rs;
    if (e2 == 0) throw SingularLinearSolve("rs = 0");
    BigRational kpe2 = k + e2;
    if (kpe2 == 0) throw SingularLinearSolve("k1 + rs = 0");
    if (e.T == 0) throw SingularLinearSolve("r(r+1)s(s+1) = 0");
    BigRational kpe2_sq = kpe2 * kpe2;
    BigRational h0 = h0_value(k, e1, e2);
    BigRational l0 = l0_value(k, e1, e2);
    QuadExt a0 = (QuadExt(2 * k * k * kpe2_sq) * a1 - QuadExt(h0)) / QuadExt(2 * e2 * kpe2_sq);
    QuadExt a2 = (QuadExt(2 * kpe2_sq * kpe2) * a1 + QuadExt(l0)) / QuadExt(2 * kpe2 * e.T);
    return {a0, a2};
}

std::vector<CandidateSolution> lift_to_unit_circle(const SrgParams& p, const QuadExt& a0,
                                                   const QuadExt& a1, const QuadExt& a2) {
    std::array<QuadExt, 3> a{a0, a1, a2};
    std::array<BigRational, 3> av;
    for (int j = 0; j < 3; ++j) {
        if (!a[j].is_rational())
            throw MixedDiscriminants("irrational real part a" + std::to_string(j) + " = " +
                                     a[j].str());
        av[j] = a[j].rational_value();
    }

    std::array<QuadExt, 3> imag;  // principal i*sqrt(1 - a_j^2)
    std::vector<int> free_pos;
    BigInt common_d = 0;
    for (int j = 0; j < 3; ++j) {
        BigRational t = 1 - av[j] * av[j];
        if (sgn(t) < 0)
            throw NegativeInput("real part a" + std::to_string(j) + " = " + to_string(av[j]) +
                                " exceeds unit modulus");
        if (sgn(t) == 0) continue;
        imag[j] = QuadExt::sqrt_of(-t);
        if (common_d == 0)
            common_d = imag[j].d();
        else if (common_d != imag[j].d())
            throw MixedDiscriminants("weight discriminants " + common_d.str() + " and " +
                                     imag[j].d().str());
        free_pos.push_back(j);
    }

    SchemeData sc = scheme_from_params(p);
    std::vector<CandidateSolution> out;
    size_t combos = size_t{1} << free_pos.size();
    for (size_t mask = 0; mask < combos; ++mask) {
        std::array<QuadExt, 3> w{QuadExt(av[0]), QuadExt(av[1]), QuadExt(av[2])};
        std::array<int, 3> eps{0, 0, 0};
        for (size_t idx = 0; idx < free_pos.size(); ++idx) {
            int j = free_pos[idx];
            eps[j] = ((mask >> idx) & 1) ? 1 : -1;
            w[j] = eps[j] > 0 ? QuadExt(av[j]) + imag[j] : QuadExt(av[j]) - imag[j];
        }
        if (w[1] == w[2]) continue;
        std::vector<QuadExt> wv{w[0], w[1], w[2]};
        bool keep = true;
        for (int k = 0; k <= sc.d && keep; ++k) keep = ek_vanishes(sc, wv, k);
        if (!keep) continue;
        CandidateSolution sol;
        sol.w = CoreWeights{w[0], w[1], w[2]};
        sol.w.validate();
        sol.eps = eps;
        sol.discriminant = sol.w.discriminant();
        out.push_back(std::move(sol));
    }
    return out;
}

std::vector<std::pair<std::string, CoreWeights>> theorem_oracle(const SrgParams& p) {
    std::vector<std::pair<std::string, CoreWeights>> out;
    for (const auto& [f, w] : applicable_families(p)) out.emplace_back(family_name(f), w);
    return out;
}

ClassificationReport classify_params(const SrgParams& p) {
    ClassificationReport rep;
    rep.params = p;
    rep.input = {p.n, p.k1, p.lambda, p.mu};
    for (const auto& [name, w] : theorem_oracle(p)) rep.oracle_families.push_back(name);

    FeasibilityResult fb = feasibility_bounds(p);
    if (!fb.pass) {
        rep.filters.push_back("bound:" + fb.bound_id);
        return rep;
    }

    LmsEvaluation e = lms_at_k1(p);
    SignFilterOutcome sf = sign_filter(e);
    if (!sf.s_nonneg) {
        rep.filters.push_back("S_negative");
        return rep;
    }
    std::vector<SolveBranch> branches;
    if (sf.plus_ok) branches.push_back(SolveBranch::plus);
    // a double root of the quadratic gives one branch, not two
    if (sf.minus_ok && (e.Sk != 0 || !sf.plus_ok)) branches.push_back(SolveBranch::minus);
    if (branches.empty()) {
        rep.filters.push_back("sandwich_failed");
        return rep;
    }

    SchemeData sc = scheme_from_params(p);
    for (SolveBranch branch : branches) {
        const std::string tag = branch_name(branch);
        QuadExt a1 = solve_a1(e, branch);
        if (!within_unit_interval(a1)) {
            rep.filters.push_back("a1_out_of_range:" + tag);
            continue;
        }
        QuadExt a0, a2;
        try {
            std::tie(a0, a2) = solve_a0_a2(e, a1);
        } catch (const SingularLinearSolve&) {
            rep.filters.push_back("singular_solve:" + tag);
            continue;
        }
        if (!within_unit_interval(a0) || !within_unit_interval(a2)) {
            rep.filters.push_back("a_out_of_range:" + tag);
            continue;
        }
        rep.branches.push_back({tag, a1, a0, a2});

        std::vector<CandidateSolution> cand;
        try {
            cand = lift_to_unit_circle(p, a0, a1, a2);
        } catch (const MixedDiscriminants&) {
            rep.filters.push_back("mixed_discriminants:" + tag);
            continue;
        }
        if (cand.empty()) rep.filters.push_back("no_unit_solution:" + tag);
        for (auto& c : cand) {
            bool dup = std::any_of(rep.solutions.begin(), rep.solutions.end(),
                                   [&](const CandidateSolution& s) {
                                       return s.w.w0 == c.w.w0 && s.w.w1 == c.w.w1 &&
                                              s.w.w2 == c.w.w2;
                                   });
            if (dup) continue;
            SpectralOutcome so = verify_spectral(sc, {c.w.w0, c.w.w1, c.w.w2});
            if (!so.ok)
                throw Error("internal: lifted solution fails spectral check at k=" +
                            std::to_string(so.k));
            c.verified = true;
            rep.solutions.push_back(std::move(c));
        }
    }

    label_solutions(rep, p);
    return rep;
}

ClassificationReport classify_tuple(const BigInt& n, const BigInt& k1, const BigInt& lambda,
                                    const BigInt& mu) {
    try {
        SrgParams p = params_from_nklm(n, k1, lambda, mu);
        ClassificationReport rep = classify_params(p);
        rep.input = {n, k1, lambda, mu};
        return rep;
    } catch (const InfeasibleParams& ex) {
        ClassificationReport rep;
        rep.input = {n, k1, lambda, mu};
        rep.rejection_code = ex.code;
        rep.rejection_witness = ex.witness;
        return rep;
    }
}

namespace {

struct ShardOutcome {
    std::vector<ClassificationReport> reports;
    long examined = 0;
    long feasible = 0;
};

// all candidate tuples for one n: k1(k1 - lambda - 1) = k2 mu must have an
// integer solution mu in [0, k1]
ShardOutcome scan_order(long n) {
    ShardOutcome out;
    std::set<std::tuple<BigInt, BigInt, BigInt, BigInt>> seen;
    for (long k1 = 1; k1 + 1 < n; ++k1) {
        long k2 = n - 1 - k1;
        for (long lam = 0; lam < k1; ++lam) {
            long num = k1 * (k1 - lam - 1);
            if (num % k2 != 0) continue;
            long mu = num / k2;
            if (mu < 0 || mu > k1) continue;
            ++out.examined;
            SrgParams p;
            try {
                p = params_from_nklm(n, k1, lam, mu);
            } catch (const InfeasibleParams&) {
                continue;
            }
            auto key = std::make_tuple(p.n, p.k1, p.lambda, p.mu);
            if (!seen.insert(key).second) continue;
            ++out.feasible;
            ClassificationReport rep = classify_params(p);
            rep.input = {BigInt(n), BigInt(k1), BigInt(lam), BigInt(mu)};
            check_against_oracle(rep);
            out.reports.push_back(std::move(rep));
        }
    }
    return out;
}

}  // namespace

ScanResult scan(long n_max, int jobs) {
    if (jobs < 1) jobs = 1;
    std::vector<ShardOutcome> shard(static_cast<size_t>(jobs));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
    auto worker = [&](int t) {
        try {
            for (long n = 5 + t; n <= n_max; n += jobs) {
                ShardOutcome one = scan_order(n);
                auto& mine = shard[static_cast<size_t>(t)];
                mine.examined += one.examined;
                mine.feasible += one.feasible;
                for (auto& r : one.reports) mine.reports.push_back(std::move(r));
            }
        } catch (...) {
            errors[static_cast<size_t>(t)] = std::current_exception();
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    ScanResult res;
    for (auto& sh : shard) {
        res.tuples_examined += sh.examined;
        res.feasible += sh.feasible;
        for (auto& r : sh.reports) res.reports.push_back(std::move(r));
    }
    std::sort(res.reports.begin(), res.reports.end(),
              [](const ClassificationReport& x, const ClassificationReport& y) {
                  const SrgParams& a = *x.params;
                  const SrgParams& b = *y.params;
                  return std::tie(a.n, a.k1, a.lambda, a.mu) < std::tie(b.n, b.k1, b.lambda, b.mu);
              });
    return res;
}

}  // namespace srgh
