#include "srgh/hadamard.hpp"

#include <cassert>

namespace srgh {

namespace {

// w * conj(v) + v * conj(w): rational for any two unit elements of one field
BigRational cross_term(const QuadExt& w, const QuadExt& v) {
    QuadExt x = w * v.conj() + v * w.conj();
    return x.rational_value();
}

}  // namespace

void CoreWeights::validate() const {
    for (const QuadExt* w : {&w0, &w1, &w2})
        if (!w->is_unit_modulus()) throw Error("weight is not unit modulus: " + w->str());
    if (w1 == w2) throw Error("w1 and w2 must differ");
    discriminant();  // throws if the fields are incompatible
}

BigInt CoreWeights::discriminant() const {
    BigInt d = 0;
    for (const QuadExt* w : {&w0, &w1, &w2}) {
        if (w->d() == 0) continue;
        if (d == 0) d = w->d();
        else if (d != w->d())
            throw IncompatibleField("weights span different fields");
    }
    return d;
}

ComplexMatrix build_core(const RelationMatrix& g, const CoreWeights& w) {
    w.validate();
    ComplexMatrix m;
    m.n = g.n;
    m.e.resize(static_cast<size_t>(g.n) * g.n);
    const QuadExt* by_rel[3] = {&w.w0, &w.w1, &w.w2};
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) m.at(i, j) = *by_rel[g.at(i, j)];
    return m;
}

ComplexMatrix build_bordered(const ComplexMatrix& core) {
    ComplexMatrix w;
    w.n = core.n + 1;
    w.e.assign(static_cast<size_t>(w.n) * w.n, QuadExt(1));
    for (int i = 0; i < core.n; ++i)
        for (int j = 0; j < core.n; ++j) w.at(i + 1, j + 1) = core.at(i, j);
    return w;
}

GramOutcome verify_gram(const ComplexMatrix& w) {
    const QuadExt target(BigRational(w.n));
    for (int i = 0; i < w.n; ++i)
        for (int j = i; j < w.n; ++j) {
            QuadExt inner;
            for (int t = 0; t < w.n; ++t) inner += w.at(i, t) * w.at(j, t).conj();
            const QuadExt& expect = i == j ? target : QuadExt(0);
            if (inner != expect) {
                GramOutcome out;
                out.ok = false;
                out.i = i;
                out.j = j;
                out.inner = inner;
                out.expected = expect.str();
                return out;
            }
        }
    return {};
}

BigRational SchemeData::order() const {
    BigRational n(0);
    for (const auto& kj : k) n += kj;
    return n;
}

SchemeData scheme_from_params(const SrgParams& p) {
    SchemeData sc;
    sc.d = 2;
    sc.k = {BigRational(1), BigRational(p.k1), BigRational(p.k2)};
    auto P = eigenmatrix(p);
    sc.P.resize(3);
    for (int i = 0; i < 3; ++i) sc.P[i] = {P[i][0], P[i][1], P[i][2]};
    return sc;
}

QuadExt beta(const SchemeData& sc, const std::vector<QuadExt>& w, int k) {
    assert(static_cast<int>(w.size()) == sc.d + 1);
    QuadExt acc;
    for (int j = 0; j <= sc.d; ++j) acc += w[j] * sc.P[k][j];
    return acc;
}

QuadExt beta_abs_sq(const SchemeData& sc, const std::vector<QuadExt>& w, int k) {
    // |beta_k|^2 = sum_j P_kj^2 + sum_{j<j'} P_kj P_kj' (w_j conj(w_j') + w_j' conj(w_j));
    // the cross factors are rational, so the sum stays in the eigenvalue field.
    QuadExt acc;
    for (int j = 0; j <= sc.d; ++j) acc += sc.P[k][j] * sc.P[k][j];
    for (int j = 0; j <= sc.d; ++j)
        for (int j2 = j + 1; j2 <= sc.d; ++j2)
            acc += sc.P[k][j] * sc.P[k][j2] * QuadExt(cross_term(w[j], w[j2]));
    return acc;
}

SpectralOutcome verify_spectral(const SchemeData& sc, const std::vector<QuadExt>& w) {
    for (const auto& wj : w)
        if (!wj.is_unit_modulus()) throw Error("weight is not unit modulus: " + wj.str());
    QuadExt e0(1);
    for (int j = 0; j <= sc.d; ++j) e0 += QuadExt(sc.k[j]) * w[j];
    if (!e0.is_zero()) return {false, 0, "row_sum", e0};
    QuadExt np1(sc.order() + 1);
    for (int k = 1; k <= sc.d; ++k) {
        QuadExt diff = beta_abs_sq(sc, w, k) - np1;
        if (!diff.is_zero()) return {false, k, "modulus", diff};
    }
    return {};
}

QuadExt eval_ek(const SchemeData& sc, const std::vector<QuadExt>& w, int k) {
    if (k == 0) {
        QuadExt e0(1);
        for (int j = 0; j <= sc.d; ++j) e0 += QuadExt(sc.k[j]) * w[j];
        return e0;
    }
    QuadExt inner = beta_abs_sq(sc, w, k) - QuadExt(sc.order() + 1);
    if (inner.is_zero()) return QuadExt(0);
    QuadExt prod(1);
    for (int j = 0; j <= sc.d; ++j) prod *= w[j];
    if (inner.is_rational() || prod.is_rational()) return prod * inner;
    throw IncompatibleField("e_" + std::to_string(k) + " is nonzero and lies outside every quadratic field");
}

bool ek_vanishes(const SchemeData& sc, const std::vector<QuadExt>& w, int k) {
    if (k == 0) {
        QuadExt e0(1);
        for (int j = 0; j <= sc.d; ++j) e0 += QuadExt(sc.k[j]) * w[j];
        return e0.is_zero();
    }
    return (beta_abs_sq(sc, w, k) - QuadExt(sc.order() + 1)).is_zero();
}

WeightFamily family_from_string(const std::string& name) {
    if (name == "ia_plus") return WeightFamily::ia_plus;
    if (name == "ia_minus") return WeightFamily::ia_minus;
    if (name == "ib_plus") return WeightFamily::ib_plus;
    if (name == "ib_minus") return WeightFamily::ib_minus;
    if (name == "ii") return WeightFamily::ii;
    throw Error("unknown weight family: " + name);
}

std::string family_name(WeightFamily f) {
    switch (f) {
        case WeightFamily::ia_plus: return "ia_plus";
        case WeightFamily::ia_minus: return "ia_minus";
        case WeightFamily::ib_plus: return "ib_plus";
        case WeightFamily::ib_minus: return "ib_minus";
        case WeightFamily::ii: return "ii";
    }
    return "?";
}

CoreWeights theorem_weights(const SrgParams& p, WeightFamily f) {
    CoreWeights w;
    if (f == WeightFamily::ii) {
        // needs integer r >= 2, s = -r, k1 = 2r^2
        bool ok = p.r.is_rational() && p.s.is_rational() && den(p.r.a()) == 1 &&
                  p.r.a() >= 2 && p.s.a() == -p.r.a() &&
                  BigRational(p.k1) == 2 * p.r.a() * p.r.a();
        if (!ok) throw FamilyNotApplicable("needs k1 = 2r^2 with integer r >= 2 and s = -r");
        w.w0 = QuadExt(1);
        w.w1 = QuadExt(-1);
        w.w2 = QuadExt(1);
        return w;
    }
    if (!p.conference) throw FamilyNotApplicable("needs conference parameters");
    bool plus = f == WeightFamily::ia_plus || f == WeightFamily::ib_plus;
    if (f == WeightFamily::ia_plus || f == WeightFamily::ia_minus) {
        w.w0 = QuadExt(-1);
        w.w1 = QuadExt(BigRational(0), BigRational(plus ? 1 : -1), BigInt(-1));
        w.w2 = w.w1.conj();
        return w;
    }
    // family ib: w1 = (-1 ± i sqrt(k1^2 - 1)) / k1 with k1 = 2r(r+1)
    BigRational k1(p.k1);
    w.w0 = QuadExt(1);
    QuadExt root = QuadExt::sqrt_of(1 - k1 * k1);  // i*sqrt(k1^2-1)
    w.w1 = (QuadExt(-1) + (plus ? root : -root)) / QuadExt(k1);
    w.w2 = w.w1.conj();
    return w;
}

std::vector<std::pair<WeightFamily, CoreWeights>> applicable_families(const SrgParams& p) {
    std::vector<std::pair<WeightFamily, CoreWeights>> out;
    for (WeightFamily f : {WeightFamily::ia_plus, WeightFamily::ia_minus, WeightFamily::ib_plus,
                           WeightFamily::ib_minus, WeightFamily::ii}) {
        try {
            out.emplace_back(f, theorem_weights(p, f));
        } catch (const FamilyNotApplicable&) {
        }
    }
    return out;
}

}  // namespace srgh
