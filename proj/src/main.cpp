#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "srgh/audit.hpp"
#include "srgh/classify.hpp"
#include "srgh/graphs.hpp"
#include "srgh/json_io.hpp"
#include "srgh/version.hpp"

namespace {

using namespace srgh;

struct GraphFlags {
    long paley = 0;
    int triangular = 0;
    std::string from_file;
};

void add_graph_flags(CLI::App* cmd, GraphFlags& gf) {
    cmd->add_option("--paley", gf.paley, "Paley graph on GF(q), q prime or p^2, q = 1 mod 4");
    cmd->add_option("--triangular", gf.triangular, "triangular graph T(m), m >= 5");
    cmd->add_option("--from-file", gf.from_file, "relation matrix in text format");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RelationMatrix load_graph(const GraphFlags& gf) {
    int picked = (gf.paley > 0 ? 1 : 0) + (gf.triangular > 0 ? 1 : 0) +
                 (gf.from_file.empty() ? 0 : 1);
    if (picked != 1)
        throw UnsupportedOrder("choose exactly one of --paley, --triangular, --from-file");
    if (gf.paley > 0) return paley_graph(gf.paley);
    if (gf.triangular > 0) return triangular_graph(gf.triangular);
    return relation_from_text(read_file(gf.from_file));
}

Json graph_inputs(const GraphFlags& gf) {
    if (gf.paley > 0) return Json{{"paley", gf.paley}};
    if (gf.triangular > 0) return Json{{"triangular", gf.triangular}};
    return Json{{"file", gf.from_file}};
}

void emit(const Json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write " + out_path);
        out << text;
    }
}

CoreWeights resolve_weights(const SrgParams& p, const std::string& family,
                            const std::string& weights_json) {
    if (!family.empty() && !weights_json.empty())
        throw Error("give either --family or --weights, not both");
    if (!family.empty()) return theorem_weights(p, family_from_string(family));
    if (weights_json.empty()) throw Error("one of --family or --weights is required");
    CoreWeights w = weights_from_json(Json::parse(weights_json));
    w.validate();
    return w;
}

std::vector<BigInt> parse_ints_csv(const std::string& text, size_t expect) {
    std::vector<BigInt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw Error("empty field in '" + text + "'");
        out.emplace_back(item.substr(a, b - a + 1));
    }
    if (out.size() != expect)
        throw Error("expected " + std::to_string(expect) + " comma-separated integers");
    return out;
}

unsigned long long default_seed() {
    const char* env = std::getenv("HADAMARD_SEED");
    return env ? std::strtoull(env, nullptr, 10) : 0ULL;
}

int cmd_construct(const GraphFlags& gf, bool text, const std::string& out) {
    RelationMatrix g = load_graph(gf);
    SrgParams p = verify_srg(g);
    if (text) {
        if (out.empty()) {
            std::cout << to_text(g);
        } else {
            std::ofstream f(out);
            if (!f) throw Error("cannot write " + out);
            f << to_text(g);
        }
        return 0;
    }
    Json result{{"params", to_json(p)}, {"graph", to_text(g)}};
    emit(certificate("construction", graph_inputs(gf), result), out);
    return 0;
}

int cmd_border(const GraphFlags& gf, const std::string& family, const std::string& weights,
               const std::string& out) {
    RelationMatrix g = load_graph(gf);
    SrgParams p = verify_srg(g);
    CoreWeights w = resolve_weights(p, family, weights);
    ComplexMatrix bordered = build_bordered(build_core(g, w));
    GramOutcome gram = verify_gram(bordered);
    Json inputs = graph_inputs(gf);
    if (!family.empty()) inputs["family"] = family;
    inputs["weights"] = to_json(w);
    Json result{{"order", bordered.n}, {"gram", to_json(gram)}, {"matrix", to_json(bordered)}};
    emit(certificate("bordered-construction", inputs, result), out);
    return gram.ok ? 0 : 1;
}

int cmd_verify(const GraphFlags& gf, const std::string& matrix_file, const std::string& family,
               const std::string& weights, const std::string& out) {
    if (!matrix_file.empty()) {
        ComplexMatrix m = matrix_from_json(Json::parse(read_file(matrix_file)));
        GramOutcome gram = verify_gram(m);
        Json result{{"order", m.n}, {"gram", to_json(gram)}};
        emit(certificate("verification", Json{{"matrix_file", matrix_file}}, result), out);
        return gram.ok ? 0 : 1;
    }
    RelationMatrix g = load_graph(gf);
    SrgParams p = verify_srg(g);
    CoreWeights w = resolve_weights(p, family, weights);
    SchemeData sc = scheme_from_params(p);
    SpectralOutcome spectral = verify_spectral(sc, {w.w0, w.w1, w.w2});
    ComplexMatrix bordered = build_bordered(build_core(g, w));
    GramOutcome gram = verify_gram(bordered);
    Json inputs = graph_inputs(gf);
    if (!family.empty()) inputs["family"] = family;
    inputs["weights"] = to_json(w);
    Json result{{"order", bordered.n},
                {"gram", to_json(gram)},
                {"spectral", to_json(spectral)},
                {"consistent", gram.ok == spectral.ok}};
    emit(certificate("verification", inputs, result), out);
    return (gram.ok && spectral.ok) ? 0 : 1;
}

int cmd_classify(const std::string& params_csv, const std::string& out) {
    std::vector<BigInt> v = parse_ints_csv(params_csv, 4);
    ClassificationReport rep = classify_tuple(v[0], v[1], v[2], v[3]);
    emit(certificate("classification", Json{{"params", params_csv}}, to_json(rep)), out);
    return 0;
}

int cmd_scan(long nmax, int jobs, const std::string& out) {
    ScanResult res = scan(nmax, jobs);
    emit(certificate("scan", Json{{"nmax", nmax}, {"jobs", jobs}}, to_json(res)), out);
    return 0;
}

int cmd_audit(const std::string& id, const AuditOptions& opt, bool json, const std::string& out) {
    std::vector<AuditResult> results;
    if (id.empty()) {
        results = run_all_audits(opt);
    } else {
        results.push_back(run_audit(id, opt));
    }
    bool all_passed = true;
    if (json) {
        Json arr = Json::array();
        for (const auto& r : results) {
            arr.push_back(to_json(r));
            all_passed = all_passed && r.passed;
        }
        Json inputs{{"check", id.empty() ? Json() : Json(id)},
                    {"grid_max", opt.grid_max},
                    {"seed", opt.seed},
                    {"samples", opt.samples}};
        emit(certificate("audit", inputs, arr), out);
    } else {
        for (const auto& r : results) {
            std::cout << r.id << ": " << (r.passed ? "PASS" : "FAIL")
                      << " (points=" << r.points_checked << ", applicable=" << r.applicable
                      << ")\n";
            for (const auto& f : r.failures)
                std::cout << "  " << f.point << " " << f.detail << "\n";
            all_passed = all_passed && r.passed;
        }
    }
    return all_passed ? 0 : 1;
}

Interval parse_interval(const std::string& text) {
    Interval iv;
    if (text.empty()) return iv;
    size_t comma = text.find(',');
    if (comma == std::string::npos) throw Error("interval must be 'lo,hi'");
    std::string lo = text.substr(0, comma), hi = text.substr(comma + 1);
    if (lo != "-inf") iv.lo = QuadExt(rational_from_string(lo));
    if (hi != "inf" && hi != "+inf") iv.hi = QuadExt(rational_from_string(hi));
    return iv;
}

int cmd_sturm(const std::string& poly_csv, const std::string& interval, bool json,
              const std::string& out) {
    std::stringstream ss(poly_csv);
    std::string item;
    std::vector<BigRational> coeffs;
    while (std::getline(ss, item, ',')) coeffs.push_back(rational_from_string(item));
    RatPoly p(std::move(coeffs));
    if (p.is_zero()) throw Error("the zero polynomial has no root count");
    SturmChain chain = sturm_chain(p);
    Interval iv = parse_interval(interval);
    long count = count_real_roots(chain, iv);
    if (json) {
        Json result{{"chain", to_json(chain)}, {"distinct_real_roots", count}};
        Json inputs{{"poly", poly_csv},
                    {"interval", interval.empty() ? "-inf,inf" : interval}};
        emit(certificate("root-count", inputs, result), out);
    } else {
        std::cout << "chain:\n";
        for (const auto& q : chain.polys) std::cout << "  " << q.str() << "\n";
        auto print_row = [](const char* name, const std::vector<int>& row) {
            std::cout << name << ":";
            for (int v : row) std::cout << " " << (v > 0 ? "+" : (v < 0 ? "-" : "0"));
            std::cout << "\n";
        };
        print_row("signs at -inf", chain.alternating_signs());
        print_row("signs at +inf", chain.leading_signs());
        std::cout << "distinct real roots in "
                  << (interval.empty() ? std::string("(-inf, inf)") : "(" + interval + ")")
                  << ": " << count << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bordered complex Hadamard matrices from strongly regular graphs, exactly"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);
    int rc = 0;

    auto* construct = app.add_subcommand("construct", "build a graph and validate its parameters");
    GraphFlags cons_gf;
    bool cons_text = false;
    std::string cons_out;
    add_graph_flags(construct, cons_gf);
    construct->add_flag("--text", cons_text, "print the raw text format instead of JSON");
    construct->add_option("--out", cons_out, "write the output to a file");
    construct->callback([&] { rc = cmd_construct(cons_gf, cons_text, cons_out); });

    auto* border = app.add_subcommand("border", "attach weights and an all-ones border");
    GraphFlags bord_gf;
    std::string bord_family, bord_weights, bord_out;
    add_graph_flags(border, bord_gf);
    border->add_option("--family", bord_family, "closed-form weight family name");
    border->add_option("--weights", bord_weights, "weights as JSON {w0, w1, w2}");
    border->add_option("--out", bord_out, "write the certificate to a file");
    border->callback([&] { rc = cmd_border(bord_gf, bord_family, bord_weights, bord_out); });

    auto* verify = app.add_subcommand("verify", "check the defining identity exactly");
    GraphFlags ver_gf;
    std::string ver_matrix, ver_family, ver_weights, ver_out;
    add_graph_flags(verify, ver_gf);
    verify->add_option("--matrix", ver_matrix, "matrix JSON file to check directly");
    verify->add_option("--family", ver_family, "closed-form weight family name");
    verify->add_option("--weights", ver_weights, "weights as JSON {w0, w1, w2}");
    verify->add_option("--out", ver_out, "write the certificate to a file");
    verify->callback(
        [&] { rc = cmd_verify(ver_gf, ver_matrix, ver_family, ver_weights, ver_out); });

    auto* classify = app.add_subcommand("classify", "decide which weight triples exist");
    std::string cls_params, cls_out;
    classify->add_option("--params", cls_params, "parameters n,k1,lambda,mu")->required();
    classify->add_option("--out", cls_out, "write the report to a file");
    classify->callback([&] { rc = cmd_classify(cls_params, cls_out); });

    auto* scan = app.add_subcommand("scan", "classify every parameter tuple up to an order");
    long scan_nmax = 0;
    int scan_jobs = 1;
    std::string scan_out;
    scan->add_option("--nmax", scan_nmax, "largest core order to enumerate")->required();
    scan->add_option("--jobs", scan_jobs, "worker threads");
    scan->add_option("--out", scan_out, "write the report to a file");
    scan->callback([&] { rc = cmd_scan(scan_nmax, scan_jobs, scan_out); });

    auto* audit = app.add_subcommand("audit", "re-verify the classification argument's facts");
    std::string audit_id, audit_out;
    AuditOptions audit_opt;
    audit_opt.seed = default_seed();
    bool audit_json = false;
    audit->add_option("--check", audit_id, "single audit id (default: all)");
    audit->add_option("--grid-max", audit_opt.grid_max, "integer grid radius");
    audit->add_option("--seed", audit_opt.seed, "RNG seed for sampled identities");
    audit->add_option("--samples", audit_opt.samples, "random sample count");
    audit->add_flag("--json", audit_json, "emit a JSON certificate instead of text");
    audit->add_option("--out", audit_out, "write the output to a file");
    audit->callback([&] { rc = cmd_audit(audit_id, audit_opt, audit_json, audit_out); });

    auto* sturm = app.add_subcommand("sturm", "count distinct real roots in an interval");
    std::string sturm_poly, sturm_interval, sturm_out;
    bool sturm_json = false;
    sturm->add_option("--poly", sturm_poly, "coefficients c0,c1,... (ascending)")->required();
    sturm->add_option("--interval", sturm_interval, "open interval lo,hi (-inf and inf allowed)");
    sturm->add_flag("--json", sturm_json, "emit a JSON certificate instead of text");
    sturm->add_option("--out", sturm_out, "write the output to a file");
    sturm->callback([&] { rc = cmd_sturm(sturm_poly, sturm_interval, sturm_json, sturm_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const OracleMismatch& e) {
        std::cerr << "oracle mismatch: " << e.what() << "\n";
        return 1;
    } catch (const NotStronglyRegular& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const InfeasibleParams& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const EndpointIsRoot& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
