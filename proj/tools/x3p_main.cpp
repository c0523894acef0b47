// command-line front end over the x3p C API: construct, verify, bound,
// certify, search. Exit codes: 0 ok/verified, 1 verification false,
// 2 usage or input error, 3 budget exceeded.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "x3p.h"

using nlohmann::json;

namespace {

int exit_code_for(x3p_status st) {
    return st == X3P_E_BUDGET_EXCEEDED ? 3 : 2;
}

int report_error(x3p_status st) {
    std::fprintf(stderr, "error: %s\n", x3p_last_error());
    return exit_code_for(st);
}

std::string join(const std::vector<uint64_t>& xs, const char* sep) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

json graph_report(const x3p_graph* g) {
    json j;
    j["construction"] = x3p_graph_construction(g);
    j["n"] = x3p_graph_vertex_count(g);
    std::vector<uint64_t> parts;
    for (uint64_t i = 0; i < x3p_graph_part_count(g); ++i)
        parts.push_back(x3p_graph_part_size(g, i));
    j["part_sizes"] = parts;
    j["edge_count"] = x3p_graph_edge_count(g);
    j["degree_min"] = x3p_graph_degree_min(g);
    j["degree_max"] = x3p_graph_degree_max(g);
    return j;
}

void print_stats_line(const x3p_graph* g) {
    std::vector<uint64_t> parts;
    for (uint64_t i = 0; i < x3p_graph_part_count(g); ++i)
        parts.push_back(x3p_graph_part_size(g, i));
    std::printf("construction=\"%s\" n=%" PRIu64 " parts=%s edges=%" PRIu64
                " degree_min=%" PRIu64 " degree_max=%" PRIu64,
                x3p_graph_construction(g), x3p_graph_vertex_count(g), join(parts, ",").c_str(),
                x3p_graph_edge_count(g), x3p_graph_degree_min(g), x3p_graph_degree_max(g));
    if (uint64_t loops = x3p_graph_loops_discarded(g))
        std::printf(" loops_discarded=%" PRIu64, loops);
    std::printf("\n");
}

struct ConstructArgs {
    std::string kind;
    uint64_t q = 0, t = 0, generator = 0, v = 0, c = 0;
    std::vector<uint64_t> a;
    std::string out;
    bool json_out = false;
};

int run_construct(const ConstructArgs& args) {
    x3p_graph* g = nullptr;
    x3p_status st = X3P_E_INVALID_ARGUMENT;
    std::string default_out;
    if (args.kind == "g_qt") {
        st = x3p_build_g_qt(args.q, args.t, &g);
        default_out = "g_qt_q" + std::to_string(args.q) + "_t" + std::to_string(args.t) + ".x3p";
    } else if (args.kind == "gamma_qt") {
        st = x3p_build_gamma_qt(args.q, args.t, &g);
        default_out =
            "gamma_qt_q" + std::to_string(args.q) + "_t" + std::to_string(args.t) + ".x3p";
    } else if (args.kind == "sum_quotient") {
        st = x3p_build_sum_quotient(args.q, args.generator, &g);
        default_out = "sum_quotient_q" + std::to_string(args.q) + "_g" +
                      std::to_string(args.generator) + ".x3p";
    } else if (args.kind == "williford") {
        st = x3p_build_williford(args.v, args.a.data(), args.a.size(), args.c, &g);
        default_out =
            "williford_v" + std::to_string(args.v) + "_c" + std::to_string(args.c) + ".x3p";
    }
    if (st != X3P_OK) return report_error(st);

    std::string path = args.out.empty() ? default_out : args.out;
    st = x3p_graph_write_file(g, path.c_str());
    if (st != X3P_OK) {
        x3p_graph_free(g);
        return report_error(st);
    }
    if (args.json_out) {
        json j = graph_report(g);
        j["file"] = path;
        std::printf("%s\n", j.dump().c_str());
    } else {
        print_stats_line(g);
        std::printf("wrote %s\n", path.c_str());
    }
    x3p_graph_free(g);
    return 0;
}

struct VerifyArgs {
    std::string path;
    uint64_t s = 2, t = 2;
    bool json_out = false;
};

int run_verify(const VerifyArgs& args) {
    x3p_graph* g = nullptr;
    x3p_status st = x3p_graph_read_file(args.path.c_str(), &g);
    if (st != X3P_OK) return report_error(st);

    int verified = 0;
    uint64_t small = std::min(args.s, args.t), large = std::max(args.s, args.t);
    std::vector<uint64_t> ws(small), wt(large);
    st = x3p_is_kst_free(g, args.s, args.t, &verified, ws.data(), wt.data());
    if (st != X3P_OK) {
        x3p_graph_free(g);
        return report_error(st);
    }

    if (args.json_out) {
        json j = graph_report(g);
        json f;
        f["s"] = args.s;
        f["t"] = args.t;
        f["verified"] = verified != 0;
        if (!verified) f["witness"] = json{{"side_s", ws}, {"side_t", wt}};
        j["freeness"] = f;
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("K_{%" PRIu64 ",%" PRIu64 "}-free: %s\n", args.s, args.t,
                    verified ? "true" : "false");
        if (!verified)
            std::printf("witness: s-side=(%s) common neighbors=(%s)\n", join(ws, ",").c_str(),
                        join(wt, ",").c_str());
    }
    x3p_graph_free(g);
    return verified ? 0 : 1;
}

struct BoundArgs {
    std::string mode;
    std::string kind = "thm1";
    uint64_t s = 2, t = 2, k = 3;
    uint64_t m = 0, n = 0, n1 = 0, n2 = 0, n3 = 0;
    uint64_t grid = 300, restarts = 3, seed = 12345;
    uint64_t budget = 0;
    bool json_out = false;
};

int run_bound_asymptotic(const BoundArgs& args) {
    json j;
    if (args.kind == "thm1") {
        double coeff = 0, expo = 0;
        x3p_status st = x3p_thm1_coefficient(args.s, args.t, &coeff, &expo);
        if (st != X3P_OK) return report_error(st);
        if (args.json_out) {
            j["bound_upper"] = {{"kind", "thm1"}, {"coefficient", coeff}, {"exponent", expo}};
            std::printf("%s\n", j.dump().c_str());
        } else {
            std::printf("%.6f \xC2\xB7 n^%.6g\n", coeff, expo);
        }
        return 0;
    }
    if (args.kind == "thm4") {
        double k2u = 0, k2l = 0, k3u = 0, k3l = 0;
        x3p_status st = x3p_thm4_coefficients(args.t, args.k, &k2u, &k2l, &k3u, &k3l);
        if (st != X3P_OK) return report_error(st);
        if (args.json_out) {
            j["bound_upper"] = {{"kind", "thm4"},
                                {"k2t_upper", k2u},
                                {"k2t_lower", k2l},
                                {"k33_upper", k3u},
                                {"k33_lower", k3l}};
            std::printf("%s\n", j.dump().c_str());
        } else {
            std::printf("k2t_upper=%.6f k2t_lower=%.6f (x n^1.5)  "
                        "k33_upper=%.6f k33_lower=%.6f (x n^(5/3))\n",
                        k2u, k2l, k3u, k3l);
        }
        return 0;
    }
    if (args.kind == "classical") {
        double ex = 0, exd = 0, chi2 = 0;
        x3p_status st = x3p_classical_coefficients(args.s, args.t, &ex, &exd, &chi2);
        if (st != X3P_OK) return report_error(st);
        if (args.json_out) {
            j["bound_upper"] = {{"kind", "classical"},
                                {"ex_k2t", ex},
                                {"ex_k2t_display", exd},
                                {"chi2_k2t", chi2}};
            std::printf("%s\n", j.dump().c_str());
        } else {
            std::printf("ex_k2t=%.6f ex_k2t_display=%.6f chi2_k2t=%.6f (x n^1.5)\n", ex, exd,
                        chi2);
        }
        return 0;
    }
    if (args.kind == "nikiforov") {
        double value = 0;
        x3p_status st = x3p_nikiforov_bound(args.m, args.n, args.s, args.t, &value);
        if (st != X3P_OK) return report_error(st);
        if (args.json_out) {
            j["bound_upper"] = {{"kind", "nikiforov"}, {"value", value}};
            std::printf("%s\n", j.dump().c_str());
        } else {
            std::printf("%.6f\n", value);
        }
        return 0;
    }
    std::fprintf(stderr, "error: unknown asymptotic kind '%s'\n", args.kind.c_str());
    return 2;
}

int run_bound(const BoundArgs& args) {
    if (args.mode == "asymptotic") return run_bound_asymptotic(args);

    if (args.mode == "lagrange-oracle") {
        double value = 0, d1 = 0, d2 = 0, coeff = 0, expo = 0;
        x3p_status st = x3p_lagrange_numeric_oracle(args.s, args.t, args.grid, args.restarts,
                                                    args.seed, &value, &d1, &d2);
        if (st != X3P_OK) return report_error(st);
        st = x3p_thm1_coefficient(args.s, args.t, &coeff, &expo);
        if (st != X3P_OK) return report_error(st);
        if (args.json_out) {
            json j;
            j["bound_upper"] = {{"kind", "lagrange-oracle"},
                                {"oracle", value},
                                {"closed_form", coeff},
                                {"delta", {d1, d2}}};
            std::printf("%s\n", j.dump().c_str());
        } else {
            std::printf("oracle=%.6f closed_form=%.6f delta=(%.6f,%.6f)\n", value, coeff, d1,
                        d2);
        }
        return 0;
    }

    if (args.mode == "exact-chi3") {
        uint64_t value = 0, parts[3] = {0, 0, 0}, wit[3] = {0, 0, 0};
        x3p_status st =
            x3p_exact_chi3_bound(args.n, args.s, args.t, args.budget, &value, parts, wit);
        if (st != X3P_OK) return report_error(st);
        if (args.json_out) {
            json j;
            j["bound_upper"] = {{"value", value},
                                {"partition", {parts[0], parts[1], parts[2]}},
                                {"witness", {wit[0], wit[1], wit[2]}}};
            std::printf("%s\n", j.dump().c_str());
        } else {
            std::printf("%" PRIu64 " at (%" PRIu64 ",%" PRIu64 ",%" PRIu64 ")\n", value,
                        parts[0], parts[1], parts[2]);
        }
        return 0;
    }

    if (args.mode == "exact-chi2") {
        uint64_t value = 0, parts[2] = {0, 0};
        x3p_status st = x3p_exact_chi2_bound(args.n, args.s, args.t, &value, parts);
        if (st != X3P_OK) return report_error(st);
        if (args.json_out) {
            json j;
            j["bound_upper"] = {{"value", value}, {"partition", {parts[0], parts[1]}}};
            std::printf("%s\n", j.dump().c_str());
        } else {
            std::printf("%" PRIu64 " at (%" PRIu64 ",%" PRIu64 ")\n", value, parts[0],
                        parts[1]);
        }
        return 0;
    }

    if (args.mode == "exact-parts") {
        uint64_t value = 0, wit[3] = {0, 0, 0};
        x3p_status st = x3p_exact_tripartite_bound(args.n1, args.n2, args.n3, args.s, args.t,
                                                   args.budget, &value, wit);
        if (st != X3P_OK) return report_error(st);
        if (args.json_out) {
            json j;
            j["bound_upper"] = {{"value", value},
                                {"partition", {args.n1, args.n2, args.n3}},
                                {"witness", {wit[0], wit[1], wit[2]}}};
            std::printf("%s\n", j.dump().c_str());
        } else {
            std::printf("%" PRIu64 " edges=(%" PRIu64 ",%" PRIu64 ",%" PRIu64 ")\n", value,
                        wit[0], wit[1], wit[2]);
        }
        return 0;
    }

    std::fprintf(stderr, "error: unknown bound mode '%s'\n", args.mode.c_str());
    return 2;
}

struct CertifyArgs {
    uint64_t n = 0, s = 2, t = 2, v = 0, c = 0;
    std::vector<uint64_t> a;
    uint64_t budget = 0;
    bool json_out = false;
};

int run_certify(const CertifyArgs& args) {
    x3p_certify_report rep;
    x3p_status st = x3p_certify_equality(args.n, args.s, args.t, args.v, args.a.data(),
                                         args.a.size(), args.c, args.budget, &rep);
    if (st != X3P_OK) return report_error(st);

    if (args.json_out) {
        json j;
        j["n"] = args.n;
        j["construction"] = "williford v=" + std::to_string(args.v) +
                            " A=" + join(args.a, ",") + " c=" + std::to_string(args.c);
        j["edge_count"] = rep.witness_edges;
        j["freeness"] = {{"s", args.s}, {"t", args.t}, {"verified", rep.freeness_verified != 0}};
        j["bound_upper"] = {
            {"value", rep.bound_value},
            {"partition", {rep.bound_parts[0], rep.bound_parts[1], rep.bound_parts[2]}}};
        j["bound_lower"] = rep.witness_edges;
        j["equality_certified"] = rep.certified != 0;
        if (!rep.certified) j["reason"] = rep.reason;
        std::printf("%s\n", j.dump().c_str());
    } else if (rep.certified) {
        std::printf("certified=true value=%" PRIu64 " n=%" PRIu64 " bound_partition=(%" PRIu64
                    ",%" PRIu64 ",%" PRIu64 ")\n",
                    rep.bound_value, args.n, rep.bound_parts[0], rep.bound_parts[1],
                    rep.bound_parts[2]);
    } else {
        std::printf("certified=false reason=\"%s\" witness_edges=%" PRIu64 " bound=%" PRIu64
                    "\n",
                    rep.reason, rep.witness_edges, rep.bound_value);
    }
    return rep.certified ? 0 : 1;
}

struct SearchArgs {
    uint64_t v = 0, k = 0;
    std::string coverage = "full";
    uint64_t budget = 0;
    uint64_t threads = 0;
    bool json_out = false;
};

int run_search(const SearchArgs& args) {
    int require_full = 1;
    double min_cov = 0.0;
    if (args.coverage == "full") {
        require_full = 1;
    } else if (args.coverage.rfind("ratio>=", 0) == 0) {
        require_full = 0;
        try {
            min_cov = std::stod(args.coverage.substr(7));
        } catch (...) {
            std::fprintf(stderr, "error: bad coverage ratio '%s'\n", args.coverage.c_str());
            return 2;
        }
    } else {
        std::fprintf(stderr, "error: --coverage must be 'full' or 'ratio>=X'\n");
        return 2;
    }

    x3p_search_result* res = nullptr;
    x3p_status st = x3p_search_translate_pairs(args.v, args.k, require_full, min_cov,
                                               args.budget, args.threads, &res);
    if (st != X3P_OK) return report_error(st);

    uint64_t count = x3p_search_result_count(res);
    int complete = x3p_search_result_complete(res);
    uint64_t nodes = x3p_search_result_nodes(res);
    const char* status = complete ? "Complete" : "BudgetExceeded";

    std::vector<uint64_t> a(args.k);
    for (uint64_t i = 0; i < count; ++i) {
        uint64_t c = 0, num = 0, den = 1;
        x3p_search_result_pair(res, i, a.data(), &c, &num, &den);
        if (args.json_out) {
            json j;
            j["v"] = args.v;
            j["c"] = c;
            j["A"] = a;
            j["coverage"] = {num, den};
            std::printf("%s\n", j.dump().c_str());
        } else {
            std::printf("v=%" PRIu64 " c=%" PRIu64 " A=%s\n", args.v, c, join(a, ",").c_str());
        }
    }
    if (args.json_out) {
        json j;
        j["status"] = status;
        j["nodes"] = nodes;
        j["pairs"] = count;
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("# status: %s nodes=%" PRIu64 "\n", status, nodes);
        std::printf("%" PRIu64 " pairs, status %s\n", count, status);
    }
    x3p_search_result_free(res);
    return complete ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"K_{s,t}-free multipartite graph constructions, verification, and bounds"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit line-delimited JSON reports");
    app.set_version_flag("--version", x3p_version());

    ConstructArgs cargs;
    CLI::App* construct =
        app.add_subcommand("construct", "build a graph and write an x3p-graph v1 file");
    construct->fallthrough();
    construct->add_option("kind", cargs.kind, "g_qt | gamma_qt | sum_quotient | williford")
        ->required();
    construct->add_option("--q", cargs.q, "prime power");
    construct->add_option("--t", cargs.t, "subgroup order, t | q-1");
    construct->add_option("--generator", cargs.generator, "subgroup generator in Z_{q^2-1}");
    construct->add_option("--v", cargs.v, "modulus of Z_v");
    construct->add_option("--A", cargs.a, "comma-separated residues")->delimiter(',');
    construct->add_option("--c", cargs.c, "unit multiplier");
    construct->add_option("--out", cargs.out, "output path (default derived from params)");

    VerifyArgs vargs;
    CLI::App* verify = app.add_subcommand("verify", "check K_{s,t}-freeness of a graph file");
    verify->fallthrough();
    verify->add_option("path", vargs.path, "x3p-graph v1 file")->required();
    verify->add_option("--s", vargs.s, "one side of K_{s,t}")->required();
    verify->add_option("--t", vargs.t, "other side of K_{s,t}")->required();

    BoundArgs bargs;
    CLI::App* bound = app.add_subcommand("bound", "edge-count bounds");
    bound->fallthrough();
    bound->add_option("mode", bargs.mode,
                      "asymptotic | lagrange-oracle | exact-chi3 | exact-chi2 | exact-parts")
        ->required();
    bound->add_option("--kind", bargs.kind, "thm1 | thm4 | classical | nikiforov");
    bound->add_option("--s", bargs.s, "smaller K_{s,t} side");
    bound->add_option("--t", bargs.t, "larger K_{s,t} side");
    bound->add_option("--k", bargs.k, "part count for thm4");
    bound->add_option("--m", bargs.m, "host rows for nikiforov");
    bound->add_option("--n", bargs.n, "vertex count (or host columns for nikiforov)");
    bound->add_option("--n1", bargs.n1, "part size 1");
    bound->add_option("--n2", bargs.n2, "part size 2");
    bound->add_option("--n3", bargs.n3, "part size 3");
    bound->add_option("--grid", bargs.grid, "oracle grid resolution");
    bound->add_option("--restarts", bargs.restarts, "oracle restarts per grid point");
    bound->add_option("--seed", bargs.seed, "oracle seed");
    bound->add_option("--budget", bargs.budget, "scan budget (0 = default)");

    CertifyArgs certargs;
    CLI::App* certify =
        app.add_subcommand("certify", "certify an exact 3-part extremal value at n");
    certify->fallthrough();
    certify->add_option("--n", certargs.n, "total vertex budget")->required();
    certify->add_option("--s", certargs.s, "smaller K_{s,t} side");
    certify->add_option("--t", certargs.t, "larger K_{s,t} side");
    certify->add_option("--v", certargs.v, "witness modulus")->required();
    certify->add_option("--A", certargs.a, "witness residues")->required()->delimiter(',');
    certify->add_option("--c", certargs.c, "witness unit multiplier")->required();
    certify->add_option("--budget", certargs.budget, "scan budget (0 = default)");

    SearchArgs sargs;
    CLI::App* search = app.add_subcommand("search", "enumerate canonical translate pairs");
    search->fallthrough();
    search->add_option("--v", sargs.v, "modulus")->required();
    search->add_option("--k", sargs.k, "block size")->required();
    search->add_option("--coverage", sargs.coverage, "full | ratio>=X");
    search->add_option("--budget", sargs.budget, "node budget (0 = default)");
    search->add_option("--threads", sargs.threads, "worker threads (0 = hardware)")
        ->envname("X3P_THREADS");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cargs.json_out = vargs.json_out = bargs.json_out = certargs.json_out = sargs.json_out =
        json_out;

    if (construct->parsed()) return run_construct(cargs);
    if (verify->parsed()) return run_verify(vargs);
    if (bound->parsed()) return run_bound(bargs);
    if (certify->parsed()) return run_certify(certargs);
    if (search->parsed()) return run_search(sargs);
    return 2;
}
