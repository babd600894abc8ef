#include "fv/basept.hpp"
#include "fv/extremal.hpp"
#include "fv/farey.hpp"
#include "fv/oracle.hpp"
#include "fv/vanish.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

bool use_color() {
    const char* c = std::getenv("FV_COLOR");
    return c && std::string(c) == "1";
}

std::string ok_str(bool ok) {
    if (!use_color()) return ok ? "ok" : "MISMATCH";
    return ok ? "\033[32mok\033[0m" : "\033[31mMISMATCH\033[0m";
}

int default_jobs() {
    const char* j = std::getenv("FV_JOBS");
    return j ? std::atoi(j) : 0;
}

std::vector<long> parse_torsion(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stol(item));
    return out;
}

fv::CurveModel make_curve(const std::string& kind, const std::string& group, long torsion,
                          const std::string& points) {
    if (kind == "p1") return fv::CurveModel::p1();
    if (kind != "elliptic") throw std::invalid_argument("curve must be p1 or elliptic");
    fv::PicardModel m;
    if (!group.empty()) {
        // "r;n1,n2,..."
        auto semi = group.find(';');
        m.group.free_rank = std::stol(group.substr(0, semi));
        if (semi != std::string::npos)
            for (long n : parse_torsion(group.substr(semi + 1))) m.group.torsion.push_back(n);
    } else if (torsion > 0) {
        m.group = fv::AbelianGroup{0, {torsion}};
    } else {
        throw std::invalid_argument("elliptic curve needs --group or --torsion");
    }
    if (points.empty())
        throw std::invalid_argument(
            "elliptic curve needs explicit --points assignments (\"P1=g1,P2=g2,...\")");
    std::stringstream ss(points);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad --points entry: " + item);
        m.point_classes[item.substr(0, eq)] = m.group.parse_elem(item.substr(eq + 1));
    }
    return fv::CurveModel::elliptic(std::move(m));
}

json nmax_json(const fv::Nmax& n) {
    if (n.infinite) return "inf";
    return n.value;
}

int cmd_farey(long N) {
    bool first = true;
    for (const fv::Rational& x : fv::farey_set(N)) {
        if (!first) std::cout << " ";
        std::cout << x.str();
        first = false;
    }
    std::cout << "\n";
    return 0;
}

int cmd_crit_floor(const std::string& d, const std::string& b, const std::string& dp,
                   const std::string& bp, long N, bool classify, bool as_json) {
    fv::CrtInput in{fv::Rational::parse(d), fv::Rational::parse(b), fv::Rational::parse(dp),
                    fv::Rational::parse(bp), N};
    fv::DirectResult dir = fv::holds_direct(in);
    json out{{"command", "crit floor"},
             {"delta", in.delta.str()},
             {"b", in.b.str()},
             {"delta_p", in.delta_p.str()},
             {"b_p", in.b_p.str()},
             {"N", N},
             {"holds", dir.holds}};
    if (!dir.holds) out["first_violation"] = dir.first_violation;
    if (classify) {
        fv::CrtClassification c = fv::classify_crt(in);
        out["case"] = c.tag == fv::CrtTag::CaseA      ? "crt-a"
                      : c.tag == fv::CrtTag::CaseB    ? "crt-b"
                      : c.tag == fv::CrtTag::CaseHalf ? "crt-half"
                                                      : "fails";
        json w = json::array();
        for (auto [p, q] : c.witnesses) w.push_back({{"p", p}, {"q", q}});
        out["witnesses"] = w;
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "holds: " << (dir.holds ? "yes" : "no") << "\n";
        if (!dir.holds) std::cout << "first violation: i=" << dir.first_violation << "\n";
        if (classify) {
            std::cout << "case: " << out["case"].get<std::string>() << "\n";
            if (!out["witnesses"].empty()) {
                std::cout << "witnesses:";
                for (auto& w : out["witnesses"])
                    std::cout << " (" << w["p"] << "," << w["q"] << ")";
                std::cout << "\n";
            }
        }
    }
    return 0;
}

int cmd_crit_divisor(const std::string& delta, const std::string& b, long N, bool as_json) {
    fv::Divisor D = fv::Divisor::parse(delta);
    fv::Divisor B = fv::Divisor::parse(b);
    fv::DivClassification c = fv::classify_div(D, B, N);
    fv::DirectDivResult dir = fv::holds_direct_div(D, B, N);
    json out{{"command", "crit divisor"},
             {"delta", D.str()},
             {"B", B.str()},
             {"N", N},
             {"holds", c.holds},
             {"rest_integral_part_vanishes", c.rest_ok},
             {"direct_agrees", c.holds == dir.holds}};
    if (c.top.p) out["top_point"] = *c.top.p;
    out["top_coeff"] = c.top.delta.str();
    if (c.top.p_prime) out["second_point"] = *c.top.p_prime;
    out["second_coeff"] = c.top.delta_prime.str();
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "holds: " << (c.holds ? "yes" : "no") << "\n"
                  << "top pair: (" << c.top.delta.str() << ", " << c.top.delta_prime.str()
                  << ")  rest floor(N*rest)=0: " << (c.rest_ok ? "yes" : "no") << "\n"
                  << "direct check: " << ok_str(c.holds == dir.holds) << "\n";
    }
    return 0;
}

int cmd_vanish_classify(const fv::CurveModel& curve, const std::string& l, const std::string& b,
                        long N, bool inf, bool as_json) {
    fv::AdjointProblem pr{curve, fv::Divisor::parse(l), fv::Divisor::parse(b)};
    fv::VanishingReport rep = fv::analyze_vanishing(pr);
    json out{{"command", "vanish classify"},
             {"L", pr.L.str()},
             {"B", pr.B.str()},
             {"case", fv::vanish_case_tag(rep.tag)},
             {"n_max", nmax_json(rep.n_max)}};
    if (!rep.delta.is_zero()) out["delta"] = rep.delta.str();
    if (rep.torsion_order) out["torsion_order"] = nmax_json(*rep.torsion_order);
    if (rep.index_l) out["index"] = *rep.index_l;
    if (inf) out["empty_for_all_i"] = rep.n_max.infinite;
    if (N > 0) out["empty_through_N"] = rep.empty_through(N);
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "case: " << fv::vanish_case_tag(rep.tag) << "\n"
                  << "n_max: " << rep.n_max.str() << "\n";
        if (!rep.delta.is_zero()) std::cout << "delta: " << rep.delta.str() << "\n";
        if (rep.torsion_order) std::cout << "class order: " << rep.torsion_order->str() << "\n";
        if (N > 0)
            std::cout << "empty through N=" << N << ": " << (rep.empty_through(N) ? "yes" : "no")
                      << "\n";
        if (inf)
            std::cout << "empty for all i: " << (rep.n_max.infinite ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_vanish_nvl(long m, const std::string& b, long l, bool as_json) {
    fv::Divisor B = fv::Divisor::parse(b);
    fv::NvlReport rep = l > 0 ? fv::nvl_dichotomy(m, B, l) : fv::nvl_standard(m, B);
    json out{{"command", "vanish nvl"},
             {"m", m},
             {"B", B.str()},
             {"branch", std::string(1, rep.branch)},
             {"n", rep.n}};
    if (l > 0) out["l"] = l;
    if (rep.r) out["r"] = *rep.r;
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "branch: " << rep.branch << "\nn: " << rep.n << "\n";
        if (rep.r) std::cout << "r: " << *rep.r << "\n";
    }
    return 0;
}

int cmd_basept(const fv::CurveModel& curve, const std::string& l, const std::string& b,
               const std::string& q, long N, bool inf, bool as_json) {
    fv::BaseptProblem pr{curve, fv::Divisor::parse(l), fv::Divisor::parse(b), q};
    fv::BaseptClassification cls;
    std::string mode;
    if (inf) {
        cls = fv::successive_basept_infinite(pr);
        mode = "inf";
    } else if (N <= 1) {
        cls = fv::basept_step(pr);
        mode = "step";
    } else {
        cls = fv::successive_basept(pr, N);
        mode = "N=" + std::to_string(N);
    }
    json out{{"command", "basept classify"},
             {"L", pr.L.str()},
             {"B", pr.B.str()},
             {"Q", q},
             {"range", mode},
             {"in_base_locus", cls.in_bs},
             {"cases", cls.cases}};
    if (cls.Delta) out["delta"] = cls.Delta->str();
    if (cls.index_l) out["index"] = *cls.index_l;
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "in base locus (" << mode << "): " << (cls.in_bs ? "yes" : "no") << "\n"
                  << "cases: " << cls.tags() << "\n";
        if (cls.Delta) std::cout << "delta: " << cls.Delta->str() << "\n";
    }
    return 0;
}

int cmd_extremal(long l, long max_den, bool as_json) {
    if (max_den <= 0) max_den = 2 * (l * l + l + 1);
    fv::ExtremalRecord rec = fv::max_over_pairs(l, max_den);
    json pairs = json::array();
    for (auto& [x, y] : rec.argmax_pairs) pairs.push_back({x.str(), y.str()});
    json out{{"command", "extremal"},
             {"l", rec.l},
             {"n_max", rec.n_max},
             {"argmax", pairs},
             {"max_denominator", max_den}};
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "l=" << rec.l << " n_max=" << rec.n_max << " argmax:";
        for (auto& [x, y] : rec.argmax_pairs) std::cout << " (" << x.str() << ", " << y.str() << ")";
        std::cout << "\n";
    }
    return 0;
}

json report_json(const fv::SweepReport& rep) {
    json ms = json::array();
    for (const auto& m : rep.mismatches)
        ms.push_back({{"instance", m.instance},
                      {"input", m.input},
                      {"classifier", m.classifier},
                      {"oracle", m.oracle}});
    return json{{"schema", "fv-sweep-report/1"},
                {"suite", rep.suite},
                {"grid_size", rep.grid_size},
                {"skipped", rep.skipped},
                {"mismatches", ms},
                {"elapsed_seconds", rep.elapsed_seconds},
                {"success", rep.success()}};
}

int cmd_sweep(const fv::SweepConfig& cfg, bool serial, const std::string& json_path,
              const std::string& csv_path) {
    fv::SweepReport rep = serial ? fv::sweep_serial(cfg) : fv::sweep(cfg);
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        f << report_json(rep).dump(2) << "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        f << "instance,input,classifier,oracle\n";
        for (const auto& m : rep.mismatches)
            f << m.instance << ",\"" << m.input << "\",\"" << m.classifier << "\",\"" << m.oracle
              << "\"\n";
    }
    std::cout << "suite: " << rep.suite << "\ngrid size: " << rep.grid_size
              << "\nskipped: " << rep.skipped << "\nmismatches: " << rep.mismatches.size()
              << "\nelapsed: " << rep.elapsed_seconds << " s\nresult: " << ok_str(rep.success())
              << "\n";
    for (size_t i = 0; i < rep.mismatches.size() && i < 20; ++i) {
        const auto& m = rep.mismatches[i];
        std::cout << "  [" << m.instance << "] " << m.input << " classifier=" << m.classifier
                  << " oracle=" << m.oracle << "\n";
    }
    return rep.success() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic classifiers for successive adjoint linear systems on curves"};
    app.require_subcommand(1);

    // farey list N
    auto* farey = app.add_subcommand("farey", "Farey-set utilities");
    auto* farey_list = farey->add_subcommand("list", "print the order-N Farey set");
    long farey_N = 1;
    farey_list->add_option("N", farey_N, "order")->required();

    // crit floor / crit divisor
    auto* crit = app.add_subcommand("crit", "floor-inequality criteria");
    auto* cfl = crit->add_subcommand("floor", "two-variable floor system");
    std::string fl_d, fl_b = "0", fl_dp, fl_bp = "0";
    long fl_N = 2;
    bool fl_classify = false, fl_json = false;
    cfl->add_option("--delta", fl_d)->required();
    cfl->add_option("--b", fl_b);
    cfl->add_option("--deltap", fl_dp)->required();
    cfl->add_option("--bp", fl_bp);
    cfl->add_option("--N", fl_N)->required();
    cfl->add_flag("--classify", fl_classify);
    cfl->add_flag("--json", fl_json);

    auto* cdv = crit->add_subcommand("divisor", "divisor-level criterion");
    std::string dv_delta, dv_b = "0";
    long dv_N = 2;
    bool dv_json = false;
    cdv->add_option("--delta", dv_delta)->required();
    cdv->add_option("--B", dv_b);
    cdv->add_option("--N", dv_N)->required();
    cdv->add_flag("--json", dv_json);

    // vanish classify / vanish nvl
    auto* vanish = app.add_subcommand("vanish", "successive emptiness");
    auto* vcl = vanish->add_subcommand("classify", "classify |ceil(K+B+iL)| emptiness");
    std::string v_curve = "p1", v_group, v_points, v_L, v_B = "0";
    long v_N = 0, v_torsion = 0;
    bool v_inf = false, v_json = false;
    vcl->add_option("--curve", v_curve)->check(CLI::IsMember({"p1", "elliptic"}));
    vcl->add_option("--group", v_group);
    vcl->add_option("--points", v_points);
    vcl->add_option("--torsion", v_torsion);
    vcl->add_option("--L", v_L)->required();
    vcl->add_option("--B", v_B);
    vcl->add_option("--N", v_N);
    vcl->add_flag("--inf", v_inf);
    vcl->add_flag("--json", v_json);

    auto* vnv = vanish->add_subcommand("nvl", "log-multiple dichotomy");
    long nvl_m = 1, nvl_l = 0;
    std::string nvl_B;
    bool nvl_json = false;
    vnv->add_option("--m", nvl_m)->required();
    vnv->add_option("--B", nvl_B)->required();
    vnv->add_option("--l", nvl_l, "numerator bound (omit for standard coefficients)");
    vnv->add_flag("--json", nvl_json);

    // basept classify
    auto* basept = app.add_subcommand("basept", "successive base point");
    auto* bcl = basept->add_subcommand("classify", "classify Q in Bs|ceil(K+B+iL)|");
    std::string b_curve = "p1", b_group, b_points, b_L, b_B = "0", b_Q;
    long b_N = 0, b_torsion = 0;
    bool b_inf = false, b_json = false;
    bcl->add_option("--curve", b_curve)->check(CLI::IsMember({"p1", "elliptic"}));
    bcl->add_option("--group", b_group);
    bcl->add_option("--points", b_points);
    bcl->add_option("--torsion", b_torsion);
    bcl->add_option("--L", b_L)->required();
    bcl->add_option("--B", b_B);
    bcl->add_option("--Q", b_Q)->required();
    bcl->add_option("--N", b_N);
    bcl->add_flag("--inf", b_inf);
    bcl->add_flag("--json", b_json);

    // extremal
    auto* ext = app.add_subcommand("extremal", "extremal numerator-bounded pairs");
    long ext_l = 1, ext_den = 0;
    bool ext_json = false;
    ext->add_option("--l", ext_l)->required();
    ext->add_option("--max-den", ext_den);
    ext->add_flag("--json", ext_json);

    // verify sweep
    auto* verify = app.add_subcommand("verify", "classifier-vs-oracle sweeps");
    auto* vsw = verify->add_subcommand("sweep", "run a verification sweep");
    std::string sw_suite = "floor", sw_torsion, sw_json, sw_csv;
    fv::SweepConfig sw_cfg;
    bool sw_serial = false;
    vsw->add_option("--suite", sw_suite)
        ->check(CLI::IsMember({"floor", "divisor", "vanish", "basept", "crossmodule"}));
    vsw->add_option("--max-den", sw_cfg.max_denominator);
    vsw->add_option("--max-b-den", sw_cfg.max_b_denominator);
    vsw->add_option("--max-points", sw_cfg.max_points);
    vsw->add_option("--max-N", sw_cfg.max_N);
    vsw->add_option("--torsion", sw_torsion, "comma-separated torsion orders");
    vsw->add_option("--jobs", sw_cfg.jobs);
    vsw->add_option("--json", sw_json, "write JSON report to this path");
    vsw->add_option("--csv", sw_csv, "write mismatch CSV to this path");
    vsw->add_flag("--serial", sw_serial, "use the serial reference engine");

    sw_cfg.jobs = default_jobs();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*farey_list) return cmd_farey(farey_N);
        if (*cfl) return cmd_crit_floor(fl_d, fl_b, fl_dp, fl_bp, fl_N, fl_classify, fl_json);
        if (*cdv) return cmd_crit_divisor(dv_delta, dv_b, dv_N, dv_json);
        if (*vcl)
            return cmd_vanish_classify(make_curve(v_curve, v_group, v_torsion, v_points), v_L, v_B,
                                       v_N, v_inf, v_json);
        if (*vnv) return cmd_vanish_nvl(nvl_m, nvl_B, nvl_l, nvl_json);
        if (*bcl)
            return cmd_basept(make_curve(b_curve, b_group, b_torsion, b_points), b_L, b_B, b_Q, b_N,
                              b_inf, b_json);
        if (*ext) return cmd_extremal(ext_l, ext_den, ext_json);
        if (*vsw) {
            sw_cfg.suite = fv::parse_suite(sw_suite);
            if (!sw_torsion.empty()) sw_cfg.torsion_orders = parse_torsion(sw_torsion);
            return cmd_sweep(sw_cfg, sw_serial, sw_json, sw_csv);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
