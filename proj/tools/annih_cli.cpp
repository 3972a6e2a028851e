#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "annih/group_ring.hpp"
#include "annih/quadratic.hpp"
#include "annih/rset.hpp"
#include "annih/stickelberger.hpp"
#include "annih/tables.hpp"
#include "annih/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using nlohmann::json;
using namespace annih;

namespace {

struct Output {
    std::string format = "json";
    std::string out_path;

    void emit(const json& j, const std::string& table_text) const {
        std::ostringstream os;
        if (format == "json")
            os << j.dump(2) << "\n";
        else
            os << table_text;
        if (out_path.empty()) {
            std::cout << os.str();
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw CLI::ValidationError("--out", "cannot open " + out_path);
            f << os.str();
        }
    }
};

GroupPtr parse_group(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    if (kind == "q8") return FiniteGroup::quaternion();
    if (colon == std::string::npos) throw CLI::ValidationError("--group", "expected kind:n or q8");
    u64 n = std::stoull(spec.substr(colon + 1));
    if (kind == "cyclic") return FiniteGroup::cyclic(static_cast<int>(n));
    if (kind == "unitmod") return FiniteGroup::unit_group_mod(n, false);
    if (kind == "unitmod+") return FiniteGroup::unit_group_mod(n, true);
    throw CLI::ValidationError("--group", "unknown group kind " + kind);
}

json labels_json(const GroupPtr& g, const std::vector<int>& elems) {
    json a = json::array();
    for (int e : elems) a.push_back(g->label(e));
    return a;
}

std::string cert_table(const RSetCertificate& c) {
    std::ostringstream os;
    os << "field      " << c.field << "\n";
    os << "base       " << c.base << "\n";
    os << "prime      " << c.prime << "\n";
    for (const auto& h : c.hypotheses)
        os << "hypothesis " << h.name << ": " << status_name(h.status)
           << (h.detail.empty() ? "" : " (" + h.detail + ")") << "\n";
    for (const auto& m : c.memberships) os << "member     f=" << m.f << " over " << m.base << "\n";
    for (const auto& e : c.exclusions) os << "excluded   f=" << e.f << " (witness " << e.witness << ")\n";
    for (const auto& n : c.notes) os << "note       " << n << "\n";
    os << "overall    " << verdict_name(c.overall) << "\n";
    return os.str();
}

struct Range {
    u64 lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    auto dots = s.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoull(s);
    } else {
        r.lo = std::stoull(s.substr(0, dots));
        r.hi = std::stoull(s.substr(dots + 2));
    }
    if (r.hi < r.lo) throw CLI::ValidationError("range", "end below start in " + s);
    return r;
}

int run(int argc, char** argv) {
    CLI::App app{"exact computation of class-group annihilators and residue-degree sets"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", out.out_path, "write output to a file");

    // theta
    auto* theta_cmd = app.add_subcommand("theta", "admissible sets and annihilators theta_f(S)");
    std::string group_spec;
    u64 theta_f = 0, enum_cap = kDefaultEnumerationCap;
    theta_cmd->add_option("--group", group_spec, "q8 | cyclic:n | unitmod:n | unitmod+:n")->required();
    theta_cmd->add_option("--f", theta_f, "residue degree f")->required();
    theta_cmd->add_option("--enumerate-cap", enum_cap, "candidate enumeration cap");

    // stickelberger
    auto* st_cmd = app.add_subcommand("stickelberger", "Stickelberger ideal membership at prime p");
    u64 st_p = 0;
    std::string st_member;
    st_cmd->add_option("--p", st_p, "odd prime")->required();
    st_cmd->add_option("--member", st_member, "element to test, e.g. \"1*s1+1*s5\"");

    // quad
    auto* quad_cmd = app.add_subcommand("quad", "quadratic field computations");
    quad_cmd->require_subcommand(1);
    auto* q_cn = quad_cmd->add_subcommand("class-number", "reduced-form class number");
    i64 q_d = 0;
    q_cn->add_option("--d", q_d, "squarefree d")->required();
    auto* q_rep = quad_cmd->add_subcommand("represents", "principal-form representation");
    i64 rep_d = 0, rep_m = 0;
    q_rep->add_option("--d", rep_d)->required();
    q_rep->add_option("--m", rep_m)->required();
    auto* q_pell = quad_cmd->add_subcommand("pell", "family insolubility certificate");
    std::string pell_kind;
    u64 pell_n = 0, pell_m = 0;
    q_pell->add_option("--kind", pell_kind)->required()->check(CLI::IsMember({"P4", "P5"}));
    q_pell->add_option("--n", pell_n)->required();
    q_pell->add_option("--m", pell_m)->required();
    auto* q_cycle = quad_cmd->add_subcommand("cycle", "continued-fraction cycle of sqrt(n)");
    u64 cyc_n = 0;
    q_cycle->add_option("--n", cyc_n)->required();
    auto* q_mink = quad_cmd->add_subcommand("minkowski", "certified Minkowski floor");
    i64 mink_d = 0;
    q_mink->add_option("--d", mink_d)->required();

    // rset
    auto* rset_cmd = app.add_subcommand("rset", "residue-degree set certificates");
    rset_cmd->require_subcommand(1);
    auto* r_mt1 = rset_cmd->add_subcommand("mt1", "cyclotomic(q), q = 7 mod 8");
    u64 r_q = 0, r_m = 0, r_n = 0, r_p = 0;
    r_mt1->add_option("--q", r_q)->required();
    auto* r_mt3 = rset_cmd->add_subcommand("mt3", "real-cyclotomic (2mq)^2+1");
    r_mt3->add_option("--m", r_m)->required();
    r_mt3->add_option("--q", r_q)->required();
    auto* r_mt31 = rset_cmd->add_subcommand("mt31", "real-cyclotomic ((2m+1)q)^2+4");
    r_mt31->add_option("--m", r_m)->required();
    r_mt31->add_option("--q", r_q)->required();
    auto* r_real = rset_cmd->add_subcommand("real", "generalized k^2+1 / k^2+4 argument");
    r_real->add_option("--n", r_n)->required();
    r_real->add_option("--p", r_p)->required();
    auto* r_biq = rset_cmd->add_subcommand("biquadratic", "F = Q(sqrt u, sqrt 79)");
    i64 r_u = 0;
    r_biq->add_option("--u", r_u)->required();
    auto* r_excl = rset_cmd->add_subcommand("exclusion", "subfield class-group exclusion");
    u64 e_n = 0, e_f = 0;
    bool e_real = false;
    r_excl->add_option("--n", e_n)->required();
    r_excl->add_option("--f", e_f)->required();
    r_excl->add_flag("--real", e_real);

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "certificate grids over parameter ranges");
    scan_cmd->require_subcommand(1);
    std::string s_m = "1..1", s_q = "3..3";
    auto* s_mt1 = scan_cmd->add_subcommand("mt1", "grid over q");
    s_mt1->add_option("--q", s_q, "range a..b")->required();
    auto* s_mt3 = scan_cmd->add_subcommand("mt3", "grid over (m, q)");
    s_mt3->add_option("--m", s_m, "range a..b")->required();
    s_mt3->add_option("--q", s_q, "range a..b")->required();
    auto* s_mt31 = scan_cmd->add_subcommand("mt31", "grid over (m, q)");
    s_mt31->add_option("--m", s_m, "range a..b")->required();
    s_mt31->add_option("--q", s_q, "range a..b")->required();

    // verify-paper
    auto* vp_cmd = app.add_subcommand("verify-paper", "run the full verification suite");
    bool vp_serial = false;
    vp_cmd->add_flag("--serial", vp_serial, "run the serial reference sweeps");

    // catalog
    auto* cat_cmd = app.add_subcommand("catalog", "embedded data tables");
    cat_cmd->require_subcommand(1);
    cat_cmd->add_subcommand("dump", "dump every embedded table");

    // let --format / --out appear after any subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (auto* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*theta_cmd) {
        auto g = parse_group(group_spec);
        auto sys = admissible_sets(g, theta_f, enum_cap);
        json j;
        j["group"] = group_spec;
        j["order"] = g->order();
        j["f"] = theta_f;
        j["intersection"] = labels_json(g, sys.intersection.members());
        j["candidates"] = sys.transversal_count.get_str();
        j["truncated"] = sys.truncated;
        j["sets"] = json::array();
        std::ostringstream tb;
        tb << "group " << group_spec << ", f = " << theta_f << ", |H| = " << sys.intersection.order()
           << ", candidates " << sys.transversal_count.get_str() << (sys.truncated ? " (truncated)" : "")
           << "\n";
        for (const auto& s : sys.sets) {
            auto cert = annihilation_certificate(g, theta_f, s.elements);
            auto theta = theta_of(g, s.elements);
            json js;
            js["elements"] = labels_json(g, s.elements);
            js["theta"] = theta.to_text();
            js["is_trace"] = is_trace(theta);
            js["certificate_pass"] = cert.pass;
            js["multiplier"] = cert.multiplier.get_str();
            j["sets"].push_back(js);
            tb << "S = {";
            for (int e : s.elements) tb << " " << g->label(e);
            tb << " }  theta = " << theta.to_text() << "  certificate "
               << (cert.pass ? "pass" : "FAIL") << "\n";
        }
        out.emit(j, tb.str());
        return 0;
    }

    if (*st_cmd) {
        auto gen = generator_lattice(st_p);
        json j;
        j["p"] = st_p;
        j["generator_rank"] = gen.hnf.rank;
        std::ostringstream tb;
        tb << "p = " << st_p << ", generator lattice rank " << gen.hnf.rank << "\n";
        if (st_p == 23) {
            auto paper = paper_lattice_23();
            j["basis_rank"] = paper.hnf.rank;
            tb << "printed basis rank " << paper.hnf.rank << " of 12\n";
        }
        if (!st_member.empty()) {
            auto x = GroupRingElement::parse(gen.group, st_member);
            auto mem = lattice_membership(gen, x);
            j["element"] = x.to_text();
            j["member"] = mem.member;
            tb << x.to_text() << (mem.member ? " is" : " is not") << " in the Stickelberger ideal\n";
            if (mem.member) {
                json coords = json::array();
                for (const auto& c : mem.coords) coords.push_back(c.get_str());
                j["witness"] = coords;
            } else if (st_p == 23) {
                auto rep = elimination_report(paper_lattice_23(), x);
                json steps = json::array();
                for (const auto& d : rep.deductions)
                    steps.push_back({{"coordinate", d.coordinate},
                                     {"variable", d.variable},
                                     {"value", d.value.get_str()}});
                json pairs = json::array();
                for (const auto& [a, b] : rep.pairs) pairs.push_back({a, b});
                j["refutation"] = {{"deductions", steps},
                                   {"contradiction", rep.contradiction},
                                   {"coordinates", {rep.coordinate_a, rep.coordinate_b}},
                                   {"pairs", pairs}};
                if (rep.contradiction)
                    tb << "refutation: coefficient comparison at " << rep.coordinate_a << " and "
                       << rep.coordinate_b << " is inconsistent\n";
            }
        }
        out.emit(j, tb.str());
        return 0;
    }

    if (*quad_cmd) {
        json j;
        std::ostringstream tb;
        if (*q_cn) {
            auto cn = class_number(QuadraticField(q_d));
            j = {{"d", q_d}, {"wide", cn.wide}, {"narrow", cn.narrow},
                 {"norm_minus_one_unit", cn.norm_minus_one_unit}};
            tb << "h = " << cn.wide << ", narrow " << cn.narrow << "\n";
        } else if (*q_rep) {
            auto res = represents_principal(QuadraticField(rep_d), rep_m);
            j = {{"d", rep_d}, {"m", rep_m}, {"represented", res.represented}};
            if (res.represented) j["witness"] = {res.x.get_str(), res.y.get_str()};
            j["cycle_values"] = res.cycle_values;
            tb << "represented: " << (res.represented ? "true" : "false") << "\n";
        } else if (*q_pell) {
            auto cert = pell_family_insoluble(pell_kind == "P4" ? PellKind::P4 : PellKind::P5, pell_n, pell_m);
            j = {{"kind", pell_kind},       {"n", cert.n},
                 {"m", cert.m},             {"radicand", cert.radicand},
                 {"target", cert.target.get_str()}, {"period", cert.cycle_period},
                 {"cycle_values", cert.cycle_values}, {"search_bound", cert.search_bound.get_str()},
                 {"insoluble", cert.insoluble}};
            tb << "x^2 - " << cert.radicand << " y^2 = +-" << cert.target.get_str() << ": "
               << (cert.insoluble ? "insoluble" : "SOLUBLE") << "\n";
        } else if (*q_cycle) {
            auto fc = form_cycle(cyc_n);
            auto [x, y] = fc.unit();
            j = {{"radicand", fc.radicand}, {"a0", fc.a0},       {"period", fc.period},
                 {"digits", fc.a},          {"signed_values", fc.signed_values},
                 {"unit", {x.get_str(), y.get_str()}}};
            tb << "period " << fc.period << ", unit (" << x.get_str() << ", " << y.get_str() << ")\n";
        } else if (*q_mink) {
            auto b = minkowski_bound(QuadraticField(mink_d));
            j = {{"d", mink_d},
                 {"multiplier", b.multiplier.get_str()},
                 {"radicand", b.radicand},
                 {"over_pi", mink_d < 0},
                 {"floor", b.floor}};
            tb << "floor " << b.floor << "\n";
        }
        out.emit(j, tb.str());
        return 0;
    }

    if (*rset_cmd) {
        if (*r_excl) {
            auto v = mt4_exclusion(e_n, e_f, e_real);
            json j = {{"n", e_n}, {"f", e_f}, {"excluded", v.excluded}, {"witness", v.witness}, {"reason", v.reason}};
            std::ostringstream tb;
            tb << (v.excluded ? "excluded" : "no exclusion") << ": " << v.reason << "\n";
            out.emit(j, tb.str());
            return 0;
        }
        RSetCertificate cert;
        if (*r_mt1) cert = mt1_certificate(r_q);
        else if (*r_mt3) cert = mt3_certificate(r_m, r_q);
        else if (*r_mt31) cert = mt31_certificate(r_m, r_q);
        else if (*r_real) cert = real_cyclotomic_rset(r_n, r_p);
        else cert = biquadratic_certificate(r_u);
        out.emit(certificate_json(cert), cert_table(cert));
        return 0;
    }

    if (*scan_cmd) {
        Range mr = parse_range(s_m), qr = parse_range(s_q);
        struct Combo {
            u64 m, q;
        };
        std::vector<Combo> combos;
        if (*s_mt1) {
            for (u64 q = qr.lo; q <= qr.hi; ++q)
                if (is_prime(q)) combos.push_back({0, q});
        } else {
            for (u64 m = mr.lo; m <= mr.hi; ++m)
                for (u64 q = qr.lo; q <= qr.hi; ++q)
                    if (is_prime(q) && q != 2) combos.push_back({m, q});
        }
        std::vector<std::optional<RSetCertificate>> results(combos.size());
        const int workers = worker_count();
        (void)workers;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
        for (long i = 0; i < static_cast<long>(combos.size()); ++i) {
            try {
                if (*s_mt1) results[i] = mt1_certificate(combos[i].q);
                else if (*s_mt3) results[i] = mt3_certificate(combos[i].m, combos[i].q);
                else results[i] = mt31_certificate(combos[i].m, combos[i].q);
            } catch (const std::exception&) {
                // parameters outside the theorem shape or desk scale: skipped
            }
        }
        std::ostringstream os;
        long valid = 0, conditional = 0, invalid = 0;
        for (size_t i = 0; i < combos.size(); ++i) {
            if (!results[i]) continue;
            json j = certificate_json(*results[i]);
            j["parameters"] = {{"m", combos[i].m}, {"q", combos[i].q}};
            os << j.dump() << "\n";
            switch (results[i]->overall) {
                case Verdict::Valid: ++valid; break;
                case Verdict::Conditional: ++conditional; break;
                case Verdict::Invalid: ++invalid; break;
            }
        }
        std::ostringstream summary;
        summary << "scan: " << valid << " Valid, " << conditional << " Conditional, " << invalid
                << " Invalid of " << combos.size() << " parameter points\n";
        if (out.out_path.empty()) {
            std::cout << os.str();
            std::cerr << summary.str();
        } else {
            std::ofstream f(out.out_path, std::ios::binary);
            if (!f) throw CLI::ValidationError("--out", "cannot open " + out.out_path);
            f << os.str();
            std::cout << summary.str();
        }
        return 0;
    }

    if (*vp_cmd) {
        auto report = verify_paper(!vp_serial);
        json j;
        j["items"] = json::array();
        std::ostringstream tb;
        for (const auto& item : report.items) {
            j["items"].push_back({{"id", item.id},
                                  {"description", item.description},
                                  {"pass", item.pass},
                                  {"detail", item.detail}});
            tb << (item.pass ? "PASS" : "FAIL") << "  " << item.id << ": " << item.detail << "\n";
        }
        j["all_pass"] = report.all_pass();
        tb << (report.all_pass() ? "all items pass\n" : "FAILURES present\n");
        out.emit(j, tb.str());
        return report.all_pass() ? 0 : 1;
    }

    if (*cat_cmd) {
        json j;
        j["h_plus"] = {{"rules",
                        {"odd prime power with phi(n) <= 66: h+ = 1",
                         "composite n <= 200 with phi(n) <= 72, n not in {136, 148, 152}: h+ = 1"}},
                       {"records", json::array()}};
        for (u64 n : {257u, 577u, 1601u, 1093u, 1229u, 2029u, 3253u, 7229u, 9029u, 8101u}) {
            auto rec = h_plus_record(n);
            json rj = {{"n", n}, {"provenance", provenance_name(rec->provenance)}, {"source", rec->source}};
            if (rec->value) rj["value"] = *rec->value;
            if (rec->prime_claim) rj["prime_claim"] = *rec->prime_claim;
            j["h_plus"]["records"].push_back(rj);
        }
        j["biquadratic"] = json::array();
        for (const auto& row : biquadratic_table())
            j["biquadratic"].push_back({{"u", row.u}, {"h_F", row.h_f}, {"R_absolute", row.r_absolute},
                                        {"R_relative", row.r_relative}});
        j["stickelberger_support_sets_p23"] = stickelberger_support_sets_23();
        j["quaternion_table"] = quaternion_table_text();
        std::ostringstream tb;
        tb << "embedded tables: h_plus rules and records, 63 biquadratic rows, 11 support sets, Q8 table\n";
        out.emit(j, tb.str());
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
