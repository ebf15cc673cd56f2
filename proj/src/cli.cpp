#include "dualgraph/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "dualgraph/json_io.hpp"
#include "dualgraph/transforms.hpp"

namespace dualgraph {

namespace {

std::string join_rationals(const std::vector<Rational>& v)
{
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + "]";
}

std::string classify_line(const DiscrepancyResult& res)
{
    std::string verdict;
    switch (res.klass) {
    case NumericClass::klt: verdict = "klt"; break;
    case NumericClass::lc_not_klt:
        verdict = res.delta_equals_E ? "lc (not klt), Δ_Y = E" : "lc (not klt), Δ_Y ≠ E";
        break;
    case NumericClass::not_lc: verdict = "not lc"; break;
    }
    return verdict + ", d = " + join_rationals(res.delta);
}

std::string match_line(const FamilyMatch& m)
{
    if (!m.matched()) return "no match";
    std::string s = std::string("family ") + family_name(m.family) + " (table " +
                    std::to_string(m.figure) + ", diagram " + std::to_string(m.variant) + ")";
    if (!m.params.empty()) {
        s += ", params:";
        for (const auto& [k, v] : m.params) s += " " + k + "=" + std::to_string(v);
    }
    return s;
}

DualGraph load_validated(const std::string& path, std::ostream& err)
{
    DualGraph g = read_graph_file(path);
    ValidationReport rep = validate(g);
    if (!rep.ok) {
        for (const Violation& v : rep.violations) err << "validation [" << v.rule << "]: " << v.message << "\n";
        throw std::invalid_argument("graph failed validation");
    }
    return g;
}

BlowUpSite parse_site(const DualGraph& g, const std::string& arg)
{
    auto index_or_throw = [&](const std::string& id) {
        int i = g.index_of(id);
        if (i < 0) throw std::invalid_argument("unknown vertex '" + id + "' in --at");
        return i;
    };
    if (arg.rfind("vertex=", 0) == 0) {
        std::string rest = arg.substr(7);
        long long m = 1;
        size_t comma = rest.find(',');
        if (comma != std::string::npos) {
            std::string mpart = rest.substr(comma + 1);
            if (mpart.rfind("m=", 0) != 0) throw std::invalid_argument("expected m=<1|2> in --at");
            m = std::stoll(mpart.substr(2));
            rest = rest.substr(0, comma);
        }
        if (m != 1 && m != 2) throw std::invalid_argument("--at multiplicity must be 1 or 2");
        return BlowUpSite::on_curve(index_or_throw(rest), m);
    }
    if (arg.rfind("edge=", 0) == 0) {
        std::string rest = arg.substr(5);
        size_t colon = rest.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("expected edge=<id1>:<id2> in --at");
        return BlowUpSite::on_intersection(index_or_throw(rest.substr(0, colon)),
                                           index_or_throw(rest.substr(colon + 1)));
    }
    throw std::invalid_argument("--at expects vertex=<id>[,m=<1|2>] or edge=<id1>:<id2>");
}

void emit_graph(const DualGraph& g, bool as_json, const std::string& out_path, std::ostream& out)
{
    std::string payload = as_json ? graph_to_json(g).dump(2) + "\n" : to_text(g);
    if (out_path.empty()) {
        out << payload;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
        f << payload;
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"classify dual graphs of normal surface singularities"};
    app.require_subcommand(1);

    std::string graph_path, site_arg, out_path, allow_path, write_allow_path;
    bool as_json = false;
    long long p = 5, ca = 1, cb = 0, cc = 0;
    int scan_ext = 0;
    EnumBounds bounds;
    int jobs = 1;

    CLI::App* cmd_classify = app.add_subcommand("classify", "numeric klt / lc verdict");
    CLI::App* cmd_discrepancy = app.add_subcommand("discrepancy", "boundary coefficients and discrepancies");
    CLI::App* cmd_match = app.add_subcommand("match", "match against the classification tables");
    CLI::App* cmd_crosscheck = app.add_subcommand("crosscheck", "compare table match with the numeric verdict");
    CLI::App* cmd_blowup = app.add_subcommand("blowup", "blow up at a point");
    CLI::App* cmd_basechange = app.add_subcommand("basechange", "split a cusp of parameter r");
    CLI::App* cmd_curve = app.add_subcommand("curve", "analyze a plane cubic over F_p");
    CLI::App* cmd_audit = app.add_subcommand("audit", "enumerate small graphs and cross-check all of them");
    CLI::App* cmd_dot = app.add_subcommand("dot", "Graphviz export");

    for (CLI::App* c : {cmd_classify, cmd_discrepancy, cmd_match, cmd_crosscheck, cmd_blowup,
                        cmd_basechange, cmd_dot})
        c->add_option("graph", graph_path, "graph file (text or JSON)")->required();
    for (CLI::App* c : {cmd_classify, cmd_discrepancy, cmd_match, cmd_crosscheck, cmd_blowup,
                        cmd_basechange, cmd_curve, cmd_audit})
        c->add_flag("--json", as_json, "JSON output");

    cmd_blowup->add_option("--at", site_arg, "vertex=<id>[,m=<1|2>] or edge=<id1>:<id2>")->required();
    cmd_blowup->add_option("-o,--output", out_path, "write the result here instead of stdout");
    cmd_basechange->add_option("-o,--output", out_path, "write the result here instead of stdout");

    cmd_curve->add_option("--p", p, "prime modulus > 3")->required();
    cmd_curve->add_option("--a", ca, "coefficient of y^2")->required();
    cmd_curve->add_option("--b", cb, "coefficient of x")->required();
    cmd_curve->add_option("--c", cc, "constant coefficient")->required();
    cmd_curve->add_option("--scan-ext", scan_ext, "also brute-force scan over F_{p^e}, e in {1,2}");

    cmd_audit->add_option("--max-vertices", bounds.max_vertices)->required();
    cmd_audit->add_option("--max-a", bounds.max_a)->required();
    cmd_audit->add_option("--max-r", bounds.max_r)->required();
    cmd_audit->add_option("--max-g", bounds.max_g)->required();
    cmd_audit->add_option("--max-edge", bounds.max_edge_mult)->required();
    cmd_audit->add_option("--allowlist", allow_path, "known unmatched graphs; anything new fails");
    cmd_audit->add_option("--write-allowlist", write_allow_path, "pin the current unmatched set");
    cmd_audit->add_option("--jobs", jobs, "worker threads");

    std::vector<const char*> argv;
    argv.push_back("dualgraph");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (cmd_classify->parsed()) {
            DualGraph g = load_validated(graph_path, err);
            DiscrepancyResult res = classify_numerical(g);
            if (as_json)
                out << discrepancy_to_json(res).dump(2) << "\n";
            else
                out << classify_line(res) << "\n";
            return 0;
        }
        if (cmd_discrepancy->parsed()) {
            DualGraph g = load_validated(graph_path, err);
            DiscrepancyResult res = classify_numerical(g);
            if (as_json) {
                out << discrepancy_to_json(res).dump(2) << "\n";
            } else {
                out << "canonical degrees: [";
                for (size_t i = 0; i < res.canonical_degrees.size(); ++i)
                    out << (i ? ", " : "") << res.canonical_degrees[i];
                out << "]\n";
                out << "delta:             " << join_rationals(res.delta) << "\n";
                out << "discrepancies:     " << join_rationals(res.discrepancies) << "\n";
                out << "class:             " << numeric_class_name(res.klass);
                if (res.klass == NumericClass::lc_not_klt)
                    out << (res.delta_equals_E ? " (delta = E)" : " (delta != E)");
                out << "\n";
            }
            return 0;
        }
        if (cmd_match->parsed()) {
            DualGraph g = load_validated(graph_path, err);
            FamilyMatch m = match_family(g);
            if (as_json)
                out << match_to_json(m).dump(2) << "\n";
            else
                out << match_line(m) << "\n";
            return 0;
        }
        if (cmd_crosscheck->parsed()) {
            DualGraph g = load_validated(graph_path, err);
            ConsistencyVerdict v = cross_check(g);
            if (as_json) {
                out << cross_check_to_json(v).dump(2) << "\n";
            } else {
                out << match_line(v.match) << "\n";
                out << classify_line(v.numeric) << "\n";
                const char* kind = v.kind == Consistency::consistent     ? "consistent"
                                   : v.kind == Consistency::inconsistent ? "inconsistent"
                                                                         : "unmatched";
                out << "consistency: " << kind << "\n";
                if (v.kind == Consistency::inconsistent) out << v.details << "\n";
            }
            return v.kind == Consistency::inconsistent ? 3 : 0;
        }
        if (cmd_blowup->parsed()) {
            DualGraph g = load_validated(graph_path, err);
            DualGraph result = blow_up(g, parse_site(g, site_arg));
            emit_graph(result, as_json, out_path, out);
            return 0;
        }
        if (cmd_basechange->parsed()) {
            DualGraph g = load_validated(graph_path, err);
            DualGraph result = cusp_base_change(g);
            emit_graph(result, as_json, out_path, out);
            return 0;
        }
        if (cmd_curve->parsed()) {
            WeierstrassCubic w = WeierstrassCubic::make(p, ca, cb, cc);
            CurveReport rep = analyze_cubic(w);
            std::vector<ScanPoint> scan;
            if (scan_ext != 0) scan = jacobian_scan(w, scan_ext);
            if (as_json) {
                nlohmann::json j = curve_report_to_json(w, rep);
                if (scan_ext != 0) j["scan"] = scan_to_json(scan);
                out << j.dump(2) << "\n";
            } else {
                switch (rep.kind) {
                case CurveKind::smooth: out << "smooth"; break;
                case CurveKind::node: out << "node at (" << rep.point[0] << ", " << rep.point[1] << ")"; break;
                case CurveKind::cusp: out << "cusp at (" << rep.point[0] << ", " << rep.point[1] << ")"; break;
                }
                out << ", discriminant " << rep.discriminant << "\n";
                if (scan_ext != 0) {
                    out << "scan over F_p";
                    if (scan_ext == 2) out << "^2";
                    out << ": " << scan.size() << " singular point(s)";
                    for (const ScanPoint& pt : scan) {
                        out << " (";
                        if (pt.x[1] == 0 && pt.y[1] == 0)
                            out << pt.x[0] << ", " << pt.y[0];
                        else
                            out << pt.x[0] << "+" << pt.x[1] << "s, " << pt.y[0] << "+" << pt.y[1] << "s";
                        out << ")";
                    }
                    out << "\n";
                }
            }
            return 0;
        }
        if (cmd_audit->parsed()) {
            AuditReport rep = audit(bounds, jobs);
            std::vector<UnmatchedEntry> allowlist;
            if (!write_allow_path.empty()) {
                write_allowlist(write_allow_path, rep.unmatched);
                allowlist = rep.unmatched;
            } else if (!allow_path.empty()) {
                allowlist = read_allowlist(allow_path);
            }
            if (as_json) {
                out << audit_to_json(rep).dump(2) << "\n";
            } else {
                out << "candidates:        " << rep.total_enumerated << "\n";
                out << "negative definite: " << rep.negative_definite_count << "\n";
                out << "klt / lc / not lc: " << rep.klt_count << " / " << rep.lc_count << " / "
                    << rep.not_lc_count << "\n";
                out << "consistent:        " << rep.consistent_count << "\n";
                out << "unmatched:         " << rep.unmatched.size() << " pinned + "
                    << rep.unmatched_not_lc << " beyond lc\n";
                out << "inconsistent:      " << rep.inconsistent.size() << "\n";
                for (const InconsistentEntry& e : rep.inconsistent)
                    out << "  " << e.key << ": " << e.details << "\n";
            }
            return rep.passed(allowlist) ? 0 : 3;
        }
        if (cmd_dot->parsed()) {
            DualGraph g = load_validated(graph_path, err);
            out << to_dot(g);
            return 0;
        }
    } catch (const not_a_dual_graph& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << graph_path << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 1;
}

} // namespace dualgraph
