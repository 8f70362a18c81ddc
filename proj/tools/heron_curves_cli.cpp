// heron-curves: construct and verify the three families of rational
// triangles through their algebraic curves. All arithmetic is exact; every
// report can be re-checked independently with the `verify` subcommand.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "heroncurves/genus3.hpp"
#include "heroncurves/geometry.hpp"
#include "heroncurves/heron_family.hpp"
#include "heroncurves/isosceles.hpp"
#include "heroncurves/json_io.hpp"
#include "heroncurves/rational.hpp"
#include "heroncurves/verify.hpp"
#include "heroncurves/weierstrass.hpp"

namespace {

using namespace heroncurves;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

struct flag_parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational need_rational(const std::string& text, const std::string& flag) {
    auto r = parse_rational(text);
    if (!r) throw flag_parse_error("invalid rational for " + flag + ": '" + text + "'");
    return *r;
}

std::pair<Rational, Rational> need_pair(const std::string& text, const std::string& flag) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw flag_parse_error(flag + " expects 'X,Y' with exact rationals");
    return {need_rational(text.substr(0, comma), flag), need_rational(text.substr(comma + 1), flag)};
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        out.push_back(ch);
        if (ch == '"') out.push_back('"');
    }
    out.push_back('"');
    return out;
}

void emit(const json& report, const std::string& format) {
    if (format == "csv") {
        std::cout << "index,type,detail\n";
        std::size_t i = 0;
        for (const auto& rec : report.value("records", json::array())) {
            std::string type = rec.is_object() ? rec.value("type", std::string("?")) : "?";
            std::cout << i++ << "," << type << "," << csv_quote(rec.dump()) << "\n";
        }
        return;
    }
    std::cout << report.dump(2) << "\n";
}

json ec_point_record(const WeierstrassCurve& e, const ECPoint& p, const std::string& name,
                     std::optional<int> order, bool claim_infinite) {
    json rec{{"type", "ec_point"},
             {"curve", json{{"A", e.A().str()}, {"B", e.B().str()}}},
             {"point", to_json(p)}};
    if (!name.empty()) rec["name"] = name;
    if (order)
        rec["torsion_order"] = *order;
    else if (claim_infinite)
        rec["torsion_order"] = "infinite";
    return rec;
}

json curve_record(const WeierstrassCurve& e, const Rational& m, const Rational& q, bool with_ij) {
    json rec = curve_json(e);
    rec["type"] = "curve";
    rec["m"] = m.str();
    rec["q"] = q.str();
    if (with_ij) {
        auto [i, j] = build_IJ(m, Rational(1), q);
        rec["I"] = i.str();
        rec["J"] = j.str();
    }
    return rec;
}

json heron_triangle_record(const TriangleRecord& rec, const Rational& m, const Rational& q,
                           std::optional<long> multiple) {
    json t = triangle_record_json(rec);
    t["m"] = m.str();
    t["q"] = q.str();
    if (multiple) t["multiple"] = *multiple;
    return t;
}

json two_torsion_record(const Rational& m, const Rational& q, const WeierstrassCurve& e) {
    json roots = json::array();
    for (const auto& pt : two_torsion(e)) roots.push_back(pt.x.str());
    return json{{"type", "two_torsion"},
                {"m", m.str()},
                {"q", q.str()},
                {"square_value", full_two_torsion_square_value(m, q).str()},
                {"full", has_full_two_torsion(m, q)},
                {"roots", roots}};
}

json isosceles_record(const BaseConfig& cfg, const IsoscelesSolution& sol) {
    return json{{"type", "isosceles_solution"},
                {"p1", json::array({cfg.x1.str(), cfg.y1.str()})},
                {"t", sol.t.str()},
                {"branch", std::string(1, branch_char(sol.branch))},
                {"apex", to_json(sol.apex)},
                {"leg", sol.leg.str()}};
}

// --------------------------------------------------------------------------
// subcommand drivers

int run_isosceles(const std::string& p1_text, const std::string& t_text, const std::string& branch_text,
                  bool enumerate, long height, int jobs, const std::string& format) {
    auto [x1, y1] = need_pair(p1_text, "--p1");
    auto cfg = BaseConfig::create(x1, y1);
    if (!cfg) {
        std::cerr << "error: P1 must be distinct from the origin and at a rational distance from it\n";
        return kExitDomain;
    }
    json report = report_skeleton("isosceles");
    report["params"]["p1"] = json::array({x1.str(), y1.str()});

    auto push_solution = [&](const IsoscelesSolution& sol) {
        report["records"].push_back(isosceles_record(*cfg, sol));
        auto tri = make_triangle(Point2{Rational(0), Rational(0)}, Point2{cfg->x1, cfg->y1}, sol.apex);
        if (!tri) throw std::logic_error("isosceles solution failed triangle certification");
        report["records"].push_back(triangle_record_json(make_record(*tri)));
    };

    if (enumerate) {
        if (height < 1) {
            std::cerr << "error: --height must be >= 1\n";
            return kExitParse;
        }
        report["params"]["height"] = height;
        for (const auto& sol : enumerate_isosceles(*cfg, height, jobs)) push_solution(sol);
    } else {
        if (t_text.empty()) {
            std::cerr << "error: provide --t or --enumerate\n";
            return kExitParse;
        }
        Rational t = need_rational(t_text, "--t");
        Branch branch = Branch::plus;
        if (branch_text == "-" || branch_text == "minus") branch = Branch::minus;
        else if (branch_text != "+" && branch_text != "plus" && !branch_text.empty())
            throw flag_parse_error("--branch expects + or -");
        report["params"]["t"] = t.str();
        report["params"]["branch"] = std::string(1, branch_char(branch));
        auto sol = isosceles_from_parameter(*cfg, t, branch);
        if (!sol) {
            std::cerr << "error: degenerate parameter (apex collapses to the midpoint of O-P1)\n";
            return kExitDomain;
        }
        push_solution(*sol);
    }
    emit(report, format);
    return kExitOk;
}

int run_heron_curve(const Rational& m, const Rational& q, const std::string& format) {
    WeierstrassCurve e = build_E(m, q);
    json report = report_skeleton("heron-curve");
    report["params"]["m"] = m.str();
    report["params"]["q"] = q.str();
    report["records"].push_back(curve_record(e, m, q, true));
    if (e.elliptic()) {
        report["records"].push_back(two_torsion_record(m, q, e));
        Rational x1 = two_torsion_x(m, q);
        report["records"].push_back(
            ec_point_record(e, ECPoint::affine(x1, Rational(0)), "two_torsion", 2, false));
        if (!m.is_zero()) {
            json cp{{"type", "c_point"}, {"m", m.str()}, {"q", q.str()},
                    {"coords", to_json(two_torsion_cpoint({m, q}))}};
            report["records"].push_back(cp);
        }
    } else {
        std::cerr << "note: E_{m,q} is singular at these parameters; group data omitted\n";
    }
    emit(report, format);
    return kExitOk;
}

int run_heron_gen(const Rational& m, const Rational& q, long count, const std::string& format) {
    GenerationResult gen = generate_heron_triangles(m, q, count);
    json report = report_skeleton("heron-gen");
    report["params"]["m"] = m.str();
    report["params"]["q"] = q.str();
    report["params"]["count"] = count;
    report["records"].push_back(curve_record(build_E(m, q), m, q, false));
    for (std::size_t i = 0; i < gen.triangles.size(); ++i) {
        json cp{{"type", "c_point"}, {"m", m.str()}, {"q", q.str()},
                {"coords", to_json(gen.cpoints[i])}};
        report["records"].push_back(cp);
        report["records"].push_back(heron_triangle_record(gen.triangles[i], m, q, gen.multiples[i]));
    }
    emit(report, format);
    if (gen.witness_exhausted && static_cast<long>(gen.triangles.size()) < count) {
        std::cerr << "error: witness point is torsion; only " << gen.triangles.size()
                  << " triangles exist in its orbit\n";
        return kExitDomain;
    }
    return kExitOk;
}

int run_heron_torsion(const Rational& m, const std::string& n_text, const std::string& q_text,
                      const std::string& format) {
    json report = report_skeleton("heron-torsion");
    report["params"]["m"] = m.str();
    Rational q;
    if (!n_text.empty()) {
        Rational n = need_rational(n_text, "--n");
        q = full_two_torsion_q(m, n);
        report["params"]["n"] = n.str();
    } else {
        q = need_rational(q_text, "--q");
    }
    report["params"]["q"] = q.str();
    WeierstrassCurve e = build_E(m, q);
    if (!e.elliptic()) {
        std::cerr << "error: singular curve\n";
        return kExitDomain;
    }
    report["records"].push_back(curve_record(e, m, q, false));
    report["records"].push_back(two_torsion_record(m, q, e));
    Rational x1 = two_torsion_x(m, q);
    report["records"].push_back(
        ec_point_record(e, ECPoint::affine(x1, Rational(0)), "two_torsion", 2, false));
    if (!m.is_zero()) {
        json cp{{"type", "c_point"}, {"m", m.str()}, {"q", q.str()},
                {"coords", to_json(two_torsion_cpoint({m, q}))}};
        report["records"].push_back(cp);
    }
    emit(report, format);
    return kExitOk;
}

int run_heron_order4(const Rational& m, const Rational& t, const std::string& format) {
    Order4Point inst = order4_point(m, t);
    WeierstrassCurve e = build_E(m, inst.q);
    ECPoint dbl = add(e, inst.point, inst.point);
    json report = report_skeleton("heron-order4");
    report["params"]["m"] = m.str();
    report["params"]["t"] = t.str();
    report["records"].push_back(curve_record(e, m, inst.q, false));
    report["records"].push_back(json{{"type", "order4"},
                                     {"m", m.str()},
                                     {"t", t.str()},
                                     {"q", inst.q.str()},
                                     {"point", to_json(inst.point)},
                                     {"double_point", to_json(dbl)},
                                     {"torsion_order", 4}});
    emit(report, format);
    return kExitOk;
}

int run_heron_witnesses(const Rational& m, const std::string& q_text, const std::string& h_text,
                        const std::string& u_text, int depth, double tolerance,
                        const std::string& format) {
    json report = report_skeleton("heron-witnesses");
    report["params"]["m"] = m.str();

    Rational q;
    std::optional<ECPoint> second;
    std::string second_name;
    std::optional<CPoint> cpoint;
    if (!q_text.empty()) {
        q = need_rational(q_text, "--q");
    } else if (!h_text.empty()) {
        Rational h = need_rational(h_text, "--h");
        auto w = rank_witness_Q(m, h);
        q = w.q;
        second = w.point;
        second_name = "Q";
        cpoint = w.cpoint;
        report["params"]["h"] = h.str();
        report["params"]["congruent_number_A"] = congruent_number_A(h).str();
    } else {
        Rational u = need_rational(u_text, "--u");
        auto w = rank_witness_H(m, u);
        q = w.q;
        second = w.point;
        second_name = "H";
        cpoint = w.cpoint;
        report["params"]["u"] = u.str();
        report["params"]["area"] = w.area.str();
    }
    report["params"]["q"] = q.str();

    WeierstrassCurve e = build_E(m, q);
    if (!e.elliptic()) {
        std::cerr << "error: singular curve\n";
        return kExitDomain;
    }
    ECPoint p = rank_witness_P(m, q);
    auto p_order = torsion_order(e, p);
    report["records"].push_back(curve_record(e, m, q, false));
    report["records"].push_back(ec_point_record(e, p, "P", p_order, !p_order.has_value()));

    if (second) {
        auto s_order = torsion_order(e, *second);
        report["records"].push_back(
            ec_point_record(e, *second, second_name, s_order, !s_order.has_value()));
        json cp{{"type", "c_point"}, {"m", m.str()}, {"q", q.str()}, {"coords", to_json(*cpoint)}};
        report["records"].push_back(cp);
        auto rec = triangle_from_cpoint({m, q}, canonicalize_class(*cpoint));
        if (rec) report["records"].push_back(heron_triangle_record(*rec, m, q, std::nullopt));
        if (!p_order && !s_order) {
            double det = independence_gram_det(e, p, *second, depth);
            json ind{{"type", "independence"},
                     {"curve", json{{"A", e.A().str()}, {"B", e.B().str()}}},
                     {"P", to_json(p)},
                     {"Q", to_json(*second)},
                     {"sum", to_json(add(e, p, *second))},
                     {"depth", depth},
                     {"tolerance", tolerance},
                     {"gram_det", det},
                     {"independent", det > tolerance},
                     {"heuristic", true}};
            report["records"].push_back(ind);
        } else {
            std::cerr << "note: a witness is torsion here; independence heuristic skipped\n";
        }
    }
    emit(report, format);
    return kExitOk;
}

int run_genus3_special(const Rational& u, const std::string& family, const std::string& format) {
    json report = report_skeleton("genus3-special");
    report["params"]["u"] = u.str();
    if (!family.empty()) report["params"]["family"] = family;

    auto push = [&](const GenusThreeSpecial& sp, bool with_congruent) {
        json cq{{"type", "cq_point"}, {"q", sp.q.str()}, {"coords", to_json(sp.point)}};
        report["records"].push_back(cq);
        auto rec = triangle_from_cqpoint({sp.q}, sp.point);
        if (!rec) throw std::logic_error("genus3 special point gave a degenerate triangle");
        json t = triangle_record_json(*rec);
        t["q"] = sp.q.str();
        t["parabola"] = true;
        report["records"].push_back(t);
        if (with_congruent) report["params"]["congruent_number"] = congruent_number_genus3(u).str();
    };

    if (family.empty() || family == "isosceles") push(isosceles_point(u), false);
    if (family.empty() || family == "right") push(right_point(u), true);
    emit(report, format);
    return kExitOk;
}

int run_genus3_search(const Rational& q, long height, int jobs, const std::string& format) {
    GenusThreeParams params{q};
    auto hits = search_points(params, height, jobs);
    json report = report_skeleton("genus3-search");
    report["params"]["q"] = q.str();
    report["params"]["height"] = height;
    for (const auto& h : hits) {
        json cq{{"type", "cq_point"}, {"q", q.str()}, {"coords", to_json(h)}};
        report["records"].push_back(cq);
        auto rec = triangle_from_cqpoint(params, h);
        if (rec) {
            json t = triangle_record_json(*rec);
            t["q"] = q.str();
            t["parabola"] = true;
            report["records"].push_back(t);
        }
    }
    emit(report, format);
    return kExitOk;
}

int run_verify(const std::string& path, const std::string& format) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open " << path << "\n";
            return kExitParse;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json report;
    try {
        report = json::parse(text);
    } catch (const json::parse_error& e) {
        std::cerr << "error: input is not valid JSON: " << e.what() << "\n";
        return kExitParse;
    }
    VerifyOutcome outcome = verify_report(report);
    emit(outcome.to_json(), format);
    return outcome.failed == 0 ? kExitOk : kExitDomain;
}

int default_jobs() {
    if (const char* env = std::getenv("HERON_CURVES_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 64) return static_cast<int>(v);
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational triangles via algebraic curves: exact constructions and verification"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));

    auto* iso = app.add_subcommand("isosceles", "genus-0 family: rational isosceles triangles");
    std::string iso_p1, iso_t, iso_branch;
    bool iso_enumerate = false;
    long iso_height = 0;
    int iso_jobs = default_jobs();
    iso->add_option("--p1", iso_p1, "base endpoint X1,Y1")->required();
    iso->add_option("--t", iso_t, "parameter t (exact rational or decimal)");
    iso->add_option("--branch", iso_branch, "+ or - apex branch");
    iso->add_flag("--enumerate", iso_enumerate, "enumerate all t up to --height");
    iso->add_option("--height", iso_height, "naive height bound for t");
    iso->add_option("--jobs", iso_jobs, "worker threads for enumeration");

    auto* heron = app.add_subcommand("heron", "elliptic-curve family: Heron triangles");
    heron->require_subcommand(1);
    std::string h_m, h_q, h_n, h_t, h_h, h_u;
    long h_count = 1;
    int h_depth = 3;
    double h_tol = 0.01;

    auto* hcurve = heron->add_subcommand("curve", "Weierstrass model, invariants, torsion summary");
    hcurve->add_option("--m", h_m)->required();
    hcurve->add_option("--q", h_q)->required();

    auto* hgen = heron->add_subcommand("gen", "generate distinct Heron triangles from the witness orbit");
    hgen->add_option("--m", h_m)->required();
    hgen->add_option("--q", h_q)->required();
    hgen->add_option("--count", h_count)->required();

    auto* htor = heron->add_subcommand("torsion", "2-torsion data; --n picks q(n) with full 2-torsion");
    htor->add_option("--m", h_m)->required();
    htor->add_option("--n", h_n);
    htor->add_option("--q", h_q);

    auto* hord = heron->add_subcommand("order4", "the order-4 torsion family q(t)");
    hord->add_option("--m", h_m)->required();
    hord->add_option("--t", h_t)->required();

    auto* hwit = heron->add_subcommand("witnesses", "rank witnesses P, Q(h), H(u)");
    hwit->set_help_flag("--help", "print help");  // frees -h for the --h parameter
    hwit->add_option("--m", h_m)->required();
    hwit->add_option("--q", h_q);
    hwit->add_option("--h", h_h);
    hwit->add_option("--u", h_u);
    hwit->add_option("--depth", h_depth, "canonical height depth (1..5)");
    hwit->add_option("--tolerance", h_tol, "independence tolerance");

    auto* g3 = app.add_subcommand("genus3", "genus-3 family: apex on the parabola x = y^2");
    g3->require_subcommand(1);
    std::string g3_u, g3_q, g3_family;
    long g3_height = 1;
    int g3_jobs = default_jobs();

    auto* g3s = g3->add_subcommand("special", "explicit special points (isosceles and right families)");
    g3s->add_option("--u", g3_u)->required();
    g3s->add_option("--family", g3_family)->check(CLI::IsMember({"isosceles", "right"}));

    auto* g3search = g3->add_subcommand("search", "bounded-height exhaustive point search");
    g3search->add_option("--q", g3_q)->required();
    g3search->add_option("--height", g3_height)->required();
    g3search->add_option("--jobs", g3_jobs, "worker threads");

    auto* ver = app.add_subcommand("verify", "independently re-check an emitted report");
    std::string ver_path;
    ver->add_option("input", ver_path, "report file ('-' or empty reads stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (app.got_subcommand(iso))
            return run_isosceles(iso_p1, iso_t, iso_branch, iso_enumerate, iso_height, iso_jobs, format);
        if (heron->got_subcommand(hcurve))
            return run_heron_curve(need_rational(h_m, "--m"), need_rational(h_q, "--q"), format);
        if (heron->got_subcommand(hgen))
            return run_heron_gen(need_rational(h_m, "--m"), need_rational(h_q, "--q"), h_count, format);
        if (heron->got_subcommand(htor)) {
            if (h_n.empty() == h_q.empty()) {
                std::cerr << "error: provide exactly one of --n / --q\n";
                return kExitParse;
            }
            return run_heron_torsion(need_rational(h_m, "--m"), h_n, h_q, format);
        }
        if (heron->got_subcommand(hord))
            return run_heron_order4(need_rational(h_m, "--m"), need_rational(h_t, "--t"), format);
        if (heron->got_subcommand(hwit)) {
            int given = (!h_q.empty() ? 1 : 0) + (!h_h.empty() ? 1 : 0) + (!h_u.empty() ? 1 : 0);
            if (given != 1) {
                std::cerr << "error: provide exactly one of --q / --h / --u\n";
                return kExitParse;
            }
            if (h_depth < 1 || h_depth > 5) {
                std::cerr << "error: --depth must be in [1, 5]\n";
                return kExitParse;
            }
            return run_heron_witnesses(need_rational(h_m, "--m"), h_q, h_h, h_u, h_depth, h_tol, format);
        }
        if (g3->got_subcommand(g3s))
            return run_genus3_special(need_rational(g3_u, "--u"), g3_family, format);
        if (g3->got_subcommand(g3search))
            return run_genus3_search(need_rational(g3_q, "--q"), g3_height, g3_jobs, format);
        if (app.got_subcommand(ver)) return run_verify(ver_path, format);
        std::cerr << "error: no subcommand\n";
        return kExitParse;
    } catch (const flag_parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const heroncurves::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomain;
    }
}
