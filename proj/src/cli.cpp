#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "monogen/bounds.hpp"
#include "monogen/json_io.hpp"

namespace monogen {

namespace {

std::vector<Int> parse_int_list(const std::string& csv) {
    std::vector<Int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw usage_error("empty entry in integer list '" + csv + "'");
        try {
            out.push_back(Int(item.substr(a, b - a + 1)));
        } catch (const std::exception&) {
            throw usage_error("bad integer '" + item + "' in list");
        }
    }
    if (out.empty())
        throw usage_error("empty integer list");
    return out;
}

std::vector<Int> parse_int_list_n(const std::string& csv, std::size_t n, const char* what) {
    std::vector<Int> out = parse_int_list(csv);
    if (out.size() != n)
        throw usage_error(std::string(what) + " needs exactly " + std::to_string(n) + " comma-separated integers");
    return out;
}

// accepts "123", "-4/7" and decimal strings like "0.888888889", all exact
Rat parse_rational(const std::string& s) {
    if (s.empty())
        throw usage_error("empty rational");
    try {
        std::size_t slash = s.find('/');
        if (slash != std::string::npos) {
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            if (den == 0)
                throw usage_error("zero denominator");
            return make_rat(std::move(num), std::move(den));
        }
        std::size_t dot = s.find('.');
        if (dot == std::string::npos) return Rat(Int(s));
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        if (tail.find_first_not_of("0123456789") != std::string::npos)
            throw usage_error("bad decimal");
        bool neg = !head.empty() && head[0] == '-';
        Int ipart = (head.empty() || head == "-" || head == "+") ? Int(0) : Int(head);
        Int scale = pow_int(10, static_cast<unsigned>(tail.size()));
        Int frac = tail.empty() ? Int(0) : Int(tail);
        Int total = abs(ipart) * scale + frac;
        if (neg) total = -total;
        return Rat(total, scale);
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception&) {
        throw usage_error("bad rational '" + s + "'");
    }
}

mat3 parse_mat3(const std::string& csv, const char* what) {
    std::vector<Int> v = parse_int_list_n(csv, 9, what);
    mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = v[static_cast<std::size_t>(3 * i + j)];
    return m;
}

unimodular2 parse_mat2(const std::string& csv) {
    std::vector<Int> v = parse_int_list_n(csv, 4, "--matrix");
    return make_unimodular2(v[0], v[1], v[2], v[3]);
}

monic_quartic parse_poly(const std::string& csv) {
    std::vector<Int> v = parse_int_list_n(csv, 4, "--poly");
    return monic_quartic{v[0], v[1], v[2], v[3]};
}

// univariate rendering of a form in x alone, e.g. "x^3 - 4x - 1"
std::string poly_to_string(const std::vector<Int>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::string out;
    for (int i = 0; i <= n; ++i) {
        const Int& c = coeffs[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Int a = abs(c);
        int p = n - i;
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        bool show_coeff = (a != 1) || (p == 0);
        if (show_coeff) out += a.str();
        if (p > 0) {
            out += "x";
            if (p > 1) out += "^" + std::to_string(p);
        }
    }
    return out.empty() ? "0" : out;
}

std::string matrix_lines(const mat3& m) {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (j) out += " ";
            out += m[i][j].str();
        }
        out += "\n";
    }
    return out;
}

std::string coeff_line(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += v[i].str();
    }
    return out;
}

struct run_config {
    bool json_out = false;
    std::string out_path;
    int digits = 60;
    std::string epsilon = "1/1000000000";
};

void emit(const run_config& cfg, const json& j, const std::string& text) {
    std::string payload = cfg.json_out ? j.dump(1) + "\n" : text;
    if (cfg.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f)
        throw usage_error("cannot open output file '" + cfg.out_path + "'");
    f << payload;
}

bound_params make_params(const run_config& cfg, const std::string& c_str) {
    if (cfg.digits < 40)
        throw usage_error("--precision must be at least 40");
    bound_params p;
    p.C = parse_rational(c_str);
    p.epsilon = parse_rational(cfg.epsilon);
    p.digits = cfg.digits;
    if (p.epsilon <= 0)
        throw usage_error("--epsilon must be positive");
    return p;
}

const char* error_name(const error& e) {
    if (dynamic_cast<const reduction_incomplete*>(&e)) return "reduction_incomplete";
    if (dynamic_cast<const precondition_failed*>(&e)) return "precondition_failed";
    if (dynamic_cast<const non_integral_table*>(&e)) return "non_integral_table";
    if (dynamic_cast<const degenerate_discriminant*>(&e)) return "degenerate_discriminant";
    if (dynamic_cast<const sanity_violation*>(&e)) return "sanity_violation";
    if (dynamic_cast<const no_feasible_r*>(&e)) return "no_feasible_r";
    return "error";
}

}

int run_cli(int argc, char** argv) {
    CLI::App app{"exact computations around monogenic quartic orders"};
    app.require_subcommand(1);

    run_config cfg;
    app.add_flag("--json", cfg.json_out, "emit JSON instead of text")->configurable(false);
    app.add_option("--out", cfg.out_path, "write output to a file instead of stdout");
    app.add_option("--precision", cfg.digits, "working decimal precision (>= 40)");
    app.add_option("--epsilon", cfg.epsilon, "slack subtracted inside kappa, as a rational");

    // shared option storage; each subcommand reads what it declared
    std::string coeffs, matrix, mode = "plain", gram_a, gram_b, poly, heights = "200,200,50";
    std::string ring_path, cubic, order, target = "1", k_list, c_str, kappa_str;
    long height = 100, r_arg = 1, box = 50;
    int sig = 9;
    bool sign_identified = false;

    CLI::App* sc_disc = app.add_subcommand("disc", "discriminant of a binary form");
    sc_disc->add_option("--coeffs", coeffs, "descending coefficients")->required();

    CLI::App* sc_content = app.add_subcommand("content", "content of a binary form");
    sc_content->add_option("--coeffs", coeffs, "descending coefficients")->required();

    CLI::App* sc_act = app.add_subcommand("act", "substitute a unimodular matrix into a form");
    sc_act->add_option("--coeffs", coeffs, "descending coefficients")->required();
    sc_act->add_option("--matrix", matrix, "a,b,c,d by rows")->required();
    sc_act->add_option("--mode", mode, "plain, cubic or quartic twist")
        ->check(CLI::IsMember({"plain", "cubic", "quartic"}));

    CLI::App* sc_pair = app.add_subcommand("resolve-pair", "binary cubic attached to a pair of ternary forms");
    sc_pair->add_option("--gram-a", gram_a, "first doubled Gram matrix, 9 integers by rows")->required();
    sc_pair->add_option("--gram-b", gram_b, "second doubled Gram matrix, 9 integers by rows")->required();

    CLI::App* sc_embed = app.add_subcommand("embed", "pair of ternary forms attached to a quartic form");
    sc_embed->add_option("--coeffs", coeffs, "five descending coefficients")->required();

    CLI::App* sc_invert = app.add_subcommand("invert", "quartic form back from an anchored pair");
    sc_invert->add_option("--gram-b", gram_b, "second doubled Gram matrix, 9 integers by rows")->required();

    CLI::App* sc_rho = app.add_subcommand("rho", "induced 3x3 transform of a 2x2 unimodular matrix");
    sc_rho->add_option("--matrix", matrix, "a,b,c,d by rows")->required();

    CLI::App* sc_res = app.add_subcommand("resolvent", "monic resolvent cubic of a monic quartic");
    sc_res->add_option("--poly", poly, "b,c,d,e of x^4+bx^3+cx^2+dx+e")->required();

    CLI::App* sc_count = app.add_subcommand("count", "count monogenizations of a monic quartic");
    sc_count->add_option("--poly", poly, "b,c,d,e of x^4+bx^3+cx^2+dx+e")->required();
    sc_count->add_option("--heights", heights, "cubic,quartic,reduce search heights");

    CLI::App* sc_mono = app.add_subcommand("monogenizers", "canonical index-1 generators of a ring");
    sc_mono->add_option("--ring", ring_path, "ring table as a JSON file");
    sc_mono->add_option("--cubic", cubic, "cubic form a,b,c,d; uses its cubic ring");
    sc_mono->add_option("--order", order, "binary form coefficients; uses its invariant order");
    sc_mono->add_option("--height", height, "coordinate box half-width");

    CLI::App* sc_thue = app.add_subcommand("thue", "box solutions of F(x,y) = m");
    sc_thue->add_option("--coeffs", coeffs, "descending coefficients")->required();
    sc_thue->add_option("--target", target, "integer target, or pm1 for |F| = 1");
    sc_thue->add_option("--height", height, "box half-width")->required();
    sc_thue->add_flag("--sign-identified", sign_identified, "keep one of each (v, -v) pair");

    CLI::App* sc_bounds = app.add_subcommand("bounds", "explicit bound machinery");
    sc_bounds->require_subcommand(1);
    CLI::App* sb_table = sc_bounds->add_subcommand("table", "optimal (r, bound) rows for C = 10^k");
    sb_table->add_option("--k-list", k_list, "comma-separated exponents k")->required();
    CLI::App* sb_opt = sc_bounds->add_subcommand("optimize", "best r for a given C");
    sb_opt->add_option("--C", c_str, "positive rational")->required();
    CLI::App* sb_thr = sc_bounds->add_subcommand("threshold", "d1^(1/(1-kappa))");
    sb_thr->add_option("--kappa", kappa_str, "rational in (0,1)")->required();
    sb_thr->add_option("--sig", sig, "significant digits to print");
    CLI::App* sb_sub = sc_bounds->add_subcommand("sublattices", "index-r sublattices in Hermite form");
    sb_sub->add_option("--r", r_arg, "index")->required();
    CLI::App* sb_cov = sc_bounds->add_subcommand("cover", "do index-r sublattices cover a box");
    sb_cov->add_option("--r", r_arg, "index")->required();
    sb_cov->add_option("--box", box, "box half-width");

    // let --json, --out, --precision and --epsilon appear after the
    // subcommand name as well
    for (CLI::App* s : app.get_subcommands(nullptr)) {
        s->fallthrough();
        for (CLI::App* n : s->get_subcommands(nullptr)) n->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for the grammar\n";
        return 2;
    }

    try {
        if (*sc_disc) {
            binary_form f = make_form(parse_int_list(coeffs));
            Int d = discriminant(f);
            emit(cfg, json{{"coeffs", to_json(f)["coeffs"]}, {"discriminant", int_to_json(d)}},
                 d.str() + "\n");
        } else if (*sc_content) {
            binary_form f = make_form(parse_int_list(coeffs));
            Int c = content(f);
            emit(cfg, json{{"coeffs", to_json(f)["coeffs"]}, {"content", int_to_json(c)}},
                 c.str() + "\n");
        } else if (*sc_act) {
            binary_form f = make_form(parse_int_list(coeffs));
            unimodular2 g = parse_mat2(matrix);
            action_mode m = action_mode::plain;
            if (mode == "cubic") m = action_mode::cubic_twist;
            else if (mode == "quartic") m = action_mode::quartic_twist;
            binary_form out = act(g, f, m);
            emit(cfg,
                 json{{"input", to_json(f)}, {"matrix", to_json(g)}, {"mode", mode}, {"result", to_json(out)}},
                 coeff_line(out.c) + "\n");
        } else if (*sc_pair) {
            ternary_pair p{make_ternary(parse_mat3(gram_a, "--gram-a")),
                           make_ternary(parse_mat3(gram_b, "--gram-b"))};
            binary_form out = resolvent_cubic(p);
            emit(cfg, json{{"pair", to_json(p)}, {"resolvent", to_json(out)}},
                 coeff_line(out.c) + "\n");
        } else if (*sc_embed) {
            std::vector<Int> v = parse_int_list_n(coeffs, 5, "--coeffs");
            ternary_pair p = pair_from_quartic(make_form(v));
            emit(cfg, to_json(p), matrix_lines(p.a.g) + "--\n" + matrix_lines(p.b.g));
        } else if (*sc_invert) {
            ternary_pair p{anchor_form(), make_ternary(parse_mat3(gram_b, "--gram-b"))};
            binary_form f = quartic_from_pair(p);
            emit(cfg, json{{"pair", to_json(p)}, {"coeffs", to_json(f)["coeffs"]}},
                 coeff_line(f.c) + "\n");
        } else if (*sc_rho) {
            unimodular2 g = parse_mat2(matrix);
            unimodular3 r = induced_transform(g);
            emit(cfg, json{{"matrix", to_json(g)}, {"rho", to_json(r.m)}}, matrix_lines(r.m));
        } else if (*sc_res) {
            monic_quartic q = parse_poly(poly);
            binary_form out = resolvent_of_monic(q);
            emit(cfg, json{{"poly", to_json(homogenize(q))["coeffs"]}, {"resolvent", to_json(out)}},
                 poly_to_string(out.c) + "\n");
        } else if (*sc_count) {
            monic_quartic q = parse_poly(poly);
            std::vector<Int> hv = parse_int_list_n(heights, 3, "--heights");
            if (hv[0] < 1 || hv[1] < 1 || hv[2] < 1)
                throw usage_error("heights must be positive");
            count_report rep = count_monogenizations(q, static_cast<long>(hv[0]),
                                                     static_cast<long>(hv[1]), static_cast<int>(hv[2]));
            std::string text = "resolvent: " + poly_to_string(rep.resolvent.c) + "\n";
            for (const count_branch& br : rep.branches) {
                text += "branch (" + br.p.str() + ", " + br.q.str() + "): ";
                text += "h = [" + coeff_line(br.h.c) + "], representatives " + std::to_string(br.reps.size()) + "\n";
            }
            text += "total: " + rep.total.str() + "\n";
            emit(cfg, to_json(rep), text);
        } else if (*sc_mono) {
            int sources = (!ring_path.empty()) + (!cubic.empty()) + (!order.empty());
            if (sources != 1)
                throw usage_error("give exactly one of --ring, --cubic, --order");
            if (height < 1)
                throw usage_error("--height must be positive");
            rank_ring r;
            if (!ring_path.empty()) {
                std::ifstream in(ring_path);
                if (!in)
                    throw usage_error("cannot read ring file '" + ring_path + "'");
                json j;
                try {
                    in >> j;
                } catch (const std::exception& e) {
                    throw usage_error(std::string("bad ring JSON: ") + e.what());
                }
                r = ring_from_json(j);
            } else if (!cubic.empty()) {
                r = cubic_ring_from_form(make_form(parse_int_list_n(cubic, 4, "--cubic")));
            } else {
                r = invariant_order(make_form(parse_int_list(order)));
            }
            std::vector<ring_element> gens = enumerate_monogenizers(r, height);
            json garr = json::array();
            std::string text;
            for (const ring_element& g : gens) {
                garr.push_back(to_json(g)["coords"]);
                text += coeff_line(g.x) + "\n";
            }
            text += "count: " + std::to_string(gens.size()) + "\n";
            emit(cfg,
                 json{{"ring", to_json(r)}, {"height", height}, {"count", gens.size()}, {"generators", garr}},
                 text);
        } else if (*sc_thue) {
            binary_form f = make_form(parse_int_list(coeffs));
            if (height < 0)
                throw usage_error("--height must be nonnegative");
            thue_target t = (target == "pm1")
                                ? thue_target::plus_minus_one()
                                : thue_target::exact([&] {
                                      try {
                                          return Int(target);
                                      } catch (const std::exception&) {
                                          throw usage_error("bad --target '" + target + "'");
                                      }
                                  }());
            thue_solutions s = solve_box(f, t, height, sign_identified);
            std::string text;
            for (const auto& [x, y] : s.sols) text += x.str() + " " + y.str() + "\n";
            text += "count: " + std::to_string(s.sols.size()) + "\n";
            emit(cfg, to_json(s), text);
        } else if (*sb_table) {
            std::vector<Int> ks = parse_int_list(k_list);
            json rows = json::array();
            std::string text;
            for (const Int& kv : ks) {
                if (kv < 1 || kv > 300)
                    throw usage_error("table exponents must lie in 1..300");
                unsigned ke = static_cast<unsigned>(kv);
                bound_params p = make_params(cfg, "1");
                p.C = Rat(pow_int(10, ke));
                bound_report rep = optimize(p);
                std::string k3 = kappa(rep.r_star, p).truncated_string(3);
                rows.push_back(json{{"k", int_to_json(kv)},
                                    {"r", rep.r_star},
                                    {"kappa", k3},
                                    {"bound", int_to_json(rep.bound)}});
                text += kv.str() + "  " + std::to_string(rep.r_star) + "  " + k3 + "  " + rep.bound.str() + "\n";
            }
            emit(cfg, json{{"rows", rows}}, text);
        } else if (*sb_opt) {
            bound_params p = make_params(cfg, c_str);
            bound_report rep = optimize(p);
            std::string text = "r: " + std::to_string(rep.r_star) + "\n";
            text += "kappa: " + kappa(rep.r_star, p).truncated_string(6) + "\n";
            text += "bound: " + rep.bound.str() + "\n";
            emit(cfg, to_json(rep), text);
        } else if (*sb_thr) {
            if (cfg.digits < 40)
                throw usage_error("--precision must be at least 40");
            Rat kv = parse_rational(kappa_str);
            real thr = corollary_threshold(kv, cfg.digits);
            std::string s = thr.sci_string(sig);
            emit(cfg, json{{"kappa", kappa_str}, {"threshold", s}}, s + "\n");
        } else if (*sb_sub) {
            if (r_arg < 1)
                throw usage_error("--r must be positive");
            std::vector<sublattice> ls = sublattices(r_arg);
            std::string text;
            for (const sublattice& l : ls)
                text += l.a.str() + " " + l.b.str() + " " + l.d.str() + "\n";
            text += "count: " + std::to_string(ls.size()) + "\n";
            emit(cfg, json{{"r", r_arg}, {"count", ls.size()}, {"sublattices", to_json(ls)}}, text);
        } else if (*sb_cov) {
            if (r_arg < 1 || box < 1)
                throw usage_error("--r and --box must be positive");
            cover_result c = cover_check(r_arg, box);
            std::string text = c.covered
                                   ? "covered\n"
                                   : "uncovered at (" + c.witness_x.str() + ", " + c.witness_y.str() + ")\n";
            emit(cfg, json{{"r", r_arg}, {"box", box}, {"result", to_json(c)}}, text);
        }
        return 0;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const reduction_incomplete& e) {
        json err{{"error", "reduction_incomplete"}, {"message", e.what()}, {"partial", to_json(e.partial)}};
        std::cout << err.dump(1) << "\n";
        return 1;
    } catch (const error& e) {
        json err{{"error", error_name(e)}, {"message", e.what()}};
        std::cout << err.dump(1) << "\n";
        return 1;
    }
}

}
