#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "io.hpp"
#include "siegel/analytic.hpp"
#include "siegel/cocycle.hpp"
#include "siegel/cosets.hpp"
#include "siegel/gauss.hpp"
#include "siegel/theta.hpp"
#include "siegel/verify.hpp"

using namespace siegel;
using namespace siegel::cli;

namespace {

constexpr const char* kSchema = "siegel-report/1";

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2 };

struct Globals {
    std::string json_path;
    bool text = false;
};

struct Output {
    json doc;
    int code = kOk;
};

json report(const std::string& command) { return {{"schema", kSchema}, {"command", command}}; }

json coset_json(const CosetRecord& r) {
    return {{"q", r.q.str()},
            {"m_prime", to_json(r.m_prime.mat())},
            {"m", to_json(r.m.mat())},
            {"m_q", r.m_q},
            {"eps_q", r.eps_q},
            {"m_xstar_exponent", r.m_xstar_q.exponent()},
            {"lift_t_exponent", r.t.exponent()}};
}

std::string coset_text(const CosetTable& table) {
    std::ostringstream os;
    os << std::left << std::setw(2 * table.genus() + 4) << "q" << std::setw(8) << "m_x*" << "M_q\n";
    for (const auto& r : table.records()) {
        std::ostringstream mq;
        for (std::size_t i = 0; i < r.m.mat().rows(); ++i) {
            mq << (i ? "; " : "");
            for (std::size_t j = 0; j < r.m.mat().cols(); ++j) mq << (j ? " " : "") << r.m(i, j);
        }
        os << std::setw(2 * table.genus() + 4) << r.q.str() << std::setw(8) << r.m_xstar_q.exponent() << mq.str() << "\n";
    }
    return os.str();
}

Output run_coset_table(std::size_t m, bool text) {
    if (m < 1 || m > 6) throw InputError("--m must be between 1 and 6");
    const CosetTable table(m);
    json out = report("coset-table");
    out["m"] = m;
    out["count"] = table.size();
    out["rows"] = json::array();
    for (const auto& r : table.records()) out["rows"].push_back(coset_json(r));
    if (text) out["text"] = coset_text(table);
    return {out};
}

Output run_cocycle(const std::string& f1, const std::string& f2) {
    const auto g1 = parse_symplectic(load_document(f1));
    const auto g2 = parse_symplectic(load_document(f2));
    if (g1.genus() != g2.genus()) throw InputError("g1 and g2 have different genus");
    json out = report("cocycle");
    out["m"] = g1.genus();
    out["rao"] = to_json(rao_cocycle(g1, g2));
    out["cbar_sign"] = cbar_cocycle(g1, g2);
    out["m_xstar_exponent"] = {{"g1", m_xstar(g1).exponent()}, {"g2", m_xstar(g2).exponent()}, {"g1g2", m_xstar(g1 * g2).exponent()}};
    return {out};
}

Output run_gauss_sum(const std::string& fd, const std::string& fc) {
    const IntMat d = parse_int_matrix(load_document(fd));
    const IntMat c = parse_int_matrix(load_document(fc));
    if (d.rows() != c.rows()) throw InputError("d and c must have the same size");
    const auto g = symplectic_gauss_sum(d, c);
    json out = report("gauss-sum");
    out["value"] = to_json(g);
    out["abs"] = std::abs(g);
    out["classes"] = residues_mod_cT(c).reps.size();
    return {out};
}

Output run_beta(const std::string& fg) {
    const auto g = parse_symplectic(load_document(fg));
    if (!in_theta_group(g)) throw InputError("g is not in the theta group");
    const SnappedRoot b = beta_tilde(g);
    json out = report("beta");
    out["value"] = to_json(b.value);
    out["raw"] = to_json(b.raw);
    out["residual"] = b.residual;
    return {out};
}

Output run_lambda(const std::string& fg) {
    const auto g = parse_symplectic(load_document(fg));
    if (!in_theta_group(g)) throw InputError("g is not in the theta group");
    json out = report("lambda");
    out["value"] = to_json(lambda_multiplier(g));
    return {out};
}

json theta_json(const ThetaValue& v, Weight w) {
    json out;
    if (w == Weight::Half) out["value"] = to_json(v.scalar);
    else {
        out["value"] = json::array();
        for (Eigen::Index i = 0; i < v.vec.size(); ++i) out["value"].push_back(to_json(v.vec(i)));
    }
    out["tail_bound"] = v.tail_bound;
    out["radius"] = v.radius;
    out["mass"] = v.mass;
    return out;
}

Output run_theta(const std::string& fz, const std::string& weight, const std::string& component, double tail_tol) {
    const SiegelPoint z = parse_siegel_point(load_document(fz));
    Weight w;
    if (weight == "1/2") w = Weight::Half;
    else if (weight == "3/2") w = Weight::ThreeHalf;
    else throw InputError("--weight must be 1/2 or 3/2");
    ThetaParams params;
    params.tail_tol = tail_tol;
    json out = report("theta");
    out["m"] = z.genus();
    out["weight"] = weight;
    if (component.empty()) {
        out.update(theta_json(theta_series(z, w, params), w));
    } else if (component == "all") {
        out["components"] = json::array();
        for (const auto& c : big_theta(CosetTable(z.genus()), z, w, params)) {
            json row = theta_json(c.value, w);
            row["q"] = c.q.str();
            row["prefactor_exponent"] = c.prefactor.exponent();
            out["components"].push_back(row);
        }
    } else {
        const CosetTable table(z.genus());
        const F2Vector q = parse_f2_vector(component, z.genus());
        if (q0_eval(q) != 0) throw InputError("component label is not an isotropic vector");
        const auto c = theta_component(table[table.index_of(q)], 1, z, w, params);
        out.update(theta_json(c.value, w));
        out["q"] = c.q.str();
        out["prefactor_exponent"] = c.prefactor.exponent();
    }
    return {out};
}

struct VerifyArgs {
    std::string law = "scalar";
    std::size_t m = 1;
    std::size_t trials = 100;
    double tol = 1e-8;
    double tail_tol = 1e-12;
    std::uint64_t seed = 1;
    std::size_t word_length = 8;
};

json report_json(const VerificationReport& r) {
    return {{"law", r.theorem},
            {"m", r.m},
            {"trials", r.trials},
            {"tolerance", r.tolerance},
            {"max_abs_error", r.max_abs_error},
            {"max_rel_error", r.max_rel_error},
            {"max_rel_error_half", r.max_rel_error_half},
            {"max_rel_error_three_half", r.max_rel_error_three_half},
            {"worst_case", r.worst_case},
            {"seconds", r.seconds},
            {"pass", r.pass}};
}

Output run_verify(const VerifyArgs& a) {
    if (a.m < 1 || a.m > 3) throw InputError("--m must be between 1 and 3");
    if (a.trials == 0) throw InputError("--trials must be positive");
    if (!(a.tol > 0) || !(a.tail_tol > 0)) throw InputError("tolerances must be positive");
    VerifyOptions opt;
    opt.m = a.m;
    opt.trials = a.trials;
    opt.tol = a.tol;
    opt.seed = a.seed;
    opt.max_word_length = a.word_length;
    opt.theta.tail_tol = a.tail_tol;
    const VerificationReport r = a.law == "scalar" ? verify_scalar_law(opt) : verify_vector_law(opt);
    json out = report("verify");
    out["seed"] = a.seed;
    out["tail_tol"] = a.tail_tol;
    out.update(report_json(r));
    return {out, r.pass ? kOk : kFailed};
}

Output run_selftest() {
    json checks = json::array();
    bool all = true;
    auto check = [&](const std::string& name, auto&& body) {
        bool ok = false;
        std::string detail;
        try {
            detail = body(ok);
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        all = all && ok;
        checks.push_back({{"name", name}, {"pass", ok}, {"detail", detail}});
    };

    check("isotropic counts", [](bool& ok) {
        const std::size_t expect[] = {3, 10, 36, 136};
        ok = true;
        std::string d;
        for (std::size_t m = 1; m <= 4; ++m) {
            const std::size_t n = enumerate_isotropic(m).size();
            ok = ok && n == expect[m - 1] && coset_count(m) == n;
            d += (m > 1 ? " " : "") + std::to_string(n);
        }
        return d;
    });
    check("cocycle values", [](bool& ok) {
        const IntegerSymplectic u1(IntMat{{1, 0, -1, 0}, {0, 1, 0, -1}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        const IntegerSymplectic u2(IntMat{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 0, 1}});
        const Mu8 c = rao_cocycle(u1 * u2, gen_omega(2)).inv();
        ok = c == Mu8(-1) && m_xstar(u2) == Mu8(-1) && m_xstar(u1 * u2) == Mu8(-1);
        return "c^-1 exponent " + std::to_string(c.exponent());
    });
    check("gauss sums", [](bool& ok) {
        const auto g2 = symplectic_gauss_sum(IntMat{{1}}, IntMat{{-2}});
        const auto g4 = symplectic_gauss_sum(IntMat{{1}}, IntMat{{-4}});
        ok = std::abs(g2 - std::complex<double>(1, -1)) < 1e-12 &&
             std::abs(g4 - 2.0 * std::polar(1.0, -std::numbers::pi / 4)) < 1e-12;
        return "G(1,-4) = " + std::to_string(g4.real()) + std::to_string(g4.imag()) + "i";
    });
    check("trivialisation anchors", [](bool& ok) {
        const Mu8 a = beta_tilde(gen_u_lower(IntMat{{-4}})).value;
        const Mu8 b = beta_tilde(IntegerSymplectic(IntMat{{-3, 4}, {-4, 5}})).value;
        ok = a == Mu8(1) && b == Mu8(5);
        return "exponents " + std::to_string(a.exponent()) + " " + std::to_string(b.exponent());
    });
    check("multiplier", [](bool& ok) {
        ok = lambda_multiplier(gen_omega(1)) == Mu8(-1) && lambda_multiplier(IntegerSymplectic::identity(2)) == Mu8::one();
        return std::string("lambda(omega) exponent ") + std::to_string(lambda_multiplier(gen_omega(1)).exponent());
    });
    check("finite reduction", [](bool& ok) {
        const CosetTable table(2);
        const auto g = gen_iota(2, {0}, IntMat{{1, 1}, {0, 1}});
        const auto r = gen_iota(2, {0}, IntMat{{1, 0}, {-4, 1}});
        ok = f_shift(table, g) == Mu8::one() && f_shift(table, r) == Mu8(1) && f_shift(table, g * r) == Mu8(5) &&
             modified_cocycle(table, g, r) == Mu8::minus_one();
        return "c' exponent " + std::to_string(modified_cocycle(table, g, r).exponent());
    });
    check("theta at i", [](bool& ok) {
        const Complex t = theta_series(SiegelPoint::base(1), Weight::Half).scalar;
        ok = std::abs(t - 1.0864348112) < 1e-9;
        std::ostringstream os;
        os << std::setprecision(12) << t.real();
        return os.str();
    });
    check("automorphy branch", [](bool& ok) {
        const Complex s = sqrt_det(gen_omega(1), SiegelPoint::base(1));
        ok = std::abs(s * s - Complex(0, -1)) < 1e-12 || std::abs(s * s - Complex(0, 1)) < 1e-12;
        std::ostringstream os;
        os << s;
        return os.str();
    });

    json out = report("selftest");
    out["checks"] = checks;
    out["pass"] = all;
    return {out, all ? kOk : kFailed};
}

int emit(const Output& o, const Globals& g) {
    const std::string text = o.doc.dump(2);
    std::cout << text << "\n";
    if (!g.json_path.empty()) {
        std::ofstream f(g.json_path);
        if (!f) {
            std::cerr << "error: cannot write " << g.json_path << "\n";
            return kBadInput;
        }
        f << text << "\n";
    }
    return o.code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Metaplectic cocycles, Gauss-sum trivialisations and Siegel theta series"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML or INI file with default option values");
    Globals g;
    app.add_option("--json", g.json_path, "Also write the report to this file");

    std::function<Output()> action;

    std::size_t table_m = 1;
    bool table_text = false;
    auto* table = app.add_subcommand("coset-table", "Coset representatives of the theta group");
    table->add_option("--m", table_m, "Genus")->required();
    table->add_flag("--text", table_text, "Include an aligned text rendering");
    table->callback([&] { action = [&] { return run_coset_table(table_m, table_text); }; });

    std::string g1, g2;
    auto* coc = app.add_subcommand("cocycle", "Rao cocycle, sign cocycle and normalising constants");
    coc->add_option("--g1", g1, "Matrix file or inline JSON")->required();
    coc->add_option("--g2", g2, "Matrix file or inline JSON")->required();
    coc->callback([&] { action = [&] { return run_cocycle(g1, g2); }; });

    std::string gd, gc;
    auto* gauss = app.add_subcommand("gauss-sum", "Symplectic Gauss sum G(d,c)");
    gauss->add_option("--d", gd, "Matrix file or inline JSON")->required();
    gauss->add_option("--c", gc, "Matrix file or inline JSON")->required();
    gauss->callback([&] { action = [&] { return run_gauss_sum(gd, gc); }; });

    std::string gb;
    auto* beta = app.add_subcommand("beta", "Trivialisation of the cocycle on the theta group");
    beta->add_option("--g", gb, "Matrix file or inline JSON")->required();
    beta->callback([&] { action = [&] { return run_beta(gb); }; });

    std::string gl;
    auto* lam = app.add_subcommand("lambda", "Multiplier system of the theta series");
    lam->add_option("--g", gl, "Matrix file or inline JSON")->required();
    lam->callback([&] { action = [&] { return run_lambda(gl); }; });

    std::string tz, tw = "1/2", tq;
    double ttol = 1e-12;
    auto* theta = app.add_subcommand("theta", "Truncated Siegel theta series");
    theta->add_option("--z", tz, "Point file or inline JSON {\"re\":[[..]],\"im\":[[..]]}")->required();
    theta->add_option("--weight", tw, "1/2 or 3/2")->capture_default_str();
    theta->add_option("--component", tq, "Coset label such as 01|10, or 'all'");
    theta->add_option("--tol,--tail-tol", ttol, "Tail bound")->capture_default_str();
    theta->callback([&] { action = [&] { return run_theta(tz, tw, tq, ttol); }; });

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Randomised check of a theta transformation law");
    ver->add_option("--law", va.law, "scalar or vector")->check(CLI::IsMember({"scalar", "vector"}))->capture_default_str();
    ver->add_option("--m", va.m, "Genus")->capture_default_str();
    ver->add_option("--trials", va.trials, "Number of random trials")->capture_default_str();
    ver->add_option("--tol", va.tol, "Relative tolerance")->capture_default_str();
    ver->add_option("--tail-tol", va.tail_tol, "Theta tail bound")->capture_default_str();
    ver->add_option("--seed", va.seed, "Base seed")->capture_default_str();
    ver->add_option("--word-length", va.word_length, "Maximum random word length")->capture_default_str();
    ver->callback([&] { action = [&] { return run_verify(va); }; });

    auto* self = app.add_subcommand("selftest", "Check anchored constants");
    self->callback([&] { action = [] { return run_selftest(); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        return emit(action(), g);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const CapacityError& e) {
        std::cerr << "input error: " << e.what() << " (needs radius " << e.needed_radius << ")\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const std::length_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kBadInput;
}
