#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gamma/json_io.hpp"
#include "gamma/singularity.hpp"

namespace {

using namespace gq;

struct Options {
    bool json = false;
    std::string mode = "pm";
    bool color = false;
};

UnitMode unit_mode(const Options& o) { return o.mode == "c" ? UnitMode::C_TK : UnitMode::PM_TK; }

std::string paint(const Options& o, bool good, const std::string& text) {
    if (!o.color) return text;
    return (good ? "\033[32m" : "\033[31m") + text + "\033[0m";
}

void emit(const Options& o, const Json& j, const std::string& text) {
    if (o.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string factorization_text(const CyclotomicFactorization& f, const LaurentPoly& expanded) {
    std::string s;
    if (!(f.unit.coeff == Rational(1)) || f.unit.power != 0) {
        s += rational_to_string(f.unit.coeff);
        if (f.unit.power != 0) s += "*t^" + std::to_string(f.unit.power);
    }
    // Highest index first, matching the highest-degree-first polynomial style.
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
        if (!s.empty()) s += " * ";
        s += "Φ" + std::to_string(it->first);
        if (it->second > 1) s += "^" + std::to_string(it->second);
    }
    if (s.empty()) s = "1";
    return s + " = " + format_poly(expanded);
}

int cmd_factor(const Options& o, const std::string& text) {
    LaurentPoly p = parse_poly(text);
    CyclotomicFactorization f = factor_cyclotomic(p);
    Json j = to_json(f);
    j["expanded"] = format_poly(p);
    emit(o, j, factorization_text(f, p) + "\n");
    return 0;
}

int cmd_snf(const Options& o, const std::string& path) {
    PolyMatrix m = poly_matrix_from_json(load_json_file(path));
    SmithForm s = smith_normal_form(m);
    std::string text = "invariant factors:";
    for (const auto& f : s.invariant_factors) text += " " + format_poly(f) + ";";
    text += "\n";
    emit(o, to_json(s), text);
    return 0;
}

int cmd_homology(const Options& o, const std::string& path) {
    BasedChainComplex c = complex_from_json(load_json_file(path));
    HomologyProfile p = homology(c);
    std::string text;
    for (size_t i = 0; i < p.degrees(); ++i) {
        text += "H_" + std::to_string(i) + ": free rank " + std::to_string(p.modules[i].free_rank);
        text += ", delta = " + format_poly(p.delta[i]) + "\n";
    }
    emit(o, to_json(p), text);
    return 0;
}

int cmd_torsion(const Options& o, const std::string& path, const std::string& hbasis_path) {
    BasedChainComplex c = complex_from_json(load_json_file(path));
    HomologyBasisChoice h;
    if (!hbasis_path.empty()) h = homology_basis_from_json(load_json_file(hbasis_path));
    TorsionValue tau = reidemeister_torsion(c, h);
    RationalFn rep = unit_class_representative(tau.value.value);
    Json j;
    j["tau"] = format_ratfn(rep);
    j["mode"] = o.mode;
    emit(o, j, paint(o, true, "tau = " + format_ratfn(rep)) + "\n");
    return 0;
}

int cmd_charpoly(const Options& o, const std::vector<long>& exponents) {
    BrieskornExponents e{exponents};
    LaurentPoly p = brieskorn_charpoly(e);
    CyclotomicFactorization f = factor_cyclotomic(p);
    Json j = to_json(f);
    j["expanded"] = format_poly(p);
    j["mu"] = brieskorn_milnor_number(e).get_str();
    emit(o, j, factorization_text(f, p) + "\n");
    return 0;
}

int cmd_hypersurface(const Options& o, const std::string& action, const std::string& path) {
    HypersurfaceData data = dataset_from_json(load_json_file(path));
    IdentityReport rep = verify_corollary(data);
    std::string text;
    if (action == "solve") {
        if (rep.delta_n) text += "delta_n = " + format_poly(*rep.delta_n) + "\n";
        if (!rep.det_phi.is_zero()) text += "det_phi = " + format_ratfn(rep.det_phi) + "\n";
    }
    text += "mu = " + rep.mu.get_str() + ", xi = " + rep.xi_value.get_str() + "\n";
    for (const auto& c : rep.checks) {
        text += paint(o, c.passed, (c.passed ? "PASS " : "FAIL ") + c.name);
        if (!c.detail.empty()) text += "  (" + c.detail + ")";
        text += "\n";
    }
    emit(o, to_json(rep), text);
    return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    const char* color_env = std::getenv("GAMMA_TORSION_COLOR");
    std::string color = color_env ? color_env : "auto";
    opt.color = (color == "auto") && isatty(fileno(stdout));  // pipes stay ANSI-free

    CLI::App app{"Exact Laurent-polynomial toolkit: factorization, Smith forms, homology, torsion"};
    app.add_flag("--json", opt.json, "emit JSON instead of text");
    app.add_option("--mode", opt.mode, "unit-class ambiguity: pm (+-t^k) or c (c*t^k)")
        ->check(CLI::IsMember({"pm", "c"}));
    app.require_subcommand(1);

    std::string poly_text, matrix_path, complex_path, hbasis_path, data_path, hs_action;
    std::vector<long> exponents;

    CLI::App* factor = app.add_subcommand("factor", "factor a polynomial into cyclotomics");
    factor->add_option("poly", poly_text, "polynomial expression")->required();

    CLI::App* snf = app.add_subcommand("snf", "Smith normal form of a matrix");
    snf->add_option("matrix", matrix_path, "matrix JSON file")->required();

    CLI::App* hom = app.add_subcommand("homology", "homology of a chain complex");
    hom->add_option("complex", complex_path, "complex JSON file")->required();

    CLI::App* tor = app.add_subcommand("torsion", "Reidemeister torsion of a based complex");
    tor->add_option("complex", complex_path, "complex JSON file")->required();
    tor->add_option("--hbasis", hbasis_path, "homology basis JSON file");

    CLI::App* cp = app.add_subcommand("charpoly", "Brieskorn monodromy characteristic polynomial");
    cp->add_option("exponents", exponents, "exponents a_1 a_2 ...")->required();

    CLI::App* hs = app.add_subcommand("hypersurface", "verify or solve a hypersurface dataset");
    hs->add_option("action", hs_action, "verify or solve")->required()->check(CLI::IsMember({"verify", "solve"}));
    hs->add_option("data", data_path, "dataset JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Fold CLI11's usage-error codes into the input-error exit status;
        // --help stays 0.
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (factor->parsed()) return cmd_factor(opt, poly_text);
        if (snf->parsed()) return cmd_snf(opt, matrix_path);
        if (hom->parsed()) return cmd_homology(opt, complex_path);
        if (tor->parsed()) return cmd_torsion(opt, complex_path, hbasis_path);
        if (cp->parsed()) return cmd_charpoly(opt, exponents);
        if (hs->parsed()) return cmd_hypersurface(opt, hs_action, data_path);
    } catch (const gq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
