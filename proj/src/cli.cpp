#include "bbw/cli.hpp"

#include "bbw/bbw.hpp"
#include "bbw/render.hpp"
#include "bbw/resolution.hpp"
#include "bbw/tensor.hpp"
#include "bbw/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace bbw {

namespace {

int parse_sign(const std::string& text, const std::string& flag)
{
    if (text == "+")
        return +1;
    if (text == "-")
        return -1;
    throw std::invalid_argument(flag + " must be '+' or '-'");
}

long long parse_int(const std::string& token, const std::string& flag)
{
    size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(flag + ": invalid integer '" + token + "'");
    }
    if (used != token.size())
        throw std::invalid_argument(flag + ": invalid integer '" + token + "'");
    return value;
}

// "8", "6,8,10", "2-4", and comma-separated mixtures of these
std::vector<long long> parse_range(const std::string& text, const std::string& flag)
{
    std::vector<long long> values;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        size_t dash = token.find('-', 1);
        if (dash == std::string::npos) {
            values.push_back(parse_int(token, flag));
        } else {
            long long lo = parse_int(token.substr(0, dash), flag);
            long long hi = parse_int(token.substr(dash + 1), flag);
            if (lo > hi)
                throw std::invalid_argument(flag + ": empty range '" + token + "'");
            for (long long v = lo; v <= hi; ++v)
                values.push_back(v);
        }
    }
    std::vector<long long> unique;
    for (long long v : values)
        if (std::find(unique.begin(), unique.end(), v) == unique.end())
            unique.push_back(v);
    if (unique.empty())
        throw std::invalid_argument(flag + ": empty range");
    return unique;
}

bool admissible(const std::string& lemma, long long N, long long k)
{
    if (k < 1)
        return false;
    if (lemma == "cohomology-ualpha")
        return N >= 2 * k + 2;
    if (lemma == "wt")
        return N >= 2 * k + 3;
    if (lemma == "vanishing-terms")
        return N >= 2 * k + 2;
    if (lemma == "same-p-D")
        return N % 2 == 0 && N >= 2 * k + 4;
    if (lemma == "same-p-B")
        return N % 2 == 1 && N >= 2 * k + 3;
    return k <= 3 && N >= 2 * k + 2;  // resolution-example
}

SweepResult run_sweep(const std::string& lemma, const SpaceParams& sp, int jobs)
{
    if (lemma == "cohomology-ualpha")
        return sweep_cohomology_ualpha(sp, jobs);
    if (lemma == "wt")
        return sweep_wt(sp, jobs);
    if (lemma == "vanishing-terms")
        return sweep_vanishing_terms(sp, jobs);
    if (lemma == "same-p-D")
        return sweep_same_p_D(sp);
    if (lemma == "same-p-B")
        return sweep_same_p_B(sp);
    return sweep_resolution_example(sp);
}

}  // namespace

int run_cli(int argc, const char* const* argv)
{
    CLI::App app{"cohomology calculator for spinor bundles on isotropic Grassmannians"};
    app.require_subcommand(1);
    app.fallthrough();

    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for sweeps")
        ->envname("BBW_JOBS")
        ->check(CLI::Range(1, 1024));
    std::string out_path;
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    auto add_format = [](CLI::App* sub, std::string& slot) {
        sub->add_option("--format", slot, "output format")
            ->envname("BBW_FORMAT")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* coh = app.add_subcommand("cohomology", "cohomology of one equivariant bundle");
    coh->fallthrough();
    std::string coh_space;
    long long coh_N = 0;
    long long coh_k = 0;
    std::string coh_shape;
    long long coh_twist = 0;
    std::string coh_spinor;
    std::string coh_hom;
    std::string coh_format = "json";
    coh->add_option("--space", coh_space, "gr or ogr")
        ->required()
        ->check(CLI::IsMember({"gr", "ogr"}));
    coh->add_option("--N", coh_N, "dimension of V")->required();
    coh->add_option("--k", coh_k, "rank of U")->required();
    coh->add_option("--shape", coh_shape, "Young diagram, comma-separated rows")->required();
    CLI::Option* coh_twist_opt =
        coh->add_option("--twist", coh_twist, "tensor O(twist*H) (gr only)");
    CLI::Option* coh_spinor_opt =
        coh->add_option("--spinor", coh_spinor, "right spinor factor sign (ogr only)");
    CLI::Option* coh_hom_opt = coh->add_option(
        "--hom-spinors", coh_hom, "signs 's1,s2' for S_{s1}^dual (x) S_{s2} (ogr only)");
    add_format(coh, coh_format);

    CLI::App* lr = app.add_subcommand("lr", "Littlewood-Richardson product");
    lr->fallthrough();
    std::string lr_mu;
    std::string lr_nu;
    long long lr_max_height = -1;
    std::string lr_format = "json";
    lr->add_option("--mu", lr_mu, "first factor")->required();
    lr->add_option("--nu", lr_nu, "second factor")->required();
    lr->add_option("--max-height", lr_max_height, "truncate to this height");
    add_format(lr, lr_format);

    CLI::App* plethysm = app.add_subcommand("plethysm", "Lambda^m(Sym^2 U) for U of rank k");
    plethysm->fallthrough();
    long long pl_m = 0;
    long long pl_k = 0;
    std::string pl_format = "json";
    plethysm->add_option("--m", pl_m, "exterior power")->required()->check(CLI::NonNegativeNumber);
    plethysm->add_option("--k", pl_k, "rank of U")->required()->check(CLI::PositiveNumber);
    add_format(plethysm, pl_format);

    CLI::App* resolution =
        app.add_subcommand("resolution", "resolution of a pushed-forward spinor bundle");
    resolution->fallthrough();
    long long res_N = 0;
    long long res_k = 0;
    std::string res_sign;
    std::string res_format = "json";
    resolution->add_option("--N", res_N, "dimension of V")->required();
    resolution->add_option("--k", res_k, "rank of U")->required();
    resolution->add_option("--sign", res_sign, "spinor sign (+ or -; ignored for odd N)")
        ->required();
    add_format(resolution, res_format);

    CLI::App* verify = app.add_subcommand("verify", "sweep one lemma over parameter ranges");
    verify->fallthrough();
    std::string ver_lemma;
    std::string ver_N;
    std::string ver_k;
    std::string ver_format = "text";
    verify->add_option("--lemma", ver_lemma, "lemma to sweep")
        ->required()
        ->check(CLI::IsMember({"cohomology-ualpha", "wt", "vanishing-terms", "same-p-D",
                               "same-p-B", "resolution-example"}));
    verify->add_option("--N", ver_N, "N values, e.g. 8 or 6,8,10 or 6-10")->required();
    verify->add_option("--k", ver_k, "k values (default: all admissible)");
    add_format(verify, ver_format);

    CLI::App* report = app.add_subcommand("report", "full-faithfulness criterion at genus g");
    report->fallthrough();
    long long rep_genus = 0;
    long long rep_k = 0;
    bool rep_json = false;
    report->add_option("--genus", rep_genus, "genus of the curve")->required();
    report->add_option("--k", rep_k, "rank of the isotropic subspaces")->required();
    report->add_flag("--json", rep_json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp"
            || e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return 64;
    }

    std::string output;
    int exit_code = 0;
    try {
        if (coh->parsed()) {
            YoungDiagram shape = parse_diagram(coh_shape);
            GradedRepList result;
            if (coh_space == "gr") {
                if (coh_spinor_opt->count() || coh_hom_opt->count())
                    throw std::invalid_argument(
                        "--spinor and --hom-spinors require --space ogr");
                result = cohomology_gr(coh_N, coh_k, shape, coh_twist);
            } else {
                if (coh_twist_opt->count())
                    throw std::invalid_argument("--twist requires --space gr");
                if (coh_spinor_opt->count() == coh_hom_opt->count())
                    throw std::invalid_argument(
                        "--space ogr needs exactly one of --spinor, --hom-spinors");
                SpaceParams sp{coh_N, coh_k};
                if (coh_spinor_opt->count()) {
                    int sign = parse_sign(coh_spinor, "--spinor");
                    result = cohomology_ogr_schur_spinor(sp, shape, sign);
                } else {
                    size_t comma = coh_hom.find(',');
                    if (comma == std::string::npos)
                        throw std::invalid_argument("--hom-spinors must be 's1,s2'");
                    int s1 = parse_sign(coh_hom.substr(0, comma), "--hom-spinors");
                    int s2 = parse_sign(coh_hom.substr(comma + 1), "--hom-spinors");
                    result = cohomology_ogr_hom_spinors(sp, shape, SpinorFactor{true, s1}, s2);
                }
            }
            output = coh_format == "json" ? to_json(result).dump() : render_text(result);
        } else if (lr->parsed()) {
            SchurSum sum =
                lr_product(parse_diagram(lr_mu), parse_diagram(lr_nu), lr_max_height);
            output = lr_format == "json" ? to_json(sum).dump() : render_text(sum);
        } else if (plethysm->parsed()) {
            SchurSum sum = wedge_sym2(pl_m, pl_k);
            output = pl_format == "json" ? to_json(sum).dump() : render_text(sum);
        } else if (resolution->parsed()) {
            int sign = parse_sign(res_sign, "--sign");
            Resolution built = build_resolution(SpaceParams{res_N, res_k}, sign);
            output = res_format == "json" ? to_json(built).dump() : render_text(built);
        } else if (verify->parsed()) {
            std::vector<long long> Ns = parse_range(ver_N, "--N");
            std::vector<std::pair<long long, long long>> combos;
            for (long long N : Ns) {
                std::vector<long long> ks;
                if (ver_k.empty()) {
                    for (long long k = 1; 2 * k + 2 <= N; ++k)
                        ks.push_back(k);
                } else {
                    ks = parse_range(ver_k, "--k");
                }
                for (long long k : ks)
                    if (admissible(ver_lemma, N, k))
                        combos.emplace_back(N, k);
            }
            if (combos.empty())
                throw std::invalid_argument("verify: no admissible (N, k) in the given ranges");

            long long instances = 0;
            long long failing = 0;
            bool indeterminate = false;
            std::ostringstream text;
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& [N, k] : combos) {
                SweepResult sweep = run_sweep(ver_lemma, SpaceParams{N, k}, jobs);
                instances += sweep.checked;
                failing += static_cast<long long>(sweep.failures.size());
                indeterminate = indeterminate || sweep.indeterminate;
                if (ver_format == "json") {
                    nlohmann::json row;
                    row["N"] = N;
                    row["checked"] = sweep.checked;
                    row["failures"] = sweep.failures;
                    row["indeterminate"] = sweep.indeterminate;
                    row["k"] = k;
                    row["lemma"] = ver_lemma;
                    row["pass"] = sweep.failures.empty();
                    rows.push_back(std::move(row));
                } else {
                    text << ver_lemma << " N=" << N << " k=" << k << ": checked "
                         << sweep.checked << ", ";
                    if (!sweep.failures.empty())
                        text << "FAIL (" << sweep.failures.size() << " counterexamples)";
                    else
                        text << "pass";
                    if (sweep.indeterminate)
                        text << ", indeterminate";
                    text << "\n";
                    for (const std::string& failure : sweep.failures)
                        text << "  counterexample: " << failure << "\n";
                }
            }
            if (ver_format == "json") {
                output = rows.dump();
            } else {
                text << "summary: " << combos.size() << " combinations, " << instances
                     << " instances, "
                     << (failing ? "FAIL" : indeterminate ? "indeterminate" : "pass");
                output = text.str();
            }
            exit_code = failing ? 1 : indeterminate ? 2 : 0;
        } else if (report->parsed()) {
            CriterionReport result = bondal_orlov_report(rep_genus, rep_k);
            output = rep_json ? to_json(result).dump() : render_text(result);
            exit_code = result.indeterminate ? 2 : result.pass ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    output += "\n";
    if (out_path.empty()) {
        std::cout << output;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot open --out file: " + out_path);
        file << output;
    }
    return exit_code;
}

}  // namespace bbw
