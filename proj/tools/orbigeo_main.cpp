// orbigeo: exact invariants and hyperbolicity criteria for orbifold surface
// pairs, plus genus bounds and truncated-defect arguments for cyclic covers.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "orbigeo/curves.hpp"
#include "orbigeo/defects.hpp"
#include "orbigeo/errors.hpp"
#include "orbigeo/report.hpp"

namespace {

using namespace orbigeo;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

long long to_ll(const std::string& text) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw usage_error("expected an integer, got '" + text + "'");
        return v;
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception&) {
        throw usage_error("expected an integer, got '" + text + "'");
    }
}

std::vector<long long> csv_to_ints(const std::string& text) {
    std::vector<long long> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) out.push_back(to_ll(cur));
    return out;
}

std::vector<std::string> csv_to_names(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) out.push_back(cur);
    return out;
}

int cmd_analyze(const std::vector<std::string>& files, const std::string& format,
                const std::string& param, bool check_incidence) {
    FileOptions options;
    options.check_incidence = check_incidence;
    if (!param.empty()) {
        std::size_t eq = param.find('=');
        if (eq == std::string::npos) throw usage_error("--param expects <sym>=<int>");
        options.param_filter = to_ll(param.substr(eq + 1));
    }
    std::vector<std::pair<std::string, std::string>> inputs;
    inputs.reserve(files.size());
    for (const auto& f : files) inputs.emplace_back(f, read_file(f));
    ReportFormat fmt = format == "json" ? ReportFormat::Json : ReportFormat::Text;
    int exit_code = 0;
    for (const auto& result : run_files(inputs, fmt, options)) {
        std::cout << result.body;
        exit_code = std::max(exit_code, result.exit_code);
    }
    return exit_code;
}

int cmd_cover(long long d, long long n) {
    FileReport report;
    report.name = "cover";
    report.requests.push_back(run_request(CoverRequest{d, n}));
    std::cout << render_text(report);
    return 0;
}

int cmd_beta(const std::string& type, const std::string& mults) {
    AdeType t = AdeType::parse(type);
    std::vector<long long> m = csv_to_ints(mults);
    Rational value = beta(t, m);
    std::cout << "beta(" << t.name() << "; " << mults << ") = " << value.to_string() << "\n";
    if (uses_odd_d_row(t)) std::cout << "warning: " << odd_d_row_warning(t, "") << "\n";
    return 0;
}

int cmd_genus_plane(long long d, long long n, long long deg_c, long long ambient) {
    Rational coeff = plane_cover_bound(d, n, 1, ambient);
    std::cout << "plane cover d=" << d << " n=" << n << " (ambient dimension " << ambient << ")\n";
    std::cout << "coefficient d - d/n - " << ambient + 2 << " = " << coeff.to_string() << "\n";
    if (deg_c > 0) {
        std::cout << "deg(K_C) >= " << plane_cover_bound(d, n, deg_c, ambient).to_string()
                  << " for deg C = " << deg_c << "\n";
    } else {
        std::cout << "deg(K_C) >= " << coeff.to_string() << " * deg C\n";
    }
    if (ambient == 2) {
        CoverVerdict v = plane_cover_verdict(d, n);
        std::cout << "verdict: " << cover_verdict_name(v)
                  << " (modulo curves in the branch locus)\n";
        if (v == CoverVerdict::Inconclusive && d == 6 && n == 2) {
            std::cout << "note: c1^2 = 0, c2 = 24; the cover is a K3 surface and carries "
                         "infinitely many elliptic curves\n";
        }
    }
    return 0;
}

int cmd_genus_hirzebruch(long long N, long long a, long long b, long long n, long long c,
                         long long dd) {
    Rational bound = hirzebruch_cover_bound(N, a, b, n, c, dd);
    std::cout << "Hirzebruch cover N=" << N << " branch (" << a << "," << b << ") n=" << n
              << ", image class (" << c << "," << dd << ")\n";
    std::cout << "deg(K_C) >= min(a-3,b-2)(c(N+1)+dd) - (bc + a dd + acN)/n = "
              << bound.to_string() << "\n";
    if (a == 6 && b == 6 && n == 2) {
        std::cout << "note: for branch class (6,6) the bound vanishes identically\n";
    }
    return 0;
}

int cmd_defect_cover(long long dim, long long q, long long m) {
    FileReport report;
    report.name = "defect";
    report.requests.push_back(run_request(DefectCoverRequest{dim, q, m}));
    std::cout << render_text(report);
    return 0;
}

int cmd_defect_product(const std::string& fibers1, const std::string& fibers2,
                       const std::string& exceptional) {
    DefectProductRequest req;
    req.fibers1 = csv_to_ints(fibers1);
    req.fibers2 = csv_to_ints(fibers2);
    if (!exceptional.empty()) req.exceptional = csv_to_names(exceptional);
    FileReport report;
    report.name = "defect";
    report.requests.push_back(run_request(req));
    std::cout << render_text(report);
    return 0;
}

int cmd_geography(const std::string& c1sq, const std::string& c2) {
    ChernReport r{Rational::parse(c1sq), Rational::parse(c2)};
    std::cout << "c1^2 = " << r.c1sq.to_string() << ", c2 = " << r.c2.to_string()
              << ", s2 = " << r.segre2().to_string() << ", chi = " << r.chi().to_string() << "\n";
    for (const auto& v : geography(r)) {
        std::cout << criterion_name(v.criterion) << ": " << outcome_name(v.outcome) << " (margin "
                  << v.witness.to_string() << ") -- " << v.citation << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact orbifold surface-pair invariants and hyperbolicity criteria"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string format = "text";
    std::string param;
    bool check_incidence = false;
    auto* analyze = app.add_subcommand("analyze", "analyze scenario files");
    analyze->add_option("files", files, "scenario files")->required()->expected(-1);
    analyze->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--param", param, "restrict a parameterized scenario, e.g. k=3");
    analyze->add_flag("--check-incidence", check_incidence,
                      "warn when removed-point counts disagree with declared incidences");

    long long cover_d = 0, cover_n = 0;
    auto* cover = app.add_subcommand("cover", "Chern numbers of a cyclic cover of P^2");
    cover->add_option("--d", cover_d, "branch curve degree")->required();
    cover->add_option("--n", cover_n, "cover degree, must divide d")->required();

    std::string beta_type, beta_mults;
    auto* beta_cmd = app.add_subcommand("beta", "isotropy order of an ADE point");
    beta_cmd->add_option("type", beta_type, "ADE type, e.g. D4")->required();
    beta_cmd->add_option("mults", beta_mults, "branch multiplicities, e.g. 2,2,3")->required();

    auto* genus = app.add_subcommand("genus-bound", "genus lower bounds for cover curves");
    genus->require_subcommand(1);
    long long gp_d = 0, gp_n = 0, gp_degc = 0, gp_ambient = 2;
    auto* genus_plane = genus->add_subcommand("plane", "cover of P^2 (or P^ambient)");
    genus_plane->add_option("--d", gp_d)->required();
    genus_plane->add_option("--n", gp_n)->required();
    genus_plane->add_option("--degC", gp_degc);
    genus_plane->add_option("--ambient", gp_ambient);
    long long gh_N = 0, gh_a = 0, gh_b = 0, gh_n = 0, gh_c = 0, gh_dd = 0;
    auto* genus_hirz = genus->add_subcommand("hirzebruch", "cover of F_N");
    genus_hirz->add_option("--N", gh_N)->required();
    genus_hirz->add_option("--a", gh_a)->required();
    genus_hirz->add_option("--b", gh_b)->required();
    genus_hirz->add_option("--n", gh_n)->required();
    genus_hirz->add_option("--c", gh_c)->required();
    genus_hirz->add_option("--dd", gh_dd)->required();

    auto* defect = app.add_subcommand("defect", "truncated defect arguments");
    defect->require_subcommand(1);
    long long dc_dim = 0, dc_q = 0, dc_m = 0;
    auto* defect_cover = defect->add_subcommand("cover", "q targets of multiplicity m in P^dim");
    defect_cover->add_option("--dim", dc_dim)->required();
    defect_cover->add_option("--q", dc_q)->required();
    defect_cover->add_option("--m", dc_m)->required();
    std::string dp_f1, dp_f2, dp_exc;
    auto* defect_product = defect->add_subcommand("product", "two-projection argument on P^1 x P^1");
    defect_product->add_option("--fibers1", dp_f1)->required();
    defect_product->add_option("--fibers2", dp_f2)->required();
    defect_product->add_option("--exceptional", dp_exc);

    std::string geo_c1sq, geo_c2;
    auto* geo = app.add_subcommand("geography", "numeric geography of a Chern pair");
    geo->add_option("--c1sq", geo_c1sq, "rational, e.g. 5 or 7/5")->required();
    geo->add_option("--c2", geo_c2, "rational")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(files, format, param, check_incidence);
        if (cover->parsed()) return cmd_cover(cover_d, cover_n);
        if (beta_cmd->parsed()) return cmd_beta(beta_type, beta_mults);
        if (genus->parsed()) {
            if (genus_plane->parsed()) return cmd_genus_plane(gp_d, gp_n, gp_degc, gp_ambient);
            return cmd_genus_hirzebruch(gh_N, gh_a, gh_b, gh_n, gh_c, gh_dd);
        }
        if (defect->parsed()) {
            if (defect_cover->parsed()) return cmd_defect_cover(dc_dim, dc_q, dc_m);
            return cmd_defect_product(dp_f1, dp_f2, dp_exc);
        }
        if (geo->parsed()) return cmd_geography(geo_c1sq, geo_c2);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
