// chaos: command-line front end for the imaginary-chaos moment library.
//
// Subcommands: moment, asymptotic, joint, mixed, simulate, oracle, verify.
// Exit codes: 0 success, 2 invalid parameters, 3 tolerance failure,
// 4 enumeration budget exceeded.

#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <chaos/cache.hpp>
#include <chaos/moments.hpp>
#include <chaos/oracle.hpp>
#include <chaos/sim.hpp>
#include <chaos/verify.hpp>

namespace {

constexpr const char* kVersion = "chaos 0.1.0";

// FNV-1a 64-bit content digest for run manifests (stable, dependency-free)
std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string now_iso8601() {
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

// manifest for a run: command, parameter echo, version, timestamps, and the
// digests of every file written; each output in turn carries the manifest
// digest (digest is taken before the outputs list is attached)
struct RunManifest {
    nlohmann::json doc;
    std::string digest;

    RunManifest(const std::string& command, nlohmann::json params) {
        doc["command"] = command;
        doc["parameters"] = std::move(params);
        doc["version"] = kVersion;
        doc["started_at"] = now_iso8601();
        digest = fnv1a_hex(doc.dump());
        doc["manifest_digest"] = digest;
        doc["outputs"] = nlohmann::json::array();
    }

    void add_output(const std::string& path, const std::string& content) {
        doc["outputs"].push_back({{"path", path}, {"digest", fnv1a_hex(content)}});
    }

    void finish() { doc["finished_at"] = now_iso8601(); }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::vector<chaos::Part> parse_n_grid(const std::string& spec) {
    std::vector<chaos::Part> out;
    const auto dots = spec.find("..");
    if (dots != std::string::npos) {
        const long long a = std::stoll(spec.substr(0, dots));
        const long long b = std::stoll(spec.substr(dots + 2));
        if (a < 1 || b < a) throw std::invalid_argument("bad dyadic range: " + spec);
        for (long long n = a; n <= b; n *= 2) out.push_back(n);
        return out;
    }
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    if (out.empty()) throw std::invalid_argument("empty n grid");
    return out;
}

std::vector<int> parse_int_list(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

int cmd_moment(double beta, int N, long long n, double tol,
               std::optional<long long> lambda_max, bool as_json, bool no_cache,
               int threads) {
    const chaos::ChaosParams params = chaos::ChaosParams::from_beta(beta, N);
    chaos::MomentCache cache;
    nlohmann::json rec;
    if (!no_cache && !lambda_max) {
        if (auto hit = cache.lookup(beta, N, n, tol)) rec = *hit;
    }
    if (rec.is_null()) {
        chaos::MomentRequest req{params, n, tol,
                                 lambda_max ? std::optional<chaos::Part>(*lambda_max)
                                            : std::nullopt,
                                 threads};
        const chaos::MomentResult res = chaos::moment_abs(req);
        rec = chaos::to_record_json({beta, params.gamma, N, n, tol, res});
        if (!no_cache && !lambda_max) cache.append(rec);
    }
    if (as_json) {
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << std::setprecision(15)
                  << "value           " << rec["value"].get<double>() << "\n"
                  << "tail_bound      " << rec["tail_bound"].get<double>() << "\n"
                  << "lambda_max_used " << rec["lambda_max_used"].get<long long>() << "\n"
                  << "terms_evaluated " << rec["terms_evaluated"].get<long long>() << "\n";
    }
    return 0;
}

int cmd_asymptotic(double beta, int N, const std::string& grid_spec, double tol,
                   const std::string& out_path, int threads) {
    const chaos::ChaosParams params = chaos::ChaosParams::from_beta(beta, N);
    RunManifest manifest("asymptotic",
                         {{"beta", beta}, {"N", N}, {"n_grid", grid_spec}, {"tol", tol}});
    std::ostringstream csv;
    csv << "n,exact,asymptotic,ratio\n";
    for (chaos::Part n : parse_n_grid(grid_spec)) {
        chaos::MomentRequest req{params, n, tol, {}, threads};
        const double exact = chaos::moment_abs(req).value;
        const double asym = chaos::asymptotic_moment(n, N, beta);
        csv << n << "," << std::setprecision(15) << exact << "," << asym << ","
            << exact / asym << "\n";
    }
    csv << "# manifest " << manifest.digest << "\n";
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        write_file(out_path, csv.str());
        manifest.add_output(out_path, csv.str());
        manifest.finish();
        write_file(out_path + ".manifest.json", manifest.doc.dump(2) + "\n");
        std::cout << "wrote " << out_path << " (manifest " << manifest.digest << ")\n";
    }
    return 0;
}

int cmd_joint(double beta, int N0, int N1, long long n,
              std::optional<long long> lambda_max, int threads) {
    if (N0 < 0 || N1 < 0 || N0 + N1 < 1)
        throw std::invalid_argument("need N0, N1 >= 0 with N0 + N1 >= 1");
    const int N = N0 + N1, p = N1;
    const chaos::Part Lambda = lambda_max ? *lambda_max : std::min<long long>(
        100 * std::max(n, 1ll), chaos::kJointLambdaDefault);
    const auto res = chaos::joint_moment_k1_exact(n, N, p, beta, Lambda, threads);
    std::cout << "value           " << res.value << "\n"
              << "tail_estimate   " << res.tail_estimate << " (heuristic, not certified)\n"
              << "lambda_max_used " << res.lambda_max_used << "\n"
              << "terms_evaluated " << res.terms_evaluated << "\n";
    if (N0 >= 1 && N1 >= 1) {
        chaos::MomentRequest ra{chaos::ChaosParams::from_beta(beta, N0), n, 1e-7, {},
                                threads};
        chaos::MomentRequest rb{chaos::ChaosParams::from_beta(beta, N1), n + 1, 1e-7, {},
                                threads};
        const double q = res.value / (chaos::moment_abs(ra).value *
                                      chaos::moment_abs(rb).value);
        std::cout << "Q_ratio         " << q << "\n";
    }
    return 0;
}

int cmd_mixed(double beta, const std::string& l_spec, const std::string& m_spec,
              long long n) {
    chaos::MixedExponents e{parse_int_list(l_spec), parse_int_list(m_spec)};
    const auto sel = chaos::mixed_selection(e, n);
    const char* name = sel.variant == chaos::MixedSelection::ExactZero
                           ? "ExactZero"
                           : sel.variant == chaos::MixedSelection::DiagonalModulus
                                 ? "DiagonalModulus"
                                 : "VanishingLimit";
    std::cout << name << " " << chaos::mixed_limit(e, beta) << "\n";
    return 0;
}

int cmd_simulate(double beta, int K, int G, int M, std::uint64_t seed,
                 const std::string& n_spec, const std::string& out_csv,
                 const std::string& out_json) {
    chaos::SimConfig cfg{beta, K, G, M, seed, parse_n_grid(n_spec)};
    RunManifest manifest("simulate", {{"beta", beta},
                                      {"K", K},
                                      {"grid", G},
                                      {"samples", M},
                                      {"seed", seed},
                                      {"n", n_spec}});
    chaos::Simulator sim(cfg);
    const auto table = sim.run();

    nlohmann::json summary;
    summary["config"] = {{"beta", beta}, {"K", K},      {"grid", G},
                         {"samples", M}, {"seed", seed}, {"n", cfg.n_list}};
    summary["version"] = kVersion;
    summary["manifest_digest"] = manifest.digest;
    for (size_t q = 0; q < cfg.n_list.size(); ++q) {
        const auto est =
            chaos::estimate_abs_moment(table, cfg.n_list, cfg.n_list[q], 1, beta);
        summary["rescaled_second_moment"].push_back({{"n", cfg.n_list[q]},
                                                     {"estimate", est.estimate.real()},
                                                     {"se", est.se_re}});
    }

    if (!out_csv.empty()) {
        std::ostringstream csv;
        csv << "sample_id,n,re,im\n";
        csv << std::setprecision(17);
        for (size_t s = 0; s < table.size(); ++s)
            for (size_t q = 0; q < cfg.n_list.size(); ++q)
                csv << s << "," << cfg.n_list[q] << "," << table[s][q].real() << ","
                    << table[s][q].imag() << "\n";
        csv << "# manifest " << manifest.digest << "\n";
        write_file(out_csv, csv.str());
        manifest.add_output(out_csv, csv.str());
    }
    manifest.finish();
    const std::string summary_text = summary.dump(2) + "\n";
    if (!out_json.empty()) {
        write_file(out_json, summary_text);
        manifest.add_output(out_json, summary_text);
        write_file(out_json + ".manifest.json", manifest.doc.dump(2) + "\n");
    } else {
        std::cout << summary_text;
    }
    return 0;
}

int cmd_verify(const std::string& suite) {
    const bool full = suite == "full";
    bool all_pass = true;
    const auto results = chaos::verify::run_suite(full, [&](const chaos::verify::Criterion& c) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "\n"
                  << "      " << c.detail << "  [" << std::fixed
                  << std::setprecision(1) << c.seconds << "s]\n"
                  << std::defaultfloat;
        std::cout.flush();
        if (!c.pass) all_pass = false;
    });
    std::cout << (all_pass ? "verification passed" : "verification FAILED") << " ("
              << results.size() << " criteria, suite " << (full ? "full" : "fast")
              << ")\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"imaginary multiplicative chaos: Fourier coefficient moments"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "", "read flag defaults from an INI file");
    app.require_subcommand(1);

    int threads = static_cast<int>(std::thread::hardware_concurrency());
    app.add_option("--threads", threads, "worker thread budget")->capture_default_str();

    // moment
    double beta = 0.5, tol = 1e-6;
    int N = 1;
    long long n = 0;
    long long lambda_max_raw = -1;
    bool as_json = false, no_cache = false;
    auto* mom = app.add_subcommand("moment", "exact E|c_n|^{2N} from the partition series");
    mom->add_option("--beta", beta, "chaos parameter, in (0,1)")->required();
    mom->add_option("--N", N, "half the moment order")->capture_default_str();
    mom->add_option("--n", n, "Fourier index")->required();
    mom->add_option("--tol", tol, "relative tolerance")->capture_default_str();
    mom->add_option("--lambda-max", lambda_max_raw, "manual truncation (disables tolerance control)");
    mom->add_flag("--json", as_json, "emit the JSON record");
    mom->add_flag("--no-cache", no_cache, "bypass the result cache");

    // asymptotic
    double a_beta = 0.5, a_tol = 1e-6;
    int a_N = 1;
    std::string a_grid = "64..4096", a_out;
    auto* asy = app.add_subcommand("asymptotic", "exact vs asymptotic moment table (CSV)");
    asy->add_option("--beta", a_beta)->required();
    asy->add_option("--N", a_N)->capture_default_str();
    asy->add_option("--n-grid", a_grid, "dyadic range a..b or comma list")->capture_default_str();
    asy->add_option("--tol", a_tol)->capture_default_str();
    asy->add_option("--out", a_out, "CSV output path (default stdout)");

    // joint
    double j_beta = 0.5;
    int j_N0 = 1, j_N1 = 1;
    long long j_n = 8, j_lambda = -1;
    auto* jnt = app.add_subcommand("joint", "joint moment E|c_n|^{2 N0}|c_{n+1}|^{2 N1}");
    jnt->add_option("--beta", j_beta)->required();
    jnt->add_option("--N0", j_N0)->capture_default_str();
    jnt->add_option("--N1", j_N1)->capture_default_str();
    jnt->add_option("--n", j_n)->required();
    jnt->add_option("--lambda-max", j_lambda, "enumeration cutoff (default 100 n)");

    // mixed
    double x_beta = 0.5;
    std::string x_l, x_m;
    long long x_n = 1;
    auto* mix = app.add_subcommand("mixed", "selection rule and limit for mixed moments");
    mix->add_option("--beta", x_beta)->capture_default_str();
    mix->add_option("--l", x_l, "comma list of holomorphic exponents")->required();
    mix->add_option("--m", x_m, "comma list of antiholomorphic exponents")->required();
    mix->add_option("--n", x_n, "base Fourier index")->capture_default_str();

    // simulate
    double s_beta = 0.5;
    int s_K = 256, s_G = 4096, s_M = 64;
    std::uint64_t s_seed = 1;
    std::string s_n = "4,8", s_csv, s_json;
    auto* sml = app.add_subcommand("simulate", "Monte Carlo sampling of c_n");
    sml->add_option("--beta", s_beta)->required();
    sml->add_option("--K", s_K, "Fourier modes of the field")->capture_default_str();
    sml->add_option("--grid", s_G, "FFT grid size (power of two, >= 8K)")->capture_default_str();
    sml->add_option("--samples", s_M)->capture_default_str();
    sml->add_option("--seed", s_seed)->capture_default_str();
    sml->add_option("--n", s_n, "indices to record (range or comma list)")->capture_default_str();
    sml->add_option("--out-csv", s_csv, "per-sample CSV path");
    sml->add_option("--out-json", s_json, "summary JSON path (default stdout)");

    // oracle
    auto* orc = app.add_subcommand("oracle", "quadrature reference values");
    double o_gamma = 0.25, o_tol_n1 = 1e-9, o_tol_n2 = 1e-3;
    long long o_n = 0;
    auto* o1 = orc->add_subcommand("n1", "E|c_n|^2 by 1-D quadrature");
    o1->add_option("--gamma", o_gamma)->required();
    o1->add_option("--n", o_n)->required();
    o1->add_option("--tol", o_tol_n1)->capture_default_str();
    auto* o2 = orc->add_subcommand("n2", "E|c_n|^4 by 3-D quadrature");
    o2->add_option("--gamma", o_gamma)->required();
    o2->add_option("--n", o_n)->required();
    o2->add_option("--tol", o_tol_n2)->capture_default_str();
    auto* od = orc->add_subcommand("dyson", "norm constant by quadrature");
    od->add_option("--gamma", o_gamma)->required();
    orc->require_subcommand(1);

    // verify
    std::string v_suite = "fast";
    auto* ver = app.add_subcommand("verify", "run the verification suite");
    ver->add_option("--suite", v_suite, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();

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

    try {
        if (*mom)
            return cmd_moment(beta, N, n, tol,
                              lambda_max_raw >= 0 ? std::optional<long long>(lambda_max_raw)
                                                  : std::nullopt,
                              as_json, no_cache, threads);
        if (*asy) return cmd_asymptotic(a_beta, a_N, a_grid, a_tol, a_out, threads);
        if (*jnt)
            return cmd_joint(j_beta, j_N0, j_N1, j_n,
                             j_lambda >= 0 ? std::optional<long long>(j_lambda)
                                           : std::nullopt,
                             threads);
        if (*mix) return cmd_mixed(x_beta, x_l, x_m, x_n);
        if (*sml) return cmd_simulate(s_beta, s_K, s_G, s_M, s_seed, s_n, s_csv, s_json);
        if (*orc) {
            if (*o1)
                std::cout << chaos::quadrature_moment_N1(o_n, o_gamma, o_tol_n1) << "\n";
            else if (*o2)
                std::cout << chaos::quadrature_moment_N2(o_n, o_gamma, o_tol_n2) << "\n";
            else
                std::cout << chaos::dyson_norm_check(o_gamma) << "\n";
            return 0;
        }
        if (*ver) return cmd_verify(v_suite);
    } catch (const chaos::ToleranceFailure& e) {
        std::cerr << "tolerance not reached: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        std::cerr << "invalid parameters: " << msg << "\n";
        return msg.find("budget") != std::string::npos ? 4 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
