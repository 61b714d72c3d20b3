#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// end-to-end tests against the installed binary (path in $CHAOS_CLI)

namespace {

struct RunResult {
    int status;
    std::string out;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const char* cli = std::getenv("CHAOS_CLI");
    REQUIRE(cli != nullptr);
    const std::string cmd = env + (env.empty() ? "" : " ") + cli + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    const int rc = pclose(p);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::filesystem::path scratch_dir() {
    const auto d = std::filesystem::temp_directory_path() /
                   ("chaos-cli-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// drop comment lines so run-dependent manifest digests do not enter a diff
std::string strip_comments(const std::string& text) {
    std::stringstream in(text), out;
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("#", 0) != 0) out << line << "\n";
    return out.str();
}

// N=1 closed form, for oracle output checks
double closed_form_N1(long long n, double g) {
    return std::exp(2.0 * std::log(2.0 * M_PI) + std::lgamma(g + n) +
                    std::lgamma(1.0 - 2.0 * g) - std::lgamma(g) - std::lgamma(1.0 - g) -
                    std::lgamma(1.0 + n - g));
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run_cli("--version").status == 0);
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("--bogus-flag").status == 2);
    CHECK(run_cli("moment --n 3").status == 2);  // --beta is required

    const auto bad = run_cli("moment --beta 1.5 --n 3");
    CHECK(bad.status == 2);
    CHECK(bad.out.find("invalid parameters") != std::string::npos);

    // unreachable tolerance: partition series gives up at the term ceiling
    const auto tf = run_cli(
        "moment --beta 0.8944271909999159 --N 1 --n 0 --tol 1e-15 --no-cache");
    CHECK(tf.status == 3);
    CHECK(tf.out.find("tolerance not reached") != std::string::npos);

    CHECK(run_cli("joint --beta 0.5 --N0 1 --N1 1 --n 4 --lambda-max 30000").status == 4);
}

TEST_CASE("version string") {
    const auto r = run_cli("--version");
    CHECK(r.out.find("chaos 0.1.0") != std::string::npos);
}

TEST_CASE("moment values match the reference fixture") {
    const auto fixture =
        nlohmann::json::parse(slurp(std::filesystem::path(CHAOS_FIXTURES_DIR) /
                                    "reference_moments.json"));
    const std::string cache = "CHAOS_CACHE_DIR=" + (scratch_dir() / "cache-fx").string();
    for (const auto& c : fixture["cases"]) {
        std::ostringstream cmd;
        cmd.precision(17);
        cmd << "moment --beta " << c["beta"].get<double>() << " --N 1 --n "
            << c["n"].get<long long>() << " --tol 1e-8 --json";
        const auto r = run_cli(cmd.str(), cache);
        REQUIRE(r.status == 0);
        const auto rec = nlohmann::json::parse(r.out);
        CHECK_THAT(rec["value"].get<double>(),
                   Catch::Matchers::WithinRel(c["value"].get<double>(), 1e-6));
        CHECK(rec["N"].get<int>() == 1);
    }
}

TEST_CASE("cache replay is bit-identical") {
    const std::string cache = "CHAOS_CACHE_DIR=" + (scratch_dir() / "cache-rp").string();
    const std::string cmd = "moment --beta 0.5 --N 2 --n 3 --tol 1e-5 --json";
    const auto first = run_cli(cmd, cache);
    REQUIRE(first.status == 0);
    const auto second = run_cli(cmd, cache);
    REQUIRE(second.status == 0);
    CHECK(first.out == second.out);
    CHECK(std::filesystem::exists(scratch_dir() / "cache-rp" / "moments.jsonl"));
}

TEST_CASE("asymptotic CSV format") {
    const auto r = run_cli("asymptotic --beta 0.5 --N 1 --n-grid 4,8 --tol 1e-6");
    REQUIRE(r.status == 0);
    std::stringstream ss(r.out);
    std::string line;
    REQUIRE(std::getline(ss, line));
    CHECK(line == "n,exact,asymptotic,ratio");
    REQUIRE(std::getline(ss, line));
    CHECK(line.rfind("4,", 0) == 0);
    REQUIRE(std::getline(ss, line));
    CHECK(line.rfind("8,", 0) == 0);
    REQUIRE(std::getline(ss, line));
    REQUIRE(line.rfind("# manifest ", 0) == 0);
    const std::string digest = line.substr(11);
    CHECK(digest.size() == 16);
    CHECK(digest.find_first_not_of("0123456789abcdef") == std::string::npos);
}

TEST_CASE("mixed selection output") {
    const auto zero = run_cli("mixed --beta 0.5 --l 2,0 --m 0,2 --n 17");
    REQUIRE(zero.status == 0);
    CHECK(zero.out.rfind("ExactZero", 0) == 0);

    const auto diag = run_cli("mixed --beta 0.5 --l 1,1 --m 1,1 --n 17");
    REQUIRE(diag.status == 0);
    CHECK(diag.out.rfind("DiagonalModulus", 0) == 0);
}

TEST_CASE("simulate is deterministic and writes a manifest") {
    const auto dir = scratch_dir();
    const auto csv1 = dir / "run1.csv", csv2 = dir / "run2.csv";
    const auto js = dir / "run1.json";
    const std::string base =
        "simulate --beta 0.5 --K 128 --grid 1024 --samples 8 --seed 5 --n 4,8";
    REQUIRE(run_cli(base + " --out-csv " + csv1.string() + " --out-json " + js.string())
                .status == 0);
    REQUIRE(run_cli(base + " --out-csv " + csv2.string()).status == 0);

    const std::string a = slurp(csv1), b = slurp(csv2);
    CHECK(strip_comments(a) == strip_comments(b));
    CHECK(a.find("sample_id,n,re,im") == 0);
    CHECK(a.find("# manifest ") != std::string::npos);

    const auto summary = nlohmann::json::parse(slurp(js));
    CHECK(summary["config"]["seed"].get<int>() == 5);
    CHECK(summary["rescaled_second_moment"].size() == 2);
    CHECK(std::filesystem::exists(js.string() + ".manifest.json"));
    const auto manifest = nlohmann::json::parse(slurp(js.string() + ".manifest.json"));
    CHECK(manifest["outputs"].size() == 2);
    CHECK(manifest["manifest_digest"] == summary["manifest_digest"]);
}

TEST_CASE("oracle subcommands") {
    const auto n1 = run_cli("oracle n1 --gamma 0.25 --n 0");
    REQUIRE(n1.status == 0);
    CHECK_THAT(std::stod(n1.out), Catch::Matchers::WithinRel(closed_form_N1(0, 0.25), 1e-4));

    const auto dy = run_cli("oracle dyson --gamma 0.25");
    REQUIRE(dy.status == 0);
    const double want = std::tgamma(1.5) / (std::tgamma(1.25) * std::tgamma(1.25));
    CHECK_THAT(std::stod(dy.out), Catch::Matchers::WithinRel(want, 1e-4));

    CHECK(run_cli("oracle n1 --gamma 0.6 --n 0").status == 2);
}

TEST_CASE("joint subcommand") {
    const auto r = run_cli("joint --beta 0.5 --N0 1 --N1 1 --n 4 --lambda-max 400");
    REQUIRE(r.status == 0);
    CHECK(r.out.find("value") != std::string::npos);
    CHECK(r.out.find("Q_ratio") != std::string::npos);
    CHECK(r.out.find("not certified") != std::string::npos);
}
