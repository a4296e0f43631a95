#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Run the built CLI with the given arguments, capturing stdout.  stderr is
// muted: the error-path tests only care about exit codes.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(STRUTT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("trace subcommand prints twelve-digit traces") {
    auto r = run_cli("trace --waveform triangular --alpha 1 --beta 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2.00000000000\n");

    r = run_cli("trace --waveform triangular --alpha 0.25 --beta 0.5");
    CHECK(r.out == "-3.00000000000\n");

    r = run_cli("trace --waveform rect:10 --alpha 0.5 --beta 0");
    CHECK(r.out == "-0.532510684083\n");

    // product and closed form agree through the CLI too
    const auto closed =
        run_cli("trace --waveform rect:4 --alpha 0.7 --beta 0.9 --method closed");
    const auto product =
        run_cli("trace --waveform rect:4 --alpha 0.7 --beta 0.9 --method product");
    CHECK(closed.out == product.out);

    const auto numeric =
        run_cli("trace --waveform cosine --alpha 0.09 --beta 0 --method numeric");
    CHECK(numeric.out == "-0.618033988750\n");
}

TEST_CASE("classify subcommand") {
    auto r = run_cli("classify --waveform triangular --alpha 0.25 --beta 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "unstable -3.00000000000\n");

    r = run_cli("classify --waveform triangular --alpha -0.05 --beta 0.6");
    CHECK(r.out.rfind("stable ", 0) == 0);

    r = run_cli("classify --waveform triangular --alpha 1 --beta 0");
    CHECK(r.out.rfind("boundary ", 0) == 0);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("trace --no-such-flag").exit_code == 2);
    CHECK(run_cli("trace --waveform rect:0 --alpha 1").exit_code == 2);
    CHECK(run_cli("trace --waveform pentagram --alpha 1").exit_code == 2);
    CHECK(run_cli("trace --waveform cosine --alpha 1 --method closed").exit_code == 2);
    CHECK(run_cli("trace --waveform cosine --alpha 1 --method product").exit_code == 2);
    CHECK(run_cli("boundary --waveform cosine").exit_code == 2);
    CHECK(run_cli("verify --suite no-such-suite").exit_code == 2);
    CHECK(run_cli("simulate --periods -1").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("JSON config supplies defaults, flags override, unknown keys are fatal") {
    const auto cfg = temp_file("strutt_cli_cfg.json");
    {
        std::ofstream f(cfg);
        f << R"({"waveform": "triangular", "alpha": 0.25, "beta": 0.5})";
    }
    auto r = run_cli("trace --config " + cfg.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-3.00000000000\n");

    // Explicit flag wins over the file: beta = 0 at alpha = 1/4 is the free
    // trace 2 cos(2 pi sqrt(1/4)) = -2.
    r = run_cli("trace --config " + cfg.string() + " --beta 0");
    CHECK(r.out == "-2.00000000000\n");

    const auto bad = temp_file("strutt_cli_bad.json");
    {
        std::ofstream f(bad);
        f << R"({"alpha": 0.25, "frobnicate": true})";
    }
    CHECK(run_cli("trace --config " + bad.string()).exit_code == 2);

    const auto broken = temp_file("strutt_cli_broken.json");
    {
        std::ofstream f(broken);
        f << "{not json";
    }
    CHECK(run_cli("trace --config " + broken.string()).exit_code == 2);
    CHECK(run_cli("trace --config /no/such/file.json").exit_code == 2);
}

TEST_CASE("diagram output is deterministic and well-formed") {
    const std::string args = "diagram --waveform triangular --alpha-min -0.5 --alpha-max 1.5 "
                             "--beta-min -1 --beta-max 1 --res-alpha 12 --res-beta 9";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("alpha,beta,trace,class\n", 0) == 0);

    std::size_t lines = 0;
    for (char c : a.out) lines += (c == '\n');
    CHECK(lines == 1 + 12 * 9);
}

TEST_CASE("boundary and svg outputs") {
    auto r = run_cli("boundary --waveform triangular --alpha-min -1 --alpha-max 4 --samples 50");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("curve_id,kind,alpha,beta\n", 0) == 0);

    const auto svg = temp_file("strutt_cli_diag.svg");
    r = run_cli("render-svg --waveform triangular --res-alpha 16 --res-beta 16 --output " +
                svg.string());
    CHECK(r.exit_code == 0);
    std::ifstream f(svg);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(text.rfind("<?xml", 0) == 0);
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("</svg>") != std::string::npos);
}

TEST_CASE("simulate emits a trajectory") {
    auto r = run_cli("simulate --waveform triangular --alpha 0.25 --beta 0.5 "
                     "--periods 1 --steps 64 --theta0 1 --omega0 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("t,theta,omega\n", 0) == 0);
    CHECK(r.out.find("\n0.00000000000,1.00000000000,") != std::string::npos);

    r = run_cli("simulate --waveform triangular --alpha 0.25 --beta 0.5 "
                "--periods 1 --steps 64 --linear --eps 0.1");
    CHECK(r.exit_code == 0);

    // Mollification width beyond the impulse gap is a usage error.
    CHECK(run_cli("simulate --waveform triangular --alpha 0.25 --beta 0.5 --periods 1 "
                  "--steps 64 --linear --eps 3")
              .exit_code == 2);
}

TEST_CASE("verify subcommand reports check status") {
    auto r = run_cli("verify --suite beta-parity");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[PASS] beta-parity") != std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    r = run_cli("verify --suite product-vs-closed --perturb 1e-3");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("[FAIL] product-vs-closed") != std::string::npos);
}
