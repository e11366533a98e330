#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = 0;
    std::string output;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    fs::path log = fs::temp_directory_path() /
                   ("designforge_cli_" + std::to_string(counter++) + ".log");
    std::string cmd = std::string(DESIGNFORGE_BIN) + " " + args + " > " +
                      log.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    res.output = ss.str();
    fs::remove(log);
    return res;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / "designforge_cli_tests";
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const {
        return (path / name).string();
    }
};

}  // namespace

TEST_CASE("bounds print their values") {
    auto res = run("bound delsarte --d 3 --t 5");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "12\n");
    CHECK(run("bound delsarte --d 7 --t 3").output == "14\n");
    auto dim = run("bound dim --d 3 --t 2");
    CHECK(dim.output.find("dim P_t sphere: 9") != std::string::npos);
    CHECK(dim.output.find("dim P_t gaussian: 10") != std::string::npos);
    auto lp = run("bound lp --d 4 --t 1 --eps 1");
    CHECK(lp.output == "3\n");
}

TEST_CASE("moments subcommands print exact and float values") {
    auto res = run("moments sphere --d 3 --alpha 2,0,0");
    CHECK(res.output.find("exact: 1/3") != std::string::npos);
    auto gauss = run("moments gaussian --alpha 2");
    CHECK(gauss.output.find("exact: 1/2*pi^(-1)") != std::string::npos);
    auto radial = run("moments radial --d 3 --k 2");
    CHECK(radial.output.find("exact: 3/2*pi^(-1)") != std::string::npos);
}

TEST_CASE("construct + verify drive the documented exit codes") {
    TempDir tmp;
    auto out = tmp.file("x.design");
    auto res = run("construct cross-polytope --d 3 --out " + out);
    CHECK(res.exit_code == 0);
    CHECK(fs::exists(out));

    CHECK(run("verify " + out + " --t 3 --mode exact").exit_code == 0);
    CHECK(run("verify " + out + " --t 4 --mode exact").exit_code == 1);
    CHECK(run("verify " + tmp.file("missing.design") + " --t 3").exit_code == 2);

    // exact mode on a binary64 file is an error, not a failure
    auto f = tmp.file("float.design");
    REQUIRE(run("approx tensor --d 3 --t 1 --eps 0.5 --seed 3 --out " + f)
                .exit_code == 0);
    CHECK(run("verify " + f + " --t 1 --mode exact").exit_code == 2);
}

TEST_CASE("usage errors exit 2 and name the problem") {
    auto res = run("construct cross-polytope --d 3");  // missing --out
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("--out") != std::string::npos);
    CHECK(run("bound delsarte --d 3 --t 5 --bogus 1").exit_code == 2);
    CHECK(run("florble").exit_code == 2);
}

TEST_CASE("identical invocations are byte-identical, manifest included") {
    TempDir tmp;
    auto out1 = tmp.file("a.design");
    auto out2 = tmp.file("b.design");
    std::string flags = "approx tensor --d 5 --t 1 --eps 0.3 --seed 42 --out ";
    CHECK(run(flags + out1).exit_code == 0);
    CHECK(run(flags + out2).exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
    std::string m1 = slurp(out1 + ".manifest");
    std::string m2 = slurp(out2 + ".manifest");
    // digests and all flags agree except the output path itself
    auto scrub = [](std::string s, const std::string& path) {
        std::string::size_type pos;
        while ((pos = s.find(path)) != std::string::npos) s.erase(pos, path.size());
        return s;
    };
    CHECK(scrub(m1, out1) == scrub(m2, out2));
    CHECK(m1.find("fnv1a64:") != std::string::npos);
    CHECK(m1.find("\"seed\": 42") != std::string::npos);
}

TEST_CASE("convert and project pipelines") {
    TempDir tmp;
    auto cp = tmp.file("cp.design");
    auto g = tmp.file("g.design");
    auto s = tmp.file("s.design");
    auto p = tmp.file("p.design");
    REQUIRE(run("construct cross-polytope --d 5 --out " + cp).exit_code == 0);
    CHECK(run("convert s2g " + cp + " --t 3 --out " + g).exit_code == 0);
    CHECK(run("verify " + g + " --t 3 --mode float --tol 1e-8").exit_code == 0);
    CHECK(run("convert g2s " + g + " --t 3 --out " + s).exit_code == 0);
    CHECK(run("verify " + s + " --t 3 --mode float --tol 1e-8").exit_code == 0);
    CHECK(run("project " + cp + " --k 3 --t 3 --out " + p).exit_code == 0);
    CHECK(run("verify " + p + " --t 3 --mode float --tol 1e-8").exit_code == 0);

    // converting a non-design fails loudly
    CHECK(run("convert s2g " + cp + " --t 5 --out " + tmp.file("no.design"))
              .exit_code == 1);
}

TEST_CASE("twise construct and verify round-trip through files") {
    TempDir tmp;
    auto arr = tmp.file("a.array");
    auto res = run("twise construct --q 2 --d 3 --t 2 --seed 7 --out " + arr);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("rows: 4") != std::string::npos);
    CHECK(run("twise verify " + arr + " --t 2").exit_code == 0);
    auto fail = run("twise verify " + arr + " --t 3");
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("FAIL") != std::string::npos);
}

TEST_CASE("signed construction writes orbit and materialized files") {
    TempDir tmp;
    auto orbit = tmp.file("signed.orbit");
    auto mat = tmp.file("signed.design");
    auto res = run("construct signed --d 4 --t 2 --measure gaussian --seed 5 "
                   "--out " + orbit + " --materialize " + mat);
    CHECK(res.exit_code == 0);
    std::string text = slurp(orbit);
    CHECK(text.find("orbit v1") == 0);
    CHECK(text.find("measure: gaussian") != std::string::npos);
    CHECK(text.find("generators: 4") != std::string::npos);
    CHECK(text.find("*u") != std::string::npos);  // pi-graded weights
    CHECK(run("verify " + mat + " --t 4 --mode float --tol 1e-9").exit_code == 0);
}

TEST_CASE("quad subcommands") {
    auto res = run("quad radial --d 3 --t 1");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("nodes: 1") != std::string::npos);
    CHECK(res.output.find("0.6366197723675814") != std::string::npos);  // 2/pi

    auto search = run("quad search1d --t 3 --q 2 --seed 7");
    CHECK(search.exit_code == 0);
    auto fail = run("quad search1d --t 5 --q 4 --seed 7");
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("search failed") != std::string::npos);
}

TEST_CASE("approx l2 and certify agree on the certificate") {
    TempDir tmp;
    auto out = tmp.file("l2.design");
    auto res = run("approx l2 --d 3 --t 2 --eps 0.6 --seed 11 --out " + out);
    CHECK(res.exit_code == 0);
    auto cert = run("certify " + out + " --mode l2 --t 2");
    CHECK(cert.exit_code == 0);
    CHECK(cert.output.find("method: l2-gegenbauer") != std::string::npos);

    auto tens = run("certify " + out + " --mode tensor --t 1");
    CHECK(tens.exit_code == 0);
    CHECK(tens.output.find("method: tensor-gram") != std::string::npos);
}
