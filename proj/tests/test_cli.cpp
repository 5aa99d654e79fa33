#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("XCHAN_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "XCHAN_BIN must point at the xchan binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("capacity values and formats") {
    auto r = run("capacity --nc 12 --nd 15");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "22"));
    CHECK(contains(r.out, "2(nd-nc/3)"));
    CHECK(contains(r.out, "config:"));

    auto csv = run("--format csv capacity --nc 10 --nd 13");
    CHECK(csv.exit_code == 0);
    CHECK(contains(csv.out, "nc,nd,ratio,capacity_num,capacity_den,branch_label"));
    CHECK(contains(csv.out, "10,13,10/13,58,3,"));

    auto js = run("--format json capacity --nc 5 --nd 5");
    CHECK(js.exit_code == 0);
    CHECK(contains(js.out, "\"num\": 5"));
    CHECK(contains(js.out, "\"branch\": \"nd\""));
}

TEST_CASE("degenerate capacity input is a usage error") {
    CHECK(run("capacity --nc 0 --nd 0").exit_code == 2);
    CHECK(run("capacity --nc 1").exit_code == 2);       // missing flag
    CHECK(run("capacity --bogus 1 --nc 1 --nd 1").exit_code == 2);
    CHECK(run("no-such-command").exit_code == 2);
}

TEST_CASE("identical flags give byte-identical output") {
    auto a = run("--format csv simulate-gauss --Q 17 --N 1 --nc 2 --nd 3 --trials 200 --seed 5");
    auto b = run("--format csv simulate-gauss --Q 17 --N 1 --nc 2 --nd 3 --trials 200 --seed 5");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto c = run("--format csv simulate-gauss --Q 17 --N 1 --nc 2 --nd 3 --trials 200 --seed 6");
    CHECK(a.out != c.out);
}

TEST_CASE("precoder dump carries certificates") {
    auto js = run("--format json precoder --nc 12 --nd 15");
    CHECK(js.exit_code == 0);
    CHECK(contains(js.out, "\"row_hex\""));
    CHECK(contains(js.out, "\"valid\": true"));
    CHECK(contains(js.out, "\"rank_full\": 15"));

    auto ext = run("precoder --nc 10 --nd 13 --json");
    CHECK(ext.exit_code == 0);
    CHECK(contains(ext.out, "\"extension\": 3"));

    auto f3 = run("--format json precoder --nc 2 --nd 3 --field 3");
    CHECK(f3.exit_code == 0);
    CHECK(contains(f3.out, "\"modulus\": 3"));
}

TEST_CASE("gdof curve hits the named grid points") {
    auto r = run("--format csv gdof-curve --step 1/12 --max 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "alpha_num,alpha_den,d_num,d_den,branch,d_ic_num,d_ic_den"));
    CHECK(contains(r.out, "1,2,1,1,2a,1,1"));       // alpha = 1/2
    CHECK(contains(r.out, "4,3,2,1,2a-2/3,5,3"));   // alpha = 4/3
    CHECK(contains(r.out, "2,1,2,1,2,2,1"));        // alpha = 2
    CHECK(contains(r.out, "0,1,2,1,2-2a,2,1"));     // alpha = 0

    CHECK(run("gdof-curve --step 0").exit_code == 2);
}

TEST_CASE("gdof single point") {
    auto r = run("gdof --alpha 4/3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "2"));
    auto dec = run("--format json gdof --alpha 0.5");
    CHECK(dec.exit_code == 0);
    CHECK(contains(dec.out, "\"den\": 2"));
}

TEST_CASE("sweep-verify and its negative control") {
    auto good = run("sweep-verify --max-nd 6");
    CHECK(good.exit_code == 0);
    CHECK(contains(good.out, "failed\t0"));

    auto bad = run("sweep-verify --max-nd 6 --inject-fault");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.out, "first_failure"));
}

TEST_CASE("simulate-det reports zero errors") {
    auto r = run("--format csv simulate-det --nc 2 --nd 3 --exhaustive");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "16,0"));

    auto rnd = run("--format csv simulate-det --nc 12 --nd 15 --trials 300 --seed 9");
    CHECK(rnd.exit_code == 0);
    CHECK(contains(rnd.out, "300,0"));
}

TEST_CASE("noisy-check json verdicts") {
    auto weak = run("noisy-check --h11 1 --h12 0.1 --h21 0.1 --h22 1 --p1 1 --p2 1");
    CHECK(weak.exit_code == 0);
    CHECK(contains(weak.out, "\"regime\": \"weak-noisy\""));
    CHECK(contains(weak.out, "sum_capacity_bits"));

    auto neither = run("noisy-check --h11 1 --h12 1 --h21 1 --h22 1 --p1 1 --p2 1");
    CHECK(contains(neither.out, "\"regime\": \"neither\""));
    CHECK_FALSE(contains(neither.out, "sum_capacity_bits"));
}

TEST_CASE("bounds subcommands") {
    auto det = run("--format csv bounds-det --n11 5 --n12 4 --n21 4 --n22 5");
    CHECK(det.exit_code == 0);
    CHECK(contains(det.out, "up1,R11+R12+R22,6"));
    CHECK(contains(det.out, "up5,R11+R12+R21+R22,8"));

    auto gauss = run("--format csv bounds-gauss --h11 1 --h12 1 --h21 1 --h22 1 --p1 1 --p2 1");
    CHECK(gauss.exit_code == 0);
    CHECK(contains(gauss.out, "etw1,sum,1.32192809489"));
}

TEST_CASE("simulate-gauss csv schema") {
    auto r = run("--format csv simulate-gauss --Q 100 --N 1 --nc 3 --nd 4 --trials 500 --seed 3 "
                 "--nonzero-digits --workers 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "level_k,errors,trials,p_hat,wilson_upper"));
    CHECK(contains(r.out, "3,0,500"));  // top digit stays clean
    CHECK(contains(r.out, "mean_power_tx1"));

    auto noiseless = run("--format csv simulate-gauss --Q 17 --N 1 --nc 2 --nd 3 --trials 100 "
                         "--seed 1 --noiseless");
    CHECK(noiseless.exit_code == 0);
    CHECK(contains(noiseless.out, "0,0,100"));
}

TEST_CASE("output redirection honors XCHAN_OUTPUT_DIR") {
    std::string dir = "/tmp/xchan_test_out";
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
    const char* bin = std::getenv("XCHAN_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = "XCHAN_OUTPUT_DIR=" + dir + " " + bin +
                      " --format csv --out cap.csv capacity --nc 12 --nd 15 >/dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    FILE* fp = std::fopen((dir + "/cap.csv").c_str(), "r");
    REQUIRE(fp != nullptr);
    char buf[256];
    std::string first = std::fgets(buf, sizeof buf, fp) ? buf : "";
    std::fclose(fp);
    CHECK(first.find("# config:") == 0);
}

TEST_CASE("config file supplies sweep defaults") {
    std::string path = "/tmp/xchan_cfg.json";
    FILE* fp = std::fopen(path.c_str(), "w");
    REQUIRE(fp != nullptr);
    std::fputs("{\"sweep_verify\": {\"max_nd\": 3}, \"gdof_curve\": {\"step\": \"1/2\", \"max\": \"1\"}}",
               fp);
    std::fclose(fp);

    auto sweep = run("--config " + path + " sweep-verify");
    CHECK(sweep.exit_code == 0);
    CHECK(contains(sweep.out, "checked\t15"));  // nd in {1,2,3}: 3+5+7 points

    auto curve = run("--format csv --config " + path + " gdof-curve");
    CHECK(curve.exit_code == 0);
    CHECK(contains(curve.out, "1,2,1,1,2a"));
    CHECK_FALSE(contains(curve.out, "3,2,"));  // stops at alpha = 1
}
