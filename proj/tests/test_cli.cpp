#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(MSE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof buf, pipe)) out += buf;
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    std::filesystem::path dir;
    TempDir() {
        dir = std::filesystem::temp_directory_path() /
              ("mse_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("gen + verify-gap round trip") {
    TempDir tmp;
    auto gen = run("gen --family bhh --n 24 --arity 4 --label no --seed 5 --out " +
                   tmp.path("bhh") + " --manifest " + tmp.path("m.json"));
    CHECK(gen.exit_code == 0);
    auto vg = run("verify-gap --manifest " + tmp.path("m.json"));
    CHECK(vg.exit_code == 0);
    CHECK(vg.out.find("PASS") != std::string::npos);
    CHECK(vg.out.find("measured=15") != std::string::npos);
}

TEST_CASE("verify-gap fails with exit 1 on a wrong bound") {
    TempDir tmp;
    run("gen --family bhh --n 8 --arity 2 --label yes --seed 1 --out " + tmp.path("g") +
        " --manifest " + tmp.path("m.json"));
    // tamper with the promised value
    std::string m = slurp(tmp.path("m.json"));
    auto pos = m.find("\"value\": 6");
    REQUIRE(pos != std::string::npos);
    m.replace(pos, 10, "\"value\": 7");
    std::ofstream(tmp.path("m.json")) << m;
    auto vg = run("verify-gap --manifest " + tmp.path("m.json"));
    CHECK(vg.exit_code == 1);
    CHECK(vg.out.find("FAIL") != std::string::npos);
}

TEST_CASE("tester emits a one-line JSON verdict") {
    TempDir tmp;
    std::ofstream(tmp.path("s.txt")) << "6 insert\n+ 0 1\n+ 2 3\n+ 4 5\n";
    auto res = run("tester --mode insert --k 4 --stream " + tmp.path("s.txt"));
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"answer\":\"Yes\"") != std::string::npos);
    CHECK(res.out.find("words_used") != std::string::npos);

    auto res2 = run("tester --mode insert --k 20 --stream " + tmp.path("s.txt"));
    CHECK(res2.out.find("\"answer\":\"No\"") != std::string::npos);
    CHECK(res2.out.find("\"estimate\":3") != std::string::npos);
}

TEST_CASE("estimate json report") {
    TempDir tmp;
    std::ofstream s(tmp.path("s.txt"));
    s << "1024 insert\n";
    for (int i = 0; i < 512; ++i) s << "+ " << 2 * i << ' ' << 2 * i + 1 << '\n';
    s.close();
    auto res = run("estimate --alpha 32 --seed 3 --json --stream " + tmp.path("s.txt"));
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"per_beta\"") != std::string::npos);
    CHECK(res.out.find("\"branch\"") != std::string::npos);
}

TEST_CASE("estimate rejects alpha above sqrt(n) with exit 2") {
    TempDir tmp;
    std::ofstream(tmp.path("s.txt")) << "16 insert\n+ 0 1\n";
    auto res = run("estimate --alpha 10 --stream " + tmp.path("s.txt"));
    CHECK(res.exit_code == 2);
}

TEST_CASE("run is byte-identical across invocations") {
    TempDir tmp;
    std::ofstream s(tmp.path("s.txt"));
    s << "64 insert\n";
    for (int i = 0; i < 20; ++i) s << "+ " << i << ' ' << i + 20 << '\n';
    s.close();
    std::ofstream(tmp.path("cfg.json"))
        << R"({"command":"estimate","trials":10,"seed":7,"alpha":8,"mode":"insert","stream":")"
        << tmp.path("s.txt") << R"("})";
    auto r1 = run("run --config " + tmp.path("cfg.json") + " --out-dir " + tmp.path("o1"));
    auto r2 = run("run --config " + tmp.path("cfg.json") + " --out-dir " + tmp.path("o2"));
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    std::string csv1 = slurp(tmp.path("o1") + "/rows.csv");
    CHECK(csv1 == slurp(tmp.path("o2") + "/rows.csv"));
    CHECK(csv1.rfind("# mse-csv v1", 0) == 0);
    CHECK(std::count(csv1.begin(), csv1.end(), '\n') == 12);  // header comment + header + 10 rows
}

TEST_CASE("tvd and folklore subcommands") {
    auto tvd = run("tvd --n 8 --c 1 --trials 10 --seed 2");
    CHECK(tvd.exit_code == 0);
    CHECK(tvd.out.rfind("0.000000000", 0) == 0);

    TempDir tmp;
    std::ofstream s(tmp.path("pm.txt"));
    s << "64 dynamic\n";
    for (int i = 0; i < 32; ++i) s << "+ " << i << ' ' << i + 32 << '\n';
    s.close();
    std::ofstream bp(tmp.path("left.txt"));
    for (int i = 0; i < 32; ++i) bp << i << '\n';
    bp.close();
    auto folk = run("folklore --stream " + tmp.path("pm.txt") + " --bipartition " +
                    tmp.path("left.txt") + " --seed 4");
    CHECK(folk.exit_code == 0);
    CHECK(folk.out.find("\"k\":") != std::string::npos);
    CHECK(folk.out.find("\"general_mode\":false") != std::string::npos);
}

TEST_CASE("rs generation to file and reuse") {
    TempDir tmp;
    auto rs = run("gen --family rs --N 16 --r 4 --t 3 --seed 11 --out " + tmp.path("a.rs"));
    CHECK(rs.exit_code == 0);
    auto eps = run("gen --family eps-insert --eps 0.0625 --label yes --seed 2 --rs-file " +
                   tmp.path("a.rs") + " --out " + tmp.path("eps") + " --manifest " +
                   tmp.path("m.json"));
    CHECK(eps.exit_code == 0);
    auto vg = run("verify-gap --manifest " + tmp.path("m.json"));
    CHECK(vg.exit_code == 0);
    CHECK(vg.out.find("PASS") != std::string::npos);
}

TEST_CASE("bench reports the space slopes") {
    auto res = run("bench --what tester-space --mode insert");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"slope\":0.9") != std::string::npos);
}

TEST_CASE("estimate batch mode: empty stream, 10 trials, 10 zero rows") {
    TempDir tmp;
    std::ofstream(tmp.path("empty.txt")) << "1024 insert\n";
    auto res = run("estimate --alpha 32 --trials 10 --seed 9 --stream " + tmp.path("empty.txt") +
                   " --out-dir " + tmp.path("o"));
    CHECK(res.exit_code == 0);
    std::string csv = slurp(tmp.path("o") + "/rows.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);  // format comment
    std::getline(lines, line);  // header
    int zero_rows = 0;
    while (std::getline(lines, line))
        if (line.find(",0,all-fail,") != std::string::npos) ++zero_rows;
    CHECK(zero_rows == 10);
}

TEST_CASE("gen covers the remaining families end to end") {
    TempDir tmp;
    auto rs = run("gen --family rs --N 16 --r 4 --t 3 --seed 11 --out " + tmp.path("b.rs"));
    REQUIRE(rs.exit_code == 0);

    auto da = run("gen --family dense-alpha --alpha 3 --theta 1 --seed 4 --rs-file " +
                  tmp.path("b.rs") + " --out " + tmp.path("da") + " --manifest " +
                  tmp.path("da.json"));
    CHECK(da.exit_code == 0);
    CHECK(run("verify-gap --manifest " + tmp.path("da.json")).exit_code == 0);

    auto ed = run("gen --family eps-dynamic --eps 0.0625 --label no --seed 6 --rs-file " +
                  tmp.path("b.rs") + " --out " + tmp.path("ed") + " --manifest " +
                  tmp.path("ed.json"));
    CHECK(ed.exit_code == 0);
    CHECK(run("verify-gap --manifest " + tmp.path("ed.json")).exit_code == 0);

    auto sms = run("gen --family sms --n 32 --k 4 --profile no,no,no,no --seed 8 --out " +
                   tmp.path("sms") + " --manifest " + tmp.path("sms.json") + " --churn 2.0");
    CHECK(sms.exit_code == 0);
    CHECK(sms.out.find("sms.stream") != std::string::npos);
    CHECK(run("verify-gap --manifest " + tmp.path("sms.json")).exit_code == 0);

    // infeasible RS parameters report Failure with exit 1
    auto bad = run("gen --family rs --N 8 --r 4 --t 3 --restarts 5 --seed 1 --out " +
                   tmp.path("no.rs"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("Failure") != std::string::npos);
}
