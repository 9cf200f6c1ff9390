#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mse/errors.hpp"
#include "mse/hard_instances.hpp"
#include "mse/io.hpp"
#include "mse/rng.hpp"

using namespace mse;

namespace {

struct TempDir {
    std::filesystem::path dir;
    TempDir() {
        dir = std::filesystem::temp_directory_path() / ("mse_io_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("graph files round-trip with multiplicities") {
    TempDir tmp;
    Graph g = Graph::from_pairs(5, {{0, 1}, {0, 1}, {2, 3}, {1, 4}});
    save_graph(g, tmp.path("g.txt"));
    Graph back = load_graph(tmp.path("g.txt"));
    CHECK(back.n == 5);
    CHECK(back.total_edges() == 4);
    CHECK(back.multiplicity(0, 1) == 2);
    CHECK(back.multiplicity(2, 3) == 1);
    CHECK(slurp(tmp.path("g.txt")) == "5 4\n0 1\n0 1\n1 4\n2 3\n");
}

TEST_CASE("stream files are bit-exact") {
    TempDir tmp;
    EdgeStream s;
    s.n = 6;
    s.mode = StreamMode::Dynamic;
    s.push(EventKind::Insert, 0, 1);
    s.push(EventKind::Insert, 4, 2);
    s.push(EventKind::Delete, 1, 0);
    save_stream(s, tmp.path("s.txt"));
    CHECK(slurp(tmp.path("s.txt")) == "6 dynamic\n+ 0 1\n+ 2 4\n- 0 1\n");
    EdgeStream back = load_stream(tmp.path("s.txt"));
    CHECK(back.mode == StreamMode::Dynamic);
    REQUIRE(back.events.size() == 3);
    CHECK(back.events[2].kind == EventKind::Delete);
    save_stream(back, tmp.path("s2.txt"));
    CHECK(slurp(tmp.path("s.txt")) == slurp(tmp.path("s2.txt")));
}

TEST_CASE("rs graph files validate on load") {
    TempDir tmp;
    auto rs = build_rs_graph(16, 4, 3, 11);
    REQUIRE(rs.has_value());
    save_rs_graph(*rs, tmp.path("a.rs"));
    RsGraph back = load_rs_graph(tmp.path("a.rs"));
    CHECK(back.N == 16);
    CHECK(back.t == 3);
    CHECK(validate_rs_graph(back));

    // corrupting an edge into a duplicate must be rejected
    std::string text = slurp(tmp.path("a.rs"));
    std::istringstream lines(text);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    std::ostringstream out;
    out << header << '\n' << first << '\n' << first << '\n';
    std::string rest;
    std::getline(lines, rest);  // drop the second edge line
    while (std::getline(lines, rest)) out << rest << '\n';
    std::ofstream(tmp.path("bad.rs")) << out.str();
    CHECK_THROWS_AS(load_rs_graph(tmp.path("bad.rs")), IoError);
}

TEST_CASE("manifest round-trip") {
    TempDir tmp;
    std::vector<ManifestEntry> entries = {
        {"a", "bhh", "a.graph", {{GapBound::Op::EQ, 6}}},
        {"b", "sms", "b.graph", {{GapBound::Op::GE, 20}, {GapBound::Op::LE, 40}}},
    };
    save_manifest(entries, tmp.path("m.json"));
    auto back = load_manifest(tmp.path("m.json"));
    REQUIRE(back.size() == 2);
    CHECK(back[0].id == "a");
    CHECK(back[1].bounds.size() == 2);
    CHECK(back[1].bounds[0].op == GapBound::Op::GE);
    CHECK(back[1].bounds[0].value == 20);
    CHECK(back[1].family == "sms");
}

TEST_CASE("verify_gap over a batch of 100 mixed SMS instances") {
    int passes = 0;
    for (int i = 0; i < 100; ++i) {
        int n = (i % 2) ? 32 : 64;
        int k = (i % 2) ? 4 : 8;
        Label label = (i % 4 < 2) ? Label::Yes : Label::No;
        auto inst = gen_sms(n, k, std::vector<Label>(k, label), child_seed(6000, i));
        std::vector<GapBound> bounds;
        if (label == Label::Yes)
            bounds.push_back({GapBound::Op::GE, n / 2 + n / (2 * k)});
        else
            bounds.push_back({GapBound::Op::LE, n / k});
        auto rep = verify_gap(inst.graph, "sms-" + std::to_string(i), bounds);
        passes += rep.pass ? 1 : 0;
    }
    CHECK(passes == 100);
}
