#include "mse/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mse/errors.hpp"

namespace mse {

namespace {
std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return in;
}
std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    return out;
}
}  // namespace

void save_graph(const Graph& g, const std::string& path) {
    auto out = open_out(path);
    out << g.n << ' ' << g.total_edges() << '\n';
    for (const auto& e : g.edges)
        for (long long i = 0; i < e.mult; ++i) out << e.u << ' ' << e.v << '\n';
}

Graph load_graph(const std::string& path) {
    auto in = open_in(path);
    int n;
    long long m;
    if (!(in >> n >> m)) throw IoError("bad graph header in " + path);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(m);
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw IoError("truncated graph file " + path);
        pairs.emplace_back(u, v);
    }
    return Graph::from_pairs(n, pairs);
}

void save_stream(const EdgeStream& s, const std::string& path) {
    auto out = open_out(path);
    out << s.n << ' ' << (s.mode == StreamMode::InsertionOnly ? "insert" : "dynamic") << '\n';
    for (const auto& ev : s.events)
        out << (ev.kind == EventKind::Insert ? '+' : '-') << ' ' << ev.u << ' ' << ev.v << '\n';
}

EdgeStream load_stream(const std::string& path) {
    auto in = open_in(path);
    EdgeStream s;
    std::string mode;
    if (!(in >> s.n >> mode)) throw IoError("bad stream header in " + path);
    if (mode == "insert")
        s.mode = StreamMode::InsertionOnly;
    else if (mode == "dynamic")
        s.mode = StreamMode::Dynamic;
    else
        throw IoError("unknown stream mode '" + mode + "' in " + path);
    char k;
    int u, v;
    while (in >> k >> u >> v) {
        if (k != '+' && k != '-') throw IoError("bad event kind in " + path);
        s.push(k == '+' ? EventKind::Insert : EventKind::Delete, u, v);
    }
    return s;
}

void save_rs_graph(const RsGraph& rs, const std::string& path) {
    auto out = open_out(path);
    out << rs.N << ' ' << rs.r << ' ' << rs.t << '\n';
    for (const auto& m : rs.matchings)
        for (auto [u, v] : m.edges) out << u << ' ' << v << '\n';
}

RsGraph load_rs_graph(const std::string& path) {
    auto in = open_in(path);
    RsGraph rs;
    if (!(in >> rs.N >> rs.r >> rs.t)) throw IoError("bad rs-graph header in " + path);
    for (int j = 0; j < rs.t; ++j) {
        Matching m;
        for (int i = 0; i < rs.r; ++i) {
            int u, v;
            if (!(in >> u >> v)) throw IoError("truncated rs-graph file " + path);
            if (u > v) std::swap(u, v);
            m.edges.emplace_back(u, v);
        }
        std::sort(m.edges.begin(), m.edges.end());
        rs.matchings.push_back(std::move(m));
    }
    if (!validate_rs_graph(rs)) throw IoError("rs-graph file fails validation: " + path);
    return rs;
}

namespace {
std::string op_name(GapBound::Op op) {
    switch (op) {
        case GapBound::Op::GE: return "ge";
        case GapBound::Op::LE: return "le";
        case GapBound::Op::EQ: return "eq";
    }
    return "eq";
}
GapBound::Op op_from(const std::string& s) {
    if (s == "ge") return GapBound::Op::GE;
    if (s == "le") return GapBound::Op::LE;
    if (s == "eq") return GapBound::Op::EQ;
    throw IoError("unknown bound op '" + s + "'");
}
}  // namespace

void save_manifest(const std::vector<ManifestEntry>& entries, const std::string& path) {
    nlohmann::json j;
    j["instances"] = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json je;
        je["id"] = e.id;
        je["family"] = e.family;
        je["graph_file"] = e.graph_file;
        je["bounds"] = nlohmann::json::array();
        for (const auto& b : e.bounds)
            je["bounds"].push_back({{"op", op_name(b.op)}, {"value", b.value}});
        j["instances"].push_back(je);
    }
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
    auto in = open_in(path);
    nlohmann::json j;
    in >> j;
    std::vector<ManifestEntry> entries;
    for (const auto& je : j.at("instances")) {
        ManifestEntry e;
        e.id = je.at("id").get<std::string>();
        e.family = je.value("family", std::string());
        e.graph_file = je.at("graph_file").get<std::string>();
        for (const auto& jb : je.at("bounds"))
            e.bounds.push_back({op_from(jb.at("op").get<std::string>()),
                                jb.at("value").get<long long>()});
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace mse
