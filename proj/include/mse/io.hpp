#pragma once

#include <string>
#include <vector>

#include "mse/graph.hpp"
#include "mse/hard_instances.hpp"
#include "mse/stream.hpp"

namespace mse {

// Graph text format: first line "n m", then m lines "u v" (multi-edges repeat).
void save_graph(const Graph& g, const std::string& path);
Graph load_graph(const std::string& path);

// Stream text format: header "n mode" with mode in {insert, dynamic}, then
// one event per line, "+ u v" or "- u v". Bit-exact for fixtures.
void save_stream(const EdgeStream& s, const std::string& path);
EdgeStream load_stream(const std::string& path);

// RS graph format: header "N r t", then t blocks of r lines "u v".
void save_rs_graph(const RsGraph& rs, const std::string& path);
RsGraph load_rs_graph(const std::string& path);

struct ManifestEntry {
    std::string id;
    std::string family;
    std::string graph_file;
    std::vector<GapBound> bounds;
};

void save_manifest(const std::vector<ManifestEntry>& entries, const std::string& path);
std::vector<ManifestEntry> load_manifest(const std::string& path);

}  // namespace mse
