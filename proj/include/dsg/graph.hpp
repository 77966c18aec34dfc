#pragma once

// The materialized graph: rank-ordered vertex list plus a dense symmetric
// bit matrix. Immutable once built; safe for shared read-only access.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dsg/bitset.hpp"
#include "dsg/vectors.hpp"

namespace dsg {

struct DirectSumGraph {
    SpaceParams params;
    int order = 0;
    std::vector<DSVector> vertices;  // rank order
    std::vector<Skeleton> skeletons; // per vertex
    std::vector<Bitset> adj;         // symmetric, zero diagonal
    std::vector<int> degrees;
    std::uint64_t edge_count = 0;

    bool adjacent(int i, int j) const { return adj[i].test(j); }
};

// Adjacency depends only on the skeleton pair, so rows are assembled per
// skeleton class and stamped onto the members (diagonal cleared).
DirectSumGraph build_graph(const SpaceParams& p);

enum class LabelStyle { symbolic, tuple };

// symbolic: "a1+2a2+b1" (coefficient 1 suppressed, index order)
// tuple:    "a:1,2|b:1,0"
std::string vertex_label(const DSVector& x, LabelStyle style);

enum class ExportFormat { dot, edgelist, json };

void export_graph(const DirectSumGraph& g, ExportFormat fmt, std::ostream& out);
std::string export_graph_string(const DirectSumGraph& g, ExportFormat fmt);

} // namespace dsg
