#pragma once

// Ground-truth invariants by exhaustive algorithms. Every operation is a pure
// function of an immutable graph. NP-hard computations are gated by caps at
// the analyze() level and skipped with a cap note instead of failing.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dsg/graph.hpp"

namespace dsg {

// sentinel for "no finite value" (acyclic girth, disconnected diameter)
inline constexpr int kInfinite = -1;

struct Caps {
    std::uint64_t vertex_cap = kDefaultVertexCap;
    int traversal_cap = 2000; // all-pairs BFS style computations
    int edgeconn_cap = 300;
    int clique_order_cap = 300; // census + independence via complement clique
    std::uint64_t clique_budget = 200000;
    int chromatic_cap = 32;
    int updom_cap = 16;
};

struct DegreeStats {
    std::vector<int> degrees;
    int min_degree = 0;
    // (|u support|, |w support|) -> distinct degrees seen in that class
    std::map<std::pair<int, int>, std::vector<int>> by_class;
};

struct CliqueCensus {
    bool complete = true; // false when the clique budget aborted enumeration
    int clique_number = 0;
    std::map<int, std::uint64_t> count_by_size;
    std::vector<std::vector<int>> cliques; // members sorted ascending
};

struct ChromaticResult {
    bool exact = false;
    int lower = 0;
    int upper = 0; // == lower when exact
    int value() const { return lower; }
    bool operator==(const ChromaticResult&) const = default;
};

struct InvariantReport {
    SpaceParams params;
    std::uint64_t order = 0;
    std::uint64_t edges = 0;
    int min_degree = 0;
    bool connected = true;
    bool eulerian = false;
    std::optional<int> diameter;
    std::optional<int> girth;
    std::optional<bool> triangulated;
    std::optional<int> edge_connectivity;
    std::optional<int> clique_number;
    std::optional<std::map<int, std::uint64_t>> clique_census;
    std::optional<int> independence_number;
    ChromaticResult chromatic;
    std::optional<int> domination_number;
    std::optional<int> upper_domination;
    std::vector<std::string> cap_notes;
};

// (connected, diameter); single vertex -> (true, 0)
std::pair<bool, int> connectivity_and_diameter(const DirectSumGraph& g);

// Path of length <= 2 between distinct vertices x and y (as ranks).
// Adjacent pair -> {x, y}. Otherwise {x, z, y} where z is x+y when that sum
// is a vertex adjacent to both, else the all-ones vector on the union of the
// two supports (always a common neighbour of a non-adjacent pair).
std::vector<int> path_witness(const DirectSumGraph& g, int x, int y);

int girth_exact(const DirectSumGraph& g);

DegreeStats degree_stats(const DirectSumGraph& g);

// connected with every degree even; the single-vertex graph counts as
// Eulerian (vacuous closed walk)
bool is_eulerian_exact(const DirectSumGraph& g);

// order >= 3 and every vertex lies in a triangle
bool is_triangulated_exact(const DirectSumGraph& g);

// global min edge cut: min over t of max-flow(v0, t), v0 of minimum degree
int edge_connectivity_exact(const DirectSumGraph& g);

CliqueCensus maximal_clique_census(const DirectSumGraph& g,
                                   std::uint64_t budget = Caps{}.clique_budget);

// maximum clique size of an arbitrary adjacency matrix (branch and bound
// with greedy colouring bound); exposed for reuse on complements
int max_clique_size(const std::vector<Bitset>& adj);

int independence_number_exact(const DirectSumGraph& g);

ChromaticResult chromatic_number_exact(const DirectSumGraph& g, const Caps& caps = {});

int domination_number_exact(const DirectSumGraph& g);

// maximum cardinality over inclusion-minimal dominating sets
int upper_domination_exact(const DirectSumGraph& g);

InvariantReport analyze(const DirectSumGraph& g, const Caps& caps = {});

} // namespace dsg
