#pragma once

// Closed-form reference values for every invariant the toolkit verifies,
// as exact integer functions of (q, dim_u, dim_w). All arithmetic is
// arbitrary precision; nothing here touches a graph.

#include <gmpxx.h>

#include <string>

#include "dsg/params.hpp"

namespace dsg::oracle {

mpz_class binomial(int n, int k);
mpz_class int_pow(const mpz_class& base, int exponent);

struct OrderSize {
    mpz_class order;
    mpz_class edges;
};
// Halving of the closed form is asserted exact; an odd numerator would
// falsify the size formula and raises std::logic_error.
OrderSize predict_order_size(const SpaceParams& p);

// degree of any vertex with the given support sizes: 1<=u_support<=dim_u,
// 1<=w_support<=dim_w
mpz_class predict_degree(const SpaceParams& p, int u_support, int w_support);

struct MinDegreeEdgeConn {
    mpz_class min_degree;
    mpz_class edge_connectivity; // same closed form
};
MinDegreeEdgeConn predict_min_degree_edge_connectivity(const SpaceParams& p);

struct DiameterCompleteness {
    int diameter = 2; // 1 when the graph is complete (dim 2), else 2
    bool complete = false;
    bool single_vertex_edge_case = false; // order 1: true diameter is 0
};
DiameterCompleteness predict_diameter_complete(const SpaceParams& p);

struct GirthTriangulated {
    int girth = 3; // -1 for acyclic
    bool triangulated = true;
    std::string case_label;
};
GirthTriangulated predict_girth_triangulated(const SpaceParams& p);

struct DominationIndependence {
    mpz_class domination;             // always 1 (all-ones universal vertex)
    mpz_class minimal_dominating_max; // upper bound dim_u*dim_w
    mpz_class independence;           // dim_u*dim_w for dim >= 3, else 1
};
DominationIndependence predict_domination_independence(const SpaceParams& p);

// The four maximal-clique families, keyed by whether each side is pinned to
// a fixed basis element (a "star", smallest support <= half the dimension)
// or consists of all supports larger than half ("majority").
enum class CliqueRegime { star_star, star_majority, majority_star, majority_majority };

struct CliqueFamily {
    CliqueRegime regime;
    std::string regime_label;
    int eff_k1 = 0; // minimum support sizes after snapping majority sides
    int eff_k2 = 0; // to floor(dim/2)+1, where the family is largest
    mpz_class size;
};
CliqueFamily predict_clique_family_size(const SpaceParams& p, int k1, int k2);

// maximum over the four family sizes at their largest parameters; for q=2
// and dim >= 4 the result is cross-checked against 2^(dim-2)
mpz_class predict_clique_number(const SpaceParams& p);

struct ChromaticBounds {
    bool applicable = false; // only q=2, dim >= 4
    mpz_class lower;
    mpz_class upper_twice;   // 2*upper held exactly; upper itself may be x/2
    bool upper_integral = false;
};
ChromaticBounds predict_chromatic_bounds(const SpaceParams& p);

struct EulerianPrediction {
    bool eulerian = false; // never Eulerian
    bool single_vertex_edge_case = false;
};
EulerianPrediction predict_eulerian(const SpaceParams& p);

} // namespace dsg::oracle
