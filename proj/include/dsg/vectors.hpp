#pragma once

// Vectors of V = U (+) W in coefficient form, their index supports, and the
// adjacency rule: two vertices are adjacent when their supports intersect on
// the U side and on the W side.
//
// A coefficient vector is a VERTEX of the graph when both parts are nonzero.
// Vertices carry a canonical rank: position in the lexicographic order of the
// full coefficient tuple (u-part most significant), densely re-indexed.

#include <cstdint>
#include <vector>

#include "dsg/params.hpp"

namespace dsg {

// Index supports of the two parts, as bitmasks (bit i-1 = basis index i).
struct Skeleton {
    std::uint32_t u_mask = 0;
    std::uint32_t w_mask = 0;

    int u_size() const { return __builtin_popcount(u_mask); }
    int w_size() const { return __builtin_popcount(w_mask); }
    int total() const { return u_size() + w_size(); }

    bool operator==(const Skeleton&) const = default;
};

struct DSVector {
    SpaceParams params;
    std::vector<std::uint32_t> u_coeffs; // dim_u values in [0, q)
    std::vector<std::uint32_t> w_coeffs; // dim_w values in [0, q)

    bool is_vertex() const;

    bool operator==(const DSVector&) const = default;
};

DSVector make_vector(const SpaceParams& p, std::vector<std::uint32_t> u,
                     std::vector<std::uint32_t> w);

Skeleton skeleton_of(const DSVector& x);

// Componentwise sum mod q. The result may fail is_vertex() (cancellation);
// callers must re-check.
DSVector vector_add(const DSVector& x, const DSVector& y);

// All vertices in canonical rank order.
std::vector<DSVector> enumerate_vertices(const SpaceParams& p);

std::uint64_t rank_vertex(const DSVector& x);                      // x must be a vertex
DSVector unrank_vertex(const SpaceParams& p, std::uint64_t rank);  // rank < order

bool is_adjacent(const DSVector& x, const DSVector& y);

} // namespace dsg
