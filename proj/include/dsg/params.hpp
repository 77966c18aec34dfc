#pragma once

// Parameters of the ambient space: V = U (+) W over GF(q), with
// dim(U) = dim_u >= 1 and dim(W) = dim_w >= 1.

#include <cstdint>

namespace dsg {

inline constexpr std::uint64_t kDefaultVertexCap = 100000;

// Dimensions are limited to 30 so index supports fit a 32-bit mask;
// any graph near that limit is far beyond the dense-matrix budget anyway.
inline constexpr int kMaxDimension = 30;

struct SpaceParams {
    std::uint32_t q = 2; // prime field size
    int dim_u = 1;
    int dim_w = 1;

    int dim_total() const { return dim_u + dim_w; }
    // number of vertices, (q^dim_u - 1)(q^dim_w - 1)
    std::uint64_t order() const;

    // Validates q prime, dims >= 1, and order <= vertex_cap.
    static SpaceParams create(std::uint64_t q, int dim_u, int dim_w,
                              std::uint64_t vertex_cap = kDefaultVertexCap);

    bool operator==(const SpaceParams&) const = default;
};

} // namespace dsg
