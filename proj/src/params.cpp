#include "dsg/params.hpp"

#include <stdexcept>
#include <string>

#include "dsg/errors.hpp"
#include "dsg/field.hpp"

namespace dsg {

namespace {

// q^e - 1, clamped to limit+1 on overflow
std::uint64_t pow_minus_one_capped(std::uint64_t q, int e, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > (limit + 1) / q + 1) return limit + 1;
        v *= q;
        if (v > limit + 1) return limit + 1;
    }
    return v - 1;
}

} // namespace

std::uint64_t SpaceParams::order() const {
    std::uint64_t a = 1, b = 1;
    for (int i = 0; i < dim_u; ++i) a *= q;
    for (int i = 0; i < dim_w; ++i) b *= q;
    return (a - 1) * (b - 1);
}

SpaceParams SpaceParams::create(std::uint64_t q, int dim_u, int dim_w,
                                std::uint64_t vertex_cap) {
    if (!is_prime(q))
        throw std::invalid_argument("q must be prime (got " + std::to_string(q) +
                                    "); prime-power fields are not supported");
    if (q > 0x7fffffffULL)
        throw std::invalid_argument("q too large (limit 2^31-1)");
    if (dim_u < 1 || dim_w < 1)
        throw std::invalid_argument("both subspace dimensions must be >= 1");
    if (dim_u > kMaxDimension || dim_w > kMaxDimension)
        throw std::invalid_argument("subspace dimension exceeds limit " +
                                    std::to_string(kMaxDimension));
    if (vertex_cap > (std::uint64_t{1} << 62)) vertex_cap = std::uint64_t{1} << 62;

    std::uint64_t a = pow_minus_one_capped(q, dim_u, vertex_cap);
    std::uint64_t b = pow_minus_one_capped(q, dim_w, vertex_cap);
    bool over = a > vertex_cap || b > vertex_cap;
    if (!over && b != 0 && a > vertex_cap / b) over = true;
    if (over || (!over && a * b > vertex_cap))
        throw ResourceError("vertex count (q^" + std::to_string(dim_u) + "-1)(q^" +
                            std::to_string(dim_w) + "-1) exceeds vertex cap " +
                            std::to_string(vertex_cap));

    return SpaceParams{static_cast<std::uint32_t>(q), dim_u, dim_w};
}

} // namespace dsg
