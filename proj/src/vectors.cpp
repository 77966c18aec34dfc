#include "dsg/vectors.hpp"

#include <stdexcept>
#include <string>

namespace dsg {

namespace {

std::uint32_t support_mask(const std::vector<std::uint32_t>& coeffs) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) m |= std::uint32_t{1} << i;
    return m;
}

std::uint64_t pow_u64(std::uint64_t base, int e) {
    std::uint64_t v = 1;
    while (e-- > 0) v *= base;
    return v;
}

// value of a coefficient sequence read as a base-q number, first digit most
// significant (the lexicographic key of the sequence)
std::uint64_t digits_to_index(const std::vector<std::uint32_t>& coeffs, std::uint64_t q) {
    std::uint64_t v = 0;
    for (auto c : coeffs) v = v * q + c;
    return v;
}

std::vector<std::uint32_t> index_to_digits(std::uint64_t v, std::uint64_t q, int len) {
    std::vector<std::uint32_t> out(len, 0);
    for (int i = len - 1; i >= 0; --i) {
        out[i] = static_cast<std::uint32_t>(v % q);
        v /= q;
    }
    return out;
}

void require_same_params(const DSVector& x, const DSVector& y) {
    if (!(x.params == y.params))
        throw std::invalid_argument("vectors belong to different spaces");
}

} // namespace

bool DSVector::is_vertex() const {
    return support_mask(u_coeffs) != 0 && support_mask(w_coeffs) != 0;
}

DSVector make_vector(const SpaceParams& p, std::vector<std::uint32_t> u,
                     std::vector<std::uint32_t> w) {
    if (static_cast<int>(u.size()) != p.dim_u || static_cast<int>(w.size()) != p.dim_w)
        throw std::invalid_argument("coefficient count does not match the space dimensions");
    for (auto c : u)
        if (c >= p.q) throw std::invalid_argument("coefficient out of range for GF(q)");
    for (auto c : w)
        if (c >= p.q) throw std::invalid_argument("coefficient out of range for GF(q)");
    return DSVector{p, std::move(u), std::move(w)};
}

Skeleton skeleton_of(const DSVector& x) {
    return Skeleton{support_mask(x.u_coeffs), support_mask(x.w_coeffs)};
}

DSVector vector_add(const DSVector& x, const DSVector& y) {
    require_same_params(x, y);
    DSVector z = x;
    for (int i = 0; i < x.params.dim_u; ++i) {
        z.u_coeffs[i] += y.u_coeffs[i];
        if (z.u_coeffs[i] >= x.params.q) z.u_coeffs[i] -= x.params.q;
    }
    for (int i = 0; i < x.params.dim_w; ++i) {
        z.w_coeffs[i] += y.w_coeffs[i];
        if (z.w_coeffs[i] >= x.params.q) z.w_coeffs[i] -= x.params.q;
    }
    return z;
}

std::vector<DSVector> enumerate_vertices(const SpaceParams& p) {
    // vertices sorted by full-tuple lexicographic key = sorted by
    // (u-part index, w-part index), both parts nonzero
    std::uint64_t ucount = pow_u64(p.q, p.dim_u);
    std::uint64_t wcount = pow_u64(p.q, p.dim_w);
    std::vector<DSVector> out;
    out.reserve(p.order());
    for (std::uint64_t a = 1; a < ucount; ++a) {
        auto u = index_to_digits(a, p.q, p.dim_u);
        for (std::uint64_t b = 1; b < wcount; ++b)
            out.push_back(DSVector{p, u, index_to_digits(b, p.q, p.dim_w)});
    }
    return out;
}

std::uint64_t rank_vertex(const DSVector& x) {
    if (!x.is_vertex())
        throw std::domain_error("rank is defined for vertices only (both parts nonzero)");
    std::uint64_t a = digits_to_index(x.u_coeffs, x.params.q);
    std::uint64_t b = digits_to_index(x.w_coeffs, x.params.q);
    std::uint64_t wverts = pow_u64(x.params.q, x.params.dim_w) - 1;
    return (a - 1) * wverts + (b - 1);
}

DSVector unrank_vertex(const SpaceParams& p, std::uint64_t rank) {
    if (rank >= p.order())
        throw std::invalid_argument("vertex rank " + std::to_string(rank) +
                                    " out of range (order " + std::to_string(p.order()) + ")");
    std::uint64_t wverts = pow_u64(p.q, p.dim_w) - 1;
    std::uint64_t a = rank / wverts + 1;
    std::uint64_t b = rank % wverts + 1;
    return DSVector{p, index_to_digits(a, p.q, p.dim_u), index_to_digits(b, p.q, p.dim_w)};
}

bool is_adjacent(const DSVector& x, const DSVector& y) {
    require_same_params(x, y);
    if (!x.is_vertex() || !y.is_vertex())
        throw std::domain_error("adjacency is defined for vertices only");
    if (x == y) return false;
    Skeleton sx = skeleton_of(x), sy = skeleton_of(y);
    return (sx.u_mask & sy.u_mask) != 0 && (sx.w_mask & sy.w_mask) != 0;
}

} // namespace dsg
