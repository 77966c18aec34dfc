#pragma once

// Prime-field scalars. A FieldScalar is a residue tagged with its modulus;
// mixing moduli is a usage error.

#include <cstdint>

namespace dsg {

bool is_prime(std::uint64_t n);

struct FieldScalar {
    std::uint32_t value = 0;
    std::uint32_t modulus = 2;

    bool operator==(const FieldScalar&) const = default;
};

// Reduces value mod q. q must be prime.
FieldScalar scalar(std::uint64_t value, std::uint64_t q);

FieldScalar add(FieldScalar x, FieldScalar y);
FieldScalar mul(FieldScalar x, FieldScalar y);
FieldScalar neg(FieldScalar x);
FieldScalar inv(FieldScalar x); // x != 0

} // namespace dsg
