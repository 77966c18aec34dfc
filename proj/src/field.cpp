#include "dsg/field.hpp"

#include <stdexcept>
#include <string>

namespace dsg {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

FieldScalar scalar(std::uint64_t value, std::uint64_t q) {
    if (!is_prime(q))
        throw std::invalid_argument("field modulus must be prime (got " + std::to_string(q) + ")");
    if (q > 0x7fffffffULL)
        throw std::invalid_argument("field modulus too large (limit 2^31-1)");
    return FieldScalar{static_cast<std::uint32_t>(value % q), static_cast<std::uint32_t>(q)};
}

namespace {

void require_same_modulus(FieldScalar x, FieldScalar y) {
    if (x.modulus != y.modulus)
        throw std::invalid_argument("field scalars have different moduli (" +
                                    std::to_string(x.modulus) + " vs " +
                                    std::to_string(y.modulus) + ")");
}

} // namespace

FieldScalar add(FieldScalar x, FieldScalar y) {
    require_same_modulus(x, y);
    std::uint64_t v = std::uint64_t{x.value} + y.value;
    if (v >= x.modulus) v -= x.modulus;
    return FieldScalar{static_cast<std::uint32_t>(v), x.modulus};
}

FieldScalar mul(FieldScalar x, FieldScalar y) {
    require_same_modulus(x, y);
    std::uint64_t v = std::uint64_t{x.value} * y.value % x.modulus;
    return FieldScalar{static_cast<std::uint32_t>(v), x.modulus};
}

FieldScalar neg(FieldScalar x) {
    return FieldScalar{x.value == 0 ? 0 : x.modulus - x.value, x.modulus};
}

FieldScalar inv(FieldScalar x) {
    if (x.value == 0) throw std::domain_error("0 has no multiplicative inverse");
    // extended Euclid on (value, modulus); modulus prime so gcd is 1
    std::int64_t a = x.value, m = x.modulus;
    std::int64_t t = 0, new_t = 1, r = m, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t; new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r; new_r = tmp;
    }
    if (t < 0) t += m;
    return FieldScalar{static_cast<std::uint32_t>(t), x.modulus};
}

} // namespace dsg
