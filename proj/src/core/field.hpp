#pragma once
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "core/errors.hpp"

namespace ckinf {

// Element of F_{p^m}, encoded as the integer sum c_i * p^i for the
// polynomial-basis representative sum c_i * x^i with 0 <= c_i < p.
using felem = std::uint32_t;

class Field {
public:
    static constexpr std::uint64_t max_size = 1ull << 20;
    static constexpr std::uint64_t table_limit = 1ull << 16;

    // Default modulus: the irreducible monic degree-m polynomial with the
    // smallest integer encoding.
    static Field make(std::uint32_t p, std::uint32_t m);
    static Field make(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint64_t q = 0;
    std::vector<std::uint32_t> modulus;  // c_0..c_m, monic, irreducible over F_p
    felem primitive_element = 0;         // smallest encoding with multiplicative order q-1

    felem add(felem a, felem b) const;
    felem neg(felem a) const;
    felem sub(felem a, felem b) const;
    felem mul(felem a, felem b) const;
    felem inv(felem a) const;                  // a != 0
    felem pow(felem a, std::int64_t e) const;  // a^0 = 1 for every a, including 0
    bool is_square(felem a) const;
    // Canonical square root: the smaller encoding of the root pair {y, -y};
    // nullopt when a is a non-square (odd q only).
    std::optional<felem> sqrt(felem a) const;
    std::uint64_t dlog(felem a) const;  // a != 0; exponent w.r.t. primitive_element
    std::uint64_t element_order(felem a) const;  // a != 0
    // All p^r elements fixed by the r-th Frobenius power, ascending encodings. r | m.
    std::vector<felem> subfield_elements(std::uint32_t r) const;

    bool has_tables() const { return !log_.empty(); }
    bool same_as(const Field& o) const { return p == o.p && m == o.m && modulus == o.modulus; }

    std::vector<std::uint32_t> to_poly(felem a) const;
    felem from_poly(const std::vector<std::uint32_t>& c) const;

private:
    Field() = default;
    void init();
    felem mul_generic(felem a, felem b) const;
    felem pow_generic(felem a, std::uint64_t e) const;

    std::vector<felem> exp_;           // exp_[i] = primitive_element^i, built when q <= table_limit
    std::vector<std::uint32_t> log_;   // inverse of exp_ on nonzero encodings
    std::vector<std::uint64_t> qm1_primes_;  // distinct prime factors of q-1
};

using FieldPtr = std::shared_ptr<const Field>;
FieldPtr make_field(std::uint32_t p, std::uint32_t m);
FieldPtr make_field(std::uint32_t p, std::uint32_t m, const std::vector<std::uint32_t>& modulus);

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

} // namespace ckinf
