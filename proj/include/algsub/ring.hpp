#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace algsub {

/// Arbitrary-precision integer used for every coefficient in the library.
using Int = boost::multiprecision::cpp_int;

/// Coefficient domain: the ring of integers (characteristic 0) or the prime
/// field F_p for a prime p < 2^16. Values are immutable after construction.
class RingSpec {
  public:
    static RingSpec integers() noexcept { return RingSpec(0); }

    static RingSpec prime_field(std::uint32_t p) {
        if (p < 2 || p >= (1u << 16))
            throw std::invalid_argument("prime_field: modulus must satisfy 2 <= p < 2^16");
        for (std::uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw std::invalid_argument("prime_field: " + std::to_string(p) + " is not prime");
        return RingSpec(p);
    }

    /// p = 0 selects the integers, anything else the prime field F_p.
    static RingSpec from_modulus(std::uint32_t p) { return p == 0 ? integers() : prime_field(p); }

    bool is_field() const noexcept { return p_ != 0; }
    std::uint32_t characteristic() const noexcept { return p_; }

    /// Canonical representative: 0..p-1 for fields, identity over Z.
    Int canonical(Int v) const {
        if (p_ == 0) return v;
        v %= p_;
        if (v < 0) v += p_;
        return v;
    }

    Int add(const Int& a, const Int& b) const { return canonical(a + b); }
    Int sub(const Int& a, const Int& b) const { return canonical(a - b); }
    Int mul(const Int& a, const Int& b) const { return canonical(a * b); }
    Int neg(const Int& a) const { return canonical(-a); }

    /// Multiplicative inverse in F_p; throws over the integers and at zero.
    Int inv(const Int& a) const {
        if (p_ == 0) throw std::domain_error("inv: the integers are not a field");
        Int v = canonical(a);
        if (v == 0) throw std::domain_error("inv: zero has no inverse");
        std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = v.convert_to<std::int64_t>();
        std::int64_t t0 = 0, t1 = 1;
        while (r1 != 0) {
            const std::int64_t q = r0 / r1;
            r0 -= q * r1;
            std::swap(r0, r1);
            t0 -= q * t1;
            std::swap(t0, t1);
        }
        t0 %= static_cast<std::int64_t>(p_);
        if (t0 < 0) t0 += p_;
        return Int(t0);
    }

    bool operator==(const RingSpec& other) const noexcept = default;

    std::string name() const { return p_ == 0 ? std::string("Z") : "F_" + std::to_string(p_); }

  private:
    explicit RingSpec(std::uint32_t p) noexcept : p_(p) {}
    std::uint32_t p_;
};

inline void require_same_ring(const RingSpec& a, const RingSpec& b, const char* where) {
    if (!(a == b))
        throw std::invalid_argument(std::string(where) + ": ring mismatch (" + a.name() + " vs " + b.name() + ")");
}

}  // namespace algsub
