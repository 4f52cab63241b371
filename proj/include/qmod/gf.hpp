#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qmod {

// Arithmetic in the prime field GF(p). Element values are always kept in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p = 3) : p_(p) {
        if (!is_prime(p))
            throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not prime");
    }

    std::uint32_t modulus() const { return p_; }

    std::uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1 % p_;
        std::uint32_t base = a % p_;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw std::domain_error("PrimeField: zero has no inverse");
        return pow(a, p_ - 2);
    }

    bool operator==(const PrimeField& other) const = default;

    static bool is_prime(std::uint32_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

}  // namespace qmod
