#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace efl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

// Prime field F_p, runtime modulus. Elements are canonical residues in [0, p).
// Field objects act as contexts: all arithmetic goes through the context so
// elements stay plain integers.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("PrimeField: modulus too large");
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }

    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }
    Elem from_bigint(const Int& v) const {
        Int r = v % Int(p_);
        if (r < 0) r += Int(p_);
        return r.convert_to<Elem>();
    }

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one(), base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // Fermat inverse; p is prime.
    Elem inv(Elem a) const {
        if (a % p_ == 0) throw std::domain_error("PrimeField: division by zero");
        return pow(a, p_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a % p_ == 0; }
    bool eq(Elem a, Elem b) const { return a % p_ == b % p_; }

    std::string str(Elem a) const { return std::to_string(a % p_); }
    std::string tag() const { return "F" + std::to_string(p_); }

private:
    std::uint64_t p_;
};

// Exact rational field backed by arbitrary-precision integers. No rounding anywhere.
class RationalField {
public:
    using Elem = Rat;

    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(long long v) const { return Rat(v); }
    Elem from_bigint(const Int& v) const { return Rat(v); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("RationalField: division by zero");
        return Rat(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string str(const Elem& a) const {
        if (denominator(a) == 1) return numerator(a).str();
        return numerator(a).str() + "/" + denominator(a).str();
    }
    std::string tag() const { return "Q"; }
};

// Exact integer ring; used where coefficients are known integral (P2 expansions,
// orientation counts). No inverse.
class IntegerRing {
public:
    using Elem = Int;

    Elem zero() const { return Int(0); }
    Elem one() const { return Int(1); }
    Elem from_int(long long v) const { return Int(v); }
    Elem from_bigint(const Int& v) const { return v; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string str(const Elem& a) const { return a.str(); }
    std::string tag() const { return "Z"; }
};

// Residue of an exact integer in [0, p); used when comparing integer-engine
// results against F_p ones.
inline std::uint64_t mod_residue(const Int& v, std::uint64_t p) {
    Int r = v % Int(p);
    if (r < 0) r += Int(p);
    return r.convert_to<std::uint64_t>();
}

}  // namespace efl
