#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bhk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error hierarchy. The CLI maps PreconditionError/ValidationError/CapExceeded to
// exit code 2 and verification mismatches to exit code 1.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// The input does not describe a valid object (e.g. not an invertible polynomial).
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// A configured work or memory cap would be exceeded.
class CapExceeded : public Error {
   public:
    using Error::Error;
};

/// A floating-point quantity could not be rounded to an exact value within tolerance.
class ResidualError : public Error {
   public:
    using Error::Error;
};

namespace arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Least nonnegative residue of a modulo m (m > 0).
inline i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % d == 0) return n == d;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Distinct prime factors in increasing order.
inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline u64 euler_phi(u64 n) {
    u64 result = n;
    for (u64 l : prime_factors(n)) result = result / l * (l - 1);
    return result;
}

inline int moebius(u64 n) {
    int sign = 1;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline u64 invmod(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, r = mod(a, m);
    while (r) {
        i64 quot = g / r;
        std::tie(g, r) = std::pair{r, g - quot * r};
        std::tie(x, x1) = std::pair{x1, x - quot * x1};
    }
    if (g != 1) throw PreconditionError("value " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
    return static_cast<u64>(mod(x, m));
}

/// Integer power with overflow check against a ceiling.
inline u64 checked_pow(u64 base, unsigned exp, u64 ceiling) {
    u64 result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > ceiling / base) return ceiling + 1;
        result *= base;
    }
    return result;
}

/// Legendre symbol (a / p) for odd prime p.
inline int legendre(i64 a, u64 p) {
    u64 r = static_cast<u64>(mod(a, static_cast<i64>(p)));
    if (r == 0) return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace arith

inline BigInt to_bigint(const Rational& r) {
    if (boost::multiprecision::denominator(r) != 1) throw ResidualError("rational value is not an integer");
    return boost::multiprecision::numerator(r);
}

inline std::string to_string(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

/// Parse "a/b", "a" or "-a/b" into an exact rational.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw PreconditionError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw PreconditionError("cannot parse rational '" + text + "'");
    }
}

}  // namespace bhk
