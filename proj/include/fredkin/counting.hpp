#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "fredkin/word.hpp"

namespace fredkin {

/// Exact binomial coefficient. Overflow-checked; valid whenever the result
/// fits in uint64 (all n <= 66, and many larger cases).
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial: result exceeds uint64");
    }
    return static_cast<std::uint64_t>(r);
}

/// |C_{a,b}(N)|:
///   1                                          if N = a + b,
///   binom(N,(N+a+b)/2) - binom(N,(N+a+b)/2+1)  if N - a - b even and positive,
///   0                                          otherwise.
inline std::uint64_t class_size(const ClassId& c, int N) {
    if (c.a < 0 || c.b < 0) return 0;
    int s = c.a + c.b;
    if (N == s) return 1;
    if (s > N || (N - s) % 2 != 0) return 0;
    int h = (N + s) / 2;
    return binomial(N, h) - binomial(N, h + 1);
}

inline std::uint64_t catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: negative n");
    if (n == 0) return 1;
    return class_size(ClassId{0, 0}, 2 * n);
}

/// log |C_{a,b}(N)| for sizes beyond integer range; -inf for empty classes.
/// Uses log-binomials: log(binom(N,h) - binom(N,h+1)) =
/// log binom(N,h) + log1p(-(N-h)/(h+1)).
inline double log_class_size(int a, int b, int N) {
    if (a < 0 || b < 0) return -std::numeric_limits<double>::infinity();
    int s = a + b;
    if (N == s) return 0.0;
    if (s > N || (N - s) % 2 != 0) return -std::numeric_limits<double>::infinity();
    int h = (N + s) / 2;
    double lb = std::lgamma(N + 1.0) - std::lgamma(h + 1.0) - std::lgamma(N - h + 1.0);
    return lb + std::log1p(-static_cast<double>(N - h) / (h + 1.0));
}

}  // namespace fredkin
