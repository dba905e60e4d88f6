#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fredkin/counting.hpp"
#include "fredkin/word.hpp"

namespace fredkin {

namespace detail {

/// Three-site window starting at site j (1-based); wraps cyclically iff
/// periodic. Sites of the window in order.
inline void window_sites(int N, int j, bool periodic, int out[3]) {
    if (periodic) {
        out[0] = j;
        out[1] = j % N + 1;
        out[2] = (j + 1) % N + 1;
    } else {
        out[0] = j;
        out[1] = j + 1;
        out[2] = j + 2;
    }
}

inline unsigned window_pattern(std::uint64_t bits, int N, const int s[3]) {
    unsigned p = 0;
    for (int t = 0; t < 3; ++t)
        p = (p << 1) | static_cast<unsigned>((bits >> (N - s[t])) & 1u);
    return p;
}

inline std::uint64_t with_window_pattern(std::uint64_t bits, int N, const int s[3],
                                         unsigned p) {
    for (int t = 0; t < 3; ++t) {
        std::uint64_t mask = std::uint64_t{1} << (N - s[t]);
        if ((p >> (2 - t)) & 1u)
            bits |= mask;
        else
            bits &= ~mask;
    }
    return bits;
}

/// The Fredkin moves on a window, as bit patterns with '(' = 0:
///   "(()" = 001 <-> 010 = "()("  and  "())" = 011 <-> 101 = ")()".
/// Returns the partner pattern, or p itself if no move applies.
inline unsigned fredkin_move(unsigned p) {
    switch (p) {
        case 0b001: return 0b010;
        case 0b010: return 0b001;
        case 0b011: return 0b101;
        case 0b101: return 0b011;
        default: return p;
    }
}

}  // namespace detail

/// All words one Fredkin move away, deduplicated, ascending encoding order.
inline std::vector<SpinWord> fredkin_neighbors(const SpinWord& w, bool periodic = false) {
    std::vector<SpinWord> out;
    int N = w.n_sites;
    int n_windows = periodic ? N : N - 2;
    if (N < 3) return out;
    for (int j = 1; j <= n_windows; ++j) {
        int s[3];
        detail::window_sites(N, j, periodic, s);
        unsigned p = detail::window_pattern(w.bits, N, s);
        unsigned q = detail::fredkin_move(p);
        if (q != p) out.emplace_back(N, detail::with_window_pattern(w.bits, N, s, q));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// All members of C_{a,b}(N) in ascending encoding order, by filtering the
/// full basis; this is the trusted oracle for the closed-form counts.
inline std::vector<SpinWord> enumerate_class(const ClassId& c, int N) {
    require_basis_size(std::uint64_t{1} << N, "enumerate_class");
    std::vector<SpinWord> out;
    if (!class_nonempty(c, N)) return out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << N); ++x) {
        SpinWord w(N, x);
        if (classify(w) == c) out.push_back(w);
    }
    return out;
}

/// Dyck words of length 2n, ascending.
inline std::vector<SpinWord> dyck_words(int n) {
    return enumerate_class(ClassId{0, 0}, 2 * n);
}

}  // namespace fredkin
