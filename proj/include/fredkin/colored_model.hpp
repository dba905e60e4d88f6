#pragma once

#include <cstdint>
#include <vector>

#include "fredkin/colored.hpp"
#include "fredkin/model.hpp"
#include "fredkin/operator.hpp"

namespace fredkin {

/// H_F: for every window, rank-1 projectors onto the colored Fredkin-move
/// difference vectors (one per unordered move pair, 1/2-normalized so k=1
/// equals the uncolored Projector form exactly).
inline LinearOperator build_colored_bulk(int N, int k, bool periodic = false) {
    if (N < (periodic ? 3 : 2)) throw SiteOutOfRange("build_colored_bulk: N too small");
    std::uint64_t dim = colored_dim(N, k);
    require_basis_size(dim, "build_colored_bulk");
    std::vector<Triplet> t;
    int n_windows = N >= 3 ? (periodic ? N : N - 2) : 0;
    for (std::uint64_t x = 0; x < dim; ++x) {
        ColoredWord w(N, k, x);
        for (int j = 1; j <= n_windows; ++j) {
            int s[3];
            detail::window_sites(N, j, periodic, s);
            int d1 = w.digit(s[0]), d2 = w.digit(s[1]), d3 = w.digit(s[2]);
            bool dn1 = d1 >= k, dn2 = d2 >= k, dn3 = d3 >= k;
            ColoredWord y = w;
            // Trigger once per unordered pair, from the left-hand pattern.
            if (!dn1 && !dn2 && dn3)  // (up a, up b, down c) -> (up b, down c, up a)
                y = y.with_digit(s[0], d2).with_digit(s[1], d3).with_digit(s[2], d1);
            else if (!dn1 && dn2 && dn3)  // (up b, down c, down a) -> (down a, up b, down c)
                y = y.with_digit(s[0], d3).with_digit(s[1], d1).with_digit(s[2], d2);
            else
                continue;
            int xi = static_cast<int>(x), yi = static_cast<int>(y.code);
            t.emplace_back(xi, xi, 0.5);
            t.emplace_back(yi, yi, 0.5);
            t.emplace_back(xi, yi, -0.5);
            t.emplace_back(yi, xi, -0.5);
        }
    }
    return LinearOperator::from_triplets(static_cast<std::int64_t>(dim), std::move(t));
}

/// H_X: sum over bonds of [1 - (1/k)(sum_c |up^c down^c>)(sum_c <up^c down^c|)]
/// restricted to the (up, down) direction block P+_j P-_{j+1}.
inline LinearOperator build_colored_exchange(int N, int k) {
    if (N < 2) throw SiteOutOfRange("build_colored_exchange: N < 2");
    std::uint64_t dim = colored_dim(N, k);
    require_basis_size(dim, "build_colored_exchange");
    std::vector<Triplet> t;
    for (std::uint64_t x = 0; x < dim; ++x) {
        ColoredWord w(N, k, x);
        for (int j = 1; j < N; ++j) {
            if (!w.up(j) || !w.down(j + 1)) continue;
            int xi = static_cast<int>(x);
            t.emplace_back(xi, xi, 1.0);
            if (w.color(j) != w.color(j + 1)) continue;
            for (int c = 0; c < k; ++c) {
                ColoredWord y = w.with_digit(j, c).with_digit(j + 1, k + c);
                t.emplace_back(xi, static_cast<int>(y.code), -1.0 / k);
            }
        }
    }
    return LinearOperator::from_triplets(static_cast<std::int64_t>(dim), std::move(t));
}

/// H_d = P-_1 + P+_N = sum_c |down^c_1><down^c_1| + |up^c_N><up^c_N|.
inline LinearOperator build_colored_boundary(int N, int k) {
    std::uint64_t dim = colored_dim(N, k);
    require_basis_size(dim, "build_colored_boundary");
    std::vector<Triplet> t;
    for (std::uint64_t x = 0; x < dim; ++x) {
        ColoredWord w(N, k, x);
        double e = (w.down(1) ? 1.0 : 0.0) + (w.up(N) ? 1.0 : 0.0);
        if (e != 0.0) t.emplace_back(static_cast<int>(x), static_cast<int>(x), e);
    }
    return LinearOperator::from_triplets(static_cast<std::int64_t>(dim), std::move(t));
}

inline LinearOperator build_colored_hamiltonian(int N, int k) {
    if (N < 2 || k < 1)
        throw SiteOutOfRange("build_colored_hamiltonian: need N >= 2, k >= 1");
    return build_colored_bulk(N, k) + build_colored_exchange(N, k) +
           build_colored_boundary(N, k);
}

/// Global color relabeling: site colors mapped through perm (size k).
inline LinearOperator color_permutation_operator(int N, int k,
                                                 const std::vector<int>& perm) {
    std::uint64_t dim = colored_dim(N, k);
    require_basis_size(dim, "color_permutation_operator");
    std::vector<Triplet> t;
    for (std::uint64_t x = 0; x < dim; ++x) {
        ColoredWord w(N, k, x);
        ColoredWord y = w;
        for (int j = 1; j <= N; ++j) {
            int c = perm[static_cast<std::size_t>(w.color(j))];
            y = y.with_digit(j, (w.down(j) ? k : 0) + c);
        }
        t.emplace_back(static_cast<int>(y.code), static_cast<int>(x), 1.0);
    }
    return LinearOperator::from_triplets(static_cast<std::int64_t>(dim), std::move(t), false);
}

/// Down-step counts per colored basis state (direction weight labels).
inline std::vector<int> colored_down_count_labels(int N, int k) {
    std::uint64_t dim = colored_dim(N, k);
    std::vector<int> labels(static_cast<std::size_t>(dim));
    for (std::uint64_t x = 0; x < dim; ++x) {
        ColoredWord w(N, k, x);
        int d = 0;
        for (int j = 1; j <= N; ++j) d += w.down(j) ? 1 : 0;
        labels[static_cast<std::size_t>(x)] = d;
    }
    return labels;
}

}  // namespace fredkin
