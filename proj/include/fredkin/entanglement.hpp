#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "fredkin/colored.hpp"
#include "fredkin/counting.hpp"
#include "fredkin/operator.hpp"

namespace fredkin {

/// Schmidt spectrum of the (colored) Dyck state across a cut after the
/// first L sites, grouped by the height m at the cut. For color count k
/// every height-m sector carries k^m degenerate Schmidt vectors of equal
/// probability p = k^{-m} p_m.
struct SchmidtEntry {
    int m = 0;                 // unmatched count at the cut
    double multiplicity = 1;   // k^m, saturating
    double p = 0;              // probability per Schmidt vector
    double log_p = 0;          // natural log of p, exact in log space
    double sector_weight = 0;  // multiplicity * p = p_m
};

struct SchmidtSpectrum {
    int N = 0;
    int L = 0;
    int k = 1;
    std::vector<SchmidtEntry> entries;  // ascending m, empty sectors skipped
};

/// log p_m = log|C_{0,m}(L)| + log|C_{m,0}(N-L)| - log|C_{0,0}(N)|, stable
/// for N up to several thousands.
inline double log_sector_weight(int N, int L, int m) {
    return log_class_size(0, m, L) + log_class_size(m, 0, N - L) -
           log_class_size(0, 0, N);
}

inline SchmidtSpectrum schmidt_colored(int n, int L, int k) {
    int N = 2 * n;
    if (L < 1 || L >= N) throw CutOutOfRange("schmidt: need 1 <= L < N");
    if (k < 1) throw CutOutOfRange("schmidt: need k >= 1");
    SchmidtSpectrum s;
    s.N = N;
    s.L = L;
    s.k = k;
    double logk = std::log(static_cast<double>(k));
    for (int m = L % 2; m <= std::min(L, N - L); m += 2) {
        double lw = log_sector_weight(N, L, m);
        if (!std::isfinite(lw)) continue;
        SchmidtEntry e;
        e.m = m;
        // k^m by repeated multiplication: exact below 2^53, inf on overflow
        e.multiplicity = 1.0;
        for (int i = 0; i < m; ++i) e.multiplicity *= static_cast<double>(k);
        e.log_p = lw - m * logk;
        e.p = std::exp(e.log_p);
        e.sector_weight = std::exp(lw);
        s.entries.push_back(e);
    }
    return s;
}

inline SchmidtSpectrum schmidt_exact(int n, int L) { return schmidt_colored(n, L, 1); }

/// S = -sum over Schmidt vectors of p log p, evaluated per height sector.
/// The guard tolerance admits the lgamma rounding of N ~ 4000 evaluations
/// while still rejecting genuinely unnormalized spectra.
inline double entropy(const SchmidtSpectrum& s) {
    double total = 0.0;
    double S = 0.0;
    for (const SchmidtEntry& e : s.entries) {
        total += e.sector_weight;
        S -= e.sector_weight * e.log_p;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw NotNormalized("entropy: spectrum weights sum to " + std::to_string(total));
    return S;
}

/// Number of nonzero Schmidt vectors, sum of k^m over admissible m;
/// saturates to inf once k^m leaves double range. Entries are kept only
/// when the log weight is finite, so every entry counts even if its weight
/// underflows in linear scale.
inline double schmidt_rank(const SchmidtSpectrum& s) {
    double rank = 0.0;
    for (const SchmidtEntry& e : s.entries) rank += e.multiplicity;
    return rank;
}

/// E[m] at the cut: sum of m * p_m.
inline double height_expectation(int n, int L) {
    SchmidtSpectrum s = schmidt_exact(n, L);
    double h = 0.0;
    for (const SchmidtEntry& e : s.entries) h += e.m * e.sector_weight;
    return h;
}

namespace detail {

/// -Integral of rho log rho for rho(x) = x^2 exp(-x^2)/Z on [0, inf),
/// composite Simpson on [0, 12] (the tail beyond is below 1e-60). The
/// continuum entropy of the scaled height distribution.
inline double half_gaussian_entropy_quadrature() {
    const int intervals = 20000;  // Simpson error well under 1e-12 here
    const double upper = 12.0;
    const double h = upper / intervals;
    const double z = std::sqrt(M_PI) / 4.0;  // normalization of x^2 e^{-x^2}
    auto integrand = [&](double x) {
        if (x <= 0.0) return 0.0;
        double rho = x * x * std::exp(-x * x) / z;
        return rho > 0.0 ? -rho * std::log(rho) : 0.0;
    };
    double sum = integrand(0.0) + integrand(upper);
    for (int i = 1; i < intervals; ++i)
        sum += integrand(i * h) * ((i % 2) ? 4.0 : 2.0);
    return sum * h / 3.0;
}

}  // namespace detail

/// The O(1) constant in S ~ (1/2) log(L(N-L)/N) + c0. The height m at the
/// cut is distributed as p_m ~ rho(m/sigma)/sigma with sigma^2 = 2L(N-L)/N
/// and lattice spacing 2 (m steps by 2), so the discrete entropy is the
/// continuum one minus log(spacing/sigma) = quadrature - (1/2) log 2 after
/// absorbing sigma into the leading term.
inline double entanglement_constant() {
    static const double c0 =
        detail::half_gaussian_entropy_quadrature() - 0.5 * std::log(2.0);
    return c0;
}

inline double asymptotic_entropy(std::int64_t N, std::int64_t L) {
    if (L < 1 || L >= N) throw CutOutOfRange("asymptotic_entropy: need 1 <= L < N");
    double arg = static_cast<double>(L) * static_cast<double>(N - L) / static_cast<double>(N);
    return 0.5 * std::log(arg) + entanglement_constant();
}

inline double colored_entropy_asymptotic(std::int64_t N, std::int64_t L, int k) {
    double arg = 2.0 * static_cast<double>(L) * static_cast<double>(N - L) /
                 static_cast<double>(N);
    return asymptotic_entropy(N, L) +
           (2.0 / std::sqrt(M_PI)) * std::log(static_cast<double>(k)) * std::sqrt(arg);
}

/// Exact colored entropy via S = S_{1/2} + log(k) E[m]; this identity is
/// what makes k > 1 tractable at large N where k^m overflows.
inline double colored_entropy_exact(int n, int L, int k) {
    return entropy(schmidt_colored(n, L, k));
}

/// Squared singular values (descending) of the state reshaped across the
/// cut; the numerical cross-check for the closed-form spectrum.
inline std::vector<double> schmidt_svd(const Vector& state, int N, int L, int k = 1) {
    if (L < 1 || L >= N) throw CutOutOfRange("schmidt_svd: need 1 <= L < N");
    std::int64_t rows = colored_dim(L, k);
    std::int64_t cols = colored_dim(N - L, k);
    if (state.size() != rows * cols)
        throw DimensionMismatch("schmidt_svd: state size does not match N, k");
    Matrix psi(rows, cols);
    for (std::int64_t r = 0; r < rows; ++r)
        for (std::int64_t c = 0; c < cols; ++c)
            psi(r, c) = state[r * cols + c];  // site-major: left block is high digits
    Eigen::JacobiSVD<Matrix> svd(psi);
    std::vector<double> p;
    for (std::int64_t i = 0; i < svd.singularValues().size(); ++i) {
        double sv = svd.singularValues()[i];
        p.push_back(sv * sv);
    }
    std::sort(p.begin(), p.end(), std::greater<double>());
    return p;
}

inline double entropy_from_probabilities(const std::vector<double>& p) {
    double S = 0.0;
    for (double x : p)
        if (x > 1e-300) S -= x * std::log(x);
    return S;
}

/// One row of the sweep CSV.
struct SweepRow {
    std::int64_t N = 0;
    std::int64_t L = 0;
    int k = 1;
    double s_exact = 0;
    double s_asymptotic = 0;
    double rank = 0;
    double height = 0;
};

inline SweepRow entropy_point(std::int64_t N, std::int64_t L, int k) {
    if (N % 2 != 0) throw CutOutOfRange("entropy_point: need even N");
    int n = static_cast<int>(N / 2);
    SchmidtSpectrum s = schmidt_colored(n, static_cast<int>(L), k);
    SweepRow row;
    row.N = N;
    row.L = L;
    row.k = k;
    row.s_exact = entropy(s);
    row.s_asymptotic = (k == 1) ? asymptotic_entropy(N, L)
                                : colored_entropy_asymptotic(N, L, k);
    row.rank = schmidt_rank(s);
    row.height = height_expectation(n, static_cast<int>(L));
    return row;
}

namespace detail {
inline std::string format_sig12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}
}  // namespace detail

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "N,L,k,S_exact,S_asymptotic,rank,height_expectation\n";
    for (const SweepRow& r : rows)
        os << r.N << ',' << r.L << ',' << r.k << ','
           << detail::format_sig12(r.s_exact) << ','
           << detail::format_sig12(r.s_asymptotic) << ','
           << detail::format_sig12(r.rank) << ','
           << detail::format_sig12(r.height) << '\n';
}

}  // namespace fredkin
