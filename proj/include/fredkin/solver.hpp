#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fredkin/model.hpp"
#include "fredkin/operator.hpp"

namespace fredkin {

inline constexpr std::int64_t dense_cap = 4096;  // 2^12 states
inline constexpr double kernel_rtol = 1e-9;
inline constexpr double cluster_tol = 1e-9;

struct SpectralResult {
    std::vector<double> eigenvalues;          // ascending
    std::vector<Vector> eigenvectors;         // optional, orthonormal
    std::vector<double> residual_norms;       // per returned pair
};

/// Power-iteration estimate of ||H||_2 with a fixed seed; scale reference
/// for kernel tolerances.
inline double norm_estimate(const LinearOperator& op, int iters = 100,
                            unsigned seed = 12345) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(op.dim());
    for (std::int64_t i = 0; i < op.dim(); ++i) v[i] = gauss(rng);
    v.normalize();
    double lambda = 0.0;
    for (int it = 0; it < iters; ++it) {
        Vector w = op.apply(v);
        lambda = w.norm();
        if (lambda == 0.0) return 0.0;
        v = w / lambda;
    }
    return lambda;
}

inline SpectralResult dense_spectrum(const LinearOperator& op, bool vectors = true) {
    if (op.dim() > dense_cap)
        throw CapExceeded("dense_spectrum: dim " + std::to_string(op.dim()) +
                          " exceeds dense cap " + std::to_string(dense_cap));
    Matrix h = op.to_dense();
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, vectors ? Eigen::ComputeEigenvectors
                                                        : Eigen::EigenvaluesOnly);
    SpectralResult r;
    r.eigenvalues.assign(es.eigenvalues().data(),
                         es.eigenvalues().data() + es.eigenvalues().size());
    if (vectors) {
        for (std::int64_t i = 0; i < op.dim(); ++i) {
            Vector v = es.eigenvectors().col(i);
            r.eigenvectors.push_back(v);
            r.residual_norms.push_back((op.apply(v) - r.eigenvalues[static_cast<std::size_t>(i)] * v).norm());
        }
    } else {
        r.residual_norms.assign(r.eigenvalues.size(), 0.0);
    }
    return r;
}

/// Lanczos with full reorthogonalization and explicit deflation. Returns the
/// `count` smallest eigenpairs of op restricted to the orthogonal complement
/// of `deflate`. Deterministic for a fixed seed.
inline SpectralResult lanczos_lowest(const LinearOperator& op, int count, double tol = 1e-10,
                                     int max_iter = 0, unsigned seed = 12345,
                                     const std::vector<Vector>& deflate = {}) {
    std::int64_t n = op.dim();
    if (max_iter <= 0) max_iter = std::min<std::int64_t>(n, std::max(400, 40 * count));
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    auto project_out = [&](Vector& v) {
        for (const Vector& d : deflate) v -= d.dot(v) * d;
    };

    std::vector<Vector> basis;
    std::vector<double> alpha, beta;
    Vector v(n);
    for (std::int64_t i = 0; i < n; ++i) v[i] = gauss(rng);
    project_out(v);
    if (v.norm() < 1e-14)
        throw ConvergenceFailure("lanczos_lowest: start vector vanished after deflation");
    v.normalize();
    basis.push_back(v);

    SpectralResult best;
    for (int it = 0; it < max_iter; ++it) {
        Vector w = op.apply(basis.back());
        project_out(w);
        double a = basis.back().dot(w);
        alpha.push_back(a);
        w -= a * basis.back();
        if (basis.size() >= 2) w -= beta.back() * basis[basis.size() - 2];
        for (const Vector& q : basis) w -= q.dot(w) * q;  // full reorthogonalization
        for (const Vector& q : basis) w -= q.dot(w) * q;
        double b = w.norm();

        int m = static_cast<int>(alpha.size());
        bool check_now = b < 1e-13 || m >= count + 2;
        if (check_now && m >= count) {
            Matrix t = Matrix::Zero(m, m);
            for (int i = 0; i < m; ++i) {
                t(i, i) = alpha[static_cast<std::size_t>(i)];
                if (i + 1 < m)
                    t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
            }
            Eigen::SelfAdjointEigenSolver<Matrix> es(t);
            bool converged = true;
            SpectralResult r;
            for (int i = 0; i < count && i < m; ++i) {
                double theta = es.eigenvalues()[i];
                Vector y = es.eigenvectors().col(i);
                // Residual bound for a Ritz pair: |b * y_m|.
                double res = b * std::abs(y[m - 1]);
                if (res > tol) converged = false;
                r.eigenvalues.push_back(theta);
                r.residual_norms.push_back(res);
            }
            if (converged || b < 1e-13 || it == max_iter - 1) {
                for (int i = 0; i < count && i < m; ++i) {
                    Vector y = es.eigenvectors().col(i);
                    Vector x = Vector::Zero(n);
                    for (int q = 0; q < m; ++q) x += y[q] * basis[static_cast<std::size_t>(q)];
                    x.normalize();
                    r.residual_norms[static_cast<std::size_t>(i)] =
                        (op.apply(x) - r.eigenvalues[static_cast<std::size_t>(i)] * x).norm();
                    r.eigenvectors.push_back(std::move(x));
                }
                bool ok = true;
                for (std::size_t i = 0; i < r.residual_norms.size(); ++i)
                    if (r.residual_norms[i] > std::max(tol, 1e-9)) ok = false;
                if (ok) return r;
                if (b < 1e-13) {
                    // Krylov space exhausted: restart with a fresh vector.
                    Vector f(n);
                    for (std::int64_t i2 = 0; i2 < n; ++i2) f[i2] = gauss(rng);
                    project_out(f);
                    for (const Vector& q : basis) f -= q.dot(f) * q;
                    if (f.norm() < 1e-12) return r;  // complement exhausted
                    w = f;
                    b = w.norm();
                }
                best = std::move(r);
            }
        }
        if (it < max_iter - 1) {
            if (b < 1e-13) {
                Vector f(n);
                for (std::int64_t i2 = 0; i2 < n; ++i2) f[i2] = gauss(rng);
                project_out(f);
                for (const Vector& q : basis) f -= q.dot(f) * q;
                double nb = f.norm();
                if (nb < 1e-12) break;  // space exhausted
                w = f;
                b = nb;
            }
            beta.push_back(b);
            basis.push_back(w / b);
        }
    }
    if (!best.eigenvalues.empty()) return best;
    throw ConvergenceFailure("lanczos_lowest: no convergence after max iterations");
}

/// Smallest `count` eigenpairs; dense below the cap, Lanczos above.
inline SpectralResult lowest_eigenpairs(const LinearOperator& op, int count,
                                        double tol = 1e-10, unsigned seed = 12345) {
    if (op.dim() <= dense_cap) {
        SpectralResult full = dense_spectrum(op);
        SpectralResult r;
        for (int i = 0; i < count && i < static_cast<int>(full.eigenvalues.size()); ++i) {
            r.eigenvalues.push_back(full.eigenvalues[static_cast<std::size_t>(i)]);
            r.eigenvectors.push_back(full.eigenvectors[static_cast<std::size_t>(i)]);
            r.residual_norms.push_back(full.residual_norms[static_cast<std::size_t>(i)]);
        }
        return r;
    }
    return lanczos_lowest(op, count, tol, 0, seed);
}

/// Orthonormal basis of the near-kernel {v : Hv ~ 0 at tol relative to
/// ||H||}; dimension equals the ground-state degeneracy for PSD operators.
inline std::vector<Vector> kernel_basis(const LinearOperator& op, double rtol = kernel_rtol) {
    double scale = std::max(norm_estimate(op), 1e-30);
    double cut = rtol * scale;
    std::vector<Vector> out;
    if (op.dim() <= dense_cap) {
        SpectralResult r = dense_spectrum(op);
        for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
            if (std::abs(r.eigenvalues[i]) <= cut) out.push_back(r.eigenvectors[i]);
        return out;
    }
    // Iterative: harvest zero modes with deflation until the first clearly
    // positive eigenvalue appears.
    for (;;) {
        SpectralResult r = lanczos_lowest(op, 1, std::min(cut * 0.1, 1e-10), 0,
                                          12345 + static_cast<unsigned>(out.size()), out);
        if (r.eigenvalues.empty() || std::abs(r.eigenvalues[0]) > cut) break;
        out.push_back(r.eigenvectors[0]);
        if (static_cast<std::int64_t>(out.size()) >= op.dim()) break;
    }
    return out;
}

inline std::int64_t kernel_dimension(const LinearOperator& op, double rtol = kernel_rtol) {
    if (op.dim() <= dense_cap) {
        double cut = rtol * std::max(norm_estimate(op), 1e-30);
        std::int64_t count = 0;
        for (double e : dense_spectrum(op, false).eigenvalues)
            if (std::abs(e) <= cut) ++count;
        return count;
    }
    return static_cast<std::int64_t>(kernel_basis(op, rtol).size());
}

/// All eigenvalues of an operator that is block-diagonal over the given
/// integer labels (an exact conserved quantity); each block is solved dense.
inline std::vector<double> sector_eigenvalues(const LinearOperator& op,
                                              const std::vector<int>& labels) {
    if (static_cast<std::int64_t>(labels.size()) != op.dim())
        throw DimensionMismatch("sector_eigenvalues: label count != dim");
    int max_label = *std::max_element(labels.begin(), labels.end());
    std::vector<std::vector<int>> sectors(static_cast<std::size_t>(max_label) + 1);
    for (std::size_t i = 0; i < labels.size(); ++i)
        sectors[static_cast<std::size_t>(labels[i])].push_back(static_cast<int>(i));
    const SparseMatrix& m = op.sparse();
    std::vector<double> eigs;
    for (const auto& sec : sectors) {
        if (sec.empty()) continue;
        if (static_cast<std::int64_t>(sec.size()) > dense_cap)
            throw CapExceeded("sector_eigenvalues: sector size exceeds dense cap");
        std::vector<int> pos(static_cast<std::size_t>(op.dim()), -1);
        for (std::size_t i = 0; i < sec.size(); ++i)
            pos[static_cast<std::size_t>(sec[i])] = static_cast<int>(i);
        Matrix block = Matrix::Zero(static_cast<std::int64_t>(sec.size()),
                                    static_cast<std::int64_t>(sec.size()));
        for (int row : sec)
            for (SparseMatrix::InnerIterator it(m, row); it; ++it) {
                int pc = pos[static_cast<std::size_t>(it.col())];
                if (pc < 0)
                    throw MismatchDetected("sector_eigenvalues: labels are not conserved");
                block(pos[static_cast<std::size_t>(row)], pc) = it.value();
            }
        Eigen::SelfAdjointEigenSolver<Matrix> es(block, Eigen::EigenvaluesOnly);
        eigs.insert(eigs.end(), es.eigenvalues().data(),
                    es.eigenvalues().data() + es.eigenvalues().size());
    }
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

/// Gap above the ground cluster: eigenvalues within cluster_tol of the
/// smallest are grouped as the ground manifold.
inline double gap_from_eigenvalues(const std::vector<double>& eigs) {
    if (eigs.size() < 2) throw ConvergenceFailure("gap: need at least two eigenvalues");
    double e0 = eigs.front();
    for (double e : eigs)
        if (e > e0 + cluster_tol) return e - e0;
    throw ConvergenceFailure("gap: spectrum is a single cluster");
}

/// lambda_1 - lambda_0 of the full Hamiltonian; uses the down-count sector
/// decomposition above the dense cap.
inline double spectral_gap(int N, const BoundarySpec& b, ModelForm form) {
    LinearOperator h = build_hamiltonian(N, b, form);
    if (h.dim() <= dense_cap)
        return gap_from_eigenvalues(dense_spectrum(h, false).eigenvalues);
    return gap_from_eigenvalues(sector_eigenvalues(h, down_count_labels(N)));
}

}  // namespace fredkin
