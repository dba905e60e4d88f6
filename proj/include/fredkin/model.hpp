#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "fredkin/enumeration.hpp"
#include "fredkin/operator.hpp"
#include "fredkin/word.hpp"

namespace fredkin {

enum class ModelForm { Projector, Pauli, FredkinGate };

inline const char* to_string(ModelForm f) {
    switch (f) {
        case ModelForm::Projector: return "projector";
        case ModelForm::Pauli: return "pauli";
        case ModelForm::FredkinGate: return "fredkin";
    }
    return "?";
}

struct BoundarySpec {
    enum class Kind { Open, Periodic };
    Kind kind = Kind::Open;
    double alpha = 1.0;
    double beta = 1.0;

    static BoundarySpec open(double a = 1.0, double b = 1.0) {
        return BoundarySpec{Kind::Open, a, b};
    }
    static BoundarySpec periodic() { return BoundarySpec{Kind::Periodic, 0.0, 0.0}; }
    bool is_periodic() const { return kind == Kind::Periodic; }
};

namespace detail {

using Window = std::array<std::array<double, 8>, 8>;

/// Projector window: |up><up| (x) |S><S| + |S><S| (x) |down><down| with the
/// unit singlet |S> = (|up down> - |down up>)/sqrt(2). Patterns index the
/// window bits with slot 1 most significant, '(' = 0.
inline Window projector_window() {
    Window w{};
    auto add_projector = [&](unsigned x, unsigned y) {
        w[x][x] += 0.5;
        w[y][y] += 0.5;
        w[x][y] -= 0.5;
        w[y][x] -= 0.5;
    };
    add_projector(0b001, 0b010);  // "(()" vs "()("
    add_projector(0b011, 0b101);  // "())" vs ")()"
    return w;
}

/// Pauli window, taken literally:
/// (1 + sigma^z_1)(1 - sigma_2.sigma_3) + (1 - sigma_1.sigma_2)(1 - sigma^z_3).
inline Window pauli_window() {
    // sigma.sigma on two qubits as a real 4x4 (row/col = 2-bit pattern, 0=up).
    const double dot[4][4] = {{1, 0, 0, 0}, {0, -1, 2, 0}, {0, 2, -1, 0}, {0, 0, 0, 1}};
    Window w{};
    for (unsigned x = 0; x < 8; ++x)
        for (unsigned y = 0; y < 8; ++y) {
            double t1 = 0.0, t2 = 0.0;
            // (1 + sigma^z_1) is diagonal: 2 on up, 0 on down.
            if ((x >> 2) == (y >> 2)) {
                double one_minus_dot = (x & 3u) == (y & 3u) ? 1.0 : 0.0;
                one_minus_dot -= dot[x & 3u][y & 3u];
                t1 = ((x >> 2) ? 0.0 : 2.0) * one_minus_dot;
            }
            if ((x & 1u) == (y & 1u)) {
                double one_minus_dot = (x >> 1) == (y >> 1) ? 1.0 : 0.0;
                one_minus_dot -= dot[x >> 1][y >> 1];
                t2 = one_minus_dot * ((x & 1u) ? 2.0 : 0.0);
            }
            w[x][y] = t1 + t2;
        }
    return w;
}

/// Fredkin-gate window, taken literally:
/// (1 - F_{1,2,3}) + (1 - sigma^x_3 F_{3,2,1} sigma^x_3), where F_{i,j,k}
/// swaps sites j,k when site i is up.
inline Window fredkin_gate_window() {
    auto swap_bits = [](unsigned p, int i, int j) {
        // slot 1 = bit 2, slot 2 = bit 1, slot 3 = bit 0
        unsigned bi = (p >> (3 - i)) & 1u, bj = (p >> (3 - j)) & 1u;
        p &= ~((1u << (3 - i)) | (1u << (3 - j)));
        return p | (bi << (3 - j)) | (bj << (3 - i));
    };
    Window w{};
    for (unsigned x = 0; x < 8; ++x) {
        // 1 - F_{1,2,3}
        unsigned f1 = ((x >> 2) & 1u) == 0 ? swap_bits(x, 2, 3) : x;
        w[x][x] += 1.0;
        w[f1][x] -= 1.0;
        // 1 - X_3 F_{3,2,1} X_3
        unsigned xf = x ^ 1u;
        unsigned f2 = (xf & 1u) == 0 ? swap_bits(xf, 2, 1) : xf;
        f2 ^= 1u;
        w[x][x] += 1.0;
        w[f2][x] -= 1.0;
    }
    return w;
}

inline Window bulk_window(ModelForm form) {
    switch (form) {
        case ModelForm::Projector: return projector_window();
        case ModelForm::Pauli: return pauli_window();
        case ModelForm::FredkinGate: return fredkin_gate_window();
    }
    throw std::invalid_argument("bulk_window: bad form");
}

/// Scalar relating each form to the Projector normalization; the measured
/// counterpart is check_form_equivalence.
inline double form_scalar(ModelForm form) {
    switch (form) {
        case ModelForm::Projector: return 1.0;
        case ModelForm::Pauli: return 8.0;
        case ModelForm::FredkinGate: return 2.0;
    }
    throw std::invalid_argument("form_scalar: bad form");
}

inline void embed_window_triplets(const Window& w, int N, const int sites[3],
                                  std::vector<Triplet>& out) {
    std::uint64_t dim = std::uint64_t{1} << N;
    for (std::uint64_t x = 0; x < dim; ++x) {
        unsigned p = window_pattern(x, N, sites);
        for (unsigned q = 0; q < 8; ++q) {
            double v = w[p][q];
            if (v == 0.0) continue;
            std::uint64_t y = with_window_pattern(x, N, sites, q);
            out.emplace_back(static_cast<int>(x), static_cast<int>(y), v);
        }
    }
}

}  // namespace detail

/// Single three-site bulk term H_j on the full 2^N-dimensional space,
/// constructed literally from the requested form.
inline LinearOperator build_bulk_term(int j, int N, ModelForm form) {
    if (N < 3 || j < 1 || j > N - 2)
        throw SiteOutOfRange("build_bulk_term: j=" + std::to_string(j) +
                             " not in [1," + std::to_string(N - 2) + "]");
    require_basis_size(std::uint64_t{1} << N, "build_bulk_term");
    detail::Window w = detail::bulk_window(form);
    int sites[3] = {j, j + 1, j + 2};
    std::vector<Triplet> t;
    detail::embed_window_triplets(w, N, sites, t);
    return LinearOperator::from_triplets(std::int64_t{1} << N, std::move(t));
}

/// Bulk Hamiltonian: open windows j = 1..N-2 or all N cyclic windows.
inline LinearOperator build_bulk(int N, bool periodic, ModelForm form) {
    if (N < (periodic ? 3 : 2))
        throw SiteOutOfRange("build_bulk: N too small");
    require_basis_size(std::uint64_t{1} << N, "build_bulk");
    detail::Window w = detail::bulk_window(form);
    std::vector<Triplet> t;
    int n_windows = periodic ? N : N - 2;
    for (int j = 1; j <= (N >= 3 ? n_windows : 0); ++j) {
        int sites[3];
        detail::window_sites(N, j, periodic, sites);
        detail::embed_window_triplets(w, N, sites, t);
    }
    return LinearOperator::from_triplets(std::int64_t{1} << N, std::move(t));
}

/// Open boundary term:
/// H_d(alpha, beta) = (1 - alpha sigma^z_1)/2 + (1 + beta sigma^z_N)/2,
/// equal to |down_1><down_1| + |up_N><up_N| at alpha = beta = 1.
inline LinearOperator build_boundary(int N, double alpha, double beta) {
    require_basis_size(std::uint64_t{1} << N, "build_boundary");
    std::vector<Triplet> t;
    std::uint64_t dim = std::uint64_t{1} << N;
    for (std::uint64_t x = 0; x < dim; ++x) {
        double z1 = (x >> (N - 1)) & 1u ? -1.0 : 1.0;
        double zN = x & 1u ? -1.0 : 1.0;
        double e = 0.5 * (1.0 - alpha * z1) + 0.5 * (1.0 + beta * zN);
        if (e != 0.0) t.emplace_back(static_cast<int>(x), static_cast<int>(x), e);
    }
    return LinearOperator::from_triplets(std::int64_t{1} << N, std::move(t));
}

inline LinearOperator build_hamiltonian(int N, const BoundarySpec& b, ModelForm form) {
    if (b.is_periodic()) {
        if (N < 3) throw SiteOutOfRange("build_hamiltonian: periodic needs N >= 3");
        return build_bulk(N, true, form);
    }
    if (N < 2) throw SiteOutOfRange("build_hamiltonian: open needs N >= 2");
    return build_bulk(N, false, form) + build_boundary(N, b.alpha, b.beta);
}

/// Matrix-free Hamiltonian application. Hard-codes the Fredkin-move projector
/// structure times the form scalar, independently of the literal sparse
/// construction; the two paths are cross-checked in tests.
inline LinearOperator make_matrix_free_hamiltonian(int N, const BoundarySpec& b,
                                                   ModelForm form) {
    if (N < (b.is_periodic() ? 3 : 2))
        throw SiteOutOfRange("make_matrix_free_hamiltonian: N too small");
    double lambda = detail::form_scalar(form);
    bool periodic = b.is_periodic();
    double alpha = b.alpha, beta = b.beta;
    std::int64_t dim = std::int64_t{1} << N;
    auto fn = [N, lambda, periodic, alpha, beta](const Vector& v, Vector& out) {
        out.setZero();
        int n_windows = periodic ? N : N - 2;
        std::uint64_t dim = std::uint64_t{1} << N;
        for (std::uint64_t x = 0; x < dim; ++x) {
            double vx = v[static_cast<std::int64_t>(x)];
            double acc = 0.0;
            if (N >= 3)
                for (int j = 1; j <= n_windows; ++j) {
                    int s[3];
                    detail::window_sites(N, j, periodic, s);
                    unsigned p = detail::window_pattern(x, N, s);
                    unsigned q = detail::fredkin_move(p);
                    if (q == p) continue;
                    std::uint64_t y = detail::with_window_pattern(x, N, s, q);
                    acc += 0.5 * lambda * vx;
                    acc -= 0.5 * lambda * v[static_cast<std::int64_t>(y)];
                }
            if (!periodic) {
                double z1 = (x >> (N - 1)) & 1u ? -1.0 : 1.0;
                double zN = x & 1u ? -1.0 : 1.0;
                acc += (0.5 * (1.0 - alpha * z1) + 0.5 * (1.0 + beta * zN)) * vx;
            }
            out[static_cast<std::int64_t>(x)] = acc;
        }
    };
    return LinearOperator::from_apply(dim, fn);
}

struct FormScalars {
    double lambda_pauli = 0.0;
    double lambda_fredkin = 0.0;
};

/// Measures the scalars relating the literal Pauli / Fredkin-gate bulk terms
/// to the Projector form; throws if any term is not a scalar multiple.
inline FormScalars check_form_equivalence(int N, double tol = 1e-12) {
    if (N < 3) throw SiteOutOfRange("check_form_equivalence: N < 3");
    FormScalars out;
    for (ModelForm form : {ModelForm::Pauli, ModelForm::FredkinGate}) {
        double lambda = 0.0;
        for (int j = 1; j <= N - 2; ++j) {
            Matrix p = build_bulk_term(j, N, ModelForm::Projector).to_dense();
            Matrix f = build_bulk_term(j, N, form).to_dense();
            double denom = (p.array() * p.array()).sum();
            double l = (f.array() * p.array()).sum() / denom;
            double resid = (f - l * p).cwiseAbs().maxCoeff();
            if (resid > tol * std::max(1.0, std::abs(l)))
                throw FormsInequivalent(std::string("check_form_equivalence: ") +
                                        to_string(form) + " term j=" + std::to_string(j) +
                                        " is not a scalar multiple (residual " +
                                        std::to_string(resid) + ")");
            if (j == 1)
                lambda = l;
            else if (std::abs(l - lambda) > tol * std::max(1.0, std::abs(lambda)))
                throw FormsInequivalent("check_form_equivalence: scalar varies across terms");
        }
        (form == ModelForm::Pauli ? out.lambda_pauli : out.lambda_fredkin) = lambda;
    }
    return out;
}

/// Eigenvalue of Z = sum_j sigma^z_j on basis state x.
inline int z_eigenvalue(std::uint64_t x, int N) {
    int downs = 0;
    for (int j = 0; j < N; ++j) downs += static_cast<int>((x >> j) & 1u);
    return N - 2 * downs;
}

/// Number of down-steps per basis state; conserved by bulk, boundary and
/// colored terms alike, so it labels exact invariant blocks.
inline std::vector<int> down_count_labels(int N) {
    std::vector<int> labels(std::size_t{1} << N);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << N); ++x)
        labels[static_cast<std::size_t>(x)] = (N - z_eigenvalue(x, N)) / 2;
    return labels;
}

/// One-site translation: the spin at site j moves to site j+1 (cyclically).
inline LinearOperator translation_operator(int N) {
    require_basis_size(std::uint64_t{1} << N, "translation_operator");
    std::vector<Triplet> t;
    std::uint64_t dim = std::uint64_t{1} << N;
    for (std::uint64_t x = 0; x < dim; ++x) {
        std::uint64_t y = (x >> 1) | ((x & 1u) << (N - 1));
        t.emplace_back(static_cast<int>(y), static_cast<int>(x), 1.0);
    }
    return LinearOperator::from_triplets(std::int64_t{1} << N, std::move(t), false);
}

}  // namespace fredkin
