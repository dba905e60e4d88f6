#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fredkin/colored.hpp"
#include "fredkin/counting.hpp"
#include "fredkin/enumeration.hpp"
#include "fredkin/model.hpp"
#include "fredkin/operator.hpp"
#include "fredkin/word.hpp"

namespace fredkin {

/// Uniform unit-norm superposition over C_{a,b}(N).
inline Vector class_state(ClassId c, int N) {
    std::vector<SpinWord> members = enumerate_class(c, N);
    if (members.empty()) throw EmptyClass("class_state: empty class");
    Vector v = Vector::Zero(std::int64_t{1} << N);
    double amp = 1.0 / std::sqrt(static_cast<double>(members.size()));
    for (const SpinWord& w : members) v[static_cast<std::int64_t>(w.bits)] = amp;
    return v;
}

/// Uniform superposition of all Dyck words on 2n sites.
inline Vector dyck_state(int n) { return class_state(ClassId{0, 0}, 2 * n); }

/// Uniform superposition of all properly colored Dyck words on 2n sites.
inline Vector colored_dyck_state(int n, int k) {
    std::vector<ColoredWord> words = colored_dyck_words(n, k);
    Vector v = Vector::Zero(colored_dim(2 * n, k));
    double amp = 1.0 / std::sqrt(static_cast<double>(words.size()));
    for (const ColoredWord& w : words) v[static_cast<std::int64_t>(w.code)] = amp;
    return v;
}

/// The extra periodic ground state at even length 2n: the alternating-sign
/// combination over the C_{m,m} classes. Per-word amplitude is
/// (-1)^m / sqrt(binomial(2n,n)); unit norm follows from
/// sum_m |C_{m,m}(2n)| = binomial(2n,n).
inline Vector anomalous_state(int n) {
    int N = 2 * n;
    require_basis_size(std::int64_t{1} << N, "anomalous_state");
    Vector v = Vector::Zero(std::int64_t{1} << N);
    double amp = 1.0 / std::sqrt(static_cast<double>(binomial(N, n)));
    for (std::int64_t code = 0; code < v.size(); ++code) {
        ClassId c = classify(SpinWord(N, static_cast<std::uint64_t>(code)));
        if (c.a == c.b) v[code] = (c.a % 2 == 0) ? amp : -amp;
    }
    return v;
}

namespace detail {
inline std::string format_amplitude(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}
}  // namespace detail

/// Writes nonzero amplitudes as `word<TAB>amplitude` (17 significant
/// digits), one line per word, in ascending canonical encoding order.
inline void dump_state(std::ostream& os, const Vector& v, int N, int k = 1) {
    if (v.size() != colored_dim(N, k))
        throw DimensionMismatch("dump_state: vector size does not match N, k");
    for (std::int64_t code = 0; code < v.size(); ++code) {
        if (v[code] == 0.0) continue;
        std::string word = (k == 1)
                               ? to_string(SpinWord(N, static_cast<std::uint64_t>(code)))
                               : to_string(ColoredWord(N, k, static_cast<std::uint64_t>(code)));
        os << word << '\t' << detail::format_amplitude(v[code]) << '\n';
    }
}

inline Vector load_state(std::istream& is, int N, int k = 1) {
    Vector v = Vector::Zero(colored_dim(N, k));
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw MismatchDetected("load_state: malformed line: " + line);
        std::string word = line.substr(0, tab);
        double amp = std::stod(line.substr(tab + 1));
        std::int64_t code = (k == 1)
                                ? static_cast<std::int64_t>(parse_word(word).bits)
                                : static_cast<std::int64_t>(parse_colored_word(word, k).code);
        v[code] = amp;
    }
    return v;
}

/// Truncated shift-matrix MPS for the Dyck state indicator: A^( raises the
/// auxiliary height, A^) lowers it, v points at height zero.
struct MpsRep {
    int chi = 1;
    Matrix a_open;   // A^(: entry (i, i+1) = 1
    Matrix a_close;  // A^): transpose of A^(
    Vector v;        // boundary vector e_1
};

inline int exact_bond_dimension(int N) { return N / 2 + 1; }

inline MpsRep mps_matrices(int N, int chi = 0) {
    if (chi <= 0) chi = exact_bond_dimension(N);
    MpsRep rep;
    rep.chi = chi;
    rep.a_open = Matrix::Zero(chi, chi);
    for (int i = 0; i + 1 < chi; ++i) rep.a_open(i, i + 1) = 1.0;
    rep.a_close = rep.a_open.transpose();
    rep.v = Vector::Zero(chi);
    rep.v[0] = 1.0;
    return rep;
}

/// v^T A^{s_1} ... A^{s_N} v. With chi >= N/2+1 this is exactly the Dyck
/// indicator of w.
inline double mps_amplitude(const MpsRep& rep, const SpinWord& w) {
    Vector r = rep.v;  // r^T accumulates v^T A^{s_1} ... A^{s_j}
    for (int j = 1; j <= w.n_sites; ++j) {
        const Matrix& a = w.down(j) ? rep.a_close : rep.a_open;
        r = a.transpose() * r;
    }
    return r.dot(rep.v);
}

/// Error report for a truncated bond dimension against the exact indicator.
struct TruncationReport {
    int chi = 0;
    double max_abs_error = 0.0;     // over all 2^N words
    std::int64_t lost_words = 0;    // Dyck words whose amplitude moved off 1
};

inline TruncationReport mps_truncation_report(int N, int chi) {
    require_basis_size(std::int64_t{1} << N, "mps_truncation_report");
    MpsRep rep = mps_matrices(N, chi);
    TruncationReport report;
    report.chi = rep.chi;
    for (std::int64_t code = 0; code < (std::int64_t{1} << N); ++code) {
        SpinWord w(N, static_cast<std::uint64_t>(code));
        double amp = mps_amplitude(rep, w);
        double want = is_dyck(w) ? 1.0 : 0.0;
        double err = std::abs(amp - want);
        if (err > report.max_abs_error) report.max_abs_error = err;
        if (is_dyck(w) && amp != 1.0) ++report.lost_words;
    }
    return report;
}

/// The one-magnon-like sector: the N-1 single-peak words, a peak at sites
/// (j, j+1) on an otherwise all-down word, ordered by peak position.
struct MagnonSector {
    int n_sites = 0;
    std::vector<SpinWord> basis;  // psi_j, j = 1..N-1
    ClassId family{0, 0};         // the common class, derived from classify
};

inline MagnonSector magnon_sector(int N) {
    if (N < 3) throw SiteOutOfRange("magnon_sector: need N >= 3");
    MagnonSector sector;
    sector.n_sites = N;
    std::uint64_t all_down = (N == 64) ? ~std::uint64_t{0}
                                       : ((std::uint64_t{1} << N) - 1);
    for (int j = 1; j <= N - 1; ++j) {
        SpinWord w(N, all_down ^ (std::uint64_t{1} << (N - j)));
        sector.basis.push_back(w);
    }
    sector.family = classify(sector.basis.front());
    for (const SpinWord& w : sector.basis)
        if (!(classify(w) == sector.family))
            throw MismatchDetected("magnon_sector: basis spans multiple classes");
    return sector;
}

/// Scale relating the restricted bulk matrix to xxx_one_magnon: the bulk
/// projector normalization contributes 1/2 per move.
inline constexpr double magnon_xxx_scale = 0.5;

/// The open-chain bulk Hamiltonian restricted to span{psi_j}; the boundary
/// term is excluded because it shifts the diagonal in a position-dependent
/// way that breaks the XXX correspondence.
inline LinearOperator magnon_restricted_hamiltonian(int N) {
    MagnonSector sector = magnon_sector(N);
    LinearOperator bulk = build_bulk(N, false, ModelForm::Projector);
    const SparseMatrix& h = bulk.sparse();
    int M = static_cast<int>(sector.basis.size());
    std::vector<std::int64_t> idx(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j)
        idx[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(sector.basis[static_cast<std::size_t>(j)].bits);
    std::vector<Triplet> trips;
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j) {
            double x = h.coeff(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
            if (x != 0.0) trips.emplace_back(i, j, x);
        }
    return LinearOperator::from_triplets(M, trips, true);
}

/// Heisenberg open-chain Hamiltonian sum_j (1 - P_{j,j+1}) restricted to
/// the one-magnon sector on M sites: diagonal = bond coordination count,
/// off-diagonal = -1 on neighbors.
inline LinearOperator xxx_one_magnon(int M) {
    if (M < 2) throw SiteOutOfRange("xxx_one_magnon: need M >= 2");
    std::vector<Triplet> trips;
    for (int i = 0; i < M; ++i) {
        double coord = (i == 0 || i == M - 1) ? 1.0 : 2.0;
        trips.emplace_back(i, i, coord);
        if (i + 1 < M) {
            trips.emplace_back(i, i + 1, -1.0);
            trips.emplace_back(i + 1, i, -1.0);
        }
    }
    return LinearOperator::from_triplets(M, trips, true);
}

/// Max norm of the out-of-sector component of H_bulk |psi_j>; zero because
/// Fredkin moves preserve the class.
inline double magnon_closure_residual(int N) {
    MagnonSector sector = magnon_sector(N);
    LinearOperator bulk = build_bulk(N, false, ModelForm::Projector);
    double worst = 0.0;
    for (const SpinWord& w : sector.basis) {
        Vector e = Vector::Zero(bulk.dim());
        e[static_cast<std::int64_t>(w.bits)] = 1.0;
        Vector out = bulk.apply(e);
        for (const SpinWord& b : sector.basis) out[static_cast<std::int64_t>(b.bits)] = 0.0;
        worst = std::max(worst, out.norm());
    }
    return worst;
}

}  // namespace fredkin
