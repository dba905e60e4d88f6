#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fredkin/colored.hpp"
#include "fredkin/colored_model.hpp"
#include "fredkin/enumeration.hpp"
#include "fredkin/model.hpp"
#include "fredkin/solver.hpp"
#include "fredkin/states.hpp"
#include "fredkin/word.hpp"

namespace fredkin {

/// Connected components of the (colored) Fredkin-move graph on the full
/// basis. Orbit ids are assigned in ascending order of the orbit's minimum
/// encoding, which is also its representative.
struct OrbitPartition {
    int n_sites = 0;
    int k = 1;
    bool periodic = false;
    std::int64_t n_states = 0;
    std::vector<std::int32_t> orbit_id;        // per basis state
    std::vector<std::int64_t> representative;  // per orbit, minimum member
    std::vector<std::int64_t> orbit_size;      // per orbit
    std::int64_t orbit_count() const { return static_cast<std::int64_t>(representative.size()); }
};

namespace detail {

inline std::int64_t uf_find(std::vector<std::int64_t>& parent, std::int64_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];  // path halving
        x = parent[x];
    }
    return x;
}

}  // namespace detail

inline OrbitPartition orbit_partition(int N, bool periodic, int k = 1) {
    std::int64_t dim = colored_dim(N, k);
    require_basis_size(dim, "orbit_partition");
    std::vector<std::int64_t> parent(static_cast<std::size_t>(dim));
    std::iota(parent.begin(), parent.end(), std::int64_t{0});
    for (std::int64_t code = 0; code < dim; ++code) {
        std::vector<std::int64_t> nbrs;
        if (k == 1) {
            for (const SpinWord& w :
                 fredkin_neighbors(SpinWord(N, static_cast<std::uint64_t>(code)), periodic))
                nbrs.push_back(static_cast<std::int64_t>(w.bits));
        } else {
            for (const ColoredWord& w : colored_fredkin_neighbors(
                     ColoredWord(N, k, static_cast<std::uint64_t>(code)), periodic))
                nbrs.push_back(static_cast<std::int64_t>(w.code));
        }
        for (std::int64_t nb : nbrs) {
            std::int64_t ra = detail::uf_find(parent, code);
            std::int64_t rb = detail::uf_find(parent, nb);
            if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    }
    OrbitPartition part;
    part.n_sites = N;
    part.k = k;
    part.periodic = periodic;
    part.n_states = dim;
    part.orbit_id.assign(static_cast<std::size_t>(dim), -1);
    // Roots are orbit minima (unions always keep the smaller code as root),
    // so a scan in code order assigns ids by ascending representative.
    for (std::int64_t code = 0; code < dim; ++code) {
        std::int64_t root = detail::uf_find(parent, code);
        if (part.orbit_id[static_cast<std::size_t>(root)] < 0) {
            part.orbit_id[static_cast<std::size_t>(root)] =
                static_cast<std::int32_t>(part.representative.size());
            part.representative.push_back(root);
            part.orbit_size.push_back(0);
        }
        part.orbit_id[static_cast<std::size_t>(code)] =
            part.orbit_id[static_cast<std::size_t>(root)];
        ++part.orbit_size[static_cast<std::size_t>(
            part.orbit_id[static_cast<std::size_t>(code)])];
    }
    return part;
}

/// `orbit_id<TAB>size<TAB>representative_word`, sorted by representative.
inline void dump_orbits(std::ostream& os, const OrbitPartition& part) {
    for (std::int64_t i = 0; i < part.orbit_count(); ++i) {
        std::int64_t rep = part.representative[static_cast<std::size_t>(i)];
        std::string word =
            (part.k == 1)
                ? to_string(SpinWord(part.n_sites, static_cast<std::uint64_t>(rep)))
                : to_string(ColoredWord(part.n_sites, part.k, static_cast<std::uint64_t>(rep)));
        os << i << '\t' << part.orbit_size[static_cast<std::size_t>(i)] << '\t' << word << '\n';
    }
}

struct OrbitTheoremReport {
    std::int64_t orbit_count = 0;
    std::int64_t kernel_dim = 0;
    double max_residual = 0.0;  // worst ||H u_orbit|| over uniform orbit states
};

/// Checks that the bulk kernel dimension equals the orbit count and that
/// every orbit's uniform superposition is annihilated. Throws on mismatch:
/// this failing means a transcription bug, not physics.
inline OrbitTheoremReport verify_orbit_theorem(int N, bool periodic, int k = 1) {
    OrbitPartition part = orbit_partition(N, periodic, k);
    LinearOperator bulk = (k == 1) ? build_bulk(N, periodic, ModelForm::Projector)
                                   : build_colored_bulk(N, k, periodic);
    OrbitTheoremReport report;
    report.orbit_count = part.orbit_count();
    report.kernel_dim = kernel_dimension(bulk);
    for (std::int64_t orb = 0; orb < part.orbit_count(); ++orb) {
        Vector u = Vector::Zero(part.n_states);
        double amp = 1.0 / std::sqrt(static_cast<double>(
                               part.orbit_size[static_cast<std::size_t>(orb)]));
        for (std::int64_t code = 0; code < part.n_states; ++code)
            if (part.orbit_id[static_cast<std::size_t>(code)] == orb) u[code] = amp;
        report.max_residual = std::max(report.max_residual, bulk.apply(u).norm());
    }
    if (report.kernel_dim != report.orbit_count)
        throw MismatchDetected("orbit theorem: kernel dim " +
                               std::to_string(report.kernel_dim) + " != orbit count " +
                               std::to_string(report.orbit_count));
    if (report.max_residual > 1e-10)
        throw MismatchDetected("orbit theorem: orbit state residual " +
                               std::to_string(report.max_residual));
    return report;
}

/// Left rotation by r sites: site j of the result is site j+r of w.
inline SpinWord rotate_left(const SpinWord& w, int r) {
    int N = w.n_sites;
    r = ((r % N) + N) % N;
    if (r == 0) return w;
    std::uint64_t mask = (N == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << N) - 1);
    std::uint64_t bits = ((w.bits << r) | (w.bits >> (N - r))) & mask;
    return SpinWord(N, bits);
}

/// Orbit invariant of the Z=0 periodic sector: rotate w to its first Dyck
/// rotation and count matched pairs wrapping the original chain edge; the
/// parity of that count separates the two Z=0 orbits.
inline int edge_winding_parity(const SpinWord& w) {
    int N = w.n_sites;
    for (int r = 0; r < N; ++r) {
        SpinWord rot = rotate_left(w, r);
        if (!is_dyck(rot)) continue;
        Matching m = match_parens(rot);
        // The original edge between sites N and 1 sits after rotated
        // position N - r.
        int edge = N - r;
        int wrapped = 0;
        for (int p = 1; p <= N; ++p) {
            int q = m.partner[static_cast<std::size_t>(p)];
            if (q > p && p <= edge && q > edge) ++wrapped;
        }
        return wrapped % 2;
    }
    throw MismatchDetected("edge_winding_parity: no Dyck rotation (Z != 0?)");
}

/// One sign quadrant of the boundary-coupling phase diagram.
struct QuadrantReport {
    int sign_alpha = 0;
    int sign_beta = 0;
    std::int64_t degeneracy = 0;
    bool magnitude_invariant = false;  // same degeneracy at all sampled |a|,|b|
    std::string identification;        // measured ground-space content
    double fidelity = 0.0;             // overlap of the identified span
};

struct PhaseDiagram {
    int n_sites = 0;
    std::array<QuadrantReport, 4> quadrants;  // (+,+), (+,-), (-,+), (-,-)
};

namespace detail {

inline double span_fidelity(const std::vector<Vector>& kernel,
                            const std::vector<Vector>& candidates) {
    if (kernel.size() != candidates.size()) return 0.0;
    // Worst projection of a kernel vector onto the candidate span; the
    // candidates here are orthonormal by construction (disjoint supports
    // or a single vector).
    double worst = 1.0;
    for (const Vector& v : kernel) {
        double proj = 0.0;
        for (const Vector& c : candidates) {
            double o = c.dot(v);
            proj += o * o;
        }
        worst = std::min(worst, proj);
    }
    return worst;
}

}  // namespace detail

namespace detail {

/// Orthonormal basis of the lowest eigenvalue cluster. Away from |a|=|b|=1
/// the ground energy is generally nonzero (the boundary term no longer
/// annihilates its favored words), so this is the right degeneracy notion.
inline std::vector<Vector> ground_cluster(const LinearOperator& h) {
    SpectralResult r = dense_spectrum(h);
    double e0 = r.eigenvalues.front();
    double tol = 1e-9 * std::max(1.0, std::abs(e0));
    std::vector<Vector> out;
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
        if (r.eigenvalues[i] <= e0 + tol) out.push_back(r.eigenvectors[i]);
    return out;
}

}  // namespace detail

/// Measures ground degeneracy and state content in each sign quadrant of
/// (alpha, beta), sampling magnitudes {0.5, 2.0} to confirm that only the
/// signs matter.
inline PhaseDiagram phase_diagram(int N) {
    if (N < 4 || N % 2 != 0) throw SiteOutOfRange("phase_diagram: need even N >= 4");
    PhaseDiagram diagram;
    diagram.n_sites = N;
    const std::array<std::pair<int, int>, 4> signs{{{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}}};
    const std::array<double, 2> mags{0.5, 2.0};
    for (std::size_t qi = 0; qi < signs.size(); ++qi) {
        auto [sa, sb] = signs[qi];
        QuadrantReport q;
        q.sign_alpha = sa;
        q.sign_beta = sb;
        std::vector<Vector> kernel;
        bool invariant = true;
        std::int64_t deg = -1;
        for (double ma : mags)
            for (double mb : mags) {
                LinearOperator h = build_hamiltonian(
                    N, BoundarySpec::open(sa * ma, sb * mb), ModelForm::Projector);
                std::vector<Vector> kb = detail::ground_cluster(h);
                if (deg < 0) {
                    deg = static_cast<std::int64_t>(kb.size());
                    kernel = kb;
                } else if (deg != static_cast<std::int64_t>(kb.size())) {
                    invariant = false;
                }
            }
        q.degeneracy = deg;
        q.magnitude_invariant = invariant;
        // Candidate ground-space content, measured rather than assumed.
        std::vector<Vector> candidates;
        std::string label;
        if (sa > 0 && sb > 0) {
            candidates.push_back(dyck_state(N / 2));
            label = "dyck";
        } else if (sa > 0 && sb < 0) {
            candidates.push_back(class_state(ClassId{0, N}, N));
            label = "C_{0,N} (all up)";
        } else if (sa < 0 && sb > 0) {
            candidates.push_back(class_state(ClassId{N, 0}, N));
            label = "C_{N,0} (all down)";
        } else {
            for (int a = 1; a <= N - 1; ++a)
                candidates.push_back(class_state(ClassId{a, N - a}, N));
            label = "domain walls )^a(^b, a,b >= 1";
        }
        q.fidelity = detail::span_fidelity(kernel, candidates);
        q.identification = (q.fidelity >= 1.0 - 1e-10)
                               ? label
                               : "unidentified (fidelity " + std::to_string(q.fidelity) + ")";
        diagram.quadrants[qi] = q;
    }
    return diagram;
}

}  // namespace fredkin
