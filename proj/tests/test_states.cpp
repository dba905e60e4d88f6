#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "fredkin/colored_model.hpp"
#include "fredkin/model.hpp"
#include "fredkin/solver.hpp"
#include "fredkin/states.hpp"

using namespace fredkin;

namespace {
std::uint64_t idx(const std::string& s) { return parse_word(s).bits; }
}  // namespace

TEST_CASE("class and Dyck states are uniform and normalized", "[states]") {
    for (int n = 1; n <= 6; ++n) {
        Vector v = dyck_state(n);
        REQUIRE(v.norm() == Catch::Approx(1.0).margin(1e-14));
        std::int64_t nonzero = 0;
        for (std::int64_t i = 0; i < v.size(); ++i)
            if (v[i] != 0.0) {
                ++nonzero;
                REQUIRE(is_dyck(SpinWord(2 * n, static_cast<std::uint64_t>(i))));
            }
        REQUIRE(nonzero == static_cast<std::int64_t>(catalan(n)));
    }
    Vector v = dyck_state(2);
    REQUIRE(v[idx("(())")] == Catch::Approx(1.0 / std::sqrt(2.0)));
    REQUIRE(v[idx("()()")] == Catch::Approx(1.0 / std::sqrt(2.0)));

    Vector c = class_state(ClassId{1, 1}, 4);
    int support = 0;
    for (std::int64_t i = 0; i < c.size(); ++i)
        if (c[i] != 0.0) {
            ++support;
            ClassId got = classify(SpinWord(4, static_cast<std::uint64_t>(i)));
            REQUIRE(got == (ClassId{1, 1}));
            REQUIRE(c[i] == Catch::Approx(1.0 / std::sqrt(3.0)));
        }
    REQUIRE(support == 3);
    REQUIRE_THROWS_AS(class_state(ClassId{0, 1}, 4), EmptyClass);
}

TEST_CASE("the Dyck state is the open-chain zero mode", "[states]") {
    for (int n = 1; n <= 5; ++n) {
        int N = 2 * n;
        LinearOperator h =
            build_hamiltonian(N, BoundarySpec::open(), ModelForm::Projector);
        REQUIRE(h.apply(dyck_state(n)).norm() <= 1e-12);
    }
    // every individual bulk term annihilates it, not just the sum
    for (int n = 2; n <= 4; ++n) {
        int N = 2 * n;
        Vector v = dyck_state(n);
        for (int j = 1; j <= N - 2; ++j)
            REQUIRE(build_bulk_term(j, N, ModelForm::Projector).apply(v).norm() <= 1e-13);
    }
    // and it spans the kernel
    LinearOperator h = build_hamiltonian(8, BoundarySpec::open(), ModelForm::Projector);
    std::vector<Vector> kernel = kernel_basis(h);
    REQUIRE(kernel.size() == 1);
    REQUIRE(std::abs(kernel[0].dot(dyck_state(4))) == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("colored Dyck state is the colored zero mode", "[states]") {
    Vector v = colored_dyck_state(1, 2);
    REQUIRE(v[parse_colored_word("(0)0", 2).code] == Catch::Approx(1.0 / std::sqrt(2.0)));
    REQUIRE(v[parse_colored_word("(1)1", 2).code] == Catch::Approx(1.0 / std::sqrt(2.0)));
    for (auto [n, k] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{1, 3}, std::pair{3, 2}}) {
        LinearOperator h = build_colored_hamiltonian(2 * n, k);
        Vector g = colored_dyck_state(n, k);
        REQUIRE(g.norm() == Catch::Approx(1.0).margin(1e-14));
        REQUIRE(h.apply(g).norm() <= 1e-12);
        REQUIRE(kernel_dimension(h) == 1);
    }
}

TEST_CASE("anomalous state alternates sign across C_{m,m}", "[states]") {
    int n = 2, N = 4;
    Vector v = anomalous_state(n);
    REQUIRE(v.norm() == Catch::Approx(1.0).margin(1e-14));
    double amp = 1.0 / std::sqrt(6.0);
    REQUIRE(v[idx("(())")] == Catch::Approx(amp));
    REQUIRE(v[idx("()()")] == Catch::Approx(amp));
    REQUIRE(v[idx("())(")] == Catch::Approx(-amp));
    REQUIRE(v[idx("))((")] == Catch::Approx(amp));
    for (std::int64_t i = 0; i < v.size(); ++i) {
        ClassId c = classify(SpinWord(N, static_cast<std::uint64_t>(i)));
        if (c.a != c.b) REQUIRE(v[i] == 0.0);
    }
}

TEST_CASE("anomalous state is a periodic zero mode with T = -1", "[states]") {
    for (int n = 2; n <= 4; ++n) {
        int N = 2 * n;
        Vector v = anomalous_state(n);
        REQUIRE(build_bulk(N, true, ModelForm::Projector).apply(v).norm() <= 1e-12);
        Vector tv = translation_operator(N).apply(v);
        REQUIRE((tv + v).cwiseAbs().maxCoeff() <= 1e-14);
        // orthogonal to the uniform superposition over the whole Z = 0 sector,
        // because sum_m (-1)^m |C_{m,m}| = 0
        Vector u = Vector::Zero(v.size());
        for (std::int64_t i = 0; i < u.size(); ++i) {
            ClassId c = classify(SpinWord(N, static_cast<std::uint64_t>(i)));
            if (c.a == c.b) u[i] = 1.0;
        }
        u.normalize();
        REQUIRE(std::abs(u.dot(v)) <= 1e-14);
    }
}

TEST_CASE("state dump and load round trip", "[states]") {
    Vector v = dyck_state(3);
    std::ostringstream out;
    dump_state(out, v, 6);
    std::string text = out.str();
    REQUIRE(text.substr(0, 7) == "((()))\t");
    std::istringstream in(text);
    Vector back = load_state(in, 6);
    REQUIRE((back - v).cwiseAbs().maxCoeff() == 0.0);

    Vector cv = colored_dyck_state(2, 2);
    std::ostringstream cout_;
    dump_state(cout_, cv, 4, 2);
    std::istringstream cin_(cout_.str());
    Vector cback = load_state(cin_, 4, 2);
    REQUIRE((cback - cv).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("shift-matrix MPS reproduces the Dyck indicator exactly", "[states]") {
    for (int N = 2; N <= 12; N += 2) {
        MpsRep rep = mps_matrices(N);
        REQUIRE(rep.chi == exact_bond_dimension(N));
        REQUIRE(rep.chi == N / 2 + 1);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << N); ++x) {
            SpinWord w(N, x);
            double want = is_dyck(w) ? 1.0 : 0.0;
            REQUIRE(mps_amplitude(rep, w) == want);
        }
        TruncationReport exact = mps_truncation_report(N, 0);
        REQUIRE(exact.max_abs_error == 0.0);
        REQUIRE(exact.lost_words == 0);
    }
}

TEST_CASE("MPS truncation loses exactly the tall Dyck words", "[states]") {
    // chi = 2 resolves heights {0, 1}; at N = 6 only "()()()"
    // survives, so 4 of the 5 Dyck words are lost with error 1
    TruncationReport r = mps_truncation_report(6, 2);
    REQUIRE(r.chi == 2);
    REQUIRE(r.lost_words == 4);
    REQUIRE(r.max_abs_error == 1.0);
    TruncationReport r1 = mps_truncation_report(6, 1);
    REQUIRE(r1.lost_words == 5);
}

TEST_CASE("magnon sector matches the scaled one-magnon XXX chain", "[states]") {
    for (int N : {4, 6, 8, 10}) {
        MagnonSector sector = magnon_sector(N);
        REQUIRE(sector.basis.size() == static_cast<std::size_t>(N - 1));
        REQUIRE(sector.family == (ClassId{N - 2, 0}));
        // psi_j is all-down with a single up step at site j
        for (int j = 1; j <= N - 1; ++j) {
            const SpinWord& w = sector.basis[static_cast<std::size_t>(j - 1)];
            for (int s = 1; s <= N; ++s) REQUIRE(w.up(s) == (s == j));
        }
        REQUIRE(magnon_closure_residual(N) == 0.0);
        Matrix got = magnon_restricted_hamiltonian(N).to_dense();
        Matrix want = magnon_xxx_scale * xxx_one_magnon(N - 1).to_dense();
        REQUIRE((got - want).cwiseAbs().maxCoeff() == 0.0);
    }
}
