#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "fredkin/entanglement.hpp"
#include "fredkin/states.hpp"

using namespace fredkin;

namespace {

// expands per-sector entries into one probability per Schmidt vector
std::vector<double> expanded_probabilities(const SchmidtSpectrum& s) {
    std::vector<double> p;
    for (const SchmidtEntry& e : s.entries)
        for (int c = 0; c < static_cast<int>(e.multiplicity); ++c) p.push_back(e.p);
    std::sort(p.begin(), p.end(), std::greater<double>());
    return p;
}

std::vector<double> significant(std::vector<double> p, double cut = 1e-12) {
    p.erase(std::remove_if(p.begin(), p.end(), [&](double x) { return x < cut; }),
            p.end());
    return p;
}

}  // namespace

TEST_CASE("half-cut Schmidt spectrum of the 4-site Dyck state", "[entanglement]") {
    SchmidtSpectrum s = schmidt_exact(2, 2);
    REQUIRE(s.entries.size() == 2);
    REQUIRE(s.entries[0].m == 0);
    REQUIRE(s.entries[0].sector_weight == Catch::Approx(0.5).margin(1e-14));
    REQUIRE(s.entries[1].m == 2);
    REQUIRE(s.entries[1].sector_weight == Catch::Approx(0.5).margin(1e-14));
    REQUIRE(entropy(s) == Catch::Approx(std::log(2.0)).margin(1e-12));
    REQUIRE(schmidt_rank(s) == 2.0);
    REQUIRE(height_expectation(2, 2) == Catch::Approx(1.0).margin(1e-14));

    // every Dyck word opens with '(' so the L=1 cut carries no entropy
    SchmidtSpectrum s1 = schmidt_exact(2, 1);
    REQUIRE(s1.entries.size() == 1);
    REQUIRE(s1.entries[0].m == 1);
    REQUIRE(entropy(s1) == Catch::Approx(0.0).margin(1e-14));
}

TEST_CASE("closed-form spectrum matches the SVD across every cut", "[entanglement]") {
    for (int n = 1; n <= 5; ++n) {
        int N = 2 * n;
        Vector state = dyck_state(n);
        for (int L = 1; L < N; ++L) {
            std::vector<double> formula =
                significant(expanded_probabilities(schmidt_exact(n, L)));
            std::vector<double> svd = significant(schmidt_svd(state, N, L));
            REQUIRE(formula.size() == svd.size());
            for (std::size_t i = 0; i < svd.size(); ++i)
                REQUIRE(formula[i] == Catch::Approx(svd[i]).margin(1e-10));
            REQUIRE(entropy(schmidt_exact(n, L)) ==
                    Catch::Approx(entropy_from_probabilities(svd)).margin(1e-10));
        }
    }
}

TEST_CASE("colored spectrum matches the colored SVD", "[entanglement]") {
    for (auto [n, k, L] : {std::tuple{2, 2, 2}, std::tuple{2, 3, 2}, std::tuple{3, 2, 3},
                           std::tuple{3, 2, 2}}) {
        Vector state = colored_dyck_state(n, k);
        std::vector<double> formula =
            significant(expanded_probabilities(schmidt_colored(n, L, k)));
        std::vector<double> svd = significant(schmidt_svd(state, 2 * n, L, k));
        REQUIRE(formula.size() == svd.size());
        for (std::size_t i = 0; i < svd.size(); ++i)
            REQUIRE(formula[i] == Catch::Approx(svd[i]).margin(1e-10));
    }
}

TEST_CASE("colored entropy identity S = S_half + log(k) E[m]", "[entanglement]") {
    for (auto [n, L, k] : {std::tuple{10, 7, 2}, std::tuple{50, 37, 3},
                           std::tuple{500, 123, 5}}) {
        double lhs = colored_entropy_exact(n, L, k);
        double rhs = entropy(schmidt_exact(n, L)) +
                     std::log(static_cast<double>(k)) * height_expectation(n, L);
        REQUIRE(lhs == Catch::Approx(rhs).margin(1e-12 * std::max(1.0, rhs)));
    }
    // k = 1 reduces to the uncolored quantities identically
    REQUIRE(colored_entropy_exact(20, 11, 1) ==
            Catch::Approx(entropy(schmidt_exact(20, 11))).margin(1e-15));
    REQUIRE(colored_entropy_asymptotic(40, 22, 1) ==
            Catch::Approx(asymptotic_entropy(40, 22)).margin(1e-15));
}

TEST_CASE("entropy rejects an unnormalized spectrum", "[entanglement]") {
    SchmidtSpectrum bogus;
    bogus.N = 4;
    bogus.L = 2;
    SchmidtEntry e;
    e.m = 0;
    e.multiplicity = 1;
    e.p = 0.5;
    e.log_p = std::log(0.5);
    e.sector_weight = 0.5;
    bogus.entries.push_back(e);
    REQUIRE_THROWS_AS(entropy(bogus), NotNormalized);
}

TEST_CASE("Schmidt rank counts the admissible heights", "[entanglement]") {
    int n = 6, N = 12;
    for (int L = 1; L < N; ++L) {
        int side = std::min(L, N - L);
        REQUIRE(schmidt_rank(schmidt_exact(n, L)) ==
                static_cast<double>(side / 2 + 1));
    }
    // colored: sum of k^m over m in {0, 2}
    REQUIRE(schmidt_rank(schmidt_colored(2, 2, 2)) == 5.0);
    REQUIRE(schmidt_rank(schmidt_colored(2, 2, 3)) == 10.0);
    // large-N half cut keeps every sector even when weights underflow
    REQUIRE(schmidt_rank(schmidt_exact(1000, 1000)) == 501.0);
}

TEST_CASE("entanglement constant agrees with its closed form", "[entanglement]") {
    // -int rho ln rho for rho = x^2 e^{-x^2} / (sqrt(pi)/4) equals
    // ln(sqrt(pi)/4) + gamma/2 + (2 - gamma)/2 - 1/2 ... collapsed:
    // c0 + ln 2 / 2 = ln(pi)/2 + gamma - 1/2 (Euler-Mascheroni gamma)
    const double euler_gamma = 0.57721566490153286;
    double closed = 0.5 * std::log(M_PI) + euler_gamma - 0.5 - 0.5 * std::log(2.0);
    REQUIRE(entanglement_constant() == Catch::Approx(closed).margin(1e-9));
}

TEST_CASE("entropy is cut-symmetric and grows with N at half cut", "[entanglement]") {
    for (auto [n, L] : {std::pair{10, 3}, std::pair{25, 11}, std::pair{100, 60}})
        REQUIRE(entropy(schmidt_exact(n, L)) ==
                Catch::Approx(entropy(schmidt_exact(n, 2 * n - L))).margin(1e-12));
    // growth is monotone within a cut-parity class; even and odd cuts carry
    // different height sectors (m even vs odd) and interleave non-monotonically
    double prev_even = -1.0, prev_odd = -1.0;
    for (int n = 2; n <= 100; ++n) {
        double s = entropy(schmidt_exact(n, n));
        double& prev = (n % 2 == 0) ? prev_even : prev_odd;
        REQUIRE(s > prev);
        prev = s;
    }
}

TEST_CASE("asymptotic formula converges to the exact entropy", "[entanglement]") {
    REQUIRE(std::abs(entropy(schmidt_exact(1000, 1000)) -
                     asymptotic_entropy(2000, 1000)) <= 5e-3);
    REQUIRE(std::abs(entropy(schmidt_exact(1000, 500)) -
                     asymptotic_entropy(2000, 500)) <= 5e-3);
    // colored: sqrt(L)-leading term, so a looser relative tolerance
    double exact = colored_entropy_exact(2000, 2000, 2);
    double asym = colored_entropy_asymptotic(4000, 2000, 2);
    REQUIRE(std::abs(exact - asym) / exact <= 0.05);
}

TEST_CASE("sweep rows serialize with a fixed header", "[entanglement]") {
    std::vector<SweepRow> rows{entropy_point(8, 4, 1), entropy_point(8, 4, 2)};
    std::ostringstream os;
    write_sweep_csv(os, rows);
    std::istringstream is(os.str());
    std::string header, row1, row2;
    std::getline(is, header);
    std::getline(is, row1);
    std::getline(is, row2);
    REQUIRE(header == "N,L,k,S_exact,S_asymptotic,rank,height_expectation");
    REQUIRE(row1.substr(0, 6) == "8,4,1,");
    REQUIRE(row2.substr(0, 6) == "8,4,2,");
    REQUIRE(std::count(row1.begin(), row1.end(), ',') == 6);
}

TEST_CASE("cut bounds are validated", "[entanglement]") {
    REQUIRE_THROWS_AS(schmidt_exact(3, 0), CutOutOfRange);
    REQUIRE_THROWS_AS(schmidt_exact(3, 6), CutOutOfRange);
    REQUIRE_THROWS_AS(asymptotic_entropy(10, 10), CutOutOfRange);
    REQUIRE_THROWS_AS(entropy_point(7, 3, 1), CutOutOfRange);
    REQUIRE_THROWS_AS(schmidt_svd(dyck_state(2), 4, 0), CutOutOfRange);
}
