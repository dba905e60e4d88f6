// Builds the open chain, solves for the ground state and checks it against
// the closed-form Dyck superposition. Usage: demo_ground_state [N]

#include <cstdlib>
#include <iostream>

#include "fredkin/fredkin.hpp"

using namespace fredkin;

int main(int argc, char** argv) {
    int N = argc > 1 ? std::atoi(argv[1]) : 10;
    if (N < 4 || N % 2 != 0) {
        std::cerr << "need even N >= 4\n";
        return 2;
    }

    LinearOperator h = build_hamiltonian(N, BoundarySpec::open(), ModelForm::Projector);
    SpectralResult r = lowest_eigenpairs(h, 2);
    Vector dyck = dyck_state(N / 2);

    std::cout << "N = " << N << ", dim = " << h.dim() << '\n'
              << "E0 = " << r.eigenvalues[0] << ", E1 = " << r.eigenvalues[1] << '\n'
              << "|<ground|dyck>| = " << std::abs(r.eigenvectors[0].dot(dyck)) << '\n'
              << "H|dyck> norm = " << h.apply(dyck).norm() << '\n';

    FormScalars scalars = check_form_equivalence(std::min(N, 6));
    std::cout << "measured form scalars: pauli = " << scalars.lambda_pauli
              << ", gate = " << scalars.lambda_fredkin << '\n';

    std::cout << "ground amplitudes (first Dyck words):\n";
    int shown = 0;
    for (std::int64_t code = 0; code < dyck.size() && shown < 5; ++code)
        if (dyck[code] != 0.0) {
            std::cout << "  " << to_string(SpinWord(N, static_cast<std::uint64_t>(code)))
                      << "  " << dyck[code] << '\n';
            ++shown;
        }
    return 0;
}
