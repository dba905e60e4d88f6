#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fredkin {

inline constexpr const char* version = "1.0.0";

struct EmptyClass : std::runtime_error {
    explicit EmptyClass(const std::string& what) : std::runtime_error(what) {}
};
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct SiteOutOfRange : std::runtime_error {
    explicit SiteOutOfRange(const std::string& what) : std::runtime_error(what) {}
};
struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct ConvergenceFailure : std::runtime_error {
    explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};
struct CutOutOfRange : std::runtime_error {
    explicit CutOutOfRange(const std::string& what) : std::runtime_error(what) {}
};
struct NotNormalized : std::runtime_error {
    explicit NotNormalized(const std::string& what) : std::runtime_error(what) {}
};
struct FormsInequivalent : std::runtime_error {
    explicit FormsInequivalent(const std::string& what) : std::runtime_error(what) {}
};
struct MismatchDetected : std::runtime_error {
    explicit MismatchDetected(const std::string& what) : std::runtime_error(what) {}
};

// Basis-size cap for exhaustive enumeration and dense-basis construction,
// expressed in bits: caps basis sizes at 2^cap_bits. Overridable through the
// FREDKIN_CAP_BITS environment variable (read once per process).
inline int cap_bits() {
    static const int bits = [] {
        if (const char* env = std::getenv("FREDKIN_CAP_BITS")) {
            int v = std::atoi(env);
            if (v >= 1 && v <= 62) return v;
        }
        return 28;
    }();
    return bits;
}

inline std::uint64_t basis_cap() { return std::uint64_t{1} << cap_bits(); }

inline void require_basis_size(std::uint64_t dim, const char* where) {
    if (dim > basis_cap())
        throw CapExceeded(std::string(where) + ": basis size " + std::to_string(dim) +
                          " exceeds cap 2^" + std::to_string(cap_bits()));
}

}  // namespace fredkin
