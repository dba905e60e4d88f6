// Test entry point; main() comes from the Catch2 amalgamated unit.
#include <catch2/catch_amalgamated.hpp>
