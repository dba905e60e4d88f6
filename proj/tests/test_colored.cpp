#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "fredkin/colored.hpp"
#include "fredkin/counting.hpp"
#include "fredkin/enumeration.hpp"
#include "fredkin/word.hpp"

using namespace fredkin;

TEST_CASE("colored word accessors and round trip", "[colored]") {
    ColoredWord w = parse_colored_word("(0)0(1)1", 2);
    REQUIRE(w.n_sites == 4);
    REQUIRE(w.up(1));
    REQUIRE(w.down(2));
    REQUIRE(w.color(1) == 0);
    REQUIRE(w.color(3) == 1);
    REQUIRE(w.color(4) == 1);
    REQUIRE(to_string(w) == "(0)0(1)1");
    for (int k = 1; k <= 3; ++k)
        for (std::uint64_t code = 0; code < colored_dim(3, k); ++code) {
            ColoredWord c(3, k, code);
            REQUIRE(parse_colored_word(to_string(c), k) == c);
        }
}

TEST_CASE("k=1 encoding reduces to the uncolored one", "[colored]") {
    for (int N = 1; N <= 8; ++N) {
        REQUIRE(colored_dim(N, 1) == (std::uint64_t{1} << N));
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << N); ++x) {
            ColoredWord c(N, 1, x);
            REQUIRE(c.uncolored().bits == x);
            for (int j = 1; j <= N; ++j) REQUIRE(c.down(j) == SpinWord(N, x).down(j));
        }
    }
}

TEST_CASE("properly colored Dyck words are counted by k^n Cat(n)", "[colored]") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 5; ++n) {
            std::vector<ColoredWord> words = colored_dyck_words(n, k);
            std::uint64_t expect = 1;
            for (int i = 0; i < n; ++i) expect *= static_cast<std::uint64_t>(k);
            expect *= catalan(n);
            REQUIRE(words.size() == expect);
            REQUIRE(std::is_sorted(words.begin(), words.end()));
            for (const ColoredWord& w : words) REQUIRE(is_properly_colored(w));
        }
}

TEST_CASE("proper coloring needs matched colors on matched pairs", "[colored]") {
    REQUIRE(is_properly_colored(parse_colored_word("(0)0", 2)));
    REQUIRE(is_properly_colored(parse_colored_word("(1(0)0)1", 2)));
    REQUIRE_FALSE(is_properly_colored(parse_colored_word("(0)1", 2)));
    REQUIRE_FALSE(is_properly_colored(parse_colored_word(")0(0", 2)));
    // exhaustive: proper coloring = Dyck shape + equal pair colors
    int k = 2, N = 4;
    std::set<std::uint64_t> proper;
    for (const ColoredWord& w : colored_dyck_words(N / 2, k)) proper.insert(w.code);
    for (std::uint64_t code = 0; code < colored_dim(N, k); ++code)
        REQUIRE(is_properly_colored(ColoredWord(N, k, code)) == (proper.count(code) > 0));
}

TEST_CASE("colored classification matches the uncolored shape", "[colored]") {
    for (std::uint64_t code = 0; code < colored_dim(4, 2); ++code) {
        ColoredWord w(4, 2, code);
        ColoredClassId c = classify_colored(w);
        ClassId u = classify(w.uncolored());
        REQUIRE(static_cast<int>(c.colors_a.size()) == u.a);
        REQUIRE(static_cast<int>(c.colors_b.size()) == u.b);
    }
}

TEST_CASE("colored moves are symmetric and shape-consistent", "[colored]") {
    for (int k = 1; k <= 2; ++k)
        for (std::uint64_t code = 0; code < colored_dim(5, k); ++code) {
            ColoredWord w(5, k, code);
            for (const ColoredWord& nb : colored_fredkin_neighbors(w)) {
                // the move is its own inverse
                auto back = colored_fredkin_neighbors(nb);
                REQUIRE(std::find(back.begin(), back.end(), w) != back.end());
                // the uncolored projection moves by an uncolored Fredkin move
                auto shape = fredkin_neighbors(w.uncolored());
                REQUIRE(std::find_if(shape.begin(), shape.end(), [&](const SpinWord& s) {
                            return s.bits == nb.uncolored().bits;
                        }) != shape.end());
                // letter colors are transported, never created or destroyed
                std::multiset<int> before, after;
                for (int j = 1; j <= 5; ++j) {
                    before.insert(w.digit(j));
                    after.insert(nb.digit(j));
                }
                REQUIRE(before == after);
            }
        }
}

TEST_CASE("colored moves preserve proper coloring", "[colored]") {
    for (int n = 1; n <= 3; ++n)
        for (const ColoredWord& w : colored_dyck_words(n, 2))
            for (const ColoredWord& nb : colored_fredkin_neighbors(w))
                REQUIRE(is_properly_colored(nb));
}

TEST_CASE("k=1 colored moves equal uncolored moves", "[colored]") {
    for (int N = 3; N <= 8; ++N)
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << N); ++x) {
            auto colored = colored_fredkin_neighbors(ColoredWord(N, 1, x));
            auto plain = fredkin_neighbors(SpinWord(N, x));
            REQUIRE(colored.size() == plain.size());
            for (std::size_t i = 0; i < plain.size(); ++i)
                REQUIRE(colored[i].code == plain[i].bits);
        }
}
