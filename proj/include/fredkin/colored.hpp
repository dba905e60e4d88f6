#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "fredkin/enumeration.hpp"
#include "fredkin/word.hpp"

namespace fredkin {

/// A length-N word whose sites carry (direction, color in [0,k)). Encoded
/// site-major in base 2k with local digit dir*k + color (up = 0), so site 1
/// is the most significant digit and k=1 reduces bit-exactly to SpinWord.
struct ColoredWord {
    int n_sites = 0;
    int k = 1;
    std::uint64_t code = 0;

    ColoredWord() = default;
    ColoredWord(int n, int colors, std::uint64_t c) : n_sites(n), k(colors), code(c) {}

    std::uint64_t place(int j) const {
        std::uint64_t p = 1;
        for (int i = 0; i < n_sites - j; ++i) p *= static_cast<std::uint64_t>(2 * k);
        return p;
    }
    int digit(int j) const {
        return static_cast<int>(code / place(j) % static_cast<std::uint64_t>(2 * k));
    }
    bool down(int j) const { return digit(j) >= k; }
    bool up(int j) const { return !down(j); }
    int color(int j) const { return digit(j) % k; }

    ColoredWord with_digit(int j, int d) const {
        ColoredWord w = *this;
        std::uint64_t p = place(j);
        w.code = code - static_cast<std::uint64_t>(digit(j)) * p +
                 static_cast<std::uint64_t>(d) * p;
        return w;
    }

    SpinWord uncolored() const {
        SpinWord w(n_sites, 0);
        for (int j = 1; j <= n_sites; ++j)
            if (down(j)) w.bits |= std::uint64_t{1} << (n_sites - j);
        return w;
    }

    friend bool operator==(const ColoredWord& a, const ColoredWord& b) {
        return a.n_sites == b.n_sites && a.k == b.k && a.code == b.code;
    }
    friend bool operator<(const ColoredWord& a, const ColoredWord& b) {
        return a.code < b.code;
    }
};

inline std::uint64_t colored_dim(int N, int k) {
    std::uint64_t d = 1;
    for (int i = 0; i < N; ++i) d *= static_cast<std::uint64_t>(2 * k);
    return d;
}

/// Serialization: "(c" / ")c" tokens with the color as a decimal suffix,
/// e.g. "(0)0(1)1".
inline std::string to_string(const ColoredWord& w) {
    std::string s;
    for (int j = 1; j <= w.n_sites; ++j) {
        s += w.down(j) ? ')' : '(';
        s += std::to_string(w.color(j));
    }
    return s;
}

inline ColoredWord parse_colored_word(const std::string& s, int k) {
    ColoredWord w(0, k, 0);
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i++];
        if (c != '(' && c != ')')
            throw std::invalid_argument("parse_colored_word: expected '(' or ')'");
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("parse_colored_word: missing color");
        int color = std::stoi(s.substr(start, i - start));
        if (color < 0 || color >= k)
            throw std::invalid_argument("parse_colored_word: color out of range");
        w.code = w.code * static_cast<std::uint64_t>(2 * k) +
                 static_cast<std::uint64_t>((c == ')' ? k : 0) + color);
        ++w.n_sites;
    }
    return w;
}

/// Class label of a colored word: the uncolored (a,b) plus the colors of the
/// unmatched steps in site order.
struct ColoredClassId {
    int a = 0;
    std::vector<int> colors_a;
    int b = 0;
    std::vector<int> colors_b;

    friend bool operator==(const ColoredClassId& x, const ColoredClassId& y) {
        return x.a == y.a && x.b == y.b && x.colors_a == y.colors_a &&
               x.colors_b == y.colors_b;
    }
};

inline ColoredClassId classify_colored(const ColoredWord& w) {
    Matching m = match_parens(w.uncolored());
    ColoredClassId c;
    for (int j = 1; j <= w.n_sites; ++j) {
        if (m.matched(j)) continue;
        if (w.down(j)) {
            ++c.a;
            c.colors_a.push_back(w.color(j));
        } else {
            ++c.b;
            c.colors_b.push_back(w.color(j));
        }
    }
    return c;
}

/// true iff the direction word is Dyck and every matched pair is monochrome.
inline bool is_properly_colored(const ColoredWord& w) {
    SpinWord u = w.uncolored();
    if (!is_dyck(u)) return false;
    Matching m = match_parens(u);
    for (int j = 1; j <= w.n_sites; ++j) {
        int p = m.partner[static_cast<std::size_t>(j)];
        if (p > j && w.color(j) != w.color(p)) return false;
    }
    return true;
}

/// One colored Fredkin move per applicable window. A matched pair moves past
/// a bystander step; the pair's (up-color, down-color) and the bystander's
/// color are all preserved:
///   (up a, up b, down c) <-> (up b, down c, up a)     ["(()" <-> "()("]
///   (up b, down c, down a) <-> (down a, up b, down c) ["())" <-> ")()"]
inline std::vector<ColoredWord> colored_fredkin_neighbors(const ColoredWord& w,
                                                          bool periodic = false) {
    std::vector<ColoredWord> out;
    int N = w.n_sites, k = w.k;
    if (N < 3) return out;
    int n_windows = periodic ? N : N - 2;
    for (int j = 1; j <= n_windows; ++j) {
        int s[3];
        detail::window_sites(N, j, periodic, s);
        int d1 = w.digit(s[0]), d2 = w.digit(s[1]), d3 = w.digit(s[2]);
        bool dn1 = d1 >= k, dn2 = d2 >= k, dn3 = d3 >= k;
        ColoredWord y = w;
        if (!dn1 && !dn2 && dn3) {  // (up a, up b, down c) -> (up b, down c, up a)
            y = y.with_digit(s[0], d2).with_digit(s[1], d3).with_digit(s[2], d1);
        } else if (!dn1 && dn2 && !dn3) {  // (up b, down c, up a) -> (up a, up b, down c)
            y = y.with_digit(s[0], d3).with_digit(s[1], d1).with_digit(s[2], d2);
        } else if (!dn1 && dn2 && dn3) {  // (up b, down c, down a) -> (down a, up b, down c)
            y = y.with_digit(s[0], d3).with_digit(s[1], d1).with_digit(s[2], d2);
        } else if (dn1 && !dn2 && dn3) {  // (down a, up b, down c) -> (up b, down c, down a)
            y = y.with_digit(s[0], d2).with_digit(s[1], d3).with_digit(s[2], d1);
        } else {
            continue;
        }
        out.push_back(y);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Properly colored Dyck words of length 2n, ascending encoding order;
/// there are k^n * catalan(n) of them.
inline std::vector<ColoredWord> colored_dyck_words(int n, int k) {
    int N = 2 * n;
    require_basis_size(colored_dim(N, k), "colored_dyck_words");
    std::vector<ColoredWord> out;
    // Depth-first over sites with a stack of open colors; emits ascending
    // codes because up-digits (< k) sort before down-digits and colors are
    // tried in increasing order.
    std::vector<int> stack;
    auto rec = [&](auto&& self, int j, std::uint64_t code) -> void {
        if (j > N) {
            out.emplace_back(N, k, code);
            return;
        }
        int remaining = N - j + 1;
        if (static_cast<int>(stack.size()) < remaining)
            for (int c = 0; c < k; ++c) {
                stack.push_back(c);
                self(self, j + 1, code * (2 * k) + static_cast<std::uint64_t>(c));
                stack.pop_back();
            }
        if (!stack.empty() && static_cast<int>(stack.size()) <= remaining) {
            int c = stack.back();
            stack.pop_back();
            self(self, j + 1, code * (2 * k) + static_cast<std::uint64_t>(k + c));
            stack.push_back(c);
        }
    };
    rec(rec, 1, 0);
    return out;
}

}  // namespace fredkin
