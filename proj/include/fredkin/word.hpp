#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fredkin/common.hpp"

namespace fredkin {

/// A length-N word over { '(' = up, ')' = down }, bit-packed into an integer.
///
/// Encoding: site 1 is the most significant bit, '(' is bit 0 and ')' is
/// bit 1, so ascending integer order coincides with lexicographic order of
/// the ASCII strings and bit 0 is spin-up in the sigma^z = diag(1,-1)
/// convention.
struct SpinWord {
    int n_sites = 0;
    std::uint64_t bits = 0;

    SpinWord() = default;
    SpinWord(int n, std::uint64_t b) : n_sites(n), bits(b) {}

    /// true if site j (1-based) is a down-step ')'.
    bool down(int j) const { return (bits >> (n_sites - j)) & 1u; }
    bool up(int j) const { return !down(j); }

    char at(int j) const { return down(j) ? ')' : '('; }

    friend bool operator==(const SpinWord& a, const SpinWord& b) {
        return a.n_sites == b.n_sites && a.bits == b.bits;
    }
    friend bool operator<(const SpinWord& a, const SpinWord& b) {
        return a.n_sites != b.n_sites ? a.n_sites < b.n_sites : a.bits < b.bits;
    }
};

inline std::string to_string(const SpinWord& w) {
    std::string s(static_cast<std::size_t>(w.n_sites), '(');
    for (int j = 1; j <= w.n_sites; ++j)
        if (w.down(j)) s[static_cast<std::size_t>(j - 1)] = ')';
    return s;
}

inline SpinWord parse_word(const std::string& s) {
    SpinWord w(static_cast<int>(s.size()), 0);
    for (char c : s) {
        w.bits <<= 1;
        if (c == ')')
            w.bits |= 1u;
        else if (c != '(')
            throw std::invalid_argument("parse_word: invalid character in \"" + s + "\"");
    }
    return w;
}

/// Stack matching of parentheses. partner[j] (1-based) is the matched site,
/// or 0 if site j is unmatched. partner is an involution; partner[i] > i
/// implies word[i] = '(' , and matched pairs never cross.
struct Matching {
    std::vector<int> partner;  // size n_sites + 1, index 0 unused

    int n_sites() const { return static_cast<int>(partner.size()) - 1; }
    bool matched(int j) const { return partner[static_cast<std::size_t>(j)] != 0; }
};

inline Matching match_parens(const SpinWord& w) {
    Matching m;
    m.partner.assign(static_cast<std::size_t>(w.n_sites) + 1, 0);
    std::vector<int> stack;
    for (int j = 1; j <= w.n_sites; ++j) {
        if (w.up(j)) {
            stack.push_back(j);
        } else if (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            m.partner[static_cast<std::size_t>(i)] = j;
            m.partner[static_cast<std::size_t>(j)] = i;
        }
    }
    return m;
}

/// Fredkin equivalence class label: a = unmatched down-steps (initial path
/// height), b = unmatched up-steps (final path height).
struct ClassId {
    int a = 0;
    int b = 0;
    friend bool operator==(const ClassId& x, const ClassId& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const ClassId& x, const ClassId& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

inline ClassId classify(const SpinWord& w) {
    // One pass: unmatched downs are the downs hit at height 0.
    int a = 0, h = 0;
    for (int j = 1; j <= w.n_sites; ++j) {
        if (w.up(j)) {
            ++h;
        } else if (h > 0) {
            --h;
        } else {
            ++a;
        }
    }
    return ClassId{a, h};
}

inline bool is_dyck(const SpinWord& w) {
    ClassId c = classify(w);
    return c.a == 0 && c.b == 0;
}

inline bool class_nonempty(const ClassId& c, int N) {
    return c.a >= 0 && c.b >= 0 && c.a + c.b <= N && (N - c.a - c.b) % 2 == 0;
}

/// Canonical class representative: k matched "()" pairs, then a downs, then
/// b ups, with 2k + a + b = N.
inline SpinWord standard_form(const ClassId& c, int N) {
    if (!class_nonempty(c, N))
        throw EmptyClass("standard_form: class (" + std::to_string(c.a) + "," +
                         std::to_string(c.b) + ") is empty at N=" + std::to_string(N));
    int pairs = (N - c.a - c.b) / 2;
    std::string s;
    s.reserve(static_cast<std::size_t>(N));
    for (int i = 0; i < pairs; ++i) s += "()";
    s.append(static_cast<std::size_t>(c.a), ')');
    s.append(static_cast<std::size_t>(c.b), '(');
    return parse_word(s);
}

/// The C_{a,b} -> C_{0,a+b} bijection: every unmatched down becomes an up.
inline SpinWord flip_bijection(const SpinWord& w) {
    Matching m = match_parens(w);
    SpinWord out = w;
    for (int j = 1; j <= w.n_sites; ++j)
        if (w.down(j) && !m.matched(j))
            out.bits &= ~(std::uint64_t{1} << (w.n_sites - j));
    return out;
}

/// Path height after the first j steps (height before site 1 is classify().a).
inline int height_after(const SpinWord& w, int j) {
    int h = classify(w).a;
    for (int i = 1; i <= j; ++i) h += w.up(i) ? 1 : -1;
    return h;
}

}  // namespace fredkin
