#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/rational.hpp"

namespace mzv {

/// The two letters of the word algebra.
enum class Letter : char { X = 'x', Y = 'y' };

inline char letter_char(Letter l) { return static_cast<char>(l); }

/// A monomial in the noncommuting letters x, y. The empty word is the unit.
/// Ordering is degree-lexicographic with x < y, the canonical term order.
struct Word {
    std::string letters;  // each char is 'x' or 'y'

    Word() = default;
    explicit Word(std::string s) : letters(std::move(s)) {
        for (char c : letters)
            if (c != 'x' && c != 'y') throw Error("invalid letter in word: " + letters);
    }

    static Word empty() { return Word{}; }
    static Word run(Letter l, int n) { return Word(std::string(static_cast<size_t>(n), letter_char(l))); }

    size_t length() const { return letters.size(); }
    bool is_empty() const { return letters.empty(); }

    bool starts_with(Letter l) const { return !letters.empty() && letters.front() == letter_char(l); }
    bool ends_with(Letter l) const { return !letters.empty() && letters.back() == letter_char(l); }

    /// Empty, or starts with y and ends with x (the span Q + y h x).
    bool is_admissible() const {
        return letters.empty() || (letters.front() == 'y' && letters.back() == 'x');
    }

    Word concat(const Word& o) const { return Word(letters + o.letters); }
    Word prefix(size_t n) const { return Word(letters.substr(0, n)); }
    Word suffix_from(size_t i) const { return Word(letters.substr(i)); }

    /// Reverse the letter sequence (no letter swap).
    Word reversed() const { return Word(std::string(letters.rbegin(), letters.rend())); }

    int count_trailing(Letter l) const {
        int n = 0;
        for (auto it = letters.rbegin(); it != letters.rend() && *it == letter_char(l); ++it) ++n;
        return n;
    }
    int count_leading(Letter l) const {
        int n = 0;
        for (auto it = letters.begin(); it != letters.end() && *it == letter_char(l); ++it) ++n;
        return n;
    }

    /// Canonical text form; the empty word prints as "1".
    std::string str() const { return letters.empty() ? "1" : letters; }

    bool operator==(const Word& o) const = default;
    auto operator<=>(const Word& o) const {
        if (auto c = letters.size() <=> o.letters.size(); c != 0) return c;
        return letters <=> o.letters;
    }
};

/// A finite (possibly empty) sequence of positive integers.
struct Index {
    std::vector<int> parts;

    Index() = default;
    explicit Index(std::vector<int> p) : parts(std::move(p)) {
        for (int k : parts)
            if (k < 1) throw Error("index parts must be >= 1");
    }

    int weight() const {
        int w = 0;
        for (int k : parts) w += k;
        return w;
    }
    int depth() const { return static_cast<int>(parts.size()); }
    bool is_empty() const { return parts.empty(); }

    /// Empty, or last part > 1; exactly the convergence condition for zeta.
    bool is_admissible() const { return parts.empty() || parts.back() > 1; }

    Index reversed() const { return Index(std::vector<int>(parts.rbegin(), parts.rend())); }

    /// Canonical text form "(1,2,2)"; the empty index prints as "()".
    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }

    static Index parse(const std::string& s);

    bool operator==(const Index& o) const = default;
    auto operator<=>(const Index& o) const = default;
};

/// Formal Q-linear combination of indices. No stored zero coefficients.
struct IndexCombo {
    std::map<Index, Rational> terms;

    IndexCombo() = default;
    static IndexCombo single(Index k, Rational c = Rational(1)) {
        IndexCombo r;
        if (!coeff_is_zero(c)) r.terms.emplace(std::move(k), std::move(c));
        return r;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Index& k, const Rational& c) {
        if (coeff_is_zero(c)) return;
        auto [it, fresh] = terms.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms.erase(it);
        }
    }

    IndexCombo& operator+=(const IndexCombo& o) {
        for (const auto& [k, c] : o.terms) add_term(k, c);
        return *this;
    }
    IndexCombo& operator-=(const IndexCombo& o) {
        for (const auto& [k, c] : o.terms) add_term(k, -c);
        return *this;
    }
    friend IndexCombo operator+(IndexCombo a, const IndexCombo& b) { return a += b; }
    friend IndexCombo operator-(IndexCombo a, const IndexCombo& b) { return a -= b; }

    IndexCombo scaled(const Rational& c) const {
        IndexCombo r;
        if (coeff_is_zero(c)) return r;
        for (const auto& [k, v] : terms) r.terms.emplace(k, v * c);
        return r;
    }

    /// Append a part to every index in the combo.
    IndexCombo appended(int part) const {
        IndexCombo r;
        for (const auto& [k, c] : terms) {
            Index kk = k;
            kk.parts.push_back(part);
            r.terms.emplace(std::move(kk), c);
        }
        return r;
    }

    std::string str() const;

    bool operator==(const IndexCombo& o) const = default;
};

// --- index <-> word correspondence -----------------------------------------

/// (k_1,...,k_r) -> y x^{k_1-1} ... y x^{k_r-1}; the empty index maps to the
/// empty word.
inline Word index_to_word(const Index& k) {
    std::string s;
    for (int p : k.parts) {
        s += 'y';
        s.append(static_cast<size_t>(p - 1), 'x');
    }
    return Word(std::move(s));
}

/// w_k = y x^{k_1-1} ... y x^{k_r-1} y, the embedding into y*Q + y h y.
inline Word index_to_h0_word(const Index& k) { return index_to_word(k).concat(Word("y")); }

/// Exact inverse of index_to_word. Throws NotIndexShaped on a leading x.
inline Index word_to_index(const Word& w) {
    if (w.starts_with(Letter::X)) throw NotIndexShaped("word starts with x: " + w.str());
    std::vector<int> parts;
    for (char c : w.letters) {
        if (c == 'y')
            parts.push_back(1);
        else
            ++parts.back();
    }
    return Index(std::move(parts));
}

/// Inverse of index_to_h0_word; requires w to start and end with y.
inline Index h0_word_to_index(const Word& w) {
    if (!w.starts_with(Letter::Y) || !w.ends_with(Letter::Y))
        throw ShapeError("word is not of the form y...y: " + w.str());
    return word_to_index(w.prefix(w.length() - 1));
}

// --- dualities ---------------------------------------------------------------

/// Dual index: write k = ({1}^{a_1-1}, b_1+1, ..., {1}^{a_h-1}, b_h+1) and
/// return ({1}^{b_h-1}, a_h+1, ..., {1}^{b_1-1}, a_1+1). Requires k admissible.
inline Index dual_index(const Index& k) {
    if (!k.is_admissible()) throw NotAdmissible("dual of non-admissible index " + k.str());
    std::vector<std::pair<int, int>> ab;  // (a_i, b_i)
    size_t i = 0;
    while (i < k.parts.size()) {
        int a = 1;
        while (k.parts[i] == 1) {
            ++a;
            ++i;
        }
        ab.emplace_back(a, k.parts[i] - 1);
        ++i;
    }
    std::vector<int> parts;
    for (auto it = ab.rbegin(); it != ab.rend(); ++it) {
        parts.insert(parts.end(), static_cast<size_t>(it->second - 1), 1);
        parts.push_back(it->first + 1);
    }
    return Index(std::move(parts));
}

/// Hoffman dual: write the parts as sums of ones and swap plus signs and
/// commas. Requires k nonempty; weight-preserving involution with
/// depth(k) + depth(hdual(k)) = weight + 1.
inline Index hoffman_dual(const Index& k) {
    if (k.is_empty()) throw EmptyIndex("Hoffman dual of the empty index");
    const int w = k.weight();
    std::vector<bool> comma(static_cast<size_t>(w > 0 ? w - 1 : 0), false);
    int pos = 0;
    for (size_t i = 0; i < k.parts.size(); ++i) {
        pos += k.parts[i] - 1;  // within-part separators stay '+'
        if (i + 1 < k.parts.size()) comma[static_cast<size_t>(pos++)] = true;
    }
    std::vector<int> parts{1};
    for (size_t j = 0; j + 1 < static_cast<size_t>(w); ++j) {
        if (comma[j])
            ++parts.back();  // '+' after swap: extend the current part
        else
            parts.push_back(1);
    }
    return Index(std::move(parts));
}

// --- enumeration ---------------------------------------------------------------

/// All indices of the exact weight, in lexicographic order; optionally only
/// the admissible ones.
std::vector<Index> enumerate_indices(int weight, bool admissible_only);

/// All indices of weight 0..max_weight, lexicographic within each weight.
std::vector<Index> enumerate_indices_up_to(int max_weight, bool admissible_only);

/// All words of the exact length, in lexicographic order (x < y).
std::vector<Word> enumerate_words(int length);

/// Compositions of m into r nonnegative parts, lexicographic.
std::vector<std::vector<int>> compositions(int m, int r);

}  // namespace mzv
