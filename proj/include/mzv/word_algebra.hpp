#pragma once

#include <cstdint>
#include <vector>

#include "mzv/ncpoly.hpp"

namespace mzv {

inline Rational scale_by_rational(const Rational& c, const Rational& m) { return c * m; }
inline SeriesQ scale_by_rational(const SeriesQ& c, const Rational& m) { return c.scaled(m); }

/// Shuffle product of two words, as a word -> multiplicity table.
/// Memoized; multiplicities are exact.
const std::map<Word, int64_t>& shuffle_words(const Word& u, const Word& v);

/// Bilinear shuffle product. The empty word is the unit.
template <class C>
NcPoly<C> shuffle(const NcPoly<C>& p, const NcPoly<C>& q) {
    NcPoly<C> r;
    for (const auto& [u, cu] : p.terms()) {
        for (const auto& [v, cv] : q.terms()) {
            C c = cu * cv;
            if (coeff_is_zero(c)) continue;
            for (const auto& [w, mult] : shuffle_words(u, v))
                r.add_term(w, scale_by_rational(c, Rational(static_cast<long>(mult))));
        }
    }
    return r;
}

NcPolyQ shuffle(const NcPolyQ& p, const NcPolyQ& q);

/// n-fold shuffle power; shuffle_power(p, 0) is the unit.
NcPolyQ shuffle_power(const NcPolyQ& p, int n);

/// Harmonic (quasi-shuffle) product of indices. The recursion peels the last
/// part; the merged part sums the two trailing parts. The empty index is the
/// unit.
IndexCombo harmonic_index(const Index& k, const Index& l);

/// Bilinear extension to combos.
IndexCombo harmonic_combo(const IndexCombo& p, const IndexCombo& q);

/// The anti-automorphism tau: reverse each word and swap x <-> y.
template <class C>
NcPoly<C> tau(const NcPoly<C>& p) {
    NcPoly<C> r;
    for (const auto& [w, c] : p.terms()) {
        std::string s(w.letters.rbegin(), w.letters.rend());
        for (char& ch : s) ch = (ch == 'x') ? 'y' : 'x';
        r.add_term(Word(std::move(s)), c);
    }
    return r;
}

inline Word tau_word(const Word& w) {
    std::string s(w.letters.rbegin(), w.letters.rend());
    for (char& ch : s) ch = (ch == 'x') ? 'y' : 'x';
    return Word(std::move(s));
}

/// The automorphism phi: x -> x + y, y -> -y, fully expanded. An involution.
template <class C>
NcPoly<C> phi(const NcPoly<C>& p) {
    NcPoly<C> r;
    for (const auto& [w, c] : p.terms()) {
        // expand the product of per-letter images; sign tracks the (-y)'s
        std::vector<std::pair<Word, int>> cur{{Word::empty(), 1}};
        for (char ch : w.letters) {
            std::vector<std::pair<Word, int>> next;
            next.reserve(cur.size() * 2);
            for (const auto& [u, s] : cur) {
                if (ch == 'x') {
                    next.emplace_back(u.concat(Word("x")), s);
                    next.emplace_back(u.concat(Word("y")), s);
                } else {
                    next.emplace_back(u.concat(Word("y")), -s);
                }
            }
            cur = std::move(next);
        }
        for (const auto& [u, s] : cur) r.add_term(u, s > 0 ? c : -c);
    }
    return r;
}

/// Symmetric harmonic product. Each operand term must be of the shape
/// x^a w x^b with w in y*Q + y h y; on such generators
///   x^{a1} w_k x^{b1}  sst  x^{a2} w_l x^{b2}  =  x^{a1+a2} w_{k*l} x^{b1+b2}.
/// Throws ShapeError otherwise (in particular on the unit word).
template <class C>
NcPoly<C> sym_harmonic(const NcPoly<C>& p, const NcPoly<C>& q) {
    struct Split {
        int a, b;
        Index mid;
    };
    auto split = [](const Word& w) -> Split {
        int a = w.count_leading(Letter::X);
        if (a == static_cast<int>(w.length()))
            throw ShapeError("sym_harmonic operand term not of shape x^a (y...y) x^b: " + w.str());
        int b = w.count_trailing(Letter::X);
        Word mid = Word(w.letters.substr(static_cast<size_t>(a),
                                         w.length() - static_cast<size_t>(a) - static_cast<size_t>(b)));
        return Split{a, b, h0_word_to_index(mid)};
    };
    NcPoly<C> r;
    for (const auto& [u, cu] : p.terms()) {
        Split su = split(u);
        for (const auto& [v, cv] : q.terms()) {
            Split sv = split(v);
            C c = cu * cv;
            if (coeff_is_zero(c)) continue;
            Word xa = Word::run(Letter::X, su.a + sv.a);
            Word xb = Word::run(Letter::X, su.b + sv.b);
            for (const auto& [k, m] : harmonic_index(su.mid, sv.mid).terms) {
                Word w = xa.concat(index_to_h0_word(k)).concat(xb);
                r.add_term(w, scale_by_rational(c, m));
            }
        }
    }
    return r;
}

// --- generating maps -----------------------------------------------------------

enum class GenMapName { Sigma, Rho, SigmaTilde, RhoTilde };

GenMapName gen_map_from_string(const std::string& name);

/// sigma(x)=x, sigma(y)=y(1-xT)^{-1}; rho = tau . sigma . tau;
/// sigma~(w) = sigma(w)(1-xT); rho~(w) = rho(w)(1-yT)^{-1}.
/// All results are exact through total degree ring.maxdeg; higher terms drop.
/// The ring must contain T.
NcPolyS apply_generating_map(GenMapName name, const NcPolyS& p, SeriesRing ring);

/// Convenience form over plain rational polynomials: series in T only.
NcPolyS apply_generating_map(GenMapName name, const NcPolyQ& p, int maxdeg);

/// sum_{a=0}^{ring.maxdeg} sign^a . l^a . var^a, e.g. 1/(1-xA) or 1/(1+yT).
NcPolyS geometric_series_word(SeriesRing ring, Letter l, Var var, int sign);
NcPolyS geometric_series_word(Letter l, Var var, int sign, int maxdeg);

}  // namespace mzv
