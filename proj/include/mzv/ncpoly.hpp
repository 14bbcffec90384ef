#pragma once

#include <map>
#include <string>

#include "mzv/series.hpp"
#include "mzv/word.hpp"

namespace mzv {

/// A finite linear combination of words with coefficients in a ring C
/// (exact rationals or truncated series). No stored zero coefficients;
/// terms are kept in the canonical degree-lex order.
template <class C>
class NcPoly {
    std::map<Word, C> terms_;

  public:
    NcPoly() = default;

    static NcPoly zero() { return NcPoly(); }
    static NcPoly single(Word w, C c) {
        NcPoly p;
        p.add_term(std::move(w), std::move(c));
        return p;
    }

    const std::map<Word, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const Word& w, const C& c) {
        if (coeff_is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    /// Stored coefficient, or nullptr when the word is absent.
    const C* find(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? nullptr : &it->second;
    }

    NcPoly& operator+=(const NcPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    NcPoly operator-() const {
        NcPoly r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    NcPoly scaled(const C& c) const {
        NcPoly r;
        if (coeff_is_zero(c)) return r;
        for (const auto& [w, v] : terms_) r.add_term(w, v * c);
        return r;
    }

    /// Concatenation product of the free algebra.
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
        NcPoly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa.concat(wb), ca * cb);
        return r;
    }
    NcPoly& operator*=(const NcPoly& o) { return *this = *this * o; }

    bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

    /// Canonical text form "3/2*yxy + (-1)*yyx"; multi-term series
    /// coefficients are parenthesized.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            std::string cs = coeff_text(c);
            if (w.is_empty())
                s += cs;
            else
                s += cs + "*" + w.letters;
        }
        return s;
    }

  private:
    static std::string coeff_text(const Rational& q) {
        std::string cs = q.get_str();
        return sgn(q) < 0 ? "(" + cs + ")" : cs;
    }
    template <class D>
    static std::string coeff_text(const TruncSeries<D>& c) {
        if (c.terms().size() == 1 && c.terms().begin()->first == Expo{})
            return coeff_text_scalar(c.terms().begin()->second);
        return "(" + c.str() + ")";
    }
    static std::string coeff_text_scalar(const Rational& q) { return coeff_text(q); }
    template <class D>
    static std::string coeff_text_scalar(const D& v) {
        return "(" + v.str() + ")";
    }
};

using NcPolyQ = NcPoly<Rational>;
using NcPolyS = NcPoly<SeriesQ>;

inline NcPolyQ unit_poly() { return NcPolyQ::single(Word::empty(), Rational(1)); }

/// Lift a rational word polynomial into series coefficients over `ring`.
inline NcPolyS lift_to_series(const NcPolyQ& p, SeriesRing ring) {
    NcPolyS r;
    for (const auto& [w, c] : p.terms()) r.add_term(w, SeriesQ(ring, c));
    return r;
}

}  // namespace mzv
