#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "mzv/errors.hpp"
#include "mzv/rational.hpp"

namespace mzv {

/// Formal series variables. All series in this project live in a subset of
/// {A, B, T}.
enum class Var : uint8_t { A = 0, B = 1, T = 2 };

inline char var_char(Var v) { return "ABT"[static_cast<int>(v)]; }

struct VarSet {
    uint8_t mask = 0;

    constexpr VarSet() = default;
    constexpr VarSet(std::initializer_list<Var> vs) {
        for (Var v : vs) mask = static_cast<uint8_t>(mask | (1u << static_cast<int>(v)));
    }
    bool has(Var v) const { return mask & (1u << static_cast<int>(v)); }
    bool operator==(const VarSet&) const = default;

    std::string str() const {
        std::string s;
        for (Var v : {Var::A, Var::B, Var::T})
            if (has(v)) s += var_char(v);
        return s;
    }
};

/// Exponent vector over (A, B, T).
struct Expo {
    std::array<uint8_t, 3> e{0, 0, 0};

    Expo() = default;
    Expo(int a, int b, int t)
        : e{static_cast<uint8_t>(a), static_cast<uint8_t>(b), static_cast<uint8_t>(t)} {}
    static Expo unit(Var v, int k) {
        Expo x;
        x.e[static_cast<int>(v)] = static_cast<uint8_t>(k);
        return x;
    }

    int operator[](Var v) const { return e[static_cast<int>(v)]; }
    int total() const { return e[0] + e[1] + e[2]; }
    Expo operator+(const Expo& o) const {
        Expo r;
        for (int i = 0; i < 3; ++i) r.e[i] = static_cast<uint8_t>(e[i] + o.e[i]);
        return r;
    }
    bool within(VarSet vars) const {
        for (int i = 0; i < 3; ++i)
            if (e[i] && !vars.has(static_cast<Var>(i))) return false;
        return true;
    }
    bool operator==(const Expo&) const = default;

    std::string str() const {  // "A^2*T"; "" for the constant monomial
        std::string s;
        for (int i = 0; i < 3; ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += '*';
            s += var_char(static_cast<Var>(i));
            if (e[i] > 1) s += '^' + std::to_string(int(e[i]));
        }
        return s;
    }
};

/// Canonical monomial order: total degree, then lexicographic in (A, B, T).
struct ExpoLess {
    bool operator()(const Expo& a, const Expo& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.e < b.e;
    }
};

/// Ring instance descriptor: the active variable subset and the total-degree
/// truncation bound. Two series interoperate only when their rings agree.
struct SeriesRing {
    VarSet vars;
    int maxdeg = 0;
    bool operator==(const SeriesRing&) const = default;
    std::string str() const { return "Q[[" + vars.str() + "]]/deg>" + std::to_string(maxdeg); }
};

/// A multivariate power series in a subset of {A,B,T}, truncated at a total
/// degree. Multiplication drops overflow terms. C is the coefficient type
/// (exact rationals or big-complex numbers).
template <class C>
class TruncSeries {
    SeriesRing ring_;
    std::map<Expo, C, ExpoLess> terms_;

    void check_ring(const TruncSeries& o) const {
        if (ring_.vars != o.ring_.vars)
            throw VariableMismatch("series variable sets differ: " + ring_.vars.str() + " vs " +
                                   o.ring_.vars.str());
        if (ring_.maxdeg != o.ring_.maxdeg)
            throw RingMismatch("series truncation degrees differ: " + std::to_string(ring_.maxdeg) +
                               " vs " + std::to_string(o.ring_.maxdeg));
    }

  public:
    explicit TruncSeries(SeriesRing ring) : ring_(ring) {}
    TruncSeries(SeriesRing ring, C constant) : ring_(ring) { add_term(Expo{}, constant); }

    static TruncSeries monomial(SeriesRing ring, Expo ex, C coeff) {
        TruncSeries s(ring);
        s.add_term(ex, coeff);
        return s;
    }

    const SeriesRing& ring() const { return ring_; }
    const std::map<Expo, C, ExpoLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Expo& ex, const C& c) {
        if (coeff_is_zero(c)) return;
        if (ex.total() > ring_.maxdeg) return;
        if (!ex.within(ring_.vars))
            throw VariableMismatch("monomial " + ex.str() + " outside ring " + ring_.str());
        auto [it, fresh] = terms_.emplace(ex, c);
        if (!fresh) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    /// Stored coefficient, or zero.
    C coeff(const Expo& ex) const {
        auto it = terms_.find(ex);
        return it == terms_.end() ? C(0) : it->second;
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        check_ring(o);
        for (const auto& [ex, c] : o.terms_) add_term(ex, c);
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check_ring(o);
        for (const auto& [ex, c] : o.terms_) add_term(ex, -c);
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    TruncSeries operator-() const {
        TruncSeries r(ring_);
        for (const auto& [ex, c] : terms_) r.terms_.emplace(ex, -c);
        return r;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_ring(b);
        TruncSeries r(a.ring_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                if (ea.total() + eb.total() > a.ring_.maxdeg) continue;
                r.add_term(ea + eb, ca * cb);
            }
        }
        return r;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    TruncSeries scaled(const C& c) const {
        TruncSeries r(ring_);
        if (coeff_is_zero(c)) return r;
        for (const auto& [ex, v] : terms_) r.add_term(ex, v * c);
        return r;
    }

    /// Drop all terms of total degree > d (d <= maxdeg); the ring keeps its
    /// original truncation bound.
    TruncSeries truncated(int d) const {
        TruncSeries r(ring_);
        for (const auto& [ex, c] : terms_)
            if (ex.total() <= d) r.terms_.emplace(ex, c);
        return r;
    }

    /// Explicit embedding into a larger ring (superset variables and/or equal
    /// degree). The inverse of the "no silent coercion" rule.
    TruncSeries extended(SeriesRing ring) const {
        if ((ring.vars.mask & ring_.vars.mask) != ring_.vars.mask || ring.maxdeg != ring_.maxdeg)
            throw VariableMismatch("cannot extend " + ring_.str() + " to " + ring.str());
        TruncSeries r(ring);
        for (const auto& [ex, c] : terms_) r.terms_.emplace(ex, c);
        return r;
    }

    /// Substitute 0 for every variable outside `keep` (used for A=B=0 slices).
    TruncSeries restricted(VarSet keep) const {
        TruncSeries r(SeriesRing{keep, ring_.maxdeg});
        for (const auto& [ex, c] : terms_)
            if (ex.within(keep)) r.add_term(ex, c);
        return r;
    }

    bool operator==(const TruncSeries& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

    /// Canonical text form, e.g. "1 - 2*T + 1/3*A*T".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [ex, c] : terms_) {
            std::string cs = coeff_str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
            std::string mono = ex.str();
            if (mono.empty())
                s += cs;
            else if (cs == "1")
                s += mono;
            else
                s += cs + "*" + mono;
        }
        return s;
    }

  private:
    static std::string coeff_str(const Rational& q) { return q.get_str(); }
    template <class D>
    static std::string coeff_str(const D& c) {
        return c.str();
    }
};

using SeriesQ = TruncSeries<Rational>;

}  // namespace mzv
