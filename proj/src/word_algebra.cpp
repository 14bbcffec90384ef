#include "mzv/word_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <unordered_map>

namespace mzv {

// --- parsing / printing ----------------------------------------------------

Index Index::parse(const std::string& s) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i >= s.size() || s[i] != '(') throw Error("index must start with '(': " + s);
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < s.size() && s[i] == ')') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw Error("expected integer in index: " + s);
            parts.push_back(std::stoi(s.substr(i, j - i)));
            i = j;
            skip_ws();
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            if (i < s.size() && s[i] == ')') {
                ++i;
                break;
            }
            throw Error("expected ',' or ')' in index: " + s);
        }
    }
    skip_ws();
    if (i != s.size()) throw Error("trailing characters after index: " + s);
    return Index(std::move(parts));
}

std::string IndexCombo::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms) {
        if (!s.empty()) s += " + ";
        std::string cs = c.get_str();
        s += (sgn(c) < 0 ? "(" + cs + ")" : cs) + "*" + k.str();
    }
    return s;
}

// --- enumeration -------------------------------------------------------------

static void compose_rec(int remaining, std::vector<int>& cur, std::vector<Index>& out) {
    if (remaining == 0) {
        out.emplace_back(Index(cur));
        return;
    }
    for (int p = 1; p <= remaining; ++p) {
        cur.push_back(p);
        compose_rec(remaining - p, cur, out);
        cur.pop_back();
    }
}

std::vector<Index> enumerate_indices(int weight, bool admissible_only) {
    std::vector<Index> all;
    std::vector<int> cur;
    compose_rec(weight, cur, all);
    if (!admissible_only) return all;
    std::vector<Index> adm;
    for (auto& k : all)
        if (k.is_admissible()) adm.push_back(std::move(k));
    return adm;
}

std::vector<Index> enumerate_indices_up_to(int max_weight, bool admissible_only) {
    std::vector<Index> out;
    for (int w = 0; w <= max_weight; ++w)
        for (auto& k : enumerate_indices(w, admissible_only)) out.push_back(std::move(k));
    return out;
}

std::vector<Word> enumerate_words(int length) {
    std::vector<Word> out;
    out.reserve(1u << length);
    for (uint64_t bits = 0; bits < (1ull << length); ++bits) {
        std::string s(static_cast<size_t>(length), 'x');
        for (int i = 0; i < length; ++i)
            if (bits & (1ull << i)) s[static_cast<size_t>(i)] = 'y';
        out.emplace_back(Word(std::move(s)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> compositions(int m, int r) {
    std::vector<std::vector<int>> out;
    if (r == 0) {
        if (m == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(static_cast<size_t>(r), 0);
    // lexicographic enumeration of weak compositions
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == r - 1) {
            cur[static_cast<size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, m);
    return out;
}

// --- shuffle -------------------------------------------------------------------

static std::map<Word, int64_t> shuffle_words_raw(const Word& u, const Word& v) {
    std::map<Word, int64_t> r;
    if (u.is_empty()) {
        r[v] = 1;
        return r;
    }
    if (v.is_empty()) {
        r[u] = 1;
        return r;
    }
    const Word u1 = u.suffix_from(1), v1 = v.suffix_from(1);
    for (const auto& [w, m] : shuffle_words(u1, v)) r[Word(u.letters.substr(0, 1) + w.letters)] += m;
    for (const auto& [w, m] : shuffle_words(u, v1)) r[Word(v.letters.substr(0, 1) + w.letters)] += m;
    return r;
}

const std::map<Word, int64_t>& shuffle_words(const Word& u, const Word& v) {
    static std::unordered_map<std::string, std::map<Word, int64_t>> cache;
    static std::mutex mu;
    // shuffle is commutative; normalize the key
    const Word* a = &u;
    const Word* b = &v;
    if (*b < *a) std::swap(a, b);
    std::string key = a->letters + "." + b->letters;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto val = shuffle_words_raw(*a, *b);
    std::lock_guard lock(mu);
    return cache.emplace(std::move(key), std::move(val)).first->second;
}

NcPolyQ shuffle(const NcPolyQ& p, const NcPolyQ& q) { return shuffle<Rational>(p, q); }

NcPolyQ shuffle_power(const NcPolyQ& p, int n) {
    NcPolyQ r = unit_poly();
    for (int i = 0; i < n; ++i) r = shuffle(r, p);
    return r;
}

// --- harmonic product ------------------------------------------------------------

IndexCombo harmonic_index(const Index& k, const Index& l) {
    if (k.is_empty()) return IndexCombo::single(l);
    if (l.is_empty()) return IndexCombo::single(k);
    Index k1(std::vector<int>(k.parts.begin(), k.parts.end() - 1));
    Index l1(std::vector<int>(l.parts.begin(), l.parts.end() - 1));
    IndexCombo r = harmonic_index(k1, l).appended(k.parts.back());
    r += harmonic_index(k, l1).appended(l.parts.back());
    r += harmonic_index(k1, l1).appended(k.parts.back() + l.parts.back());
    return r;
}

IndexCombo harmonic_combo(const IndexCombo& p, const IndexCombo& q) {
    IndexCombo r;
    for (const auto& [k, ck] : p.terms)
        for (const auto& [l, cl] : q.terms) r += harmonic_index(k, l).scaled(ck * cl);
    return r;
}

// --- generating maps ---------------------------------------------------------------

GenMapName gen_map_from_string(const std::string& name) {
    if (name == "sigma") return GenMapName::Sigma;
    if (name == "rho") return GenMapName::Rho;
    if (name == "sigma_tilde") return GenMapName::SigmaTilde;
    if (name == "rho_tilde") return GenMapName::RhoTilde;
    throw Error("unknown generating map: " + name);
}

NcPolyS geometric_series_word(SeriesRing ring, Letter l, Var var, int sign) {
    NcPolyS r;
    Rational c(1);
    for (int a = 0; a <= ring.maxdeg; ++a) {
        r.add_term(Word::run(l, a), SeriesQ::monomial(ring, Expo::unit(var, a), c));
        c *= sign;
    }
    return r;
}

NcPolyS geometric_series_word(Letter l, Var var, int sign, int maxdeg) {
    return geometric_series_word(SeriesRing{VarSet{var}, maxdeg}, l, var, sign);
}

// sigma on a single word: product over letters of x -> x, y -> y(1-xT)^{-1}.
static NcPolyS sigma_word(const Word& w, SeriesRing ring) {
    NcPolyS acc = NcPolyS::single(Word::empty(), SeriesQ(ring, Rational(1)));
    const NcPolyS ygeo =
        NcPolyS::single(Word("y"), SeriesQ(ring, Rational(1))) * geometric_series_word(ring, Letter::X, Var::T, +1);
    for (char ch : w.letters) {
        if (ch == 'x')
            acc *= NcPolyS::single(Word("x"), SeriesQ(ring, Rational(1)));
        else
            acc *= ygeo;
    }
    return acc;
}

static NcPolyS sigma_poly(const NcPolyS& p, SeriesRing ring) {
    NcPolyS r;
    for (const auto& [w, c] : p.terms()) r += sigma_word(w, ring).scaled(c);
    return r;
}

NcPolyS apply_generating_map(GenMapName name, const NcPolyS& p, SeriesRing ring) {
    if (!ring.vars.has(Var::T)) throw VariableMismatch("generating maps require T in the ring");
    switch (name) {
        case GenMapName::Sigma:
            return sigma_poly(p, ring);
        case GenMapName::Rho:
            return tau(sigma_poly(tau(p), ring));
        case GenMapName::SigmaTilde: {
            NcPolyS one_minus_xT;
            one_minus_xT.add_term(Word::empty(), SeriesQ(ring, Rational(1)));
            one_minus_xT.add_term(Word("x"), SeriesQ::monomial(ring, Expo::unit(Var::T, 1), Rational(-1)));
            return sigma_poly(p, ring) * one_minus_xT;
        }
        case GenMapName::RhoTilde:
            return tau(sigma_poly(tau(p), ring)) * geometric_series_word(ring, Letter::Y, Var::T, +1);
    }
    throw Error("unreachable");
}

NcPolyS apply_generating_map(GenMapName name, const NcPolyQ& p, int maxdeg) {
    SeriesRing ring{VarSet{Var::T}, maxdeg};
    return apply_generating_map(name, lift_to_series(p, ring), ring);
}

}  // namespace mzv
