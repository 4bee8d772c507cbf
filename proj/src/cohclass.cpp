#include "coh/cohclass.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coh {

int word_degree(const SpaceSpec& sp, const Word& w) {
    int d = 0;
    for (Letter l : w) d += sp.degreeOf(l);
    return d;
}

int word_parity(const SpaceSpec& sp, const Word& w) {
    int p = 0;
    for (Letter l : w)
        if (sp.isOdd(l)) p ^= 1;
    return p;
}

CohClass::CohClass(SpaceSpec space, int arity) : space_(space), arity_(arity) {
    if (arity < 1) throw std::invalid_argument("arity must be positive");
}

void CohClass::addTerm(const Word& w, const Rational& c) {
    if (static_cast<int>(w.size()) != arity_)
        throw std::invalid_argument("word length does not match arity");
    if (is_zero(c)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

Rational CohClass::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

int CohClass::maxDegree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, word_degree(space_, w));
    return d;
}

bool CohClass::isHomogeneous(int degree) const {
    for (const auto& [w, c] : terms_)
        if (word_degree(space_, w) != degree) return false;
    return true;
}

static void require_compatible(const CohClass& a, const CohClass& b) {
    if (!(a.space() == b.space())) throw std::invalid_argument("space mismatch");
    if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
}

CohClass& CohClass::operator+=(const CohClass& rhs) {
    require_compatible(*this, rhs);
    for (const auto& [w, c] : rhs.terms_) addTerm(w, c);
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& rhs) {
    require_compatible(*this, rhs);
    for (const auto& [w, c] : rhs.terms_) addTerm(w, -c);
    return *this;
}

CohClass& CohClass::operator*=(const Rational& c) {
    if (is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

CohClass operator*(const CohClass& a, const CohClass& b) { return mul(a, b); }

bool CohClass::operator==(const CohClass& rhs) const {
    return space_ == rhs.space_ && arity_ == rhs.arity_ && terms_ == rhs.terms_;
}

CohClass zero_class(const SpaceSpec& sp, int arity) { return CohClass(sp, arity); }

CohClass unit_class(const SpaceSpec& sp, int arity) {
    CohClass a(sp, arity);
    a.addTerm(Word(arity, sp.unit()), rat(1));
    return a;
}

CohClass word_class(const SpaceSpec& sp, Word w, Rational c) {
    CohClass a(sp, static_cast<int>(w.size()));
    a.addTerm(w, c);
    return a;
}

CohClass h_power(const SpaceSpec& sp, int j) {
    CohClass a(sp, 1);
    if (j >= 0 && j <= sp.topPower) a.addTerm({sp.h(j)}, rat(1));
    return a;
}

CohClass basis_letter(const SpaceSpec& sp, Letter l) {
    CohClass a(sp, 1);
    a.addTerm({l}, rat(1));
    return a;
}

CohClass point_class(const SpaceSpec& sp) {
    CohClass a(sp, 1);
    a.addTerm({sp.top()}, 1 / sp.topIntegral);
    return a;
}

// Product of two letters in H*(X); returns false when the product vanishes.
// Odd letters pair as e_i f_i = (1/t) h^top = -f_i e_i, every other odd
// product is zero, and h^a h^b truncates above the top power.
static bool letter_mul(const SpaceSpec& sp, Letter a, Letter b, Letter& out,
                       Rational& coeff) {
    const bool ao = sp.isOdd(a), bo = sp.isOdd(b);
    if (!ao && !bo) {
        int p = sp.hPower(a) + sp.hPower(b);
        if (p > sp.topPower) return false;
        out = sp.h(p);
        coeff = rat(1);
        return true;
    }
    if (ao != bo) {
        // unit times odd letter survives, positive h powers kill odd letters
        Letter ev = ao ? b : a;
        if (sp.hPower(ev) != 0) return false;
        out = ao ? a : b;
        coeff = rat(1);
        return true;
    }
    // both odd: only e_i f_i and f_i e_i survive
    int ia = a - sp.topPower, ib = b - sp.topPower;  // 1..2g, e then f
    bool aIsE = ia <= sp.g;
    bool bIsE = ib <= sp.g;
    if (aIsE == bIsE) return false;
    int idxA = aIsE ? ia : ia - sp.g;
    int idxB = bIsE ? ib : ib - sp.g;
    if (idxA != idxB) return false;
    out = sp.top();
    coeff = (aIsE ? 1 : -1) / sp.topIntegral;
    return true;
}

CohClass mul(const CohClass& a, const CohClass& b) {
    require_compatible(a, b);
    const SpaceSpec& sp = a.space();
    const int m = a.arity();
    CohClass out(sp, m);
    Word w(m);
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            // Koszul sign: sum over i > j of |a_i||b_j|
            int sign = 0;
            int oddBefore = 0;  // odd letters of wb strictly left of i
            bool dead = false;
            Rational coeff = ca * cb;
            for (int i = 0; i < m; ++i) {
                if (sp.isOdd(wa[i])) sign ^= oddBefore & 1;
                if (sp.isOdd(wb[i])) ++oddBefore;
                Letter prod;
                Rational c;
                if (!letter_mul(sp, wa[i], wb[i], prod, c)) {
                    dead = true;
                    break;
                }
                w[i] = prod;
                coeff *= c;
            }
            if (dead) continue;
            if (sign) coeff = -coeff;
            out.addTerm(w, coeff);
        }
    }
    return out;
}

Rational integrate(const CohClass& a) {
    const SpaceSpec& sp = a.space();
    Rational total = 0;
    for (const auto& [w, c] : a.terms()) {
        bool top = std::all_of(w.begin(), w.end(),
                               [&](Letter l) { return l == sp.top(); });
        if (!top) continue;
        Rational v = c;
        for (int i = 0; i < a.arity(); ++i) v *= sp.topIntegral;
        total += v;
    }
    return total;
}

static void require_index_set(const std::vector<int>& kept, int m) {
    if (kept.empty()) throw std::invalid_argument("empty index set");
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (kept[i] < 0 || kept[i] >= m)
            throw std::invalid_argument("index out of range");
        if (i > 0 && kept[i] <= kept[i - 1])
            throw std::invalid_argument("indices must be strictly increasing");
    }
}

CohClass pullback_proj(const CohClass& a, const std::vector<int>& kept, int m) {
    require_index_set(kept, m);
    if (static_cast<int>(kept.size()) != a.arity())
        throw std::invalid_argument("index set size must equal arity");
    const SpaceSpec& sp = a.space();
    CohClass out(sp, m);
    for (const auto& [w, c] : a.terms()) {
        Word nw(m, sp.unit());
        for (std::size_t k = 0; k < kept.size(); ++k) nw[kept[k]] = w[k];
        out.addTerm(nw, c);
    }
    return out;
}

CohClass pushforward_proj(const CohClass& a, const std::vector<int>& kept) {
    const int m = a.arity();
    require_index_set(kept, m);
    const SpaceSpec& sp = a.space();
    std::vector<bool> keep(m, false);
    for (int i : kept) keep[i] = true;
    const int dropped = m - static_cast<int>(kept.size());
    CohClass out(sp, static_cast<int>(kept.size()));
    for (const auto& [w, c] : a.terms()) {
        // Dropped letters must be the top even letter, so no Koszul sign.
        bool survives = true;
        Word nw;
        nw.reserve(kept.size());
        for (int i = 0; i < m; ++i) {
            if (keep[i]) {
                nw.push_back(w[i]);
            } else if (w[i] != sp.top()) {
                survives = false;
                break;
            }
        }
        if (!survives) continue;
        Rational v = c;
        for (int i = 0; i < dropped; ++i) v *= sp.topIntegral;
        out.addTerm(nw, v);
    }
    return out;
}

CohClass permute(const CohClass& a, const std::vector<int>& sigma) {
    const int m = a.arity();
    if (static_cast<int>(sigma.size()) != m)
        throw std::invalid_argument("permutation size must equal arity");
    std::vector<bool> seen(m, false);
    for (int v : sigma) {
        if (v < 0 || v >= m || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
    const SpaceSpec& sp = a.space();
    CohClass out(sp, m);
    Word nw(m);
    for (const auto& [w, c] : a.terms()) {
        int sign = 0;
        for (int i = 0; i < m; ++i) {
            nw[sigma[i]] = w[i];
            if (!sp.isOdd(w[i])) continue;
            for (int j = i + 1; j < m; ++j)
                if (sp.isOdd(w[j]) && sigma[i] > sigma[j]) sign ^= 1;
        }
        out.addTerm(nw, sign ? -c : c);
    }
    return out;
}

std::vector<SerializedTerm> serialized_terms(const CohClass& a) {
    std::vector<SerializedTerm> out;
    out.reserve(a.termCount());
    for (const auto& [w, c] : a.terms()) {
        SerializedTerm t;
        t.letters.reserve(w.size());
        for (Letter l : w) t.letters.push_back(a.space().letterName(l));
        t.numerator = c.get_num().get_str();
        t.denominator = c.get_den().get_str();
        out.push_back(std::move(t));
    }
    return out;
}

std::string to_string(const CohClass& a) {
    if (a.isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : a.terms()) {
        Rational v = c;
        if (first) {
            if (sgn(v) < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (sgn(v) < 0 ? " - " : " + ");
            if (sgn(v) < 0) v = -v;
        }
        if (!(v == 1)) os << rat_string(v) << "*";
        os << "(";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << "|";
            os << a.space().letterName(w[i]);
        }
        os << ")";
        first = false;
    }
    return os.str();
}

}  // namespace coh
