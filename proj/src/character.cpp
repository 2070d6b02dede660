#include "levelone/character.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace levelone {

namespace {

int mod(long long a, int ell) { return static_cast<int>(((a % ell) + ell) % ell); }

RootVector content_of(int ell, const Seq& s) {
    RootVector nu(ell);
    for (int x : s) nu.add(Residue(ell, x));
    return nu;
}

long long factorial(int r) {
    long long f = 1;
    for (int t = 2; t <= r; ++t) f *= t;
    return f;
}

}  // namespace

Character::Character(int ell) : ell_(ell) { require_ell(ell); }

Character Character::unit(int ell) {
    Character c(ell);
    c.add({}, LaurentPoly(1));
    return c;
}

std::optional<RootVector> Character::content() const {
    if (terms_.empty()) return std::nullopt;
    return content_of(ell_, terms_.begin()->first);
}

void Character::add(Seq seq, const LaurentPoly& p) {
    for (int& x : seq) x = mod(x, ell_);
    if (p.is_zero()) return;
    if (auto nu = content(); nu && !(*nu == content_of(ell_, seq)))
        throw InvalidDatum("character terms must share one content vector");
    auto [it, fresh] = terms_.emplace(std::move(seq), p);
    if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly Character::coeff(const Seq& seq) const {
    auto it = terms_.find(seq);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

Character Character::at_q1() const {
    Character c(ell_);
    for (const auto& [s, p] : terms_) c.add(s, LaurentPoly(p.at_q1()));
    return c;
}

Character Character::shifted(int s) const {
    Character c(ell_);
    for (const auto& [seq, p] : terms_) c.terms_.emplace(seq, p.shifted(s));
    return c;
}

Character& Character::operator+=(const Character& o) {
    require_same_ell(ell_, o.ell_);
    for (const auto& [s, p] : o.terms_) add(s, p);
    return *this;
}

Character& Character::operator-=(const Character& o) {
    require_same_ell(ell_, o.ell_);
    for (const auto& [s, p] : o.terms_) add(s, -p);
    return *this;
}

Character operator*(const LaurentPoly& p, const Character& c) {
    Character out(c.ell_);
    for (const auto& [s, q] : c.terms_) out.add(s, p * q);
    return out;
}

std::optional<int> shift_between(const Character& a, const Character& b) {
    require_same_ell(a.ell(), b.ell());
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero() ? std::optional<int>(0) : std::nullopt;
    const auto s = shift_between(a.terms().begin()->second, b.terms().begin()->second);
    if (s && b.shifted(*s) == a) return s;
    return std::nullopt;
}

std::vector<ShufflePattern> coset_shuffles(int m1, int m2) {
    if (m1 < 0 || m2 < 0) throw InvalidDatum("block sizes must be nonnegative");
    std::vector<ShufflePattern> out;
    std::vector<int> slots;
    const int n = m1 + m2;
    // choose increasing slots for the first block
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(slots.size()) == m1) {
            ShufflePattern p{slots, {}};
            for (int x = 0; x < m1; ++x) {
                // b letters placed before slot[x]: slot[x] - x of them
                const int before = slots[static_cast<std::size_t>(x)] - x;
                for (int y = 0; y < before; ++y) p.inversions.emplace_back(x, y);
            }
            out.push_back(std::move(p));
            return;
        }
        const int remaining = m1 - static_cast<int>(slots.size());
        for (int s = next; s <= n - remaining; ++s) {
            slots.push_back(s);
            self(self, s + 1);
            slots.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Seq apply_pattern(const Seq& a, const Seq& b, const ShufflePattern& pattern) {
    if (pattern.left_slots.size() != a.size()) throw InvalidDatum("pattern does not fit the left block");
    Seq w(a.size() + b.size(), 0);
    std::vector<bool> taken(w.size(), false);
    for (std::size_t x = 0; x < a.size(); ++x) {
        const auto s = static_cast<std::size_t>(pattern.left_slots[x]);
        if (s >= w.size()) throw InvalidDatum("pattern slot out of range");
        w[s] = a[x];
        taken[s] = true;
    }
    std::size_t y = 0;
    for (std::size_t s = 0; s < w.size(); ++s)
        if (!taken[s]) w[s] = b[y++];
    return w;
}

int shuffle_degree(int ell, const Seq& a, const Seq& b, const ShufflePattern& pattern) {
    if (pattern.left_slots.size() != a.size()) throw InvalidDatum("pattern does not fit the left block");
    int deg = 0;
    for (auto [x, y] : pattern.inversions) {
        if (y >= static_cast<int>(b.size())) throw InvalidDatum("pattern does not fit the right block");
        deg -= symmetric_form(ell, Residue(ell, a[static_cast<std::size_t>(x)]), Residue(ell, b[static_cast<std::size_t>(y)]));
    }
    return deg;
}

Character qshuffle(const Character& c1, const Character& c2) {
    require_same_ell(c1.ell(), c2.ell());
    const int ell = c1.ell();
    Character out(ell);
    std::map<std::pair<int, int>, std::vector<ShufflePattern>> cache;
    for (const auto& [a, pa] : c1.terms())
        for (const auto& [b, pb] : c2.terms()) {
            const auto key = std::make_pair(static_cast<int>(a.size()), static_cast<int>(b.size()));
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, coset_shuffles(key.first, key.second)).first;
            const LaurentPoly ab = pa * pb;
            for (const auto& pat : it->second)
                out.add(apply_pattern(a, b, pat), ab.shifted(shuffle_degree(ell, a, b, pat)));
        }
    return out;
}

Character char_trivial(int ell, int i, int k) {
    if (k < 0) throw InvalidDatum("k must be nonnegative");
    Character c(ell);
    Seq s;
    for (int t = 0; t < k; ++t) s.push_back(i + t);
    c.add(s, LaurentPoly(1));
    return c;
}

Character char_sign(int ell, int i, int k) {
    if (k < 0) throw InvalidDatum("k must be nonnegative");
    Character c(ell);
    Seq s;
    for (int t = 0; t < k; ++t) s.push_back(i - t);
    c.add(s, LaurentPoly(1));
    return c;
}

Character char_Lin(int ell, int i, int n) {
    if (n < 0) throw InvalidDatum("n must be nonnegative");
    Character c(ell);
    c.add(Seq(static_cast<std::size_t>(n), i), qfact(n));
    return c;
}

int eps_from_char(const Character& c, int j, Side side) {
    if (c.is_zero()) throw InvalidDatum("eps of the zero character");
    j = mod(j, c.ell());
    int best = 0;
    for (const auto& [s, p] : c.terms()) {
        int run = 0;
        if (side == Side::right)
            for (auto it = s.rbegin(); it != s.rend() && *it == j; ++it) ++run;
        else
            for (auto it = s.begin(); it != s.end() && *it == j; ++it) ++run;
        best = std::max(best, run);
    }
    return best;
}

Character e_op(const Character& c, int j) {
    j = mod(j, c.ell());
    Character out(c.ell());
    for (const auto& [s, p] : c.terms())
        if (!s.empty() && s.back() == j) out.add(Seq(s.begin(), s.end() - 1), p);
    return out;
}

namespace {

// e_i^{(r)} at q = 1; flags non-divisibility.
Character divided_e(const Character& c, int i, int r, bool& indivisible) {
    Character cur = c;
    for (int t = 0; t < r; ++t) cur = e_op(cur, i);
    const long long f = factorial(r);
    Character out(c.ell());
    for (const auto& [s, p] : cur.terms()) {
        auto d = p.divided(f);
        if (!d) {
            indivisible = true;
            d = LaurentPoly(p.at_q1() / f);
        }
        out.add(s, *d);
    }
    return out;
}

}  // namespace

SerreDefect serre_defect(const Character& c, int i, int j) {
    const int ell = c.ell();
    i = mod(i, ell);
    j = mod(j, ell);
    if (i == j) throw InvalidDatum("serre_defect needs i != j");
    const int top = 1 - cartan_entry(ell, Residue(ell, i), Residue(ell, j));
    const Character base = c.at_q1();
    SerreDefect result{Character(ell), false};
    for (int r = 0; r <= top; ++r) {
        Character term = divided_e(base, i, r, result.indivisible);
        term = e_op(term, j);
        term = divided_e(term, i, top - r, result.indivisible);
        if (r % 2 == 0)
            result.defect += term;
        else
            result.defect -= term;
    }
    return result;
}

std::string to_json(const Character& c) {
    nlohmann::ordered_json doc;
    doc["ell"] = c.ell();
    doc["terms"] = nlohmann::ordered_json::array();
    for (const auto& [s, p] : c.terms()) {
        nlohmann::ordered_json poly = nlohmann::ordered_json::array();
        for (auto [e, k] : p.pairs()) poly.push_back({e, k});
        doc["terms"].push_back({{"seq", s}, {"poly", poly}});
    }
    return doc.dump(2) + "\n";
}

Character character_from_json(const std::string& text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        Character c(doc.at("ell").get<int>());
        for (const auto& t : doc.at("terms")) {
            LaurentPoly p;
            for (const auto& ec : t.at("poly")) p += LaurentPoly::monomial(ec.at(0).get<int>(), ec.at(1).get<long long>());
            c.add(t.at("seq").get<Seq>(), p);
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidDatum(std::string("character JSON: ") + e.what());
    }
}

}  // namespace levelone
