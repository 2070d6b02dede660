#pragma once

// Characters of graded R(ν)-modules: finitely supported maps from residue
// sequences to Laurent polynomials, with the quantum shuffle product and
// the statistics read off them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "levelone/cartan.hpp"
#include "levelone/laurent.hpp"

namespace levelone {

using Seq = std::vector<int>;

class Character {
public:
    explicit Character(int ell);

    /// The character of the unit module of R(0): the empty sequence.
    static Character unit(int ell);

    int ell() const noexcept { return ell_; }
    const std::map<Seq, LaurentPoly>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Common content of all sequences; nullopt for the zero character.
    std::optional<RootVector> content() const;

    /// Adds p·[seq].  Letters are reduced mod ℓ; throws if the content
    /// differs from the sequences already present.
    void add(Seq seq, const LaurentPoly& p);
    LaurentPoly coeff(const Seq& seq) const;

    Character at_q1() const;
    Character shifted(int s) const;

    Character& operator+=(const Character& o);
    Character& operator-=(const Character& o);
    friend Character operator+(Character a, const Character& b) { return a += b; }
    friend Character operator-(Character a, const Character& b) { return a -= b; }
    friend Character operator*(const LaurentPoly& p, const Character& c);
    friend bool operator==(const Character&, const Character&) = default;

private:
    int ell_;
    std::map<Seq, LaurentPoly> terms_;
};

/// The s with a = q^s b, if any.
std::optional<int> shift_between(const Character& a, const Character& b);

/// A minimal-length coset representative: the positions taken by the first
/// block inside the merged word, and the crossed pairs (x in a, y in b).
struct ShufflePattern {
    std::vector<int> left_slots;
    std::vector<std::pair<int, int>> inversions;
    friend bool operator==(const ShufflePattern&, const ShufflePattern&) = default;
};

/// All C(m1+m2, m1) interleavings, left_slots in lexicographic order.
std::vector<ShufflePattern> coset_shuffles(int m1, int m2);
/// Merged word of a and b under the pattern.
Seq apply_pattern(const Seq& a, const Seq& b, const ShufflePattern& pattern);
/// Σ over crossed pairs (x, y) of -(α_{a_x}, α_{b_y}).
int shuffle_degree(int ell, const Seq& a, const Seq& b, const ShufflePattern& pattern);

Character qshuffle(const Character& c1, const Character& c2);

/// T(i;k): [i, i+1, ..., i+k-1].
Character char_trivial(int ell, int i, int k);
/// S(i;k): [i, i-1, ..., i-k+1].
Character char_sign(int ell, int i, int k);
/// L(iⁿ): [n]!·[i, ..., i].
Character char_Lin(int ell, int i, int n);

enum class Side { right, left };

/// Maximal trailing (right) or leading (left) run of j over the support.
int eps_from_char(const Character& c, int j, Side side);
/// Keeps the sequences ending in j and drops that letter.
Character e_op(const Character& c, int j);

struct SerreDefect {
    Character defect;
    /// Set when some e_i^r(...) was not divisible by r!, i.e. the input is
    /// not the character of a module.
    bool indivisible = false;
    bool vanishes() const { return defect.is_zero() && !indivisible; }
};

/// Σ_{r=0}^{c} (-1)^r e_i^{(c-r)} e_j e_i^{(r)} c, c = 1 - a_ij, at q = 1.
SerreDefect serre_defect(const Character& c, int i, int j);

/// `{"ell": L, "terms": [{"seq": [...], "poly": [[exp, coeff], ...]}, ...]}`.
std::string to_json(const Character& c);
Character character_from_json(const std::string& text);

}  // namespace levelone
