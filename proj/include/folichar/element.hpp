// Normal-form graded-commutative elements: finite sums of signed monomials
// in interned generators, with exact rational coefficients and commuting
// degree-0 function symbols.
//
// Invariants maintained by every constructor and operation:
//   * words are sorted by the global generator order, Koszul signs absorbed
//     into the coefficient;
//   * odd generators never repeat (odd squares vanish), even generators
//     carry integer exponents;
//   * terms are sorted by (word, funcs) and merged, zero coefficients
//     dropped.  Equal elements have identical term vectors.
#pragma once

#include "folichar/rational.hpp"
#include "folichar/symbols.hpp"

#include <string>
#include <vector>

namespace folichar {

class missing_image_error : public std::runtime_error {
  public:
    explicit missing_image_error(const std::string &what) : std::runtime_error(what) {}
};

class alphabet_error : public std::runtime_error {
  public:
    explicit alphabet_error(const std::string &what) : std::runtime_error(what) {}
};

struct GenPow {
    Gen gen;
    std::uint32_t exp;
    friend bool operator==(const GenPow &, const GenPow &) = default;
};

struct FnPow {
    Fn fn;
    std::uint32_t exp;
    friend bool operator==(const FnPow &, const FnPow &) = default;
};

using Word = std::vector<GenPow>;
using FnPart = std::vector<FnPow>;

struct Monomial {
    Rational coeff;
    FnPart funcs; // sorted by fn_less
    Word word;    // sorted by gen_less

    unsigned degree() const;
    friend bool operator==(const Monomial &, const Monomial &) = default;
};

class GradedElement {
  public:
    GradedElement() = default;
    GradedElement(Rational c); // scalar
    static GradedElement zero() { return GradedElement(); }
    static GradedElement one() { return GradedElement(Rational(1)); }
    static GradedElement gen(Gen g, Rational c = Rational(1));
    static GradedElement fn(Fn f, Rational c = Rational(1), std::uint32_t exp = 1);

    // Builds the normal form from arbitrary raw monomials (unsorted words,
    // possible repeats and zero coefficients).
    static GradedElement from_raw(std::vector<Monomial> raw);

    const std::vector<Monomial> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // True when every term has the same total degree; degree() requires it.
    bool is_homogeneous() const;
    unsigned degree() const;

    GradedElement homogeneous_part(unsigned n) const;
    unsigned max_degree() const;

    // Counts generator factors whose family is in `fams` (min over terms of
    // the per-term count); used for dz-degree reports.
    unsigned min_family_count(Family fam) const;

    GradedElement operator-() const;
    GradedElement &operator+=(const GradedElement &o);
    GradedElement &operator-=(const GradedElement &o);
    friend GradedElement operator+(GradedElement a, const GradedElement &b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement &b) { return a -= b; }

    GradedElement scaled(const Rational &c) const;

    friend bool operator==(const GradedElement &, const GradedElement &) = default;

    // Canonical text dump: one monomial per line,
    //   <rational> * <func^e ...> * <gen ∧ gen ...>
    // monomials in normal-form order; "0" for the zero element.
    std::string dump() const;

  private:
    std::vector<Monomial> terms_; // sorted by (word, funcs), coeffs nonzero
};

// Graded product.  Bilinear, associative, graded-commutative.
GradedElement wedge(const GradedElement &a, const GradedElement &b);
Monomial wedge_monomials(const Monomial &a, const Monomial &b);

GradedElement wedge(std::initializer_list<GradedElement> factors);

// Normal-form helpers shared with the derivation code.
// Sorts `w` in place, returns the Koszul sign, or 0 if an odd generator
// repeats.  Merges equal even generators.
int normalize_word(Word &w);
void normalize_fnpart(FnPart &f);

bool word_less(const Word &a, const Word &b);
bool monomial_key_less(const Monomial &a, const Monomial &b);

} // namespace folichar
