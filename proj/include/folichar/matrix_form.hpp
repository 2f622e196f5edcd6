// q x q matrices of graded elements: connection and curvature forms in
// matrix shape.  Entry products use the wedge, so Koszul signs are carried
// by the entries themselves.
#pragma once

#include "folichar/derivation.hpp"
#include "folichar/element.hpp"

#include <functional>
#include <vector>

namespace folichar {

class MatrixForm {
  public:
    MatrixForm() : q_(0) {}
    explicit MatrixForm(unsigned q) : q_(q), entries_(q * q) {}

    static MatrixForm build(unsigned q, const std::function<GradedElement(unsigned, unsigned)> &f);
    static MatrixForm scalars(unsigned q, const std::vector<std::vector<Rational>> &m);

    unsigned q() const { return q_; }
    GradedElement &at(unsigned a, unsigned b) { return entries_[a * q_ + b]; }
    const GradedElement &at(unsigned a, unsigned b) const { return entries_[a * q_ + b]; }

    MatrixForm operator-() const;
    MatrixForm &operator+=(const MatrixForm &o);
    MatrixForm &operator-=(const MatrixForm &o);
    friend MatrixForm operator+(MatrixForm a, const MatrixForm &b) { return a += b; }
    friend MatrixForm operator-(MatrixForm a, const MatrixForm &b) { return a -= b; }

    MatrixForm scaled(const Rational &c) const;
    MatrixForm scaled_fn(Fn f) const; // multiply every entry by the function symbol

    MatrixForm transpose() const;
    GradedElement trace() const;
    bool is_zero() const;

    friend MatrixForm mul(const MatrixForm &a, const MatrixForm &b);
    MatrixForm power(unsigned n) const; // n >= 0, identity for n = 0

    MatrixForm map(const std::function<GradedElement(const GradedElement &)> &f) const;

    friend bool operator==(const MatrixForm &, const MatrixForm &) = default;

  private:
    unsigned q_;
    std::vector<GradedElement> entries_;
};

MatrixForm apply(const DerivationSpec &D, const MatrixForm &m);
MatrixForm apply(const AlgebraHom &H, const MatrixForm &m);

// (antisymmetric, symmetric) split: m = first + second entrywise,
// first^T = -first, second^T = second.
std::pair<MatrixForm, MatrixForm> sym_antisym_split(const MatrixForm &m);

} // namespace folichar
