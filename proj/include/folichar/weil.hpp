// The Lie-theoretic layer: gl(q,R) structure constants, the Weil algebra
// W(gl(q,R)) with its differential and contractions, the Chern cocycles
// c_i = Tr(Omega^i), the transgressions h_i, and the h/c alphabet WO_q with
// its degree-2q truncation.
#pragma once

#include "folichar/matrix_form.hpp"

#include <set>
#include <vector>

namespace folichar {

// Dense q x q rational matrix; basis elements of gl(q) and so(q).
using RationalMatrix = std::vector<std::vector<Rational>>;

struct LieBasis {
    unsigned q = 0;
    // basis[i] = E_{ab} with i = a*q + b (0-based).
    std::vector<RationalMatrix> basis;
    // f[k][i*dim+j] = coefficient of X_k in [X_i, X_j]; stored dense, tiny.
    std::vector<std::vector<Rational>> f;
    // Antisymmetric combinations E_{ab} - E_{ba}, a < b.
    std::vector<RationalMatrix> so_basis;

    unsigned dim() const { return (unsigned)basis.size(); }
};

// Structure constants of gl(q) in the elementary-matrix basis; antisymmetry
// and the Jacobi identity are verified at construction.
LieBasis make_gl(unsigned q);

class WeilContext {
  public:
    explicit WeilContext(const LieBasis &L);

    unsigned q() const { return q_; }
    const LieBasis &lie() const { return lie_; }
    const MatrixForm &omega() const { return omega_; }   // degree-1 generators
    const MatrixForm &Omega() const { return Omega_; }   // degree-2 generators
    const DerivationSpec &d() const { return d_; }

    // Contraction with an arbitrary gl(q) element.
    DerivationSpec iX(const RationalMatrix &X) const;
    // Lie derivative via the Cartan formula, as a degree-0 derivation.
    DerivationSpec LX(const RationalMatrix &X) const;

  private:
    unsigned q_;
    LieBasis lie_;
    MatrixForm omega_;
    MatrixForm Omega_;
    DerivationSpec d_;
};

// Chern-Weil evaluation on an arbitrary connection/curvature pair:
//   chern_of(R, i)         = Tr(R^i)
//   transgression_of(a, R, i) =
//       i * Tr( int_0^1 a_s (t R_s + R_o + (t^2 - 1) a_s^2)^{i-1} dt ),
// the integral expanded as a polynomial in the scalar parameter and
// integrated term by term.
GradedElement chern_of(const MatrixForm &R, unsigned i);
GradedElement transgression_of(const MatrixForm &alpha, const MatrixForm &R, unsigned i);

// The universal elements: Tr(Omega^i), homogeneous of degree 2i, and the
// transgression with dh_i = c_i; 1 <= i <= q, i odd for h.
GradedElement chern_c(const WeilContext &ctx, unsigned i);
GradedElement transgression_h(const WeilContext &ctx, unsigned i);

// i_X a = 0 for every X in `contraction` and L_X a = 0 for every gl basis
// element (infinitesimal G-invariance).
bool is_basic(const GradedElement &a, const WeilContext &ctx,
              const std::vector<RationalMatrix> &contraction);

// Abstract h/c alphabet of WO_q with d(h_i) = c_i, d(c_i) = 0, and its
// inclusion into W(gl(q)) via chern_c / transgression_h.
class WOAlphabet {
  public:
    explicit WOAlphabet(unsigned q);

    unsigned q() const { return q_; }
    GradedElement h(unsigned i) const; // i odd, i <= q
    GradedElement c(unsigned i) const; // 1 <= i <= q
    const DerivationSpec &d() const { return d_; }

    AlgebraHom inclusion(const WeilContext &ctx) const;

    bool is_c(Gen g) const { return c_gens_.count(g) > 0; }
    bool in_alphabet(Gen g) const { return all_gens_.count(g) > 0; }

  private:
    unsigned q_;
    std::vector<Gen> hs_;
    std::vector<Gen> cs_;
    std::set<Gen> c_gens_;
    std::set<Gen> all_gens_;
    DerivationSpec d_;
};

struct TruncationPolicy {
    unsigned q;
};

// Drops monomials whose c-factor degree exceeds 2q; throws alphabet_error
// if `a` contains generators outside the h/c alphabet.
GradedElement truncate(const GradedElement &a, const WOAlphabet &alphabet, TruncationPolicy p);

} // namespace folichar
