// Nerve-level cochain machinery: face-map substitution tables, simplicial
// connections and their curvature, exact integration over the standard
// simplex, coboundary and cup product, characteristic cochains, and the
// local-coordinate Bott model behind the vanishing theorem.
#pragma once

#include "folichar/weil.hpp"

#include <memory>
#include <optional>

namespace folichar {

// Simplex parameters t_1..t_k and their differentials at nerve level k;
// t_0 = 1 - sum t_i is eliminated, so polynomials in t are free and
// integration over the simplex is a Dirichlet integral.
struct LevelContext {
    unsigned k = 0;
    std::vector<Fn> t;   // t1..tk (simplex-parameter functions)
    std::vector<Gen> dt; // dt1..dtk (degree-1 generators)
};

LevelContext level_context(unsigned k);

// Index map of p^{k-1}_j o eps^k_i = p^k_{face_index(k,i,j)}.
unsigned face_index(unsigned k, unsigned i, unsigned j);

enum class ModelTag { Formal, Local };

struct Cochain {
    int level = 0;
    GradedElement element;
    ModelTag tag = ModelTag::Formal;
};

// Common surface of the formal pullback alphabet and the local Bott model:
// per-index connection pullbacks, the differential, contraction, and the
// face/shift substitution tables (data derived once from the p^k_i rules).
class PullbackFamily {
  public:
    virtual ~PullbackFamily() = default;

    unsigned q() const { return q_; }
    unsigned max_level() const { return max_level_; }
    virtual ModelTag tag() const = 0;

    // (p^k_i)* of the connection form, 0 <= i <= max_level.
    virtual const MatrixForm &alpha(unsigned i) const = 0;

    // Differential on the family alphabet extended with d t_j = dt_j.
    virtual DerivationSpec d(const LevelContext &ctx) const = 0;

    // Contraction with X in gl(q).
    virtual DerivationSpec iX(const RationalMatrix &X) const = 0;

    // Substitution realizing (eps^k_i)^*: level k-1 alphabet -> level k.
    virtual AlgebraHom face_subst(unsigned k, unsigned i) const = 0;

    // Substitution shifting pullback indices j -> j + by (p_2^* of the cup).
    virtual AlgebraHom shift_subst(unsigned by) const = 0;

  protected:
    PullbackFamily(unsigned q, unsigned max_level) : q_(q), max_level_(max_level) {}
    unsigned q_;
    unsigned max_level_;
};

// Free alphabet: fresh degree-1 generators a_i(r,c) with d a_i = da_i.
class FormalFamily : public PullbackFamily {
  public:
    FormalFamily(unsigned q, unsigned max_level);
    ModelTag tag() const override { return ModelTag::Formal; }
    const MatrixForm &alpha(unsigned i) const override;
    const MatrixForm &dalpha(unsigned i) const;
    DerivationSpec d(const LevelContext &ctx) const override;
    DerivationSpec iX(const RationalMatrix &X) const override;
    AlgebraHom face_subst(unsigned k, unsigned i) const override;
    AlgebraHom shift_subst(unsigned by) const override;

  private:
    std::vector<MatrixForm> alphas_;
    std::vector<MatrixForm> dalphas_;
};

// Local-coordinate Bott model: alpha_i = sum_j A_i[.,.,j] dz^j + m, with
// opaque coefficients A, Maurer-Cartan part m (dm = -m^2), and the split
// dA = A_L + sum_l A_T[.,l] dz^l.
//
// The dz occurrences are labelled per pullback index (dz j of pullback i is
// its own generator), which makes the dz-degree count of the vanishing
// argument visible monomial by monomial; identify_dz() maps the labelled
// copies onto the shared transverse differentials dz^j, where nilpotency
// beyond q factors is automatic.
class LocalFamily : public PullbackFamily {
  public:
    LocalFamily(unsigned q, unsigned max_level);
    ModelTag tag() const override { return ModelTag::Local; }
    const MatrixForm &alpha(unsigned i) const override;  // labelled model
    const MatrixForm &beta(unsigned i) const;            // dz part only
    const MatrixForm &mc() const { return mc_; }
    DerivationSpec d(const LevelContext &ctx) const override;
    DerivationSpec iX(const RationalMatrix &X) const override;
    AlgebraHom face_subst(unsigned k, unsigned i) const override;       // labelled
    AlgebraHom face_subst_shared(unsigned k, unsigned i) const;         // after identify_dz
    AlgebraHom shift_subst(unsigned by) const override;

    AlgebraHom identify_dz() const;
    // Pullback along the unit inclusion at level 1: both alphas collapse to
    // a common copy (shared-dz alphabet).
    AlgebraHom unit_pullback() const;

    Gen shared_dz(unsigned j) const { return dz_shared_[j]; }

  private:
    AlgebraHom rename(unsigned upto, const std::function<unsigned(unsigned)> &newidx,
                      bool shared) const;

    std::vector<MatrixForm> alphas_;
    std::vector<MatrixForm> betas_;
    MatrixForm mc_;
    std::vector<std::vector<Gen>> zeta_;            // [i][j]
    std::vector<Gen> dz_shared_;                    // [j]
    std::vector<std::vector<std::vector<std::vector<Fn>>>> A_;   // [i][a][b][j]
    std::vector<std::vector<std::vector<std::vector<Gen>>>> AL_; // [i][a][b][j]
    std::vector<std::vector<std::vector<std::vector<std::vector<Fn>>>>> AT_; // [i][a][b][j][l]
    std::vector<Fn> unit_A_;                        // unit-inclusion targets
};

// alpha^(k) = t_1 alpha_0 + ... + t_k alpha_{k-1} + (1 - sum t_i) alpha_k.
// The surviving Dirichlet parameters pair with pullback indices 0..k-1;
// this matches t r*alpha + (1-t) s*alpha at level 1.
MatrixForm simplicial_connection(const PullbackFamily &fam, const LevelContext &ctx);

// dA + A^2 for a degree-1 matrix form.
MatrixForm curvature(const MatrixForm &A, const DerivationSpec &d);

// Selects monomials carrying exactly dt_1 ^ ... ^ dt_k, integrates the
// t-polynomial by int_{Delta^k} t^a = (prod a_i!) / (k + sum a_i)!, signs
// from moving the dt factors to the front tracked exactly.
GradedElement integrate_simplex(const GradedElement &e, const LevelContext &ctx);
Cochain integrate_simplex(const Cochain &c, const LevelContext &ctx);

// Alternating sum of face pullbacks; level m -> m+1.  Missing face images
// surface as alphabet_error.
Cochain coboundary(const Cochain &c, const PullbackFamily &fam);

// (-1)^{deg(c1) * level(c2)} (p_1^* c1) ^ (p_2^* c2); inhomogeneous first
// arguments are handled degree component by degree component.
Cochain cup(const Cochain &c1, const Cochain &c2, const PullbackFamily &fam);

// psi(word) at levels 0..K: evaluate the W(gl(q)) representative of `word`
// (h/c alphabet) on (alpha^(k), R^(k)) and integrate over Delta^k.
std::vector<Cochain> char_cochain(const GradedElement &word, unsigned K,
                                  const WOAlphabet &wo, const WeilContext &wctx,
                                  const PullbackFamily &fam);

struct BottReport {
    unsigned q = 0;
    unsigned k = 0;
    std::string poly;
    unsigned deg_p = 0;              // degree of P as an invariant polynomial
    std::optional<unsigned> min_dz;  // over surviving labelled monomials
    bool dz_bound_ok = false;        // min_dz >= deg_p (vacuously if none survive)
    size_t surviving_monomials = 0;
    bool vanishes_shared = false;    // exact zero after identify_dz
    std::string witness;             // offending monomial dump on failure
    bool passed = false;
};

// Expands int_{Delta^k} P(R^(k)) in the labelled local model, reports the
// minimum dz-degree over surviving monomials, then applies the shared-dz
// identification; for deg(P) > q the result must be exactly zero.
BottReport verify_bott(unsigned q, unsigned k, const std::vector<unsigned> &c_word);

struct GvClosedReport {
    bool closed_local = false;        // d(alpha_G ^ R_G) under del, local Bott model
    bool formal_nonzero = false;      // same expression, free alphabet
    bool unit_pullback_zero = false;  // R_G pulled back along units
    std::string formal_witness;
    // both sign conventions of the integrated curvature, exposed:
    std::string del_alpha_dump; // del(alpha) = s*alpha - r*alpha at level 1
    std::string r_g_dump;       // R_G = r*alpha - s*alpha (Def-style sign)
    bool passed = false;
};

GvClosedReport verify_gv_closed();

} // namespace folichar
