#include "folichar/weil.hpp"

#include <stdexcept>

namespace folichar {

namespace {

RationalMatrix zero_matrix(unsigned q) {
    return RationalMatrix(q, std::vector<Rational>(q, Rational(0)));
}

RationalMatrix commutator(const RationalMatrix &A, const RationalMatrix &B) {
    unsigned q = (unsigned)A.size();
    RationalMatrix C = zero_matrix(q);
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b) {
            Rational s(0);
            for (unsigned c = 0; c < q; ++c) s += A[a][c] * B[c][b] - B[a][c] * A[c][b];
            C[a][b] = s;
        }
    return C;
}

RationalMatrix lin_comb(const LieBasis &L, const std::vector<Rational> &coeffs) {
    RationalMatrix M = zero_matrix(L.q);
    for (unsigned k = 0; k < L.dim(); ++k)
        if (!coeffs[k].is_zero())
            for (unsigned a = 0; a < L.q; ++a)
                for (unsigned b = 0; b < L.q; ++b) M[a][b] += coeffs[k] * L.basis[k][a][b];
    return M;
}

std::vector<Rational> bracket_coeffs(const LieBasis &L, unsigned i, unsigned j) {
    std::vector<Rational> c(L.dim());
    for (unsigned k = 0; k < L.dim(); ++k) c[k] = L.f[k][i * L.dim() + j];
    return c;
}

std::string idx_name(const char *stem, unsigned a, unsigned b) {
    return std::string(stem) + "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

} // namespace

LieBasis make_gl(unsigned q) {
    if (q < 1) throw std::invalid_argument("make_gl: q must be >= 1");
    LieBasis L;
    L.q = q;
    unsigned dim = q * q;
    L.basis.reserve(dim);
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b) {
            RationalMatrix E = zero_matrix(q);
            E[a][b] = Rational(1);
            L.basis.push_back(std::move(E));
        }
    // In the elementary basis the commutator [E_i, E_j] has entries 0, +-1,
    // so the expansion coefficients are just the matrix entries.
    L.f.assign(dim, std::vector<Rational>(dim * dim, Rational(0)));
    for (unsigned i = 0; i < dim; ++i)
        for (unsigned j = 0; j < dim; ++j) {
            RationalMatrix C = commutator(L.basis[i], L.basis[j]);
            for (unsigned a = 0; a < q; ++a)
                for (unsigned b = 0; b < q; ++b)
                    if (!C[a][b].is_zero()) L.f[a * q + b][i * dim + j] = C[a][b];
        }
    // Antisymmetry and Jacobi.
    for (unsigned i = 0; i < dim; ++i)
        for (unsigned j = 0; j < dim; ++j)
            for (unsigned k = 0; k < dim; ++k)
                if (L.f[k][i * dim + j] != -L.f[k][j * dim + i])
                    throw std::logic_error("make_gl: structure constants not antisymmetric");
    for (unsigned i = 0; i < dim; ++i)
        for (unsigned j = 0; j < dim; ++j)
            for (unsigned k = 0; k < dim; ++k) {
                RationalMatrix J =
                    commutator(lin_comb(L, bracket_coeffs(L, i, j)), L.basis[k]);
                RationalMatrix J2 =
                    commutator(lin_comb(L, bracket_coeffs(L, j, k)), L.basis[i]);
                RationalMatrix J3 =
                    commutator(lin_comb(L, bracket_coeffs(L, k, i)), L.basis[j]);
                for (unsigned a = 0; a < q; ++a)
                    for (unsigned b = 0; b < q; ++b)
                        if (!(J[a][b] + J2[a][b] + J3[a][b]).is_zero())
                            throw std::logic_error("make_gl: Jacobi identity failed");
            }
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = a + 1; b < q; ++b) {
            RationalMatrix E = zero_matrix(q);
            E[a][b] = Rational(1);
            E[b][a] = Rational(-1);
            L.so_basis.push_back(std::move(E));
        }
    return L;
}

WeilContext::WeilContext(const LieBasis &L) : q_(L.q), lie_(L) {
    omega_ = MatrixForm::build(q_, [&](unsigned a, unsigned b) {
        return GradedElement::gen(symbols::generator(idx_name("w", a, b), 1, Family::WeilOmegaLower));
    });
    Omega_ = MatrixForm::build(q_, [&](unsigned a, unsigned b) {
        return GradedElement::gen(symbols::generator(idx_name("W", a, b), 2, Family::WeilOmegaUpper));
    });

    // d from the structure constants:
    //   d omega^i = Omega^i - 1/2 f^i_{jk} omega^j omega^k
    //   d Omega^i = f^i_{jk} Omega^j omega^k
    // (the matrix identities d omega = Omega - omega^2 and
    //  d Omega = Omega omega - omega Omega are tested, not assumed).
    unsigned dim = lie_.dim();
    auto gen_of = [&](const MatrixForm &m, unsigned idx) {
        return m.at(idx / q_, idx % q_).terms().front().word.front().gen;
    };
    d_.degree = 1;
    Rational half(1, 2);
    for (unsigned i = 0; i < dim; ++i) {
        GradedElement dw = Omega_.at(i / q_, i % q_);
        GradedElement dW;
        for (unsigned j = 0; j < dim; ++j)
            for (unsigned k = 0; k < dim; ++k) {
                const Rational &fijk = lie_.f[i][j * dim + k];
                if (fijk.is_zero()) continue;
                dw -= wedge(omega_.at(j / q_, j % q_), omega_.at(k / q_, k % q_)).scaled(half * fijk);
                dW += wedge(Omega_.at(j / q_, j % q_), omega_.at(k / q_, k % q_)).scaled(fijk);
            }
        d_.set(gen_of(omega_, i), std::move(dw));
        d_.set(gen_of(Omega_, i), std::move(dW));
    }

    // d^2 = 0 on every generator; a failure signals a structure-constant bug.
    for (const auto &[g, img] : d_.gen_images) {
        if (!derive(d_, img).is_zero())
            throw std::logic_error("WeilContext: d^2 != 0 on generator " + symbols::gen_name(g));
    }
}

DerivationSpec WeilContext::iX(const RationalMatrix &X) const {
    DerivationSpec D;
    D.degree = -1;
    for (unsigned a = 0; a < q_; ++a)
        for (unsigned b = 0; b < q_; ++b) {
            Gen gw = omega_.at(a, b).terms().front().word.front().gen;
            Gen gW = Omega_.at(a, b).terms().front().word.front().gen;
            D.set(gw, GradedElement(X[a][b]));
            D.set(gW, GradedElement::zero());
        }
    return D;
}

DerivationSpec WeilContext::LX(const RationalMatrix &X) const {
    // L_X = i_X d + d i_X; on generators the second summand differentiates a
    // scalar, so L_X(g) = i_X(d g).
    DerivationSpec ix = iX(X);
    DerivationSpec D;
    D.degree = 0;
    for (const auto &[g, img] : d_.gen_images) D.set(g, derive(ix, img));
    return D;
}

GradedElement chern_of(const MatrixForm &R, unsigned i) { return R.power(i).trace(); }

GradedElement transgression_of(const MatrixForm &alpha, const MatrixForm &R, unsigned i) {
    if (i % 2 == 0) throw std::out_of_range("transgression_of: index must be odd");
    unsigned q = alpha.q();
    auto [alpha_o, alpha_s] = sym_antisym_split(alpha);
    auto [R_o, R_s] = sym_antisym_split(R);
    MatrixForm alpha_s2 = mul(alpha_s, alpha_s);

    // Integrand as a polynomial in the transgression parameter t:
    //   P(t) = (R_o - alpha_s^2) + t R_s + t^2 alpha_s^2.
    std::vector<MatrixForm> P{R_o - alpha_s2, R_s, alpha_s2};
    std::vector<MatrixForm> acc{MatrixForm::build(q, [&](unsigned a, unsigned b) {
        return a == b ? GradedElement::one() : GradedElement::zero();
    })};
    for (unsigned p = 1; p < i; ++p) {
        std::vector<MatrixForm> next(acc.size() + P.size() - 1, MatrixForm(q));
        for (size_t a = 0; a < acc.size(); ++a)
            for (size_t b = 0; b < P.size(); ++b) next[a + b] += mul(acc[a], P[b]);
        acc = std::move(next);
    }
    GradedElement h;
    for (size_t a = 0; a < acc.size(); ++a) {
        GradedElement tr = mul(alpha_s, acc[a]).trace();
        h += tr.scaled(Rational(1, (std::int64_t)a + 1)); // int_0^1 t^a dt
    }
    return h.scaled(Rational((std::int64_t)i));
}

GradedElement chern_c(const WeilContext &ctx, unsigned i) {
    if (i < 1 || i > ctx.q()) throw std::out_of_range("chern_c: need 1 <= i <= q");
    return chern_of(ctx.Omega(), i);
}

GradedElement transgression_h(const WeilContext &ctx, unsigned i) {
    if (i < 1 || i > ctx.q() || i % 2 == 0)
        throw std::out_of_range("transgression_h: need odd i with 1 <= i <= q");
    return transgression_of(ctx.omega(), ctx.Omega(), i);
}

bool is_basic(const GradedElement &a, const WeilContext &ctx,
              const std::vector<RationalMatrix> &contraction) {
    for (const RationalMatrix &X : contraction)
        if (!derive(ctx.iX(X), a).is_zero()) return false;
    for (const RationalMatrix &X : ctx.lie().basis)
        if (!derive(ctx.LX(X), a).is_zero()) return false;
    return true;
}

WOAlphabet::WOAlphabet(unsigned q) : q_(q) {
    if (q < 1) throw std::invalid_argument("WOAlphabet: q must be >= 1");
    d_.degree = 1;
    for (unsigned i = 1; i <= q; i += 2) {
        Gen h = symbols::generator("h" + std::to_string(i), i, Family::DerivedCoeff);
        hs_.push_back(h);
        all_gens_.insert(h);
    }
    for (unsigned i = 1; i <= q; ++i) {
        Gen c = symbols::generator("c" + std::to_string(i), 2 * i, Family::DerivedCoeff);
        cs_.push_back(c);
        c_gens_.insert(c);
        all_gens_.insert(c);
        d_.set(c, GradedElement::zero());
    }
    for (unsigned k = 0; k < hs_.size(); ++k) d_.set(hs_[k], GradedElement::gen(cs_[2 * k]));
}

GradedElement WOAlphabet::h(unsigned i) const {
    if (i % 2 == 0 || i > q_) throw std::out_of_range("WOAlphabet::h: need odd i <= q");
    return GradedElement::gen(hs_[i / 2]);
}

GradedElement WOAlphabet::c(unsigned i) const {
    if (i < 1 || i > q_) throw std::out_of_range("WOAlphabet::c: need 1 <= i <= q");
    return GradedElement::gen(cs_[i - 1]);
}

AlgebraHom WOAlphabet::inclusion(const WeilContext &ctx) const {
    AlgebraHom H;
    for (unsigned k = 0; k < hs_.size(); ++k) H.set(hs_[k], transgression_h(ctx, 2 * k + 1));
    for (unsigned i = 1; i <= q_; ++i) H.set(cs_[i - 1], chern_c(ctx, i));
    return H;
}

GradedElement truncate(const GradedElement &a, const WOAlphabet &alphabet, TruncationPolicy p) {
    std::vector<Monomial> kept;
    for (const Monomial &m : a.terms()) {
        unsigned c_degree = 0;
        for (const GenPow &gp : m.word) {
            if (!alphabet.in_alphabet(gp.gen))
                throw alphabet_error("truncate: generator '" + symbols::gen_name(gp.gen) +
                                     "' is not in the h/c alphabet");
            if (alphabet.is_c(gp.gen)) c_degree += symbols::gen_degree(gp.gen) * gp.exp;
        }
        if (c_degree <= 2 * p.q) kept.push_back(m);
    }
    return GradedElement::from_raw(std::move(kept));
}

} // namespace folichar
