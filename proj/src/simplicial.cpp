#include "folichar/simplicial.hpp"

#include <sstream>

namespace folichar {

namespace {

std::string num(unsigned v) { return std::to_string(v); }

std::string triple(const char *stem, unsigned i, unsigned a, unsigned b, unsigned j) {
    return std::string(stem) + num(i) + "(" + num(a + 1) + "," + num(b + 1) + "," + num(j + 1) + ")";
}

} // namespace

LevelContext level_context(unsigned k) {
    LevelContext ctx;
    ctx.k = k;
    for (unsigned j = 1; j <= k; ++j) {
        ctx.t.push_back(symbols::function("t" + num(j), FnKind::SimplexParameter));
        ctx.dt.push_back(symbols::generator("dt" + num(j), 1, Family::SimplexTDiff));
    }
    return ctx;
}

unsigned face_index(unsigned k, unsigned i, unsigned j) {
    if (i == 0) return j + 1;
    if (i == k) return j;
    return j < i ? j : j + 1;
}

// ---------------------------------------------------------------------------
// Formal alphabet

FormalFamily::FormalFamily(unsigned q, unsigned max_level) : PullbackFamily(q, max_level) {
    for (unsigned i = 0; i <= max_level; ++i) {
        alphas_.push_back(MatrixForm::build(q, [&](unsigned a, unsigned b) {
            return GradedElement::gen(symbols::generator(
                "a" + num(i) + "(" + num(a + 1) + "," + num(b + 1) + ")", 1, Family::Pullback1Form));
        }));
        dalphas_.push_back(MatrixForm::build(q, [&](unsigned a, unsigned b) {
            return GradedElement::gen(symbols::generator(
                "da" + num(i) + "(" + num(a + 1) + "," + num(b + 1) + ")", 2, Family::Pullback2Form));
        }));
    }
}

const MatrixForm &FormalFamily::alpha(unsigned i) const { return alphas_.at(i); }
const MatrixForm &FormalFamily::dalpha(unsigned i) const { return dalphas_.at(i); }

namespace {
Gen only_gen(const GradedElement &e) { return e.terms().front().word.front().gen; }
} // namespace

DerivationSpec FormalFamily::d(const LevelContext &ctx) const {
    DerivationSpec D;
    D.degree = 1;
    for (unsigned i = 0; i <= max_level_; ++i)
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b) {
                D.set(only_gen(alphas_[i].at(a, b)), dalphas_[i].at(a, b));
                D.set(only_gen(dalphas_[i].at(a, b)), GradedElement::zero());
            }
    D.fn_images.emplace();
    for (unsigned j = 0; j < ctx.k; ++j) {
        D.set_fn(ctx.t[j], GradedElement::gen(ctx.dt[j]));
        D.set(ctx.dt[j], GradedElement::zero());
    }
    return D;
}

DerivationSpec FormalFamily::iX(const RationalMatrix &X) const {
    DerivationSpec D;
    D.degree = -1;
    for (unsigned i = 0; i <= max_level_; ++i)
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b)
                D.set(only_gen(alphas_[i].at(a, b)), GradedElement(X[a][b]));
    LevelContext ctx = level_context(max_level_);
    for (Gen dt : ctx.dt) D.set(dt, GradedElement::zero());
    return D;
}

AlgebraHom FormalFamily::face_subst(unsigned k, unsigned i) const {
    AlgebraHom H;
    for (unsigned j = 0; j + 1 <= k; ++j) {
        unsigned nj = face_index(k, i, j);
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b) {
                H.set(only_gen(alphas_.at(j).at(a, b)), alphas_.at(nj).at(a, b));
                H.set(only_gen(dalphas_.at(j).at(a, b)), dalphas_.at(nj).at(a, b));
            }
    }
    return H;
}

AlgebraHom FormalFamily::shift_subst(unsigned by) const {
    if (by > max_level_)
        throw std::out_of_range("shift_subst: shift exceeds the registered pullback range");
    AlgebraHom H;
    for (unsigned j = 0; j + by <= max_level_; ++j)
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b) {
                H.set(only_gen(alphas_.at(j).at(a, b)), alphas_.at(j + by).at(a, b));
                H.set(only_gen(dalphas_.at(j).at(a, b)), dalphas_.at(j + by).at(a, b));
            }
    return H;
}

// ---------------------------------------------------------------------------
// Local Bott model

LocalFamily::LocalFamily(unsigned q, unsigned max_level) : PullbackFamily(q, max_level) {
    for (unsigned j = 0; j < q; ++j)
        dz_shared_.push_back(symbols::generator("dz" + num(j + 1), 1, Family::CoordinateDz));
    mc_ = MatrixForm::build(q, [&](unsigned a, unsigned b) {
        return GradedElement::gen(
            symbols::generator("m(" + num(a + 1) + "," + num(b + 1) + ")", 1, Family::MaurerCartan));
    });

    zeta_.resize(max_level + 1);
    A_.resize(max_level + 1);
    AL_.resize(max_level + 1);
    AT_.resize(max_level + 1);
    for (unsigned i = 0; i <= max_level; ++i) {
        for (unsigned j = 0; j < q; ++j)
            zeta_[i].push_back(
                symbols::generator("dz" + num(j + 1) + "_p" + num(i), 1, Family::CoordinateDz));
        A_[i].assign(q, std::vector<std::vector<Fn>>(q));
        AL_[i].assign(q, std::vector<std::vector<Gen>>(q));
        AT_[i].assign(q, std::vector<std::vector<std::vector<Fn>>>(q));
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                AT_[i][a][b].resize(q);
                for (unsigned j = 0; j < q; ++j) {
                    A_[i][a][b].push_back(
                        symbols::function(triple("A", i, a, b, j), FnKind::OpaqueCoefficient));
                    AL_[i][a][b].push_back(
                        symbols::generator(triple("AL", i, a, b, j), 1, Family::Leafwise1Form));
                    for (unsigned l = 0; l < q; ++l)
                        AT_[i][a][b][j].push_back(symbols::function(
                            triple("AT", i, a, b, j) + "[" + num(l + 1) + "]",
                            FnKind::OpaqueCoefficient));
                }
            }
        betas_.push_back(MatrixForm::build(q, [&](unsigned a, unsigned b) {
            GradedElement e;
            for (unsigned j = 0; j < q; ++j)
                e += wedge(GradedElement::fn(A_[i][a][b][j]), GradedElement::gen(zeta_[i][j]));
            return e;
        }));
        alphas_.push_back(betas_.back() + mc_);
    }
}

const MatrixForm &LocalFamily::alpha(unsigned i) const { return alphas_.at(i); }
const MatrixForm &LocalFamily::beta(unsigned i) const { return betas_.at(i); }

DerivationSpec LocalFamily::d(const LevelContext &ctx) const {
    DerivationSpec D;
    D.degree = 1;
    MatrixForm mm = -mul(mc_, mc_);
    for (unsigned a = 0; a < q_; ++a)
        for (unsigned b = 0; b < q_; ++b) D.set(only_gen(mc_.at(a, b)), mm.at(a, b));
    for (Gen g : dz_shared_) D.set(g, GradedElement::zero());
    D.fn_images.emplace();
    for (unsigned i = 0; i <= max_level_; ++i) {
        for (Gen g : zeta_[i]) D.set(g, GradedElement::zero());
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b)
                for (unsigned j = 0; j < q_; ++j) {
                    GradedElement dA = GradedElement::gen(AL_[i][a][b][j]);
                    for (unsigned l = 0; l < q_; ++l)
                        dA += wedge(GradedElement::fn(AT_[i][a][b][j][l]),
                                    GradedElement::gen(zeta_[i][l]));
                    D.set_fn(A_[i][a][b][j], std::move(dA));
                }
    }
    for (unsigned j = 0; j < ctx.k; ++j) {
        D.set_fn(ctx.t[j], GradedElement::gen(ctx.dt[j]));
        D.set(ctx.dt[j], GradedElement::zero());
    }
    return D;
}

DerivationSpec LocalFamily::iX(const RationalMatrix &X) const {
    // Base-direction forms are killed; the Maurer-Cartan part pairs with the
    // vertical fundamental field.
    DerivationSpec D;
    D.degree = -1;
    for (unsigned a = 0; a < q_; ++a)
        for (unsigned b = 0; b < q_; ++b) D.set(only_gen(mc_.at(a, b)), GradedElement(X[a][b]));
    for (Gen g : dz_shared_) D.set(g, GradedElement::zero());
    for (unsigned i = 0; i <= max_level_; ++i) {
        for (Gen g : zeta_[i]) D.set(g, GradedElement::zero());
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b)
                for (unsigned j = 0; j < q_; ++j) D.set(AL_[i][a][b][j], GradedElement::zero());
    }
    LevelContext ctx = level_context(max_level_);
    for (Gen dt : ctx.dt) D.set(dt, GradedElement::zero());
    return D;
}

AlgebraHom LocalFamily::rename(unsigned upto, const std::function<unsigned(unsigned)> &newidx,
                               bool shared) const {
    AlgebraHom H;
    for (unsigned a = 0; a < q_; ++a)
        for (unsigned b = 0; b < q_; ++b)
            H.set(only_gen(mc_.at(a, b)), mc_.at(a, b));
    for (Gen g : dz_shared_) H.set(g, GradedElement::gen(g));
    for (unsigned i = 0; i <= upto; ++i) {
        unsigned ni = newidx(i);
        for (unsigned j = 0; j < q_; ++j) {
            if (shared)
                H.set(zeta_[i][j], GradedElement::gen(dz_shared_[j]));
            else
                H.set(zeta_[i][j], GradedElement::gen(zeta_.at(ni)[j]));
        }
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b)
                for (unsigned j = 0; j < q_; ++j) {
                    H.map_fn(A_[i][a][b][j], A_.at(ni)[a][b][j]);
                    H.set(AL_[i][a][b][j], GradedElement::gen(AL_.at(ni)[a][b][j]));
                    for (unsigned l = 0; l < q_; ++l)
                        H.map_fn(AT_[i][a][b][j][l], AT_.at(ni)[a][b][j][l]);
                }
    }
    return H;
}

AlgebraHom LocalFamily::face_subst(unsigned k, unsigned i) const {
    return rename(k - 1, [k, i](unsigned j) { return face_index(k, i, j); }, false);
}

AlgebraHom LocalFamily::face_subst_shared(unsigned k, unsigned i) const {
    AlgebraHom H = rename(k - 1, [k, i](unsigned j) { return face_index(k, i, j); }, false);
    // shared-dz cochains contain dz_shared only; identity images are already
    // installed by rename().
    return H;
}

AlgebraHom LocalFamily::shift_subst(unsigned by) const {
    if (by > max_level_)
        throw std::out_of_range("shift_subst: shift exceeds the registered pullback range");
    return rename(max_level_ - by, [by](unsigned j) { return j + by; }, false);
}

AlgebraHom LocalFamily::identify_dz() const {
    return rename(max_level_, [](unsigned j) { return j; }, true);
}

AlgebraHom LocalFamily::unit_pullback() const {
    AlgebraHom H = rename(1, [](unsigned) { return 0; }, true);
    return H;
}

// ---------------------------------------------------------------------------
// Connection, curvature, integration

MatrixForm simplicial_connection(const PullbackFamily &fam, const LevelContext &ctx) {
    MatrixForm r = fam.alpha(ctx.k);
    for (unsigned i = 1; i <= ctx.k; ++i)
        r += (fam.alpha(i - 1) - fam.alpha(ctx.k)).scaled_fn(ctx.t[i - 1]);
    return r;
}

MatrixForm curvature(const MatrixForm &A, const DerivationSpec &d) {
    return apply(d, A) + mul(A, A);
}

GradedElement integrate_simplex(const GradedElement &e, const LevelContext &ctx) {
    if (ctx.k == 0) return e;
    std::vector<Monomial> raw;
    for (const Monomial &m : e.terms()) {
        // the dt part must be exactly dt_1 ... dt_k
        unsigned dt_count = 0;
        bool bad = false;
        for (const GenPow &gp : m.word)
            if (symbols::gen_family(gp.gen) == Family::SimplexTDiff) {
                bool known = false;
                for (Gen dt : ctx.dt) known |= (dt == gp.gen);
                if (!known) bad = true;
                dt_count += gp.exp;
            }
        if (bad || dt_count != ctx.k) continue;

        // extract dt_1, ..., dt_k to the front in order, tracking the sign
        int sign = 1;
        Word rest = m.word;
        for (Gen dt : ctx.dt) {
            unsigned odd_before = 0;
            size_t pos = rest.size();
            for (size_t p = 0; p < rest.size(); ++p) {
                if (rest[p].gen == dt) {
                    pos = p;
                    break;
                }
                if (symbols::gen_degree(rest[p].gen) % 2 && rest[p].exp % 2) ++odd_before;
            }
            if (pos == rest.size()) {
                sign = 0;
                break;
            }
            if (odd_before % 2) sign = -sign;
            rest.erase(rest.begin() + (long)pos);
        }
        if (sign == 0) continue;

        // Dirichlet integral of the t-polynomial
        FnPart funcs;
        unsigned total = 0;
        Rational numer(1);
        for (const FnPow &fp : m.funcs) {
            bool is_t = false;
            for (Fn t : ctx.t) is_t |= (t == fp.fn);
            if (is_t) {
                numer *= Rational::factorial(fp.exp);
                total += fp.exp;
            } else {
                funcs.push_back(fp);
            }
        }
        Rational value = numer / Rational::factorial(ctx.k + total);
        Rational coeff = sign < 0 ? -m.coeff : m.coeff;
        raw.push_back(Monomial{coeff * value, std::move(funcs), std::move(rest)});
    }
    return GradedElement::from_raw(std::move(raw));
}

Cochain integrate_simplex(const Cochain &c, const LevelContext &ctx) {
    return Cochain{c.level, integrate_simplex(c.element, ctx), c.tag};
}

Cochain coboundary(const Cochain &c, const PullbackFamily &fam) {
    unsigned k = (unsigned)c.level + 1;
    GradedElement sum;
    try {
        for (unsigned i = 0; i <= k; ++i) {
            GradedElement part = hom_apply(fam.face_subst(k, i), c.element);
            if (i % 2)
                sum -= part;
            else
                sum += part;
        }
    } catch (const missing_image_error &e) {
        throw alphabet_error(std::string("coboundary: cochain outside the face-registered alphabet (") +
                             e.what() + ")");
    }
    return Cochain{(int)k, std::move(sum), c.tag};
}

Cochain cup(const Cochain &c1, const Cochain &c2, const PullbackFamily &fam) {
    AlgebraHom shift = fam.shift_subst((unsigned)c1.level);
    GradedElement shifted = hom_apply(shift, c2.element);
    GradedElement sum;
    for (unsigned n = 0; n <= c1.element.max_degree(); ++n) {
        GradedElement part = c1.element.homogeneous_part(n);
        if (part.is_zero()) continue;
        int sign = (n * (unsigned)c2.level) % 2 ? -1 : 1;
        sum += wedge(part, shifted).scaled(Rational(sign));
    }
    return Cochain{c1.level + c2.level, std::move(sum), c1.tag};
}

std::vector<Cochain> char_cochain(const GradedElement &word, unsigned K, const WOAlphabet &wo,
                                  const WeilContext &wctx, const PullbackFamily &fam) {
    GradedElement weil_rep = hom_apply(wo.inclusion(wctx), word);
    std::vector<Cochain> out;
    for (unsigned k = 0; k <= K; ++k) {
        LevelContext ctx = level_context(k);
        MatrixForm a_k = simplicial_connection(fam, ctx);
        MatrixForm r_k = curvature(a_k, fam.d(ctx));
        AlgebraHom H;
        for (unsigned a = 0; a < wctx.q(); ++a)
            for (unsigned b = 0; b < wctx.q(); ++b) {
                H.set(only_gen(wctx.omega().at(a, b)), a_k.at(a, b));
                H.set(only_gen(wctx.Omega().at(a, b)), r_k.at(a, b));
            }
        GradedElement e = hom_apply(H, weil_rep);
        out.push_back(Cochain{(int)k, integrate_simplex(e, ctx), fam.tag()});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verification drivers

BottReport verify_bott(unsigned q, unsigned k, const std::vector<unsigned> &c_word) {
    BottReport rep;
    rep.q = q;
    rep.k = k;
    {
        std::ostringstream os;
        for (size_t i = 0; i < c_word.size(); ++i) os << (i ? "*" : "") << "c" << c_word[i];
        rep.poly = os.str();
    }
    for (unsigned i : c_word) {
        if (i < 1 || i > q) throw std::out_of_range("verify_bott: c" + num(i) + " undefined for q=" + num(q));
        rep.deg_p += i;
    }

    LocalFamily fam(q, k);
    LevelContext ctx = level_context(k);
    MatrixForm a_k = simplicial_connection(fam, ctx);
    MatrixForm r_k = curvature(a_k, fam.d(ctx));

    // P(R^(k)) as a product of traces of powers, reusing cached powers.
    std::vector<MatrixForm> powers{r_k}; // powers[p] = R^{p+1}
    unsigned max_pow = 0;
    for (unsigned i : c_word) max_pow = std::max(max_pow, i);
    for (unsigned p = 1; p < max_pow; ++p) powers.push_back(mul(powers.back(), r_k));
    GradedElement p_of_r = GradedElement::one();
    for (unsigned i : c_word) p_of_r = wedge(p_of_r, powers[i - 1].trace());

    GradedElement labelled = integrate_simplex(p_of_r, ctx);
    rep.surviving_monomials = labelled.terms().size();
    if (!labelled.is_zero()) rep.min_dz = labelled.min_family_count(Family::CoordinateDz);
    rep.dz_bound_ok = !rep.min_dz || *rep.min_dz >= rep.deg_p;
    if (!rep.dz_bound_ok) {
        for (const Monomial &m : labelled.terms()) {
            unsigned c = 0;
            for (const GenPow &gp : m.word)
                if (symbols::gen_family(gp.gen) == Family::CoordinateDz) c += gp.exp;
            if (c < rep.deg_p) {
                rep.witness = GradedElement::from_raw({m}).dump();
                break;
            }
        }
    }

    GradedElement shared = hom_apply(fam.identify_dz(), labelled);
    rep.vanishes_shared = shared.is_zero();
    if (rep.deg_p > q && !rep.vanishes_shared && rep.witness.empty())
        rep.witness = GradedElement::from_raw({shared.terms().front()}).dump();

    rep.passed = rep.dz_bound_ok && (rep.deg_p <= q || rep.vanishes_shared);
    return rep;
}

GvClosedReport verify_gv_closed() {
    GvClosedReport rep;
    const unsigned q = 1;

    LocalFamily fam(q, 3);
    GradedElement a0 = fam.alpha(0).at(0, 0);
    GradedElement a1 = fam.alpha(1).at(0, 0);
    GradedElement alpha_g = (a0 + a1).scaled(Rational(-1, 2));
    GradedElement r_g = a0 - a1;
    GradedElement c_labelled = wedge(alpha_g, r_g);
    GradedElement c_shared = hom_apply(fam.identify_dz(), c_labelled);

    GradedElement del;
    for (unsigned i = 0; i <= 2; ++i) {
        GradedElement part = hom_apply(fam.face_subst_shared(2, i), c_shared);
        if (i % 2)
            del -= part;
        else
            del += part;
    }
    rep.closed_local = del.is_zero();

    // unit inclusion: alpha_0 = alpha_1 collapses R_G
    rep.unit_pullback_zero = hom_apply(fam.unit_pullback(), r_g).is_zero();

    // necessity witness in the free alphabet
    FormalFamily ffam(q, 3);
    GradedElement f0 = ffam.alpha(0).at(0, 0);
    GradedElement f1 = ffam.alpha(1).at(0, 0);
    Cochain cf{1, wedge((f0 + f1).scaled(Rational(-1, 2)), f0 - f1), ModelTag::Formal};
    Cochain del_cf = coboundary(cf, ffam);
    rep.formal_nonzero = !del_cf.element.is_zero();
    rep.formal_witness = del_cf.element.dump();

    // both signs of the level-1 integrated curvature
    Cochain alpha0{0, f0, ModelTag::Formal};
    rep.del_alpha_dump = coboundary(alpha0, ffam).element.dump();
    rep.r_g_dump = (f0 - f1).dump();

    rep.passed = rep.closed_local && rep.formal_nonzero && rep.unit_pullback_zero;
    return rep;
}

} // namespace folichar
