#include "doctest.h"

#include "folichar/simplicial.hpp"

#include <random>

using namespace folichar;

namespace {

GradedElement only(const MatrixForm &m) { return m.at(0, 0); }

GradedElement random_pullback_cochain(const FormalFamily &fam, unsigned level, std::mt19937 &eng) {
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<int> idx(0, (int)level);
    GradedElement e;
    for (int term = 0; term < 4; ++term) {
        GradedElement w = GradedElement::one();
        int len = 1 + coin(eng);
        for (int f = 0; f < len; ++f) {
            unsigned i = (unsigned)idx(eng);
            unsigned a = (unsigned)coin(eng) % fam.q(), b = (unsigned)coin(eng) % fam.q();
            w = wedge(w, coin(eng) ? fam.alpha(i).at(a, b) : fam.dalpha(i).at(a, b));
        }
        e += w.scaled(Rational(coin(eng) - 1));
    }
    return e;
}

} // namespace

TEST_CASE("face table: k=2 composition rules") {
    // eps^2_0: (p0, p1) -> (p1, p2); eps^2_1: -> (p0, p2); eps^2_2: -> (p0, p1)
    CHECK(face_index(2, 0, 0) == 1);
    CHECK(face_index(2, 0, 1) == 2);
    CHECK(face_index(2, 1, 0) == 0);
    CHECK(face_index(2, 1, 1) == 2);
    CHECK(face_index(2, 2, 0) == 0);
    CHECK(face_index(2, 2, 1) == 1);
    // k=1: eps^1_0 = s sends p^0_0 to p^1_1, eps^1_1 = r sends it to p^1_0
    CHECK(face_index(1, 0, 0) == 1);
    CHECK(face_index(1, 1, 0) == 0);
}

TEST_CASE("simplicial connection: k=0, k=1, and the contraction axiom") {
    FormalFamily fam(2, 3);

    LevelContext c0 = level_context(0);
    CHECK(simplicial_connection(fam, c0) == fam.alpha(0));

    LevelContext c1 = level_context(1);
    MatrixForm a1 = simplicial_connection(fam, c1);
    // t alpha_0 + (1 - t) alpha_1
    MatrixForm expect =
        fam.alpha(1) + (fam.alpha(0) - fam.alpha(1)).scaled_fn(c1.t[0]);
    CHECK(a1 == expect);

    // i_X alpha^(k) = X for every basis element, k <= 3
    LieBasis gl2 = make_gl(2);
    for (unsigned k = 0; k <= 3; ++k) {
        LevelContext ctx = level_context(k);
        MatrixForm ak = simplicial_connection(fam, ctx);
        for (const auto &X : gl2.basis) {
            DerivationSpec ix = fam.iX(X);
            for (unsigned a = 0; a < 2; ++a)
                for (unsigned b = 0; b < 2; ++b)
                    CHECK(derive(ix, ak.at(a, b)) == GradedElement(X[a][b]));
        }
    }

    // the local model satisfies the same contraction axiom
    LocalFamily lfam(2, 3);
    for (unsigned k = 0; k <= 3; ++k) {
        LevelContext ctx = level_context(k);
        MatrixForm ak = simplicial_connection(lfam, ctx);
        for (const auto &X : gl2.basis) {
            DerivationSpec ix = lfam.iX(X);
            for (unsigned a = 0; a < 2; ++a)
                for (unsigned b = 0; b < 2; ++b)
                    CHECK(derive(ix, ak.at(a, b)) == GradedElement(X[a][b]));
        }
    }
}

TEST_CASE("curvature: Weil identity and the k=1 rank-1 formula") {
    // A = omega in the Weil algebra gives back Omega.
    WeilContext wc(make_gl(2));
    CHECK(curvature(wc.omega(), wc.d()) == wc.Omega());

    // k=1, q=1: R^(1) = dt (alpha_0 - alpha_1) + t dalpha_0 + (1-t) dalpha_1
    FormalFamily fam(1, 2);
    LevelContext ctx = level_context(1);
    MatrixForm a1 = simplicial_connection(fam, ctx);
    MatrixForm r1 = curvature(a1, fam.d(ctx));
    GradedElement dt = GradedElement::gen(ctx.dt[0]);
    GradedElement t = GradedElement::fn(ctx.t[0]);
    GradedElement expect = wedge(dt, only(fam.alpha(0)) - only(fam.alpha(1))) +
                           only(fam.dalpha(1)) +
                           wedge(t, only(fam.dalpha(0)) - only(fam.dalpha(1)));
    CHECK(only(r1) == expect);

    // Bianchi in the Weil algebra: dR = R omega - omega R
    MatrixForm R = curvature(wc.omega(), wc.d());
    CHECK(apply(wc.d(), R) == mul(R, wc.omega()) - mul(wc.omega(), R));
}

TEST_CASE("integrate_simplex: Dirichlet values and signs") {
    FormalFamily fam(1, 3);
    GradedElement beta = only(fam.alpha(2)); // a bystander factor

    LevelContext c1 = level_context(1);
    GradedElement t = GradedElement::fn(c1.t[0]);
    GradedElement dt = GradedElement::gen(c1.dt[0]);
    // int t dt ^ beta = 1/2 beta
    CHECK(integrate_simplex(wedge({t, dt, beta}), c1) == beta.scaled(Rational(1, 2)));
    // moving dt to the front past the odd beta costs a sign
    CHECK(integrate_simplex(wedge(beta, dt), c1) == -beta);

    LevelContext c2 = level_context(2);
    GradedElement t1 = GradedElement::fn(c2.t[0]), t2 = GradedElement::fn(c2.t[1]);
    GradedElement dt1 = GradedElement::gen(c2.dt[0]), dt2 = GradedElement::gen(c2.dt[1]);
    // int t1 t2 dt1 ^ dt2 ^ beta = (0!1!1!)/(2+2)! beta = 1/24 beta
    CHECK(integrate_simplex(wedge({t1, t2, dt1, dt2, beta}), c2) == beta.scaled(Rational(1, 24)));
    // Dirichlet against an iterated-integral oracle:
    //   int_{Delta^2} t1^2 t2 = int_0^1 t1^2 (1-t1)^2/2 dt1 = 1/60 = 2!1!/5!
    CHECK(integrate_simplex(wedge({t1, t1, t2, dt1, dt2}), c2) == GradedElement(Rational(1, 60)));
    // forms without the full dt top degree integrate to zero
    CHECK(integrate_simplex(wedge({t1, dt1, beta}), c2).is_zero());
    // k=0 is the identity
    CHECK(integrate_simplex(beta, level_context(0)) == beta);
}

TEST_CASE("level-1 value of psi(h1 c1); levels 2,3 vanish") {
    WeilContext wc(make_gl(1));
    WOAlphabet wo(1);
    FormalFamily fam(1, 3);
    GradedElement h1c1 = wedge(wo.h(1), wo.c(1));
    std::vector<Cochain> psi = char_cochain(h1c1, 3, wo, wc, fam);

    // level 0: alpha ^ dalpha
    CHECK(psi[0].element == wedge(only(fam.alpha(0)), only(fam.dalpha(0))));

    // level 1 normal form: -1/2 (a0 + a1)(a0 - a1) = a0 ^ a1
    GradedElement a0 = only(fam.alpha(0)), a1 = only(fam.alpha(1));
    GradedElement expect = wedge((a0 + a1).scaled(Rational(-1, 2)), a0 - a1);
    CHECK(psi[1].element == expect);
    CHECK(psi[1].element == wedge(a0, a1));
    CHECK(psi[1].element.dump() == "1 * a0(1,1) ∧ a1(1,1)");

    // levels 2, 3: dt-degree of the integrand is at most 1 < k
    CHECK(psi[2].element.is_zero());
    CHECK(psi[3].element.is_zero());
}

TEST_CASE("coboundary: del alpha at level 0 and del^2 = 0") {
    FormalFamily fam(1, 4);
    GradedElement a0 = only(fam.alpha(0)), a1 = only(fam.alpha(1));

    Cochain alpha{0, a0, ModelTag::Formal};
    Cochain del_alpha = coboundary(alpha, fam);
    CHECK(del_alpha.element == a1 - a0); // s*alpha - r*alpha

    // del(a0 ^ a1) at level 1 -> b1 b2 - b0 b2 + b0 b1
    Cochain c{1, wedge(a0, a1), ModelTag::Formal};
    GradedElement b0 = a0, b1 = a1, b2 = only(fam.alpha(2));
    CHECK(coboundary(c, fam).element == wedge(b1, b2) - wedge(b0, b2) + wedge(b0, b1));

    // del^2 = 0 on randomized pullback words, levels 1..3
    std::mt19937 eng(31337);
    FormalFamily fam2(2, 5);
    for (unsigned level = 1; level <= 3; ++level)
        for (int trial = 0; trial < 12; ++trial) {
            Cochain r{(int)level, random_pullback_cochain(fam2, level, eng), ModelTag::Formal};
            CHECK(coboundary(coboundary(r, fam2), fam2).element.is_zero());
        }

    // d del = del d (face substitution commutes with the differential)
    LevelContext c0 = level_context(0);
    DerivationSpec d = fam2.d(c0);
    for (unsigned level = 1; level <= 3; ++level)
        for (int trial = 0; trial < 8; ++trial) {
            Cochain r{(int)level, random_pullback_cochain(fam2, level, eng), ModelTag::Formal};
            GradedElement lhs = coboundary(Cochain{r.level, derive(d, r.element), r.tag}, fam2).element;
            GradedElement rhs = derive(d, coboundary(r, fam2).element);
            CHECK(lhs == rhs);
        }

    // alphabet error: cochain outside the registered faces
    WeilContext wc(make_gl(1));
    Cochain alien{0, wc.omega().at(0, 0), ModelTag::Formal};
    CHECK_THROWS_AS(coboundary(alien, fam), alphabet_error);
}

TEST_CASE("cup product: signs and associativity") {
    FormalFamily fam(1, 6);
    GradedElement a0 = only(fam.alpha(0)), a1 = only(fam.alpha(1));

    // two level-0 cochains: plain wedge
    Cochain x{0, a0, ModelTag::Formal};
    Cochain y{0, only(fam.dalpha(0)), ModelTag::Formal};
    CHECK(cup(x, y, fam).element == wedge(a0, only(fam.dalpha(0))));
    CHECK(cup(x, y, fam).level == 0);

    // degree-1 form at level 1 cup a 0-form at level 1: sign (-1)^{1*1}
    Cochain u{1, a0, ModelTag::Formal};
    Cochain v{1, GradedElement::one(), ModelTag::Formal};
    CHECK(cup(u, v, fam).element == -a0);
    CHECK(cup(u, v, fam).level == 2);

    // associativity on random triples up to total level 3
    std::mt19937 eng(777);
    std::uniform_int_distribution<int> lev(0, 1);
    for (int trial = 0; trial < 16; ++trial) {
        unsigned l1 = (unsigned)lev(eng), l2 = (unsigned)lev(eng), l3 = (unsigned)lev(eng);
        Cochain c1{(int)l1, random_pullback_cochain(fam, l1, eng), ModelTag::Formal};
        Cochain c2{(int)l2, random_pullback_cochain(fam, l2, eng), ModelTag::Formal};
        Cochain c3{(int)l3, random_pullback_cochain(fam, l3, eng), ModelTag::Formal};
        Cochain lhs = cup(cup(c1, c2, fam), c3, fam);
        Cochain rhs = cup(c1, cup(c2, c3, fam), fam);
        CHECK(lhs.element == rhs.element);
        CHECK(lhs.level == rhs.level);
    }

    // cup of del-closed, d-closed cochains is delta-closed: explicit cases
    // built from del(da_0) = da_1 - da_0 (d-closed since only Pullback2Form
    // generators occur, del-closed since del^2 = 0) and the unit.
    DerivationSpec d = fam.d(level_context(0));
    Cochain w{1, only(fam.dalpha(1)) - only(fam.dalpha(0)), ModelTag::Formal};
    CHECK(coboundary(w, fam).element.is_zero());
    CHECK(derive(d, w.element).is_zero());
    Cochain ww = cup(w, w, fam);
    CHECK(coboundary(ww, fam).element.is_zero());
    CHECK(derive(d, ww.element).is_zero());

    Cochain one{0, GradedElement::one(), ModelTag::Formal};
    CHECK(coboundary(one, fam).element.is_zero());
    Cochain ow = cup(one, w, fam);
    CHECK(coboundary(ow, fam).element.is_zero());
    CHECK(derive(d, ow.element).is_zero());
    CHECK(cup(one, u, fam).element == u.element);
}

TEST_CASE("two routes to the characteristic cochain agree") {
    // hom substitution omega -> alpha^(k), Omega -> R^(k) applied to the
    // universal h_i, c_i versus the closed formulae evaluated directly on
    // the pair (alpha^(k), R^(k)).
    for (unsigned q : {1u, 2u}) {
        WeilContext wc(make_gl(q));
        WOAlphabet wo(q);
        AlgebraHom incl = wo.inclusion(wc);
        FormalFamily fam(q, 2);
        for (unsigned k = 0; k <= 2; ++k) {
            LevelContext ctx = level_context(k);
            MatrixForm a_k = simplicial_connection(fam, ctx);
            MatrixForm r_k = curvature(a_k, fam.d(ctx));
            AlgebraHom H;
            for (unsigned a = 0; a < q; ++a)
                for (unsigned b = 0; b < q; ++b) {
                    H.set(wc.omega().at(a, b).terms().front().word.front().gen, a_k.at(a, b));
                    H.set(wc.Omega().at(a, b).terms().front().word.front().gen, r_k.at(a, b));
                }
            for (unsigned i = 1; i <= q; ++i)
                CHECK(hom_apply(H, hom_apply(incl, wo.c(i))) == chern_of(r_k, i));
            CHECK(hom_apply(H, hom_apply(incl, wo.h(1))) == transgression_of(a_k, r_k, 1));
        }
    }
    // and in the Weil algebra itself for (q, i) = (3, 3)
    WeilContext c3(make_gl(3));
    CHECK(transgression_of(c3.omega(), c3.Omega(), 3) == transgression_h(c3, 3));
}

TEST_CASE("char_cochain in the local Bott model") {
    WeilContext wc(make_gl(1));
    WOAlphabet wo(1);
    LocalFamily fam(1, 2);
    std::vector<Cochain> psi = char_cochain(wedge(wo.h(1), wo.c(1)), 2, wo, wc, fam);
    CHECK(psi[0].tag == ModelTag::Local);
    // level 1 agrees with alpha_G ^ R_G built by hand
    GradedElement a0 = fam.alpha(0).at(0, 0), a1 = fam.alpha(1).at(0, 0);
    CHECK(psi[1].element == wedge((a0 + a1).scaled(Rational(-1, 2)), a0 - a1));
    // level 2 vanishes by t-degree counting exactly as in the formal model
    CHECK(psi[2].element.is_zero());
    // the shared-dz image of the level-1 cochain is del-closed
    GradedElement shared = hom_apply(fam.identify_dz(), psi[1].element);
    GradedElement del;
    for (unsigned i = 0; i <= 2; ++i) {
        GradedElement part = hom_apply(fam.face_subst_shared(2, i), shared);
        if (i % 2)
            del -= part;
        else
            del += part;
    }
    CHECK(del.is_zero());
}

TEST_CASE("verify_bott: vanishing and the dz-degree bound") {
    // q=1, P=c1^2, k in {0,1,2}
    for (unsigned k = 0; k <= 2; ++k) {
        BottReport r = verify_bott(1, k, {1, 1});
        CHECK(r.passed);
        CHECK(r.deg_p == 2);
        CHECK(r.vanishes_shared);
        if (r.min_dz) CHECK(*r.min_dz >= 2);
    }
    // q=2, P=c1*c2, k in {0..3}
    for (unsigned k = 0; k <= 3; ++k) {
        BottReport r = verify_bott(2, k, {1, 2});
        CHECK(r.passed);
        CHECK(r.deg_p == 3);
        CHECK(r.vanishes_shared);
    }
    // q=1, P=c1, k=1: no vanishing claim, dz bound only
    BottReport r = verify_bott(1, 1, {1});
    CHECK(r.dz_bound_ok);
    CHECK(r.min_dz.has_value());
    CHECK(*r.min_dz >= 1);
    CHECK_FALSE(r.vanishes_shared); // deg <= q, genuinely nonzero

    CHECK_THROWS_AS(verify_bott(1, 0, {2}), std::out_of_range);
}

TEST_CASE("verify_gv_closed: local closure, necessity witness, units") {
    GvClosedReport r = verify_gv_closed();
    CHECK(r.passed);
    CHECK(r.closed_local);
    CHECK(r.formal_nonzero);
    CHECK(r.unit_pullback_zero);
    // del alpha = alpha_1 - alpha_0 while R_G = alpha_0 - alpha_1
    CHECK(r.del_alpha_dump == "-1 * a0(1,1)\n1 * a1(1,1)");
    CHECK(r.r_g_dump == "1 * a0(1,1)\n-1 * a1(1,1)");
}
