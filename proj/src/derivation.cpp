#include "folichar/derivation.hpp"

namespace folichar {

using symbols::fn_name;
using symbols::gen_degree;
using symbols::gen_name;

namespace {

const GradedElement &gen_image(const DerivationSpec &D, Gen g) {
    auto it = D.gen_images.find(g);
    if (it == D.gen_images.end())
        throw missing_image_error("derivation has no image for generator '" + gen_name(g) + "'");
    return it->second;
}

// D applied to one monomial, appended to `raw` as raw monomials.
void derive_monomial(const DerivationSpec &D, const Monomial &m, std::vector<Monomial> &raw) {
    // Function part.  Functions have degree 0, so no Koszul signs appear.
    if (D.fn_images) {
        for (size_t fi = 0; fi < m.funcs.size(); ++fi) {
            auto it = D.fn_images->find(m.funcs[fi].fn);
            if (it == D.fn_images->end())
                throw missing_image_error("derivation has no image for function '" +
                                          fn_name(m.funcs[fi].fn) + "'");
            const GradedElement &img = it->second;
            if (img.is_zero()) continue;
            Monomial base;
            base.coeff = m.coeff * Rational((std::int64_t)m.funcs[fi].exp);
            base.funcs = m.funcs;
            if (base.funcs[fi].exp == 1)
                base.funcs.erase(base.funcs.begin() + (long)fi);
            else
                base.funcs[fi].exp -= 1;
            for (const Monomial &im : img.terms()) {
                Monomial t;
                t.coeff = base.coeff * im.coeff;
                t.funcs = base.funcs;
                t.funcs.insert(t.funcs.end(), im.funcs.begin(), im.funcs.end());
                t.word = im.word;
                t.word.insert(t.word.end(), m.word.begin(), m.word.end());
                raw.push_back(std::move(t));
            }
        }
    }

    // Generator part: D(g1^e1 ... gn^en) with the sign (-1)^{deg(D) * prefix}.
    unsigned prefix_deg = 0;
    for (size_t gi = 0; gi < m.word.size(); ++gi) {
        const GenPow &gp = m.word[gi];
        const GradedElement &img = gen_image(D, gp.gen);
        if (!img.is_zero()) {
            bool neg = (D.degree % 2 != 0) && (prefix_deg % 2 != 0);
            Rational c = m.coeff * Rational((std::int64_t)gp.exp);
            if (neg) c = -c;
            for (const Monomial &im : img.terms()) {
                Monomial t;
                t.coeff = c * im.coeff;
                t.funcs = m.funcs;
                t.funcs.insert(t.funcs.end(), im.funcs.begin(), im.funcs.end());
                // prefix, image word, remaining word (with g^{e-1} kept in place).
                t.word.assign(m.word.begin(), m.word.begin() + (long)gi);
                if (gp.exp > 1) t.word.push_back(GenPow{gp.gen, gp.exp - 1});
                t.word.insert(t.word.end(), im.word.begin(), im.word.end());
                t.word.insert(t.word.end(), m.word.begin() + (long)gi + 1, m.word.end());
                raw.push_back(std::move(t));
            }
        }
        prefix_deg += gen_degree(gp.gen) * gp.exp;
    }
}

} // namespace

GradedElement derive(const DerivationSpec &D, const GradedElement &a) {
    std::vector<Monomial> raw;
    for (const Monomial &m : a.terms()) derive_monomial(D, m, raw);
    return GradedElement::from_raw(std::move(raw));
}

GradedElement derive2(const DerivationSpec &D1, const DerivationSpec &D2, const GradedElement &a) {
    return derive(D1, derive(D2, a));
}

GradedElement hom_apply(const AlgebraHom &H, const GradedElement &a) {
    GradedElement result;
    for (const Monomial &m : a.terms()) {
        GradedElement term(m.coeff);
        if (!m.funcs.empty()) {
            FnPart funcs;
            funcs.reserve(m.funcs.size());
            for (const FnPow &fp : m.funcs) {
                auto it = H.fn_map.find(fp.fn);
                funcs.push_back(FnPow{it == H.fn_map.end() ? fp.fn : it->second, fp.exp});
            }
            Monomial fm{Rational(1), std::move(funcs), {}};
            std::vector<Monomial> raw{std::move(fm)};
            term = wedge(term, GradedElement::from_raw(std::move(raw)));
        }
        for (const GenPow &gp : m.word) {
            auto it = H.gen_images.find(gp.gen);
            if (it == H.gen_images.end())
                throw missing_image_error("homomorphism has no image for generator '" +
                                          gen_name(gp.gen) + "'");
            for (std::uint32_t e = 0; e < gp.exp; ++e) term = wedge(term, it->second);
            if (term.is_zero()) break;
        }
        result += term;
    }
    return result;
}

} // namespace folichar
