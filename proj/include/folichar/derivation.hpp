// Graded derivations (d, i_X, L_X and friends) and algebra homomorphisms
// acting on normal-form elements.
#pragma once

#include "folichar/element.hpp"

#include <optional>
#include <unordered_map>

namespace folichar {

// A derivation of fixed degree given by its images on generators, extended
// by the graded Leibniz rule.  Function symbols are constants unless
// `fn_images` is set, in which case every function occurring in the input
// must have an image there (simplex parameters, opaque-coefficient
// derivative splits).
struct DerivationSpec {
    int degree = 0;
    std::unordered_map<Gen, GradedElement> gen_images;
    std::optional<std::unordered_map<Fn, GradedElement>> fn_images;

    void set(Gen g, GradedElement img) { gen_images[g] = std::move(img); }
    void set_fn(Fn f, GradedElement img) {
        if (!fn_images) fn_images.emplace();
        (*fn_images)[f] = std::move(img);
    }
};

GradedElement derive(const DerivationSpec &D, const GradedElement &a);

// Composition (D1 o D2)(a); used for Cartan-formula constructions.
GradedElement derive2(const DerivationSpec &D1, const DerivationSpec &D2, const GradedElement &a);

// Degree-preserving algebra homomorphism: generators map to elements,
// function symbols optionally rename (identity otherwise).
struct AlgebraHom {
    std::unordered_map<Gen, GradedElement> gen_images;
    std::unordered_map<Fn, Fn> fn_map;

    void set(Gen g, GradedElement img) { gen_images[g] = std::move(img); }
    void map_fn(Fn from, Fn to) { fn_map[from] = to; }
};

GradedElement hom_apply(const AlgebraHom &H, const GradedElement &a);

} // namespace folichar
