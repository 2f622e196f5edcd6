// Interned generator and function symbols for the graded algebra engine.
//
// Generators carry a degree and a family tag; the monomial order is
// (family, natural name order), fixed once and for all so normal forms and
// canonical dumps are stable.  Function symbols are degree 0 and commute
// with everything.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace folichar {

enum class Family : std::uint8_t {
    WeilOmegaLower,   // degree-1 Weil generators (omega)
    WeilOmegaUpper,   // degree-2 Weil generators (Omega)
    SimplexTDiff,     // dt_i on the standard simplex
    Pullback1Form,    // (p^k_i)* of a connection form
    Pullback2Form,    // (p^k_i)* of its exterior derivative
    CoordinateDz,     // transverse coordinate differentials
    Leafwise1Form,    // leafwise parts of opaque coefficient derivatives
    MaurerCartan,     // Maurer-Cartan form entries
    DerivedCoeff,     // abstract h_i / c_i alphabet and the like
};

const char *family_name(Family f);

enum class FnKind : std::uint8_t {
    OpaqueCoefficient,
    SimplexParameter,
};

using Gen = std::uint32_t;
using Fn = std::uint32_t;

// Global registry.  Interning the same name twice with identical attributes
// returns the same id; conflicting attributes throw.
namespace symbols {

Gen generator(const std::string &name, unsigned degree, Family family);
Fn function(const std::string &name, FnKind kind);

const std::string &gen_name(Gen g);
unsigned gen_degree(Gen g);
Family gen_family(Gen g);
bool gen_odd(Gen g);

const std::string &fn_name(Fn f);
FnKind fn_kind(Fn f);

// Strict total order: (family, natural name order).
bool gen_less(Gen a, Gen b);
bool fn_less(Fn a, Fn b);

} // namespace symbols

} // namespace folichar
