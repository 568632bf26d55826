#pragma once

// Executable facts for the special classes: twisted ribbons of genus zero,
// products of Brauer-Severi curves, and the curve/surface comparison table.

#include "ulrich/bounds.hpp"
#include "ulrich/rdim.hpp"

#include <string>
#include <vector>

namespace ulrich {

// --- twisted ribbons -------------------------------------------------------
// Line bundles on the ribbon D are the powers of the dualizing sheaf; with
// polarization omega^(-d) the Ulrich conditions for omega^a depend only on
// the effective exponent e = a - d.

// h^0(omega^e) = 0 iff e > 0.
bool ribbon_h0_vanishes(std::int64_t e);

// h^1(omega^e) = h^0(omega^(1-e)) by duality, so it vanishes iff e <= 0.
bool ribbon_h1_vanishes(std::int64_t e);

// Enumerated window of effective exponents showing that no exponent kills
// h^0 and h^1 simultaneously: {e > 0} and {e <= 0} partition the integers.
struct RibbonVanishingCertificate {
    struct Entry {
        std::int64_t e;
        bool h0_vanishes;
        bool h1_vanishes;
    };

    std::int64_t window_lo = 0;
    std::int64_t window_hi = 0;
    std::vector<Entry> entries;

    // Recomputes every entry and checks that exactly one vanishing holds for
    // each exponent (so the simultaneous-vanishing set is empty).
    bool verify() const;
};

RibbonVanishingCertificate ribbon_certificate(std::int64_t window_lo = -50,
                                              std::int64_t window_hi = 50);

struct RibbonLineBundleResult {
    bool exists = false;  // always false
    RibbonVanishingCertificate certificate;
};

// No Ulrich line bundle exists on the ribbon, for any polarization power d;
// the certificate carries the exhaustive window evidence.
RibbonLineBundleResult ribbon_ulrich_line_bundle_exists(std::int64_t d);

struct RibbonComplexity {
    Int uc;                     // always 2
    std::string witness;        // the rank-2 bundle realizing the value
    std::string imported_fact;  // vanishing statement taken from the literature
    std::string citation;
    RibbonLineBundleResult line_bundle;
};

RibbonComplexity uc_ribbon(std::int64_t d);

// --- products of curves ----------------------------------------------------

enum class Relation {
    RdimPlusOne,
    RdimEqual,
    RdimMinusOne,
    RdimPlusTwo,
    Undetermined,
};

const char* relation_name(Relation r);

struct ProductReport {
    Int uc;
    Int rdim;
    Relation relation;
};

// Polarization pi^*A + H with H the relative hyperplane section (caller
// asserts). uc is 2 in all three cases; rdim distinguishes them.
ProductReport product_of_curves_report(ProductKind kind);

// --- curve / surface comparison table --------------------------------------

struct Comparison {
    UcBound uc;
    RdimValue rdim;
    Relation relation = Relation::Undetermined;
    std::string note;  // set when the relation is pinned down or excluded
};

// Classifies uc against rdim: exact difference when both sides are pinned,
// otherwise undetermined, with a note when candidate sets or intervals rule
// out uc = rdim + 1.
Comparison classify_relation(UcBound uc, RdimValue rdim);

Comparison curve_comparison(std::int64_t genus, bool has_rational_point);

// The surface table. split_uc feeds the del Pezzo 9 case (uc of the plane at
// the anticanonical-multiple polarization, from the catalogue).
Comparison surface_comparison(SurfaceClass cls, const SurfaceParams& params,
                              std::optional<Int> split_uc = std::nullopt,
                              bool assume_conjecture = false);

}  // namespace ulrich
