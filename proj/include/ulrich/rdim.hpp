#pragma once

// Categorical representability dimension, as exact values or closed integer
// intervals, from the arithmetic rules known for each variety class.
// Conjectural collapses (period = index) are opt-in and tagged.

#include "ulrich/bounds.hpp"
#include "ulrich/brauer.hpp"

#include <optional>

namespace ulrich {

struct RdimValue {
    enum class Kind { Exact, Interval, Unknown };

    Kind kind = Kind::Unknown;
    Int lower = 0;  // meaningful for Exact (== upper) and Interval
    Int upper = 0;
    bool conjectural = false;  // value rests on an assumed conjecture
    std::vector<Provenance> provenance;

    static RdimValue exact(Int v, std::string rule, std::string detail = {});
    static RdimValue interval(Int lo, Int hi, std::string rule, std::string detail = {});
    static RdimValue unknown(std::string rule, std::string detail = {});

    bool is_exact() const { return kind == Kind::Exact; }
    void check() const;
};

// Brauer-Severi variety attached to the given algebra.
//   index 1       -> exact 0 (rational point)
//   index 2, 3    -> exact index - 1
//   biquaternion  -> exact 2 (index must be 4)
//   otherwise     -> interval [1, index - 1]; with assume_conjecture and
//                    period = index, collapses to index - 1 (tagged).
RdimValue rdim_brauer_severi(const AlgebraInvariants& a, bool biquaternion,
                             bool assume_conjecture = false);

// Smooth curves: genus 0 splits by rational point; genus >= 1 is always 1.
RdimValue rdim_curve(std::int64_t genus, bool has_rational_point);

enum class ProductKind {
    CxC,     // non-split Brauer-Severi curve times itself
    C1xC2,   // two distinct non-split Brauer-Severi curves
    CxLine,  // non-split Brauer-Severi curve times the projective line
};

RdimValue rdim_product_of_curves(ProductKind kind);

// Involution varieties with trivial discriminant or over the reals:
// rdim + 1 <= ind with equality for ind <= 3.
RdimValue rdim_involution_variety(const Int& ind);

// Inner twisted flags of type A (generalized Brauer-Severi): same rule shape
// as involution varieties.
RdimValue rdim_twisted_flag(const Int& ind);

enum class SurfaceClass {
    DelPezzo9,   // Brauer-Severi surface; params carry the degree-3 algebra
    DelPezzo8,   // involution surface; params carry the product kind
    DelPezzo7,
    DelPezzoLow, // degree <= 6: not determined
    MinimalRuled,
    Abelian,
    K3,
    Phantom,     // q = p_g = 0 surfaces admitting phantom subcategories
};

struct SurfaceParams {
    std::optional<AlgebraInvariants> algebra;  // DelPezzo9
    std::optional<ProductKind> product_kind;   // DelPezzo8
    std::optional<std::int64_t> base_genus;    // MinimalRuled
    std::optional<std::int64_t> picard_rank;   // Abelian
    std::optional<std::int64_t> d;             // DelPezzo9 / DelPezzo7 polarization multiple

    bool operator==(const SurfaceParams&) const = default;
};

RdimValue rdim_surface(SurfaceClass cls, const SurfaceParams& params,
                       bool assume_conjecture = false);

}  // namespace ulrich
