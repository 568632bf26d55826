#pragma once

// Variety descriptors: the JSON-shaped input language of the CLI. Parsing
// yields structured errors with a field path; printing is canonical so that
// parse(print(v)) == v and reports are deterministic.

#include "ulrich/brauer.hpp"
#include "ulrich/chi.hpp"
#include "ulrich/rdim.hpp"

#include <optional>
#include <string>
#include <variant>

namespace ulrich {

// A chi/rank pair for an Ulrich bundle the caller knows about; feeds the
// root criteria in reports.
struct ChiWitness {
    Int chi;
    Int rank;
    bool operator==(const ChiWitness&) const = default;
};

struct BrauerSeveriDesc {
    AlgebraInvariants algebra;
    std::int64_t d = 1;
    bool biquaternion = false;
    std::optional<ChiWitness> witness;
    bool operator==(const BrauerSeveriDesc&) const = default;
};

struct GeneralizedBSDesc {
    GeneralizedBSDescriptor g;
    std::optional<Int> split_uc;  // uc of the split Grassmannian, if known
    std::optional<ChiWitness> witness;
    bool operator==(const GeneralizedBSDesc& o) const {
        return g.algebra == o.g.algebra && g.m == o.g.m && g.s == o.g.s && g.e == o.g.e &&
               split_uc == o.split_uc && witness == o.witness;
    }
};

struct TwistedFlagDesc {
    char type = 'A';  // A, B, C or D
    Int ind;
    Int split_uc;
    bool rdim_plus_one_equals_ind = false;
    bool operator==(const TwistedFlagDesc&) const = default;
};

struct InvolutionDesc {
    std::int64_t dim_x = 2;
    Int ind;
    bool real_field = false;
    bool trivial_discriminant = false;
    std::int64_t d = 1;
    std::optional<std::int64_t> r;  // descent twist, when determined
    bool operator==(const InvolutionDesc&) const = default;
};

struct QuadricDesc {
    std::int64_t m = 4;
    std::int64_t d = 1;
    bool operator==(const QuadricDesc&) const = default;
};

struct RibbonDesc {
    std::int64_t d = 1;
    bool operator==(const RibbonDesc&) const = default;
};

struct ProductOfCurvesDesc {
    ProductKind kind = ProductKind::CxC;
    bool operator==(const ProductOfCurvesDesc&) const = default;
};

struct CurveDesc {
    std::int64_t genus = 0;
    bool has_rational_point = false;
    bool operator==(const CurveDesc&) const = default;
};

struct SurfaceDesc {
    SurfaceClass cls = SurfaceClass::K3;
    SurfaceParams params;
    bool operator==(const SurfaceDesc&) const = default;
};

using VarietyDescriptor =
    std::variant<BrauerSeveriDesc, GeneralizedBSDesc, TwistedFlagDesc, InvolutionDesc, QuadricDesc,
                 RibbonDesc, ProductOfCurvesDesc, CurveDesc, SurfaceDesc>;

// Parses a descriptor from JSON text. SchemaError for structural problems
// (with the offending field path); ValidationError for violated invariants.
VarietyDescriptor parse_descriptor(const std::string& text);

// Canonical JSON rendering (fixed field order).
std::string print_descriptor(const VarietyDescriptor& v);

const char* product_kind_name(ProductKind kind);
const char* surface_class_name(SurfaceClass cls);

}  // namespace ulrich
