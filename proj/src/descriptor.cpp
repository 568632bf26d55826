#include "ulrich/descriptor.hpp"

#include "ulrich/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>

namespace ulrich {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Int int_field(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::runtime_error&) {
            throw Error(ErrorKind::SchemaError, "not an integer literal", path);
        }
    }
    throw Error(ErrorKind::SchemaError, "expected an integer", path);
}

std::int64_t i64_field(const json& j, const std::string& path) { return to_int64(int_field(j, path)); }

bool bool_field(const json& j, const std::string& path) {
    if (!j.is_boolean()) throw Error(ErrorKind::SchemaError, "expected a boolean", path);
    return j.get<bool>();
}

// Every parser declares its accepted keys; anything else is a schema error.
void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& path) {
    for (const auto& item : j.items())
        if (!allowed.count(item.key()))
            throw Error(ErrorKind::SchemaError, "unknown field '" + item.key() + "'",
                        path.empty() ? item.key() : path + "." + item.key());
}

AlgebraInvariants parse_algebra(const json& j, const std::string& path) {
    for (const char* field : {"degree", "period", "index"})
        if (!j.contains(field))
            throw Error(ErrorKind::SchemaError, std::string("missing field '") + field + "'", path);
    return AlgebraInvariants::validate(int_field(j["degree"], path + ".degree"),
                                       int_field(j["period"], path + ".period"),
                                       int_field(j["index"], path + ".index"));
}

std::optional<ChiWitness> parse_witness(const json& j, const std::string& path) {
    if (!j.contains("witness")) return std::nullopt;
    const json& w = j["witness"];
    if (!w.is_object() || !w.contains("chi") || !w.contains("rank"))
        throw Error(ErrorKind::SchemaError, "witness needs 'chi' and 'rank'", path + ".witness");
    check_keys(w, {"chi", "rank"}, path + ".witness");
    ChiWitness witness{int_field(w["chi"], path + ".witness.chi"),
                       int_field(w["rank"], path + ".witness.rank")};
    if (witness.chi < 1 || witness.rank < 1)
        throw Error(ErrorKind::ValidationError, "witness chi and rank must be positive",
                    path + ".witness");
    return witness;
}

ProductKind parse_product_kind(const json& j, const std::string& path) {
    if (!j.is_string()) throw Error(ErrorKind::SchemaError, "expected a string", path);
    const std::string s = j.get<std::string>();
    if (s == "c_x_c") return ProductKind::CxC;
    if (s == "c1_x_c2") return ProductKind::C1xC2;
    if (s == "c_x_line") return ProductKind::CxLine;
    throw Error(ErrorKind::SchemaError,
                "unknown product kind '" + s + "' (want c_x_c, c1_x_c2 or c_x_line)", path);
}

SurfaceClass parse_surface_class(const std::string& s, const std::string& path) {
    if (s == "del_pezzo_9") return SurfaceClass::DelPezzo9;
    if (s == "del_pezzo_8") return SurfaceClass::DelPezzo8;
    if (s == "del_pezzo_7") return SurfaceClass::DelPezzo7;
    if (s == "del_pezzo_le_6") return SurfaceClass::DelPezzoLow;
    if (s == "minimal_ruled") return SurfaceClass::MinimalRuled;
    if (s == "abelian") return SurfaceClass::Abelian;
    if (s == "k3") return SurfaceClass::K3;
    if (s == "phantom") return SurfaceClass::Phantom;
    throw Error(ErrorKind::UnknownClass, "unknown surface class '" + s + "'", path);
}

VarietyDescriptor parse_object(const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::SchemaError, "descriptor must be a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw Error(ErrorKind::SchemaError, "missing string field 'kind'", "kind");
    const std::string kind = j["kind"].get<std::string>();

    if (kind == "brauer_severi") {
        check_keys(j, {"kind", "degree", "period", "index", "d", "biquaternion", "witness"}, "");
        BrauerSeveriDesc v{parse_algebra(j, ""), 1, false, parse_witness(j, "")};
        if (j.contains("d")) v.d = i64_field(j["d"], "d");
        if (j.contains("biquaternion")) v.biquaternion = bool_field(j["biquaternion"], "biquaternion");
        if (v.d < 1) throw Error(ErrorKind::ValidationError, "d must be >= 1", "d");
        if (v.biquaternion && v.algebra.index() != 4)
            throw Error(ErrorKind::FlagInconsistent, "biquaternion algebras have index 4", "biquaternion");
        return v;
    }
    if (kind == "generalized_brauer_severi") {
        check_keys(j, {"kind", "degree", "period", "index", "m", "s", "e", "split_uc", "witness"}, "");
        if (!j.contains("m")) throw Error(ErrorKind::SchemaError, "missing field 'm'", "m");
        GeneralizedBSDescriptor g{parse_algebra(j, ""), i64_field(j["m"], "m"), 1, 1};
        if (j.contains("s")) g.s = i64_field(j["s"], "s");
        if (j.contains("e")) g.e = i64_field(j["e"], "e");
        g.check();
        GeneralizedBSDesc v{g, std::nullopt, parse_witness(j, "")};
        if (j.contains("split_uc")) {
            v.split_uc = int_field(j["split_uc"], "split_uc");
            if (*v.split_uc < 1)
                throw Error(ErrorKind::ValidationError, "split_uc must be positive", "split_uc");
        }
        return v;
    }
    if (kind == "twisted_flag") {
        check_keys(j, {"kind", "type", "ind", "split_uc", "rdim_plus_one_equals_ind"}, "");
        for (const char* field : {"type", "ind", "split_uc"})
            if (!j.contains(field))
                throw Error(ErrorKind::SchemaError, std::string("missing field '") + field + "'",
                            field);
        if (!j["type"].is_string() || j["type"].get<std::string>().size() != 1 ||
            j["type"].get<std::string>().find_first_not_of("ABCD") != std::string::npos)
            throw Error(ErrorKind::SchemaError, "type must be one of A, B, C, D", "type");
        TwistedFlagDesc v;
        v.type = j["type"].get<std::string>()[0];
        v.ind = int_field(j["ind"], "ind");
        v.split_uc = int_field(j["split_uc"], "split_uc");
        if (j.contains("rdim_plus_one_equals_ind"))
            v.rdim_plus_one_equals_ind =
                bool_field(j["rdim_plus_one_equals_ind"], "rdim_plus_one_equals_ind");
        if (v.ind < 1 || v.split_uc < 1)
            throw Error(ErrorKind::ValidationError, "ind and split_uc must be positive");
        return v;
    }
    if (kind == "involution") {
        check_keys(j, {"kind", "dim", "ind", "real_field", "trivial_discriminant", "d", "r"}, "");
        if (!j.contains("dim")) throw Error(ErrorKind::SchemaError, "missing field 'dim'", "dim");
        InvolutionDesc v;
        v.dim_x = i64_field(j["dim"], "dim");
        if (j.contains("real_field")) v.real_field = bool_field(j["real_field"], "real_field");
        if (j.contains("trivial_discriminant"))
            v.trivial_discriminant = bool_field(j["trivial_discriminant"], "trivial_discriminant");
        if (j.contains("ind"))
            v.ind = int_field(j["ind"], "ind");
        else if (v.real_field)
            v.ind = 2;  // minimal separable splitting field of a real algebra
        else
            throw Error(ErrorKind::SchemaError, "missing field 'ind'", "ind");
        if (j.contains("d")) v.d = i64_field(j["d"], "d");
        if (j.contains("r")) v.r = i64_field(j["r"], "r");
        if (v.dim_x < 2)
            throw Error(ErrorKind::ValidationError, "involution variety needs dim >= 2", "dim");
        if (v.ind < 1) throw Error(ErrorKind::ValidationError, "ind must be positive", "ind");
        if (v.real_field && v.ind > 2)
            throw Error(ErrorKind::ValidationError,
                        "an orthogonal algebra over the reals has index at most 2", "ind");
        if (v.d < 1) throw Error(ErrorKind::ValidationError, "d must be >= 1", "d");
        if (v.r && *v.r < 1) throw Error(ErrorKind::ValidationError, "r must be >= 1", "r");
        return v;
    }
    if (kind == "quadric") {
        check_keys(j, {"kind", "m", "d"}, "");
        if (!j.contains("m")) throw Error(ErrorKind::SchemaError, "missing field 'm'", "m");
        QuadricDesc v;
        v.m = i64_field(j["m"], "m");
        if (j.contains("d")) v.d = i64_field(j["d"], "d");
        if (v.m < 4)
            throw Error(ErrorKind::DimensionTooSmall, "quadric descriptor needs m >= 4", "m");
        if (v.d < 1) throw Error(ErrorKind::ValidationError, "d must be >= 1", "d");
        return v;
    }
    if (kind == "ribbon") {
        check_keys(j, {"kind", "d"}, "");
        if (!j.contains("d")) throw Error(ErrorKind::SchemaError, "missing field 'd'", "d");
        return RibbonDesc{i64_field(j["d"], "d")};
    }
    if (kind == "product_of_curves") {
        check_keys(j, {"kind", "factors"}, "");
        if (!j.contains("factors"))
            throw Error(ErrorKind::SchemaError, "missing field 'factors'", "factors");
        return ProductOfCurvesDesc{parse_product_kind(j["factors"], "factors")};
    }
    if (kind == "curve") {
        check_keys(j, {"kind", "genus", "has_rational_point"}, "");
        for (const char* field : {"genus", "has_rational_point"})
            if (!j.contains(field))
                throw Error(ErrorKind::SchemaError, std::string("missing field '") + field + "'",
                            field);
        CurveDesc v;
        v.genus = i64_field(j["genus"], "genus");
        v.has_rational_point = bool_field(j["has_rational_point"], "has_rational_point");
        if (v.genus < 0) throw Error(ErrorKind::ValidationError, "genus cannot be negative", "genus");
        return v;
    }
    if (kind == "surface") {
        if (!j.contains("class") || !j["class"].is_string())
            throw Error(ErrorKind::SchemaError, "missing string field 'class'", "class");
        SurfaceDesc v;
        v.cls = parse_surface_class(j["class"].get<std::string>(), "class");
        switch (v.cls) {
            case SurfaceClass::DelPezzo9:
                check_keys(j, {"kind", "class", "degree", "period", "index", "d"}, "");
                v.params.algebra = parse_algebra(j, "");
                if (v.params.algebra->degree() != 3)
                    throw Error(ErrorKind::ValidationError,
                                "a degree-9 del Pezzo surface has a degree-3 algebra", "degree");
                v.params.d = j.contains("d") ? i64_field(j["d"], "d") : 1;
                if (*v.params.d < 1)
                    throw Error(ErrorKind::ValidationError, "d must be >= 1", "d");
                break;
            case SurfaceClass::DelPezzo8:
                check_keys(j, {"kind", "class", "factors"}, "");
                if (!j.contains("factors"))
                    throw Error(ErrorKind::SchemaError, "missing field 'factors'", "factors");
                v.params.product_kind = parse_product_kind(j["factors"], "factors");
                break;
            case SurfaceClass::DelPezzo7:
                check_keys(j, {"kind", "class", "d"}, "");
                v.params.d = j.contains("d") ? i64_field(j["d"], "d") : 1;
                if (*v.params.d < 1)
                    throw Error(ErrorKind::ValidationError, "d must be >= 1", "d");
                break;
            case SurfaceClass::MinimalRuled:
                check_keys(j, {"kind", "class", "base_genus"}, "");
                if (!j.contains("base_genus"))
                    throw Error(ErrorKind::SchemaError, "missing field 'base_genus'", "base_genus");
                v.params.base_genus = i64_field(j["base_genus"], "base_genus");
                if (*v.params.base_genus < 0)
                    throw Error(ErrorKind::ValidationError, "base_genus cannot be negative",
                                "base_genus");
                break;
            case SurfaceClass::Abelian:
                check_keys(j, {"kind", "class", "picard_rank"}, "");
                if (j.contains("picard_rank")) {
                    v.params.picard_rank = i64_field(j["picard_rank"], "picard_rank");
                    if (*v.params.picard_rank < 1)
                        throw Error(ErrorKind::ValidationError, "picard_rank must be >= 1",
                                    "picard_rank");
                }
                break;
            case SurfaceClass::DelPezzoLow:
            case SurfaceClass::K3:
            case SurfaceClass::Phantom:
                check_keys(j, {"kind", "class"}, "");
                break;
        }
        return v;
    }
    throw Error(ErrorKind::SchemaError, "unknown descriptor kind '" + kind + "'", "kind");
}

json int_out(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

}  // namespace

const char* product_kind_name(ProductKind kind) {
    switch (kind) {
        case ProductKind::CxC: return "c_x_c";
        case ProductKind::C1xC2: return "c1_x_c2";
        case ProductKind::CxLine: return "c_x_line";
    }
    return "c_x_c";
}

const char* surface_class_name(SurfaceClass cls) {
    switch (cls) {
        case SurfaceClass::DelPezzo9: return "del_pezzo_9";
        case SurfaceClass::DelPezzo8: return "del_pezzo_8";
        case SurfaceClass::DelPezzo7: return "del_pezzo_7";
        case SurfaceClass::DelPezzoLow: return "del_pezzo_le_6";
        case SurfaceClass::MinimalRuled: return "minimal_ruled";
        case SurfaceClass::Abelian: return "abelian";
        case SurfaceClass::K3: return "k3";
        case SurfaceClass::Phantom: return "phantom";
    }
    return "k3";
}

VarietyDescriptor parse_descriptor(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::SchemaError, std::string("invalid JSON: ") + e.what());
    }
    return parse_object(j);
}

std::string print_descriptor(const VarietyDescriptor& v) {
    ordered_json j;
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, BrauerSeveriDesc>) {
                j["kind"] = "brauer_severi";
                j["degree"] = int_out(d.algebra.degree());
                j["period"] = int_out(d.algebra.period());
                j["index"] = int_out(d.algebra.index());
                j["d"] = d.d;
                if (d.biquaternion) j["biquaternion"] = true;
                if (d.witness) {
                    j["witness"]["chi"] = int_out(d.witness->chi);
                    j["witness"]["rank"] = int_out(d.witness->rank);
                }
            } else if constexpr (std::is_same_v<T, GeneralizedBSDesc>) {
                j["kind"] = "generalized_brauer_severi";
                j["degree"] = int_out(d.g.algebra.degree());
                j["period"] = int_out(d.g.algebra.period());
                j["index"] = int_out(d.g.algebra.index());
                j["m"] = d.g.m;
                j["s"] = d.g.s;
                j["e"] = d.g.e;
                if (d.split_uc) j["split_uc"] = int_out(*d.split_uc);
                if (d.witness) {
                    j["witness"]["chi"] = int_out(d.witness->chi);
                    j["witness"]["rank"] = int_out(d.witness->rank);
                }
            } else if constexpr (std::is_same_v<T, TwistedFlagDesc>) {
                j["kind"] = "twisted_flag";
                j["type"] = std::string(1, d.type);
                j["ind"] = int_out(d.ind);
                j["split_uc"] = int_out(d.split_uc);
                if (d.rdim_plus_one_equals_ind) j["rdim_plus_one_equals_ind"] = true;
            } else if constexpr (std::is_same_v<T, InvolutionDesc>) {
                j["kind"] = "involution";
                j["dim"] = d.dim_x;
                j["ind"] = int_out(d.ind);
                j["real_field"] = d.real_field;
                j["trivial_discriminant"] = d.trivial_discriminant;
                j["d"] = d.d;
                if (d.r) j["r"] = *d.r;
            } else if constexpr (std::is_same_v<T, QuadricDesc>) {
                j["kind"] = "quadric";
                j["m"] = d.m;
                j["d"] = d.d;
            } else if constexpr (std::is_same_v<T, RibbonDesc>) {
                j["kind"] = "ribbon";
                j["d"] = d.d;
            } else if constexpr (std::is_same_v<T, ProductOfCurvesDesc>) {
                j["kind"] = "product_of_curves";
                j["factors"] = product_kind_name(d.kind);
            } else if constexpr (std::is_same_v<T, CurveDesc>) {
                j["kind"] = "curve";
                j["genus"] = d.genus;
                j["has_rational_point"] = d.has_rational_point;
            } else if constexpr (std::is_same_v<T, SurfaceDesc>) {
                j["kind"] = "surface";
                j["class"] = surface_class_name(d.cls);
                if (d.params.algebra) {
                    j["degree"] = int_out(d.params.algebra->degree());
                    j["period"] = int_out(d.params.algebra->period());
                    j["index"] = int_out(d.params.algebra->index());
                }
                if (d.params.product_kind) j["factors"] = product_kind_name(*d.params.product_kind);
                if (d.params.base_genus) j["base_genus"] = *d.params.base_genus;
                if (d.params.picard_rank) j["picard_rank"] = *d.params.picard_rank;
                if (d.params.d) j["d"] = *d.params.d;
            }
        },
        v);
    return j.dump(2);
}

}  // namespace ulrich
