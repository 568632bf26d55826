#include "ulrich/rdim.hpp"

#include "ulrich/errors.hpp"

namespace ulrich {

RdimValue RdimValue::exact(Int v, std::string rule, std::string detail) {
    RdimValue r;
    r.kind = Kind::Exact;
    r.lower = v;
    r.upper = std::move(v);
    r.provenance.push_back({Provenance::Target::Value, std::move(rule), std::move(detail)});
    return r;
}

RdimValue RdimValue::interval(Int lo, Int hi, std::string rule, std::string detail) {
    RdimValue r;
    r.kind = lo == hi ? Kind::Exact : Kind::Interval;
    r.lower = std::move(lo);
    r.upper = std::move(hi);
    r.provenance.push_back({Provenance::Target::Value, std::move(rule), std::move(detail)});
    r.check();
    return r;
}

RdimValue RdimValue::unknown(std::string rule, std::string detail) {
    RdimValue r;
    r.kind = Kind::Unknown;
    r.provenance.push_back({Provenance::Target::Value, std::move(rule), std::move(detail)});
    return r;
}

void RdimValue::check() const {
    if (kind == Kind::Unknown) return;
    if (lower < 0) throw Error(ErrorKind::ValidationError, "rdim cannot be negative");
    if (lower > upper) throw Error(ErrorKind::ValidationError, "rdim interval inverted");
    if (kind == Kind::Exact && lower != upper)
        throw Error(ErrorKind::ValidationError, "exact rdim with distinct endpoints");
    if (provenance.empty()) throw Error(ErrorKind::ValidationError, "rdim without provenance");
}

RdimValue rdim_brauer_severi(const AlgebraInvariants& a, bool biquaternion,
                             bool assume_conjecture) {
    const Int& ind = a.index();
    if (biquaternion && ind != 4)
        throw Error(ErrorKind::FlagInconsistent, "a biquaternion algebra has index 4, got index " +
                                                     ind.str());
    if (ind == 1)
        return RdimValue::exact(0, "rational point",
                                "split variety: rdim = 0 exactly when a rational point exists");
    if (ind <= 3)
        return RdimValue::exact(ind - 1, "index bound with equality",
                                "rdim = ind - 1 holds whenever ind <= 3");
    if (biquaternion)
        return RdimValue::exact(2, "biquaternion decomposition",
                                "product of two quaternion categories represents in dimension 2");
    if (assume_conjecture && a.period() == a.index()) {
        auto r = RdimValue::exact(ind - 1, "conjecture: rdim = ind - 1 when period = index",
                                  "assumed by flag; not a theorem");
        r.conjectural = true;
        return r;
    }
    return RdimValue::interval(1, ind - 1, "index bound",
                               "rdim <= ind - 1; rdim >= 1 since there is no rational point");
}

RdimValue rdim_curve(std::int64_t genus, bool has_rational_point) {
    if (genus < 0) throw Error(ErrorKind::ValidationError, "genus cannot be negative");
    if (genus == 0) {
        if (has_rational_point)
            return RdimValue::exact(0, "rational point", "a genus-0 curve with a point is split");
        return RdimValue::exact(1, "pointless conic",
                                "non-split Brauer-Severi curve: rdim = 1");
    }
    return RdimValue::exact(1, "no non-trivial semiorthogonal decomposition",
                            "curves of genus >= 1 represent in dimension 1 and not 0");
}

RdimValue rdim_product_of_curves(ProductKind kind) {
    switch (kind) {
        case ProductKind::CxC:
            return RdimValue::exact(1, "square of a quaternionic curve",
                                    "all components embed into the curve's derived category");
        case ProductKind::C1xC2:
            return RdimValue::exact(2, "distinct quaternion algebras",
                                    "the tensor component forces representation dimension 2");
        case ProductKind::CxLine:
            return RdimValue::exact(1, "curve times projective line",
                                    "components embed into the curve's derived category");
    }
    throw Error(ErrorKind::UnknownClass, "unhandled product kind");
}

RdimValue rdim_involution_variety(const Int& ind) {
    if (ind < 1) throw Error(ErrorKind::ValidationError, "index must be positive");
    if (ind == 1) return RdimValue::exact(0, "rational point", "split quadric");
    if (ind <= 3)
        return RdimValue::exact(ind - 1, "index bound with equality",
                                "rdim + 1 = ind holds whenever ind <= 3");
    return RdimValue::interval(0, ind - 1, "index bound", "rdim + 1 <= ind");
}

RdimValue rdim_twisted_flag(const Int& ind) {
    if (ind < 1) throw Error(ErrorKind::ValidationError, "index must be positive");
    if (ind == 1) return RdimValue::exact(0, "split flag", "full exceptional collection");
    if (ind <= 3)
        return RdimValue::exact(ind - 1, "index bound with equality",
                                "rdim + 1 = ind holds whenever ind <= 3");
    return RdimValue::interval(0, ind - 1, "index bound", "rdim + 1 <= ind");
}

RdimValue rdim_surface(SurfaceClass cls, const SurfaceParams& params, bool assume_conjecture) {
    switch (cls) {
        case SurfaceClass::DelPezzo9: {
            if (!params.algebra)
                throw Error(ErrorKind::InvalidDescriptor,
                            "a degree-9 del Pezzo surface needs its degree-3 algebra");
            if (params.algebra->degree() != 3)
                throw Error(ErrorKind::InvalidDescriptor,
                            "the algebra of a degree-9 del Pezzo surface has degree 3");
            return rdim_brauer_severi(*params.algebra, false, assume_conjecture);
        }
        case SurfaceClass::DelPezzo8: {
            if (!params.product_kind)
                throw Error(ErrorKind::InvalidDescriptor,
                            "a degree-8 del Pezzo surface needs its product kind");
            return rdim_product_of_curves(*params.product_kind);
        }
        case SurfaceClass::DelPezzo7:
            return RdimValue::exact(0, "full exceptional collection over the base field",
                                    "blow-up of the plane at a degree-2 point");
        case SurfaceClass::DelPezzoLow:
            return RdimValue::unknown("open", "not determined for del Pezzo degree <= 6");
        case SurfaceClass::MinimalRuled: {
            if (!params.base_genus)
                throw Error(ErrorKind::InvalidDescriptor, "ruled surface needs its base genus");
            if (*params.base_genus == 0)
                return RdimValue::exact(0, "rational ruled surface",
                                        "both components represent in dimension 0");
            return RdimValue::exact(1, "ruled over a positive-genus curve",
                                    "base curve admits no non-trivial decomposition");
        }
        case SurfaceClass::Abelian:
            return RdimValue::exact(2, "no non-trivial semiorthogonal decomposition", {});
        case SurfaceClass::K3:
            return RdimValue::exact(2, "no non-trivial semiorthogonal decomposition", {});
        case SurfaceClass::Phantom:
            return RdimValue::interval(0, 2, "phantom subcategory",
                                       "exceptional collection plus a phantom complement");
    }
    throw Error(ErrorKind::UnknownClass, "unhandled surface class");
}

}  // namespace ulrich
