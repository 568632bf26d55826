#include "ulrich/special.hpp"

#include "ulrich/errors.hpp"

#include <sstream>

namespace ulrich {

bool ribbon_h0_vanishes(std::int64_t e) { return e > 0; }

bool ribbon_h1_vanishes(std::int64_t e) {
    // h^1(omega^e) = h^0(omega^(1-e)).
    return ribbon_h0_vanishes(1 - e);
}

bool RibbonVanishingCertificate::verify() const {
    if (window_lo > window_hi) return false;
    if (entries.size() != static_cast<std::size_t>(window_hi - window_lo + 1)) return false;
    std::int64_t expected = window_lo;
    for (const Entry& entry : entries) {
        if (entry.e != expected++) return false;
        if (entry.h0_vanishes != ribbon_h0_vanishes(entry.e)) return false;
        if (entry.h1_vanishes != ribbon_h1_vanishes(entry.e)) return false;
        // The partition: exactly one of the two vanishes, so in particular the
        // simultaneous-vanishing set is empty on the whole window.
        if (entry.h0_vanishes == entry.h1_vanishes) return false;
    }
    return true;
}

RibbonVanishingCertificate ribbon_certificate(std::int64_t window_lo, std::int64_t window_hi) {
    if (window_lo > window_hi)
        throw Error(ErrorKind::ValidationError, "empty certificate window");
    RibbonVanishingCertificate cert;
    cert.window_lo = window_lo;
    cert.window_hi = window_hi;
    for (std::int64_t e = window_lo; e <= window_hi; ++e)
        cert.entries.push_back({e, ribbon_h0_vanishes(e), ribbon_h1_vanishes(e)});
    return cert;
}

RibbonLineBundleResult ribbon_ulrich_line_bundle_exists(std::int64_t /*d*/) {
    // The effective exponent e = a - d sweeps all integers as the line bundle
    // power a does, so the certificate is independent of d.
    RibbonLineBundleResult result;
    result.exists = false;
    result.certificate = ribbon_certificate();
    return result;
}

RibbonComplexity uc_ribbon(std::int64_t d) {
    RibbonComplexity r;
    r.uc = 2;
    r.witness = "rank-2 bundle F tensored with the " + std::to_string(d) +
                "-th power of the dualizing sheaf";
    r.imported_fact = "h^0(F) = h^1(F) = 0 for the canonical rank-2 extension F of the "
                      "structure sheaf by the dualizing sheaf";
    r.citation = "FS, p. 30";
    r.line_bundle = ribbon_ulrich_line_bundle_exists(d);
    return r;
}

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::RdimPlusOne: return "uc = rdim + 1";
        case Relation::RdimEqual: return "uc = rdim";
        case Relation::RdimMinusOne: return "uc = rdim - 1";
        case Relation::RdimPlusTwo: return "uc = rdim + 2";
        case Relation::Undetermined: return "undetermined";
    }
    return "undetermined";
}

ProductReport product_of_curves_report(ProductKind kind) {
    const RdimValue rdim = rdim_product_of_curves(kind);
    ProductReport r;
    r.uc = 2;
    r.rdim = rdim.lower;
    r.relation = r.uc == r.rdim ? Relation::RdimEqual : Relation::RdimPlusOne;
    return r;
}

namespace {

std::string format_candidates(const std::set<Int>& cs) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const Int& c : cs) {
        if (!first) os << ", ";
        os << c;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace

Comparison classify_relation(UcBound uc, RdimValue rdim) {
    Comparison cmp;
    cmp.uc = std::move(uc);
    cmp.rdim = std::move(rdim);
    cmp.relation = Relation::Undetermined;

    if (cmp.rdim.kind == RdimValue::Kind::Unknown) return cmp;

    if (cmp.uc.exact() && cmp.rdim.is_exact()) {
        const Int diff = cmp.uc.lower - cmp.rdim.lower;
        if (diff == 1)
            cmp.relation = Relation::RdimPlusOne;
        else if (diff == 0)
            cmp.relation = Relation::RdimEqual;
        else if (diff == -1)
            cmp.relation = Relation::RdimMinusOne;
        else if (diff == 2)
            cmp.relation = Relation::RdimPlusTwo;
        else
            cmp.note = "uc - rdim = " + diff.str();
        return cmp;
    }

    // Exclusion notes: when the candidate set or the bound interval rules out
    // uc = rdim + 1 even though neither side is pinned to a single relation.
    if (cmp.rdim.is_exact() && cmp.uc.candidates) {
        const Int target = cmp.rdim.lower + 1;
        if (!cmp.uc.candidates->count(target))
            cmp.note = "rdim + 1 = " + target.str() + " is not among the uc candidates " +
                       format_candidates(*cmp.uc.candidates);
    } else if (cmp.uc.candidates) {
        const Int best = cmp.rdim.upper + 1;
        if (*cmp.uc.candidates->begin() > best)
            cmp.note = "every uc candidate exceeds rdim + 1 <= " + best.str() +
                       ": uc = rdim + 1 is impossible";
    } else if (cmp.uc.lower > cmp.rdim.upper + 1) {
        cmp.note = "uc >= " + cmp.uc.lower.str() + " while rdim + 1 <= " +
                   Int(cmp.rdim.upper + 1).str() + ": uc = rdim + 1 is impossible";
    }
    return cmp;
}

Comparison curve_comparison(std::int64_t genus, bool has_rational_point) {
    UcBound uc;
    if (has_rational_point) {
        uc.lower = 1;
        uc.upper = 1;
        uc.tag(Provenance::Target::Lower, "rank positivity");
        uc.tag(Provenance::Target::Upper, "Ulrich line bundle",
               "a curve with a rational point carries an Ulrich line bundle");
    } else {
        uc.lower = 2;
        uc.upper = 2;
        uc.tag(Provenance::Target::Lower, "no Ulrich line bundle",
               "pointless curves admit no Ulrich line bundle");
        uc.tag(Provenance::Target::Upper, "rank-2 Ulrich sheaf",
               "every curve over an infinite field carries a rank-2 Ulrich sheaf");
    }
    uc.check();
    return classify_relation(std::move(uc), rdim_curve(genus, has_rational_point));
}

Comparison surface_comparison(SurfaceClass cls, const SurfaceParams& params,
                              std::optional<Int> split_uc, bool assume_conjecture) {
    const RdimValue rdim = rdim_surface(cls, params, assume_conjecture);
    UcBound uc;
    switch (cls) {
        case SurfaceClass::DelPezzo9: {
            if (!params.algebra)
                throw Error(ErrorKind::InvalidDescriptor,
                            "a degree-9 del Pezzo surface needs its degree-3 algebra");
            const std::int64_t d = params.d.value_or(1);
            const Int pd = Int(3) * d;  // anticanonical class is O(3)
            if (params.algebra->split()) {
                if (split_uc) {
                    uc.lower = *split_uc;
                    uc.upper = *split_uc;
                    uc.tag(Provenance::Target::Lower, "catalogued plane complexity");
                    uc.tag(Provenance::Target::Upper, "catalogued plane complexity");
                } else {
                    uc.lower = 1;
                    uc.upper = factorial(2);
                    uc.tag(Provenance::Target::Lower, "rank positivity");
                    uc.tag(Provenance::Target::Upper, "factorial fallback",
                           "uc of the plane is at most 2! at every polarization");
                }
            } else {
                PolarizedBS x{*params.algebra, d};
                uc = brauer_severi_bounds(x, split_uc);
                uc.candidates = surface_candidate_set(pd);
                uc.tag(Provenance::Target::Candidates, "surface candidate table",
                       "rank parity at polarization degree " + pd.str());
            }
            break;
        }
        case SurfaceClass::DelPezzo8: {
            if (!params.product_kind)
                throw Error(ErrorKind::InvalidDescriptor,
                            "a degree-8 del Pezzo surface needs its product kind");
            uc.lower = 2;
            uc.upper = 2;
            uc.tag(Provenance::Target::Lower, "no Ulrich line bundle",
                   "no Ulrich line bundle descends to the twisted product");
            uc.tag(Provenance::Target::Upper, "rank-2 witness",
                   "pullback of the rank-2 curve bundle twisted by the polarization");
            break;
        }
        case SurfaceClass::DelPezzo7: {
            const std::int64_t d = params.d.value_or(1);
            if (d % 2 == 0) {
                uc.lower = 2;
                uc.upper = 2;
                uc.tag(Provenance::Target::Lower, "plane complexity at even polarization",
                       "uc of the plane is 2 at even polarization degrees (CMR)");
                uc.tag(Provenance::Target::Upper, "plane complexity at even polarization",
                       "transported along the degree-2 blow-up (ASE, Theorem 2)");
            } else {
                uc.lower = 1;
                uc.tag(Provenance::Target::Lower, "rank positivity",
                       "odd polarization degrees are not covered by the even-degree result");
            }
            break;
        }
        case SurfaceClass::DelPezzoLow: {
            uc.lower = 1;
            uc.tag(Provenance::Target::Lower, "rank positivity",
                   "no sharper bound is known for del Pezzo degree <= 6");
            break;
        }
        case SurfaceClass::MinimalRuled: {
            if (!params.base_genus)
                throw Error(ErrorKind::InvalidDescriptor, "ruled surface needs its base genus");
            if (*params.base_genus == 0) {
                uc.lower = 1;
                uc.upper = 1;
                uc.tag(Provenance::Target::Lower, "rank positivity");
                uc.tag(Provenance::Target::Upper, "Ulrich line bundle",
                       "rational ruled surfaces carry Ulrich line bundles for suitable "
                       "polarizations");
            } else {
                uc.lower = 1;
                uc.upper = 2;
                uc.tag(Provenance::Target::Lower, "rank positivity");
                uc.tag(Provenance::Target::Upper, "polarization-dependent value",
                       "uc is 1 or 2 depending on the polarization");
            }
            break;
        }
        case SurfaceClass::Abelian: {
            if (params.picard_rank && *params.picard_rank == 1) {
                uc.lower = 2;
                uc.upper = 2;
                uc.tag(Provenance::Target::Lower, "Picard rank one",
                       "no Ulrich line bundle on an abelian surface of Picard rank 1");
                uc.tag(Provenance::Target::Upper, "rank-2 Ulrich bundle",
                       "abelian surfaces carry rank-2 Ulrich bundles");
            } else {
                uc.lower = 1;
                uc.upper = 2;
                uc.tag(Provenance::Target::Lower, "rank positivity");
                uc.tag(Provenance::Target::Upper, "rank-2 Ulrich bundle",
                       "abelian surfaces carry rank-2 Ulrich bundles");
            }
            break;
        }
        case SurfaceClass::K3: {
            uc.lower = 1;
            uc.upper = 2;
            uc.tag(Provenance::Target::Lower, "rank positivity");
            uc.tag(Provenance::Target::Upper, "rank-2 Ulrich bundle",
                   "every polarized K3 surface carries an Ulrich bundle of rank 2");
            break;
        }
        case SurfaceClass::Phantom: {
            uc.lower = 1;
            uc.upper = 2;
            uc.tag(Provenance::Target::Lower, "rank positivity");
            uc.tag(Provenance::Target::Upper, "rank-2 Ulrich bundle",
                   "known for suitable polarizations on these surfaces");
            break;
        }
    }
    uc.check();
    return classify_relation(std::move(uc), rdim);
}

}  // namespace ulrich
