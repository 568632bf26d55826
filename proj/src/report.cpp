#include "ulrich/report.hpp"

#include "ulrich/chi.hpp"
#include "ulrich/errors.hpp"

#include "json.hpp"

#include <sstream>

namespace ulrich {

namespace {

using nlohmann::ordered_json;

// --- per-kind assembly ------------------------------------------------------

void handle_brauer_severi(Report& rep, const BrauerSeveriDesc& d, const ReportOptions& options,
                          const Catalog* catalog) {
    const std::int64_t n = to_int64(d.algebra.degree()) - 1;
    const Int pd = d.algebra.period() * d.d;

    std::optional<Int> split_uc, split_lower, split_upper;
    if (catalog) {
        if (auto record = catalog->projective_space(n, pd)) {
            if (record->value)
                split_uc = record->value;
            else {
                split_lower = record->lower;
                split_upper = record->upper;
            }
            rep.diagnostics.push_back("catalogue: split model record applied (" +
                                      record->citation + ")");
        } else {
            rep.diagnostics.push_back(
                "catalogue: no record for the split model; using the factorial fallback");
        }
    } else {
        rep.diagnostics.push_back(
            "no catalogue loaded; upper bound uses the factorial fallback");
    }

    PolarizedBS x{d.algebra, d.d};
    rep.uc = brauer_severi_bounds(x, split_uc, split_lower, split_upper);

    if (!d.algebra.split()) {
        if (n == 2 && d.algebra.period() == 3) {
            rep.uc.candidates = surface_candidate_set(pd);
            rep.uc.tag(Provenance::Target::Candidates, "surface candidate table",
                       "imported rank table at polarization degree " + pd.str() + " (CMR, DF)");
        } else if (n == 3 && (d.algebra.period() == 2 || d.algebra.period() == 4)) {
            rep.uc.candidates = threefold_candidate_set(d.algebra.period(), pd);
            rep.uc.tag(Provenance::Target::Candidates, "threefold candidate table",
                       "imported rank table keyed by pd mod 6 (DF, Theorem 1)");
        }
    }
    rep.uc.check();

    rep.rdim = rdim_brauer_severi(d.algebra, d.biquaternion,
                                  options.assume_period_index_conjecture);
    if (rep.rdim.conjectural)
        rep.conjectures_used.push_back("period-index: rdim = ind - 1 assumed");

    if (d.witness) {
        CriterionResult crit;
        crit.name = "root criterion";
        crit.hypothesis = "rdim + 1 = period";
        crit.uc = root_criterion(n, Int(d.d), d.witness->chi, d.witness->rank);
        if (crit.uc) {
            crit.note = "uc = rdim + 1 holds iff uc = " + crit.uc->str();
            if (rep.rdim.is_exact())
                crit.inequality_holds = chi_rank_inequality_holds(
                    n, d.algebra.index(), pd, d.witness->chi, rep.rdim.lower, *crit.uc);
        } else {
            crit.note = "chi/rank has no admissible integer root: uc = rdim + 1 fails "
                        "for this witness";
        }
        rep.criterion = crit;
    }
}

void handle_generalized_bs(Report& rep, const GeneralizedBSDesc& d, const ReportOptions&,
                           const Catalog* catalog) {
    d.g.check();
    const Int& ind = d.g.algebra.index();

    std::optional<Int> split_uc = d.split_uc;
    if (!split_uc && catalog) {
        const Int split_pd = Int(d.g.s) * d.g.e * d.g.split_period();
        if (auto record = catalog->grassmannian(d.g.m, d.g.n(), split_pd); record && record->value) {
            split_uc = record->value;
            rep.diagnostics.push_back("catalogue: split Grassmannian record applied (" +
                                      record->citation + ")");
        }
    }
    if (split_uc) {
        rep.uc = twisted_flag_bounds(ind, *split_uc, FlagKind::TypeA);
    } else {
        rep.uc.lower = 1;
        rep.uc.tag(Provenance::Target::Lower, "rank positivity");
        rep.diagnostics.push_back(
            "no split Grassmannian value available (descriptor or catalogue); upper bound "
            "unknown");
    }

    rep.rdim = rdim_twisted_flag(ind);

    if (d.witness) {
        CriterionResult crit;
        crit.name = "generalized root criterion";
        crit.hypothesis = "rdim + 1 = ind = period";
        const bool hypothesis_established = rep.rdim.is_exact() &&
                                            rep.rdim.lower + 1 == ind &&
                                            d.g.algebra.period() == ind;
        if (hypothesis_established) {
            auto result = generalized_root_criterion(d.g, d.witness->chi, d.witness->rank, true);
            crit.uc = result.uc;
            crit.inequality_holds = result.inequality_holds;
            crit.note = result.uc ? "uc = rdim + 1 holds iff uc = " + result.uc->str()
                                  : "chi/(rank*deg) has no admissible integer root: uc = rdim + 1 "
                                    "fails for this witness";
        } else {
            crit.note = "hypothesis rdim + 1 = ind = period is not established for this "
                        "descriptor; criterion not evaluated";
        }
        rep.criterion = crit;
    }
}

void handle_twisted_flag(Report& rep, const TwistedFlagDesc& d) {
    const FlagKind kind = d.type == 'A' ? FlagKind::TypeA : FlagKind::TypeBCD;
    rep.uc = twisted_flag_bounds(d.ind, d.split_uc, kind, d.rdim_plus_one_equals_ind);
    if (d.rdim_plus_one_equals_ind)
        rep.rdim = RdimValue::exact(d.ind - 1, "caller assertion", "rdim + 1 = ind supplied");
    else if (kind == FlagKind::TypeA)
        rep.rdim = rdim_twisted_flag(d.ind);
    else
        rep.rdim = RdimValue::unknown("no rule", "no general rdim rule for types B/C/D");
}

void handle_involution(Report& rep, const InvolutionDesc& d) {
    const std::int64_t m = d.dim_x + 2;  // the quadric sits in P^{m-1}
    if (d.r) {
        const Int rd = Int(*d.r) * d.d;
        const UcBound split = quadric_complexity(m, rd);
        if (split.exact()) {
            rep.uc = involution_bounds(d.dim_x, d.ind, split.lower, d.real_field);
        } else {
            rep.uc.lower = split.lower;
            rep.uc.upper = d.ind * *split.upper;
            rep.uc.tag(Provenance::Target::Lower, "split quadric lower bound",
                       "split quadric complexity at scaled polarization");
            rep.uc.tag(Provenance::Target::Upper, "pushforward from splitting field",
                       "index * split quadric upper bound");
            rep.uc.check();
        }
        rep.diagnostics.push_back("descent twist r = " + std::to_string(*d.r) +
                                  " supplied; split polarization degree " + rd.str());
    } else if (d.ind >= 2) {
        rep.uc = involution_explicit_bounds(d.dim_x, d.ind);
        rep.diagnostics.push_back(
            "descent twist unknown; closed-form bounds independent of the twist");
    } else {
        rep.uc = quadric_complexity(m, d.d);  // split involution variety is the quadric
    }
    if (d.real_field)
        rep.uc.tag(Provenance::Target::Upper, "real base field",
                   "index 2: the minimal separable splitting field is the complex numbers");

    if (d.trivial_discriminant || d.real_field)
        rep.rdim = rdim_involution_variety(d.ind);
    else
        rep.rdim = RdimValue::unknown(
            "no rule", "rdim rule needs trivial discriminant or a real base field");
}

void handle_ribbon(Report& rep, const RibbonDesc& d, const ReportOptions& options) {
    RibbonComplexity ribbon = uc_ribbon(d.d);
    rep.uc.lower = ribbon.uc;
    rep.uc.upper = ribbon.uc;
    rep.uc.tag(Provenance::Target::Lower, "no Ulrich line bundle",
               "vanishing-window certificate: h0 and h1 never vanish together");
    rep.uc.tag(Provenance::Target::Upper, "rank-2 witness",
               ribbon.imported_fact + " (" + ribbon.citation + ")");
    rep.uc.check();
    if (options.assume_ribbon_rdim) {
        rep.rdim = RdimValue::exact(1, "conjecture: ribbon rdim",
                                    "assumed decomposition into structure sheaf and the rank-2 "
                                    "extension");
        rep.rdim.conjectural = true;
        rep.conjectures_used.push_back("ribbon-rdim: rdim = 1 assumed");
    } else {
        rep.rdim = RdimValue::unknown("open", "ribbon rdim is conjectural; enable the flag to "
                                              "assume it");
    }
    rep.ribbon = std::move(ribbon);
}

void handle_surface(Report& rep, const SurfaceDesc& d, const ReportOptions& options,
                    const Catalog* catalog) {
    std::optional<Int> split_uc;
    if (d.cls == SurfaceClass::DelPezzo9 && catalog && d.params.algebra) {
        const Int pd = Int(3) * d.params.d.value_or(1);
        if (auto record = catalog->projective_space(2, pd); record && record->value) {
            split_uc = record->value;
            rep.diagnostics.push_back("catalogue: plane complexity record applied (" +
                                      record->citation + ")");
        }
    }
    Comparison cmp =
        surface_comparison(d.cls, d.params, split_uc, options.assume_period_index_conjecture);
    rep.uc = std::move(cmp.uc);
    rep.rdim = std::move(cmp.rdim);
    rep.relation = cmp.relation;
    rep.relation_note = std::move(cmp.note);
    if (rep.rdim.conjectural)
        rep.conjectures_used.push_back("period-index: rdim = ind - 1 assumed");
}

}  // namespace

void Report::lint() const {
    uc.check();
    rdim.check();
    if (rdim.provenance.empty())
        throw Error(ErrorKind::ValidationError, "rdim value carries no provenance");
}

Report run_report(const VarietyDescriptor& v, const ReportOptions& options,
                  const Catalog* catalog) {
    Report rep(v);

    bool relation_done = false;
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, BrauerSeveriDesc>) {
                handle_brauer_severi(rep, d, options, catalog);
            } else if constexpr (std::is_same_v<T, GeneralizedBSDesc>) {
                handle_generalized_bs(rep, d, options, catalog);
            } else if constexpr (std::is_same_v<T, TwistedFlagDesc>) {
                handle_twisted_flag(rep, d);
            } else if constexpr (std::is_same_v<T, InvolutionDesc>) {
                handle_involution(rep, d);
            } else if constexpr (std::is_same_v<T, QuadricDesc>) {
                rep.uc = quadric_complexity(d.m, Int(d.d));
                rep.rdim = rdim_involution_variety(1);
            } else if constexpr (std::is_same_v<T, RibbonDesc>) {
                handle_ribbon(rep, d, options);
            } else if constexpr (std::is_same_v<T, ProductOfCurvesDesc>) {
                const ProductReport pr = product_of_curves_report(d.kind);
                rep.uc.lower = pr.uc;
                rep.uc.upper = pr.uc;
                rep.uc.tag(Provenance::Target::Lower, "no Ulrich line bundle",
                           "no Ulrich line bundle descends to the twisted product");
                rep.uc.tag(Provenance::Target::Upper, "rank-2 witness",
                           "pullback of the rank-2 curve bundle twisted by the polarization");
                rep.rdim = rdim_product_of_curves(d.kind);
            } else if constexpr (std::is_same_v<T, CurveDesc>) {
                Comparison cmp = curve_comparison(d.genus, d.has_rational_point);
                rep.uc = std::move(cmp.uc);
                rep.rdim = std::move(cmp.rdim);
                rep.relation = cmp.relation;
                rep.relation_note = std::move(cmp.note);
                relation_done = true;
            } else if constexpr (std::is_same_v<T, SurfaceDesc>) {
                handle_surface(rep, d, options, catalog);
                relation_done = true;
            }
        },
        v);

    if (!relation_done) {
        Comparison cmp = classify_relation(rep.uc, rep.rdim);
        rep.relation = cmp.relation;
        rep.relation_note = cmp.note;
    }
    rep.lint();
    return rep;
}

// --- rendering ---------------------------------------------------------------

namespace {

const char* target_name(Provenance::Target t) {
    switch (t) {
        case Provenance::Target::Lower: return "lower";
        case Provenance::Target::Upper: return "upper";
        case Provenance::Target::Candidates: return "candidates";
        case Provenance::Target::Value: return "value";
    }
    return "value";
}

ordered_json provenance_json(const std::vector<Provenance>& ps) {
    ordered_json arr = ordered_json::array();
    for (const Provenance& p : ps) {
        ordered_json e;
        e["target"] = target_name(p.target);
        e["rule"] = p.rule;
        if (!p.detail.empty()) e["detail"] = p.detail;
        arr.push_back(e);
    }
    return arr;
}

ordered_json uc_json(const UcBound& uc) {
    ordered_json j;
    j["lower"] = uc.lower.str();
    j["upper"] = uc.upper ? ordered_json(uc.upper->str()) : ordered_json(nullptr);
    j["exact"] = uc.exact();
    if (uc.candidates) {
        ordered_json cands = ordered_json::array();
        for (const Int& c : *uc.candidates) cands.push_back(c.str());
        j["candidates"] = cands;
    }
    j["provenance"] = provenance_json(uc.provenance);
    return j;
}

ordered_json rdim_json(const RdimValue& r) {
    ordered_json j;
    switch (r.kind) {
        case RdimValue::Kind::Exact:
            j["kind"] = "exact";
            j["value"] = r.lower.str();
            break;
        case RdimValue::Kind::Interval:
            j["kind"] = "interval";
            j["lower"] = r.lower.str();
            j["upper"] = r.upper.str();
            break;
        case RdimValue::Kind::Unknown: j["kind"] = "unknown"; break;
    }
    if (r.conjectural) j["conjectural"] = true;
    j["provenance"] = provenance_json(r.provenance);
    return j;
}

ordered_json report_json_object(const Report& rep) {
    ordered_json j;
    j["input"] = ordered_json::parse(print_descriptor(rep.input));
    j["uc"] = uc_json(rep.uc);
    j["rdim"] = rdim_json(rep.rdim);
    j["relation"]["kind"] = relation_name(rep.relation);
    if (!rep.relation_note.empty()) j["relation"]["note"] = rep.relation_note;
    if (rep.criterion) {
        ordered_json c;
        c["name"] = rep.criterion->name;
        c["hypothesis"] = rep.criterion->hypothesis;
        c["uc"] = rep.criterion->uc ? ordered_json(rep.criterion->uc->str())
                                    : ordered_json(nullptr);
        if (rep.criterion->inequality_holds)
            c["chi_rank_inequality_holds"] = *rep.criterion->inequality_holds;
        if (!rep.criterion->note.empty()) c["note"] = rep.criterion->note;
        j["criterion"] = c;
    }
    if (rep.ribbon) {
        ordered_json r;
        r["uc"] = rep.ribbon->uc.str();
        r["witness"] = rep.ribbon->witness;
        r["imported_fact"] = rep.ribbon->imported_fact;
        r["citation"] = rep.ribbon->citation;
        r["line_bundle_exists"] = rep.ribbon->line_bundle.exists;
        r["certificate"]["window"] = {rep.ribbon->line_bundle.certificate.window_lo,
                                      rep.ribbon->line_bundle.certificate.window_hi};
        r["certificate"]["verified"] = rep.ribbon->line_bundle.certificate.verify();
        j["ribbon"] = r;
    }
    j["conjectures_used"] = rep.conjectures_used;
    j["diagnostics"] = rep.diagnostics;
    return j;
}

std::string uc_text(const UcBound& uc) {
    std::ostringstream os;
    if (uc.exact())
        os << "exactly " << uc.lower;
    else if (uc.upper)
        os << "in [" << uc.lower << ", " << *uc.upper << "]";
    else
        os << ">= " << uc.lower << " (upper bound unknown)";
    if (uc.candidates) {
        os << ", candidates {";
        bool first = true;
        for (const Int& c : *uc.candidates) {
            if (!first) os << ", ";
            os << c;
            first = false;
        }
        os << "}";
    }
    return os.str();
}

std::string rdim_text(const RdimValue& r) {
    std::ostringstream os;
    switch (r.kind) {
        case RdimValue::Kind::Exact: os << "exactly " << r.lower; break;
        case RdimValue::Kind::Interval: os << "in [" << r.lower << ", " << r.upper << "]"; break;
        case RdimValue::Kind::Unknown: os << "unknown"; break;
    }
    if (r.conjectural) os << " (conjectural)";
    return os.str();
}

void provenance_text(std::ostringstream& os, const std::vector<Provenance>& ps) {
    for (const Provenance& p : ps) {
        os << "  [" << target_name(p.target) << "] " << p.rule;
        if (!p.detail.empty()) os << " -- " << p.detail;
        os << "\n";
    }
}

}  // namespace

std::string report_to_json(const Report& rep) { return report_json_object(rep).dump(2) + "\n"; }

std::string report_to_text(const Report& rep) {
    std::ostringstream os;
    ordered_json input = ordered_json::parse(print_descriptor(rep.input));
    os << "input: " << input.dump() << "\n";
    os << "uc: " << uc_text(rep.uc) << "\n";
    provenance_text(os, rep.uc.provenance);
    os << "rdim: " << rdim_text(rep.rdim) << "\n";
    provenance_text(os, rep.rdim.provenance);
    os << "relation: " << relation_name(rep.relation);
    if (!rep.relation_note.empty()) os << " -- " << rep.relation_note;
    os << "\n";
    if (rep.criterion) {
        os << "criterion (" << rep.criterion->name << ", hypothesis " << rep.criterion->hypothesis
           << "): ";
        if (rep.criterion->uc)
            os << "uc must equal " << *rep.criterion->uc;
        else
            os << "no admissible integer root";
        if (rep.criterion->inequality_holds)
            os << "; chi-rank inequality " << (*rep.criterion->inequality_holds ? "holds" : "fails");
        os << "\n";
        if (!rep.criterion->note.empty()) os << "  " << rep.criterion->note << "\n";
    }
    if (rep.ribbon) {
        os << "ribbon: uc = " << rep.ribbon->uc << "; witness " << rep.ribbon->witness
           << "; imported fact: " << rep.ribbon->imported_fact << " (" << rep.ribbon->citation
           << "); line-bundle certificate "
           << (rep.ribbon->line_bundle.certificate.verify() ? "verified" : "FAILED") << " on ["
           << rep.ribbon->line_bundle.certificate.window_lo << ", "
           << rep.ribbon->line_bundle.certificate.window_hi << "]\n";
    }
    for (const std::string& c : rep.conjectures_used) os << "conjecture used: " << c << "\n";
    for (const std::string& d : rep.diagnostics) os << "note: " << d << "\n";
    return os.str();
}

std::string bounds_to_json(const Report& rep) {
    ordered_json j;
    j["input"] = ordered_json::parse(print_descriptor(rep.input));
    j["uc"] = uc_json(rep.uc);
    j["diagnostics"] = rep.diagnostics;
    return j.dump(2) + "\n";
}

std::string bounds_to_text(const Report& rep) {
    std::ostringstream os;
    os << "uc: " << uc_text(rep.uc) << "\n";
    provenance_text(os, rep.uc.provenance);
    for (const std::string& d : rep.diagnostics) os << "note: " << d << "\n";
    return os.str();
}

std::string rdim_to_json(const Report& rep) {
    ordered_json j;
    j["input"] = ordered_json::parse(print_descriptor(rep.input));
    j["rdim"] = rdim_json(rep.rdim);
    j["conjectures_used"] = rep.conjectures_used;
    return j.dump(2) + "\n";
}

std::string rdim_to_text(const Report& rep) {
    std::ostringstream os;
    os << "rdim: " << rdim_text(rep.rdim) << "\n";
    provenance_text(os, rep.rdim.provenance);
    for (const std::string& c : rep.conjectures_used) os << "conjecture used: " << c << "\n";
    return os.str();
}

}  // namespace ulrich
