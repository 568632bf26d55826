#include "ulrich/special.hpp"

#include "ulrich/errors.hpp"

#include "doctest.h"

using namespace ulrich;

TEST_CASE("ribbon vanishing rules") {
    CHECK(ribbon_h0_vanishes(3));
    CHECK(!ribbon_h0_vanishes(0));
    CHECK(!ribbon_h0_vanishes(-2));

    CHECK(ribbon_h1_vanishes(0));
    CHECK(!ribbon_h1_vanishes(1));
    CHECK(ribbon_h1_vanishes(-5));
}

TEST_CASE("h0 and h1 vanishing sets partition the integers") {
    for (std::int64_t e = -50; e <= 50; ++e) {
        CHECK(ribbon_h0_vanishes(e) != ribbon_h1_vanishes(e));
    }
}

TEST_CASE("ribbon certificate verifies and excludes Ulrich line bundles") {
    const auto cert = ribbon_certificate(-50, 50);
    CHECK(cert.verify());
    for (const auto& entry : cert.entries) CHECK(!(entry.h0_vanishes && entry.h1_vanishes));

    for (std::int64_t d : {-5, 0, 1, 5}) {
        const auto result = ribbon_ulrich_line_bundle_exists(d);
        CHECK(!result.exists);
        CHECK(!result.certificate.entries.empty());
        CHECK(result.certificate.verify());
    }

    RibbonVanishingCertificate tampered = cert;
    tampered.entries[0].h0_vanishes = !tampered.entries[0].h0_vanishes;
    CHECK(!tampered.verify());
}

TEST_CASE("ribbon complexity is 2, uniformly in d") {
    for (std::int64_t d = -5; d <= 5; ++d) {
        const RibbonComplexity r = uc_ribbon(d);
        CHECK(r.uc == 2);
        CHECK(!r.line_bundle.exists);
        CHECK(r.line_bundle.certificate.verify());
        CHECK(r.citation == "FS, p. 30");
        CHECK(!r.witness.empty());
    }
}

TEST_CASE("products of curves") {
    const ProductReport cc = product_of_curves_report(ProductKind::CxC);
    CHECK(cc.uc == 2);
    CHECK(cc.rdim == 1);
    CHECK(cc.relation == Relation::RdimPlusOne);

    const ProductReport c12 = product_of_curves_report(ProductKind::C1xC2);
    CHECK(c12.uc == 2);
    CHECK(c12.rdim == 2);
    CHECK(c12.relation == Relation::RdimEqual);

    const ProductReport cl = product_of_curves_report(ProductKind::CxLine);
    CHECK(cl.uc == 2);
    CHECK(cl.rdim == 1);
    CHECK(cl.relation == Relation::RdimPlusOne);
}

TEST_CASE("product reports agree with the rdim engine") {
    for (ProductKind kind : {ProductKind::CxC, ProductKind::C1xC2, ProductKind::CxLine})
        CHECK(product_of_curves_report(kind).rdim == rdim_product_of_curves(kind).lower);
}

TEST_CASE("curve comparisons") {
    const Comparison pointless_genus2 = curve_comparison(2, false);
    CHECK(pointless_genus2.uc.exact());
    CHECK(pointless_genus2.uc.lower == 2);
    CHECK(pointless_genus2.rdim.lower == 1);
    CHECK(pointless_genus2.relation == Relation::RdimPlusOne);

    const Comparison with_point = curve_comparison(3, true);
    CHECK(with_point.uc.lower == 1);
    CHECK(with_point.relation == Relation::RdimEqual);

    const Comparison conic = curve_comparison(0, false);
    CHECK(conic.uc.lower == 2);
    CHECK(conic.relation == Relation::RdimPlusOne);

    const Comparison line = curve_comparison(0, true);
    CHECK(line.uc.lower == 1);
    CHECK(line.relation == Relation::RdimPlusOne);
}

TEST_CASE("surface comparisons") {
    SurfaceParams none;

    SurfaceParams abelian_rank1;
    abelian_rank1.picard_rank = 1;
    const Comparison abelian = surface_comparison(SurfaceClass::Abelian, abelian_rank1);
    CHECK(abelian.uc.exact());
    CHECK(abelian.uc.lower == 2);
    CHECK(abelian.rdim.lower == 2);
    CHECK(abelian.relation == Relation::RdimEqual);

    const Comparison k3 = surface_comparison(SurfaceClass::K3, none);
    CHECK(*k3.uc.upper == 2);
    CHECK(k3.rdim.lower == 2);
    CHECK(k3.relation == Relation::Undetermined);

    SurfaceParams dp7;
    dp7.d = 2;
    const Comparison del_pezzo7 = surface_comparison(SurfaceClass::DelPezzo7, dp7);
    CHECK(del_pezzo7.uc.exact());
    CHECK(del_pezzo7.uc.lower == 2);
    CHECK(del_pezzo7.rdim.lower == 0);
    CHECK(del_pezzo7.relation == Relation::RdimPlusTwo);

    SurfaceParams dp7_odd;
    dp7_odd.d = 3;
    CHECK(surface_comparison(SurfaceClass::DelPezzo7, dp7_odd).relation ==
          Relation::Undetermined);

    SurfaceParams dp9;
    dp9.algebra = AlgebraInvariants::validate(3, 3, 3);
    dp9.d = 2;
    const Comparison del_pezzo9 = surface_comparison(SurfaceClass::DelPezzo9, dp9, Int(2));
    CHECK(del_pezzo9.uc.lower == 2);
    CHECK(*del_pezzo9.uc.upper == 6);
    REQUIRE(del_pezzo9.uc.candidates.has_value());
    CHECK(*del_pezzo9.uc.candidates == std::set<Int>{2, 4, 6});
    CHECK(del_pezzo9.rdim.lower == 2);
    CHECK(del_pezzo9.relation == Relation::Undetermined);
    CHECK(del_pezzo9.note == "rdim + 1 = 3 is not among the uc candidates {2, 4, 6}");

    SurfaceParams dp8;
    dp8.product_kind = ProductKind::CxC;
    const Comparison del_pezzo8 = surface_comparison(SurfaceClass::DelPezzo8, dp8);
    CHECK(del_pezzo8.uc.lower == 2);
    CHECK(del_pezzo8.relation == Relation::RdimPlusOne);

    SurfaceParams ruled;
    ruled.base_genus = 0;
    CHECK(surface_comparison(SurfaceClass::MinimalRuled, ruled).relation ==
          Relation::RdimPlusOne);
    ruled.base_genus = 1;
    CHECK(surface_comparison(SurfaceClass::MinimalRuled, ruled).relation ==
          Relation::Undetermined);

    const Comparison unknown = surface_comparison(SurfaceClass::DelPezzoLow, none);
    CHECK(unknown.rdim.kind == RdimValue::Kind::Unknown);
    CHECK(unknown.relation == Relation::Undetermined);

    const Comparison phantom = surface_comparison(SurfaceClass::Phantom, none);
    CHECK(phantom.relation == Relation::Undetermined);
    CHECK(*phantom.uc.upper == 2);
}

TEST_CASE("relation classifier notes exclusions") {
    UcBound uc;
    uc.lower = 6;
    uc.upper = Int(24);
    uc.candidates = std::set<Int>{6, 12, 24};
    uc.tag(Provenance::Target::Lower, "x");
    uc.tag(Provenance::Target::Upper, "y");
    uc.tag(Provenance::Target::Candidates, "z");

    const Comparison exact_mismatch =
        classify_relation(uc, RdimValue::exact(3, "test"));
    CHECK(exact_mismatch.relation == Relation::Undetermined);
    CHECK(exact_mismatch.note == "rdim + 1 = 4 is not among the uc candidates {6, 12, 24}");

    const Comparison interval_mismatch =
        classify_relation(uc, RdimValue::interval(1, 3, "test"));
    CHECK(interval_mismatch.relation == Relation::Undetermined);
    CHECK(interval_mismatch.note ==
          "every uc candidate exceeds rdim + 1 <= 4: uc = rdim + 1 is impossible");

    UcBound plain;
    plain.lower = 8;
    plain.upper = Int(240);
    plain.tag(Provenance::Target::Lower, "x");
    plain.tag(Provenance::Target::Upper, "y");
    const Comparison bound_mismatch = classify_relation(plain, RdimValue::exact(1, "test"));
    CHECK(bound_mismatch.note == "uc >= 8 while rdim + 1 <= 2: uc = rdim + 1 is impossible");
}
