#pragma once

// Orchestration: one descriptor in, one provenance-tagged report out.
// Reports are deterministic -- same descriptor, same catalogue, same flags
// give byte-identical output.

#include "ulrich/catalog.hpp"
#include "ulrich/descriptor.hpp"
#include "ulrich/special.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ulrich {

struct ReportOptions {
    bool assume_period_index_conjecture = false;
    bool assume_ribbon_rdim = false;
};

struct CriterionResult {
    std::string name;
    std::optional<Int> uc;  // the forced uc value, when the root is integral
    std::optional<bool> inequality_holds;
    std::string hypothesis;
    std::string note;
};

struct Report {
    explicit Report(VarietyDescriptor in) : input(std::move(in)) {}

    VarietyDescriptor input;
    UcBound uc;
    RdimValue rdim;
    Relation relation = Relation::Undetermined;
    std::string relation_note;
    std::optional<CriterionResult> criterion;
    std::optional<RibbonComplexity> ribbon;
    std::vector<std::string> conjectures_used;
    std::vector<std::string> diagnostics;

    // Provenance completeness: every bound end and every rdim value must
    // carry at least one tag. Throws on violation.
    void lint() const;
};

// catalog may be null: bounds that need imported constants then degrade to
// fallbacks or unknown, with a diagnostic.
Report run_report(const VarietyDescriptor& v, const ReportOptions& options,
                  const Catalog* catalog);

std::string report_to_json(const Report& report);
std::string report_to_text(const Report& report);

// Narrow renderings used by the `bounds` and `rdim` subcommands.
std::string bounds_to_json(const Report& report);
std::string bounds_to_text(const Report& report);
std::string rdim_to_json(const Report& report);
std::string rdim_to_text(const Report& report);

}  // namespace ulrich
