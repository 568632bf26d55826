#pragma once

// The curated catalogue of split uc values imported from the literature.
// Everything the engines cannot derive (plane and projective-space
// complexities, split flag values) enters through here, each record with its
// citation. Missing catalogue data degrades to unknown bounds, never guesses.

#include "ulrich/numeric.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ulrich {

struct CatalogRecord {
    enum class Family { ProjectiveSpace, Quadric, Grassmannian, Flag };

    Family family = Family::ProjectiveSpace;
    std::map<std::string, std::int64_t> params;  // n / m as appropriate
    std::string flag_type;                       // "A".."D" for Family::Flag

    // Polarization matcher: exactly one of the three is set.
    std::optional<Int> pd_exact;
    std::optional<Int> pd_multiple_of;
    std::optional<std::pair<Int, std::set<Int>>> pd_mod;  // modulus, residues

    // Either an exact value or bounds (at least one end).
    std::optional<Int> value;
    std::optional<Int> lower;
    std::optional<Int> upper;

    std::string citation;

    bool matches_pd(const Int& pd) const;
    // Exact pd beats residue classes beats multiples; used to pick a single
    // deterministic record when several match.
    int specificity() const;
};

class Catalog {
  public:
    Catalog() = default;

    // Reads and validates a catalogue file. Unreadable file -> MissingCatalog;
    // malformed JSON or wrong shape -> SchemaError; semantic violations
    // (inverted bounds, empty citation) -> ValidationError.
    static Catalog load(const std::string& path);
    static Catalog parse(const std::string& text);

    int version() const { return version_; }
    const std::vector<CatalogRecord>& records() const { return records_; }

    // Most specific record for the split model of projective n-space at
    // polarization degree pd; first-in-file wins among equally specific.
    std::optional<CatalogRecord> projective_space(std::int64_t n, const Int& pd) const;

    std::optional<CatalogRecord> grassmannian(std::int64_t m, std::int64_t n, const Int& pd) const;

  private:
    int version_ = 0;
    std::vector<CatalogRecord> records_;
};

}  // namespace ulrich
