#include "ulrich/catalog.hpp"

#include "ulrich/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace ulrich {

namespace {

using nlohmann::json;

Int int_field(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::runtime_error&) {
            throw Error(ErrorKind::SchemaError, "not an integer literal", path);
        }
    }
    throw Error(ErrorKind::SchemaError, "expected an integer (number or decimal string)", path);
}

CatalogRecord::Family parse_family(const std::string& s, const std::string& path) {
    if (s == "projective-space") return CatalogRecord::Family::ProjectiveSpace;
    if (s == "quadric") return CatalogRecord::Family::Quadric;
    if (s == "grassmannian") return CatalogRecord::Family::Grassmannian;
    if (s == "flag") return CatalogRecord::Family::Flag;
    throw Error(ErrorKind::SchemaError, "unknown family '" + s + "'", path);
}

CatalogRecord parse_record(const json& j, const std::string& path) {
    if (!j.is_object()) throw Error(ErrorKind::SchemaError, "record must be an object", path);
    CatalogRecord r;
    if (!j.contains("family") || !j["family"].is_string())
        throw Error(ErrorKind::SchemaError, "missing string field 'family'", path);
    r.family = parse_family(j["family"].get<std::string>(), path + ".family");

    if (!j.contains("params") || !j["params"].is_object())
        throw Error(ErrorKind::SchemaError, "missing object field 'params'", path);
    for (const auto& [key, val] : j["params"].items()) {
        const std::string ppath = path + ".params." + key;
        if (key == "type") {
            if (!val.is_string()) throw Error(ErrorKind::SchemaError, "type must be a string", ppath);
            r.flag_type = val.get<std::string>();
        } else {
            r.params[key] = to_int64(int_field(val, ppath));
        }
    }

    if (!j.contains("polarization") || !j["polarization"].is_object())
        throw Error(ErrorKind::SchemaError, "missing object field 'polarization'", path);
    const json& pol = j["polarization"];
    int matchers = 0;
    if (pol.contains("pd")) {
        r.pd_exact = int_field(pol["pd"], path + ".polarization.pd");
        ++matchers;
    }
    if (pol.contains("pd_multiple_of")) {
        r.pd_multiple_of = int_field(pol["pd_multiple_of"], path + ".polarization.pd_multiple_of");
        ++matchers;
    }
    if (pol.contains("pd_mod")) {
        const json& pm = pol["pd_mod"];
        if (!pm.is_object() || !pm.contains("modulus") || !pm.contains("residues") ||
            !pm["residues"].is_array())
            throw Error(ErrorKind::SchemaError, "pd_mod needs 'modulus' and array 'residues'",
                        path + ".polarization.pd_mod");
        std::set<Int> residues;
        for (std::size_t i = 0; i < pm["residues"].size(); ++i)
            residues.insert(int_field(pm["residues"][i], path + ".polarization.pd_mod.residues[" +
                                                             std::to_string(i) + "]"));
        r.pd_mod = {int_field(pm["modulus"], path + ".polarization.pd_mod.modulus"),
                    std::move(residues)};
        ++matchers;
    }
    if (matchers != 1)
        throw Error(ErrorKind::SchemaError,
                    "polarization needs exactly one of pd / pd_multiple_of / pd_mod",
                    path + ".polarization");

    if (j.contains("value")) r.value = int_field(j["value"], path + ".value");
    if (j.contains("bounds")) {
        const json& b = j["bounds"];
        if (!b.is_object()) throw Error(ErrorKind::SchemaError, "bounds must be an object", path);
        if (b.contains("lower")) r.lower = int_field(b["lower"], path + ".bounds.lower");
        if (b.contains("upper")) r.upper = int_field(b["upper"], path + ".bounds.upper");
    }
    if (!r.value && !r.lower && !r.upper)
        throw Error(ErrorKind::SchemaError, "record needs 'value' or 'bounds'", path);
    if (r.value && (r.lower || r.upper))
        throw Error(ErrorKind::SchemaError, "record cannot carry both 'value' and 'bounds'", path);

    if (!j.contains("citation") || !j["citation"].is_string())
        throw Error(ErrorKind::SchemaError, "missing string field 'citation'", path);
    r.citation = j["citation"].get<std::string>();

    // Semantic checks.
    if (r.citation.empty())
        throw Error(ErrorKind::ValidationError, "citation must not be empty", path + ".citation");
    if (r.value && *r.value < 1)
        throw Error(ErrorKind::ValidationError, "uc value must be >= 1", path + ".value");
    if (r.lower && *r.lower < 1)
        throw Error(ErrorKind::ValidationError, "lower bound must be >= 1", path + ".bounds.lower");
    if (r.lower && r.upper && *r.lower > *r.upper)
        throw Error(ErrorKind::ValidationError, "bounds inverted", path + ".bounds");
    if (r.pd_exact && *r.pd_exact < 1)
        throw Error(ErrorKind::ValidationError, "pd must be >= 1", path + ".polarization.pd");
    if (r.pd_multiple_of && *r.pd_multiple_of < 1)
        throw Error(ErrorKind::ValidationError, "pd_multiple_of must be >= 1",
                    path + ".polarization.pd_multiple_of");
    if (r.pd_mod && r.pd_mod->first < 2)
        throw Error(ErrorKind::ValidationError, "modulus must be >= 2",
                    path + ".polarization.pd_mod.modulus");

    const bool needs_n = r.family == CatalogRecord::Family::ProjectiveSpace ||
                         r.family == CatalogRecord::Family::Grassmannian;
    if (needs_n && !r.params.count("n"))
        throw Error(ErrorKind::SchemaError, "family needs params.n", path + ".params");
    if (r.family == CatalogRecord::Family::Quadric && !r.params.count("m"))
        throw Error(ErrorKind::SchemaError, "quadric records need params.m", path + ".params");
    if (r.family == CatalogRecord::Family::Grassmannian && !r.params.count("m"))
        throw Error(ErrorKind::SchemaError, "grassmannian records need params.m", path + ".params");
    if (r.family == CatalogRecord::Family::Flag && r.flag_type.empty())
        throw Error(ErrorKind::SchemaError, "flag records need params.type", path + ".params");
    return r;
}

}  // namespace

bool CatalogRecord::matches_pd(const Int& pd) const {
    if (pd_exact) return pd == *pd_exact;
    if (pd_multiple_of) return pd % *pd_multiple_of == 0;
    if (pd_mod) return pd_mod->second.count(pd % pd_mod->first) > 0;
    return false;
}

int CatalogRecord::specificity() const {
    if (pd_exact) return 3;
    if (pd_mod) return 2;
    return 1;
}

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::MissingCatalog, "cannot read catalogue file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

Catalog Catalog::parse(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::SchemaError, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("version") || !j["version"].is_number_integer())
        throw Error(ErrorKind::SchemaError, "catalogue must be an object with integer 'version'");
    if (!j.contains("records") || !j["records"].is_array())
        throw Error(ErrorKind::SchemaError, "catalogue needs an array field 'records'");
    Catalog c;
    c.version_ = j["version"].get<int>();
    for (std::size_t i = 0; i < j["records"].size(); ++i)
        c.records_.push_back(parse_record(j["records"][i], "records[" + std::to_string(i) + "]"));
    return c;
}

namespace {

std::optional<CatalogRecord> best_match(const std::vector<CatalogRecord>& records,
                                        CatalogRecord::Family family,
                                        const std::map<std::string, std::int64_t>& params,
                                        const Int& pd) {
    std::optional<CatalogRecord> best;
    for (const CatalogRecord& r : records) {
        if (r.family != family) continue;
        bool param_match = true;
        for (const auto& [k, v] : params)
            if (!r.params.count(k) || r.params.at(k) != v) param_match = false;
        if (!param_match || !r.matches_pd(pd)) continue;
        if (!best || r.specificity() > best->specificity()) best = r;
    }
    return best;
}

}  // namespace

std::optional<CatalogRecord> Catalog::projective_space(std::int64_t n, const Int& pd) const {
    return best_match(records_, CatalogRecord::Family::ProjectiveSpace, {{"n", n}}, pd);
}

std::optional<CatalogRecord> Catalog::grassmannian(std::int64_t m, std::int64_t n,
                                                   const Int& pd) const {
    return best_match(records_, CatalogRecord::Family::Grassmannian, {{"m", m}, {"n", n}}, pd);
}

}  // namespace ulrich
