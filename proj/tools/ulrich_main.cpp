// Command-line front end: descriptor reports, raw bound/rdim queries, exact
// chi evaluation, the root criterion, the split-locus Ulrich checker, and
// catalogue validation.

#include "ulrich/catalog.hpp"
#include "ulrich/chi.hpp"
#include "ulrich/cohomology.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

using ulrich::Error;
using ulrich::ErrorKind;
using ulrich::Int;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ValidationError, "cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Int parse_int(const std::string& text, const std::string& flag) {
    try {
        return Int(text);
    } catch (const std::runtime_error&) {
        throw Error(ErrorKind::ValidationError, "expected an integer for " + flag);
    }
}

std::vector<std::int64_t> parse_twists(const std::string& text) {
    std::vector<std::int64_t> twists;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw Error(ErrorKind::ValidationError, "empty entry in twist list");
        twists.push_back(ulrich::to_int64(parse_int(item, "--twists")));
    }
    if (twists.empty()) throw Error(ErrorKind::ValidationError, "twist list is empty");
    return twists;
}

struct GlobalOptions {
    std::string catalog_path;
    std::string format = "text";
    ulrich::ReportOptions report;

    std::optional<ulrich::Catalog> load_catalog() const {
        if (catalog_path.empty()) return std::nullopt;
        return ulrich::Catalog::load(catalog_path);
    }
};

// Renders each file's report; files are processed concurrently and printed in
// input order, so batch output is deterministic.
int run_descriptor_command(const std::vector<std::string>& files, const GlobalOptions& global,
                           std::string (*render_json)(const ulrich::Report&),
                           std::string (*render_text)(const ulrich::Report&)) {
    const auto catalog = global.load_catalog();
    const ulrich::Catalog* cat = catalog ? &*catalog : nullptr;
    auto render = global.format == "json" ? render_json : render_text;

    std::vector<std::future<std::string>> outputs;
    outputs.reserve(files.size());
    for (const std::string& file : files)
        outputs.push_back(std::async(std::launch::async, [&, file] {
            const auto descriptor = ulrich::parse_descriptor(read_file(file));
            return render(ulrich::run_report(descriptor, global.report, cat));
        }));
    for (auto& out : outputs) std::cout << out.get();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ulrich-complexity bounds and representability-dimension reports"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--catalog", global.catalog_path, "catalogue file of imported split uc values")
        ->envname("ULRICH_CATALOG");
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_flag("--assume-period-index-conjecture", global.report.assume_period_index_conjecture,
                 "collapse rdim intervals to ind - 1 when period = index (tagged as conjecture)");
    app.add_flag("--assume-ribbon-rdim", global.report.assume_ribbon_rdim,
                 "assume the conjectural ribbon rdim = 1");

    std::vector<std::string> report_files, bounds_files, rdim_files;
    auto* cmd_report = app.add_subcommand("report", "full report for descriptor file(s)");
    cmd_report->add_option("file", report_files, "descriptor JSON file(s)")->required();
    auto* cmd_bounds = app.add_subcommand("bounds", "uc bounds only");
    cmd_bounds->add_option("file", bounds_files, "descriptor JSON file(s)")->required();
    auto* cmd_rdim = app.add_subcommand("rdim", "representability dimension only");
    cmd_rdim->add_option("file", rdim_files, "descriptor JSON file(s)")->required();

    std::int64_t chi_n = 0, chi_pd = 0;
    std::string chi_rank, chi_l = "0";
    auto* cmd_chi = app.add_subcommand("chi", "Euler characteristic of an Ulrich bundle on "
                                              "projective n-space at polarization degree pd");
    cmd_chi->add_option("--n", chi_n)->required();
    cmd_chi->add_option("--pd", chi_pd)->required();
    cmd_chi->add_option("--rank", chi_rank)->required();
    cmd_chi->add_option("--l", chi_l, "twist")->capture_default_str();

    std::int64_t crit_n = 0;
    std::string crit_d, crit_chi, crit_rank;
    auto* cmd_criterion =
        app.add_subcommand("criterion", "root criterion: the unique value uc must take "
                                        "for uc = rdim + 1 to hold");
    cmd_criterion->add_option("--n", crit_n)->required();
    cmd_criterion->add_option("--d", crit_d)->required();
    cmd_criterion->add_option("--chi", crit_chi)->required();
    cmd_criterion->add_option("--rank", crit_rank)->required();

    std::int64_t vu_n = 0, vu_pd = 0;
    std::string vu_twists;
    auto* cmd_verify = app.add_subcommand("verify-ulrich", "check the Ulrich condition for a "
                                                           "direct sum of line bundles");
    cmd_verify->add_option("--n", vu_n)->required();
    cmd_verify->add_option("--pd", vu_pd)->required();
    cmd_verify->add_option("--twists", vu_twists, "comma-separated twists a1,a2,...")->required();

    auto* cmd_catalog = app.add_subcommand("catalog", "catalogue utilities");
    auto* cmd_catalog_validate = cmd_catalog->add_subcommand("validate", "validate the catalogue");
    cmd_catalog->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_report)
            return run_descriptor_command(report_files, global, ulrich::report_to_json,
                                          ulrich::report_to_text);
        if (*cmd_bounds)
            return run_descriptor_command(bounds_files, global, ulrich::bounds_to_json,
                                          ulrich::bounds_to_text);
        if (*cmd_rdim)
            return run_descriptor_command(rdim_files, global, ulrich::rdim_to_json,
                                          ulrich::rdim_to_text);

        if (*cmd_chi) {
            const Int rank = parse_int(chi_rank, "--rank");
            const Int l = parse_int(chi_l, "--l");
            const ulrich::Rat chi = ulrich::ulrich_chi_formula(chi_n, chi_pd, rank, l);
            if (global.format == "json") {
                nlohmann::ordered_json j;
                j["n"] = chi_n;
                j["pd"] = chi_pd;
                j["rank"] = rank.str();
                j["l"] = l.str();
                j["chi"] = chi.str();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "chi = " << chi << "\n";
            }
            return 0;
        }

        if (*cmd_criterion) {
            const auto uc = ulrich::root_criterion(crit_n, parse_int(crit_d, "--d"),
                                                   parse_int(crit_chi, "--chi"),
                                                   parse_int(crit_rank, "--rank"));
            if (global.format == "json") {
                nlohmann::ordered_json j;
                j["defined"] = uc.has_value();
                j["uc"] = uc ? nlohmann::ordered_json(uc->str()) : nlohmann::ordered_json(nullptr);
                std::cout << j.dump(2) << "\n";
            } else if (uc) {
                std::cout << "uc must equal " << *uc << " for uc = rdim + 1 to hold\n";
            } else {
                std::cout << "no admissible integer root: uc = rdim + 1 fails for this witness\n";
            }
            return 0;
        }

        if (*cmd_verify) {
            const ulrich::SplittingType t(vu_n, parse_twists(vu_twists));
            const bool ulrich_ok = ulrich::is_ulrich_split(t, vu_pd);
            if (global.format == "json") {
                nlohmann::ordered_json j;
                j["n"] = vu_n;
                j["pd"] = vu_pd;
                j["rank"] = t.rank();
                j["twists"] = t.twists();
                j["ulrich"] = ulrich_ok;
                if (ulrich_ok) j["chi_at_0"] = ulrich::euler_char(t, 0).str();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << (ulrich_ok ? "Ulrich" : "not Ulrich") << "\n";
                if (ulrich_ok)
                    std::cout << "chi at twist 0: " << ulrich::euler_char(t, 0) << "\n";
            }
            return 0;
        }

        if (*cmd_catalog_validate) {
            if (global.catalog_path.empty())
                throw Error(ErrorKind::MissingCatalog,
                            "no catalogue given (use --catalog or ULRICH_CATALOG)");
            const ulrich::Catalog catalog = ulrich::Catalog::load(global.catalog_path);
            std::cout << "catalogue OK: version " << catalog.version() << ", "
                      << catalog.records().size() << " records\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
