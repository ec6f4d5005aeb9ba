#include "cli.hpp"

#include "parkinv/closed_forms.hpp"
#include "parkinv/invariance.hpp"
#include "parkinv/theorems.hpp"
#include "parkinv/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

namespace parkinv::cli {

namespace {

using ojson = nlohmann::ordered_json;
using closed_forms::BigInt;

std::vector<int> parse_int_list(const std::string& text, const std::string& flag)
{
    std::vector<int> values;
    std::string token;
    std::istringstream stream(text);
    while (std::getline(stream, token, ',')) {
        const auto begin = token.find_first_not_of(" \t");
        const auto end = token.find_last_not_of(" \t");
        if (begin == std::string::npos)
            throw usage_error(flag + ": empty entry in \"" + text + "\"");
        token = token.substr(begin, end - begin + 1);
        long long value = 0;
        try {
            std::size_t used = 0;
            value = std::stoll(token, &used);
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw usage_error(flag + ": \"" + token + "\" is not an integer");
        }
        if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max())
            throw usage_error(flag + ": " + token + " does not fit in 32 bits");
        values.push_back(static_cast<int>(value));
    }
    if (values.empty())
        throw usage_error(flag + ": no entries given");
    return values;
}

ojson big_to_json(const BigInt& value)
{
    if (value >= 0 && value <= (std::numeric_limits<std::uint64_t>::max)())
        return value.convert_to<std::uint64_t>();
    return value.str();
}

ojson tuple_to_json(std::span<const int> tuple)
{
    return ojson(std::vector<int>(tuple.begin(), tuple.end()));
}

std::string format_set(std::span<const int> values)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < values.size(); ++i)
        os << (i ? "," : "") << values[i];
    os << '}';
    return os.str();
}

std::string format_tuple(std::span<const int> values)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values.size(); ++i)
        os << (i ? "," : "") << values[i];
    os << ')';
    return os.str();
}

ojson witness_to_json(const std::optional<theorems::Witness>& witness)
{
    if (!witness)
        return nullptr;
    ojson j;
    j["y"] = witness->y;
    j["x"] = witness->x;
    j["permutation"] = witness->permutation;
    j["note"] = witness->note;
    return j;
}

ojson report_to_json(const theorems::CheckReport& report)
{
    ojson j;
    j["theorem"] = std::string(theorems::to_string(report.theorem));
    j["verdict"] = report.pass ? "pass" : "fail";
    j["vacuous"] = report.vacuous;
    j["inputs_tested"] = report.inputs_tested;
    j["witness"] = witness_to_json(report.witness);
    j["details"] = report.details;
    j["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count();
    return j;
}

void print_report_table(const theorems::CheckReport& report, std::ostream& out)
{
    out << (report.pass ? "[PASS] " : "[FAIL] ") << theorems::to_string(report.theorem)
        << "  inputs=" << report.inputs_tested;
    if (report.vacuous)
        out << "  (vacuous)";
    out << "  " << report.elapsed.count() / 1000.0 << " ms\n";
    if (report.witness) {
        out << "       witness: y=" << format_tuple(report.witness->y)
            << " x=" << format_tuple(report.witness->x);
        if (!report.witness->permutation.empty())
            out << " permutation=" << format_tuple(report.witness->permutation);
        out << "\n       " << report.witness->note << "\n";
    }
    if (!report.details.empty())
        out << "       note: " << report.details << "\n";
}

struct CommandOutput {
    ojson result;
    std::vector<std::string> csv;
    std::vector<std::string> table;
    int exit_code = 0;
};

CommandOutput run_park(const RunConfig& cfg, const LengthVector& y)
{
    if (cfg.prefs.empty())
        throw usage_error("park requires --prefs");
    const PreferenceVector x(cfg.prefs, y);
    const ParkingOutcome outcome = park(y, x);

    CommandOutput out;
    out.result["success"] = outcome.parked();
    if (outcome.parked()) {
        out.result["assignment"] = outcome.starts();
        out.csv.push_back("car,start");
        out.table.push_back("car  length  pref  start");
        for (int i = 0; i < y.size(); ++i) {
            out.csv.push_back(std::to_string(i + 1) + "," +
                              std::to_string(outcome.starts()[static_cast<std::size_t>(i)]));
            std::ostringstream row;
            row << std::left << std::setw(5) << i + 1 << std::setw(8) << y[i] << std::setw(6)
                << x[i] << outcome.starts()[static_cast<std::size_t>(i)];
            out.table.push_back(row.str());
        }
    } else {
        out.result["failed_car"] = outcome.failed_car();
        out.csv.push_back("failed_car");
        out.csv.push_back(std::to_string(outcome.failed_car()));
        out.table.push_back("parking failed at car " + std::to_string(outcome.failed_car()));
    }
    return out;
}

CommandOutput run_enumerate(const RunConfig& cfg, const LengthVector& y)
{
    const invariance::EnumerationOptions opts{cfg.budget, !cfg.unpruned};
    const auto invariants = invariance::enumerate_invariant_nd(y, opts);

    CommandOutput out;
    out.result = ojson::array();
    out.table.push_back("PA^inv-up for y = " + format_tuple(y.lengths()) + ": " +
                        std::to_string(invariants.size()) + " assortments");
    for (const PreferenceVector& x : invariants) {
        out.result.push_back(tuple_to_json(x.prefs()));
        std::ostringstream row;
        for (int i = 0; i < x.size(); ++i)
            row << (i ? "," : "") << x[i];
        out.csv.push_back(row.str());
        out.table.push_back(format_tuple(x.prefs()));
    }
    return out;
}

CommandOutput run_count(const RunConfig& cfg, const LengthVector& y)
{
    const invariance::EnumerationOptions opts{cfg.budget, !cfg.unpruned};
    const auto invariants = invariance::enumerate_invariant_nd(y, opts);
    std::uint64_t brute_full = 0;
    for (const PreferenceVector& x : invariants)
        brute_full += invariance::detail::distinct_permutation_count(x.prefs());
    const std::uint64_t brute_nd = invariants.size();
    const auto closed = closed_forms::closed_form_counts(y);

    CommandOutput out;
    out.result["brute_full"] = brute_full;
    out.result["brute_nd"] = brute_nd;
    out.result["closed_full"] = closed ? big_to_json(closed->full) : ojson(nullptr);
    out.result["closed_nd"] = closed ? big_to_json(closed->nd) : ojson(nullptr);
    out.result["provenance"] = closed ? ojson(closed->provenance) : ojson(nullptr);

    out.csv.push_back("brute_full,brute_nd,closed_full,closed_nd,provenance");
    std::ostringstream row;
    row << brute_full << ',' << brute_nd << ',';
    if (closed)
        row << closed->full << ',' << closed->nd << ',' << closed->provenance;
    else
        row << ",,";
    out.csv.push_back(row.str());

    out.table.push_back("y = " + format_tuple(y.lengths()));
    out.table.push_back("brute force:  full=" + std::to_string(brute_full) +
                        "  nd=" + std::to_string(brute_nd));
    if (closed)
        out.table.push_back("closed form:  full=" + closed->full.str() +
                            "  nd=" + closed->nd.str() + "  [" + closed->provenance + "]");
    else
        out.table.push_back("closed form:  none applies");
    return out;
}

CommandOutput run_characteristic(const RunConfig& cfg, const LengthVector& y)
{
    const invariance::EnumerationOptions opts{cfg.budget, !cfg.unpruned};
    const auto profile = invariance::invariant_profile(y, opts);

    CommandOutput out;
    out.result["characteristic"] = profile.characteristic;
    ojson histogram;
    for (const auto& [deg, count] : profile.degree_histogram)
        histogram[std::to_string(deg)] = count;
    out.result["degree_histogram"] = histogram;

    out.csv.push_back("characteristic");
    out.csv.push_back(std::to_string(profile.characteristic));

    out.table.push_back("characteristic of " + format_tuple(y.lengths()) + " = " +
                        std::to_string(profile.characteristic));
    for (const auto& [deg, count] : profile.degree_histogram)
        out.table.push_back("degree " + std::to_string(deg) + ": " + std::to_string(count));
    return out;
}

CommandOutput run_wset(const RunConfig& cfg, const LengthVector& y)
{
    const invariance::EnumerationOptions opts{cfg.budget, !cfg.unpruned};
    const std::vector<int> wset = invariance::invariant_solution_set(y, opts);

    CommandOutput out;
    out.result = ojson(wset);
    out.csv.push_back("w");
    for (int w : wset)
        out.csv.push_back(std::to_string(w));
    out.table.push_back("W" + format_tuple(y.lengths()) + " = " + format_set(wset));
    return out;
}

CommandOutput run_verify(const RunConfig& cfg)
{
    std::vector<theorems::CheckReport> reports;
    if (cfg.all_theorems) {
        if (cfg.max_n <= 0 || cfg.max_entry <= 0)
            throw usage_error("verify --all needs --max-n and --max-entry");
        for (theorems::TheoremId id : theorems::all_theorems())
            reports.push_back(
                theorems::sweep(id, cfg.max_n, cfg.max_entry, {cfg.budget, cfg.workers}));
    } else if (!cfg.lengths.empty()) {
        const LengthVector y(cfg.lengths);
        reports.push_back(theorems::check(theorems::theorem_from_string(cfg.theorem), y,
                                          {cfg.budget, cfg.max_entry}));
    } else {
        if (cfg.max_n <= 0 || cfg.max_entry <= 0)
            throw usage_error("verify needs --lengths or sweep bounds --max-n/--max-entry");
        reports.push_back(theorems::sweep(theorems::theorem_from_string(cfg.theorem), cfg.max_n,
                                          cfg.max_entry, {cfg.budget, cfg.workers}));
    }

    CommandOutput out;
    const bool single = reports.size() == 1;
    out.result = single ? report_to_json(reports.front()) : ojson::array();
    out.csv.push_back("theorem,verdict,vacuous,inputs_tested");
    std::ostringstream table_stream;
    for (const theorems::CheckReport& report : reports) {
        if (!single)
            out.result.push_back(report_to_json(report));
        out.csv.push_back(std::string(theorems::to_string(report.theorem)) + "," +
                          (report.pass ? "pass" : "fail") + "," +
                          (report.vacuous ? "true" : "false") + "," +
                          std::to_string(report.inputs_tested));
        print_report_table(report, table_stream);
        if (!report.pass)
            out.exit_code = 1;
    }
    std::istringstream table_lines(table_stream.str());
    std::string line;
    while (std::getline(table_lines, line))
        out.table.push_back(line);
    return out;
}

}  // namespace

RunConfig parse_command_line(int argc, const char* const* argv, std::ostream& out,
                             bool& help_requested)
{
    help_requested = false;
    RunConfig cfg;

    CLI::App app{"parking assortments: experiments, invariant enumeration, theorem checks"};
    app.require_subcommand(1);

    std::string lengths_text;
    std::string prefs_text;
    std::string format_text = "table";

    auto add_common = [&](CLI::App* sub, bool needs_lengths) {
        auto* lengths_opt =
            sub->add_option("--lengths", lengths_text, "car lengths, comma separated");
        if (needs_lengths)
            lengths_opt->required();
        sub->add_option("--format", format_text, "json | csv | table");
        sub->add_option("--budget", cfg.budget, "max parking experiments per enumeration");
        sub->add_option("--workers", cfg.workers, "sweep worker count (0 = auto)");
    };

    CLI::App* park_cmd = app.add_subcommand("park", "run one parking experiment");
    add_common(park_cmd, true);
    park_cmd->add_option("--prefs", prefs_text, "preferences, comma separated")->required();

    CLI::App* enum_cmd =
        app.add_subcommand("enumerate", "list the nondecreasing invariant assortments");
    add_common(enum_cmd, true);
    enum_cmd->add_flag("--unpruned", cfg.unpruned, "exhaustive search (oracle testing)");

    CLI::App* count_cmd =
        app.add_subcommand("count", "count invariant assortments, brute force vs closed form");
    add_common(count_cmd, true);
    count_cmd->add_flag("--unpruned", cfg.unpruned, "exhaustive search (oracle testing)");

    CLI::App* char_cmd = app.add_subcommand("char", "characteristic and degree histogram");
    add_common(char_cmd, true);
    char_cmd->add_flag("--unpruned", cfg.unpruned, "exhaustive search (oracle testing)");

    CLI::App* wset_cmd = app.add_subcommand("wset", "invariant solution set W(y)");
    add_common(wset_cmd, true);
    wset_cmd->add_flag("--unpruned", cfg.unpruned, "exhaustive scan (oracle testing)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "check theorem statements");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--theorem", cfg.theorem, "theorem id, e.g. B-max-char-iff");
    verify_cmd->add_flag("--all", cfg.all_theorems, "run the whole registry");
    verify_cmd->add_option("--max-n", cfg.max_n, "sweep bound: car count");
    verify_cmd->add_option("--max-entry", cfg.max_entry, "sweep bound: car length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        help_requested = true;
        return cfg;
    } catch (const CLI::ParseError& e) {
        throw usage_error(e.what());
    }

    if (park_cmd->parsed())
        cfg.command = Command::park;
    else if (enum_cmd->parsed())
        cfg.command = Command::enumerate;
    else if (count_cmd->parsed())
        cfg.command = Command::count;
    else if (char_cmd->parsed())
        cfg.command = Command::characteristic;
    else if (wset_cmd->parsed())
        cfg.command = Command::wset;
    else
        cfg.command = Command::verify;

    if (!lengths_text.empty())
        cfg.lengths = parse_int_list(lengths_text, "--lengths");
    if (!prefs_text.empty())
        cfg.prefs = parse_int_list(prefs_text, "--prefs");

    if (format_text == "json")
        cfg.format = Format::json;
    else if (format_text == "csv")
        cfg.format = Format::csv;
    else if (format_text == "table")
        cfg.format = Format::table;
    else
        throw usage_error("unknown format \"" + format_text + "\"");

    if (cfg.command == Command::verify && !cfg.all_theorems && cfg.theorem.empty())
        throw usage_error("verify needs --theorem or --all");
    if (cfg.command == Command::verify && cfg.all_theorems && !cfg.lengths.empty())
        throw usage_error("verify --all runs a sweep; drop --lengths");

    return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const char* command_name = nullptr;
    switch (cfg.command) {
    case Command::park: command_name = "park"; break;
    case Command::enumerate: command_name = "enumerate"; break;
    case Command::count: command_name = "count"; break;
    case Command::characteristic: command_name = "char"; break;
    case Command::wset: command_name = "wset"; break;
    case Command::verify: command_name = "verify"; break;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        CommandOutput result;
        if (cfg.command == Command::verify) {
            result = run_verify(cfg);
        } else {
            const LengthVector y(cfg.lengths);
            switch (cfg.command) {
            case Command::park: result = run_park(cfg, y); break;
            case Command::enumerate: result = run_enumerate(cfg, y); break;
            case Command::count: result = run_count(cfg, y); break;
            case Command::characteristic: result = run_characteristic(cfg, y); break;
            case Command::wset: result = run_wset(cfg, y); break;
            case Command::verify: break;
            }
        }
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);

        switch (cfg.format) {
        case Format::json: {
            ojson j;
            j["command"] = command_name;
            ojson input;
            if (!cfg.lengths.empty())
                input["lengths"] = cfg.lengths;
            if (!cfg.prefs.empty())
                input["prefs"] = cfg.prefs;
            if (!cfg.theorem.empty())
                input["theorem"] = cfg.theorem;
            if (cfg.all_theorems)
                input["all"] = true;
            if (cfg.max_n > 0)
                input["max_n"] = cfg.max_n;
            if (cfg.max_entry > 0)
                input["max_entry"] = cfg.max_entry;
            if (cfg.unpruned)
                input["unpruned"] = true;
            input["budget"] = cfg.budget;
            input["workers"] = cfg.workers;
            j["input"] = input;
            j["result"] = result.result;
            j["elapsed_ms"] = elapsed.count();
            j["version"] = std::string(kVersion);
            out << j.dump() << "\n";
            break;
        }
        case Format::csv:
            for (const std::string& line : result.csv)
                out << line << "\n";
            break;
        case Format::table:
            for (const std::string& line : result.table)
                out << line << "\n";
            break;
        }
        return result.exit_code;
    } catch (const invariance::budget_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace parkinv::cli
