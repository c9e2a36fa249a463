#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcforge/census.hpp"
#include "lcforge/counting.hpp"
#include "lcforge/error.hpp"
#include "lcforge/kerror.hpp"
#include "lcforge/linear_complexity.hpp"
#include "lcforge/report_io.hpp"
#include "lcforge/sequence.hpp"

namespace lcforge::cli {

namespace {

using nlohmann::json;

enum class Format { Table, Json, Csv };

const std::map<std::string, Format> kFormats = {
    {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};

struct SequenceInput {
    int n = -1;
    std::string bits;
    std::string hex;
    std::string file;
};

struct Options {
    SequenceInput input;
    Format format = Format::Table;
    std::size_t k = 0;
    std::size_t k_max = 0;
    std::int64_t L = 0;
    std::string cls = "all";
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    unsigned jobs = 0;
    bool stable = false;
};

void add_sequence_options(CLI::App* cmd, SequenceInput& in) {
    cmd->add_option("--n", in.n, "Exponent n; the period is 2^n bits")->required()->check(
        CLI::Range(0, kMaxExponent));
    auto* bits = cmd->add_option("--bits", in.bits, "Period as 0/1 digits, position 0 first");
    auto* hex = cmd->add_option("--hex", in.hex,
                                "Period as 2^n/4 hex digits, most significant bit first "
                                "(the first digit holds positions 0..3)");
    auto* file = cmd->add_option("--file", in.file, "File holding a binary period; whitespace is ignored");
    bits->excludes(hex)->excludes(file);
    hex->excludes(file);
    cmd->callback([bits, hex, file] {
        if (bits->count() + hex->count() + file->count() != 1) {
            throw CLI::ValidationError("exactly one of --bits, --hex, --file is required");
        }
    });
}

void add_format(CLI::App* cmd, Format& format) {
    cmd->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

void add_jobs(CLI::App* cmd, Options& o) {
    cmd->add_option("--jobs", o.jobs, "Worker threads (0 = available parallelism)")
        ->envname("LCFORGE_JOBS");
    cmd->add_flag("--stable", o.stable, "Omit elapsed time so output is byte-stable");
}

PeriodicSequence read_sequence(const SequenceInput& in) {
    if (!in.file.empty()) {
        std::ifstream f(in.file);
        if (!f) throw Error(ErrorCode::InvalidPeriod, "cannot read " + in.file);
        std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        text.erase(std::remove_if(text.begin(), text.end(),
                                  [](unsigned char c) { return std::isspace(c); }),
                   text.end());
        return parse_sequence(text, in.n, Encoding::Binary);
    }
    if (!in.hex.empty()) return parse_sequence(in.hex, in.n, Encoding::Hex);
    return parse_sequence(in.bits, in.n, Encoding::Binary);
}

const char* class_label(const PeriodicSequence& s) {
    return classify(s) == SequenceClass::FullLC ? "FullLC" : "LessLC";
}

std::string join(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

int cmd_lc(const Options& o, std::ostream& out) {
    const auto s = read_sequence(o.input);
    const std::size_t lc = games_chan_lc(s);
    const std::size_t w = hamming_weight(s);
    switch (o.format) {
        case Format::Json:
            out << json{{"n", s.exponent()}, {"L", lc}, {"weight", w}, {"class", class_label(s)}}.dump()
                << '\n';
            break;
        case Format::Csv:
            out << "n,L,weight,class\n" << s.exponent() << ',' << lc << ',' << w << ',' << class_label(s) << '\n';
            break;
        case Format::Table:
            out << "L=" << lc << " W=" << w << " class=" << class_label(s) << '\n';
            break;
    }
    return kExitOk;
}

int cmd_kerr(const Options& o, std::ostream& out) {
    const auto s = read_sequence(o.input);
    const auto r = k_error_lc(s, o.k);
    const std::size_t lc = games_chan_lc(s);
    switch (o.format) {
        case Format::Json:
            out << json{{"n", s.exponent()}, {"k", r.k}, {"L", lc}, {"Lk", r.value},
                        {"witness", r.witness.positions}}
                       .dump()
                << '\n';
            break;
        case Format::Csv:
            out << "n,k,L,Lk,witness\n"
                << s.exponent() << ',' << r.k << ',' << lc << ',' << r.value << ",\""
                << join(r.witness.positions) << "\"\n";
            break;
        case Format::Table:
            out << "L=" << lc << " k=" << r.k << " Lk=" << r.value << " witness=["
                << join(r.witness.positions) << "]\n";
            break;
    }
    return kExitOk;
}

int cmd_profile(const Options& o, std::ostream& out) {
    const auto s = read_sequence(o.input);
    const auto profile = k_error_profile(s, o.k_max);
    switch (o.format) {
        case Format::Json: {
            json rows = json::array();
            for (const auto& e : profile) rows.push_back({{"k", e.k}, {"Lk", e.value}});
            out << json{{"n", s.exponent()}, {"kmax", o.k_max}, {"profile", rows}}.dump() << '\n';
            break;
        }
        case Format::Csv:
            out << "k,Lk\n";
            for (const auto& e : profile) out << e.k << ',' << e.value << '\n';
            break;
        case Format::Table: {
            std::vector<std::size_t> values;
            for (const auto& e : profile) values.push_back(e.value);
            out << "profile " << join(values) << '\n';
            break;
        }
    }
    return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
    const SequenceClass cls = parse_sequence_class(o.cls);
    const auto formula = census::select_formula(o.k, cls);
    if (!formula) {
        throw Error(ErrorCode::NoFormulaAvailable, "no closed form for k = " + std::to_string(o.k) +
                                                       " over class " + to_string(cls));
    }
    const std::string value = (*formula)(o.input.n, o.L).str();
    switch (o.format) {
        case Format::Json:
            out << json{{"n", o.input.n}, {"L", o.L}, {"k", o.k}, {"class", to_string(cls)}, {"count", value}}
                       .dump()
                << '\n';
            break;
        case Format::Csv:
            out << "n,L,k,class,count\n"
                << o.input.n << ',' << o.L << ',' << o.k << ',' << to_string(cls) << ',' << value << '\n';
            break;
        case Format::Table: out << value << '\n'; break;
    }
    return kExitOk;
}

void render(const census::CensusReport& report, const Options& o, std::ostream& out) {
    switch (o.format) {
        case Format::Json: out << census::to_json(report, o.stable); break;
        case Format::Csv: out << census::to_csv(report); break;
        case Format::Table: out << census::to_table(report, o.stable); break;
    }
}

int cmd_census(const Options& o, std::ostream& out) {
    census::CensusQuery q{o.input.n, o.k, parse_sequence_class(o.cls), census::Exhaustive{}};
    if (o.samples > 0) q.mode = census::Sampled{o.samples, o.seed};
    auto report = census::census_distribution(q, o.jobs);
    if (census::select_formula(q.k, q.cls)) census::attach_formulas(report);
    render(report, o, out);
    return report.passed() ? kExitOk : kExitMismatch;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto report = census::verify_formulas(o.input.n, o.k, parse_sequence_class(o.cls), o.jobs);
    render(report, o, out);
    return report.passed() ? kExitOk : kExitMismatch;
}

int cmd_refute(const Options& o, std::ostream& out) {
    render(census::refutation_report(o.jobs), o, out);
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear complexity and k-error linear complexity of 2^n-periodic binary sequences"};
    app.require_subcommand(1);
    app.footer(
        "Bit order: --bits lists position 0 first; --hex is most significant bit first, so the\n"
        "first hex digit holds positions 0..3 (\"C000\" at n = 4 is positions 0 and 1).\n"
        "Exit status: 0 ok, 1 census disagrees with a closed form, 2 invalid input or budget exceeded.");
    Options o;

    auto* lc = app.add_subcommand("lc", "Linear complexity, weight and parity class of one period");
    add_sequence_options(lc, o.input);
    add_format(lc, o.format);

    auto* kerr = app.add_subcommand("kerr", "k-error linear complexity with a witness error pattern");
    add_sequence_options(kerr, o.input);
    kerr->add_option("--k", o.k, "Maximum number of flipped bits")->required();
    add_format(kerr, o.format);

    auto* profile = app.add_subcommand("profile", "k-error linear complexity profile L_0..L_kmax");
    add_sequence_options(profile, o.input);
    profile->add_option("--kmax", o.k_max, "Largest k in the profile")->required();
    add_format(profile, o.format);

    auto* count = app.add_subcommand("count", "Evaluate a closed-form counting function");
    count->add_option("--n", o.input.n, "Exponent n")->required()->check(
        CLI::Range(0, counting::kMaxCountingExponent));
    count->add_option("--L", o.L, "Target k-error linear complexity")->required();
    count->add_option("--k", o.k, "Error bound k")->required();
    count->add_option("--class", o.cls, "all | full (odd weight) | less (even weight)");
    add_format(count, o.format);

    auto* census_cmd = app.add_subcommand("census", "Distribution of L_k over a class of sequences");
    census_cmd->add_option("--n", o.input.n, "Exponent n (exhaustive: n <= 4, sampled: n <= 5)")->required();
    census_cmd->add_option("--k", o.k, "Error bound k <= 4")->required();
    census_cmd->add_option("--class", o.cls, "all | full | less");
    census_cmd->add_option("--samples", o.samples, "Draw this many sequences instead of enumerating");
    census_cmd->add_option("--seed", o.seed, "Seed for --samples");
    add_jobs(census_cmd, o);
    add_format(census_cmd, o.format);

    auto* verify = app.add_subcommand("verify", "Exhaustive census checked against the closed form");
    verify->add_option("--n", o.input.n, "Exponent n <= 4")->required();
    verify->add_option("--k", o.k, "Error bound k")->required();
    verify->add_option("--class", o.cls, "all | full | less");
    add_jobs(verify, o);
    add_format(verify, o.format);

    auto* refute = app.add_subcommand("refute", "n = 4, k = 3 census against the literature table");
    add_jobs(refute, o);
    add_format(refute, o.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*lc) return cmd_lc(o, out);
        if (*kerr) return cmd_kerr(o, out);
        if (*profile) return cmd_profile(o, out);
        if (*count) return cmd_count(o, out);
        if (*census_cmd) return cmd_census(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*refute) return cmd_refute(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace lcforge::cli
