#pragma once

// Command-line front end: verify | classify | reduce | table.

#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "freycond/classifier.hpp"
#include "freycond/frey_families.hpp"
#include "freycond/pipelines.hpp"
#include "freycond/random_models.hpp"
#include "freycond/serialize.hpp"

namespace freycond::cli {

enum Exit : int { Ok = 0, UsageError = 1, Degenerate = 2, NotCoveredExit = 3, AssertionExit = 4 };

inline int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Usage:
        case ErrorKind::NotOddPrime: return UsageError;
        case ErrorKind::DegenerateParameter: return Degenerate;
        case ErrorKind::NotCovered:
        case ErrorKind::HypothesisViolated: return NotCoveredExit;
        default: return AssertionExit;
    }
}

struct Options {
    std::string command;
    std::string signature;
    std::string r;
    std::string t;
    std::string z;
    std::string s;
    std::string mode = "printed";
    std::string format = "text";
    std::string out;
    std::string pipeline;
    std::string grid;
    bool json() const { return format == "json"; }
};

/// "N" or "A..B" as an inclusive pair.
inline std::pair<int, int> parse_span(const std::string& spec, const std::string& what) {
    auto parse_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) fail(ErrorKind::Usage, "malformed " + what + " '" + spec + "'");
        return v;
    };
    const auto dots = spec.find("..");
    if (dots == std::string::npos) {
        int v = parse_int(spec);
        return {v, v};
    }
    int a = parse_int(spec.substr(0, dots)), b = parse_int(spec.substr(dots + 2));
    if (a > b) fail(ErrorKind::Usage, what + " '" + spec + "' is empty");
    return {a, b};
}

constexpr int kMaxR = 19;

/// Odd primes in the range; both bounds must themselves be odd primes <= 19.
inline std::vector<int> parse_r_range(const std::string& spec) {
    auto [a, b] = parse_span(spec, "r range");
    for (int e : {a, b})
        if (!is_odd_prime(e) || e > kMaxR)
            fail(ErrorKind::Usage, "r bound " + std::to_string(e) + " is not an odd prime <= " + std::to_string(kMaxR));
    std::vector<int> out;
    for (int r = a; r <= b; ++r)
        if (is_odd_prime(r)) out.push_back(r);
    return out;
}

inline int parse_single_r(const std::string& spec) {
    auto rs = parse_r_range(spec);
    if (rs.size() != 1 || spec.find("..") != std::string::npos) fail(ErrorKind::Usage, "expected a single r");
    return rs.front();
}

inline Rat parse_rat(const std::string& text, const std::string& what) {
    if (text.empty()) fail(ErrorKind::Usage, "missing --" + what);
    return Rat::parse(text);
}

using json::Json;

// ---------------------------------------------------------------- verify

inline Json cmd_verify(const Options& o, std::ostream& text, int& status) {
    const auto primes = parse_r_range(o.r.empty() ? "3..7" : o.r);
    const std::vector<FamilyId> fams{FamilyId::Czs, FamilyId::CPlus, FamilyId::CMinus, FamilyId::Hrr, FamilyId::H2r};
    Json results = Json::array(), mismatches = Json::array(), failures = Json::array();

    text << std::left << std::setw(4) << "r" << std::setw(12) << "identities";
    for (auto f : fams) text << std::setw(10) << to_string(f);
    text << "change-law\n";

    for (int r : primes) {
        const IdentityReport id = verify_identities(r);
        Json entry{{"r", r}, {"identities", json::identities(id)}};
        if (!id.stated_checks_pass()) failures.push_back("r=" + std::to_string(r) + ": identity check failed");
        if (!id.minus_printed_holds)
            mismatches.push_back("r=" + std::to_string(r) + ": f-2 = (x-2) g^2 holds with g = h(x), not h(-x)");
        text << std::setw(4) << r << std::setw(12) << (id.stated_checks_pass() ? "pass" : "FAIL");

        Json forms = Json::array();
        for (auto f : fams) {
            const ClosedFormReport cf = verify_closed_form_disc(f, r);
            forms.push_back(json::closed_form(cf));
            const bool ok = cf.printed_matches && cf.computed_form_matches;
            if (!cf.printed_matches)
                failures.push_back("r=" + std::to_string(r) + ": printed discriminant of " +
                                   std::string(to_string(f)) + " differs from the computed " + cf.computed);
            else if (!cf.computed_form_matches)
                failures.push_back("r=" + std::to_string(r) + ": " + std::string(to_string(f)) +
                                   " disagrees with its computed closed form");
            text << std::setw(10) << (ok ? "pass" : "FAIL");
        }
        entry["closed_forms"] = forms;

        const int g = (r - 1) / 2;
        const auto law = gen::change_law_trials(static_cast<std::uint64_t>(r), 10, g, g);
        entry["change_law"] = Json{{"genus", g}, {"trials", law.trials}, {"passed", law.passed}};
        if (!law.ok()) failures.push_back("r=" + std::to_string(r) + ": discriminant change law failed");
        text << (law.ok() ? "pass" : "FAIL") << " (" << law.passed << "/" << law.trials << ")\n";
        results.push_back(entry);
    }

    const ClosedFormReport h35 = verify_closed_form_disc(FamilyId::H35, 0);
    if (!h35.printed_matches) failures.push_back("printed discriminant of H_35 differs from " + h35.computed);
    text << "H_35 (r-independent): " << (h35.printed_matches ? "pass" : "FAIL") << "\n";

    for (const auto& m : mismatches) text << "documented-mismatch: " << m.get<std::string>() << "\n";
    for (const auto& f : failures) text << "FAIL: " << f.get<std::string>() << "\n";
    status = failures.empty() ? Ok : AssertionExit;
    text << "status: " << (failures.empty() ? "pass" : "fail") << "\n";
    return Json{{"command", "verify"},
                {"results", results},
                {"H_35", json::closed_form(h35)},
                {"documented_mismatches", mismatches},
                {"hard_failures", failures},
                {"status", failures.empty() ? "pass" : "fail"}};
}

// -------------------------------------------------------------- classify

inline Json oracle_summary(Signature sig, int r, const Rat& t) {
    try {
        return json::cross_validation(cross_validate(sig, r, t));
    } catch (const Error& e) {
        return Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    }
}

inline Json cmd_classify(const Options& o, std::ostream& text, int& status) {
    auto sig = parse_signature(o.signature);
    if (!sig) fail(ErrorKind::Usage, "missing or unknown --signature");
    int r = 0;
    if (*sig != Signature::P35) {
        if (o.r.empty()) fail(ErrorKind::Usage, "--r is required for " + o.signature);
        r = parse_single_r(o.r);
    }
    const Rat t = parse_rat(o.t, "t");
    const Mode mode = o.mode == "oracle" ? Mode::Oracle : Mode::Printed;
    const ConductorReport rep = classify(*sig, r, t, mode);
    const Json oracle = rep.exponent ? oracle_summary(*sig, r, t) : Json(nullptr);
    status = rep.exponent ? Ok : NotCoveredExit;

    text << "signature: " << to_string(rep.signature) << "\n";
    if (*sig != Signature::P35) text << "r: " << r << "\n";
    text << "t: " << t.str() << "\n"
         << "case: " << rep.case_label << "\n"
         << "conductor_exponent: " << (rep.exponent ? std::to_string(*rep.exponent) : "not_covered") << "\n";
    if (!rep.inertial_type.empty()) text << "inertial_type: " << rep.inertial_type << "\n";
    text << "source: " << rep.source << "\n";
    if (oracle.contains("agree")) {
        text << "oracle: " << (oracle["agree"].get<bool>() ? "agree" : "CONFLICT") << ", construction exponent "
             << oracle["construction_exponent"].get<int>() << " (" << oracle["witness"].get<std::string>() << ")\n";
        if (!oracle["conflict"].is_null()) text << "conflict: " << oracle["conflict"].get<std::string>() << "\n";
    } else if (oracle.contains("error")) {
        text << "oracle: " << oracle["message"].get<std::string>() << "\n";
    }
    return json::conductor(rep, oracle);
}

// ---------------------------------------------------------------- reduce

inline PipelineResult run_pipeline(const Options& o) {
    const std::string& p = o.pipeline;
    auto ppr_r = [&] { return o.r.empty() ? 3 : parse_single_r(o.r); };
    if (p == "ppr-even-vneg") return pipeline_ppr_even(PprCase::VNeg, ppr_r());
    if (p == "ppr-even-vtpos") return pipeline_ppr_even(PprCase::VTPos, ppr_r());
    if (p == "ppr-even-v1mtpos") return pipeline_ppr_even(PprCase::V1mtPos, ppr_r());
    if (p == "35p-vneg") return pipeline_35p(PprCase::VNeg);
    if (p == "35p-vtpos") return pipeline_35p(PprCase::VTPos);
    if (p == "35p-v1mtpos") return pipeline_35p(PprCase::V1mtPos);
    if (p == "odd-good") {
        if (o.r.empty()) fail(ErrorKind::Usage, "--r is required for odd-good");
        const int r = parse_single_r(o.r);
        return pipeline_odd_good_reduction(parse_rat(o.z, "z"), parse_rat(o.s, "s"), r);
    }
    fail(ErrorKind::Usage, "unknown pipeline '" + p + "'");
}

inline Json cmd_reduce(const Options& o, std::ostream& text, int& status) {
    const PipelineResult res = run_pipeline(o);
    status = Ok;
    text << "pipeline: " << res.label << "\n";
    if (res.r) text << "r: " << res.r << "\n";
    if (res.label == "odd-good")
        text << "twist: " << res.twist << " (z, s) = (" << res.z.str() << ", " << res.s.str() << ")\n";
    text << "parameter: " << res.parameter << "\n"
         << "model: " << res.model << "\n"
         << "integral: " << (res.integral ? "yes" : "no") << "\n"
         << "disc valuation: " << res.disc_valuation << (res.unit_discriminant ? " (unit)" : "") << "\n"
         << "fiber: " << to_string(res.fiber) << "\n"
         << "fiber type: " << to_string(res.fiber_type.kind) << ", " << res.fiber_type.nodes << " nodes\n";
    for (const auto& pt : res.points)
        text << "  " << (pt.patch == Patch::Affine ? "affine" : "infinity") << " (" << format_gf2(pt.x) << ", "
             << format_gf2(pt.y) << ") over GF(2^" << pt.field_degree << "): " << to_string(pt.kind) << "\n";
    text << "field of definition: " << res.field_of_definition << "\n";
    for (const auto& m : res.mismatches) text << "documented-mismatch: " << m << "\n";
    Json j = json::pipeline(res);
    j["command"] = "reduce";
    return j;
}

// ----------------------------------------------------------------- table

struct RowOutcome {
    const TableRow* row = nullptr;
    int r = 0;
    int samples = 0;
    int reproduced = 0;
    int agree = 0;
    int disagree = 0;
    std::vector<std::string> conflicts;
};

inline std::vector<Rat> grid_samples(int lo, int hi) {
    std::vector<Rat> ts;
    for (int v = lo; v <= hi; ++v) {
        if (v == 0) continue;
        for (const auto& t : sample_t_with_vt(v)) ts.push_back(t);
        if (v > 0)
            for (const auto& t : sample_t_with_v1mt(v)) ts.push_back(t);
    }
    return ts;
}

inline Json cmd_table(const Options& o, std::ostream& text, int& status) {
    const auto primes = parse_r_range(o.r.empty() ? "3..7" : o.r);
    const auto [lo, hi] = o.grid.empty() ? std::pair{-9, 11} : parse_span(o.grid, "grid exponents");
    const Mode mode = o.mode == "oracle" ? Mode::Oracle : Mode::Printed;
    const std::vector<Rat> ts = grid_samples(lo, hi);
    const auto rows = table_rows();

    std::vector<RowOutcome> outcomes;
    for (const auto& row : rows) {
        std::vector<int> rs = row.signature == Signature::P35 ? std::vector<int>{0} : primes;
        for (int r : rs) {
            RowOutcome oc;
            oc.row = &row;
            oc.r = r;
            for (const auto& t : ts) {
                const Valuations v = valuations(t);
                if (!row.matches(r, v.vt, v.v1mt)) continue;
                ++oc.samples;
                const ConductorReport rep = classify(row.signature, r, t, mode);
                if (rep.exponent && *rep.exponent == row.exponent) ++oc.reproduced;
                const CrossValidation cv = cross_validate(row.signature, r, t);
                if (cv.agree) ++oc.agree;
                else {
                    ++oc.disagree;
                    oc.conflicts.push_back(cv.conflict);
                }
            }
            outcomes.push_back(std::move(oc));
        }
    }

    bool all_reproduced = true;
    Json jrows = Json::array();
    text << std::left << std::setw(10) << "signature" << std::setw(6) << "deg" << std::setw(4) << "r" << std::setw(20)
         << "v2(t)" << std::setw(20) << "v2(1-t)" << std::setw(5) << "exp" << std::setw(14) << "reproduced"
         << "oracle\n";
    for (const auto& oc : outcomes) {
        const bool ok = oc.samples > 0 && oc.reproduced == oc.samples;
        all_reproduced = all_reproduced && ok;
        std::ostringstream rep;
        rep << oc.reproduced << "/" << oc.samples;
        std::ostringstream orc;
        orc << oc.agree << " agree";
        if (oc.disagree) orc << ", " << oc.disagree << " conflict";
        text << std::setw(10) << to_string(oc.row->signature) << std::setw(6) << oc.row->degree << std::setw(4)
             << (oc.r ? std::to_string(oc.r) : "-") << std::setw(20) << oc.row->vt << std::setw(20) << oc.row->v1mt
             << std::setw(5) << oc.row->exponent << std::setw(14) << rep.str() << orc.str() << "\n";
        jrows.push_back(Json{{"signature", std::string(to_string(oc.row->signature))},
                             {"degree", oc.row->degree},
                             {"r", oc.r ? Json(oc.r) : Json(nullptr)},
                             {"v2_t", oc.row->vt},
                             {"v2_1mt", oc.row->v1mt},
                             {"exponent", oc.row->exponent},
                             {"samples", oc.samples},
                             {"reproduced", ok},
                             {"oracle_agree", oc.agree},
                             {"oracle_conflicts", oc.conflicts}});
    }
    for (const auto& oc : outcomes)
        for (const auto& c : oc.conflicts) text << "conflict: " << c << "\n";

    Json doc{{"command", "table"},
             {"mode", std::string(to_string(mode))},
             {"grid", Json::array({lo, hi})},
             {"rows", jrows},
             {"all_rows_reproduced", all_reproduced}};

    if (!o.grid.empty()) {
        Json listing = Json::array();
        text << "\nper-valuation exponents (t = 2^v, or t = 1 - 2^v for v2(1-t) = v)\n";
        for (Signature sig : {Signature::PprEven, Signature::PprOdd, Signature::Rrp, Signature::TwoRp, Signature::P35}) {
            std::vector<int> rs = sig == Signature::P35 ? std::vector<int>{0} : primes;
            for (const char* which : {"v2(t)", "v2(1-t)"})
                for (int r : rs) {
                    text << std::setw(10) << to_string(sig) << std::setw(4) << (r ? std::to_string(r) : "-")
                         << std::setw(9) << which;
                    for (int v = lo; v <= hi; ++v) {
                        if (v == 0 || (which[3] == '1' && v < 0)) continue;
                        const Rat t = which[3] == '1' ? Rat(1) - pow2(v) : pow2(v);
                        const ConductorReport rep = classify(sig, r, t, mode);
                        text << " " << v << ":" << (rep.exponent ? std::to_string(*rep.exponent) : "-");
                        listing.push_back(Json{{"signature", std::string(to_string(sig))},
                                               {"r", r ? Json(r) : Json(nullptr)},
                                               {"valuation_of", which},
                                               {"v", v},
                                               {"t", json::rat(t)},
                                               {"conductor_exponent", json::exponent(rep.exponent)}});
                    }
                    text << "\n";
                }
        }
        doc["listing"] = listing;
    }
    status = (mode == Mode::Printed && !all_reproduced) ? AssertionExit : Ok;
    return doc;
}

// ------------------------------------------------------------------ main

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frey hyperelliptic curves at the prime above 2", "freycond"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> sigs{"ppr-even", "ppr-odd", "rrp", "2rp", "35p"};
    const std::vector<std::string> pipes{"ppr-even-vneg", "ppr-even-vtpos", "ppr-even-v1mtpos", "35p-vneg",
                                         "35p-vtpos",     "35p-v1mtpos",    "odd-good"};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", o.out, "write the document to PATH");
    };
    auto* verify = app.add_subcommand("verify", "identities, closed-form discriminants, change law");
    verify->add_option("--r", o.r, "N or A..B (odd primes <= 19)");
    common(verify);
    auto* classify_cmd = app.add_subcommand("classify", "conductor exponent at the prime above 2");
    classify_cmd->add_option("--signature", o.signature)->check(CLI::IsMember(sigs));
    classify_cmd->add_option("--r", o.r);
    classify_cmd->add_option("--t", o.t, "num/den");
    classify_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"printed", "oracle"}));
    common(classify_cmd);
    auto* reduce = app.add_subcommand("reduce", "run a reduction pipeline");
    reduce->add_option("--pipeline", o.pipeline)->required()->check(CLI::IsMember(pipes));
    reduce->add_option("--r", o.r);
    reduce->add_option("--z", o.z);
    reduce->add_option("--s", o.s);
    common(reduce);
    auto* table = app.add_subcommand("table", "regenerate the conductor table over a valuation grid");
    table->add_option("--r", o.r);
    table->add_option("--grid-exponents", o.grid, "A..B");
    table->add_option("--mode", o.mode)->check(CLI::IsMember({"printed", "oracle"}));
    common(table);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return UsageError;
    }
    for (auto* sub : {verify, classify_cmd, reduce, table})
        if (sub->parsed()) o.command = sub->get_name();

    std::ostringstream text;
    Json doc;
    int status = Ok;
    try {
        if (o.command == "verify") doc = cmd_verify(o, text, status);
        else if (o.command == "classify") doc = cmd_classify(o, text, status);
        else if (o.command == "reduce") doc = cmd_reduce(o, text, status);
        else doc = cmd_table(o, text, status);
    } catch (const Error& e) {
        status = exit_code(e.kind());
        if (!o.json()) {
            err << "error: " << e.what() << "\n";
            return status;
        }
        doc = Json{{"command", o.command}, {"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    }

    const std::string rendered = o.json() ? json::render(doc) : text.str();
    if (o.out.empty()) {
        out << rendered;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            err << "usage error: cannot write " << o.out << "\n";
            return UsageError;
        }
        f << rendered;
    }
    return status;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace freycond::cli
