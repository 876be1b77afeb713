// Copyright 2026 The corrqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corrqec/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "corrqec/serialize.h"

namespace corrqec::cli {

namespace {

double parse_double(const std::string &text) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw UsageError("not a number: '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, sep)) {
        out.push_back(piece);
    }
    if (!text.empty() && text.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::vector<Scheme> parse_schemes(const std::string &text) {
    std::vector<Scheme> out;
    for (const auto &name : split(text, ',')) {
        try {
            out.push_back(parse_scheme(name));
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }
    if (out.empty()) {
        throw UsageError("--scheme needs at least one scheme");
    }
    return out;
}

double round_to_resolution(double value) { return parse_double(format_value(value)); }

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

Range Range::parse(const std::string &text) {
    auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw UsageError("range must look like min:max:steps, got '" + text + "'");
    }
    Range r;
    r.min = parse_double(parts[0]);
    r.max = parse_double(parts[1]);
    std::size_t steps = 0;
    auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), steps);
    if (ec != std::errc() || ptr != parts[2].data() + parts[2].size()) {
        throw UsageError("range steps must be a positive integer, got '" + parts[2] + "'");
    }
    r.steps = steps;
    if (r.steps < 1) {
        throw UsageError("range needs at least one step");
    }
    if (!(r.min >= 0 && r.max <= 1 && r.min <= r.max)) {
        throw UsageError("range '" + text + "' must satisfy 0 <= min <= max <= 1");
    }
    if (r.steps == 1 && r.min != r.max) {
        throw UsageError("a one-step range needs min == max");
    }
    return r;
}

Range Range::single(double value) {
    if (!(value >= 0 && value <= 1)) {
        throw UsageError("parameter value must lie in [0, 1]");
    }
    return {value, value, 1};
}

std::vector<double> Range::points() const {
    if (steps == 1) return {min};
    std::vector<double> out(steps);
    const double last = static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        double k = static_cast<double>(i);
        out[i] = (min * (last - k) + max * k) / last;
    }
    return out;
}

std::string format_value(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 12);
    std::string text(buf, ptr);
    if (text.find('.') != std::string::npos) {
        while (text.back() == '0') text.pop_back();
        if (text.back() == '.') text.pop_back();
    }
    if (text == "-0") text = "0";
    return text;
}

std::vector<FidelityResult> fidelity_rows(const SweepSpec &spec) {
    std::vector<FidelityResult> rows;
    for (Scheme scheme : spec.schemes) {
        SchemeSetup setup = make_scheme(scheme, spec.flavor);
        for (double mu : spec.mu_range.points()) {
            for (double p : spec.p_range.points()) {
                FidelityResult row = evaluate(setup, spec.model, mu, p);
                row.scheme = to_string(scheme);
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

void write_fidelity_table(const std::vector<FidelityResult> &rows, OutputFormat format, std::ostream &out) {
    auto abs_diff = [](const FidelityResult &row) -> std::optional<double> {
        if (!row.f_closed_form) return std::nullopt;
        return std::abs(round_to_resolution(row.f_numeric) - round_to_resolution(*row.f_closed_form));
    };
    if (format == OutputFormat::csv) {
        out << kFidelityCsvHeader << '\n';
        for (const auto &row : rows) {
            auto diff = abs_diff(row);
            out << to_string(row.model) << ',' << row.scheme << ',' << format_value(row.mu) << ','
                << format_value(row.p) << ',' << format_value(row.f_numeric) << ','
                << (row.f_closed_form ? format_value(*row.f_closed_form) : "") << ','
                << (diff ? format_value(*diff) : "") << ',' << format_value(row.failure_prob) << '\n';
        }
        return;
    }
    Json doc = Json::array();
    for (const auto &row : rows) {
        auto diff = abs_diff(row);
        doc.push_back({{"model", to_string(row.model)},
                       {"scheme", row.scheme},
                       {"mu", round_to_resolution(row.mu)},
                       {"p", round_to_resolution(row.p)},
                       {"fidelity_numeric", round_to_resolution(row.f_numeric)},
                       {"fidelity_closed_form",
                        row.f_closed_form ? Json(round_to_resolution(*row.f_closed_form)) : Json(nullptr)},
                       {"abs_diff", diff ? Json(round_to_resolution(*diff)) : Json(nullptr)},
                       {"failure_prob", round_to_resolution(row.failure_prob)}});
    }
    out << doc.dump(2) << '\n';
}

std::vector<ThresholdRow> threshold_rows(Model model, const std::vector<Scheme> &schemes, Flavor flavor,
                                         const Range &p_range) {
    std::vector<ThresholdRow> rows;
    for (Scheme scheme : schemes) {
        SchemeSetup setup = make_scheme(scheme, flavor);
        for (double p : p_range.points()) {
            if (!(p > 0 && p < 1)) {
                throw UsageError("threshold curves need 0 < p < 1, got p = " + format_value(p));
            }
            rows.push_back({model, scheme, threshold_mu(setup, model, p)});
        }
    }
    return rows;
}

void write_threshold_table(const std::vector<ThresholdRow> &rows, OutputFormat format, std::ostream &out) {
    if (format == OutputFormat::csv) {
        out << "model,scheme,p,mu_star,branch,crossings,effective_regions\n";
        for (const auto &row : rows) {
            std::vector<std::string> crossings;
            for (double c : row.point.crossings) crossings.push_back(format_value(c));
            std::vector<std::string> regions;
            for (const auto &r : row.point.effective) regions.push_back(format_value(r.lo) + ":" + format_value(r.hi));
            out << to_string(row.model) << ',' << to_string(row.scheme) << ',' << format_value(row.point.p) << ','
                << (row.point.mu_star ? format_value(*row.point.mu_star) : "") << ','
                << to_string(row.point.branch) << ',' << join(crossings, ";") << ',' << join(regions, ";") << '\n';
        }
        return;
    }
    Json doc = Json::array();
    for (const auto &row : rows) {
        Json crossings = Json::array();
        for (double c : row.point.crossings) crossings.push_back(round_to_resolution(c));
        Json regions = Json::array();
        for (const auto &r : row.point.effective) {
            regions.push_back(Json::array({round_to_resolution(r.lo), round_to_resolution(r.hi)}));
        }
        doc.push_back({{"model", to_string(row.model)},
                       {"scheme", to_string(row.scheme)},
                       {"p", round_to_resolution(row.point.p)},
                       {"mu_star", row.point.mu_star ? Json(round_to_resolution(*row.point.mu_star)) : Json(nullptr)},
                       {"branch", to_string(row.point.branch)},
                       {"crossings", crossings},
                       {"effective_regions", regions}});
    }
    out << doc.dump(2) << '\n';
}

void write_correctable_report(Scheme scheme, Model model, Flavor flavor, OutputFormat format, std::ostream &out) {
    SchemeSetup setup = make_scheme(scheme, flavor);
    // Interior parameters so that every Kraus operator of the model is present.
    NoiseChannel channel = merge(scheme_channel(setup, model, 0.5, 0.1));
    std::vector<PauliString> correctable = correctable_set(setup.code, channel);

    std::vector<PauliString> non_detectable;
    std::size_t detectable = 0;
    for (const auto &term : channel.kraus) {
        if (is_detectable(setup.code, term.op).detectable) {
            ++detectable;
        } else {
            non_detectable.push_back(term.op);
        }
    }
    std::stable_sort(non_detectable.begin(), non_detectable.end(), weight_order_less);
    auto alternatives = single_swap_alternatives(setup.code, channel, correctable);

    std::map<std::size_t, std::vector<std::string>> by_weight;
    for (const auto &op : correctable) {
        by_weight[op.weight()].push_back(op.label());
    }

    if (format == OutputFormat::json) {
        Json census = Json::object();
        for (const auto &[weight, labels] : by_weight) {
            census[std::to_string(weight)] = labels.size();
        }
        Json missing = Json::array();
        for (const auto &op : non_detectable) missing.push_back(op.label());
        Json doc = {{"scheme", setup.label()},
                    {"model", to_string(model)},
                    {"flavor", to_string(flavor)},
                    {"code", code_to_json(setup.code)},
                    {"weight_census", census},
                    {"detectable", detectable},
                    {"channel_operators", channel.kraus.size()},
                    {"non_detectable", missing},
                    {"single_swap_alternatives", alternatives.size()},
                    {"recovery", recovery_to_json(correctable, build_recovery(setup.code, correctable))}};
        out << doc.dump(2) << '\n';
        return;
    }

    RecoverySet rs = build_recovery(setup.code, correctable);
    out << "scheme: " << setup.label() << " (model " << to_string(model) << ", " << to_string(flavor)
        << " flavor)\n";
    out << "correctable: " << correctable.size() << '\n';
    for (const auto &[weight, labels] : by_weight) {
        out << "  weight " << weight << " (" << labels.size() << "): " << join(labels, " ") << '\n';
    }
    std::vector<std::string> census;
    for (const auto &[weight, labels] : by_weight) {
        census.push_back(std::to_string(weight) + ":" + std::to_string(labels.size()));
    }
    out << "weight census: {" << join(census, ", ") << "}\n";
    out << "detectable: " << detectable << " of " << channel.kraus.size() << '\n';
    std::vector<std::string> missing;
    for (const auto &op : non_detectable) missing.push_back(op.label());
    out << "non-detectable: " << (missing.empty() ? "(none)" : join(missing, " ")) << '\n';
    if (detectable == correctable.size()) {
        out << "detectable set equals correctable set\n";
    }
    out << "recovery operators: " << rs.recovery_ops.size() << " (complement dimension " << rs.complement.size()
        << ")\n";
    out << "equal-size single-swap alternatives: " << alternatives.size() << '\n';
}

namespace {

constexpr double kClosedFormTolerance = 1e-10;
constexpr double kNormalizationTolerance = 1e-12;
constexpr double kFlavorTolerance = 1e-12;

const std::vector<Scheme> kCodedSchemes{Scheme::bit3, Scheme::dfs2, Scheme::concat6};

SuiteReport new_report(std::string name, double tolerance) {
    SuiteReport report;
    report.name = std::move(name);
    report.tolerance = tolerance;
    return report;
}

void track(SuiteReport &report, double deviation, const std::string &label) {
    ++report.cases;
    if (deviation > report.max_deviation || std::isnan(deviation)) {
        report.max_deviation = deviation;
    }
    if (!(deviation <= report.tolerance) && report.passed) {
        report.passed = false;
        report.failing_case = label;
    }
}

std::string point_label(const std::string &what, double mu, double p) {
    return what + " at mu=" + format_value(mu) + " p=" + format_value(p);
}

SuiteReport suite_closed_form(const ClosedFormTable &table) {
    SuiteReport report = new_report("closed-form", kClosedFormTolerance);
    const Range grid{0, 1, 21};
    for (auto [scheme, model] : table.keys()) {
        SchemeSetup setup = make_scheme(scheme, Flavor::bit);
        const auto &poly = table.at(scheme, model);
        for (double mu : grid.points()) {
            for (double p : grid.points()) {
                FidelityResult r = evaluate(setup, model, mu, p, table);
                track(report, std::abs(r.f_numeric - poly(mu, p)), point_label(poly.name, mu, p));
            }
        }
    }
    report.notes.push_back("21x21 (mu, p) grid for each published polynomial");
    return report;
}

SuiteReport suite_normalization() {
    SuiteReport report = new_report("normalization", kNormalizationTolerance);
    for (Model model : {Model::model1, Model::model2}) {
        for (std::size_t n = 1; n <= 8; ++n) {
            for (double p : {0.0, 0.1, 0.3, 0.5, 1.0}) {
                for (double mu : {0.0, 0.3, 0.7, 1.0}) {
                    for (KrausForm form : {KrausForm::merged, KrausForm::unmerged}) {
                        NoiseChannel ch = make_channel({p, mu, n, Flavor::bit, model}, form);
                        track(report, std::abs(ch.total_weight() - 1.0),
                              "model " + to_string(model) + " n=" + std::to_string(n) + " " +
                                  point_label("weights", mu, p));
                    }
                }
            }
        }
    }
    return report;
}

SuiteReport suite_recovery() {
    SuiteReport report = new_report("recovery", kSubspaceTolerance);
    for (Scheme scheme : kCodedSchemes) {
        for (Flavor flavor : {Flavor::bit, Flavor::phase}) {
            SchemeSetup setup = make_scheme(scheme, flavor);
            TraceCheck check = verify_trace_preserving(setup.recovery);
            track(report, check.max_deviation, setup.label() + " sum R^dagger R");
            report.notes.push_back(setup.label() + ": " + std::to_string(setup.recovery.recovery_ops.size()) +
                                   " recovery operators, complement dimension " +
                                   std::to_string(setup.recovery.complement.size()));
        }
    }
    return report;
}

SuiteReport suite_oracle() {
    SuiteReport report = new_report("oracle", kSubspaceTolerance);
    std::mt19937_64 rng(20261015);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (Scheme scheme : kCodedSchemes) {
        SchemeSetup setup = make_scheme(scheme, Flavor::bit);
        for (Model model : {Model::model1, Model::model2}) {
            for (int i = 0; i < 30; ++i) {
                double mu = unit(rng);
                double p = unit(rng);
                NoiseChannel ch = scheme_channel(setup, model, mu, p);
                double sparse = entanglement_fidelity_corrected(setup.code, ch, setup.recovery);
                double dense = dense_oracle_fidelity(setup.code, ch, setup.recovery);
                track(report, std::abs(sparse - dense),
                      setup.label() + " model " + to_string(model) + " " + point_label("oracle", mu, p));
            }
        }
    }
    report.notes.push_back("30 random (mu, p) points per scheme and model");
    return report;
}

SuiteReport suite_correctable() {
    SuiteReport report = new_report("correctable", 0);
    struct Expectation {
        Scheme scheme;
        std::map<std::size_t, std::size_t> census;
        std::vector<std::string> non_detectable;
    };
    const std::vector<Expectation> expectations{
        {Scheme::bit3, {{0, 1}, {1, 3}}, {"X1X2X3"}},
        {Scheme::dfs2, {{0, 1}, {2, 1}}, {"X1", "X2"}},
        {Scheme::concat6, {{0, 1}, {1, 6}, {2, 9}, {4, 9}, {5, 6}, {6, 1}}, {"X1X2X3", "X4X5X6"}},
    };
    for (const auto &expect : expectations) {
        SchemeSetup setup = make_scheme(expect.scheme, Flavor::bit);
        NoiseChannel ch = scheme_channel(setup, Model::model1, 0.5, 0.1);
        auto correctable = correctable_set(setup.code, ch);
        std::map<std::size_t, std::size_t> census;
        for (const auto &op : correctable) ++census[op.weight()];
        std::vector<std::string> missing;
        for (const auto &term : ch.kraus) {
            if (!is_detectable(setup.code, term.op).detectable) missing.push_back(term.op.label());
        }
        std::vector<std::string> parts;
        for (auto [w, c] : census) parts.push_back(std::to_string(w) + ":" + std::to_string(c));
        report.notes.push_back(setup.label() + ": " + std::to_string(correctable.size()) +
                               " correctable, census {" + join(parts, ", ") + "}, non-detectable " +
                               join(missing, " "));
        bool ok = census == expect.census && missing == expect.non_detectable;
        track(report, ok ? 0.0 : 1.0, setup.label() + " correctable census");
    }
    return report;
}

SuiteReport suite_flavor() {
    SuiteReport report = new_report("flavor", kFlavorTolerance);
    const Range grid{0, 1, 5};
    for (Scheme scheme : {Scheme::unencoded, Scheme::bit3, Scheme::dfs2, Scheme::concat6}) {
        SchemeSetup bit = make_scheme(scheme, Flavor::bit);
        SchemeSetup phase = make_scheme(scheme, Flavor::phase);
        for (Model model : {Model::model1, Model::model2}) {
            for (double mu : grid.points()) {
                for (double p : grid.points()) {
                    double a = evaluate(bit, model, mu, p).f_numeric;
                    double b = evaluate(phase, model, mu, p).f_numeric;
                    track(report, std::abs(a - b), bit.label() + "/" + phase.label() + " " + point_label("", mu, p));
                }
            }
        }
    }
    return report;
}

SuiteReport suite_threshold() {
    SuiteReport report = new_report("threshold", 1e-6);
    const double p = 0.1;

    SchemeSetup dfs = make_scheme(Scheme::dfs2, Flavor::bit);
    ThresholdPoint t_dfs = threshold_mu(dfs, Model::model2, p);
    double dev_dfs = t_dfs.mu_star && t_dfs.branch == ThresholdBranch::above ? std::abs(*t_dfs.mu_star - 4.0 / 9.0)
                                                                           : INFINITY;
    track(report, dev_dfs, "dfs2 model 2 threshold vs 4/9");

    SchemeSetup bit = make_scheme(Scheme::bit3, Flavor::bit);
    ThresholdPoint t_bit = threshold_mu(bit, Model::model2, p);
    // (3p^2 - 2p^3) + 3 mu p (1-p)^2 = p solved for mu.
    double exact_bit = (p - (3 * p * p - 2 * p * p * p)) / (3 * p * (1 - p) * (1 - p));
    double dev_bit = t_bit.mu_star && t_bit.branch == ThresholdBranch::below ? std::abs(*t_bit.mu_star - exact_bit)
                                                                           : INFINITY;
    track(report, dev_bit, "bit3 model 2 threshold vs exact root");

    SchemeSetup concat = make_scheme(Scheme::concat6, Flavor::bit);
    ThresholdPoint t_concat = threshold_mu(concat, Model::model2, p);
    track(report, t_concat.branch == ThresholdBranch::everywhere && t_concat.crossings.empty() ? 0.0 : INFINITY,
          "concat6 model 2 effective for every mu");
    double max_linear = 0;
    for (double mu : Range{0, 1, 101}.points()) {
        double failure = evaluate(concat, Model::model2, mu, p).failure_prob;
        max_linear = std::max(max_linear, std::abs(failure - 0.054432 * (1 - mu)));
    }
    track(report, max_linear, "concat6 model 2 failure probability 0.054432 (1 - mu)");

    report.notes.push_back("p = 0.1: dfs2 mu* = " + format_value(t_dfs.mu_star.value_or(NAN)) +
                           ", bit3 mu* = " + format_value(t_bit.mu_star.value_or(NAN)) +
                           ", concat6 branch = " + to_string(t_concat.branch));
    return report;
}

void inject_fault(ClosedFormTable &table, const std::string &name) {
    for (auto [scheme, model] : table.keys()) {
        auto &poly = table.mutable_at(scheme, model);
        if (poly.name == name) {
            // Flip the sign of the highest nonzero coefficient of the leading mu power.
            auto &row = poly.mu_coefficients.back();
            for (auto it = row.rbegin(); it != row.rend(); ++it) {
                if (*it != 0) {
                    *it = -*it;
                    return;
                }
            }
        }
    }
    throw UsageError("no closed-form polynomial named '" + name + "'");
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"closed-form", "normalization", "recovery", "oracle", "correctable", "flavor", "threshold"};
}

std::vector<SuiteReport> run_verify(const VerifyOptions &options) {
    auto names = verify_suite_names();
    if (options.suite && std::find(names.begin(), names.end(), *options.suite) == names.end()) {
        throw UsageError("unknown suite '" + *options.suite + "' (expected one of " + join(names, ", ") + ")");
    }
    ClosedFormTable table = ClosedFormTable::published();
    if (options.inject_fault) {
        inject_fault(table, *options.inject_fault);
    }
    auto wanted = [&](const char *name) { return !options.suite || *options.suite == name; };

    std::vector<SuiteReport> reports;
    if (wanted("closed-form")) reports.push_back(suite_closed_form(table));
    if (wanted("normalization")) reports.push_back(suite_normalization());
    if (wanted("recovery")) reports.push_back(suite_recovery());
    if (wanted("oracle")) reports.push_back(suite_oracle());
    if (wanted("correctable")) reports.push_back(suite_correctable());
    if (wanted("flavor")) reports.push_back(suite_flavor());
    if (wanted("threshold")) reports.push_back(suite_threshold());
    return reports;
}

void write_verify_report(const std::vector<SuiteReport> &reports, std::ostream &out) {
    for (const auto &r : reports) {
        std::ostringstream deviation;
        deviation << std::scientific;
        deviation.precision(3);
        deviation << r.max_deviation;
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": cases=" << r.cases << " max_deviation=" << deviation.str()
            << " tolerance=" << r.tolerance << '\n';
        for (const auto &note : r.notes) {
            out << "    " << note << '\n';
        }
        if (!r.passed) {
            out << "    failing case: " << r.failing_case << '\n';
        }
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Correlated-noise code simulator: fidelities, thresholds and recovery checks", "corrqec"};
    app.require_subcommand(1);

    std::string model_text = "1";
    std::string scheme_text;
    std::string flavor_text = "bit";
    std::optional<double> p_value;
    std::string p_range_text;
    std::optional<double> mu_value;
    std::string mu_range_text;
    std::string format_text = "csv";
    std::string output_path;
    std::string suite;
    std::string fault;

    auto add_common = [&](CLI::App *cmd, bool needs_mu) {
        cmd->add_option("--model", model_text, "Noise model: 1 (Markov chain) or 2 (mixture)")
            ->check(CLI::IsMember({"1", "2"}));
        cmd->add_option("--flavor", flavor_text, "bit or phase")->check(CLI::IsMember({"bit", "phase"}));
        auto *p = cmd->add_option("--p", p_value, "Single error probability");
        auto *pr = cmd->add_option("--p-range", p_range_text, "Error probability grid min:max:steps");
        p->excludes(pr);
        if (needs_mu) {
            auto *m = cmd->add_option("--mu", mu_value, "Single memory degree");
            auto *mr = cmd->add_option("--mu-range", mu_range_text, "Memory degree grid min:max:steps");
            m->excludes(mr);
        }
        cmd->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", output_path, "Output file (default stdout)");
    };

    auto *fidelity = app.add_subcommand("fidelity", "Entanglement fidelity sweep");
    fidelity->add_option("--scheme", scheme_text, "Comma-separated schemes: unencoded,bit3,dfs2,concat6")
        ->required();
    add_common(fidelity, true);

    auto *threshold = app.add_subcommand("threshold", "Effective regions P(mu, p) < p for each p");
    threshold->add_option("--scheme", scheme_text, "Comma-separated schemes")->required();
    add_common(threshold, false);

    auto *verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--suite", suite, "Run a single suite");
    verify->add_option("--inject-fault", fault, "Corrupt a closed-form polynomial (e.g. concat6/model1)");

    auto *correctable = app.add_subcommand("correctable", "List the correctable and non-detectable errors");
    correctable->add_option("--scheme", scheme_text, "Scheme")->required();
    correctable->add_option("--model", model_text, "Noise model: 1 or 2")->check(CLI::IsMember({"1", "2"}));
    correctable->add_option("--flavor", flavor_text, "bit or phase")->check(CLI::IsMember({"bit", "phase"}));
    correctable->add_option("--format", format_text, "text (csv) or json")->check(CLI::IsMember({"csv", "json"}));
    correctable->add_option("--output", output_path, "Output file (default stdout)");

    std::vector<const char *> argv{"corrqec"};
    for (const auto &a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        std::ofstream file;
        std::ostream *sink = &out;
        if (!output_path.empty()) {
            file.open(output_path);
            if (!file) throw UsageError("cannot open output file '" + output_path + "'");
            sink = &file;
        }
        const Model model = parse_model(model_text);
        const Flavor flavor = parse_flavor(flavor_text);
        const OutputFormat format = format_text == "json" ? OutputFormat::json : OutputFormat::csv;

        auto resolve = [](const std::optional<double> &value, const std::string &range, const char *name) {
            if (value) return Range::single(*value);
            if (!range.empty()) return Range::parse(range);
            throw UsageError(std::string("one of --") + name + " or --" + name + "-range is required");
        };

        if (fidelity->parsed()) {
            SweepSpec spec{model, parse_schemes(scheme_text), flavor, resolve(p_value, p_range_text, "p"),
                           resolve(mu_value, mu_range_text, "mu"), format, output_path};
            write_fidelity_table(fidelity_rows(spec), format, *sink);
            return kSuccess;
        }
        if (threshold->parsed()) {
            auto rows = threshold_rows(model, parse_schemes(scheme_text), flavor, resolve(p_value, p_range_text, "p"));
            write_threshold_table(rows, format, *sink);
            return kSuccess;
        }
        if (correctable->parsed()) {
            auto schemes = parse_schemes(scheme_text);
            if (schemes.size() != 1) throw UsageError("correctable takes exactly one scheme");
            write_correctable_report(schemes.front(), model, flavor, format, *sink);
            return kSuccess;
        }
        VerifyOptions options;
        if (!suite.empty()) options.suite = suite;
        if (!fault.empty()) options.inject_fault = fault;
        auto reports = run_verify(options);
        write_verify_report(reports, *sink);
        bool all_passed = std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.passed; });
        return all_passed ? kSuccess : kVerificationFailure;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace corrqec::cli
