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

#ifndef CORRQEC_CLI_H
#define CORRQEC_CLI_H

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "corrqec/channels.h"
#include "corrqec/fidelity.h"

namespace corrqec::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Thrown for malformed command-line input; maps to kUsageError.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inclusive grid `min:max:steps` inside [0, 1].
struct Range {
    double min = 0;
    double max = 0;
    std::size_t steps = 1;

    static Range parse(const std::string &text);
    static Range single(double value);
    std::vector<double> points() const;
};

enum class OutputFormat { csv, json };

struct SweepSpec {
    Model model = Model::model1;
    std::vector<Scheme> schemes;
    Flavor flavor = Flavor::bit;
    Range p_range;
    Range mu_range;
    OutputFormat format = OutputFormat::csv;
    std::string output_path;
};

inline constexpr const char *kFidelityCsvHeader =
    "model,scheme,mu,p,fidelity_numeric,fidelity_closed_form,abs_diff,failure_prob";

/// Fixed decimal text with absolute resolution 1e-12, trailing zeros trimmed.
std::string format_value(double value);

/// Rows ordered by scheme (as listed), then mu, then p. The scheme field holds the
/// base scheme name so bit and phase flavors produce identical tables.
std::vector<FidelityResult> fidelity_rows(const SweepSpec &spec);
void write_fidelity_table(const std::vector<FidelityResult> &rows, OutputFormat format, std::ostream &out);

struct ThresholdRow {
    Model model = Model::model1;
    Scheme scheme = Scheme::unencoded;
    ThresholdPoint point;
};

std::vector<ThresholdRow> threshold_rows(Model model, const std::vector<Scheme> &schemes, Flavor flavor,
                                         const Range &p_range);
void write_threshold_table(const std::vector<ThresholdRow> &rows, OutputFormat format, std::ostream &out);

void write_correctable_report(Scheme scheme, Model model, Flavor flavor, OutputFormat format, std::ostream &out);

struct VerifyOptions {
    std::optional<std::string> suite;
    /// Name of a closed-form polynomial whose coefficients get a sign error, e.g. "concat6/model1".
    std::optional<std::string> inject_fault;
};

struct SuiteReport {
    std::string name;
    std::size_t cases = 0;
    double max_deviation = 0;
    double tolerance = 0;
    bool passed = true;
    std::string failing_case;
    std::vector<std::string> notes;
};

std::vector<std::string> verify_suite_names();
std::vector<SuiteReport> run_verify(const VerifyOptions &options);
void write_verify_report(const std::vector<SuiteReport> &reports, std::ostream &out);

/// Entry point shared by the executable and the tests. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace corrqec::cli

#endif  // CORRQEC_CLI_H
