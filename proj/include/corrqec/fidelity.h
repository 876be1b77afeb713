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

#ifndef CORRQEC_FIDELITY_H
#define CORRQEC_FIDELITY_H

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corrqec/channels.h"
#include "corrqec/codes.h"
#include "corrqec/recovery.h"

namespace corrqec {

enum class Scheme { unencoded, bit3, dfs2, concat6 };

/// Base scheme name as used on the command line: unencoded, bit3, dfs2, concat6.
std::string to_string(Scheme scheme);
Scheme parse_scheme(const std::string &text);

/// Flavored label: bit3/phase3, dfs2/dfs2-phase, concat6/concat6-phase, unencoded.
std::string scheme_label(Scheme scheme, Flavor flavor);

/// A code together with its correctable set and recovery, derived once and reused
/// for every (mu, p) point.
struct SchemeSetup {
    Scheme scheme = Scheme::unencoded;
    Flavor flavor = Flavor::bit;
    QuantumCode code;
    std::vector<PauliString> correctable;
    RecoverySet recovery;

    std::string label() const { return scheme_label(scheme, flavor); }
};

/// The correctable set is derived against every flip pattern of the flavor, so the
/// recovery does not depend on channel parameters.
SchemeSetup make_scheme(Scheme scheme, Flavor flavor);

/// The channel acting on the scheme's physical qubits, unmerged by default.
NoiseChannel scheme_channel(const SchemeSetup &setup, Model model, double mu, double p,
                            KrausForm form = KrausForm::unmerged);

/// (1/4) sum_{k,l} |tr([R_l A_k]_C)|^2 including the complement projector terms.
double entanglement_fidelity_corrected(const QuantumCode &code, const NoiseChannel &channel, const RecoverySet &rs);

/// (1/N^2) sum_k |tr A_k|^2 with N = 2^n.
double entanglement_fidelity_unencoded(const NoiseChannel &channel);

/// Same sum as entanglement_fidelity_corrected, assembled from dense 2^n x 2^n
/// matrices. Independent check of the sparse path; n <= 6.
double dense_oracle_fidelity(const QuantumCode &code, const NoiseChannel &channel, const RecoverySet &rs);

/// Bivariate polynomial sum_{i,j} c[i][j] mu^i p^j.
struct FidelityPolynomial {
    std::string name;
    std::vector<std::array<double, 7>> mu_coefficients;

    double operator()(double mu, double p) const;
};

/// Published closed-form fidelities keyed by (scheme, model).
class ClosedFormTable {
   public:
    static const ClosedFormTable &published();

    bool contains(Scheme scheme, Model model) const;
    const FidelityPolynomial &at(Scheme scheme, Model model) const;
    FidelityPolynomial &mutable_at(Scheme scheme, Model model);
    std::vector<std::pair<Scheme, Model>> keys() const;

   private:
    std::map<std::pair<Scheme, Model>, FidelityPolynomial> table_;
};

bool has_closed_form(Scheme scheme, Model model);

/// Throws std::invalid_argument for pairs without a published polynomial.
double closed_form(Scheme scheme, Model model, double mu, double p,
                   const ClosedFormTable &table = ClosedFormTable::published());

struct FidelityResult {
    double mu = 0;
    double p = 0;
    std::string scheme;
    Model model = Model::model1;
    double f_numeric = 0;
    std::optional<double> f_closed_form;
    double failure_prob = 0;
};

FidelityResult evaluate(const SchemeSetup &setup, Model model, double mu, double p,
                        const ClosedFormTable &table = ClosedFormTable::published());

struct Interval {
    double lo = 0;
    double hi = 0;
};

enum class ThresholdBranch { everywhere, nowhere, above, below, mixed };

std::string to_string(ThresholdBranch branch);

struct ThresholdPoint {
    double p = 0;
    /// First crossing of P(mu, p) = p in [0, 1]; empty when there is none.
    std::optional<double> mu_star;
    std::vector<double> crossings;
    /// Maximal subintervals of [0, 1] on which P(mu, p) < p.
    std::vector<Interval> effective;
    ThresholdBranch branch = ThresholdBranch::nowhere;
    bool used_closed_form = false;
};

inline constexpr std::size_t kThresholdGridPoints = 1024;
inline constexpr double kBisectionTolerance = 1e-10;

/// Roots and sign regions of g on [0, 1] for g(mu) = P(mu) - p.
ThresholdPoint find_effective_regions(const std::function<double(double)> &failure_minus_p);

/// Uses the closed form when one is published for (scheme, model), else the numeric fidelity.
ThresholdPoint threshold_mu(const SchemeSetup &setup, Model model, double p);

}  // namespace corrqec

#endif  // CORRQEC_FIDELITY_H
