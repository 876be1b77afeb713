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

#include "corrqec/fidelity.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corrqec {

namespace {

// Values of P - p within this band of zero count as exact zeros when scanning for roots.
constexpr double kZeroBand = 1e-14;

void require_channel_fits(const QuantumCode &code, const NoiseChannel &channel, const RecoverySet &rs) {
    if (channel.num_qubits() != code.n || rs.n != code.n) {
        throw std::invalid_argument("fidelity: code, channel and recovery qubit counts differ");
    }
    if (!rs.logical_zero.approx_equal(code.logical_zero, kSubspaceTolerance) ||
        !rs.logical_one.approx_equal(code.logical_one, kSubspaceTolerance)) {
        throw std::invalid_argument("fidelity: recovery was built for a different code");
    }
}

QuantumCode code_for(Scheme scheme, Flavor flavor) {
    switch (scheme) {
        case Scheme::unencoded:
            return trivial_code();
        case Scheme::bit3:
            return flavor == Flavor::bit ? bitflip3() : phaseflip3();
        case Scheme::dfs2:
            return dfs2(flavor);
        case Scheme::concat6:
            return concat6(flavor);
    }
    throw std::invalid_argument("unknown scheme");
}

double poly_in_p(const std::array<double, 7> &c, double p) {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * p + *it;
    }
    return acc;
}

}  // namespace

std::string to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::unencoded:
            return "unencoded";
        case Scheme::bit3:
            return "bit3";
        case Scheme::dfs2:
            return "dfs2";
        case Scheme::concat6:
            return "concat6";
    }
    return "?";
}

Scheme parse_scheme(const std::string &text) {
    if (text == "unencoded") return Scheme::unencoded;
    if (text == "bit3" || text == "phase3") return Scheme::bit3;
    if (text == "dfs2" || text == "dfs2-phase") return Scheme::dfs2;
    if (text == "concat6" || text == "concat6-phase") return Scheme::concat6;
    throw std::invalid_argument("unknown scheme '" + text + "' (expected unencoded, bit3, dfs2 or concat6)");
}

std::string scheme_label(Scheme scheme, Flavor flavor) {
    if (flavor == Flavor::bit || scheme == Scheme::unencoded) {
        return to_string(scheme);
    }
    switch (scheme) {
        case Scheme::bit3:
            return "phase3";
        case Scheme::dfs2:
            return "dfs2-phase";
        default:
            return "concat6-phase";
    }
}

SchemeSetup make_scheme(Scheme scheme, Flavor flavor) {
    SchemeSetup setup;
    setup.scheme = scheme;
    setup.flavor = flavor;
    setup.code = code_for(scheme, flavor);
    NoiseChannel support = model1_channel({0.5, 0.0, setup.code.n, flavor, Model::model1});
    setup.correctable = correctable_set(setup.code, support);
    setup.recovery = build_recovery(setup.code, setup.correctable);
    return setup;
}

NoiseChannel scheme_channel(const SchemeSetup &setup, Model model, double mu, double p, KrausForm form) {
    return make_channel({p, mu, setup.code.n, setup.flavor, model}, form);
}

double entanglement_fidelity_corrected(const QuantumCode &code, const NoiseChannel &channel, const RecoverySet &rs) {
    require_channel_fits(code, channel, rs);
    double total = 0;
    for (const auto &term : channel.kraus) {
        SparseState image_zero = apply_to_state(term.op, code.logical_zero);
        SparseState image_one = apply_to_state(term.op, code.logical_one);
        // tr([R A]_C) = <0_L|R A|0_L> + <1_L|R A|1_L> = <v^0|A|0_L> + <v^1|A|1_L>.
        for (const auto &r : rs.recovery_ops) {
            Complex trace = r.syndrome_zero.inner(image_zero) + r.syndrome_one.inner(image_one);
            total += term.weight * std::norm(trace);
        }
        if (rs.has_complement()) {
            Complex trace{};
            for (const auto &c : rs.complement) {
                trace += code.logical_zero.inner(c) * c.inner(image_zero);
                trace += code.logical_one.inner(c) * c.inner(image_one);
            }
            if (std::abs(trace) > kSubspaceTolerance) {
                throw std::logic_error("complement projector has a component inside the code space");
            }
            total += term.weight * std::norm(trace);
        }
    }
    return total / 4.0;
}

double entanglement_fidelity_unencoded(const NoiseChannel &channel) {
    // Every non-identity Pauli is traceless and tr(phase * I) has modulus 2^n, so
    // |tr A_k|^2 / N^2 reduces to the weight of identity terms.
    double total = 0;
    for (const auto &term : channel.kraus) {
        if (term.op.is_identity()) {
            total += term.weight;
        }
    }
    return total;
}

double FidelityPolynomial::operator()(double mu, double p) const {
    double acc = 0;
    for (auto it = mu_coefficients.rbegin(); it != mu_coefficients.rend(); ++it) {
        acc = acc * mu + poly_in_p(*it, p);
    }
    return acc;
}

const ClosedFormTable &ClosedFormTable::published() {
    static const ClosedFormTable table = [] {
        ClosedFormTable t;
        // Rows are coefficients of mu^0, mu^1, ...; columns are p^0 .. p^6.
        t.table_[{Scheme::bit3, Model::model1}] = {
            "bit3/model1",
            {{1, 0, -3, 2, 0, 0, 0}, {0, -2, 6, -4, 0, 0, 0}, {0, 1, -3, 2, 0, 0, 0}}};
        t.table_[{Scheme::bit3, Model::model2}] = {"bit3/model2", {{1, 0, -3, 2, 0, 0, 0}, {0, -3, 6, -3, 0, 0, 0}}};
        t.table_[{Scheme::dfs2, Model::model1}] = {"dfs2/model1", {{1, -2, 2, 0, 0, 0, 0}, {0, 2, -2, 0, 0, 0, 0}}};
        t.table_[{Scheme::dfs2, Model::model2}] = {"dfs2/model2", {{1, -2, 2, 0, 0, 0, 0}, {0, 2, -2, 0, 0, 0, 0}}};
        t.table_[{Scheme::concat6, Model::model1}] = {"concat6/model1",
                                                      {{1, 0, -6, 4, 18, -24, 8},
                                                       {0, -4, 12, 24, -112, 120, -40},
                                                       {0, 2, 10, -104, 252, -240, 80},
                                                       {0, 2, -26, 128, -264, 240, -80},
                                                       {0, 0, 10, -60, 130, -120, 40},
                                                       {0, 0, 0, 8, -24, 24, -8}}};
        t.table_[{Scheme::concat6, Model::model2}] = {
            "concat6/model2", {{1, 0, -6, 4, 18, -24, 8}, {0, 0, 6, -4, -18, 24, -8}}};
        return t;
    }();
    return table;
}

bool ClosedFormTable::contains(Scheme scheme, Model model) const { return table_.contains({scheme, model}); }

const FidelityPolynomial &ClosedFormTable::at(Scheme scheme, Model model) const {
    auto it = table_.find({scheme, model});
    if (it == table_.end()) {
        throw std::invalid_argument("no closed-form fidelity for scheme " + to_string(scheme) + " under model " +
                                    to_string(model));
    }
    return it->second;
}

FidelityPolynomial &ClosedFormTable::mutable_at(Scheme scheme, Model model) {
    return const_cast<FidelityPolynomial &>(static_cast<const ClosedFormTable *>(this)->at(scheme, model));
}

std::vector<std::pair<Scheme, Model>> ClosedFormTable::keys() const {
    std::vector<std::pair<Scheme, Model>> out;
    for (const auto &[key, poly] : table_) {
        out.push_back(key);
    }
    return out;
}

bool has_closed_form(Scheme scheme, Model model) { return ClosedFormTable::published().contains(scheme, model); }

double closed_form(Scheme scheme, Model model, double mu, double p, const ClosedFormTable &table) {
    return table.at(scheme, model)(mu, p);
}

FidelityResult evaluate(const SchemeSetup &setup, Model model, double mu, double p, const ClosedFormTable &table) {
    NoiseChannel channel = scheme_channel(setup, model, mu, p);
    FidelityResult result;
    result.mu = mu;
    result.p = p;
    result.scheme = setup.label();
    result.model = model;
    result.f_numeric = setup.scheme == Scheme::unencoded
                           ? entanglement_fidelity_unencoded(channel)
                           : entanglement_fidelity_corrected(setup.code, channel, setup.recovery);
    if (table.contains(setup.scheme, model)) {
        result.f_closed_form = closed_form(setup.scheme, model, mu, p, table);
    }
    result.failure_prob = 1.0 - result.f_numeric;
    return result;
}

std::string to_string(ThresholdBranch branch) {
    switch (branch) {
        case ThresholdBranch::everywhere:
            return "everywhere";
        case ThresholdBranch::nowhere:
            return "nowhere";
        case ThresholdBranch::above:
            return "above";
        case ThresholdBranch::below:
            return "below";
        case ThresholdBranch::mixed:
            return "mixed";
    }
    return "?";
}

ThresholdPoint find_effective_regions(const std::function<double(double)> &g) {
    const std::size_t count = kThresholdGridPoints;
    std::vector<double> mus(count);
    std::vector<double> values(count);
    for (std::size_t j = 0; j < count; ++j) {
        mus[j] = static_cast<double>(j) / static_cast<double>(count - 1);
        values[j] = g(mus[j]);
    }
    auto sign = [](double v) { return v > kZeroBand ? 1 : (v < -kZeroBand ? -1 : 0); };

    ThresholdPoint out;
    for (std::size_t j = 0; j < count; ++j) {
        int s = sign(values[j]);
        if (s == 0) {
            bool left_zero = j > 0 && sign(values[j - 1]) == 0;
            bool right_zero = j + 1 < count && sign(values[j + 1]) == 0;
            if (!left_zero && !right_zero) {
                out.crossings.push_back(mus[j]);
            }
            continue;
        }
        if (j + 1 < count && sign(values[j + 1]) == -s) {
            double lo = mus[j];
            double hi = mus[j + 1];
            for (int iter = 0; iter < 200 && hi - lo > kBisectionTolerance * 1e-2; ++iter) {
                double mid = 0.5 * (lo + hi);
                double v = g(mid);
                if (v == 0) {
                    lo = hi = mid;
                    break;
                }
                ((v > 0) == (s > 0) ? lo : hi) = mid;
            }
            out.crossings.push_back(0.5 * (lo + hi));
        }
    }

    std::vector<double> breaks{0.0};
    for (double root : out.crossings) {
        if (root - breaks.back() > 1e-12) breaks.push_back(root);
    }
    if (1.0 - breaks.back() > 1e-12) breaks.push_back(1.0);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double a = breaks[i];
        double b = breaks[i + 1];
        if (g(0.5 * (a + b)) >= -kZeroBand) continue;
        if (!out.effective.empty() && out.effective.back().hi == a) {
            out.effective.back().hi = b;
        } else {
            out.effective.push_back({a, b});
        }
    }

    if (!out.crossings.empty()) {
        out.mu_star = out.crossings.front();
    }
    if (out.effective.empty()) {
        out.branch = ThresholdBranch::nowhere;
    } else if (out.effective.size() == 1) {
        const auto &only = out.effective.front();
        bool from_zero = only.lo == 0.0;
        bool to_one = only.hi == 1.0;
        out.branch = from_zero && to_one ? ThresholdBranch::everywhere
                     : from_zero         ? ThresholdBranch::below
                     : to_one            ? ThresholdBranch::above
                                         : ThresholdBranch::mixed;
    } else {
        out.branch = ThresholdBranch::mixed;
    }
    return out;
}

ThresholdPoint threshold_mu(const SchemeSetup &setup, Model model, double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("threshold_mu needs 0 < p < 1");
    }
    const bool use_closed_form = has_closed_form(setup.scheme, model);
    ThresholdPoint out = find_effective_regions([&](double mu) {
        double fidelity = use_closed_form ? closed_form(setup.scheme, model, mu, p)
                                          : evaluate(setup, model, mu, p).f_numeric;
        return (1.0 - fidelity) - p;
    });
    out.p = p;
    out.used_closed_form = use_closed_form;
    return out;
}

}  // namespace corrqec
