#ifndef QCMA_ANALYSIS_H
#define QCMA_ANALYSIS_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcma/circuit.h"
#include "qcma/exact.h"
#include "qcma/rewind.h"

namespace qcma {

/// P(output qubit = 1) for the template with witness w hardcoded.
Dyadic exact_acceptance_prob(const Circuit &v_template, const Bits &w);

/// First-measurement acceptance predicted in closed form:
/// 1/2 - (k - k_xw) / 2^(l+1).
Dyadic predicted_p(const BigInt &k, const BigInt &k_xw_num, std::size_t l);

/// f(p) = p + 4 p (1 - p)^2.
Rational p_acc_formula(const Rational &p);
Dyadic p_acc_formula(const Dyadic &p);

/// (1/2)(1 - (c - s))(1 + (1 + c - s)^2). Requires 0 <= s < c <= 1.
Rational soundness_bound(const Rational &c, const Rational &s);

/// Checks that f is nondecreasing along i / 2^grid_exp for i = 0..2^(grid_exp-1)
/// (the grid over [0, 1/2]) and that f(1/2) = 1.
bool f_monotone_check(std::size_t grid_exp);

inline constexpr std::size_t kMaxBruteForceWitnessBits = 16;

struct BestWitness {
    Bits w;
    Dyadic probability;
};

/// Exhaustive search over all 2^m witnesses. Ties go to the
/// lexicographically smallest witness.
BestWitness brute_force_best_witness(const Circuit &v_template, std::size_t m);

/// One row of a k sweep for a fixed witness.
struct KRow {
    BigInt k;
    Dyadic p_measured;
    Dyadic p_predicted;
    Dyadic p_acc_measured;
    Dyadic p_acc_predicted;
    bool p_equal = false;
    bool p_acc_equal = false;
};

struct WitnessSweep {
    Bits w;
    Dyadic probability;  // k_xw / 2^l
    std::size_t l = 0;
    BigInt k_xw_num;
    std::vector<KRow> rows;
};

/// Runs the transformed protocol for every k in [min_passing_k, 2^l].
WitnessSweep sweep_k(const Circuit &v_template, const Bits &w, const Rational &c, LMode mode);

enum class PromiseCase { Yes, No, Violating };
std::string promise_case_name(PromiseCase pc);

struct InstanceReport {
    PromiseCase promise = PromiseCase::Violating;
    Rational c;
    Rational s;
    Rational bound;  // soundness_bound(c, s)
    LMode l_mode = LMode::HadamardCount;
    std::size_t m = 0;
    BestWitness best;
    /// Acceptance probability of every witness, in enumeration order.
    std::vector<std::pair<Bits, Dyadic>> witness_probs;
    std::vector<WitnessSweep> sweeps;
    /// Honest runs: acceptance at k = k_xw for each witness meeting c.
    std::vector<std::pair<Bits, Dyadic>> honest_p_acc;
    std::optional<bool> completeness_pass;
    std::optional<bool> soundness_pass;
    bool formulas_pass = true;
    std::optional<Dyadic> max_p_acc;

    /// True iff every applicable certificate passed. Promise-violating
    /// instances carry no verdict and report false.
    bool passed() const;
};

/// Completeness and soundness certificates for one verifier template.
InstanceReport verify_theorem(const Circuit &v_template, std::size_t m, const Rational &c, const Rational &s,
                              LMode mode);

}  // namespace qcma

#endif
