#include "qcma/analysis.h"

#include <stdexcept>

#include "qcma/state_vector.h"

namespace qcma {

Dyadic exact_acceptance_prob(const Circuit &v_template, const Bits &w) {
    Circuit v = hardcode_witness(v_template, w);
    return simulate(v).measure_prob(v.output());
}

Dyadic predicted_p(const BigInt &k, const BigInt &k_xw_num, std::size_t l) {
    BigInt full = pow2(l);
    if (k < 0 || k > full || k_xw_num < 0 || k_xw_num > full) {
        throw std::invalid_argument("predicted_p: k and k_xw must lie in [0, 2^l]");
    }
    return Dyadic(1, 1) - Dyadic(k - k_xw_num, l + 1);
}

Rational p_acc_formula(const Rational &p) {
    Rational q = Rational(1) - p;
    return p + Rational(4) * p * q * q;
}

Dyadic p_acc_formula(const Dyadic &p) {
    Dyadic q = Dyadic(1) - p;
    return p + Dyadic(4) * p * q * q;
}

Rational soundness_bound(const Rational &c, const Rational &s) {
    if (!(Rational(0) <= s && s < c && c <= Rational(1))) {
        throw std::invalid_argument("soundness_bound requires 0 <= s < c <= 1 (got c=" + c.str() + ", s=" + s.str() +
                                    ")");
    }
    Rational gap = c - s;
    Rational one_plus = Rational(1) + gap;
    Rational bound = Rational(1, 2) * (Rational(1) - gap) * (Rational(1) + one_plus * one_plus);
    if (!(bound < Rational(1))) {
        throw std::logic_error("soundness bound " + bound.str() + " is not below 1");
    }
    return bound;
}

bool f_monotone_check(std::size_t grid_exp) {
    if (grid_exp < 1) {
        throw std::invalid_argument("grid denominator must be at least 2");
    }
    BigInt last = pow2(grid_exp - 1);  // index of 1/2
    Dyadic prev = p_acc_formula(Dyadic(0));
    for (BigInt i = 1; i <= last; ++i) {
        Dyadic cur = p_acc_formula(Dyadic(i, grid_exp));
        if (cur < prev) {
            return false;
        }
        prev = cur;
    }
    return prev == Dyadic(1);
}

namespace {

Bits witness_from_index(std::uint64_t index, std::size_t m) {
    Bits w(m);
    for (std::size_t i = 0; i < m; i++) {
        w[i] = (index >> (m - 1 - i)) & 1;
    }
    return w;
}

void check_witness_arity(const Circuit &v_template, std::size_t m) {
    if (m > kMaxBruteForceWitnessBits) {
        throw std::invalid_argument("witness enumeration limited to m <= " +
                                    std::to_string(kMaxBruteForceWitnessBits) + " bits (got m=" +
                                    std::to_string(m) + ")");
    }
    if (m != v_template.witness_qubits().size()) {
        throw std::invalid_argument("m=" + std::to_string(m) + " but circuit declares " +
                                    std::to_string(v_template.witness_qubits().size()) + " witness qubits");
    }
}

}  // namespace

BestWitness brute_force_best_witness(const Circuit &v_template, std::size_t m) {
    check_witness_arity(v_template, m);
    BestWitness best{witness_from_index(0, m), exact_acceptance_prob(v_template, witness_from_index(0, m))};
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); i++) {
        Bits w = witness_from_index(i, m);
        Dyadic p = exact_acceptance_prob(v_template, w);
        if (p > best.probability) {
            best = {std::move(w), p};
        }
    }
    return best;
}

WitnessSweep sweep_k(const Circuit &v_template, const Bits &w, const Rational &c, LMode mode) {
    WitnessSweep sweep;
    sweep.w = w;
    Circuit v = hardcode_witness(v_template, w);
    sweep.l = choose_l(v, mode);
    sweep.probability = simulate(v).measure_prob(v.output());
    sweep.k_xw_num = sweep.probability.numerator_over(sweep.l);
    BigInt top = pow2(sweep.l);
    for (BigInt k = min_passing_k(sweep.l, c); k <= top; ++k) {
        TransformParams params{sweep.l, c, k, w};
        TransformRun run = run_transform(build_protocol(v_template, params));
        KRow row;
        row.k = k;
        row.p_measured = run.p_first;
        row.p_predicted = predicted_p(k, sweep.k_xw_num, sweep.l);
        row.p_acc_measured = run.p_acc;
        row.p_acc_predicted = p_acc_formula(row.p_predicted);
        row.p_equal = row.p_measured == row.p_predicted;
        row.p_acc_equal = row.p_acc_measured == row.p_acc_predicted;
        sweep.rows.push_back(std::move(row));
    }
    return sweep;
}

std::string promise_case_name(PromiseCase pc) {
    switch (pc) {
        case PromiseCase::Yes:
            return "yes";
        case PromiseCase::No:
            return "no";
        case PromiseCase::Violating:
            return "promise-violating";
    }
    return "?";
}

bool InstanceReport::passed() const {
    if (promise == PromiseCase::Violating) {
        return false;
    }
    return completeness_pass.value_or(true) && soundness_pass.value_or(true) && formulas_pass;
}

InstanceReport verify_theorem(const Circuit &v_template, std::size_t m, const Rational &c, const Rational &s,
                              LMode mode) {
    check_witness_arity(v_template, m);
    InstanceReport report;
    report.c = c;
    report.s = s;
    report.bound = soundness_bound(c, s);
    report.l_mode = mode;
    report.m = m;

    for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); i++) {
        Bits w = witness_from_index(i, m);
        report.witness_probs.emplace_back(w, exact_acceptance_prob(v_template, w));
    }
    report.best = {report.witness_probs[0].first, report.witness_probs[0].second};
    for (const auto &[w, p] : report.witness_probs) {
        if (p > report.best.probability) {
            report.best = {w, p};
        }
    }

    auto record_formulas = [&](const WitnessSweep &sweep) {
        for (const KRow &row : sweep.rows) {
            report.formulas_pass = report.formulas_pass && row.p_equal && row.p_acc_equal;
        }
    };

    if (dyadic_cmp(report.best.probability, c) >= 0) {
        report.promise = PromiseCase::Yes;
        bool complete = true;
        for (const auto &[w, p] : report.witness_probs) {
            if (dyadic_cmp(p, c) < 0) {
                continue;
            }
            WitnessSweep sweep = sweep_k(v_template, w, c, mode);
            bool found = false;
            for (const KRow &row : sweep.rows) {
                if (row.k == sweep.k_xw_num) {
                    report.honest_p_acc.emplace_back(w, row.p_acc_measured);
                    complete = complete && row.p_acc_measured == Dyadic(1);
                    found = true;
                }
            }
            complete = complete && found;
            record_formulas(sweep);
            report.sweeps.push_back(std::move(sweep));
        }
        report.completeness_pass = complete;
    } else if (dyadic_cmp(report.best.probability, s) <= 0) {
        report.promise = PromiseCase::No;
        bool sound = true;
        Dyadic max_acc;
        for (const auto &[w, p] : report.witness_probs) {
            WitnessSweep sweep = sweep_k(v_template, w, c, mode);
            for (const KRow &row : sweep.rows) {
                sound = sound && dyadic_cmp(row.p_acc_measured, report.bound) <= 0;
                max_acc = std::max(max_acc, row.p_acc_measured);
            }
            record_formulas(sweep);
            report.sweeps.push_back(std::move(sweep));
        }
        report.soundness_pass = sound;
        report.max_p_acc = max_acc;
    } else {
        report.promise = PromiseCase::Violating;
    }
    return report;
}

}  // namespace qcma
