#include "qcma/report.h"

namespace qcma {

Json circuit_summary_json(const Circuit &c) {
    Json j;
    j["width"] = c.width();
    j["gate_count"] = c.gate_count();
    j["hadamard_count"] = c.hadamard_count();
    j["witness_bits"] = c.witness_qubits().size();
    return j;
}

Json k_row_json(const KRow &row) {
    Json j;
    j["k"] = row.k.str();
    j["p_measured"] = row.p_measured.str();
    j["p_predicted"] = row.p_predicted.str();
    j["p_acc_measured"] = row.p_acc_measured.str();
    j["p_acc_predicted"] = row.p_acc_predicted.str();
    j["p_equal"] = row.p_equal;
    j["p_acc_equal"] = row.p_acc_equal;
    return j;
}

Json witness_sweep_json(const WitnessSweep &sweep) {
    Json j;
    j["witness"] = bits_str(sweep.w);
    j["probability"] = sweep.probability.str();
    j["l"] = sweep.l;
    j["k_xw"] = sweep.k_xw_num.str();
    Json rows = Json::array();
    for (const KRow &row : sweep.rows) {
        rows.push_back(k_row_json(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json instance_report_json(const InstanceReport &report) {
    Json j;
    j["promise"] = promise_case_name(report.promise);
    j["c"] = report.c.str();
    j["s"] = report.s.str();
    j["soundness_bound"] = report.bound.str();
    j["l_mode"] = l_mode_name(report.l_mode);
    j["m"] = report.m;
    j["best_witness"] = bits_str(report.best.w);
    j["best_probability"] = report.best.probability.str();
    Json probs = Json::array();
    for (const auto &[w, p] : report.witness_probs) {
        probs.push_back({{"witness", bits_str(w)}, {"probability", p.str()}});
    }
    j["witness_probabilities"] = std::move(probs);
    if (report.completeness_pass) {
        j["completeness_pass"] = *report.completeness_pass;
        Json honest = Json::array();
        for (const auto &[w, p] : report.honest_p_acc) {
            honest.push_back({{"witness", bits_str(w)}, {"p_acc", p.str()}});
        }
        j["honest_runs"] = std::move(honest);
    }
    if (report.soundness_pass) {
        j["soundness_pass"] = *report.soundness_pass;
    }
    if (report.max_p_acc) {
        j["max_p_acc"] = report.max_p_acc->str();
    }
    j["formulas_pass"] = report.formulas_pass;
    Json sweeps = Json::array();
    for (const auto &s : report.sweeps) {
        sweeps.push_back(witness_sweep_json(s));
    }
    j["sweeps"] = std::move(sweeps);
    j["passed"] = report.passed();
    return j;
}

}  // namespace qcma
