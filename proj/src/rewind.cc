#include "qcma/rewind.h"

#include <algorithm>
#include <stdexcept>

#include "qcma/gadgets.h"

namespace qcma {

std::string l_mode_name(LMode mode) { return mode == LMode::HadamardCount ? "hadamard" : "gatecount"; }

LMode parse_l_mode(const std::string &text) {
    if (text == "hadamard") {
        return LMode::HadamardCount;
    }
    if (text == "gatecount") {
        return LMode::GateCount;
    }
    throw std::invalid_argument("unknown l-mode '" + text + "' (expected hadamard or gatecount)");
}

std::size_t choose_l(const Circuit &v_hardcoded, LMode mode) {
    std::size_t l = mode == LMode::HadamardCount ? v_hardcoded.hadamard_count() : v_hardcoded.gate_count();
    return std::max<std::size_t>(l, 1);
}

ThresholdCheck step1_check(const BigInt &k, std::size_t l, const Rational &c) {
    if (k < 1 || k > pow2(l)) {
        throw std::invalid_argument("k=" + k.str() + " outside [1, 2^" + std::to_string(l) + "]");
    }
    return dyadic_cmp(Dyadic(k, l), c) < 0 ? ThresholdCheck::Reject : ThresholdCheck::Proceed;
}

BigInt min_passing_k(std::size_t l, const Rational &c) {
    BigInt k = (c * Rational(pow2(l), 1)).ceil();
    return std::max<BigInt>(k, 1);
}

std::size_t required_ancillas(std::size_t r_width, std::size_t l, const BigInt &k) {
    std::size_t reflection = phase_flip_ancillas_needed(2 + r_width + l);
    std::size_t comparator = comparator_ancillas_needed(l, k, 1);
    std::size_t output_flip = mcx_ancillas_needed(2);
    return std::max({reflection, comparator, output_flip});
}

Circuit build_q(const Circuit &v_hardcoded, const BigInt &k, std::size_t l, const RegisterLayout &layout) {
    if (v_hardcoded.width() != layout.r.size) {
        throw std::invalid_argument("verifier width " + std::to_string(v_hardcoded.width()) +
                                    " does not match R register width " + std::to_string(layout.r.size));
    }
    if (layout.s.size != l) {
        throw std::invalid_argument("S register width does not match l");
    }
    std::size_t needed = required_ancillas(layout.r.size, l, k);
    if (layout.anc.size < needed) {
        throw std::invalid_argument("ancilla pool of " + std::to_string(layout.anc.size) + " qubits, construction needs " +
                                    std::to_string(needed));
    }
    std::vector<std::size_t> pool = layout.anc.qubits();
    std::vector<std::size_t> s_qubits = layout.s.qubits();

    Circuit q(layout.width());
    q.append(Gate::h(layout.b[0]));
    for (std::size_t sq : s_qubits) {
        q.append(Gate::h(sq));
    }
    q.append_relocated(v_hardcoded, layout.r.begin);

    // B = 0 and the original verifier accepts.
    Control original[] = {Control::neg(layout.b[0]), Control::pos(layout.r[v_hardcoded.output()])};
    q.append(compile_mcx(original, layout.o[0], pool));

    // B = 1 and S > k, with B folded into each comparator term.
    std::size_t b_control[] = {layout.b[0]};
    q.append(compile_comparator_gt_const(s_qubits, k, layout.o[0], pool, b_control));

    q.set_output(layout.o[0]);
    q.set_ancillas(pool);
    return q;
}

TransformedProtocol build_protocol(const Circuit &v_template, const TransformParams &params) {
    TransformedProtocol tp;
    tp.params = params;
    tp.v = hardcode_witness(v_template, params.w);
    std::size_t l = params.l;
    if (l == 0) {
        throw std::invalid_argument("l must be positive");
    }
    tp.threshold_passed = step1_check(params.k, l, params.c) == ThresholdCheck::Proceed;

    tp.layout = RegisterLayout::make(tp.v.width(), l, required_ancillas(tp.v.width(), l, params.k));
    tp.q_circuit = build_q(tp.v, params.k, l, tp.layout);

    std::vector<std::size_t> main = tp.layout.main_qubits();
    std::vector<std::size_t> pool = tp.layout.anc.qubits();
    tp.reflection = Circuit(tp.layout.width());
    tp.reflection.append(compile_phase_flip_all_zero(main, pool[0], std::span(pool).subspan(1)));

    const std::size_t o = tp.layout.o[0];
    auto first = BoolExpr::var(TransformedProtocol::kFirstLabel);
    auto second = BoolExpr::var(TransformedProtocol::kSecondLabel);
    Protocol p(tp.layout.width());
    p.decide(BoolExpr::constant(false), BoolExpr::constant(!tp.threshold_passed));
    p.unitary(tp.q_circuit);
    tp.first_measure_step = p.steps().size();
    p.measure(o, TransformedProtocol::kFirstLabel);
    tp.first_decision_step = p.steps().size();
    p.decide(first, BoolExpr::constant(false));
    p.unitary(inverse(tp.q_circuit));
    p.unitary(tp.reflection);
    p.unitary(tp.q_circuit);
    tp.second_measure_step = p.steps().size();
    p.measure(o, TransformedProtocol::kSecondLabel);
    tp.second_decision_step = p.steps().size();
    p.decide(second, !second);
    tp.protocol = std::move(p);
    return tp;
}

TransformedProtocol build_protocol(const Circuit &v_template, const Bits &w, const BigInt &k, const Rational &c,
                                   LMode mode) {
    TransformParams params;
    params.l = choose_l(hardcode_witness(v_template, w), mode);
    params.c = c;
    params.k = k;
    params.w = w;
    return build_protocol(v_template, params);
}

TransformRun run_transform(const TransformedProtocol &tp) {
    ProtocolOutcome outcome = run_protocol(tp.protocol);
    TransformRun run;
    run.threshold_passed = tp.threshold_passed;
    run.p_first = outcome.accept_by_step[tp.first_decision_step];
    run.p_second = outcome.accept_by_step[tp.second_decision_step];
    run.p_acc = outcome.accept;
    return run;
}

Dyadic run_transform_deferred(const TransformedProtocol &tp) {
    DeferredCircuit d = defer_measurements(tp.protocol);
    StateVector s = init_state(d.circuit.width());
    s.apply(d.circuit);
    return s.measure_prob(d.verdict_qubit);
}

}  // namespace qcma
