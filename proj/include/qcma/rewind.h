#ifndef QCMA_REWIND_H
#define QCMA_REWIND_H

#include <cstddef>
#include <string>

#include "qcma/circuit.h"
#include "qcma/exact.h"
#include "qcma/protocol.h"

namespace qcma {

/// How the S-register width l is chosen for a verifier circuit V.
///
/// `HadamardCount` uses the number of H gates, which is already the exact
/// denominator exponent of V's acceptance probability. `GateCount` uses the
/// total size of V (witness NOT gates included).
enum class LMode { HadamardCount, GateCount };

std::string l_mode_name(LMode mode);
LMode parse_l_mode(const std::string &text);

/// l for an already-hardcoded verifier circuit. Never less than 1.
std::size_t choose_l(const Circuit &v_hardcoded, LMode mode);

struct TransformParams {
    std::size_t l = 1;
    Rational c;
    BigInt k = 1;
    Bits w;
};

enum class ThresholdCheck { Proceed, Reject };

/// Rejects iff k / 2^l < c.
ThresholdCheck step1_check(const BigInt &k, std::size_t l, const Rational &c);

/// Smallest k in [1, 2^l] passing the threshold check, i.e. max(1, ceil(c 2^l)).
BigInt min_passing_k(std::size_t l, const Rational &c);

/// Ancilla pool covering every gadget of the construction for |R| = r_width, |S| = l.
std::size_t required_ancillas(std::size_t r_width, std::size_t l, const BigInt &k);

/// The unitary Q on (B, O, R, S, ANC): H on B and on every S qubit, V on R,
/// then flip O when (B = 0 and V's output is 1) or (B = 1 and S > k).
/// Ancillas are left at |0>.
Circuit build_q(const Circuit &v_hardcoded, const BigInt &k, std::size_t l, const RegisterLayout &layout);

struct TransformedProtocol {
    RegisterLayout layout;
    Circuit v;  // the hardcoded verifier placed on R
    Circuit q_circuit;
    Circuit reflection;  // all-zero phase flip over B, O, R, S
    Protocol protocol{1};
    TransformParams params;
    bool threshold_passed = false;
    std::size_t first_measure_step = 0;
    std::size_t second_measure_step = 0;
    std::size_t first_decision_step = 0;
    std::size_t second_decision_step = 0;

    static constexpr const char *kFirstLabel = "o_first";
    static constexpr const char *kSecondLabel = "o_second";
};

/// Assembles the perfect-completeness protocol for an explicit l:
///   threshold check; Q; measure O (accept on 1); Q^dagger;
///   all-zero reflection on (B, O, R, S); Q; measure O (accept on 1, else reject).
TransformedProtocol build_protocol(const Circuit &v_template, const TransformParams &params);

/// Same, with l derived from the hardcoded verifier via `mode`.
TransformedProtocol build_protocol(const Circuit &v_template, const Bits &w, const BigInt &k, const Rational &c,
                                   LMode mode);

/// Exact results of running a transformed protocol.
struct TransformRun {
    bool threshold_passed = false;
    Dyadic p_first;  // acceptance at the first O measurement
    Dyadic p_second;  // acceptance at the second O measurement
    Dyadic p_acc;
};

TransformRun run_transform(const TransformedProtocol &tp);
/// Acceptance probability of the deferred-measurement compilation.
Dyadic run_transform_deferred(const TransformedProtocol &tp);

}  // namespace qcma

#endif
