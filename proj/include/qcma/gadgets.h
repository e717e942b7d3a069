#ifndef QCMA_GADGETS_H
#define QCMA_GADGETS_H

#include <cstddef>
#include <span>
#include <vector>

#include "qcma/circuit.h"
#include "qcma/exact.h"

namespace qcma {

/// A control qubit and the value it must hold for the controlled flip to fire.
struct Control {
    std::size_t qubit;
    bool positive = true;

    static Control pos(std::size_t q) { return {q, true}; }
    static Control neg(std::size_t q) { return {q, false}; }
};

/// Clean ancillas consumed by compile_mcx for `num_controls` controls.
///
/// Two controls map to a single CCX. Three or more use a V-chain with
/// num_controls - 2 ancillas. A single control needs one ancilla because
/// CX is not expressible with X and CCX on two qubits alone.
std::size_t mcx_ancillas_needed(std::size_t num_controls);

/// Gates over {X, CCX} flipping `target` iff every control holds its
/// polarity. Ancillas must start in |0> and are returned to |0>.
std::vector<Gate> compile_mcx(std::span<const Control> controls, std::size_t target,
                              std::span<const std::size_t> ancillas);

/// Integer encoded by an l-bit register under the format convention: the
/// bit string b_1..b_l (b_1 most significant) encodes int(b) + 1, so the
/// register spans {1, ..., 2^l}.
BigInt decode_s_value(const Bits &bits_msb_first);
Bits encode_s_value(const BigInt &value, std::size_t l);

std::size_t comparator_ancillas_needed(std::size_t l, const BigInt &k, std::size_t extra_controls = 0);

/// Flips `target` iff the value encoded by `s_register` (most significant
/// qubit first) exceeds the classical constant k, and every qubit in
/// `extra_controls` is |1>. k must lie in [1, 2^l].
///
/// One mcx per zero bit of k - 1: the term for bit i fires when S agrees
/// with k - 1 above i and has a 1 where k - 1 has a 0. The terms are
/// mutually exclusive so each input flips the target at most once.
std::vector<Gate> compile_comparator_gt_const(std::span<const std::size_t> s_register, const BigInt &k,
                                              std::size_t target, std::span<const std::size_t> ancillas,
                                              std::span<const std::size_t> extra_controls = {});

std::size_t phase_flip_ancillas_needed(std::size_t num_qubits);

/// Multiplies the all-zero state of `qubits` by -1 and fixes every other
/// basis state: X;H on the flag turn it into (|0>-|1>)/sqrt2, a zero-controlled
/// flip kicks back the phase, then H;X restore the flag.
std::vector<Gate> compile_phase_flip_all_zero(std::span<const std::size_t> qubits, std::size_t flag_ancilla,
                                              std::span<const std::size_t> mcx_ancillas);

}  // namespace qcma

#endif
