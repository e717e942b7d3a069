#include "qcma/gadgets.h"

#include <set>
#include <stdexcept>
#include <string>

namespace qcma {

namespace {

void require_distinct(std::initializer_list<std::span<const std::size_t>> groups, const char *what) {
    std::set<std::size_t> seen;
    for (auto group : groups) {
        for (std::size_t q : group) {
            if (!seen.insert(q).second) {
                throw std::invalid_argument(std::string(what) + ": qubit " + std::to_string(q) + " used twice");
            }
        }
    }
}

}  // namespace

std::size_t mcx_ancillas_needed(std::size_t num_controls) {
    if (num_controls == 1) {
        return 1;
    }
    return num_controls > 2 ? num_controls - 2 : 0;
}

std::vector<Gate> compile_mcx(std::span<const Control> controls, std::size_t target,
                              std::span<const std::size_t> ancillas) {
    std::vector<std::size_t> control_qubits;
    for (const Control &c : controls) {
        control_qubits.push_back(c.qubit);
    }
    std::size_t n = controls.size();
    std::size_t needed = mcx_ancillas_needed(n);
    if (ancillas.size() < needed) {
        throw std::invalid_argument("mcx with " + std::to_string(n) + " controls needs " + std::to_string(needed) +
                                    " clean ancillas, got " + std::to_string(ancillas.size()) + " (short by " +
                                    std::to_string(needed - ancillas.size()) + ")");
    }
    ancillas = ancillas.first(needed);
    std::size_t t[] = {target};
    require_distinct({control_qubits, t, ancillas}, "mcx");

    std::vector<Gate> out;
    auto conjugate_negatives = [&] {
        for (const Control &c : controls) {
            if (!c.positive) {
                out.push_back(Gate::x(c.qubit));
            }
        }
    };

    conjugate_negatives();
    if (n == 0) {
        out.push_back(Gate::x(target));
    } else if (n == 1) {
        out.push_back(Gate::x(ancillas[0]));
        out.push_back(Gate::ccx(controls[0].qubit, ancillas[0], target));
        out.push_back(Gate::x(ancillas[0]));
    } else if (n == 2) {
        out.push_back(Gate::ccx(controls[0].qubit, controls[1].qubit, target));
    } else {
        // V-chain: ancillas[i] holds the AND of controls[0..i+1].
        std::vector<Gate> compute;
        compute.push_back(Gate::ccx(controls[0].qubit, controls[1].qubit, ancillas[0]));
        for (std::size_t i = 2; i + 1 < n; i++) {
            compute.push_back(Gate::ccx(ancillas[i - 2], controls[i].qubit, ancillas[i - 1]));
        }
        out.insert(out.end(), compute.begin(), compute.end());
        out.push_back(Gate::ccx(ancillas[n - 3], controls[n - 1].qubit, target));
        out.insert(out.end(), compute.rbegin(), compute.rend());
    }
    conjugate_negatives();
    return out;
}

BigInt decode_s_value(const Bits &bits_msb_first) {
    BigInt v = 0;
    for (bool b : bits_msb_first) {
        v <<= 1;
        if (b) {
            v += 1;
        }
    }
    return v + 1;
}

Bits encode_s_value(const BigInt &value, std::size_t l) {
    if (value < 1 || value > pow2(l)) {
        throw std::invalid_argument("value " + value.str() + " not in [1, 2^" + std::to_string(l) + "]");
    }
    BigInt v = value - 1;
    Bits out(l);
    for (std::size_t i = 0; i < l; i++) {
        out[i] = boost::multiprecision::bit_test(v, l - 1 - i);
    }
    return out;
}

namespace {

void check_k(std::size_t l, const BigInt &k) {
    if (k < 1 || k > pow2(l)) {
        throw std::invalid_argument("comparator constant k=" + k.str() + " outside [1, 2^" + std::to_string(l) +
                                    "]");
    }
}

}  // namespace

std::size_t comparator_ancillas_needed(std::size_t l, const BigInt &k, std::size_t extra_controls) {
    check_k(l, k);
    Bits pattern = encode_s_value(k, l);
    std::size_t needed = 0;
    for (std::size_t i = 0; i < l; i++) {
        if (!pattern[i]) {
            needed = std::max(needed, mcx_ancillas_needed(extra_controls + i + 1));
        }
    }
    return needed;
}

std::vector<Gate> compile_comparator_gt_const(std::span<const std::size_t> s_register, const BigInt &k,
                                              std::size_t target, std::span<const std::size_t> ancillas,
                                              std::span<const std::size_t> extra_controls) {
    std::size_t l = s_register.size();
    check_k(l, k);
    std::size_t needed = comparator_ancillas_needed(l, k, extra_controls.size());
    if (ancillas.size() < needed) {
        throw std::invalid_argument("comparator needs " + std::to_string(needed) + " clean ancillas, got " +
                                    std::to_string(ancillas.size()) + " (short by " +
                                    std::to_string(needed - ancillas.size()) + ")");
    }
    std::size_t t[] = {target};
    require_distinct({s_register, t, ancillas.first(needed), extra_controls}, "comparator");

    // k - 1 as the l-bit pattern; S > k iff int(S bits) > k - 1.
    Bits pattern = encode_s_value(k, l);
    std::vector<Gate> out;
    for (std::size_t i = 0; i < l; i++) {
        if (pattern[i]) {
            continue;
        }
        std::vector<Control> controls;
        for (std::size_t q : extra_controls) {
            controls.push_back(Control::pos(q));
        }
        for (std::size_t j = 0; j < i; j++) {
            controls.push_back({s_register[j], pattern[j]});
        }
        controls.push_back(Control::pos(s_register[i]));
        auto term = compile_mcx(controls, target, ancillas);
        out.insert(out.end(), term.begin(), term.end());
    }
    return out;
}

std::size_t phase_flip_ancillas_needed(std::size_t num_qubits) { return 1 + mcx_ancillas_needed(num_qubits); }

std::vector<Gate> compile_phase_flip_all_zero(std::span<const std::size_t> qubits, std::size_t flag_ancilla,
                                              std::span<const std::size_t> mcx_ancillas) {
    std::size_t f[] = {flag_ancilla};
    require_distinct({qubits, f, mcx_ancillas}, "phase flip");
    std::vector<Control> controls;
    for (std::size_t q : qubits) {
        controls.push_back(Control::neg(q));
    }
    std::vector<Gate> out{Gate::x(flag_ancilla), Gate::h(flag_ancilla)};
    auto flip = compile_mcx(controls, flag_ancilla, mcx_ancillas);
    out.insert(out.end(), flip.begin(), flip.end());
    out.push_back(Gate::h(flag_ancilla));
    out.push_back(Gate::x(flag_ancilla));
    return out;
}

}  // namespace qcma
