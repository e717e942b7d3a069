#ifndef QCMA_CIRCUIT_H
#define QCMA_CIRCUIT_H

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcma {

enum class GateKind { H, X, CCX };

/// One gate over {H, X, CCX}. `qubits[0]` is the target for H and X; for
/// CCX the layout is (control, control, target).
struct Gate {
    GateKind kind;
    std::array<std::size_t, 3> qubits;

    static Gate h(std::size_t q) { return {GateKind::H, {q, 0, 0}}; }
    static Gate x(std::size_t q) { return {GateKind::X, {q, 0, 0}}; }
    static Gate ccx(std::size_t c1, std::size_t c2, std::size_t target) { return {GateKind::CCX, {c1, c2, target}}; }

    std::size_t arity() const { return kind == GateKind::CCX ? 3 : 1; }
    std::size_t target() const { return kind == GateKind::CCX ? qubits[2] : qubits[0]; }
    /// Gate with every qubit index shifted by `offset`.
    Gate shifted(std::size_t offset) const;
    std::string str() const;

    bool operator==(const Gate &other) const;
};

/// Witness bits, most significant first as written on the command line.
using Bits = std::vector<bool>;

Bits parse_bits(std::string_view text);
std::string bits_str(const Bits &bits);

/// An ordered gate list over a fixed number of qubits, all starting in |0>.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::optional<std::size_t> output_qubit() const { return output_; }
    const std::vector<std::size_t> &witness_qubits() const { return witness_; }
    const std::vector<std::size_t> &ancilla_qubits() const { return ancillas_; }

    /// Output qubit, throwing if none was designated.
    std::size_t output() const;

    Circuit &append(const Gate &gate);
    Circuit &append(const std::vector<Gate> &gates);
    /// Appends `other`'s gates with every index shifted by `offset`.
    Circuit &append_relocated(const Circuit &other, std::size_t offset);
    Circuit &set_output(std::size_t q);
    Circuit &set_witness(std::vector<std::size_t> qubits);
    Circuit &set_ancillas(std::vector<std::size_t> qubits);

    std::size_t gate_count() const { return gates_.size(); }
    std::size_t hadamard_count() const;

    bool operator==(const Circuit &other) const = default;

   private:
    void check_qubit(std::size_t q, std::string_view role) const;

    std::size_t width_ = 0;
    std::vector<Gate> gates_;
    std::optional<std::size_t> output_;
    std::vector<std::size_t> witness_;
    std::vector<std::size_t> ancillas_;
};

/// Prepends an X on witness_qubits[i] for every set bit w[i].
Circuit hardcode_witness(const Circuit &templ, const Bits &w);

/// Reverses gate order. Every gate in the set is self-inverse.
Circuit inverse(const Circuit &c);

inline std::size_t gate_count(const Circuit &c) { return c.gate_count(); }
inline std::size_t hadamard_count(const Circuit &c) { return c.hadamard_count(); }

/// A contiguous block of qubits [begin, begin + size).
struct QubitRange {
    std::size_t begin = 0;
    std::size_t size = 0;

    std::size_t end() const { return begin + size; }
    std::size_t operator[](std::size_t i) const { return begin + i; }
    bool contains(std::size_t q) const { return q >= begin && q < end(); }
    std::vector<std::size_t> qubits() const;
};

/// Registers of the perfect-completeness verifier, laid out in the order
/// B, O, R, S, ANC.
struct RegisterLayout {
    QubitRange b;
    QubitRange o;
    QubitRange r;
    QubitRange s;
    QubitRange anc;

    static RegisterLayout make(std::size_t r_width, std::size_t s_width, std::size_t ancilla_count);

    std::size_t width() const { return anc.end(); }
    /// B, O, R and S in order; the support of the all-zero reflection.
    std::vector<std::size_t> main_qubits() const;
};

/// Text format, one directive per line:
///   qubits <n> | h <q> | x <q> | ccx <c1> <c2> <t> | output <q>
///   witness <q>... | ancilla <q>...
/// `#` starts a comment. `qubits` must precede every other directive and
/// exactly one `output` is required.
Circuit parse_circuit(std::string_view text);
Circuit read_circuit_file(const std::string &path);
std::string format_circuit(const Circuit &c);

}  // namespace qcma

#endif
