#ifndef QCMA_PROTOCOL_H
#define QCMA_PROTOCOL_H

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcma/circuit.h"
#include "qcma/exact.h"
#include "qcma/state_vector.h"

namespace qcma {

/// Boolean formula over measurement labels.
class BoolExpr {
   public:
    enum class Kind { Const, Var, Not, And, Or };

    static BoolExpr constant(bool value);
    static BoolExpr var(std::string label);
    friend BoolExpr operator!(const BoolExpr &a);
    friend BoolExpr operator&&(const BoolExpr &a, const BoolExpr &b);
    friend BoolExpr operator||(const BoolExpr &a, const BoolExpr &b);

    Kind kind() const { return kind_; }
    bool value() const { return value_; }
    const std::string &label() const { return label_; }
    const std::vector<BoolExpr> &args() const { return args_; }

    bool evaluate(const std::map<std::string, bool> &assignment) const;
    /// Folds constants; the result is a Const node or contains none.
    BoolExpr simplified() const;
    void collect_labels(std::vector<std::string> &out) const;
    std::string str() const;

   private:
    Kind kind_ = Kind::Const;
    bool value_ = false;
    std::string label_;
    std::vector<BoolExpr> args_;
};

struct UnitaryStep {
    Circuit segment;
};

/// Computational-basis measurement of one qubit, recorded under `label`.
struct MeasureStep {
    std::size_t qubit;
    std::string label;
};

/// Accepts if `accept_if` holds, else rejects if `reject_if` holds, else continues.
struct DecisionStep {
    BoolExpr accept_if = BoolExpr::constant(false);
    BoolExpr reject_if = BoolExpr::constant(false);
};

using ProtocolStep = std::variant<UnitaryStep, MeasureStep, DecisionStep>;

/// Unitary segments interleaved with measurements and classical decisions.
/// A branch that reaches the end without a decision is rejected.
class Protocol {
   public:
    explicit Protocol(std::size_t width) : width_(width) {}

    Protocol &unitary(Circuit segment);
    Protocol &measure(std::size_t qubit, std::string label);
    Protocol &decide(BoolExpr accept_if, BoolExpr reject_if);

    std::size_t width() const { return width_; }
    const std::vector<ProtocolStep> &steps() const { return steps_; }
    const std::vector<std::string> &labels() const { return labels_; }

    /// Formula over labels that holds exactly on accepted branches.
    BoolExpr acceptance_formula() const;

   private:
    void check_labels(const BoolExpr &e) const;

    std::size_t width_;
    std::vector<ProtocolStep> steps_;
    std::vector<std::string> labels_;
};

struct Branch {
    StateVector state;
    std::map<std::string, bool> record;

    Dyadic probability() const { return state.norm_sq(); }
};

struct ProtocolOutcome {
    Dyadic accept;
    Dyadic reject;
    /// Accept probability contributed by each step; nonzero only at decisions.
    std::vector<Dyadic> accept_by_step;
};

/// Called with each live branch just before a measurement step executes.
using MeasureObserver = std::function<void(std::size_t step, const MeasureStep &, const Branch &)>;

/// Exact branching semantics: every measurement splits each live branch
/// into sub-normalized children; zero-weight children are dropped.
ProtocolOutcome run_protocol(const Protocol &p, const MeasureObserver &observer = {});

struct DeferredCircuit {
    Circuit circuit;  // output_qubit() is the verdict qubit
    std::map<std::string, std::size_t> record_qubits;
    std::size_t verdict_qubit = 0;
};

/// Compiles `p` into one unitary circuit: each measurement becomes a copy
/// onto a fresh record qubit, later segments run unconditionally, and a
/// Toffoli network writes the acceptance formula into a fresh verdict qubit.
DeferredCircuit defer_measurements(const Protocol &p);

}  // namespace qcma

#endif
