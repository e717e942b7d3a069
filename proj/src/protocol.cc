#include "qcma/protocol.h"

#include <algorithm>
#include <stdexcept>

namespace qcma {

// ---------------------------------------------------------------- BoolExpr

BoolExpr BoolExpr::constant(bool value) {
    BoolExpr e;
    e.kind_ = Kind::Const;
    e.value_ = value;
    return e;
}

BoolExpr BoolExpr::var(std::string label) {
    BoolExpr e;
    e.kind_ = Kind::Var;
    e.label_ = std::move(label);
    return e;
}

BoolExpr operator!(const BoolExpr &a) {
    BoolExpr e;
    e.kind_ = BoolExpr::Kind::Not;
    e.args_ = {a};
    return e;
}

BoolExpr operator&&(const BoolExpr &a, const BoolExpr &b) {
    BoolExpr e;
    e.kind_ = BoolExpr::Kind::And;
    e.args_ = {a, b};
    return e;
}

BoolExpr operator||(const BoolExpr &a, const BoolExpr &b) {
    BoolExpr e;
    e.kind_ = BoolExpr::Kind::Or;
    e.args_ = {a, b};
    return e;
}

bool BoolExpr::evaluate(const std::map<std::string, bool> &assignment) const {
    switch (kind_) {
        case Kind::Const:
            return value_;
        case Kind::Var: {
            auto it = assignment.find(label_);
            if (it == assignment.end()) {
                throw std::logic_error("formula reads unassigned label '" + label_ + "'");
            }
            return it->second;
        }
        case Kind::Not:
            return !args_[0].evaluate(assignment);
        case Kind::And:
            return std::all_of(args_.begin(), args_.end(), [&](const BoolExpr &a) { return a.evaluate(assignment); });
        case Kind::Or:
            return std::any_of(args_.begin(), args_.end(), [&](const BoolExpr &a) { return a.evaluate(assignment); });
    }
    return false;
}

BoolExpr BoolExpr::simplified() const {
    switch (kind_) {
        case Kind::Const:
        case Kind::Var:
            return *this;
        case Kind::Not: {
            BoolExpr inner = args_[0].simplified();
            if (inner.kind_ == Kind::Const) {
                return constant(!inner.value_);
            }
            if (inner.kind_ == Kind::Not) {
                return inner.args_[0];
            }
            return !inner;
        }
        case Kind::And:
        case Kind::Or: {
            // Absorbing constant: false for And, true for Or.
            bool absorbing = kind_ == Kind::Or;
            std::vector<BoolExpr> kept;
            for (const BoolExpr &a : args_) {
                BoolExpr s = a.simplified();
                if (s.kind_ == Kind::Const) {
                    if (s.value_ == absorbing) {
                        return constant(absorbing);
                    }
                    continue;
                }
                kept.push_back(std::move(s));
            }
            if (kept.empty()) {
                return constant(!absorbing);
            }
            if (kept.size() == 1) {
                return kept[0];
            }
            BoolExpr e;
            e.kind_ = kind_;
            e.args_ = std::move(kept);
            return e;
        }
    }
    return *this;
}

void BoolExpr::collect_labels(std::vector<std::string> &out) const {
    if (kind_ == Kind::Var) {
        out.push_back(label_);
    }
    for (const BoolExpr &a : args_) {
        a.collect_labels(out);
    }
}

std::string BoolExpr::str() const {
    switch (kind_) {
        case Kind::Const:
            return value_ ? "true" : "false";
        case Kind::Var:
            return label_;
        case Kind::Not:
            return "!" + args_[0].str();
        case Kind::And:
        case Kind::Or: {
            std::string out = "(";
            for (std::size_t i = 0; i < args_.size(); i++) {
                if (i > 0) {
                    out += kind_ == Kind::And ? " & " : " | ";
                }
                out += args_[i].str();
            }
            return out + ")";
        }
    }
    return "?";
}

// ---------------------------------------------------------------- Protocol

Protocol &Protocol::unitary(Circuit segment) {
    if (segment.width() > width_) {
        throw std::invalid_argument("unitary segment wider than protocol (" + std::to_string(segment.width()) + " > " +
                                    std::to_string(width_) + ")");
    }
    steps_.push_back(UnitaryStep{std::move(segment)});
    return *this;
}

Protocol &Protocol::measure(std::size_t qubit, std::string label) {
    if (qubit >= width_) {
        throw std::invalid_argument("measured qubit " + std::to_string(qubit) + " out of range");
    }
    if (std::find(labels_.begin(), labels_.end(), label) != labels_.end()) {
        throw std::invalid_argument("duplicate measurement label '" + label + "'");
    }
    labels_.push_back(label);
    steps_.push_back(MeasureStep{qubit, std::move(label)});
    return *this;
}

void Protocol::check_labels(const BoolExpr &e) const {
    std::vector<std::string> used;
    e.collect_labels(used);
    for (const auto &l : used) {
        if (std::find(labels_.begin(), labels_.end(), l) == labels_.end()) {
            throw std::invalid_argument("decision references label '" + l + "' before it is measured");
        }
    }
}

Protocol &Protocol::decide(BoolExpr accept_if, BoolExpr reject_if) {
    check_labels(accept_if);
    check_labels(reject_if);
    steps_.push_back(DecisionStep{std::move(accept_if), std::move(reject_if)});
    return *this;
}

BoolExpr Protocol::acceptance_formula() const {
    BoolExpr accepted = BoolExpr::constant(false);
    BoolExpr alive = BoolExpr::constant(true);
    for (const auto &step : steps_) {
        if (const auto *d = std::get_if<DecisionStep>(&step)) {
            accepted = accepted || (alive && d->accept_if);
            alive = alive && !d->accept_if && !d->reject_if;
        }
    }
    return accepted.simplified();
}

// -------------------------------------------------------------- execution

ProtocolOutcome run_protocol(const Protocol &p, const MeasureObserver &observer) {
    ProtocolOutcome outcome;
    outcome.accept_by_step.assign(p.steps().size(), Dyadic());
    std::vector<Branch> live;
    live.push_back(Branch{init_state(p.width()), {}});

    for (std::size_t i = 0; i < p.steps().size() && !live.empty(); i++) {
        const ProtocolStep &step = p.steps()[i];
        if (const auto *u = std::get_if<UnitaryStep>(&step)) {
            for (Branch &b : live) {
                b.state.apply(u->segment);
            }
        } else if (const auto *m = std::get_if<MeasureStep>(&step)) {
            std::vector<Branch> next;
            for (Branch &b : live) {
                if (observer) {
                    observer(i, *m, b);
                }
                auto [zero, one] = branch_measure(b.state, m->qubit);
                for (auto [value, out] : {std::pair{false, &zero}, std::pair{true, &one}}) {
                    if (out->probability.is_zero()) {
                        continue;
                    }
                    Branch child{std::move(out->post_state), b.record};
                    child.record[m->label] = value;
                    next.push_back(std::move(child));
                }
            }
            live = std::move(next);
        } else {
            const auto &d = std::get<DecisionStep>(step);
            std::vector<Branch> next;
            for (Branch &b : live) {
                if (d.accept_if.evaluate(b.record)) {
                    Dyadic pb = b.probability();
                    outcome.accept = outcome.accept + pb;
                    outcome.accept_by_step[i] = outcome.accept_by_step[i] + pb;
                } else if (d.reject_if.evaluate(b.record)) {
                    outcome.reject = outcome.reject + b.probability();
                } else {
                    next.push_back(std::move(b));
                }
            }
            live = std::move(next);
        }
    }
    for (const Branch &b : live) {
        outcome.reject = outcome.reject + b.probability();
    }
    if (outcome.accept + outcome.reject != Dyadic(1)) {
        throw std::logic_error("protocol verdict probabilities sum to " + (outcome.accept + outcome.reject).str());
    }
    return outcome;
}

namespace {

// Writes a formula into scratch qubits with X and CCX, given a qubit
// permanently holding |1>.
class FormulaCompiler {
   public:
    FormulaCompiler(std::size_t one, std::size_t scratch_begin, const std::map<std::string, std::size_t> &records)
        : one_(one), next_(scratch_begin), records_(records) {}

    std::size_t compile(const BoolExpr &e) {
        switch (e.kind()) {
            case BoolExpr::Kind::Const:
                if (e.value()) {
                    return one_;
                }
                return fresh();
            case BoolExpr::Kind::Var:
                return records_.at(e.label());
            case BoolExpr::Kind::Not: {
                std::size_t a = compile(e.args()[0]);
                std::size_t f = copy(a);
                gates_.push_back(Gate::x(f));
                return f;
            }
            case BoolExpr::Kind::And:
            case BoolExpr::Kind::Or: {
                bool is_or = e.kind() == BoolExpr::Kind::Or;
                std::size_t acc = compile(e.args()[0]);
                for (std::size_t i = 1; i < e.args().size(); i++) {
                    std::size_t b = compile(e.args()[i]);
                    if (b == acc) {
                        acc = copy(acc);
                        continue;
                    }
                    std::size_t f = fresh();
                    if (is_or) {
                        // a | b = !(!a & !b)
                        gates_.push_back(Gate::x(acc));
                        gates_.push_back(Gate::x(b));
                        gates_.push_back(Gate::ccx(acc, b, f));
                        gates_.push_back(Gate::x(acc));
                        gates_.push_back(Gate::x(b));
                        gates_.push_back(Gate::x(f));
                    } else {
                        gates_.push_back(Gate::ccx(acc, b, f));
                    }
                    acc = f;
                }
                return acc;
            }
        }
        throw std::logic_error("unreachable formula kind");
    }

    std::size_t copy(std::size_t src) {
        std::size_t f = fresh();
        emit_copy(src, f);
        return f;
    }

    void emit_copy(std::size_t src, std::size_t dst) {
        if (src == one_) {
            gates_.push_back(Gate::x(dst));
        } else {
            gates_.push_back(Gate::ccx(src, one_, dst));
        }
    }

    std::size_t fresh() { return next_++; }
    std::size_t next() const { return next_; }
    std::vector<Gate> &gates() { return gates_; }

   private:
    std::size_t one_;
    std::size_t next_;
    const std::map<std::string, std::size_t> &records_;
    std::vector<Gate> gates_;
};

}  // namespace

DeferredCircuit defer_measurements(const Protocol &p) {
    std::size_t one = p.width();
    DeferredCircuit out;
    std::size_t next = one + 1;
    for (const auto &label : p.labels()) {
        out.record_qubits[label] = next++;
    }

    FormulaCompiler formula(one, next, out.record_qubits);
    BoolExpr acceptance = p.acceptance_formula();
    std::size_t result = formula.compile(acceptance);
    out.verdict_qubit = formula.fresh();
    bool constant_false = acceptance.kind() == BoolExpr::Kind::Const && !acceptance.value();
    if (!constant_false) {
        formula.emit_copy(result, out.verdict_qubit);
    }

    Circuit c(formula.next());
    c.append(Gate::x(one));
    for (const auto &step : p.steps()) {
        if (const auto *u = std::get_if<UnitaryStep>(&step)) {
            c.append(u->segment.gates());
        } else if (const auto *m = std::get_if<MeasureStep>(&step)) {
            c.append(Gate::ccx(m->qubit, one, out.record_qubits.at(m->label)));
        }
    }
    c.append(formula.gates());
    c.append(Gate::x(one));
    c.set_output(out.verdict_qubit);
    std::vector<std::size_t> ancillas;
    for (std::size_t q = one; q < c.width(); q++) {
        if (q != out.verdict_qubit) {
            ancillas.push_back(q);
        }
    }
    c.set_ancillas(std::move(ancillas));
    out.circuit = std::move(c);
    return out;
}

}  // namespace qcma
