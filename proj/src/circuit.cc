#include "qcma/circuit.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qcma {

Gate Gate::shifted(std::size_t offset) const {
    Gate g = *this;
    for (std::size_t i = 0; i < arity(); i++) {
        g.qubits[i] += offset;
    }
    return g;
}

std::string Gate::str() const {
    switch (kind) {
        case GateKind::H:
            return "h " + std::to_string(qubits[0]);
        case GateKind::X:
            return "x " + std::to_string(qubits[0]);
        case GateKind::CCX:
            return "ccx " + std::to_string(qubits[0]) + " " + std::to_string(qubits[1]) + " " +
                   std::to_string(qubits[2]);
    }
    return "?";
}

bool Gate::operator==(const Gate &other) const {
    if (kind != other.kind) {
        return false;
    }
    return std::equal(qubits.begin(), qubits.begin() + arity(), other.qubits.begin());
}

Bits parse_bits(std::string_view text) {
    Bits out;
    out.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string may only contain 0 and 1: '" + std::string(text) + "'");
        }
        out.push_back(c == '1');
    }
    return out;
}

std::string bits_str(const Bits &bits) {
    std::string out;
    out.reserve(bits.size());
    for (bool b : bits) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

// ---------------------------------------------------------------- Circuit

void Circuit::check_qubit(std::size_t q, std::string_view role) const {
    if (q >= width_) {
        throw std::invalid_argument(std::string(role) + " qubit " + std::to_string(q) + " out of range for width " +
                                    std::to_string(width_));
    }
}

std::size_t Circuit::output() const {
    if (!output_) {
        throw std::invalid_argument("circuit has no designated output qubit");
    }
    return *output_;
}

Circuit &Circuit::append(const Gate &gate) {
    for (std::size_t i = 0; i < gate.arity(); i++) {
        check_qubit(gate.qubits[i], "gate");
    }
    if (gate.kind == GateKind::CCX) {
        const auto &q = gate.qubits;
        if (q[0] == q[1] || q[0] == q[2] || q[1] == q[2]) {
            throw std::invalid_argument("ccx qubits must be pairwise distinct: " + gate.str());
        }
    }
    gates_.push_back(gate);
    return *this;
}

Circuit &Circuit::append(const std::vector<Gate> &gates) {
    for (const Gate &g : gates) {
        append(g);
    }
    return *this;
}

Circuit &Circuit::append_relocated(const Circuit &other, std::size_t offset) {
    for (const Gate &g : other.gates()) {
        append(g.shifted(offset));
    }
    return *this;
}

Circuit &Circuit::set_output(std::size_t q) {
    check_qubit(q, "output");
    output_ = q;
    return *this;
}

Circuit &Circuit::set_witness(std::vector<std::size_t> qubits) {
    std::set<std::size_t> seen;
    for (std::size_t q : qubits) {
        check_qubit(q, "witness");
        if (!seen.insert(q).second) {
            throw std::invalid_argument("duplicate witness qubit " + std::to_string(q));
        }
    }
    witness_ = std::move(qubits);
    return *this;
}

Circuit &Circuit::set_ancillas(std::vector<std::size_t> qubits) {
    for (std::size_t q : qubits) {
        check_qubit(q, "ancilla");
    }
    std::sort(qubits.begin(), qubits.end());
    qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
    ancillas_ = std::move(qubits);
    return *this;
}

std::size_t Circuit::hadamard_count() const {
    return std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) { return g.kind == GateKind::H; });
}

Circuit hardcode_witness(const Circuit &templ, const Bits &w) {
    const auto &wq = templ.witness_qubits();
    if (w.size() != wq.size()) {
        throw std::invalid_argument("witness has " + std::to_string(w.size()) + " bits but circuit expects " +
                                    std::to_string(wq.size()));
    }
    Circuit out(templ.width());
    for (std::size_t i = 0; i < w.size(); i++) {
        if (w[i]) {
            out.append(Gate::x(wq[i]));
        }
    }
    out.append(templ.gates());
    if (templ.output_qubit()) {
        out.set_output(*templ.output_qubit());
    }
    out.set_witness(wq);
    out.set_ancillas(templ.ancilla_qubits());
    return out;
}

Circuit inverse(const Circuit &c) {
    Circuit out(c.width());
    out.append(std::vector<Gate>(c.gates().rbegin(), c.gates().rend()));
    if (c.output_qubit()) {
        out.set_output(*c.output_qubit());
    }
    out.set_witness(c.witness_qubits());
    out.set_ancillas(c.ancilla_qubits());
    return out;
}

// ---------------------------------------------------------------- layout

std::vector<std::size_t> QubitRange::qubits() const {
    std::vector<std::size_t> out(size);
    for (std::size_t i = 0; i < size; i++) {
        out[i] = begin + i;
    }
    return out;
}

RegisterLayout RegisterLayout::make(std::size_t r_width, std::size_t s_width, std::size_t ancilla_count) {
    RegisterLayout layout;
    layout.b = {0, 1};
    layout.o = {1, 1};
    layout.r = {2, r_width};
    layout.s = {layout.r.end(), s_width};
    layout.anc = {layout.s.end(), ancilla_count};
    return layout;
}

std::vector<std::size_t> RegisterLayout::main_qubits() const {
    std::vector<std::size_t> out;
    out.reserve(s.end());
    for (std::size_t q = b.begin; q < s.end(); q++) {
        out.push_back(q);
    }
    return out;
}

// ---------------------------------------------------------------- text io

namespace {

std::size_t parse_index(std::string_view token, std::size_t line_no) {
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                                    std::string(token) + "'");
    }
    return out;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    bool have_witness = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream words(line);
        std::vector<std::string> tok;
        for (std::string w; words >> w;) {
            tok.push_back(w);
        }
        if (tok.empty()) {
            continue;
        }
        auto fail = [&](const std::string &msg) -> void {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
        };
        auto expect_args = [&](std::size_t n) {
            if (tok.size() != n + 1) {
                fail("'" + tok[0] + "' takes " + std::to_string(n) + " argument(s)");
            }
        };
        const std::string &op = tok[0];
        if (op == "qubits") {
            expect_args(1);
            if (circuit) {
                fail("duplicate 'qubits' directive");
            }
            circuit.emplace(parse_index(tok[1], line_no));
            continue;
        }
        if (!circuit) {
            fail("'" + op + "' before 'qubits'");
        }
        std::vector<std::size_t> args;
        for (std::size_t i = 1; i < tok.size(); i++) {
            args.push_back(parse_index(tok[i], line_no));
        }
        try {
            if (op == "h") {
                expect_args(1);
                circuit->append(Gate::h(args[0]));
            } else if (op == "x") {
                expect_args(1);
                circuit->append(Gate::x(args[0]));
            } else if (op == "ccx") {
                expect_args(3);
                circuit->append(Gate::ccx(args[0], args[1], args[2]));
            } else if (op == "output") {
                expect_args(1);
                if (circuit->output_qubit()) {
                    fail("duplicate 'output' directive");
                }
                circuit->set_output(args[0]);
            } else if (op == "witness") {
                if (have_witness) {
                    fail("duplicate 'witness' directive");
                }
                have_witness = true;
                circuit->set_witness(args);
            } else if (op == "ancilla") {
                circuit->set_ancillas(args);
            } else {
                fail("unknown directive '" + op + "'");
            }
        } catch (const std::invalid_argument &e) {
            std::string msg = e.what();
            if (msg.rfind("line ", 0) == 0) {
                throw;
            }
            fail(msg);
        }
    }
    if (!circuit) {
        throw std::invalid_argument("missing 'qubits' directive");
    }
    if (!circuit->output_qubit()) {
        throw std::invalid_argument("missing 'output' directive");
    }
    return *circuit;
}

Circuit read_circuit_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open circuit file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_circuit(buf.str());
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::string format_circuit(const Circuit &c) {
    std::ostringstream out;
    out << "qubits " << c.width() << "\n";
    for (const Gate &g : c.gates()) {
        out << g.str() << "\n";
    }
    if (c.output_qubit()) {
        out << "output " << *c.output_qubit() << "\n";
    }
    if (!c.witness_qubits().empty()) {
        out << "witness";
        for (std::size_t q : c.witness_qubits()) {
            out << " " << q;
        }
        out << "\n";
    }
    if (!c.ancilla_qubits().empty()) {
        out << "ancilla";
        for (std::size_t q : c.ancilla_qubits()) {
            out << " " << q;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qcma
