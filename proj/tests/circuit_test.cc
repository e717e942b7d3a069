#include "qcma/circuit.h"

#include <gtest/gtest.h>

#include <random>

#include "qcma/state_vector.h"
#include "test_util.h"

using namespace qcma;
using qcma::testing::index_from_bits;

namespace {

Circuit and_template() { return parse_circuit("qubits 4\nccx 0 1 3\nwitness 0 1 2\noutput 3\n"); }

}  // namespace

TEST(HardcodeWitness, all_zero_witness_leaves_template_unchanged) {
    Circuit t = and_template();
    Circuit v = hardcode_witness(t, parse_bits("000"));
    EXPECT_EQ(v, t);
}

TEST(HardcodeWitness, prepends_x_on_set_bits) {
    Circuit t = and_template();
    Circuit v = hardcode_witness(t, parse_bits("100"));
    ASSERT_EQ(v.gate_count(), t.gate_count() + 1);
    EXPECT_EQ(v.gates()[0], Gate::x(0));

    Circuit all = hardcode_witness(t, parse_bits("111"));
    ASSERT_EQ(all.gate_count(), t.gate_count() + 3);
    EXPECT_EQ(all.gates()[0], Gate::x(0));
    EXPECT_EQ(all.gates()[1], Gate::x(1));
    EXPECT_EQ(all.gates()[2], Gate::x(2));
    EXPECT_EQ(all.gates()[3], Gate::ccx(0, 1, 3));
}

TEST(HardcodeWitness, respects_witness_qubit_order) {
    Circuit t = parse_circuit("qubits 3\nwitness 2 0\noutput 1\n");
    Circuit v = hardcode_witness(t, parse_bits("10"));
    ASSERT_EQ(v.gate_count(), 1u);
    EXPECT_EQ(v.gates()[0], Gate::x(2));
}

TEST(HardcodeWitness, length_mismatch) {
    EXPECT_THROW(hardcode_witness(and_template(), parse_bits("11")), std::invalid_argument);
    EXPECT_THROW(parse_bits("10a"), std::invalid_argument);
}

TEST(Inverse, examples) {
    Circuit empty(2);
    EXPECT_EQ(inverse(empty).gates().size(), 0u);

    Circuit c(2);
    c.append(Gate::h(0)).append(Gate::x(1));
    Circuit inv = inverse(c);
    ASSERT_EQ(inv.gate_count(), 2u);
    EXPECT_EQ(inv.gates()[0], Gate::x(1));
    EXPECT_EQ(inv.gates()[1], Gate::h(0));
    EXPECT_EQ(inverse(inv), c);
}

TEST(Inverse, circuit_then_inverse_is_identity_on_every_basis_state) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; trial++) {
        std::size_t width = 1 + trial % 6;
        Circuit c = qcma::testing::random_circuit(rng, width, 10);
        EXPECT_EQ(inverse(inverse(c)), c);
        Circuit inv = inverse(c);
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << width); b++) {
            BasisIndex in = index_from_bits(width, b);
            StateVector s = StateVector::basis(width, in);
            s.apply(c);
            s.apply(inv);
            EXPECT_TRUE(same_vector(s, StateVector::basis(width, in))) << "trial " << trial << " input " << b;
        }
    }
}

TEST(Counts, examples) {
    Circuit c(3);
    c.append(Gate::h(0)).append(Gate::x(1)).append(Gate::ccx(0, 1, 2));
    EXPECT_EQ(gate_count(c), 3u);
    EXPECT_EQ(hadamard_count(c), 1u);
    EXPECT_EQ(gate_count(Circuit(2)), 0u);
    EXPECT_EQ(hadamard_count(Circuit(2)), 0u);
    Circuit t = and_template();
    EXPECT_EQ(gate_count(hardcode_witness(t, parse_bits("101"))), gate_count(t) + 2);
}

TEST(Circuit, rejects_bad_gates_and_designations) {
    Circuit c(3);
    EXPECT_THROW(c.append(Gate::h(3)), std::invalid_argument);
    EXPECT_THROW(c.append(Gate::ccx(0, 0, 1)), std::invalid_argument);
    EXPECT_THROW(c.append(Gate::ccx(0, 1, 1)), std::invalid_argument);
    EXPECT_THROW(c.set_output(5), std::invalid_argument);
    EXPECT_THROW(c.set_witness({0, 0}), std::invalid_argument);
    EXPECT_THROW(c.set_witness({7}), std::invalid_argument);
    EXPECT_THROW(Circuit(2).output(), std::invalid_argument);
}

TEST(RegisterLayout, ranges_are_disjoint_and_cover_width) {
    RegisterLayout l = RegisterLayout::make(3, 4, 5);
    EXPECT_EQ(l.b.begin, 0u);
    EXPECT_EQ(l.o.begin, 1u);
    EXPECT_EQ(l.r.begin, 2u);
    EXPECT_EQ(l.s.begin, 5u);
    EXPECT_EQ(l.anc.begin, 9u);
    EXPECT_EQ(l.width(), 14u);
    EXPECT_EQ(l.main_qubits().size(), 9u);
}

TEST(ParseCircuit, full_format) {
    Circuit c = parse_circuit(
        "# comment line\n"
        "qubits 4   # trailing comment\n"
        "\n"
        "h 0\n"
        "x 1\n"
        "ccx 0 1 2\n"
        "witness 3 1\n"
        "output 2\n");
    EXPECT_EQ(c.width(), 4u);
    ASSERT_EQ(c.gate_count(), 3u);
    EXPECT_EQ(c.gates()[2], Gate::ccx(0, 1, 2));
    EXPECT_EQ(c.output(), 2u);
    EXPECT_EQ(c.witness_qubits(), (std::vector<std::size_t>{3, 1}));
}

TEST(ParseCircuit, errors_carry_line_numbers) {
    auto error_of = [](const char *text) -> std::string {
        try {
            parse_circuit(text);
        } catch (const std::invalid_argument &e) {
            return e.what();
        }
        return "";
    };
    EXPECT_EQ(error_of("qubits 2\nfoo 1\noutput 0\n"), "line 2: unknown directive 'foo'");
    EXPECT_NE(error_of("qubits 2\nh 2\noutput 0\n").find("line 2"), std::string::npos);
    EXPECT_EQ(error_of("qubits 2\noutput 0\noutput 1\n"), "line 3: duplicate 'output' directive");
    EXPECT_NE(error_of("h 0\n").find("before 'qubits'"), std::string::npos);
    EXPECT_NE(error_of("qubits 2\nh\n").find("line 2"), std::string::npos);
    EXPECT_NE(error_of("qubits 2\nh -1\n").find("line 2"), std::string::npos);
    EXPECT_NE(error_of("qubits 3\nccx 0 0 1\noutput 2\n").find("line 2"), std::string::npos);
    EXPECT_EQ(error_of("qubits 2\nh 0\n"), "missing 'output' directive");
    EXPECT_EQ(error_of(""), "missing 'qubits' directive");
}

TEST(ParseCircuit, format_round_trip_on_random_circuits) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 50; trial++) {
        Circuit c = qcma::testing::random_circuit(rng, 3 + trial % 5, trial % 13);
        c.set_witness({0, 2});
        c.set_ancillas({1});
        EXPECT_EQ(parse_circuit(format_circuit(c)), c);
    }
}
