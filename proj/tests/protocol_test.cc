#include "qcma/protocol.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_util.h"

using namespace qcma;

namespace {

Circuit segment(std::size_t width, std::initializer_list<Gate> gates) {
    Circuit c(width);
    for (const Gate &g : gates) {
        c.append(g);
    }
    return c;
}

}  // namespace

TEST(BoolExpr, evaluate_and_simplify) {
    BoolExpr a = BoolExpr::var("a");
    BoolExpr b = BoolExpr::var("b");
    BoolExpr f = a && !b;
    EXPECT_TRUE(f.evaluate({{"a", true}, {"b", false}}));
    EXPECT_FALSE(f.evaluate({{"a", true}, {"b", true}}));
    EXPECT_THROW(f.evaluate({{"a", true}}), std::logic_error);

    BoolExpr t = (a || BoolExpr::constant(true)).simplified();
    EXPECT_EQ(t.kind(), BoolExpr::Kind::Const);
    EXPECT_TRUE(t.value());
    BoolExpr z = (a && BoolExpr::constant(false)).simplified();
    EXPECT_EQ(z.kind(), BoolExpr::Kind::Const);
    EXPECT_FALSE(z.value());

    std::vector<std::string> labels;
    (a || (b && a)).collect_labels(labels);
    EXPECT_NE(std::find(labels.begin(), labels.end(), "b"), labels.end());
}

TEST(Protocol, rejects_malformed_steps) {
    Protocol p(2);
    EXPECT_THROW(p.unitary(Circuit(3)), std::invalid_argument);
    EXPECT_THROW(p.measure(2, "m"), std::invalid_argument);
    p.measure(0, "m");
    EXPECT_THROW(p.measure(1, "m"), std::invalid_argument);
    EXPECT_THROW(p.decide(BoolExpr::var("unseen"), BoolExpr::constant(false)), std::invalid_argument);
}

TEST(RunProtocol, coin_accepts_half) {
    Protocol p(1);
    p.unitary(segment(1, {Gate::h(0)})).measure(0, "m").decide(BoolExpr::var("m"), !BoolExpr::var("m"));
    ProtocolOutcome o = run_protocol(p);
    EXPECT_EQ(o.accept, Dyadic(1, 1));
    EXPECT_EQ(o.reject, Dyadic(1, 1));
    EXPECT_EQ(o.accept_by_step[2], Dyadic(1, 1));
    EXPECT_EQ(o.accept_by_step[0], Dyadic(0));
}

TEST(RunProtocol, reaching_the_end_rejects) {
    Protocol p(1);
    p.unitary(segment(1, {Gate::x(0)})).measure(0, "m");
    ProtocolOutcome o = run_protocol(p);
    EXPECT_EQ(o.accept, Dyadic(0));
    EXPECT_EQ(o.reject, Dyadic(1));
}

TEST(RunProtocol, second_chance_after_failed_first_try) {
    // Flip a coin; on tails flip again. Accepts with 3/4.
    Protocol p(2);
    p.unitary(segment(2, {Gate::h(0)}))
        .measure(0, "a")
        .decide(BoolExpr::var("a"), BoolExpr::constant(false))
        .unitary(segment(2, {Gate::h(1)}))
        .measure(1, "b")
        .decide(BoolExpr::var("b"), BoolExpr::constant(true));
    ProtocolOutcome o = run_protocol(p);
    EXPECT_EQ(o.accept, Dyadic(3, 2));
    EXPECT_EQ(o.accept_by_step[2], Dyadic(1, 1));
    EXPECT_EQ(o.accept_by_step[5], Dyadic(1, 2));
    BoolExpr f = p.acceptance_formula();
    EXPECT_TRUE(f.evaluate({{"a", true}, {"b", false}}));
    EXPECT_TRUE(f.evaluate({{"a", false}, {"b", true}}));
    EXPECT_FALSE(f.evaluate({{"a", false}, {"b", false}}));
}

TEST(RunProtocol, observer_sees_every_live_branch) {
    Protocol p(2);
    p.unitary(segment(2, {Gate::h(0)})).measure(0, "a").unitary(segment(2, {Gate::h(1)})).measure(1, "b");
    std::vector<Dyadic> seen;
    run_protocol(p, [&](std::size_t step, const MeasureStep &m, const Branch &b) {
        if (step == 3) {
            EXPECT_EQ(m.label, "b");
            EXPECT_EQ(b.record.count("a"), 1u);
            seen.push_back(b.probability());
        }
    });
    ASSERT_EQ(seen.size(), 2u);
    EXPECT_EQ(seen[0] + seen[1], Dyadic(1));
}

TEST(DeferMeasurements, layout_and_coin_example) {
    Protocol p(1);
    p.unitary(segment(1, {Gate::h(0)})).measure(0, "m").decide(BoolExpr::var("m"), !BoolExpr::var("m"));
    DeferredCircuit d = defer_measurements(p);
    EXPECT_EQ(d.record_qubits.at("m"), 2u);
    EXPECT_EQ(d.circuit.output(), d.verdict_qubit);
    for (const Gate &g : d.circuit.gates()) {
        EXPECT_LT(g.target(), d.circuit.width());
    }
    StateVector s = simulate(d.circuit);
    EXPECT_EQ(s.measure_prob(d.verdict_qubit), Dyadic(1, 1));
    EXPECT_EQ(s.measure_prob(p.width()), Dyadic(0));  // constant-one qubit restored
}

TEST(DeferMeasurements, constant_verdicts) {
    Protocol never(1);
    never.unitary(segment(1, {Gate::h(0)})).measure(0, "m");
    DeferredCircuit d = defer_measurements(never);
    EXPECT_EQ(simulate(d.circuit).measure_prob(d.verdict_qubit), Dyadic(0));

    Protocol always(1);
    always.decide(BoolExpr::constant(true), BoolExpr::constant(false));
    DeferredCircuit e = defer_measurements(always);
    EXPECT_EQ(simulate(e.circuit).measure_prob(e.verdict_qubit), Dyadic(1));
}

namespace {

BoolExpr random_formula(std::mt19937_64 &rng, const std::vector<std::string> &labels, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 1);
    int k = pick(rng);
    if (k == 0 || labels.empty()) {
        return BoolExpr::constant(rng() & 1);
    }
    if (k == 1) {
        return BoolExpr::var(labels[rng() % labels.size()]);
    }
    if (k == 2) {
        return !random_formula(rng, labels, depth - 1);
    }
    if (k == 3) {
        return random_formula(rng, labels, depth - 1) && random_formula(rng, labels, depth - 1);
    }
    return random_formula(rng, labels, depth - 1) || random_formula(rng, labels, depth - 1);
}

}  // namespace

TEST(DeferMeasurements, matches_branching_on_random_protocols) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; trial++) {
        std::size_t width = 2 + trial % 4;
        Protocol p(width);
        std::vector<std::string> labels;
        std::uniform_int_distribution<std::size_t> q(0, width - 1);
        int rounds = 1 + trial % 4;
        for (int r = 0; r < rounds; r++) {
            p.unitary(qcma::testing::random_circuit(rng, width, 1 + rng() % 5));
            std::string label = "m" + std::to_string(r);
            p.measure(q(rng), label);
            labels.push_back(label);
            if (rng() % 2) {
                p.decide(random_formula(rng, labels, 2), random_formula(rng, labels, 2));
            }
        }
        ProtocolOutcome branching = run_protocol(p);
        DeferredCircuit d = defer_measurements(p);
        StateVector s = simulate(d.circuit);
        EXPECT_EQ(s.measure_prob(d.verdict_qubit), branching.accept) << "trial " << trial;
    }
}
