#ifndef QCMA_TESTS_TEST_UTIL_H
#define QCMA_TESTS_TEST_UTIL_H

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qcma/circuit.h"
#include "qcma/exact.h"
#include "qcma/rewind.h"
#include "qcma/state_vector.h"

namespace qcma::testing {

/// Dense double-precision simulator, independent of StateVector.
class DenseState {
   public:
    explicit DenseState(std::size_t width) : width_(width), amps_(std::size_t{1} << width, 0.0) { amps_[0] = 1.0; }

    void apply(const Gate &g) {
        std::size_t n = amps_.size();
        switch (g.kind) {
            case GateKind::X: {
                std::size_t m = std::size_t{1} << g.qubits[0];
                for (std::size_t i = 0; i < n; i++) {
                    if (!(i & m)) {
                        std::swap(amps_[i], amps_[i | m]);
                    }
                }
                break;
            }
            case GateKind::CCX: {
                std::size_t c = (std::size_t{1} << g.qubits[0]) | (std::size_t{1} << g.qubits[1]);
                std::size_t t = std::size_t{1} << g.qubits[2];
                for (std::size_t i = 0; i < n; i++) {
                    if ((i & c) == c && !(i & t)) {
                        std::swap(amps_[i], amps_[i | t]);
                    }
                }
                break;
            }
            case GateKind::H: {
                std::size_t m = std::size_t{1} << g.qubits[0];
                const double r = 1.0 / std::sqrt(2.0);
                for (std::size_t i = 0; i < n; i++) {
                    if (!(i & m)) {
                        double a = amps_[i];
                        double b = amps_[i | m];
                        amps_[i] = r * (a + b);
                        amps_[i | m] = r * (a - b);
                    }
                }
                break;
            }
        }
    }

    void apply(const Circuit &c) {
        for (const Gate &g : c.gates()) {
            apply(g);
        }
    }

    double prob_one(std::size_t q) const {
        double p = 0;
        for (std::size_t i = 0; i < amps_.size(); i++) {
            if (i >> q & 1) {
                p += amps_[i] * amps_[i];
            }
        }
        return p;
    }

    const std::vector<double> &amps() const { return amps_; }

   private:
    std::size_t width_;
    std::vector<double> amps_;
};

inline BasisIndex index_from_bits(std::size_t width, std::uint64_t bits) {
    BasisIndex idx(width);
    for (std::size_t q = 0; q < width && q < 64; q++) {
        if (bits >> q & 1) {
            idx.flip(q);
        }
    }
    return idx;
}

/// Sets the listed qubits of a fresh basis index from the low bits of `value`
/// (value bit i goes to qubits[i]).
inline BasisIndex index_on(std::size_t width, const std::vector<std::size_t> &qubits, std::uint64_t value) {
    BasisIndex idx(width);
    for (std::size_t i = 0; i < qubits.size(); i++) {
        if (value >> i & 1) {
            idx.flip(qubits[i]);
        }
    }
    return idx;
}

/// Runs `gates` on a basis state and returns the single output basis index
/// with its sign, or fails if the output is not a signed basis state.
struct BasisImage {
    bool is_basis = false;
    BasisIndex index;
    int sign = 0;
};

inline BasisImage basis_image(std::size_t width, const std::vector<Gate> &gates, const BasisIndex &input) {
    StateVector s = StateVector::basis(width, input);
    for (const Gate &g : gates) {
        s.apply(g);
    }
    StateVector r = s.reduced();
    BasisImage out;
    if (r.support_size() != 1 || r.half_exp() != 0) {
        return out;
    }
    const auto &e = r.entries()[0];
    if (e.num != 1 && e.num != -1) {
        return out;
    }
    out.is_basis = true;
    out.index = e.index;
    out.sign = e.num > 0 ? 1 : -1;
    return out;
}

inline Circuit random_circuit(std::mt19937_64 &rng, std::size_t width, std::size_t gates) {
    Circuit c(width);
    std::uniform_int_distribution<std::size_t> q(0, width - 1);
    std::uniform_int_distribution<int> kind(0, width >= 3 ? 2 : 1);
    for (std::size_t i = 0; i < gates; i++) {
        int k = kind(rng);
        if (k == 0) {
            c.append(Gate::h(q(rng)));
        } else if (k == 1) {
            c.append(Gate::x(q(rng)));
        } else {
            std::size_t a = q(rng), b = q(rng), t = q(rng);
            while (b == a) {
                b = q(rng);
            }
            while (t == a || t == b) {
                t = q(rng);
            }
            c.append(Gate::ccx(a, b, t));
        }
    }
    c.set_output(q(rng));
    return c;
}

/// A verifier template together with the witness used in honest runs and
/// the completeness threshold it meets.
struct CorpusEntry {
    std::string name;
    Circuit circuit;
    Bits honest_witness;
    Rational c;
    LMode mode = LMode::HadamardCount;
};

inline std::vector<CorpusEntry> yes_corpus() {
    struct Raw {
        const char *name;
        const char *text;
        const char *witness;
        const char *c;
        LMode mode;
    };
    const Raw raw[] = {
        {"and2", "qubits 3\nccx 0 1 2\nwitness 0 1\noutput 2\n", "11", "2/3", LMode::HadamardCount},
        {"coin", "qubits 2\nh 1\nwitness 0\noutput 1\n", "0", "1/2", LMode::HadamardCount},
        {"always", "qubits 1\nx 0\noutput 0\n", "", "2/3", LMode::GateCount},
        {"or2", "qubits 3\nx 0\nx 1\nccx 0 1 2\nx 2\nx 0\nx 1\nwitness 0 1\noutput 2\n", "01", "2/3",
         LMode::HadamardCount},
        {"three_quarters", "qubits 3\nh 0\nh 1\nx 0\nx 1\nccx 0 1 2\nx 2\nx 0\nx 1\noutput 2\n", "", "2/3",
         LMode::HadamardCount},
        {"five_eighths",
         "qubits 5\nh 0\nh 1\nh 2\nccx 1 2 3\nx 0\nx 3\nccx 0 3 4\nx 4\nx 0\nx 3\noutput 4\n", "", "1/2",
         LMode::HadamardCount},
        {"seven_eighths", "qubits 5\nh 0\nh 1\nh 2\nx 0\nx 1\nccx 0 1 3\nx 2\nccx 2 3 4\nx 4\noutput 4\n", "",
         "2/3", LMode::HadamardCount},
        {"gated_coin", "qubits 5\nh 2\nccx 0 1 4\nx 4\nx 2\nccx 4 2 3\nx 3\nwitness 0 1\noutput 3\n", "11", "2/3",
         LMode::HadamardCount},
        {"xor_pairs", "qubits 6\nh 0\nh 1\nh 2\nh 3\nh 4\nccx 0 1 5\nccx 2 3 5\nx 5\noutput 5\n", "", "1/2",
         LMode::HadamardCount},
        {"hh_identity", "qubits 2\nh 0\nh 0\nx 0\nwitness 1\noutput 0\n", "1", "2/3", LMode::HadamardCount},
        {"interfere", "qubits 3\nh 0\nh 1\nccx 0 1 2\nh 0\nh 1\nx 0\noutput 0\n", "", "1/2", LMode::HadamardCount},
        {"coin_gatecount", "qubits 3\nh 0\nx 1\nccx 0 1 2\nx 2\nwitness 1\noutput 2\n", "0", "1/2",
         LMode::GateCount},
    };
    std::vector<CorpusEntry> out;
    for (const Raw &r : raw) {
        out.push_back({r.name, parse_circuit(r.text), parse_bits(r.witness), Rational::parse(r.c), r.mode});
    }
    return out;
}

/// Verifiers whose best witness accepts with probability at most 1/3.
inline std::vector<CorpusEntry> no_corpus() {
    struct Raw {
        const char *name;
        const char *text;
        LMode mode;
    };
    const Raw raw[] = {
        {"never", "qubits 1\noutput 0\n", LMode::HadamardCount},
        {"quarter", "qubits 3\nh 0\nh 1\nccx 0 1 2\noutput 2\n", LMode::HadamardCount},
        {"quarter_gatecount", "qubits 4\nh 0\nh 1\nccx 0 1 2\nx 3\nx 3\nx 3\nx 3\nx 3\noutput 2\n",
         LMode::GateCount},
        {"witness8_quarter",
         "qubits 12\nh 8\nh 9\nccx 8 9 10\nccx 10 0 11\nwitness 0 1 2 3 4 5 6 7\noutput 11\n",
         LMode::HadamardCount},
        {"witness3_quarter", "qubits 8\nh 3\nh 4\nccx 0 1 5\nccx 3 4 6\nccx 5 6 7\noutput 7\nwitness 0 1 2\n",
         LMode::HadamardCount},
    };
    std::vector<CorpusEntry> out;
    for (const Raw &r : raw) {
        Circuit c = parse_circuit(r.text);
        out.push_back({r.name, c, Bits(c.witness_qubits().size(), false), Rational(2, 3), r.mode});
    }
    return out;
}

}  // namespace qcma::testing

#endif
