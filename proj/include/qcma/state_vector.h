#ifndef QCMA_STATE_VECTOR_H
#define QCMA_STATE_VECTOR_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "qcma/circuit.h"
#include "qcma/exact.h"

namespace qcma {

/// A computational basis index of arbitrary width. Bit q is qubit q.
class BasisIndex {
   public:
    BasisIndex() = default;
    explicit BasisIndex(std::size_t width) : words_((width + 63) / 64, 0) {}

    bool test(std::size_t q) const { return (words_[q >> 6] >> (q & 63)) & 1; }
    void flip(std::size_t q) { words_[q >> 6] ^= std::uint64_t{1} << (q & 63); }
    void set(std::size_t q, bool value) {
        if (test(q) != value) {
            flip(q);
        }
    }
    bool is_zero() const;

    /// Bits [begin, begin + count) as an integer, bit `begin` least significant.
    std::uint64_t extract(std::size_t begin, std::size_t count) const;
    std::string str(std::size_t width) const;

    friend bool operator==(const BasisIndex &a, const BasisIndex &b) = default;
    friend bool operator<(const BasisIndex &a, const BasisIndex &b);

   private:
    boost::container::small_vector<std::uint64_t, 2> words_;
};

/// Sparse real state sum_i (num_i / sqrt(2)^half_exp) |i>.
///
/// Keys are unique and no stored numerator is zero. States reachable from
/// |0...0> by unitary gates satisfy sum num^2 = 2^half_exp; projected
/// (sub-normalized) branch states have sum num^2 = P(branch) * 2^half_exp.
class StateVector {
   public:
    struct Entry {
        BasisIndex index;
        BigInt num;
    };

    StateVector() = default;
    /// |0...0> on `width` qubits.
    explicit StateVector(std::size_t width);
    static StateVector basis(std::size_t width, const BasisIndex &index);
    static StateVector zero(std::size_t width, std::uint64_t half_exp = 0);

    std::size_t width() const { return width_; }
    std::uint64_t half_exp() const { return half_exp_; }
    const std::vector<Entry> &entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }

    void apply(const Gate &gate);
    void apply(const Circuit &circuit);

    /// sum num^2, i.e. squared norm scaled by 2^half_exp.
    BigInt weight() const;
    Dyadic norm_sq() const;
    bool is_normalized() const { return weight() == pow2(half_exp_); }

    /// Exact P(qubit = 1). Requires a normalized state.
    Dyadic measure_prob(std::size_t qubit) const;
    /// Squared norm of the part with `qubit` = 1, valid for sub-normalized states.
    Dyadic weight_where(std::size_t qubit, bool value) const;

    /// Unnormalized projection onto `qubit` = value. Shares half_exp.
    StateVector project(std::size_t qubit, bool value) const;
    /// Projection onto basis states matching `pred`.
    template <typename Pred>
    StateVector project_if(Pred pred) const {
        StateVector out = zero(width_, half_exp_);
        for (const Entry &e : entries_) {
            if (pred(e.index)) {
                out.entries_.push_back(e);
            }
        }
        return out;
    }

    Amp amplitude(const BasisIndex &index) const;

    /// The state multiplied by the dyadic scalar d (half_exp grows by 2*d.exp).
    StateVector scaled(const Dyadic &d) const;
    friend StateVector operator+(const StateVector &a, const StateVector &b);

    /// Same vector with every numerator divided by 2 while possible.
    StateVector reduced() const;
    /// Entries sorted by basis index.
    StateVector sorted() const;

    /// Exact equality of the represented vectors.
    friend bool same_vector(const StateVector &a, const StateVector &b);

   private:
    std::size_t width_ = 0;
    std::uint64_t half_exp_ = 0;
    std::vector<Entry> entries_;
};

struct BranchOutcome {
    Dyadic probability;
    StateVector post_state;
};

StateVector init_state(std::size_t width);
StateVector apply_gate(StateVector s, const Gate &g);
Dyadic measure_prob(const StateVector &s, std::size_t qubit);
/// Splits s into its qubit=0 and qubit=1 parts without renormalizing.
std::pair<BranchOutcome, BranchOutcome> branch_measure(const StateVector &s, std::size_t qubit);

/// Runs `c` from |0...0>, checking the support bound 2^hadamard_count as it goes.
StateVector simulate(const Circuit &c);

std::ostream &operator<<(std::ostream &out, const StateVector &s);

}  // namespace qcma

#endif
