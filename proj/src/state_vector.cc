#include "qcma/state_vector.h"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace qcma {

// ------------------------------------------------------------- BasisIndex

bool BasisIndex::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::uint64_t BasisIndex::extract(std::size_t begin, std::size_t count) const {
    assert(count <= 64);
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < count; i++) {
        out |= std::uint64_t{test(begin + i)} << i;
    }
    return out;
}

std::string BasisIndex::str(std::size_t width) const {
    std::string out;
    for (std::size_t q = 0; q < width; q++) {
        out.push_back(test(q) ? '1' : '0');
    }
    return out;
}

bool operator<(const BasisIndex &a, const BasisIndex &b) {
    return std::lexicographical_compare(a.words_.rbegin(), a.words_.rend(), b.words_.rbegin(), b.words_.rend());
}

// ------------------------------------------------------------ StateVector

namespace {

bool index_less(const StateVector::Entry &a, const StateVector::Entry &b) { return a.index < b.index; }

// Sums entries sharing an index and drops zeros. Input must be sorted.
void merge_sorted(std::vector<StateVector::Entry> &entries) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i + 1;
        BigInt sum = std::move(entries[i].num);
        while (j < entries.size() && entries[j].index == entries[i].index) {
            sum += entries[j].num;
            j++;
        }
        if (sum != 0) {
            if (out != i) {
                entries[out].index = std::move(entries[i].index);
            }
            entries[out].num = std::move(sum);
            out++;
        }
        i = j;
    }
    entries.resize(out);
}

}  // namespace

StateVector::StateVector(std::size_t width) : width_(width) {
    entries_.push_back({BasisIndex(width), BigInt(1)});
}

StateVector StateVector::basis(std::size_t width, const BasisIndex &index) {
    StateVector out = zero(width);
    out.entries_.push_back({index, BigInt(1)});
    return out;
}

StateVector StateVector::zero(std::size_t width, std::uint64_t half_exp) {
    StateVector out;
    out.width_ = width;
    out.half_exp_ = half_exp;
    return out;
}

void StateVector::apply(const Gate &gate) {
    for (std::size_t i = 0; i < gate.arity(); i++) {
        if (gate.qubits[i] >= width_) {
            throw std::invalid_argument("gate " + gate.str() + " out of range for width " + std::to_string(width_));
        }
    }
    switch (gate.kind) {
        case GateKind::X:
            for (Entry &e : entries_) {
                e.index.flip(gate.qubits[0]);
            }
            return;
        case GateKind::CCX:
            for (Entry &e : entries_) {
                if (e.index.test(gate.qubits[0]) && e.index.test(gate.qubits[1])) {
                    e.index.flip(gate.qubits[2]);
                }
            }
            return;
        case GateKind::H: {
            std::size_t q = gate.qubits[0];
            std::vector<Entry> next;
            next.reserve(2 * entries_.size());
            for (Entry &e : entries_) {
                bool one = e.index.test(q);
                BasisIndex lo = e.index;
                lo.set(q, false);
                BasisIndex hi = lo;
                hi.flip(q);
                next.push_back({std::move(lo), e.num});
                next.push_back({std::move(hi), one ? BigInt(-e.num) : std::move(e.num)});
            }
            std::sort(next.begin(), next.end(), index_less);
            merge_sorted(next);
            entries_ = std::move(next);
            half_exp_ += 1;
            return;
        }
    }
}

void StateVector::apply(const Circuit &circuit) {
    if (circuit.width() > width_) {
        throw std::invalid_argument("circuit of width " + std::to_string(circuit.width()) +
                                    " applied to state of width " + std::to_string(width_));
    }
    for (const Gate &g : circuit.gates()) {
        apply(g);
    }
}

BigInt StateVector::weight() const {
    BigInt total = 0;
    for (const Entry &e : entries_) {
        total += e.num * e.num;
    }
    return total;
}

Dyadic StateVector::norm_sq() const { return Dyadic(weight(), half_exp_); }

Dyadic StateVector::weight_where(std::size_t qubit, bool value) const {
    BigInt total = 0;
    for (const Entry &e : entries_) {
        if (e.index.test(qubit) == value) {
            total += e.num * e.num;
        }
    }
    return Dyadic(total, half_exp_);
}

Dyadic StateVector::measure_prob(std::size_t qubit) const {
    if (qubit >= width_) {
        throw std::invalid_argument("qubit " + std::to_string(qubit) + " out of range");
    }
    if (!is_normalized()) {
        throw std::logic_error("measure_prob on a state with squared norm " + norm_sq().str() + " (expected 1)");
    }
    return weight_where(qubit, true);
}

StateVector StateVector::project(std::size_t qubit, bool value) const {
    return project_if([&](const BasisIndex &i) { return i.test(qubit) == value; });
}

Amp StateVector::amplitude(const BasisIndex &index) const {
    for (const Entry &e : entries_) {
        if (e.index == index) {
            return Amp(e.num, half_exp_);
        }
    }
    return {};
}

StateVector StateVector::scaled(const Dyadic &d) const {
    StateVector out = zero(width_, half_exp_ + 2 * d.exp());
    if (d.is_zero()) {
        return out;
    }
    out.entries_.reserve(entries_.size());
    for (const Entry &e : entries_) {
        out.entries_.push_back({e.index, e.num * d.num()});
    }
    return out;
}

namespace {

// Rewrites `s`'s numerators over sqrt(2)^target, target >= half_exp with equal parity.
std::vector<StateVector::Entry> lifted(const StateVector &s, std::uint64_t target) {
    std::uint64_t shift = (target - s.half_exp()) / 2;
    std::vector<StateVector::Entry> out;
    out.reserve(s.entries().size());
    for (const auto &e : s.entries()) {
        out.push_back({e.index, e.num << shift});
    }
    return out;
}

}  // namespace

StateVector operator+(const StateVector &a, const StateVector &b) {
    if (a.width_ != b.width_) {
        throw std::invalid_argument("adding states of different widths");
    }
    if (a.entries_.empty()) {
        return b;
    }
    if (b.entries_.empty()) {
        return a;
    }
    if ((a.half_exp_ ^ b.half_exp_) & 1) {
        throw std::logic_error("adding states with half_exp parities " + std::to_string(a.half_exp_) + " and " +
                               std::to_string(b.half_exp_));
    }
    std::uint64_t t = std::max(a.half_exp_, b.half_exp_);
    StateVector out = StateVector::zero(a.width_, t);
    out.entries_ = lifted(a, t);
    auto rhs = lifted(b, t);
    out.entries_.insert(out.entries_.end(), std::make_move_iterator(rhs.begin()), std::make_move_iterator(rhs.end()));
    std::sort(out.entries_.begin(), out.entries_.end(), index_less);
    merge_sorted(out.entries_);
    return out;
}

StateVector StateVector::reduced() const {
    StateVector out = *this;
    if (out.entries_.empty()) {
        out.half_exp_ = 0;
        return out;
    }
    std::uint64_t twos = out.half_exp_ / 2;
    for (const Entry &e : out.entries_) {
        twos = std::min<std::uint64_t>(twos, boost::multiprecision::lsb(boost::multiprecision::abs(e.num)));
    }
    if (twos > 0) {
        for (Entry &e : out.entries_) {
            e.num >>= twos;
        }
        out.half_exp_ -= 2 * twos;
    }
    return out;
}

StateVector StateVector::sorted() const {
    StateVector out = *this;
    std::sort(out.entries_.begin(), out.entries_.end(), index_less);
    return out;
}

bool same_vector(const StateVector &a, const StateVector &b) {
    if (a.width_ != b.width_) {
        return false;
    }
    StateVector ra = a.reduced().sorted();
    StateVector rb = b.reduced().sorted();
    if (ra.entries_.empty() || rb.entries_.empty()) {
        return ra.entries_.empty() && rb.entries_.empty();
    }
    // Nonzero vectors with different half_exp parity differ by a factor of
    // sqrt(2) per entry, which no integer ratio can absorb.
    if ((ra.half_exp_ ^ rb.half_exp_) & 1) {
        return false;
    }
    std::uint64_t t = std::max(ra.half_exp_, rb.half_exp_);
    auto ea = lifted(ra, t);
    auto eb = lifted(rb, t);
    if (ea.size() != eb.size()) {
        return false;
    }
    for (std::size_t i = 0; i < ea.size(); i++) {
        if (!(ea[i].index == eb[i].index) || ea[i].num != eb[i].num) {
            return false;
        }
    }
    return true;
}

StateVector init_state(std::size_t width) {
    if (width == 0) {
        throw std::invalid_argument("state width must be at least 1");
    }
    return StateVector(width);
}

StateVector apply_gate(StateVector s, const Gate &g) {
    s.apply(g);
    return s;
}

Dyadic measure_prob(const StateVector &s, std::size_t qubit) { return s.measure_prob(qubit); }

std::pair<BranchOutcome, BranchOutcome> branch_measure(const StateVector &s, std::size_t qubit) {
    if (qubit >= s.width()) {
        throw std::invalid_argument("qubit " + std::to_string(qubit) + " out of range");
    }
    StateVector zero = s.project(qubit, false);
    StateVector one = s.project(qubit, true);
    Dyadic p0 = zero.norm_sq();
    Dyadic p1 = one.norm_sq();
    return {BranchOutcome{p0, std::move(zero)}, BranchOutcome{p1, std::move(one)}};
}

StateVector simulate(const Circuit &c) {
    StateVector s = init_state(std::max<std::size_t>(c.width(), 1));
    std::size_t hadamards = 0;
    for (const Gate &g : c.gates()) {
        s.apply(g);
        if (g.kind == GateKind::H) {
            hadamards++;
            if (hadamards < 63 && s.support_size() > (std::size_t{1} << hadamards)) {
                throw std::logic_error("support exceeded 2^(hadamards so far)");
            }
        }
#ifndef NDEBUG
        assert(s.is_normalized());
#endif
    }
    return s;
}

std::ostream &operator<<(std::ostream &out, const StateVector &s) {
    out << "StateVector(width=" << s.width() << ", half_exp=" << s.half_exp() << ") {";
    bool first = true;
    for (const auto &e : s.sorted().entries()) {
        out << (first ? " " : ", ") << e.index.str(s.width()) << "->" << e.num;
        first = false;
    }
    return out << " }";
}

}  // namespace qcma
