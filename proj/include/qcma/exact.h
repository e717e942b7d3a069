#ifndef QCMA_EXACT_H
#define QCMA_EXACT_H

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcma {

using BigInt = boost::multiprecision::cpp_int;

class Rational;

/// A real number of the form num / 2^exp with exp >= 0.
///
/// Always canonical: num is odd or exp is zero, and zero is (0, 0). Two
/// Dyadics are equal iff their fields are equal.
class Dyadic {
   public:
    Dyadic() = default;
    Dyadic(BigInt num, std::uint64_t exp);
    // NOLINTNEXTLINE(google-explicit-constructor)
    Dyadic(std::int64_t value) : Dyadic(BigInt(value), 0) {}

    const BigInt &num() const { return num_; }
    std::uint64_t exp() const { return exp_; }
    bool is_zero() const { return num_ == 0; }

    /// Numerator of this value when written over 2^exp. Throws if the value
    /// needs a larger denominator.
    BigInt numerator_over(std::uint64_t exp) const;

    Rational to_rational() const;
    double approx() const;

    /// Serialized as `<num>/2^<exp>`.
    std::string str() const;
    static Dyadic parse(std::string_view text);

    friend Dyadic operator+(const Dyadic &a, const Dyadic &b);
    friend Dyadic operator-(const Dyadic &a, const Dyadic &b);
    friend Dyadic operator*(const Dyadic &a, const Dyadic &b);
    Dyadic operator-() const { return Dyadic(-num_, exp_); }

    friend bool operator==(const Dyadic &a, const Dyadic &b) = default;
    friend std::strong_ordering operator<=>(const Dyadic &a, const Dyadic &b);

   private:
    BigInt num_{0};
    std::uint64_t exp_{0};
};

/// Reduced fraction num / den with den > 0.
class Rational {
   public:
    Rational() = default;
    Rational(BigInt num, BigInt den);
    // NOLINTNEXTLINE(google-explicit-constructor)
    Rational(std::int64_t value) : num_(value), den_(1) {}

    const BigInt &num() const { return num_; }
    const BigInt &den() const { return den_; }

    /// Smallest integer >= this value.
    BigInt ceil() const;
    double approx() const;

    /// Serialized as `<num>/<den>`.
    std::string str() const;
    /// Accepts `N/D` or a bare integer `N`.
    static Rational parse(std::string_view text);

    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational &a, const Rational &b) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

   private:
    BigInt num_{0};
    BigInt den_{1};
};

/// Exact three-way comparison of a dyadic probability against a rational
/// threshold, by integer cross-multiplication.
std::strong_ordering dyadic_cmp(const Dyadic &a, const Rational &b);

/// An amplitude num / sqrt(2)^half_exp.
///
/// Canonical form repeatedly rewrites (even num, t >= 2) to (num/2, t-2);
/// zero is (0, 0). Addition is only defined between amplitudes whose
/// half_exps have equal parity; mixing parities would leave Z[1/2] and
/// indicates a simulator bug.
class Amp {
   public:
    Amp() = default;
    Amp(BigInt num, std::uint64_t half_exp);

    const BigInt &num() const { return num_; }
    std::uint64_t half_exp() const { return half_exp_; }

    Dyadic norm_sq() const;
    double approx() const;

    friend Amp operator+(const Amp &a, const Amp &b);
    friend Amp operator*(const Amp &a, const Amp &b);
    Amp operator-() const { return Amp(-num_, half_exp_); }

    friend bool operator==(const Amp &a, const Amp &b) = default;

   private:
    BigInt num_{0};
    std::uint64_t half_exp_{0};
};

inline Amp amp_add(const Amp &a, const Amp &b) { return a + b; }
inline Amp amp_mul(const Amp &a, const Amp &b) { return a * b; }
inline Dyadic amp_norm_sq(const Amp &a) { return a.norm_sq(); }

/// 2^exp as a BigInt.
BigInt pow2(std::uint64_t exp);

std::ostream &operator<<(std::ostream &out, const Dyadic &d);
std::ostream &operator<<(std::ostream &out, const Rational &r);
std::ostream &operator<<(std::ostream &out, const Amp &a);

}  // namespace qcma

#endif
