#include "qcma/exact.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qcma {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lsb;

BigInt parse_bigint(std::string_view text, std::string_view what) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(text) + "'");
    }
    BigInt out{std::string(digits)};
    return text.front() == '-' ? BigInt(-out) : out;
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return out;
}

// Divides out common factors of two, leaving num odd or exp zero.
void reduce_dyadic(BigInt &num, std::uint64_t &exp) {
    if (num == 0) {
        exp = 0;
        return;
    }
    std::uint64_t twos = std::min<std::uint64_t>(lsb(abs(num)), exp);
    if (twos > 0) {
        num >>= twos;  // exact: num is divisible by 2^twos
        exp -= twos;
    }
}

// Division by 4 is a shift by two in the numerator-over-root-two picture.
void reduce_amp(BigInt &num, std::uint64_t &half_exp) {
    if (num == 0) {
        half_exp = 0;
        return;
    }
    std::uint64_t twos = std::min<std::uint64_t>(lsb(abs(num)), half_exp / 2);
    if (twos > 0) {
        num >>= twos;
        half_exp -= 2 * twos;
    }
}

}  // namespace

BigInt pow2(std::uint64_t exp) {
    BigInt out = 1;
    out <<= exp;
    return out;
}

// ---------------------------------------------------------------- Dyadic

Dyadic::Dyadic(BigInt num, std::uint64_t exp) : num_(std::move(num)), exp_(exp) {
    reduce_dyadic(num_, exp_);
}

BigInt Dyadic::numerator_over(std::uint64_t exp) const {
    if (exp < exp_) {
        throw std::invalid_argument(
            "dyadic " + str() + " is not expressible over 2^" + std::to_string(exp));
    }
    return num_ << (exp - exp_);
}

Rational Dyadic::to_rational() const { return Rational(num_, pow2(exp_)); }

double Dyadic::approx() const {
    return std::ldexp(num_.convert_to<double>(), -static_cast<int>(std::min<std::uint64_t>(exp_, 100000)));
}

std::string Dyadic::str() const { return num_.str() + "/2^" + std::to_string(exp_); }

Dyadic Dyadic::parse(std::string_view text) {
    auto slash = text.find("/2^");
    if (slash == std::string_view::npos) {
        throw std::invalid_argument("malformed dyadic (expected num/2^exp): '" + std::string(text) + "'");
    }
    return Dyadic(parse_bigint(text.substr(0, slash), "dyadic numerator"),
                  parse_u64(text.substr(slash + 3), "dyadic exponent"));
}

Dyadic operator+(const Dyadic &a, const Dyadic &b) {
    std::uint64_t e = std::max(a.exp_, b.exp_);
    return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
}

Dyadic operator-(const Dyadic &a, const Dyadic &b) { return a + (-b); }

Dyadic operator*(const Dyadic &a, const Dyadic &b) { return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_); }

std::strong_ordering operator<=>(const Dyadic &a, const Dyadic &b) {
    std::uint64_t e = std::max(a.exp_, b.exp_);
    BigInt lhs = a.num_ << (e - a.exp_);
    BigInt rhs = b.num_ << (e - b.exp_);
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    return lhs == rhs ? std::strong_ordering::equal : std::strong_ordering::greater;
}

// -------------------------------------------------------------- Rational

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

BigInt Rational::ceil() const {
    BigInt q = num_ / den_;  // truncates toward zero
    if (q * den_ < num_) {
        ++q;
    }
    return q;
}

double Rational::approx() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_bigint(text, "rational"), 1);
    }
    BigInt den = parse_bigint(text.substr(slash + 1), "rational denominator");
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    }
    return Rational(parse_bigint(text.substr(0, slash), "rational numerator"), den);
}

Rational operator+(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational &a, const Rational &b) { return a + (-b); }

Rational operator*(const Rational &a, const Rational &b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }

Rational operator/(const Rational &a, const Rational &b) {
    if (b.num_ == 0) {
        throw std::domain_error("rational division by zero");
    }
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    return lhs == rhs ? std::strong_ordering::equal : std::strong_ordering::greater;
}

std::strong_ordering dyadic_cmp(const Dyadic &a, const Rational &b) {
    BigInt lhs = a.num() * b.den();
    BigInt rhs = b.num() << a.exp();
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    return lhs == rhs ? std::strong_ordering::equal : std::strong_ordering::greater;
}

// ------------------------------------------------------------------- Amp

Amp::Amp(BigInt num, std::uint64_t half_exp) : num_(std::move(num)), half_exp_(half_exp) {
    reduce_amp(num_, half_exp_);
}

Dyadic Amp::norm_sq() const { return Dyadic(num_ * num_, half_exp_); }

double Amp::approx() const {
    return num_.convert_to<double>() * std::pow(2.0, -0.5 * static_cast<double>(half_exp_));
}

Amp operator+(const Amp &a, const Amp &b) {
    if (a.num_ == 0) {
        return b;
    }
    if (b.num_ == 0) {
        return a;
    }
    if ((a.half_exp_ ^ b.half_exp_) & 1) {
        throw std::logic_error("adding amplitudes with half_exp parities " + std::to_string(a.half_exp_) + " and " +
                               std::to_string(b.half_exp_));
    }
    const Amp &lo = a.half_exp_ <= b.half_exp_ ? a : b;
    const Amp &hi = a.half_exp_ <= b.half_exp_ ? b : a;
    BigInt scaled = lo.num_ << ((hi.half_exp_ - lo.half_exp_) / 2);
    return Amp(scaled + hi.num_, hi.half_exp_);
}

Amp operator*(const Amp &a, const Amp &b) { return Amp(a.num_ * b.num_, a.half_exp_ + b.half_exp_); }

std::ostream &operator<<(std::ostream &out, const Dyadic &d) { return out << d.str(); }
std::ostream &operator<<(std::ostream &out, const Rational &r) { return out << r.str(); }
std::ostream &operator<<(std::ostream &out, const Amp &a) {
    return out << "(" << a.num() << ", " << a.half_exp() << ")";
}

}  // namespace qcma
