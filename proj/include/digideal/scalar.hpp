#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace digideal {

/// Exact rational number, always in lowest terms with a positive denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    Scalar(std::int64_t num, std::int64_t den) {
        if (den == 0) throw UsageError("Scalar: zero denominator");
        value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        value_.canonicalize();
    }
    Scalar(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw UsageError("Scalar: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "7", "-3", "22/7".
    static Scalar parse(std::string_view text) {
        std::string s(text);
        mpq_class q;
        if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("invalid rational literal '" + s + "'");
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
        q.canonicalize();
        return Scalar(q);
    }

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
    Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
    Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw UsageError("Scalar: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.value_)); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    [[nodiscard]] std::string to_string() const { return value_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    mpq_class value_{0};
};

}  // namespace digideal
