#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace uebkit {

__extension__ using int128_t = __int128;
__extension__ using uint128_t = unsigned __int128;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values that fit in 64-bit numerator/denominator are kept inline; anything
/// larger is promoted to a shared, immutable GMP rational. The representation
/// is canonical, so equality is field-wise.
class Rational {
public:
    Rational() noexcept = default;
    Rational(std::int64_t n) noexcept : num_(n) {}  // NOLINT: implicit from integers
    Rational(int n) noexcept : Rational(static_cast<std::int64_t>(n)) {}
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& q);

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    std::string str() const;
    mpq_class to_mpq() const;

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;
    bool is_small() const noexcept { return !big_; }

    /// Only valid for small values.
    std::int64_t small_num() const noexcept { return num_; }
    std::int64_t small_den() const noexcept { return den_; }

    Rational operator-() const;
    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && a.den_ == 1 && b.den_ == 1 && !__builtin_add_overflow(a.num_, b.num_, &r)) {
            return Rational(r);
        }
        return add_slow(a, b);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && a.den_ == 1 && b.den_ == 1 && !__builtin_sub_overflow(a.num_, b.num_, &r)) {
            return Rational(r);
        }
        return add_slow(a, -b);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && a.den_ == 1 && b.den_ == 1 && !__builtin_mul_overflow(a.num_, b.num_, &r)) {
            return Rational(r);
        }
        return mul_slow(a, b);
    }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        return eq_slow(a, b);
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// a^e for integer e (e < 0 inverts).
    friend Rational pow(const Rational& a, std::int64_t e);

    /// Exact square root when the value is the square of a rational.
    bool is_square() const;
    Rational sqrt_exact() const;

private:
    static Rational add_slow(const Rational& a, const Rational& b);
    static Rational mul_slow(const Rational& a, const Rational& b);
    static bool eq_slow(const Rational& a, const Rational& b);
    static Rational from_wide(int128_t num, int128_t den);
    static Rational from_mpq(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace uebkit
