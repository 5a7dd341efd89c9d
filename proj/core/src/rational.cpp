#include "uebkit/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace uebkit {

namespace {

using u128 = uint128_t;

u128 gcd_wide(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 abs_wide(int128_t v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

mpz_class to_mpz(int128_t v) {
    bool neg = v < 0;
    u128 m = abs_wide(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_wide(int128_t num, int128_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    u128 g = gcd_wide(abs_wide(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<int128_t>(g);
        den /= static_cast<int128_t>(g);
    }
    Rational r;
    if (num >= std::numeric_limits<std::int64_t>::min() && num <= kMax && den <= kMax) {
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    q.canonicalize();
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    Rational r;
    if (n.fits_slong_p() && d.fits_slong_p()) {
        r.num_ = n.get_si();
        r.den_ = d.get_si();
        return r;
    }
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    return from_mpq(std::move(q));
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool Rational::is_integer() const {
    if (big_) return big_->get_den() == 1;
    return den_ == 1;
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

Rational Rational::operator-() const {
    if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    return from_mpq(-to_mpq());
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    if (!big_) return from_wide(den_, num_);
    return from_mpq(1 / *big_);
}

Rational Rational::add_slow(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        int128_t n = static_cast<int128_t>(a.num_) * b.den_ + static_cast<int128_t>(b.num_) * a.den_;
        int128_t d = static_cast<int128_t>(a.den_) * b.den_;
        return from_wide(n, d);
    }
    return from_mpq(a.to_mpq() + b.to_mpq());
}

Rational Rational::mul_slow(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        int128_t n = static_cast<int128_t>(a.num_) * b.num_;
        int128_t d = static_cast<int128_t>(a.den_) * b.den_;
        return from_wide(n, d);
    }
    return from_mpq(a.to_mpq() * b.to_mpq());
}

bool Rational::eq_slow(const Rational& a, const Rational& b) {
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a big value never equals a small one
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        int128_t l = static_cast<int128_t>(a.num_) * b.den_;
        int128_t r = static_cast<int128_t>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

Rational pow(const Rational& a, std::int64_t e) {
    if (e < 0) return pow(a.inverse(), -e);
    Rational result(1);
    Rational base = a;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

bool Rational::is_square() const {
    if (sign() < 0) return false;
    mpq_class q = to_mpq();
    return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

Rational Rational::sqrt_exact() const {
    if (!is_square()) throw std::domain_error("Rational: " + str() + " is not a rational square");
    mpq_class q = to_mpq();
    mpz_class n = sqrt(q.get_num());
    mpz_class d = sqrt(q.get_den());
    return Rational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace uebkit
