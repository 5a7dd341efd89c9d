#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uebkit/rational.hpp"

namespace uebkit {

/// Integer polynomial, coefficients in ascending degree.
using IntPolynomial = std::vector<std::int64_t>;

/// The n-th cyclotomic polynomial, i.e. the minimal polynomial of exp(2 pi i / n).
IntPolynomial cyclotomic_polynomial(int n);

int euler_phi(int n);

/// Per-order arithmetic tables for Q(zeta_n). Instances are created once per
/// order and live for the rest of the process.
struct CyclotomicField {
    int order = 1;
    int degree = 1;
    IntPolynomial minimal_polynomial;
    /// reduction[k - degree] holds x^k mod Phi_n for degree <= k < order.
    std::vector<std::vector<std::int64_t>> reduction;

    static const CyclotomicField& get(int n);
};

/// Element of Q(zeta_n) in canonical form: the residue modulo Phi_n, stored as
/// coefficients of zeta_n^0 .. zeta_n^(deg Phi_n - 1). Zero has no coefficients.
///
/// Mixed-order operands are promoted to the lcm of their orders. Orders are
/// never minimized automatically.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(Rational(0), 1) {}
    Cyclotomic(const Rational& r) : Cyclotomic(r, 1) {}  // NOLINT: rationals embed
    Cyclotomic(std::int64_t r) : Cyclotomic(Rational(r), 1) {}  // NOLINT
    Cyclotomic(int r) : Cyclotomic(Rational(r), 1) {}           // NOLINT
    Cyclotomic(const Rational& r, int order);

    /// zeta_n^k for any integer k.
    static Cyclotomic zeta(int n, std::int64_t k = 1);

    /// Reduces sum_k raw[k] zeta_n^k (raw.size() == n) to canonical form.
    static Cyclotomic from_power_coefficients(int n, std::vector<Rational> raw);

    int order() const noexcept { return field_->order; }
    int degree() const noexcept { return field_->degree; }
    const CyclotomicField& field() const noexcept { return *field_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    /// Coefficient of zeta_n^k in the canonical basis (k < degree).
    Rational coeff(int k) const;
    const std::vector<Rational>& dense() const noexcept { return coeffs_; }
    /// Nonzero canonical coefficients as (exponent, value).
    std::vector<std::pair<int, Rational>> terms() const;
    std::size_t term_count() const;

    /// Re-expresses the value in Q(zeta_m); m must be a multiple of order().
    Cyclotomic promote(int m) const;

    Cyclotomic conj() const;
    /// The automorphism zeta_n -> zeta_n^k, gcd(k, n) = 1.
    Cyclotomic galois(int k) const;
    Cyclotomic inverse() const;
    /// Product over all Galois conjugates; always rational.
    Rational norm() const;
    Cyclotomic pow(std::int64_t e) const;

    /// If the value equals zeta_m^j for m = lcm(2, order), returns (m, j) with 0 <= j < m.
    std::optional<std::pair<int, int>> as_root_of_unity() const;
    /// Least m with a^m = 1; none when the value is not a root of unity. Throws on zero.
    std::optional<int> root_of_unity_order() const;

    Cyclotomic operator-() const;
    Cyclotomic scaled(const Rational& r) const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    std::string str() const;

private:
    explicit Cyclotomic(const CyclotomicField* field) : field_(field) {}
    void trim();

    const CyclotomicField* field_;
    std::vector<Rational> coeffs_;

    friend class CyclotomicAccumulator;
};

/// Sums of products in a fixed ambient order with a single reduction at the end.
/// Operands must have orders dividing the accumulator order.
class CyclotomicAccumulator {
public:
    explicit CyclotomicAccumulator(int order);

    void add(const Cyclotomic& a);
    void add_product(const Cyclotomic& a, const Cyclotomic& b);
    /// Returns the canonical sum and resets the accumulator.
    Cyclotomic finish();
    bool empty() const noexcept { return empty_; }
    int order() const noexcept { return field_->order; }

private:
    const CyclotomicField* field_;
    std::vector<Rational> raw_;
    bool empty_ = true;
};

std::int64_t lcm_order(std::int64_t a, std::int64_t b);

}  // namespace uebkit
