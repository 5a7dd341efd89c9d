#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uebkit/cyclotomic.hpp"

namespace uebkit {

/// A declared, ordered set of formal phase symbols. Each symbol t satisfies
/// |t| = 1 and conj(t) = t^-1 and is algebraically independent of everything
/// else, so no power of t other than t^0 is a root of unity.
using SymbolAlphabet = std::shared_ptr<const std::vector<std::string>>;

SymbolAlphabet make_alphabet(std::vector<std::string> names);

/// Exact scalar: a finite sum of cyclotomic coefficients times monomials in
/// formal phase symbols. Without symbols this is just an element of Q(zeta_n).
///
/// Exponent vectors are canonical with trailing zeros trimmed, so the pure
/// cyclotomic part always has an empty exponent vector.
class PhasedScalar {
public:
    struct Term {
        std::vector<int> exponents;
        Cyclotomic coeff;
    };

    PhasedScalar() = default;
    PhasedScalar(const Cyclotomic& c);  // NOLINT: implicit embedding
    PhasedScalar(const Rational& r) : PhasedScalar(Cyclotomic(r)) {}  // NOLINT
    PhasedScalar(std::int64_t r) : PhasedScalar(Cyclotomic(r)) {}     // NOLINT
    PhasedScalar(int r) : PhasedScalar(Cyclotomic(r)) {}              // NOLINT

    static PhasedScalar zeta(int n, std::int64_t k = 1) { return PhasedScalar(Cyclotomic::zeta(n, k)); }
    /// coeff * prod_i symbol_i^exponents[i].
    static PhasedScalar monomial(SymbolAlphabet alphabet, std::vector<int> exponents, const Cyclotomic& coeff);
    static PhasedScalar symbol(const SymbolAlphabet& alphabet, std::string_view name, int exponent = 1);

    const SymbolAlphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const;
    bool has_symbols() const;
    /// Exactly one term.
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    std::optional<Cyclotomic> as_cyclotomic() const;
    std::optional<Rational> as_rational() const;
    /// lcm of the coefficient orders (1 for zero).
    int order() const;

    PhasedScalar conj() const;
    /// Only single-term values are invertible here.
    PhasedScalar inverse() const;
    PhasedScalar pow(std::int64_t e) const;
    PhasedScalar scaled(const Rational& r) const;
    PhasedScalar promote(int m) const;

    /// Replaces a symbol by a cyclotomic value (which should have modulus one).
    PhasedScalar substitute(std::string_view name, const Cyclotomic& value) const;

    /// Order of the value as a root of unity. Any formal symbol makes this none.
    std::optional<int> root_of_unity_order() const;
    bool is_unit_modulus() const;

    PhasedScalar operator-() const;
    friend PhasedScalar operator+(const PhasedScalar& a, const PhasedScalar& b);
    friend PhasedScalar operator-(const PhasedScalar& a, const PhasedScalar& b);
    friend PhasedScalar operator*(const PhasedScalar& a, const PhasedScalar& b);
    friend PhasedScalar operator/(const PhasedScalar& a, const PhasedScalar& b);
    PhasedScalar& operator+=(const PhasedScalar& b) { return *this = *this + b; }
    PhasedScalar& operator-=(const PhasedScalar& b) { return *this = *this - b; }
    PhasedScalar& operator*=(const PhasedScalar& b) { return *this = *this * b; }

    friend bool operator==(const PhasedScalar& a, const PhasedScalar& b);

    std::string str() const;

private:
    static PhasedScalar from_map(SymbolAlphabet alphabet, std::map<std::vector<int>, Cyclotomic> terms);

    SymbolAlphabet alphabet_;
    std::vector<Term> terms_;

    friend class PhasedAccumulator;
};

/// Returns the alphabet shared by both arguments (either may be empty); throws
/// std::invalid_argument when two different alphabets meet.
SymbolAlphabet merge_alphabets(const SymbolAlphabet& a, const SymbolAlphabet& b);

/// Sum-of-products accumulator used by the matrix kernels.
class PhasedAccumulator {
public:
    explicit PhasedAccumulator(int order) : order_(order), plain_(order) {}

    void add_product(const PhasedScalar& a, const PhasedScalar& b);
    PhasedScalar finish();

private:
    int order_;
    CyclotomicAccumulator plain_;
    std::map<std::vector<int>, CyclotomicAccumulator> symbolic_;
    SymbolAlphabet alphabet_;
};

}  // namespace uebkit
