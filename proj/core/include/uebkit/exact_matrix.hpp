#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "uebkit/phased_scalar.hpp"

namespace uebkit {

/// Dense matrix over PhasedScalar with a rational global scale. The value of
/// the matrix is scale() * entries; keeping the scale separate lets
/// unnormalized Fourier matrices stay inside a cyclotomic field.
class ExactMatrix {
public:
    ExactMatrix() = default;
    /// Zero matrix.
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<PhasedScalar> entries, Rational scale = Rational(1));

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix diagonal(const std::vector<PhasedScalar>& diag);
    /// P e_j = e_{perm[j]}.
    static ExactMatrix permutation(const std::vector<std::size_t>& perm);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const Rational& scale() const noexcept { return scale_; }
    const std::vector<PhasedScalar>& entries() const noexcept { return entries_; }

    /// Raw entry, without the scale.
    const PhasedScalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    PhasedScalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    /// Entry including the scale.
    PhasedScalar value(std::size_t i, std::size_t j) const;

    /// Same value with scale folded into the entries.
    ExactMatrix normalized() const;
    ExactMatrix with_scale(const Rational& s) const;
    ExactMatrix times(const PhasedScalar& c) const;

    ExactMatrix dagger() const;
    ExactMatrix transpose() const;
    PhasedScalar trace() const;
    /// lcm of all entry orders.
    int order() const;
    bool has_symbols() const;

    std::size_t nonzero_count() const;
    bool is_zero() const;
    bool is_monomial() const;
    bool is_diagonal() const;
    bool is_identity() const;
    /// If the matrix is c * I, returns c.
    std::optional<PhasedScalar> as_scalar() const;

    /// c with *this == c * other, if one exists. Zero matrices give none.
    std::optional<PhasedScalar> scalar_ratio(const ExactMatrix& other) const;

    /// For a monomial matrix: row index of the nonzero entry in each column.
    std::vector<std::size_t> monomial_pattern() const;

    /// Inverse. Monomial and scaled-unitary inputs are handled directly,
    /// anything else by Gaussian elimination (symbol-free entries only).
    ExactMatrix inverse() const;
    ExactMatrix pow(std::int64_t e) const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<PhasedScalar> entries_;
    Rational scale_{1};
};

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);
inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return matmul(a, b); }
ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b);

/// s such that a * a^dagger = s * I, if a is a scaled unitary.
std::optional<Rational> is_scaled_unitary(const ExactMatrix& a);

/// <a, b> = tr(a^dagger b), unnormalized.
PhasedScalar trace_inner(const ExactMatrix& a, const ExactMatrix& b);

struct MonomialityReport {
    bool is_monomial = true;
    Rational zero_fraction{0};
    std::vector<std::size_t> per_matrix_nonzero_counts;
};

MonomialityReport monomiality_report(const std::vector<ExactMatrix>& ms);

/// Generalized Pauli shift X|k> = |k-1> and clock Z = diag(1, w, ..., w^(d-1)).
ExactMatrix shift_matrix(int d);
ExactMatrix clock_matrix(int d);
/// Unnormalized Fourier matrix F_jk = w^(jk); F F^dagger = d I.
ExactMatrix fourier_matrix(int d);

/// Kronecker product kept in factor form. Products, traces and scalar ratios
/// are computed factorwise; the full matrix is only built on request.
class TensorMatrix {
public:
    TensorMatrix() = default;
    explicit TensorMatrix(std::vector<ExactMatrix> factors);

    const std::vector<ExactMatrix>& factors() const noexcept { return factors_; }
    std::size_t dim() const;

    PhasedScalar trace() const;
    ExactMatrix materialize() const;
    TensorMatrix dagger() const;
    TensorMatrix inverse() const;

    /// c with *this == c * other; factorwise ratios multiply.
    std::optional<PhasedScalar> scalar_ratio(const TensorMatrix& other) const;
    std::optional<PhasedScalar> as_scalar() const;

    friend TensorMatrix operator*(const TensorMatrix& a, const TensorMatrix& b);
    friend bool operator==(const TensorMatrix& a, const TensorMatrix& b);

private:
    std::vector<ExactMatrix> factors_;
};

}  // namespace uebkit
