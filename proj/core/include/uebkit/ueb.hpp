#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uebkit/combinat.hpp"
#include "uebkit/exact_matrix.hpp"

namespace uebkit {

/// d^2 matrices of size d x d with pairwise vanishing tr(E^dagger F).
struct UnitaryErrorBasis {
    int d = 0;
    std::vector<ExactMatrix> members;
    std::vector<std::string> labels;
};

struct UebViolation {
    enum class Kind { NotUnitary, NotOrthogonal };
    Kind kind = Kind::NotOrthogonal;
    std::size_t first = 0;
    std::size_t second = 0;
    /// tr(E^dagger F) for orthogonality failures.
    PhasedScalar value;
};

struct UebReport {
    bool valid = true;
    std::size_t pairs_checked = 0;
    /// s with E E^dagger = s I, or none, per member.
    std::vector<std::optional<Rational>> unitary_scales;
    std::vector<UebViolation> violations;
};

/// Exact all-pairs check. Throws std::invalid_argument on wrong cardinality
/// or shape.
UebReport verify_ueb(const UnitaryErrorBasis& basis, unsigned jobs = 1);

/// E_ij = P_j diag(H^(j)_ik : k), P_j(L(j,k), k) = 1. Member index i*d + j.
UnitaryErrorBasis shift_and_multiply(const LatinSquare& l, const HadamardSequence& h);

/// X^i Z^j, member index i*d + j.
UnitaryErrorBasis pauli_basis(int d);

/// The 2 x 2 Pauli set {I, X, Z, Y} with Y = [[0,-i],[i,0]].
std::vector<ExactMatrix> pauli_set();

/// Data with c[k] * A * E_k * B = P[sigma[k]] for the Pauli set P.
/// A and B are scaled unitaries.
struct D2Normalization {
    ExactMatrix a;
    ExactMatrix b;
    std::vector<PhasedScalar> c;
    std::vector<std::size_t> sigma;
    UnitaryErrorBasis canonical;
};

/// Throws std::invalid_argument for a non-UEB input and std::domain_error
/// when a needed square root of a phase is not representable.
D2Normalization normalize_d2(const UnitaryErrorBasis& basis);

/// Square root of a unit-modulus monomial phase, if one is representable.
std::optional<PhasedScalar> phase_sqrt(const PhasedScalar& a);

struct WickednessWitness {
    std::size_t first = 0;   // E
    std::size_t second = 0;  // F, with E F^dagger diagonal
    std::vector<PhasedScalar> diagonal;
    std::size_t offending_index = 0;
    /// diagonal[offending_index] / diagonal[0], not a root of unity.
    PhasedScalar offending_ratio;
};

/// Searches pairs (E, F) with E F^dagger diagonal for a diagonal-entry ratio
/// that is not a root of unity. A hit proves the basis is not equivalent to a
/// nice error basis; no hit proves nothing.
std::optional<WickednessWitness> wickedness_witness(const UnitaryErrorBasis& basis);

}  // namespace uebkit
