#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uebkit/exact_matrix.hpp"

namespace uebkit {

/// d x d array over {0, ..., d-1}, row-major.
struct LatinSquare {
    int d = 0;
    std::vector<int> cells;

    int operator()(int i, int j) const { return cells[static_cast<std::size_t>(i * d + j)]; }
};

struct LatinViolation {
    bool in_row = true;  // otherwise a column
    int index = 0;
    int symbol = 0;
};

struct LatinValidation {
    bool ok = true;
    std::optional<LatinViolation> violation;
};

/// L(i, j) = (j - i) mod d.
LatinSquare cyclic_latin(int d);
/// Throws std::invalid_argument on wrong shape or out-of-range cells.
LatinValidation validate_latin(const LatinSquare& l);
LatinSquare latin_from_rows(const std::vector<std::vector<int>>& rows);

/// H^(0), ..., H^(d-1); each is d x d.
struct HadamardSequence {
    int d = 0;
    std::vector<ExactMatrix> mats;

    static HadamardSequence constant(const ExactMatrix& h);
};

struct HadamardValidation {
    bool ok = true;
    std::string reason;
};

/// Unit-modulus entries and H^dagger H = d I, both exact.
HadamardValidation validate_hadamard(const ExactMatrix& h);
HadamardValidation validate_hadamard_sequence(const HadamardSequence& hs);

/// Unnormalized Fourier matrix (w^(kl)).
ExactMatrix fourier_hadamard(int d);

/// Rows (1,1,1,1), (1,1,-1,-1), (1,-1,t,-t), (1,-1,-t,t) for the formal phase t.
ExactMatrix h_alpha(const SymbolAlphabet& alphabet, std::string_view symbol = "t");
ExactMatrix h_alpha();

/// Entrywise substitution of a formal symbol.
ExactMatrix substitute(const ExactMatrix& m, std::string_view symbol, const Cyclotomic& value);

}  // namespace uebkit
