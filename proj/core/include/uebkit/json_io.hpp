#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "uebkit/combinat.hpp"
#include "uebkit/exact_matrix.hpp"
#include "uebkit/ueb.hpp"

namespace uebkit {

/// Malformed or inconsistent JSON input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"order": n, "coeffs": {"k": "p/q"}, "symbols": {"t": e}} for a single
/// term; {"terms": [...]} otherwise. Keys k are exponents of zeta_n.
nlohmann::json scalar_to_json(const PhasedScalar& s);
PhasedScalar scalar_from_json(const nlohmann::json& j, const SymbolAlphabet& alphabet = nullptr);

/// {"rows": r, "cols": c, "scale": "p/q", "entries": [scalar, ...]} row-major.
nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j, const SymbolAlphabet& alphabet = nullptr);

/// {"factors": [matrix, ...]}
nlohmann::json tensor_to_json(const TensorMatrix& m);
TensorMatrix tensor_from_json(const nlohmann::json& j, const SymbolAlphabet& alphabet = nullptr);

/// {"d": n, "members": [matrix, ...], "labels": [...]}; an optional
/// "symbols": [names] fixes the alphabet order.
nlohmann::json basis_to_json(const UnitaryErrorBasis& b);
UnitaryErrorBasis basis_from_json(const nlohmann::json& j);

/// Arrays of integer rows.
nlohmann::json latin_to_json(const LatinSquare& l);
LatinSquare latin_from_json(const nlohmann::json& j);

/// Arrays of matrix objects.
nlohmann::json hadamard_to_json(const HadamardSequence& h);
HadamardSequence hadamard_from_json(const nlohmann::json& j);

/// Symbol names used anywhere inside j, sorted; empty alphabet when none.
SymbolAlphabet collect_symbols(const nlohmann::json& j);

}  // namespace uebkit
