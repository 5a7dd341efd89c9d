#include "uebkit/combinat.hpp"

#include <stdexcept>

namespace uebkit {

LatinSquare cyclic_latin(int d) {
    if (d < 1) throw std::invalid_argument("cyclic_latin: d must be positive");
    LatinSquare l{d, std::vector<int>(static_cast<std::size_t>(d * d))};
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) l.cells[static_cast<std::size_t>(i * d + j)] = ((j - i) % d + d) % d;
    }
    return l;
}

LatinSquare latin_from_rows(const std::vector<std::vector<int>>& rows) {
    LatinSquare l{static_cast<int>(rows.size()), {}};
    for (const auto& r : rows) {
        if (r.size() != rows.size()) throw std::invalid_argument("latin square: rows must have length d");
        l.cells.insert(l.cells.end(), r.begin(), r.end());
    }
    return l;
}

LatinValidation validate_latin(const LatinSquare& l) {
    const int d = l.d;
    if (d < 1 || l.cells.size() != static_cast<std::size_t>(d * d)) throw std::invalid_argument("validate_latin: not a d x d array");
    for (int v : l.cells) {
        if (v < 0 || v >= d) throw std::invalid_argument("validate_latin: cell value " + std::to_string(v) + " out of range");
    }
    LatinValidation out;
    for (int pass = 0; pass < 2; ++pass) {
        const bool rows = pass == 0;
        for (int a = 0; a < d; ++a) {
            std::vector<bool> seen(static_cast<std::size_t>(d), false);
            for (int b = 0; b < d; ++b) {
                int v = rows ? l(a, b) : l(b, a);
                if (seen[static_cast<std::size_t>(v)]) {
                    out.ok = false;
                    out.violation = LatinViolation{rows, a, v};
                    return out;
                }
                seen[static_cast<std::size_t>(v)] = true;
            }
        }
    }
    return out;
}

HadamardSequence HadamardSequence::constant(const ExactMatrix& h) {
    HadamardSequence hs{static_cast<int>(h.rows()), {}};
    hs.mats.assign(h.rows(), h);
    return hs;
}

HadamardValidation validate_hadamard(const ExactMatrix& h) {
    if (!h.is_square()) return {false, "not square"};
    const ExactMatrix n = h.normalized();
    for (std::size_t i = 0; i < n.rows(); ++i) {
        for (std::size_t j = 0; j < n.cols(); ++j) {
            if (!n.at(i, j).is_unit_modulus()) {
                return {false, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not of unit modulus"};
            }
        }
    }
    auto s = is_scaled_unitary(n);
    if (!s || *s != Rational(static_cast<std::int64_t>(n.rows()))) return {false, "H^dagger H is not d I"};
    return {};
}

HadamardValidation validate_hadamard_sequence(const HadamardSequence& hs) {
    if (hs.mats.size() != static_cast<std::size_t>(hs.d)) return {false, "sequence length is not d"};
    for (std::size_t k = 0; k < hs.mats.size(); ++k) {
        if (hs.mats[k].rows() != static_cast<std::size_t>(hs.d)) return {false, "H^(" + std::to_string(k) + ") is not d x d"};
        auto v = validate_hadamard(hs.mats[k]);
        if (!v.ok) return {false, "H^(" + std::to_string(k) + "): " + v.reason};
    }
    return {};
}

ExactMatrix fourier_hadamard(int d) { return fourier_matrix(d); }

ExactMatrix h_alpha(const SymbolAlphabet& alphabet, std::string_view symbol) {
    PhasedScalar t = PhasedScalar::symbol(alphabet, symbol);
    PhasedScalar one(1), m(-1);
    return ExactMatrix(4, 4, {one, one, one, one, one, one, m, m, one, m, t, -t, one, m, -t, t});
}

ExactMatrix h_alpha() { return h_alpha(make_alphabet({"t"})); }

ExactMatrix substitute(const ExactMatrix& m, std::string_view symbol, const Cyclotomic& value) {
    std::vector<PhasedScalar> e;
    e.reserve(m.entries().size());
    for (const auto& x : m.entries()) e.push_back(x.substitute(symbol, value));
    return ExactMatrix(m.rows(), m.cols(), std::move(e), m.scale());
}

}  // namespace uebkit
