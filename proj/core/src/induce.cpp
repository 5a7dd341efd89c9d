#include "uebkit/induce.hpp"

namespace uebkit {

bool is_block_monomial(const InducedRep& rep) {
    const std::size_t n = rep.index(), b = rep.block_dim;
    for (const auto& m : rep.matrices) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t hits = 0;
            for (std::size_t i = 0; i < n; ++i) {
                bool nonzero = false;
                for (std::size_t r = 0; r < b && !nonzero; ++r)
                    for (std::size_t s = 0; s < b && !nonzero; ++s) nonzero = !m.at(i * b + r, j * b + s).is_zero();
                hits += nonzero ? 1 : 0;
            }
            if (hits != 1) return false;
        }
    }
    return true;
}

Rational min_zero_fraction(const std::vector<ExactMatrix>& ms) {
    if (ms.empty()) throw std::invalid_argument("min_zero_fraction: no matrices");
    Rational best(1);
    for (const auto& m : ms) {
        const auto total = static_cast<std::int64_t>(m.rows() * m.cols());
        Rational f(total - static_cast<std::int64_t>(m.nonzero_count()), total);
        if (f < best) best = f;
    }
    return best;
}

Rational sparsity_check(const InducedRep& rep) {
    Rational f = min_zero_fraction(rep.matrices);
    Rational bound = Rational(1) - Rational(1, static_cast<std::int64_t>(rep.index()));
    if (f < bound) throw std::logic_error("sparsity_check: zero fraction " + f.str() + " below " + bound.str());
    return f;
}

}  // namespace uebkit
