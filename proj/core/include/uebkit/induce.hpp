#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uebkit/exact_matrix.hpp"
#include "uebkit/groups.hpp"

namespace uebkit {

/// Values indexed by element index.
struct ClassFunction {
    std::vector<PhasedScalar> values;

    const PhasedScalar& operator()(std::size_t i) const { return values[i]; }
};

/// Throws std::invalid_argument unless the indices form a subgroup of g.
template <FiniteGroup G>
void require_subgroup(const G& g, const std::vector<std::size_t>& k) {
    std::vector<char> in(g.order(), 0);
    for (std::size_t i : k) {
        if (i >= g.order()) throw std::invalid_argument("subgroup index out of range");
        in[i] = 1;
    }
    if (k.empty() || !in[0]) throw std::invalid_argument("subgroup must contain the identity");
    for (std::size_t a : k) {
        for (std::size_t b : k) {
            if (!in[g.index_of(g.compose(g.element_at(a), g.element_at(b)))]) {
                throw std::invalid_argument("not a subgroup: product of elements " + std::to_string(a) + " and " + std::to_string(b) + " leaves it");
            }
        }
    }
}

/// Least-index representatives of the left cosets tK, in increasing order.
template <FiniteGroup G>
std::vector<std::size_t> left_transversal(const G& g, const std::vector<std::size_t>& k) {
    std::vector<char> covered(g.order(), 0);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (covered[i]) continue;
        reps.push_back(i);
        for (std::size_t j : k) covered[g.index_of(g.compose(g.element_at(i), g.element_at(j)))] = 1;
    }
    return reps;
}

/// chi(x) = 1/|K| sum_{y in H} psi(y x y^-1), with psi taken as zero off K.
/// psi is called with element indices of h that lie in K.
template <FiniteGroup G>
ClassFunction induce_character(const G& h, const std::vector<std::size_t>& k, const std::function<PhasedScalar(std::size_t)>& psi) {
    require_subgroup(h, k);
    std::vector<char> in(h.order(), 0);
    for (std::size_t i : k) in[i] = 1;
    std::vector<PhasedScalar> psi_values(h.order());
    for (std::size_t i : k) psi_values[i] = psi(i);
    const Rational inv_k(1, static_cast<std::int64_t>(k.size()));
    ClassFunction out;
    out.values.resize(h.order());
    for (std::size_t x = 0; x < h.order(); ++x) {
        const auto ex = h.element_at(x);
        PhasedScalar sum;
        for (std::size_t y = 0; y < h.order(); ++y) {
            const auto ey = h.element_at(y);
            std::size_t c = h.index_of(h.compose(h.compose(ey, ex), h.inverse(ey)));
            if (in[c]) sum += psi_values[c];
        }
        out.values[x] = sum.scaled(inv_k);
    }
    return out;
}

template <FiniteGroup G>
bool is_class_function(const G& h, const ClassFunction& f) {
    for (const auto& cls : conjugacy_classes(h)) {
        for (std::size_t i : cls) {
            if (!(f(i) == f(cls.front()))) return false;
        }
    }
    return true;
}

/// Representation of H induced from a matrix representation of K. Blocks are
/// indexed by the left transversal; block (i, j) of rho(g) is
/// psi(t_i^-1 g t_j) when that lies in K and zero otherwise.
struct InducedRep {
    std::vector<std::size_t> subgroup;
    std::vector<std::size_t> transversal;
    std::size_t block_dim = 0;
    std::vector<ExactMatrix> matrices;  // by element index of the parent

    std::size_t index() const { return transversal.size(); }
    std::size_t dim() const { return transversal.size() * block_dim; }
};

template <FiniteGroup G>
InducedRep induce_representation(const G& h, const std::vector<std::size_t>& k, const std::function<ExactMatrix(std::size_t)>& psi) {
    require_subgroup(h, k);
    std::vector<char> in(h.order(), 0);
    for (std::size_t i : k) in[i] = 1;
    InducedRep out;
    out.subgroup = k;
    out.transversal = left_transversal(h, k);
    std::vector<ExactMatrix> psi_values(h.order());
    for (std::size_t i : k) psi_values[i] = psi(i).normalized();
    out.block_dim = psi_values[0].rows();
    const std::size_t n = out.transversal.size(), b = out.block_dim;
    for (std::size_t x = 0; x < h.order(); ++x) {
        const auto ex = h.element_at(x);
        ExactMatrix m(n * b, n * b);
        for (std::size_t i = 0; i < n; ++i) {
            const auto ti_inv = h.inverse(h.element_at(out.transversal[i]));
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t c = h.index_of(h.compose(h.compose(ti_inv, ex), h.element_at(out.transversal[j])));
                if (!in[c]) continue;
                const ExactMatrix& blk = psi_values[c];
                for (std::size_t r = 0; r < b; ++r)
                    for (std::size_t s = 0; s < b; ++s) m.at(i * b + r, j * b + s) = blk.at(r, s);
            }
        }
        out.matrices.push_back(std::move(m));
    }
    return out;
}

/// Every block column of every matrix has exactly one nonzero block.
bool is_block_monomial(const InducedRep& rep);

/// Least zero fraction over the matrices.
Rational min_zero_fraction(const std::vector<ExactMatrix>& ms);

/// min_zero_fraction of the induced matrices; throws std::logic_error if it
/// falls below 1 - 1/(H:K).
Rational sparsity_check(const InducedRep& rep);

}  // namespace uebkit
