#pragma once

#include <vector>

#include "uebkit/heisenberg.hpp"

namespace uebkit {

using HeisenbergPair = PairElement<HeisenbergElement, HeisenbergElement>;

/// phi((x, y, z)) = (gamma_p^x, gamma_q^y) on H_p x H_q.
struct TripleAction {
    std::vector<HeisenbergAutomorphism> p_powers;  // gamma_p^k, k < r
    std::vector<HeisenbergAutomorphism> q_powers;

    HeisenbergPair operator()(const HeisenbergElement& h, const HeisenbergPair& n) const {
        return {p_powers[static_cast<std::size_t>(h.x)](n.first), q_powers[static_cast<std::size_t>(h.y)](n.second)};
    }
};

/// (H_p x H_q) x| H_r for odd primes p, q and r dividing p+1 and q+1.
using TripleGroup = SemidirectProduct<ProductGroup<HeisenbergGroup, HeisenbergGroup>, HeisenbergGroup, TripleAction>;

/// gamma_p and gamma_q must have order r.
TripleGroup make_triple_group(int p, int q, int r, const HeisenbergAutomorphism& gamma_p, const HeisenbergAutomorphism& gamma_q);
/// Uses find_irreducible_automorphism for both actions.
TripleGroup make_triple_group(int p, int q, int r);

/// Z(G) = Z(N) x Z(H), valid because Z(H_r) acts trivially and the gammas fix
/// Z(H_p), Z(H_q). Both facts are checked; elements are in index order.
std::vector<TripleGroup::Element> triple_center(const TripleGroup& g);

/// A generator of the center: ((0,0,1), (0,0,1), (0,0,1)).
TripleGroup::Element triple_center_generator(const TripleGroup& g);

}  // namespace uebkit
