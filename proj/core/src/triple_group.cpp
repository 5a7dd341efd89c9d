#include "uebkit/triple_group.hpp"

#include <stdexcept>

namespace uebkit {

TripleGroup make_triple_group(int p, int q, int r, const HeisenbergAutomorphism& gamma_p, const HeisenbergAutomorphism& gamma_q) {
    for (int v : {p, q, r}) {
        if (v < 3 || !is_prime(v)) throw std::invalid_argument("triple group: p, q, r must be odd primes");
    }
    if ((p + 1) % r != 0 || (q + 1) % r != 0) throw std::invalid_argument("triple group: r must divide p+1 and q+1");
    if (gamma_p.modulus() != p || gamma_q.modulus() != q) throw std::invalid_argument("triple group: automorphism modulus mismatch");
    if (gamma_p.order() != r || gamma_q.order() != r) throw std::invalid_argument("triple group: automorphisms must have order r");
    TripleAction act;
    for (int k = 0; k < r; ++k) {
        act.p_powers.push_back(gamma_p.pow(k));
        act.q_powers.push_back(gamma_q.pow(k));
    }
    return TripleGroup(ProductGroup<HeisenbergGroup, HeisenbergGroup>(HeisenbergGroup(p), HeisenbergGroup(q)), HeisenbergGroup(r), std::move(act));
}

TripleGroup make_triple_group(int p, int q, int r) {
    return make_triple_group(p, q, r, find_irreducible_automorphism(p, r), find_irreducible_automorphism(q, r));
}

std::vector<TripleGroup::Element> triple_center(const TripleGroup& g) {
    const auto& hp = g.normal().first();
    const auto& hq = g.normal().second();
    const auto& hr = g.acting();
    const auto& act = g.action();
    for (const auto& c : hr.center_elements()) {
        if (!(c.x == 0 && c.y == 0)) throw std::logic_error("triple_center: central element acts nontrivially");
    }
    for (const auto& f : act.p_powers) {
        for (const auto& c : hp.center_elements()) {
            if (!(f(c) == c)) throw std::logic_error("triple_center: action moves Z(H_p)");
        }
    }
    for (const auto& f : act.q_powers) {
        for (const auto& c : hq.center_elements()) {
            if (!(f(c) == c)) throw std::logic_error("triple_center: action moves Z(H_q)");
        }
    }
    std::vector<TripleGroup::Element> out;
    for (const auto& a : hp.center_elements()) {
        for (const auto& b : hq.center_elements()) {
            for (const auto& c : hr.center_elements()) out.push_back({{a, b}, c});
        }
    }
    return out;
}

TripleGroup::Element triple_center_generator(const TripleGroup& g) {
    return {{g.normal().first().make(0, 0, 1), g.normal().second().make(0, 0, 1)}, g.acting().make(0, 0, 1)};
}

}  // namespace uebkit
