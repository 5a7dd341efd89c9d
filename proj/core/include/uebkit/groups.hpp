#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace uebkit {

/// Finite group given intensionally. Elements are enumerable through a
/// bijection with {0, ..., order()-1}; index 0 is the identity.
template <class G>
concept FiniteGroup = requires(const G& g, const typename G::Element& e, std::size_t i) {
    typename G::Element;
    { g.order() } -> std::convertible_to<std::size_t>;
    { g.identity() } -> std::convertible_to<typename G::Element>;
    { g.compose(e, e) } -> std::convertible_to<typename G::Element>;
    { g.inverse(e) } -> std::convertible_to<typename G::Element>;
    { g.element_at(i) } -> std::convertible_to<typename G::Element>;
    { g.index_of(e) } -> std::convertible_to<std::size_t>;
    { g.generators() } -> std::convertible_to<std::vector<typename G::Element>>;
};

// ---------------------------------------------------------------------------
// Generic algorithms.

template <FiniteGroup G>
typename G::Element group_power(const G& g, typename G::Element a, std::int64_t e) {
    if (e < 0) {
        a = g.inverse(a);
        e = -e;
    }
    auto result = g.identity();
    while (e > 0) {
        if (e & 1) result = g.compose(result, a);
        e >>= 1;
        if (e > 0) a = g.compose(a, a);
    }
    return result;
}

template <FiniteGroup G>
std::size_t element_order(const G& g, const typename G::Element& a) {
    const std::size_t id = 0;
    auto x = a;
    std::size_t k = 1;
    while (g.index_of(x) != id) {
        x = g.compose(x, a);
        ++k;
        if (k > g.order()) throw std::logic_error("element_order: no finite order found");
    }
    return k;
}

template <FiniteGroup G>
bool commutes(const G& g, const typename G::Element& a, const typename G::Element& b) {
    return g.index_of(g.compose(a, b)) == g.index_of(g.compose(b, a));
}

/// Elements commuting with every generator.
template <FiniteGroup G>
std::vector<typename G::Element> center(const G& g) {
    const auto gens = g.generators();
    std::vector<typename G::Element> out;
    for (std::size_t i = 0; i < g.order(); ++i) {
        auto e = g.element_at(i);
        bool central = true;
        for (const auto& s : gens) {
            if (!commutes(g, e, s)) {
                central = false;
                break;
            }
        }
        if (central) out.push_back(e);
    }
    return out;
}

/// One representative per coset gZ, each the element of least index in its
/// coset; the identity comes first. Z must be a central subgroup.
template <FiniteGroup G>
std::vector<typename G::Element> transversal(const G& g, const std::vector<typename G::Element>& z) {
    for (const auto& c : z) {
        for (const auto& s : g.generators()) {
            if (!commutes(g, c, s)) throw std::invalid_argument("transversal: subgroup is not central");
        }
    }
    std::vector<bool> covered(g.order(), false);
    std::vector<typename G::Element> reps;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (covered[i]) continue;
        auto e = g.element_at(i);
        reps.push_back(e);
        for (const auto& c : z) covered[g.index_of(g.compose(e, c))] = true;
    }
    return reps;
}

/// Indices of the subgroup generated by gens, sorted ascending.
template <FiniteGroup G>
std::vector<std::size_t> generated_subgroup(const G& g, const std::vector<typename G::Element>& gens) {
    std::vector<bool> seen(g.order(), false);
    std::deque<typename G::Element> queue{g.identity()};
    seen[g.index_of(g.identity())] = true;
    while (!queue.empty()) {
        auto e = queue.front();
        queue.pop_front();
        for (const auto& s : gens) {
            auto n = g.compose(e, s);
            std::size_t k = g.index_of(n);
            if (!seen[k]) {
                seen[k] = true;
                queue.push_back(n);
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i]) out.push_back(i);
    }
    return out;
}

/// Checks bijectivity and f(ab) = f(a) f(b). Exhaustive over all pairs unless
/// samples > 0, in which case that many random pairs are drawn.
template <FiniteGroup G, class F>
bool is_automorphism(const G& g, F&& f, std::size_t samples = 0, std::uint64_t seed = 0) {
    std::vector<bool> hit(g.order(), false);
    std::vector<std::size_t> image(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) {
        std::size_t k = g.index_of(f(g.element_at(i)));
        if (hit[k]) return false;
        hit[k] = true;
        image[i] = k;
    }
    auto check = [&](std::size_t i, std::size_t j) {
        auto prod = g.compose(g.element_at(i), g.element_at(j));
        auto lhs = g.index_of(f(prod));
        auto rhs = g.index_of(g.compose(g.element_at(image[i]), g.element_at(image[j])));
        return lhs == rhs;
    };
    if (samples == 0) {
        for (std::size_t i = 0; i < g.order(); ++i) {
            for (std::size_t j = 0; j < g.order(); ++j) {
                if (!check(i, j)) return false;
            }
        }
        return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (std::size_t s = 0; s < samples; ++s) {
        if (!check(pick(rng), pick(rng))) return false;
    }
    return true;
}

/// Identity, inverse and associativity laws by enumeration.
template <FiniteGroup G>
bool verify_group_axioms(const G& g) {
    const std::size_t n = g.order();
    if (g.index_of(g.identity()) != 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        auto a = g.element_at(i);
        if (g.index_of(a) != i) return false;
        if (g.index_of(g.compose(a, g.identity())) != i || g.index_of(g.compose(g.identity(), a)) != i) return false;
        if (g.index_of(g.compose(a, g.inverse(a))) != 0) return false;
        for (std::size_t j = 0; j < n; ++j) {
            auto ab = g.compose(a, g.element_at(j));
            for (std::size_t k = 0; k < n; ++k) {
                auto c = g.element_at(k);
                if (g.index_of(g.compose(ab, c)) != g.index_of(g.compose(a, g.compose(g.element_at(j), c)))) return false;
            }
        }
    }
    return true;
}

/// Conjugacy classes as sorted index lists, ordered by least member.
template <FiniteGroup G>
std::vector<std::vector<std::size_t>> conjugacy_classes(const G& g) {
    std::vector<bool> seen(g.order(), false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (seen[i]) continue;
        auto a = g.element_at(i);
        std::vector<std::size_t> cls;
        for (std::size_t j = 0; j < g.order(); ++j) {
            auto h = g.element_at(j);
            std::size_t k = g.index_of(g.compose(g.compose(h, a), g.inverse(h)));
            if (!seen[k]) {
                seen[k] = true;
                cls.push_back(k);
            }
        }
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cyclic groups, direct and semidirect products.

class CyclicGroup {
public:
    using Element = int;
    explicit CyclicGroup(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("CyclicGroup: order must be positive");
    }
    std::size_t order() const { return static_cast<std::size_t>(n_); }
    int modulus() const { return n_; }
    Element identity() const { return 0; }
    Element compose(Element a, Element b) const { return (a + b) % n_; }
    Element inverse(Element a) const { return (n_ - a) % n_; }
    Element element_at(std::size_t i) const { return static_cast<int>(i); }
    std::size_t index_of(Element a) const { return static_cast<std::size_t>(a); }
    std::vector<Element> generators() const { return {n_ > 1 ? 1 : 0}; }

private:
    int n_;
};

template <class E1, class E2>
struct PairElement {
    E1 first;
    E2 second;
    friend bool operator==(const PairElement&, const PairElement&) = default;
};

/// Direct product; elements ordered lexicographically (first, second).
template <FiniteGroup G1, FiniteGroup G2>
class ProductGroup {
public:
    using Element = PairElement<typename G1::Element, typename G2::Element>;

    ProductGroup(G1 a, G2 b) : a_(std::move(a)), b_(std::move(b)) {}

    const G1& first() const { return a_; }
    const G2& second() const { return b_; }

    std::size_t order() const { return a_.order() * b_.order(); }
    Element identity() const { return {a_.identity(), b_.identity()}; }
    Element compose(const Element& x, const Element& y) const {
        return {a_.compose(x.first, y.first), b_.compose(x.second, y.second)};
    }
    Element inverse(const Element& x) const { return {a_.inverse(x.first), b_.inverse(x.second)}; }
    Element element_at(std::size_t i) const { return {a_.element_at(i / b_.order()), b_.element_at(i % b_.order())}; }
    std::size_t index_of(const Element& x) const { return a_.index_of(x.first) * b_.order() + b_.index_of(x.second); }
    std::vector<Element> generators() const {
        std::vector<Element> out;
        for (const auto& s : a_.generators()) out.push_back({s, b_.identity()});
        for (const auto& s : b_.generators()) out.push_back({a_.identity(), s});
        return out;
    }

private:
    G1 a_;
    G2 b_;
};

/// N x| H with (n1, h1)(n2, h2) = (n1 phi(h1)(n2), h1 h2), where
/// act(h, n) = phi(h)(n). Elements ordered lexicographically (n, h).
template <FiniteGroup N, FiniteGroup H, class Action>
class SemidirectProduct {
public:
    using Element = PairElement<typename N::Element, typename H::Element>;

    SemidirectProduct(N n, H h, Action act) : n_(std::move(n)), h_(std::move(h)), act_(std::move(act)) {}

    const N& normal() const { return n_; }
    const H& acting() const { return h_; }
    const Action& action() const { return act_; }

    std::size_t order() const { return n_.order() * h_.order(); }
    Element identity() const { return {n_.identity(), h_.identity()}; }
    Element compose(const Element& x, const Element& y) const {
        return {n_.compose(x.first, act_(x.second, y.first)), h_.compose(x.second, y.second)};
    }
    Element inverse(const Element& x) const {
        auto hi = h_.inverse(x.second);
        return {act_(hi, n_.inverse(x.first)), hi};
    }
    Element element_at(std::size_t i) const { return {n_.element_at(i / h_.order()), h_.element_at(i % h_.order())}; }
    std::size_t index_of(const Element& x) const { return n_.index_of(x.first) * h_.order() + h_.index_of(x.second); }
    std::vector<Element> generators() const {
        std::vector<Element> out;
        for (const auto& s : n_.generators()) out.push_back({s, h_.identity()});
        for (const auto& s : h_.generators()) out.push_back({n_.identity(), s});
        return out;
    }

private:
    N n_;
    H h_;
    Action act_;
};

/// Checks that every generator of H acts by an automorphism of N and that the
/// action is compatible with the group law on sampled pairs of H.
template <FiniteGroup N, FiniteGroup H, class Action>
bool verify_action(const N& n, const H& h, const Action& act, std::size_t samples = 64, std::uint64_t seed = 0) {
    for (const auto& s : h.generators()) {
        if (!is_automorphism(n, [&](const typename N::Element& e) { return act(s, e); }, samples, seed)) return false;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_h(0, h.order() - 1), pick_n(0, n.order() - 1);
    for (std::size_t k = 0; k < samples; ++k) {
        auto a = h.element_at(pick_h(rng));
        auto b = h.element_at(pick_h(rng));
        auto e = n.element_at(pick_n(rng));
        if (n.index_of(act(h.compose(a, b), e)) != n.index_of(act(a, act(b, e)))) return false;
    }
    return true;
}

}  // namespace uebkit
