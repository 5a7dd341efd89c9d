#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uebkit/groups.hpp"
#include "uebkit/sl2.hpp"

namespace uebkit {

struct HeisenbergElement {
    int d = 1;
    int x = 0;
    int y = 0;
    int z = 0;

    friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
    std::string str() const;
};

/// H_d = Z_d^3 with (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy').
/// Elements are ordered lexicographically in (x, y, z).
class HeisenbergGroup {
public:
    using Element = HeisenbergElement;

    explicit HeisenbergGroup(int d);

    int modulus() const noexcept { return d_; }
    std::size_t order() const noexcept { return static_cast<std::size_t>(d_) * d_ * d_; }
    Element identity() const noexcept { return {d_, 0, 0, 0}; }
    Element make(std::int64_t x, std::int64_t y, std::int64_t z) const;
    Element compose(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;
    Element element_at(std::size_t i) const;
    std::size_t index_of(const Element& a) const;
    std::vector<Element> generators() const;
    /// {(0,0,z)}
    std::vector<Element> center_elements() const;

private:
    int d_;
};

HeisenbergElement heisenberg_compose(const HeisenbergElement& a, const HeisenbergElement& b);

/// alpha(x,y,z) = (-y, x, z - xy); d must be an odd prime.
HeisenbergElement alpha_aut(const HeisenbergElement& g);
/// beta(x,y,z) = (x, x+y, z + (p+1)/2 x^2); d must be an odd prime.
HeisenbergElement beta_aut(const HeisenbergElement& g);
/// beta_e(x,y,z) = (x, x+y, z + x(x-1)/2 + e x). beta_aut is e = (p+1)/2.
HeisenbergElement beta_aut(const HeisenbergElement& g, std::int64_t e);

/// Automorphism of H_p stored as an image table over element indices.
/// Multiplication is composition: (f * g)(a) = f(g(a)).
class HeisenbergAutomorphism {
public:
    HeisenbergAutomorphism() = default;
    template <class F>
    static HeisenbergAutomorphism from_map(int p, F&& f) {
        HeisenbergGroup g(p);
        HeisenbergAutomorphism out;
        out.p_ = p;
        out.image_.resize(g.order());
        for (std::size_t i = 0; i < g.order(); ++i) out.image_[i] = static_cast<std::uint32_t>(g.index_of(f(g.element_at(i))));
        return out;
    }
    static HeisenbergAutomorphism identity(int p);
    static HeisenbergAutomorphism alpha(int p);
    static HeisenbergAutomorphism beta(int p);
    static HeisenbergAutomorphism beta(int p, std::int64_t e);

    int modulus() const noexcept { return p_; }
    HeisenbergElement operator()(const HeisenbergElement& a) const;
    std::size_t apply_index(std::size_t i) const { return image_[i]; }

    HeisenbergAutomorphism inverse() const;
    HeisenbergAutomorphism pow(std::int64_t e) const;
    bool is_identity() const;
    /// Least k > 0 with f^k = id.
    int order() const;
    /// Induced map on H_p / Z(H_p) = F_p^2, as a matrix acting on columns (x, y).
    SL2Element linear_part() const;
    /// Table is a bijection respecting the group law (exhaustive).
    bool is_automorphism() const;

    friend HeisenbergAutomorphism operator*(const HeisenbergAutomorphism& f, const HeisenbergAutomorphism& g);
    friend bool operator==(const HeisenbergAutomorphism&, const HeisenbergAutomorphism&) = default;

private:
    int p_ = 1;
    std::vector<std::uint32_t> image_;
};

/// An automorphism of H_p of order r whose linear part acts irreducibly,
/// found as a word in alpha and beta by breadth-first search. Requires r | p+1.
HeisenbergAutomorphism find_irreducible_automorphism(int p, int r);

bool is_prime(std::int64_t n);

}  // namespace uebkit
