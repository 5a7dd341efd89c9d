#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace uebkit {

/// [[a, b], [c, d]] over F_p with ad - bc = 1.
struct SL2Element {
    int p = 2;
    int a = 1;
    int b = 0;
    int c = 0;
    int d = 1;

    friend bool operator==(const SL2Element&, const SL2Element&) = default;
    std::string str() const;
};

SL2Element sl2_make(int p, long a, long b, long c, long d);
SL2Element sl2_mul(const SL2Element& m, const SL2Element& n);
/// alpha = [[0,-1],[1,0]], beta = [[1,0],[1,1]].
SL2Element sl2_alpha(int p);
SL2Element sl2_beta(int p);

/// SL(2, F_p), enumerated in lexicographic (a, b, c, d) order with the
/// identity moved to index 0.
class SL2Group {
public:
    using Element = SL2Element;

    explicit SL2Group(int p);

    int prime() const noexcept { return p_; }
    std::size_t order() const noexcept { return elements_.size(); }
    Element identity() const { return elements_[0]; }
    Element compose(const Element& m, const Element& n) const { return sl2_mul(m, n); }
    Element inverse(const Element& m) const;
    Element element_at(std::size_t i) const { return elements_[i]; }
    std::size_t index_of(const Element& m) const;
    std::vector<Element> generators() const { return {sl2_alpha(p_), sl2_beta(p_)}; }

private:
    int p_;
    std::vector<Element> elements_;
    std::vector<std::size_t> index_;  // by packed (a, b, c, d)
};

/// All elements of exact order r.
std::vector<SL2Element> sl2_elements_of_order(int p, int r);

/// No invariant line in F_p^2: x^2 - tr(M) x + 1 has no root mod p.
bool acts_irreducibly(const SL2Element& m);

}  // namespace uebkit
