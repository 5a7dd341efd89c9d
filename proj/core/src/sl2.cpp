#include "uebkit/sl2.hpp"

#include <stdexcept>

namespace uebkit {

namespace {

int mod(long v, int p) {
    long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

}  // namespace

std::string SL2Element::str() const {
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," + std::to_string(d) + "]]";
}

SL2Element sl2_make(int p, long a, long b, long c, long d) {
    SL2Element m{p, mod(a, p), mod(b, p), mod(c, p), mod(d, p)};
    if (mod(static_cast<long>(m.a) * m.d - static_cast<long>(m.b) * m.c, p) != 1 % p) {
        throw std::invalid_argument("sl2_make: determinant is not 1");
    }
    return m;
}

SL2Element sl2_mul(const SL2Element& m, const SL2Element& n) {
    if (m.p != n.p) throw std::invalid_argument("sl2_mul: modulus mismatch");
    const int p = m.p;
    auto f = [p](long u, long v, long s, long t) { return mod(u * v + s * t, p); };
    return {p, f(m.a, n.a, m.b, n.c), f(m.a, n.b, m.b, n.d), f(m.c, n.a, m.d, n.c), f(m.c, n.b, m.d, n.d)};
}

SL2Element sl2_alpha(int p) { return sl2_make(p, 0, -1, 1, 0); }
SL2Element sl2_beta(int p) { return sl2_make(p, 1, 0, 1, 1); }

SL2Group::SL2Group(int p) : p_(p) {
    if (p < 2) throw std::invalid_argument("SL2Group: p must be prime");
    const auto q = static_cast<std::size_t>(p);
    index_.assign(q * q * q * q, static_cast<std::size_t>(-1));
    elements_.push_back(SL2Element{p, 1, 0, 0, 1 % p});
    for (int a = 0; a < p; ++a) {
        for (int b = 0; b < p; ++b) {
            for (int c = 0; c < p; ++c) {
                for (int d = 0; d < p; ++d) {
                    if (mod(static_cast<long>(a) * d - static_cast<long>(b) * c, p) != 1 % p) continue;
                    SL2Element m{p, a, b, c, d};
                    if (m == elements_[0]) continue;
                    elements_.push_back(m);
                }
            }
        }
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const auto& m = elements_[i];
        index_[((static_cast<std::size_t>(m.a) * q + m.b) * q + m.c) * q + m.d] = i;
    }
}

SL2Element SL2Group::inverse(const Element& m) const { return sl2_make(p_, m.d, -m.b, -m.c, m.a); }

std::size_t SL2Group::index_of(const Element& m) const {
    const auto q = static_cast<std::size_t>(p_);
    std::size_t k = index_[((static_cast<std::size_t>(m.a) * q + m.b) * q + m.c) * q + m.d];
    if (k == static_cast<std::size_t>(-1)) throw std::invalid_argument("SL2Group: not an element");
    return k;
}

std::vector<SL2Element> sl2_elements_of_order(int p, int r) {
    SL2Group g(p);
    std::vector<SL2Element> out;
    for (std::size_t i = 0; i < g.order(); ++i) {
        SL2Element m = g.element_at(i);
        SL2Element x = m;
        int k = 1;
        while (!(x == g.identity())) {
            x = sl2_mul(x, m);
            ++k;
        }
        if (k == r) out.push_back(m);
    }
    return out;
}

bool acts_irreducibly(const SL2Element& m) {
    const int p = m.p;
    const long tr = m.a + m.d;
    for (long x = 0; x < p; ++x) {
        if (mod(x * x - tr * x + 1, p) == 0) return false;
    }
    return true;
}

}  // namespace uebkit
