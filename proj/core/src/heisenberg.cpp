#include "uebkit/heisenberg.hpp"

#include <deque>
#include <stdexcept>

namespace uebkit {

namespace {

int mod(std::int64_t v, int d) {
    std::int64_t r = v % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

void require_odd_prime(int p, const char* who) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument(std::string(who) + ": modulus must be an odd prime");
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t k = 2; k * k <= n; ++k) {
        if (n % k == 0) return false;
    }
    return true;
}

std::string HeisenbergElement::str() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

HeisenbergGroup::HeisenbergGroup(int d) : d_(d) {
    if (d < 1) throw std::invalid_argument("HeisenbergGroup: d must be positive");
}

HeisenbergElement HeisenbergGroup::make(std::int64_t x, std::int64_t y, std::int64_t z) const {
    return {d_, mod(x, d_), mod(y, d_), mod(z, d_)};
}

HeisenbergElement heisenberg_compose(const HeisenbergElement& a, const HeisenbergElement& b) {
    if (a.d != b.d) throw std::invalid_argument("heisenberg_compose: modulus mismatch");
    const int d = a.d;
    return {d, (a.x + b.x) % d, (a.y + b.y) % d, static_cast<int>((a.z + b.z + static_cast<std::int64_t>(a.x) * b.y) % d)};
}

HeisenbergElement HeisenbergGroup::compose(const Element& a, const Element& b) const { return heisenberg_compose(a, b); }

HeisenbergElement HeisenbergGroup::inverse(const Element& a) const {
    return make(-a.x, -a.y, static_cast<std::int64_t>(a.x) * a.y - a.z);
}

HeisenbergElement HeisenbergGroup::element_at(std::size_t i) const {
    const auto d = static_cast<std::size_t>(d_);
    return {d_, static_cast<int>(i / (d * d)), static_cast<int>((i / d) % d), static_cast<int>(i % d)};
}

std::size_t HeisenbergGroup::index_of(const Element& a) const {
    const auto d = static_cast<std::size_t>(d_);
    return (static_cast<std::size_t>(a.x) * d + static_cast<std::size_t>(a.y)) * d + static_cast<std::size_t>(a.z);
}

std::vector<HeisenbergElement> HeisenbergGroup::generators() const {
    if (d_ == 1) return {identity()};
    return {make(1, 0, 0), make(0, 1, 0)};
}

std::vector<HeisenbergElement> HeisenbergGroup::center_elements() const {
    std::vector<Element> out;
    for (int z = 0; z < d_; ++z) out.push_back({d_, 0, 0, z});
    return out;
}

HeisenbergElement alpha_aut(const HeisenbergElement& g) {
    require_odd_prime(g.d, "alpha_aut");
    const int p = g.d;
    return {p, mod(-g.y, p), g.x, mod(g.z - static_cast<std::int64_t>(g.x) * g.y, p)};
}

HeisenbergElement beta_aut(const HeisenbergElement& g, std::int64_t e) {
    require_odd_prime(g.d, "beta_aut");
    const int p = g.d;
    const std::int64_t x = g.x;
    return {p, g.x, mod(x + g.y, p), mod(g.z + x * (x - 1) / 2 + e * x, p)};
}

HeisenbergElement beta_aut(const HeisenbergElement& g) { return beta_aut(g, (g.d + 1) / 2); }

// ---------------------------------------------------------------------------

HeisenbergAutomorphism HeisenbergAutomorphism::identity(int p) {
    return from_map(p, [](const HeisenbergElement& a) { return a; });
}

HeisenbergAutomorphism HeisenbergAutomorphism::alpha(int p) {
    require_odd_prime(p, "HeisenbergAutomorphism::alpha");
    return from_map(p, [](const HeisenbergElement& a) { return alpha_aut(a); });
}

HeisenbergAutomorphism HeisenbergAutomorphism::beta(int p) { return beta(p, (p + 1) / 2); }

HeisenbergAutomorphism HeisenbergAutomorphism::beta(int p, std::int64_t e) {
    require_odd_prime(p, "HeisenbergAutomorphism::beta");
    return from_map(p, [e](const HeisenbergElement& a) { return beta_aut(a, e); });
}

HeisenbergElement HeisenbergAutomorphism::operator()(const HeisenbergElement& a) const {
    HeisenbergGroup g(p_);
    return g.element_at(image_[g.index_of(a)]);
}

HeisenbergAutomorphism HeisenbergAutomorphism::inverse() const {
    HeisenbergAutomorphism out = *this;
    for (std::size_t i = 0; i < image_.size(); ++i) out.image_[image_[i]] = static_cast<std::uint32_t>(i);
    return out;
}

HeisenbergAutomorphism operator*(const HeisenbergAutomorphism& f, const HeisenbergAutomorphism& g) {
    if (f.p_ != g.p_) throw std::invalid_argument("HeisenbergAutomorphism: modulus mismatch");
    HeisenbergAutomorphism out = g;
    for (auto& v : out.image_) v = f.image_[v];
    return out;
}

HeisenbergAutomorphism HeisenbergAutomorphism::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    HeisenbergAutomorphism result = identity(p_);
    HeisenbergAutomorphism base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

bool HeisenbergAutomorphism::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] != i) return false;
    }
    return true;
}

int HeisenbergAutomorphism::order() const {
    HeisenbergAutomorphism f = *this;
    int k = 1;
    while (!f.is_identity()) {
        f = f * *this;
        ++k;
        if (k > static_cast<int>(image_.size()) * p_ * p_) throw std::logic_error("HeisenbergAutomorphism::order: runaway");
    }
    return k;
}

SL2Element HeisenbergAutomorphism::linear_part() const {
    HeisenbergGroup g(p_);
    auto u = (*this)(g.make(1, 0, 0));
    auto v = (*this)(g.make(0, 1, 0));
    return sl2_make(p_, u.x, v.x, u.y, v.y);
}

bool HeisenbergAutomorphism::is_automorphism() const {
    HeisenbergGroup g(p_);
    return uebkit::is_automorphism(g, *this);
}

HeisenbergAutomorphism find_irreducible_automorphism(int p, int r) {
    require_odd_prime(p, "find_irreducible_automorphism");
    if (r < 2 || (p + 1) % r != 0) throw std::invalid_argument("find_irreducible_automorphism: r must divide p+1");
    SL2Group sl(p);
    const HeisenbergAutomorphism gens[2] = {HeisenbergAutomorphism::alpha(p), HeisenbergAutomorphism::beta(p)};
    std::vector<bool> seen(sl.order(), false);
    std::deque<HeisenbergAutomorphism> queue{HeisenbergAutomorphism::identity(p)};
    seen[0] = true;
    while (!queue.empty()) {
        HeisenbergAutomorphism f = std::move(queue.front());
        queue.pop_front();
        SL2Element m = f.linear_part();
        if (element_order(sl, m) == static_cast<std::size_t>(r) && acts_irreducibly(m)) {
            if (!f.pow(r).is_identity()) f = f.pow(p);
            if (f.pow(r).is_identity()) return f;
        }
        for (const auto& s : gens) {
            HeisenbergAutomorphism n = f * s;
            std::size_t k = sl.index_of(n.linear_part());
            if (!seen[k]) {
                seen[k] = true;
                queue.push_back(std::move(n));
            }
        }
    }
    throw std::logic_error("find_irreducible_automorphism: none found");
}

}  // namespace uebkit
