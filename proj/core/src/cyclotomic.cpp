#include "uebkit/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uebkit {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic_polynomial: coefficient overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("cyclotomic_polynomial: coefficient overflow");
    return r;
}

/// Exact quotient of num by a monic divisor.
IntPolynomial divide_monic(IntPolynomial num, const IntPolynomial& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("divide_monic: degree too small");
    IntPolynomial q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        std::int64_t c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] = checked_sub(num[i - dn + j], checked_mul(c, den[j]));
    }
    for (std::size_t j = 0; j < dn; ++j) {
        if (num[j] != 0) throw std::logic_error("divide_monic: nonzero remainder");
    }
    return q;
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<int, std::unique_ptr<CyclotomicField>>& registry() {
    static std::map<int, std::unique_ptr<CyclotomicField>> r;
    return r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::int64_t lcm_order(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

IntPolynomial cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    static std::mutex cache_mutex;
    static std::map<int, IntPolynomial> cache;
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    IntPolynomial poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
    }
    std::lock_guard lock(cache_mutex);
    cache.emplace(n, poly);
    return poly;
}

const CyclotomicField& CyclotomicField::get(int n) {
    if (n < 1) throw std::invalid_argument("CyclotomicField: order must be positive");
    std::lock_guard lock(registry_mutex());
    auto& reg = registry();
    if (auto it = reg.find(n); it != reg.end()) return *it->second;

    auto field = std::make_unique<CyclotomicField>();
    field->order = n;
    field->minimal_polynomial = cyclotomic_polynomial(n);
    const int deg = static_cast<int>(field->minimal_polynomial.size()) - 1;
    field->degree = deg;
    // x^deg = -(Phi_n - x^deg), then repeatedly multiply by x.
    std::vector<std::int64_t> cur(static_cast<std::size_t>(deg), 0);
    for (int j = 0; j < deg; ++j) cur[j] = -field->minimal_polynomial[j];
    for (int k = deg; k < n; ++k) {
        field->reduction.push_back(cur);
        std::int64_t top = cur[deg - 1];
        std::vector<std::int64_t> next(static_cast<std::size_t>(deg), 0);
        for (int j = deg - 1; j > 0; --j) next[j] = cur[j - 1];
        for (int j = 0; j < deg; ++j) next[j] = checked_sub(next[j], checked_mul(top, field->minimal_polynomial[j]));
        cur = std::move(next);
    }
    const CyclotomicField& ref = *field;
    reg.emplace(n, std::move(field));
    return ref;
}

// ---------------------------------------------------------------------------

Cyclotomic::Cyclotomic(const Rational& r, int order) : field_(&CyclotomicField::get(order)) {
    if (!r.is_zero()) {
        coeffs_.assign(static_cast<std::size_t>(field_->degree), Rational(0));
        coeffs_[0] = r;
    }
}

void Cyclotomic::trim() {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return;
    }
    coeffs_.clear();
}

Cyclotomic Cyclotomic::from_power_coefficients(int n, std::vector<Rational> raw) {
    const CyclotomicField& f = CyclotomicField::get(n);
    if (raw.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("from_power_coefficients: size mismatch");
    Cyclotomic out(&f);
    out.coeffs_.assign(raw.begin(), raw.begin() + f.degree);
    for (int k = f.degree; k < n; ++k) {
        const Rational& c = raw[k];
        if (c.is_zero()) continue;
        const auto& row = f.reduction[k - f.degree];
        for (int j = 0; j < f.degree; ++j) {
            if (row[j] != 0) out.coeffs_[j] += c * Rational(row[j]);
        }
    }
    out.trim();
    return out;
}

Cyclotomic Cyclotomic::zeta(int n, std::int64_t k) {
    const CyclotomicField& f = CyclotomicField::get(n);
    int e = static_cast<int>(mod_floor(k, n));
    Cyclotomic out(&f);
    out.coeffs_.assign(static_cast<std::size_t>(f.degree), Rational(0));
    if (e < f.degree) {
        out.coeffs_[e] = Rational(1);
    } else {
        const auto& row = f.reduction[e - f.degree];
        for (int j = 0; j < f.degree; ++j) out.coeffs_[j] = Rational(row[j]);
    }
    out.trim();
    return out;
}

bool Cyclotomic::is_one() const {
    if (coeffs_.empty() || !coeffs_[0].is_one()) return false;
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        if (!coeffs_[j].is_zero()) return false;
    }
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        if (!coeffs_[j].is_zero()) return false;
    }
    return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Rational Cyclotomic::coeff(int k) const {
    if (k < 0 || k >= degree()) throw std::out_of_range("Cyclotomic::coeff: exponent outside canonical support");
    return coeffs_.empty() ? Rational(0) : coeffs_[k];
}

std::vector<std::pair<int, Rational>> Cyclotomic::terms() const {
    std::vector<std::pair<int, Rational>> out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (!coeffs_[j].is_zero()) out.emplace_back(static_cast<int>(j), coeffs_[j]);
    }
    return out;
}

std::size_t Cyclotomic::term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_) n += c.is_zero() ? 0 : 1;
    return n;
}

Cyclotomic Cyclotomic::promote(int m) const {
    const int n = order();
    if (m == n) return *this;
    if (m % n != 0) throw std::invalid_argument("Cyclotomic::promote: target order must be a multiple of the current order");
    if (coeffs_.empty()) return Cyclotomic(Rational(0), m);
    const int s = m / n;
    std::vector<Rational> raw(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) raw[j * s] = coeffs_[j];
    return from_power_coefficients(m, std::move(raw));
}

Cyclotomic Cyclotomic::galois(int k) const {
    const int n = order();
    if (std::gcd(k, n) != 1) throw std::invalid_argument("Cyclotomic::galois: exponent not coprime to the order");
    if (coeffs_.empty() || n <= 2) return *this;
    std::vector<Rational> raw(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        raw[mod_floor(static_cast<std::int64_t>(j) * k, n)] += coeffs_[j];
    }
    return from_power_coefficients(n, std::move(raw));
}

Cyclotomic Cyclotomic::conj() const { return galois(order() - 1 == 0 ? 1 : order() - 1); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
    if (r.is_zero()) return Cyclotomic(Rational(0), order());
    Cyclotomic out = *this;
    if (r.is_one()) return out;
    for (auto& c : out.coeffs_) {
        if (!c.is_zero()) c = c * r;
    }
    return out;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order()) {
        int m = static_cast<int>(lcm_order(a.order(), b.order()));
        return a.promote(m) + b.promote(m);
    }
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Cyclotomic out = a;
    for (std::size_t j = 0; j < out.coeffs_.size(); ++j) out.coeffs_[j] += b.coeffs_[j];
    out.trim();
    return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    int m = static_cast<int>(lcm_order(a.order(), b.order()));
    if (a.is_zero() || b.is_zero()) return Cyclotomic(Rational(0), m);
    if (auto r = a.as_rational(); r && a.order() == m) return b.promote(m).scaled(*r);
    if (auto r = b.as_rational(); r && b.order() == m) return a.promote(m).scaled(*r);
    CyclotomicAccumulator acc(m);
    acc.add_product(a, b);
    return acc.finish();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    int m = static_cast<int>(lcm_order(a.order(), b.order()));
    return a.promote(m).coeffs_ == b.promote(m).coeffs_;
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(Rational(1), order());
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Rational Cyclotomic::norm() const {
    const int n = order();
    Cyclotomic prod = *this;
    for (int k = 2; k < n; ++k) {
        if (std::gcd(k, n) == 1) prod = prod * galois(k);
    }
    auto r = prod.as_rational();
    if (!r) throw std::logic_error("Cyclotomic::norm: product of conjugates is not rational");
    return *r;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic::inverse: zero");
    const int n = order();
    if (auto r = as_rational()) return Cyclotomic(r->inverse(), n);
    auto t = terms();
    if (t.size() == 1) {
        Cyclotomic z = zeta(n, -t[0].first);
        return z.scaled(t[0].second.inverse());
    }
    Cyclotomic others(Rational(1), n);
    for (int k = 2; k < n; ++k) {
        if (std::gcd(k, n) == 1) others = others * galois(k);
    }
    auto nrm = (others * *this).as_rational();
    if (!nrm || nrm->is_zero()) throw std::logic_error("Cyclotomic::inverse: degenerate norm");
    return others.scaled(nrm->inverse());
}

std::optional<std::pair<int, int>> Cyclotomic::as_root_of_unity() const {
    if (is_zero()) return std::nullopt;
    const int n = order();
    const int m = static_cast<int>(lcm_order(2, n));
    // Roots of unity in Q(zeta_n) are exactly +-zeta_n^k.
    for (int k = 0; k < n; ++k) {
        Cyclotomic z = zeta(n, k);
        if (z == *this) return std::make_pair(m, (k * (m / n)) % m);
        if (-z == *this) return std::make_pair(m, (k * (m / n) + m / 2) % m);
    }
    return std::nullopt;
}

std::optional<int> Cyclotomic::root_of_unity_order() const {
    if (is_zero()) throw std::domain_error("root_of_unity_order: zero has no multiplicative order");
    auto r = as_root_of_unity();
    if (!r) return std::nullopt;
    auto [m, j] = *r;
    return m / std::gcd(m, j);
}

std::string Cyclotomic::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational& c = coeffs_[j];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << c;
        } else {
            if (!c.is_one()) os << c << "*";
            os << "z" << order() << (j == 1 ? std::string() : "^" + std::to_string(j));
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

CyclotomicAccumulator::CyclotomicAccumulator(int order)
    : field_(&CyclotomicField::get(order)), raw_(static_cast<std::size_t>(order), Rational(0)) {}

void CyclotomicAccumulator::add(const Cyclotomic& a) {
    if (a.is_zero()) return;
    const int n = field_->order;
    if (n % a.order() != 0) throw std::invalid_argument("CyclotomicAccumulator: operand order does not divide the accumulator order");
    const int s = n / a.order();
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) {
        if (!a.coeffs_[j].is_zero()) raw_[j * s] += a.coeffs_[j];
    }
    empty_ = false;
}

void CyclotomicAccumulator::add_product(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_zero() || b.is_zero()) return;
    const int n = field_->order;
    if (n % a.order() != 0 || n % b.order() != 0) {
        throw std::invalid_argument("CyclotomicAccumulator: operand order does not divide the accumulator order");
    }
    const int sa = n / a.order();
    const int sb = n / b.order();
    const auto& ca = a.coeffs_;
    const auto& cb = b.coeffs_;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i].is_zero()) continue;
        const int ei = static_cast<int>(i) * sa;
        for (std::size_t j = 0; j < cb.size(); ++j) {
            if (cb[j].is_zero()) continue;
            int e = ei + static_cast<int>(j) * sb;
            if (e >= n) e -= n;
            raw_[e] += ca[i] * cb[j];
        }
    }
    empty_ = false;
}

Cyclotomic CyclotomicAccumulator::finish() {
    std::vector<Rational> raw(raw_.size(), Rational(0));
    raw.swap(raw_);
    empty_ = true;
    return Cyclotomic::from_power_coefficients(field_->order, std::move(raw));
}

}  // namespace uebkit
