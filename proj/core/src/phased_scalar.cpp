#include "uebkit/phased_scalar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uebkit {

namespace {

void trim_exponents(std::vector<int>& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

std::vector<int> add_exponents(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim_exponents(out);
    return out;
}

}  // namespace

SymbolAlphabet make_alphabet(std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            if (names[i] == names[j]) throw std::invalid_argument("make_alphabet: duplicate symbol '" + names[i] + "'");
        }
    }
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

SymbolAlphabet merge_alphabets(const SymbolAlphabet& a, const SymbolAlphabet& b) {
    if (!a) return b;
    if (!b || a == b || *a == *b) return a;
    throw std::invalid_argument("PhasedScalar: incompatible symbol alphabets");
}

PhasedScalar::PhasedScalar(const Cyclotomic& c) {
    if (!c.is_zero()) terms_.push_back(Term{{}, c});
}

PhasedScalar PhasedScalar::monomial(SymbolAlphabet alphabet, std::vector<int> exponents, const Cyclotomic& coeff) {
    std::size_t n = alphabet ? alphabet->size() : 0;
    if (exponents.size() > n) throw std::invalid_argument("PhasedScalar::monomial: more exponents than declared symbols");
    PhasedScalar out;
    out.alphabet_ = std::move(alphabet);
    trim_exponents(exponents);
    if (!coeff.is_zero()) out.terms_.push_back(Term{std::move(exponents), coeff});
    return out;
}

PhasedScalar PhasedScalar::symbol(const SymbolAlphabet& alphabet, std::string_view name, int exponent) {
    if (!alphabet) throw std::invalid_argument("PhasedScalar::symbol: no alphabet declared");
    auto it = std::find(alphabet->begin(), alphabet->end(), name);
    if (it == alphabet->end()) throw std::invalid_argument("PhasedScalar::symbol: undeclared symbol '" + std::string(name) + "'");
    std::vector<int> e(static_cast<std::size_t>(it - alphabet->begin()) + 1, 0);
    e.back() = exponent;
    return monomial(alphabet, std::move(e), Cyclotomic(1));
}

PhasedScalar PhasedScalar::from_map(SymbolAlphabet alphabet, std::map<std::vector<int>, Cyclotomic> terms) {
    PhasedScalar out;
    out.alphabet_ = std::move(alphabet);
    for (auto& [e, c] : terms) {
        if (!c.is_zero()) out.terms_.push_back(Term{e, std::move(c)});
    }
    return out;
}

bool PhasedScalar::is_one() const { return terms_.size() == 1 && terms_[0].exponents.empty() && terms_[0].coeff.is_one(); }

bool PhasedScalar::has_symbols() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return !t.exponents.empty(); });
}

std::optional<Cyclotomic> PhasedScalar::as_cyclotomic() const {
    if (terms_.empty()) return Cyclotomic(0);
    if (terms_.size() == 1 && terms_[0].exponents.empty()) return terms_[0].coeff;
    return std::nullopt;
}

std::optional<Rational> PhasedScalar::as_rational() const {
    auto c = as_cyclotomic();
    if (!c) return std::nullopt;
    return c->as_rational();
}

int PhasedScalar::order() const {
    std::int64_t m = 1;
    for (const auto& t : terms_) m = lcm_order(m, t.coeff.order());
    return static_cast<int>(m);
}

PhasedScalar PhasedScalar::conj() const {
    std::map<std::vector<int>, Cyclotomic> m;
    for (const auto& t : terms_) {
        std::vector<int> e = t.exponents;
        for (auto& v : e) v = -v;
        m.emplace(std::move(e), t.coeff.conj());
    }
    if (terms_.size() <= 1) {
        PhasedScalar out;
        out.alphabet_ = alphabet_;
        for (auto& [e, c] : m) out.terms_.push_back(Term{e, c});
        return out;
    }
    return from_map(alphabet_, std::move(m));
}

PhasedScalar PhasedScalar::inverse() const {
    if (terms_.empty()) throw std::domain_error("PhasedScalar::inverse: zero");
    if (terms_.size() != 1) throw std::domain_error("PhasedScalar::inverse: only single-term values are invertible (" + str() + ")");
    std::vector<int> e = terms_[0].exponents;
    for (auto& v : e) v = -v;
    return monomial(alphabet_, std::move(e), terms_[0].coeff.inverse());
}

PhasedScalar PhasedScalar::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    PhasedScalar result(1);
    PhasedScalar base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

PhasedScalar PhasedScalar::scaled(const Rational& r) const {
    if (r.is_zero()) return PhasedScalar();
    PhasedScalar out = *this;
    for (auto& t : out.terms_) t.coeff = t.coeff.scaled(r);
    return out;
}

PhasedScalar PhasedScalar::promote(int m) const {
    PhasedScalar out = *this;
    for (auto& t : out.terms_) t.coeff = t.coeff.promote(m);
    return out;
}

PhasedScalar PhasedScalar::substitute(std::string_view name, const Cyclotomic& value) const {
    if (!alphabet_) return *this;
    auto it = std::find(alphabet_->begin(), alphabet_->end(), name);
    if (it == alphabet_->end()) return *this;
    const std::size_t idx = static_cast<std::size_t>(it - alphabet_->begin());
    PhasedScalar out;
    for (const auto& t : terms_) {
        std::vector<int> e = t.exponents;
        int k = idx < e.size() ? e[idx] : 0;
        if (idx < e.size()) e[idx] = 0;
        trim_exponents(e);
        out = out + monomial(alphabet_, std::move(e), t.coeff * value.pow(k));
    }
    out.alphabet_ = alphabet_;
    return out;
}

std::optional<int> PhasedScalar::root_of_unity_order() const {
    if (is_zero()) throw std::domain_error("root_of_unity_order: zero has no multiplicative order");
    auto c = as_cyclotomic();
    if (!c) return std::nullopt;
    return c->root_of_unity_order();
}

bool PhasedScalar::is_unit_modulus() const { return (*this * conj()).is_one(); }

PhasedScalar PhasedScalar::operator-() const {
    PhasedScalar out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

PhasedScalar operator+(const PhasedScalar& a, const PhasedScalar& b) {
    SymbolAlphabet alpha = merge_alphabets(a.alphabet_, b.alphabet_);
    if (a.terms_.empty()) {
        PhasedScalar out = b;
        out.alphabet_ = alpha;
        return out;
    }
    if (b.terms_.empty()) {
        PhasedScalar out = a;
        out.alphabet_ = alpha;
        return out;
    }
    if (a.terms_.size() == 1 && b.terms_.size() == 1 && a.terms_[0].exponents == b.terms_[0].exponents) {
        PhasedScalar out;
        out.alphabet_ = alpha;
        Cyclotomic c = a.terms_[0].coeff + b.terms_[0].coeff;
        if (!c.is_zero()) out.terms_.push_back(PhasedScalar::Term{a.terms_[0].exponents, std::move(c)});
        return out;
    }
    std::map<std::vector<int>, Cyclotomic> m;
    for (const auto& t : a.terms_) m.emplace(t.exponents, t.coeff);
    for (const auto& t : b.terms_) {
        auto [it, inserted] = m.emplace(t.exponents, t.coeff);
        if (!inserted) it->second = it->second + t.coeff;
    }
    return PhasedScalar::from_map(alpha, std::move(m));
}

PhasedScalar operator-(const PhasedScalar& a, const PhasedScalar& b) { return a + (-b); }

PhasedScalar operator*(const PhasedScalar& a, const PhasedScalar& b) {
    SymbolAlphabet alpha = merge_alphabets(a.alphabet_, b.alphabet_);
    PhasedScalar out;
    out.alphabet_ = alpha;
    if (a.terms_.empty() || b.terms_.empty()) return out;
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        Cyclotomic c = a.terms_[0].coeff * b.terms_[0].coeff;
        if (!c.is_zero()) out.terms_.push_back(PhasedScalar::Term{add_exponents(a.terms_[0].exponents, b.terms_[0].exponents), std::move(c)});
        return out;
    }
    std::map<std::vector<int>, Cyclotomic> m;
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            auto e = add_exponents(s.exponents, t.exponents);
            Cyclotomic c = s.coeff * t.coeff;
            auto [it, inserted] = m.emplace(std::move(e), c);
            if (!inserted) it->second = it->second + c;
        }
    }
    return PhasedScalar::from_map(alpha, std::move(m));
}

PhasedScalar operator/(const PhasedScalar& a, const PhasedScalar& b) {
    if (auto c = b.as_cyclotomic()) {
        if (c->is_zero()) throw std::domain_error("PhasedScalar: division by zero");
        return a * PhasedScalar(c->inverse());
    }
    return a * b.inverse();
}

bool operator==(const PhasedScalar& a, const PhasedScalar& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].exponents != b.terms_[i].exponents) return false;
        if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
}

std::string PhasedScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0) os << " + ";
        const auto& t = terms_[i];
        bool sym = !t.exponents.empty();
        if (sym) os << "(";
        os << t.coeff.str();
        if (sym) {
            os << ")";
            for (std::size_t k = 0; k < t.exponents.size(); ++k) {
                if (t.exponents[k] == 0) continue;
                os << "*" << (alphabet_ ? (*alphabet_)[k] : "s" + std::to_string(k));
                if (t.exponents[k] != 1) os << "^" << t.exponents[k];
            }
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

void PhasedAccumulator::add_product(const PhasedScalar& a, const PhasedScalar& b) {
    if (a.terms_.empty() || b.terms_.empty()) return;
    alphabet_ = merge_alphabets(alphabet_, merge_alphabets(a.alphabet_, b.alphabet_));
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            if (s.exponents.empty() && t.exponents.empty()) {
                plain_.add_product(s.coeff, t.coeff);
                continue;
            }
            auto e = add_exponents(s.exponents, t.exponents);
            if (e.empty()) {
                plain_.add_product(s.coeff, t.coeff);
                continue;
            }
            auto it = symbolic_.find(e);
            if (it == symbolic_.end()) it = symbolic_.emplace(std::move(e), CyclotomicAccumulator(order_)).first;
            it->second.add_product(s.coeff, t.coeff);
        }
    }
}

PhasedScalar PhasedAccumulator::finish() {
    PhasedScalar out;
    out.alphabet_ = alphabet_;
    if (!plain_.empty()) {
        Cyclotomic c = plain_.finish();
        if (!c.is_zero()) out.terms_.push_back(PhasedScalar::Term{{}, std::move(c)});
    }
    for (auto& [e, acc] : symbolic_) {
        Cyclotomic c = acc.finish();
        if (!c.is_zero()) out.terms_.push_back(PhasedScalar::Term{e, std::move(c)});
    }
    symbolic_.clear();
    alphabet_.reset();
    return out;
}

}  // namespace uebkit
