#include "uebkit/exact_matrix.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uebkit {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// Rows of nonzero column indices, used to skip zeros in products.
std::vector<std::vector<std::size_t>> row_support(const ExactMatrix& m) {
    std::vector<std::vector<std::size_t>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m.at(i, j).is_zero()) out[i].push_back(j);
        }
    }
    return out;
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<PhasedScalar> entries, Rational scale)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), scale_(std::move(scale)) {
    require(entries_.size() == rows_ * cols_, "ExactMatrix: entry count does not match shape");
    require(!scale_.is_zero(), "ExactMatrix: zero scale");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = PhasedScalar(1);
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<PhasedScalar>& diag) {
    ExactMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
    return m;
}

ExactMatrix ExactMatrix::permutation(const std::vector<std::size_t>& perm) {
    const std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    ExactMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        require(perm[j] < n && !seen[perm[j]], "ExactMatrix::permutation: not a permutation");
        seen[perm[j]] = true;
        m.at(perm[j], j) = PhasedScalar(1);
    }
    return m;
}

PhasedScalar ExactMatrix::value(std::size_t i, std::size_t j) const { return at(i, j).scaled(scale_); }

ExactMatrix ExactMatrix::normalized() const {
    if (scale_.is_one()) return *this;
    ExactMatrix out = *this;
    for (auto& e : out.entries_) e = e.scaled(scale_);
    out.scale_ = Rational(1);
    return out;
}

ExactMatrix ExactMatrix::with_scale(const Rational& s) const {
    ExactMatrix out = *this;
    require(!s.is_zero(), "ExactMatrix: zero scale");
    out.scale_ = s;
    return out;
}

ExactMatrix ExactMatrix::times(const PhasedScalar& c) const {
    if (auto r = c.as_rational()) {
        if (r->is_zero()) return ExactMatrix(rows_, cols_);
        return with_scale(scale_ * *r);
    }
    ExactMatrix out = *this;
    for (auto& e : out.entries_) {
        if (!e.is_zero()) e = e * c;
    }
    return out;
}

ExactMatrix ExactMatrix::dagger() const {
    ExactMatrix out(cols_, rows_);
    out.scale_ = scale_;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const auto& e = at(i, j);
            if (!e.is_zero()) out.at(j, i) = e.conj();
        }
    }
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols_, rows_);
    out.scale_ = scale_;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
}

PhasedScalar ExactMatrix::trace() const {
    require(is_square(), "trace: matrix is not square");
    PhasedScalar sum;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!at(i, i).is_zero()) sum += at(i, i);
    }
    return sum.scaled(scale_);
}

int ExactMatrix::order() const {
    std::int64_t m = 1;
    for (const auto& e : entries_) m = lcm_order(m, e.order());
    return static_cast<int>(m);
}

bool ExactMatrix::has_symbols() const {
    for (const auto& e : entries_) {
        if (e.has_symbols()) return true;
    }
    return false;
}

std::size_t ExactMatrix::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& e : entries_) n += e.is_zero() ? 0 : 1;
    return n;
}

bool ExactMatrix::is_zero() const { return nonzero_count() == 0; }

bool ExactMatrix::is_monomial() const {
    if (!is_square()) return false;
    std::vector<int> col_hits(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        int row_hits = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            ++row_hits;
            ++col_hits[j];
        }
        if (row_hits != 1) return false;
    }
    for (int c : col_hits) {
        if (c != 1) return false;
    }
    return true;
}

bool ExactMatrix::is_diagonal() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i != j && !at(i, j).is_zero()) return false;
        }
    }
    return true;
}

bool ExactMatrix::is_identity() const {
    auto c = as_scalar();
    return c && c->is_one();
}

std::optional<PhasedScalar> ExactMatrix::as_scalar() const {
    if (!is_diagonal() || rows_ == 0) return std::nullopt;
    const PhasedScalar& first = at(0, 0);
    for (std::size_t i = 1; i < rows_; ++i) {
        if (!(at(i, i) == first)) return std::nullopt;
    }
    return first.scaled(scale_);
}

std::optional<PhasedScalar> ExactMatrix::scalar_ratio(const ExactMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return std::nullopt;
    std::optional<PhasedScalar> c;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        const auto& b = other.entries_[k];
        const auto& a = entries_[k];
        if (b.is_zero() != a.is_zero()) return std::nullopt;
        if (!c && b.is_monomial()) c = (a / b).scaled(scale_ / other.scale_);
    }
    if (!c) {
        PhasedScalar bb = trace_inner(other, other);
        if (bb.is_zero()) return std::nullopt;
        if (!bb.as_cyclotomic()) throw std::domain_error("scalar_ratio: cannot divide by a symbolic norm");
        c = trace_inner(other, *this) / bb;
    }
    if (!(*this == other.times(*c))) return std::nullopt;
    return c;
}

std::vector<std::size_t> ExactMatrix::monomial_pattern() const {
    require(is_monomial(), "monomial_pattern: matrix is not monomial");
    std::vector<std::size_t> out(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!at(i, j).is_zero()) out[j] = i;
        }
    }
    return out;
}

ExactMatrix ExactMatrix::inverse() const {
    require(is_square(), "inverse: matrix is not square");
    const std::size_t n = rows_;
    if (is_monomial()) {
        ExactMatrix out(n, n);
        out.scale_ = scale_.inverse();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (!at(i, j).is_zero()) out.at(j, i) = at(i, j).inverse();
            }
        }
        return out;
    }
    if (auto s = is_scaled_unitary(*this)) {
        ExactMatrix d = dagger();
        return d.with_scale(d.scale() / *s);
    }
    require(!has_symbols(), "inverse: symbolic non-unitary matrices are not supported");
    std::vector<Cyclotomic> a(n * n), inv(n * n);
    for (std::size_t k = 0; k < n * n; ++k) a[k] = *entries_[k].as_cyclotomic();
    for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = Cyclotomic(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * n + col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("inverse: matrix is singular");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[piv * n + j], a[col * n + j]);
                std::swap(inv[piv * n + j], inv[col * n + j]);
            }
        }
        Cyclotomic p = a[col * n + col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col * n + j] *= p;
            inv[col * n + j] *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i * n + col].is_zero()) continue;
            Cyclotomic f = a[i * n + col];
            for (std::size_t j = 0; j < n; ++j) {
                if (!a[col * n + j].is_zero()) a[i * n + j] -= f * a[col * n + j];
                if (!inv[col * n + j].is_zero()) inv[i * n + j] -= f * inv[col * n + j];
            }
        }
    }
    std::vector<PhasedScalar> e(n * n);
    for (std::size_t k = 0; k < n * n; ++k) e[k] = PhasedScalar(inv[k]);
    return ExactMatrix(n, n, std::move(e), scale_.inverse());
}

ExactMatrix ExactMatrix::pow(std::int64_t e) const {
    require(is_square(), "pow: matrix is not square");
    if (e < 0) return inverse().pow(-e);
    ExactMatrix result = identity(rows_);
    ExactMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    if (a.scale_ == b.scale_) return a.entries_ == b.entries_;
    Rational r = a.scale_ / b.scale_;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        if (a.entries_[k].is_zero() != b.entries_[k].is_zero()) return false;
        if (a.entries_[k].is_zero()) continue;
        if (!(a.entries_[k].scaled(r) == b.entries_[k])) return false;
    }
    return true;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    if (!scale_.is_one()) os << scale_.str() << " * ";
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
    require(a.cols() == b.rows(), "matmul: dimension mismatch");
    const std::size_t n = a.rows(), m = b.cols();
    std::vector<PhasedScalar> out(n * m);
    const auto a_rows = row_support(a);
    std::vector<std::vector<std::size_t>> b_cols(m);
    for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!b.at(k, j).is_zero()) b_cols[j].push_back(k);
        }
    }
    const int order = static_cast<int>(lcm_order(a.order(), b.order()));
    PhasedAccumulator acc(order);
    std::vector<char> in_row(a.cols(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a_rows[i].empty()) continue;
        for (std::size_t k : a_rows[i]) in_row[k] = 1;
        for (std::size_t j = 0; j < m; ++j) {
            const PhasedScalar* first_a = nullptr;
            const PhasedScalar* first_b = nullptr;
            int hits = 0;
            // Walk the shorter support list.
            const bool walk_row = a_rows[i].size() <= b_cols[j].size();
            const auto& walk = walk_row ? a_rows[i] : b_cols[j];
            for (std::size_t k : walk) {
                if (walk_row ? b.at(k, j).is_zero() : !in_row[k]) continue;
                const PhasedScalar& x = a.at(i, k);
                const PhasedScalar& y = b.at(k, j);
                if (hits == 0) {
                    first_a = &x;
                    first_b = &y;
                } else {
                    if (hits == 1) acc.add_product(*first_a, *first_b);
                    acc.add_product(x, y);
                }
                ++hits;
            }
            if (hits == 1) {
                out[i * m + j] = *first_a * *first_b;
            } else if (hits > 1) {
                out[i * m + j] = acc.finish();
            }
        }
        for (std::size_t k : a_rows[i]) in_row[k] = 0;
    }
    return ExactMatrix(n, m, std::move(out), a.scale() * b.scale());
}

namespace {

ExactMatrix combine(const ExactMatrix& a, const ExactMatrix& b, bool subtract) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum: dimension mismatch");
    Rational s = a.scale();
    Rational rb = b.scale() / s;
    std::vector<PhasedScalar> out(a.entries().size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        PhasedScalar y = b.entries()[k].scaled(rb);
        out[k] = subtract ? a.entries()[k] - y : a.entries()[k] + y;
    }
    return ExactMatrix(a.rows(), a.cols(), std::move(out), s);
}

}  // namespace

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) { return combine(a, b, false); }
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return combine(a, b, true); }

ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b) {
    const std::size_t r = a.rows() * b.rows(), c = a.cols() * b.cols();
    std::vector<PhasedScalar> out(r * c);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& x = a.at(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const auto& y = b.at(k, l);
                    if (!y.is_zero()) out[(i * b.rows() + k) * c + j * b.cols() + l] = x * y;
                }
            }
        }
    }
    return ExactMatrix(r, c, std::move(out), a.scale() * b.scale());
}

std::optional<Rational> is_scaled_unitary(const ExactMatrix& a) {
    if (!a.is_square() || a.rows() == 0) return std::nullopt;
    ExactMatrix p = a * a.dagger();
    auto c = p.as_scalar();
    if (!c) return std::nullopt;
    auto r = c->as_rational();
    if (!r || r->sign() <= 0) return std::nullopt;
    return r;
}

PhasedScalar trace_inner(const ExactMatrix& a, const ExactMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "trace_inner: dimension mismatch");
    const int order = static_cast<int>(lcm_order(a.order(), b.order()));
    PhasedAccumulator acc(order);
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        const auto& x = a.entries()[k];
        const auto& y = b.entries()[k];
        if (!x.is_zero() && !y.is_zero()) acc.add_product(x.conj(), y);
    }
    return acc.finish().scaled(a.scale() * b.scale());
}

MonomialityReport monomiality_report(const std::vector<ExactMatrix>& ms) {
    MonomialityReport rep;
    std::size_t total = 0, nonzero = 0;
    for (const auto& m : ms) {
        require(m.is_square() && m.rows() == ms.front().rows(), "monomiality_report: matrices must share one square size");
        std::size_t nz = m.nonzero_count();
        rep.per_matrix_nonzero_counts.push_back(nz);
        rep.is_monomial = rep.is_monomial && m.is_monomial();
        total += m.rows() * m.cols();
        nonzero += nz;
    }
    if (total > 0) {
        rep.zero_fraction = Rational(static_cast<std::int64_t>(total - nonzero), static_cast<std::int64_t>(total));
    }
    return rep;
}

ExactMatrix shift_matrix(int d) {
    require(d >= 1, "shift_matrix: d must be positive");
    std::vector<std::size_t> perm(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) perm[static_cast<std::size_t>(k)] = static_cast<std::size_t>((k + d - 1) % d);
    return ExactMatrix::permutation(perm);
}

ExactMatrix clock_matrix(int d) {
    require(d >= 1, "clock_matrix: d must be positive");
    std::vector<PhasedScalar> diag;
    for (int k = 0; k < d; ++k) diag.push_back(PhasedScalar::zeta(d, k));
    return ExactMatrix::diagonal(diag);
}

ExactMatrix fourier_matrix(int d) {
    require(d >= 1, "fourier_matrix: d must be positive");
    const auto n = static_cast<std::size_t>(d);
    ExactMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) m.at(j, k) = PhasedScalar::zeta(d, static_cast<std::int64_t>((j * k) % n));
    }
    return m;
}

// ---------------------------------------------------------------------------

TensorMatrix::TensorMatrix(std::vector<ExactMatrix> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_) require(f.is_square(), "TensorMatrix: factors must be square");
}

std::size_t TensorMatrix::dim() const {
    std::size_t d = 1;
    for (const auto& f : factors_) d *= f.rows();
    return d;
}

PhasedScalar TensorMatrix::trace() const {
    PhasedScalar t(1);
    for (const auto& f : factors_) {
        t = t * f.trace();
        if (t.is_zero()) break;
    }
    return t;
}

ExactMatrix TensorMatrix::materialize() const {
    ExactMatrix out = ExactMatrix::identity(1);
    for (const auto& f : factors_) out = tensor(out, f);
    return out;
}

TensorMatrix TensorMatrix::dagger() const {
    std::vector<ExactMatrix> fs;
    for (const auto& f : factors_) fs.push_back(f.dagger());
    return TensorMatrix(std::move(fs));
}

TensorMatrix TensorMatrix::inverse() const {
    std::vector<ExactMatrix> fs;
    for (const auto& f : factors_) fs.push_back(f.inverse());
    return TensorMatrix(std::move(fs));
}

std::optional<PhasedScalar> TensorMatrix::scalar_ratio(const TensorMatrix& other) const {
    require(factors_.size() == other.factors_.size(), "TensorMatrix: factor count mismatch");
    PhasedScalar c(1);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto r = factors_[i].scalar_ratio(other.factors_[i]);
        if (!r) return std::nullopt;
        c = c * *r;
    }
    return c;
}

std::optional<PhasedScalar> TensorMatrix::as_scalar() const {
    PhasedScalar c(1);
    for (const auto& f : factors_) {
        auto r = f.as_scalar();
        if (!r) return std::nullopt;
        c = c * *r;
    }
    return c;
}

TensorMatrix operator*(const TensorMatrix& a, const TensorMatrix& b) {
    require(a.factors_.size() == b.factors_.size(), "TensorMatrix: factor count mismatch");
    std::vector<ExactMatrix> fs;
    fs.reserve(a.factors_.size());
    for (std::size_t i = 0; i < a.factors_.size(); ++i) fs.push_back(a.factors_[i] * b.factors_[i]);
    return TensorMatrix(std::move(fs));
}

bool operator==(const TensorMatrix& a, const TensorMatrix& b) {
    auto r = a.scalar_ratio(b);
    return r && r->is_one();
}

}  // namespace uebkit
