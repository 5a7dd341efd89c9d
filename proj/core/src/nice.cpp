#include "uebkit/nice.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace uebkit {

std::optional<Rational> is_scaled_unitary(const TensorMatrix& a) {
    Rational s(1);
    for (const auto& f : a.factors()) {
        auto r = is_scaled_unitary(f);
        if (!r) return std::nullopt;
        s = s * *r;
    }
    return s;
}

TableGroup::TableGroup(std::vector<std::vector<std::size_t>> table) {
    const std::size_t n = table.size();
    if (n == 0) throw std::invalid_argument("TableGroup: empty table");
    std::vector<std::size_t> inv(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n) throw std::invalid_argument("TableGroup: table is not square");
        if (table[0][a] != a || table[a][0] != a) throw std::invalid_argument("TableGroup: element 0 is not the identity");
        for (std::size_t b = 0; b < n; ++b) {
            if (table[a][b] >= n) throw std::invalid_argument("TableGroup: entry out of range");
            if (table[a][b] == 0) inv[a] = b;
        }
        if (inv[a] == n) throw std::invalid_argument("TableGroup: element without inverse");
    }
    // Greedy generating set: add any element outside the span so far.
    std::vector<std::size_t> gens;
    std::vector<char> in(n, 0);
    in[0] = 1;
    std::vector<std::size_t> span{0};
    for (std::size_t a = 1; a < n; ++a) {
        if (in[a]) continue;
        gens.push_back(a);
        std::deque<std::size_t> queue(span.begin(), span.end());
        while (!queue.empty()) {
            std::size_t x = queue.front();
            queue.pop_front();
            for (std::size_t s : gens) {
                std::size_t y = table[x][s];
                if (!in[y]) {
                    in[y] = 1;
                    span.push_back(y);
                    queue.push_back(y);
                }
            }
        }
    }
    table_ = std::make_shared<const std::vector<std::vector<std::size_t>>>(std::move(table));
    inverse_ = std::make_shared<const std::vector<std::size_t>>(std::move(inv));
    generators_ = std::make_shared<const std::vector<std::size_t>>(std::move(gens));
}

ProjectiveRep<PauliIndexGroup> pauli_rep(int d) {
    if (d < 1) throw std::invalid_argument("pauli_rep: dimension must be positive");
    PauliIndexGroup g{CyclicGroup(d), CyclicGroup(d)};
    auto mats = std::make_shared<std::vector<ExactMatrix>>();
    const ExactMatrix x = shift_matrix(d), z = clock_matrix(d);
    ExactMatrix xi = ExactMatrix::identity(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        ExactMatrix m = xi;
        for (int j = 0; j < d; ++j) {
            mats->push_back(m);
            m = m * z;
        }
        xi = xi * x;
    }
    return ProjectiveRep<PauliIndexGroup>(g, static_cast<std::size_t>(d),
                                          [mats, g](const PauliIndexGroup::Element& e) { return (*mats)[g.index_of(e)]; });
}

ExactMatrix heisenberg_matrix(const HeisenbergElement& g) {
    const ExactMatrix zy = clock_matrix(g.d).pow(g.y);
    const ExactMatrix xx = shift_matrix(g.d).pow(g.x);
    return (zy * xx).times(PhasedScalar::zeta(g.d, g.z));
}

ProjectiveRep<HeisenbergGroup> heisenberg_rep(int d) {
    return ProjectiveRep<HeisenbergGroup>(HeisenbergGroup(d), static_cast<std::size_t>(d), heisenberg_matrix);
}

namespace {

int lcm_of_orders(const std::vector<ExactMatrix>& ms) {
    int l = 1;
    for (const auto& m : ms) l = std::lcm(l, m.order());
    return l;
}

// Entries are promoted to a common order so that equal values print equally.
std::string exact_key(const ExactMatrix& m, int order) {
    ExactMatrix n = m.normalized();
    std::string key;
    for (const auto& x : n.entries()) key += x.promote(order).str() + "|";
    return key;
}

// Key identifying a matrix up to a nonzero scalar: divide by the first
// nonzero entry.
std::string projective_key(const ExactMatrix& m, int order) {
    const ExactMatrix n = m.normalized();
    for (const auto& e : n.entries()) {
        if (e.is_zero()) continue;
        if (!e.is_monomial()) throw std::domain_error("projective_key: leading entry is not invertible");
        return exact_key(n.times(e.inverse()), order);
    }
    return "0";
}

}  // namespace

static InferredIndexGroup infer_table(const std::vector<ExactMatrix>& members) {
    InferredIndexGroup out;
    const std::size_t n = members.size();
    if (n == 0) {
        out.failure = "no members";
        return out;
    }
    std::size_t id = n;
    for (std::size_t k = 0; k < n && id == n; ++k) {
        if (members[k].as_scalar()) id = k;
    }
    if (id == n) {
        out.failure = "no member is a scalar multiple of the identity";
        return out;
    }
    out.order.push_back(id);
    for (std::size_t k = 0; k < n; ++k) {
        if (k != id) out.order.push_back(k);
    }
    const int order = lcm_of_orders(members);
    std::unordered_map<std::string, std::size_t> lookup;
    for (std::size_t k = 0; k < n; ++k) {
        auto [it, fresh] = lookup.emplace(projective_key(members[out.order[k]], order), k);
        if (!fresh) {
            out.failure = "two members are proportional";
            out.failing_pair = std::pair{out.order[it->second], out.order[k]};
            return out;
        }
    }
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            auto it = lookup.find(projective_key(members[out.order[a]] * members[out.order[b]], order));
            if (it == lookup.end()) {
                out.failure = "product of two members is not proportional to a member";
                out.failing_pair = std::pair{out.order[a], out.order[b]};
                return out;
            }
            table[a][b] = it->second;
        }
    }
    try {
        out.group = TableGroup(std::move(table));
    } catch (const std::invalid_argument& e) {
        out.failure = e.what();
    }
    return out;
}

InferredIndexGroup infer_index_group(const std::vector<ExactMatrix>& members) {
    try {
        return infer_table(members);
    } catch (const std::domain_error& e) {
        InferredIndexGroup out;
        out.failure = e.what();
        return out;
    }
}

ProjectiveRep<TableGroup> rep_from_members(const TableGroup& g, const std::vector<ExactMatrix>& members, const std::vector<std::size_t>& order) {
    auto mats = std::make_shared<std::vector<ExactMatrix>>();
    for (std::size_t k : order) mats->push_back(members.at(k));
    // Rescale the identity member so that rho(1) = I holds exactly.
    auto c = mats->front().as_scalar();
    if (c && c->is_monomial()) mats->front() = mats->front().times(c->inverse());
    const std::size_t dim = mats->front().rows();
    return ProjectiveRep<TableGroup>(g, dim, [mats](std::size_t e) { return (*mats)[e]; });
}

PhasedScalar determinant(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    Rational sc(1);
    for (std::size_t k = 0; k < n; ++k) sc = sc * m.scale();
    if (m.is_monomial()) {
        auto perm = m.monomial_pattern();
        PhasedScalar p(1);
        std::vector<char> seen(n, 0);
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
            p = p * m.at(perm[j], j);
            if (seen[j]) continue;
            std::size_t len = 0;
            for (std::size_t k = j; !seen[k]; k = perm[k]) {
                seen[k] = 1;
                ++len;
            }
            if (len % 2 == 0) sign = -sign;
        }
        return p.scaled(sc * Rational(sign));
    }
    if (m.has_symbols()) throw std::domain_error("determinant: symbolic non-monomial matrices are not supported");
    std::vector<Cyclotomic> a(n * n);
    for (std::size_t k = 0; k < n * n; ++k) a[k] = *m.entries()[k].as_cyclotomic();
    Cyclotomic det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * n + col].is_zero()) ++piv;
        if (piv == n) return PhasedScalar(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
            det = -det;
        }
        det *= a[col * n + col];
        Cyclotomic p = a[col * n + col].inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i * n + col].is_zero()) continue;
            Cyclotomic f = a[i * n + col] * p;
            for (std::size_t j = col; j < n; ++j) {
                if (!a[col * n + j].is_zero()) a[i * n + j] -= f * a[col * n + j];
            }
        }
    }
    return PhasedScalar(det).scaled(sc);
}

PhasedScalar det_normalizer(const ExactMatrix& m) {
    auto s = is_scaled_unitary(m);
    if (!s || !s->is_one()) throw std::domain_error("det_normalizer: matrix is not unitary");
    auto det = determinant(m).as_cyclotomic();
    if (!det) throw std::domain_error("det_normalizer: symbolic determinant");
    auto root = det->as_root_of_unity();
    if (!root) throw std::domain_error("det_normalizer: determinant " + det->str() + " is not a root of unity");
    const auto d = static_cast<int>(m.rows());
    return PhasedScalar::zeta(root->first * d, -root->second);
}

std::size_t generated_matrix_group_order(const std::vector<ExactMatrix>& gens, std::size_t limit) {
    if (gens.empty()) return 1;
    const int order = lcm_of_orders(gens);
    auto key = [order](const ExactMatrix& m) { return exact_key(m, order); };
    std::unordered_map<std::string, char> seen;
    std::deque<ExactMatrix> queue;
    ExactMatrix id = ExactMatrix::identity(gens.front().rows());
    seen.emplace(key(id), 1);
    queue.push_back(id);
    while (!queue.empty()) {
        ExactMatrix x = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : gens) {
            ExactMatrix y = x * s;
            if (seen.emplace(key(y), 1).second) {
                if (seen.size() > limit) throw std::length_error("generated_matrix_group_order: more than " + std::to_string(limit) + " elements");
                queue.push_back(std::move(y));
            }
        }
    }
    return seen.size();
}

}  // namespace uebkit
