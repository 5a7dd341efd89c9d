#include "uebkit/ueb.hpp"

#include <stdexcept>

#include "uebkit/parallel.hpp"

namespace uebkit {

namespace {

std::string pair_label(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

ExactMatrix antidiag(const PhasedScalar& top, const PhasedScalar& bottom) {
    return ExactMatrix(2, 2, {PhasedScalar(0), top, bottom, PhasedScalar(0)});
}

}  // namespace

UebReport verify_ueb(const UnitaryErrorBasis& basis, unsigned jobs) {
    const auto d = static_cast<std::size_t>(basis.d);
    if (basis.d < 1 || basis.members.size() != d * d) {
        throw std::invalid_argument("verify_ueb: expected " + std::to_string(d * d) + " members, got " + std::to_string(basis.members.size()));
    }
    for (const auto& m : basis.members) {
        if (m.rows() != d || m.cols() != d) throw std::invalid_argument("verify_ueb: member is not d x d");
    }
    const std::size_t n = basis.members.size();
    UebReport rep;
    rep.unitary_scales.resize(n);
    parallel_for(n, jobs, [&](std::size_t k) { rep.unitary_scales[k] = is_scaled_unitary(basis.members[k]); });

    std::vector<std::vector<UebViolation>> found(n);
    parallel_for(n, jobs, [&](std::size_t a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            PhasedScalar t = trace_inner(basis.members[a], basis.members[b]);
            if (!t.is_zero()) found[a].push_back({UebViolation::Kind::NotOrthogonal, a, b, t});
        }
    });
    for (std::size_t k = 0; k < n; ++k) {
        if (!rep.unitary_scales[k]) rep.violations.push_back({UebViolation::Kind::NotUnitary, k, k, PhasedScalar()});
    }
    for (auto& v : found) rep.violations.insert(rep.violations.end(), v.begin(), v.end());
    rep.pairs_checked = n * (n - 1) / 2;
    rep.valid = rep.violations.empty();
    return rep;
}

UnitaryErrorBasis shift_and_multiply(const LatinSquare& l, const HadamardSequence& h) {
    auto lv = validate_latin(l);
    if (!lv.ok) throw std::invalid_argument("shift_and_multiply: not a Latin square");
    if (h.d != l.d) throw std::invalid_argument("shift_and_multiply: Latin square and Hadamard sequence differ in order");
    auto hv = validate_hadamard_sequence(h);
    if (!hv.ok) throw std::invalid_argument("shift_and_multiply: " + hv.reason);
    const int d = l.d;
    const auto n = static_cast<std::size_t>(d);
    UnitaryErrorBasis out;
    out.d = d;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const ExactMatrix hj = h.mats[static_cast<std::size_t>(j)].normalized();
            ExactMatrix e(n, n);
            for (int k = 0; k < d; ++k) {
                e.at(static_cast<std::size_t>(l(j, k)), static_cast<std::size_t>(k)) = hj.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
            }
            out.members.push_back(std::move(e));
            out.labels.push_back(pair_label(i, j));
        }
    }
    return out;
}

UnitaryErrorBasis pauli_basis(int d) {
    UnitaryErrorBasis out;
    out.d = d;
    const ExactMatrix x = shift_matrix(d), z = clock_matrix(d);
    ExactMatrix xi = ExactMatrix::identity(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        ExactMatrix m = xi;
        for (int j = 0; j < d; ++j) {
            out.members.push_back(m);
            out.labels.push_back(pair_label(i, j));
            m = m * z;
        }
        xi = xi * x;
    }
    return out;
}

std::vector<ExactMatrix> pauli_set() {
    PhasedScalar i = PhasedScalar::zeta(4, 1);
    return {ExactMatrix::identity(2), antidiag(1, 1), ExactMatrix::diagonal({1, -1}), antidiag(-i, i)};
}

std::optional<PhasedScalar> phase_sqrt(const PhasedScalar& a) {
    if (!a.is_monomial()) return std::nullopt;
    const auto& term = a.terms().front();
    auto root = term.coeff.as_root_of_unity();
    if (!root) return std::nullopt;
    std::vector<int> half;
    for (int e : term.exponents) {
        if (e % 2 != 0) return std::nullopt;
        half.push_back(e / 2);
    }
    return PhasedScalar::monomial(a.alphabet(), half, Cyclotomic::zeta(2 * root->first, root->second));
}

D2Normalization normalize_d2(const UnitaryErrorBasis& basis) {
    if (basis.d != 2) throw std::invalid_argument("normalize_d2: dimension must be 2");
    if (!verify_ueb(basis).valid) throw std::invalid_argument("normalize_d2: input is not a unitary error basis");
    const auto& e = basis.members;
    const ExactMatrix e0inv = e[0].inverse();
    std::vector<ExactMatrix> m;
    for (const auto& x : e) m.push_back(x * e0inv);

    // Bring one traceless member to diagonal form diag(l, -l).
    ExactMatrix u = ExactMatrix::identity(2), uinv = ExactMatrix::identity(2);
    std::size_t diag_k = 0;
    for (std::size_t k = 1; k < 4 && diag_k == 0; ++k) {
        if (m[k].is_diagonal()) diag_k = k;
    }
    if (diag_k == 0) {
        const ExactMatrix mm = m[1].normalized();
        auto s = is_scaled_unitary(mm);
        if (!s || !s->is_square()) throw std::domain_error("normalize_d2: member scale has no rational square root");
        PhasedScalar det = mm.at(0, 0) * mm.at(1, 1) - mm.at(0, 1) * mm.at(1, 0);
        auto ph = phase_sqrt((-det).scaled(s->inverse()));
        if (!ph) throw std::domain_error("normalize_d2: eigenvalue phase has no representable square root");
        PhasedScalar lambda = ph->scaled(s->sqrt_exact());
        auto column = [&](const PhasedScalar& shift) {
            ExactMatrix t = mm + ExactMatrix::identity(2).times(shift);
            std::size_t c = (t.at(0, 0).is_zero() && t.at(1, 0).is_zero()) ? 1 : 0;
            return std::pair{t.at(0, c), t.at(1, c)};
        };
        // mm is normal, so the -lambda eigenline is orthogonal to the lambda
        // one; (-conj a1, conj a0) spans it and has the same norm.
        auto [a0, a1] = column(lambda);
        u = ExactMatrix(2, 2, {a0, -a1.conj(), a1, a0.conj()});
        uinv = u.inverse();
        for (auto& x : m) x = uinv * x * u;
        diag_k = 1;
    }

    // The remaining members are antidiagonal [[0, b], [c, 0]]; conjugating with
    // diag(1, eps), eps^2 = c/b, makes them proportional to X and Y.
    std::size_t anti_k = (diag_k == 1) ? 2 : 1;
    const ExactMatrix& anti = m[anti_k];
    const PhasedScalar b = anti.value(0, 1), c = anti.value(1, 0);
    if (!b.is_monomial() || !c.is_monomial()) throw std::domain_error("normalize_d2: off-diagonal entries are not single phases");
    auto eps = phase_sqrt(c / b);
    if (!eps) throw std::domain_error("normalize_d2: phase " + (c / b).str() + " has no representable square root");
    const ExactMatrix dmat = ExactMatrix::diagonal({1, *eps});
    const ExactMatrix dinv = ExactMatrix::diagonal({1, eps->inverse()});

    D2Normalization out;
    out.a = dinv * uinv;
    out.b = e0inv * u * dmat;
    out.canonical.d = 2;
    const auto paulis = pauli_set();
    static const char* names[] = {"I", "X", "Z", "Y"};
    for (std::size_t k = 0; k < 4; ++k) {
        ExactMatrix t = out.a * e[k] * out.b;
        bool matched = false;
        for (std::size_t p = 0; p < 4 && !matched; ++p) {
            auto r = t.scalar_ratio(paulis[p]);
            if (!r || !r->is_monomial()) continue;
            out.c.push_back(r->inverse());
            out.sigma.push_back(p);
            out.canonical.members.push_back(paulis[p]);
            out.canonical.labels.push_back(names[p]);
            matched = true;
        }
        if (!matched) throw std::logic_error("normalize_d2: member " + std::to_string(k) + " did not reduce to a Pauli matrix");
    }
    return out;
}

std::optional<WickednessWitness> wickedness_witness(const UnitaryErrorBasis& basis) {
    const auto& ms = basis.members;
    for (std::size_t f = 0; f < ms.size(); ++f) {
        const ExactMatrix fd = ms[f].dagger();
        for (std::size_t e = 0; e < ms.size(); ++e) {
            if (e == f) continue;
            const ExactMatrix p = ms[e] * fd;
            if (!p.is_diagonal()) continue;
            std::vector<PhasedScalar> diag;
            for (std::size_t k = 0; k < p.rows(); ++k) diag.push_back(p.value(k, k));
            if (!diag[0].is_monomial()) continue;
            for (std::size_t k = 1; k < diag.size(); ++k) {
                if (diag[k].is_zero()) continue;
                PhasedScalar r = diag[k] / diag[0];
                if (!r.root_of_unity_order()) return WickednessWitness{e, f, diag, k, r};
            }
        }
    }
    return std::nullopt;
}

}  // namespace uebkit
