#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "uebkit/exact_matrix.hpp"
#include "uebkit/groups.hpp"
#include "uebkit/heisenberg.hpp"
#include "uebkit/parallel.hpp"

namespace uebkit {

/// s with a a^dagger = s I, factorwise.
std::optional<Rational> is_scaled_unitary(const TensorMatrix& a);

/// Map from the elements of an index group to matrices. M is ExactMatrix or
/// TensorMatrix.
template <FiniteGroup G, class M = ExactMatrix>
class ProjectiveRep {
public:
    using Group = G;
    using Element = typename G::Element;
    using Matrix = M;
    using Map = std::function<M(const Element&)>;

    ProjectiveRep(G group, std::size_t dim, Map rho) : group_(std::move(group)), dim_(dim), rho_(std::move(rho)) {}

    const G& group() const noexcept { return group_; }
    std::size_t dim() const noexcept { return dim_; }
    M operator()(const Element& g) const { return rho_(g); }

private:
    G group_;
    std::size_t dim_;
    Map rho_;
};

/// Quotient of G by a central subgroup, indexed by a least-index transversal.
/// Elements are transversal positions; position 0 is the identity coset.
template <FiniteGroup G>
class QuotientGroup {
public:
    using Element = std::size_t;

    QuotientGroup(const G& g, const std::vector<typename G::Element>& central)
        : g_(std::make_shared<G>(g)), reps_(std::make_shared<std::vector<typename G::Element>>(transversal(g, central))) {
        auto coset = std::make_shared<std::vector<std::uint32_t>>(g.order());
        for (std::size_t t = 0; t < reps_->size(); ++t) {
            for (const auto& c : central) (*coset)[g.index_of(g.compose((*reps_)[t], c))] = static_cast<std::uint32_t>(t);
        }
        coset_ = std::move(coset);
    }

    const G& parent() const { return *g_; }
    const std::vector<typename G::Element>& representatives() const { return *reps_; }
    const typename G::Element& representative(Element e) const { return (*reps_)[e]; }
    Element coset_of(const typename G::Element& x) const { return (*coset_)[g_->index_of(x)]; }

    std::size_t order() const { return reps_->size(); }
    Element identity() const { return 0; }
    Element compose(Element a, Element b) const { return coset_of(g_->compose((*reps_)[a], (*reps_)[b])); }
    Element inverse(Element a) const { return coset_of(g_->inverse((*reps_)[a])); }
    Element element_at(std::size_t i) const { return i; }
    std::size_t index_of(Element a) const { return a; }
    std::vector<Element> generators() const {
        std::vector<Element> out;
        for (const auto& s : g_->generators()) out.push_back(coset_of(s));
        return out;
    }

private:
    std::shared_ptr<const G> g_;
    std::shared_ptr<const std::vector<typename G::Element>> reps_;
    std::shared_ptr<const std::vector<std::uint32_t>> coset_;
};

/// Group given by an explicit multiplication table; element 0 is the identity.
class TableGroup {
public:
    using Element = std::size_t;

    explicit TableGroup(std::vector<std::vector<std::size_t>> table);

    std::size_t order() const { return table_->size(); }
    Element identity() const { return 0; }
    Element compose(Element a, Element b) const { return (*table_)[a][b]; }
    Element inverse(Element a) const { return (*inverse_)[a]; }
    Element element_at(std::size_t i) const { return i; }
    std::size_t index_of(Element a) const { return a; }
    std::vector<Element> generators() const { return *generators_; }

private:
    std::shared_ptr<const std::vector<std::vector<std::size_t>>> table_;
    std::shared_ptr<const std::vector<std::size_t>> inverse_;
    std::shared_ptr<const std::vector<std::size_t>> generators_;
};

using PauliIndexGroup = ProductGroup<CyclicGroup, CyclicGroup>;

/// Index group Z_d x Z_d with rho(i, j) = X^i Z^j.
ProjectiveRep<PauliIndexGroup> pauli_rep(int d);
/// rho((x, y, z)) = w^z Z^y X^x on H_d; an ordinary representation.
ProjectiveRep<HeisenbergGroup> heisenberg_rep(int d);
ExactMatrix heisenberg_matrix(const HeisenbergElement& g);

/// Result of recovering the index group from a family of matrices: the
/// members, reordered so that the one proportional to I comes first, close
/// projectively under multiplication.
struct InferredIndexGroup {
    std::optional<TableGroup> group;
    std::vector<std::size_t> order;  // order[k] = original member index of element k
    std::string failure;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;  // original indices
};
InferredIndexGroup infer_index_group(const std::vector<ExactMatrix>& members);
ProjectiveRep<TableGroup> rep_from_members(const TableGroup& g, const std::vector<ExactMatrix>& members, const std::vector<std::size_t>& order);

// ---------------------------------------------------------------------------
// Cocycles.

/// w with rho(g) rho(h) = w rho(gh); none when the quotient is not a scalar.
template <FiniteGroup G, class M>
std::optional<PhasedScalar> cocycle_value(const ProjectiveRep<G, M>& rep, const typename G::Element& g, const typename G::Element& h) {
    const auto& grp = rep.group();
    return (rep(g) * rep(h)).scalar_ratio(rep(grp.compose(g, h)));
}

/// Full table omega[i][j] over element indices.
struct Cocycle {
    std::vector<std::vector<PhasedScalar>> omega;

    const PhasedScalar& operator()(std::size_t g, std::size_t h) const { return omega[g][h]; }
};

/// Throws std::domain_error naming the pair when some quotient is not scalar.
template <FiniteGroup G, class M>
Cocycle extract_cocycle(const ProjectiveRep<G, M>& rep, unsigned jobs = 1) {
    const auto& grp = rep.group();
    const std::size_t n = grp.order();
    std::vector<M> mats;
    mats.reserve(n);
    for (std::size_t i = 0; i < n; ++i) mats.push_back(rep(grp.element_at(i)));
    Cocycle c;
    c.omega.assign(n, std::vector<PhasedScalar>(n));
    std::vector<std::string> errors(n);
    parallel_for(n, jobs, [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t k = grp.index_of(grp.compose(grp.element_at(i), grp.element_at(j)));
            auto w = (mats[i] * mats[j]).scalar_ratio(mats[k]);
            if (!w) {
                errors[i] = "rho(g) rho(h) is not a scalar multiple of rho(gh) for element indices " + std::to_string(i) + ", " + std::to_string(j);
                return;
            }
            c.omega[i][j] = *w;
        }
    });
    for (const auto& e : errors) {
        if (!e.empty()) throw std::domain_error("extract_cocycle: " + e);
    }
    return c;
}

/// w(g,h) w(gh,k) = w(h,k) w(g,hk) on all triples, or on `samples` random ones.
template <FiniteGroup G>
bool satisfies_cocycle_identity(const G& grp, const Cocycle& c, std::size_t samples = 0, std::uint64_t seed = 0) {
    const std::size_t n = grp.order();
    auto ok = [&](std::size_t g, std::size_t h, std::size_t k) {
        auto e = [&](std::size_t i) { return grp.element_at(i); };
        std::size_t gh = grp.index_of(grp.compose(e(g), e(h)));
        std::size_t hk = grp.index_of(grp.compose(e(h), e(k)));
        return c(g, h) * c(gh, k) == c(h, k) * c(g, hk);
    };
    if (samples == 0) {
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h)
                for (std::size_t k = 0; k < n; ++k)
                    if (!ok(g, h, k)) return false;
        return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) {
        if (!ok(pick(rng), pick(rng), pick(rng))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Niceness verification.

struct NiceCheck {
    bool passed = true;
    std::size_t checked = 0;
    std::string coverage;
    /// Offending element indices (one for (i)/(ii)/unitarity, two for (iii)).
    std::vector<std::size_t> witness;
    std::string detail;
};

struct NiceReport {
    bool passed = true;
    std::size_t group_order = 0;
    std::size_t dim = 0;
    NiceCheck order;       // |G| = d^2
    NiceCheck unitary;     // every checked rho(g) is a scaled unitary
    NiceCheck identity;    // (i)
    NiceCheck traceless;   // (ii)
    NiceCheck projective;  // (iii), cocycle values of unit modulus
    std::uint64_t seed = 0;
};

struct NiceOptions {
    /// (iii) is checked on all pairs when |G|^2 is at most this.
    std::size_t exhaustive_pair_limit = std::size_t{1} << 22;
    /// Otherwise on generators x all elements plus this many random pairs.
    std::size_t random_pairs = 10000;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    /// Unitarity of every member, or only of generators and random_pairs samples.
    bool unitary_all = true;
};

template <FiniteGroup G, class M>
NiceReport verify_nice(const ProjectiveRep<G, M>& rep, const NiceOptions& opt = {}) {
    const auto& grp = rep.group();
    const std::size_t n = grp.order();
    NiceReport r;
    r.group_order = n;
    r.dim = rep.dim();
    r.seed = opt.seed;

    r.order.checked = 1;
    if (n != rep.dim() * rep.dim()) {
        r.order.passed = false;
        r.order.detail = "index group order " + std::to_string(n) + " is not d^2 = " + std::to_string(rep.dim() * rep.dim());
    }

    // (i)
    {
        auto id = rep(grp.identity()).as_scalar();
        r.identity.checked = 1;
        r.identity.coverage = "exhaustive";
        if (!id || !id->is_one()) {
            r.identity.passed = false;
            r.identity.witness = {0};
            r.identity.detail = "rho(1) is not the identity matrix";
        }
    }

    // (ii) and unitarity
    std::vector<char> traced(n, 1), unitary_ok(n, 1), unitary_checked(n, 0);
    std::vector<std::size_t> unitary_set;
    if (opt.unitary_all) {
        for (std::size_t i = 0; i < n; ++i) unitary_set.push_back(i);
    } else {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        unitary_set.push_back(0);
        for (const auto& s : grp.generators()) unitary_set.push_back(grp.index_of(s));
        for (std::size_t k = 0; k < std::min(opt.random_pairs, n); ++k) unitary_set.push_back(pick(rng));
    }
    for (std::size_t i : unitary_set) unitary_checked[i] = 1;
    parallel_for(n, opt.jobs, [&](std::size_t i) {
        M m = rep(grp.element_at(i));
        if (i != 0) traced[i] = m.trace().is_zero() ? 1 : 0;
        if (unitary_checked[i]) unitary_ok[i] = is_scaled_unitary(m).has_value() ? 1 : 0;
    });
    r.traceless.checked = n - 1;
    r.traceless.coverage = "exhaustive";
    for (std::size_t i = 1; i < n; ++i) {
        if (!traced[i]) {
            r.traceless.passed = false;
            r.traceless.witness = {i};
            r.traceless.detail = "tr rho(g) != 0 at element index " + std::to_string(i);
            break;
        }
    }
    std::size_t ucount = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!unitary_checked[i]) continue;
        ++ucount;
        if (!unitary_ok[i] && r.unitary.passed) {
            r.unitary.passed = false;
            r.unitary.witness = {i};
            r.unitary.detail = "rho(g) is not a scaled unitary at element index " + std::to_string(i);
        }
    }
    r.unitary.checked = ucount;
    r.unitary.coverage = opt.unitary_all ? "exhaustive" : "identity, generators and seeded random elements";

    // (iii)
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const bool exhaustive = n * n <= opt.exhaustive_pair_limit;
    if (exhaustive) {
        r.projective.coverage = "exhaustive";
    } else {
        for (const auto& s : grp.generators()) {
            std::size_t si = grp.index_of(s);
            for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(si, j);
        }
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t k = 0; k < opt.random_pairs; ++k) {
            std::size_t a = pick(rng);
            pairs.emplace_back(a, pick(rng));
        }
        r.projective.coverage = "generators x all elements + " + std::to_string(opt.random_pairs) + " seeded random pairs";
    }
    std::vector<std::string> fail;
    std::vector<std::pair<std::size_t, std::size_t>> fail_pair;
    if (exhaustive) {
        std::vector<M> mats;
        mats.reserve(n);
        for (std::size_t i = 0; i < n; ++i) mats.push_back(rep(grp.element_at(i)));
        fail.resize(n);
        fail_pair.resize(n);
        parallel_for(n, opt.jobs, [&](std::size_t i) {
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t k = grp.index_of(grp.compose(grp.element_at(i), grp.element_at(j)));
                auto w = (mats[i] * mats[j]).scalar_ratio(mats[k]);
                if (!w || !w->is_unit_modulus()) {
                    fail[i] = w ? "cocycle value " + w->str() + " is not of unit modulus" : "rho(g) rho(h) is not a scalar multiple of rho(gh)";
                    fail_pair[i] = {i, j};
                    return;
                }
            }
        });
        r.projective.checked = n * n;
    } else {
        fail.resize(pairs.size());
        fail_pair.resize(pairs.size());
        parallel_for(pairs.size(), opt.jobs, [&](std::size_t p) {
            auto [i, j] = pairs[p];
            auto w = cocycle_value(rep, grp.element_at(i), grp.element_at(j));
            if (!w || !w->is_unit_modulus()) {
                fail[p] = w ? "cocycle value " + w->str() + " is not of unit modulus" : "rho(g) rho(h) is not a scalar multiple of rho(gh)";
                fail_pair[p] = {i, j};
            }
        });
        r.projective.checked = pairs.size();
    }
    for (std::size_t k = 0; k < fail.size(); ++k) {
        if (!fail[k].empty()) {
            r.projective.passed = false;
            r.projective.witness = {fail_pair[k].first, fail_pair[k].second};
            r.projective.detail = fail[k] + " at element indices (" + std::to_string(fail_pair[k].first) + ", " + std::to_string(fail_pair[k].second) + ")";
            break;
        }
    }

    r.passed = r.order.passed && r.unitary.passed && r.identity.passed && r.traceless.passed && r.projective.passed;
    return r;
}

// ---------------------------------------------------------------------------
// Determinant normalization.

/// Exact determinant; monomial matrices use the permutation sign.
PhasedScalar determinant(const ExactMatrix& m);

/// c with c^d det(m) = 1 for d = m.rows(); m must be a unitary whose
/// determinant is a root of unity. Throws std::domain_error otherwise.
PhasedScalar det_normalizer(const ExactMatrix& m);

/// Rescales every rho(g) to determinant 1.
template <FiniteGroup G>
ProjectiveRep<G> det_normalize(const ProjectiveRep<G>& rep) {
    const auto& grp = rep.group();
    auto mats = std::make_shared<std::vector<ExactMatrix>>();
    for (std::size_t i = 0; i < grp.order(); ++i) {
        ExactMatrix m = rep(grp.element_at(i));
        mats->push_back(m.times(det_normalizer(m)));
    }
    return ProjectiveRep<G>(grp, rep.dim(), [mats, grp](const typename G::Element& g) { return (*mats)[grp.index_of(g)]; });
}

/// Order of the matrix group generated by gens, by closure; throws
/// std::length_error past `limit` elements.
std::size_t generated_matrix_group_order(const std::vector<ExactMatrix>& gens, std::size_t limit = 100000);

}  // namespace uebkit
