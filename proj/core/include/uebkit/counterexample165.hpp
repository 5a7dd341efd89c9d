#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "uebkit/exact_matrix.hpp"
#include "uebkit/heisenberg.hpp"
#include "uebkit/nice.hpp"
#include "uebkit/triple_group.hpp"

namespace uebkit {

struct ConjugatorCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Matrices realizing automorphisms of H_p by conjugation. Conjugation is
/// M^A = A^-1 M A; F carries the rational scale 1/p when used as A.
struct ConjugatorSet {
    int p = 0;
    int e = 0;
    ExactMatrix F;  // unnormalized, F F^dagger = p I
    ExactMatrix D;  // diag(w^(i(i-1)/2))
    ExactMatrix B;  // D Z^e
    ExactMatrix R;  // (B F)^2 / p, unitary
    /// gamma with R rho(n) R^-1 = rho(gamma(n)) for every n in H_p.
    HeisenbergAutomorphism gamma;
    SL2Element gamma_linear;
    std::vector<ConjugatorCheck> checks;

    bool passed() const;
};

/// Builds the conjugators and runs every postcondition; never throws on a
/// failed check, so several exponents can be compared.
ConjugatorSet conjugator_report(int p, int e);
/// As conjugator_report, but throws std::domain_error naming the first failed check.
ConjugatorSet build_conjugators(int p, int e);

/// Exponents k (x, y, z) with M = rho_p((x, y, z)), if M has that form.
std::optional<HeisenbergElement> match_heisenberg(const ExactMatrix& m, int p);

/// (H_5 x H_11) x| H_3 with its 165-dimensional projective representation.
class G165 {
public:
    using Element = TripleGroup::Element;

    G165(ConjugatorSet c5, ConjugatorSet c11);

    const TripleGroup& group() const { return *group_; }
    const ConjugatorSet& conjugators5() const { return c5_; }
    const ConjugatorSet& conjugators11() const { return c11_; }

    /// rho_3(h) (x) rho_5(n5) R_5^(h.x) (x) rho_11(n11) R_11^(h.y).
    TensorMatrix mu(const Element& g) const;

    /// Group elements of the six generators, in display order.
    const std::array<Element, 6>& generator_elements() const { return gen_elements_; }
    /// The displayed generator list, built directly from X, Z, I and R.
    std::array<TensorMatrix, 6> displayed_generators() const;
    static std::array<std::string, 6> generator_names();

private:
    struct Cache;
    ConjugatorSet c5_, c11_;
    std::shared_ptr<const TripleGroup> group_;
    std::shared_ptr<const Cache> cache_;
    std::array<Element, 6> gen_elements_;
};

/// Conjugators for p = 5 and p = 11 with the given exponents.
G165 build_g165(int e5 = 3, int e11 = 3);

std::string element_str(const G165::Element& g);

struct CounterexampleOptions {
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::size_t random_pairs = 10000;
    std::size_t mu_words = 1000;
    std::size_t monomial_samples = 8;
    /// Recompute the center by commutation with generators over the whole group.
    bool generic_center = true;
    /// Skip the niceness run (the trace sweep still covers condition (ii)).
    bool run_nice = true;
};

struct CounterexampleReport {
    bool passed = false;
    std::uint64_t seed = 0;
    std::size_t group_order = 0;
    std::size_t center_order = 0;
    std::size_t center_generator_order = 0;
    bool center_cyclic = false;
    std::optional<bool> generic_center_agrees;
    std::vector<ConjugatorCheck> conjugator_checks;  // prefixed by p and e
    /// p = 11 with the other of the exponents 3 and (p+1)/2; informational.
    std::vector<ConjugatorCheck> alternate_checks;
    bool generators_match_display = false;
    std::size_t mu_words_checked = 0;
    bool mu_words_ok = false;
    std::size_t transversal_size = 0;
    std::size_t traces_checked = 0;
    std::size_t traces_nonzero = 0;
    std::optional<std::string> first_nonzero_trace;
    bool center_scalars = false;
    std::optional<NiceReport> nice;
    MonomialityReport generator_monomiality;
    MonomialityReport sample_monomiality;
    std::size_t nonmonomial_members = 0;
    std::string theory_note;
    std::map<std::string, double> seconds;
};

CounterexampleReport verify_counterexample(const G165& g, const CounterexampleOptions& opt = {});

using G165Quotient = QuotientGroup<TripleGroup>;
/// The basis indexed by the least-index transversal of Z(G).
ProjectiveRep<G165Quotient, TensorMatrix> g165_rep(const G165& g);

}  // namespace uebkit
