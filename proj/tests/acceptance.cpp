// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "uebkit/counterexample165.hpp"
#include "uebkit/induce.hpp"
#include "uebkit/json_io.hpp"
#include "uebkit/nice.hpp"
#include "uebkit/sl2.hpp"
#include "uebkit/ueb.hpp"

using namespace uebkit;
using nlohmann::json;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

json run_cli(std::vector<std::string> args, int& code) {
    args.insert(args.begin(), "uebkit");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return json::parse(out.str());
}

bool proportional(const ExactMatrix& a, const ExactMatrix& b) { return a.scalar_ratio(b).has_value(); }

UnitaryErrorBasis from_members(std::vector<ExactMatrix> ms) {
    UnitaryErrorBasis b;
    b.d = static_cast<int>(ms.front().rows());
    b.members = std::move(ms);
    return b;
}

// 1. Pauli matrices through the command line.
Outcome pauli_reproduction() {
    Outcome o;
    int code = 0;
    json c = run_cli({"construct", "pauli:2"}, code);
    o.require(code == 0, "construct pauli:2 exit " + std::to_string(code));
    auto b = basis_from_json(c.at("basis"));
    const PhasedScalar i = PhasedScalar::zeta(4, 1);
    std::vector<ExactMatrix> shown{ExactMatrix::identity(2), ExactMatrix(2, 2, {0, 1, 1, 0}), ExactMatrix(2, 2, {1, 0, 0, -1}),
                                   ExactMatrix(2, 2, {0, -i, i, 0})};
    o.require(b.members.size() == 4, "expected four members");
    for (std::size_t k = 0; k < shown.size(); ++k) {
        bool found = false;
        for (const auto& m : b.members) found = found || proportional(m, shown[k]);
        o.require(found, "displayed matrix " + std::to_string(k) + " missing");
    }
    o.require(c.at("passed").get<bool>(), "verify ueb failed");
    return o;
}

// 2. X^i Z^j for d = 2..12, every pair.
Outcome pauli_niceness() {
    Outcome o;
    for (int d = 2; d <= 12; ++d) {
        auto n = verify_nice(pauli_rep(d));
        const std::size_t g = static_cast<std::size_t>(d * d);
        o.require(n.passed, "d=" + std::to_string(d) + " not nice");
        o.require(n.projective.checked == g * g, "d=" + std::to_string(d) + " (iii) not exhaustive");
        o.require(n.traceless.checked == g - 1, "d=" + std::to_string(d) + " (ii) not exhaustive");
    }
    return o;
}

// 3. Shift-and-multiply with the cyclic square and F_3.
Outcome sam_fidelity() {
    Outcome o;
    int code = 0;
    json c = run_cli({"construct", "sam", "cyclic:3", "fourier:3"}, code);
    o.require(code == 0, "construct sam exit " + std::to_string(code));
    auto b = basis_from_json(c.at("basis"));
    const PhasedScalar w = PhasedScalar::zeta(3, 1);
    o.require(b.members.at(1) == ExactMatrix(3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0}), "E_01 differs");
    o.require(b.members.at(5) == ExactMatrix(3, 3, {0, 0, w * w, 1, 0, 0, 0, w, 0}), "E_12 differs");
    for (int d : {3, 4}) {
        auto s = shift_and_multiply(cyclic_latin(d), HadamardSequence::constant(fourier_hadamard(d)));
        o.require(verify_ueb(s).valid, "d=" + std::to_string(d) + " not a UEB");
    }
    return o;
}

// 4. Wicked basis from H_alpha with a formal phase.
Outcome wickedness() {
    Outcome o;
    auto alpha = make_alphabet({"t"});
    const PhasedScalar t = PhasedScalar::symbol(alpha, "t");
    auto b = shift_and_multiply(cyclic_latin(4), HadamardSequence::constant(h_alpha(alpha)));
    o.require(verify_ueb(b).valid, "basis is not a UEB");
    auto w = wickedness_witness(b);
    o.require(w.has_value(), "no witness");
    if (!w) return o;
    o.require(w->diagonal == std::vector<PhasedScalar>{1, -1, t, -t}, "diagonal is not (1, -1, t, -t)");
    // A root of unity of order n satisfies r^n = 1; a formal phase never does.
    bool finite = false;
    for (int n = 1; n <= 1000 && !finite; ++n) finite = w->offending_ratio.pow(n).is_one();
    o.require(!finite && w->offending_ratio.has_symbols(), "offending ratio has finite order");
    ExactMatrix hi = substitute(h_alpha(alpha), "t", Cyclotomic::zeta(4));
    o.require(!wickedness_witness(shift_and_multiply(cyclic_latin(4), HadamardSequence::constant(hi))).has_value(), "witness at t = i");
    return o;
}

// 5. d = 2 normalization of {c A P B}.
Outcome normalization() {
    Outcome o;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> e8(0, 7), e12(0, 11), coin(0, 1);
    const ExactMatrix h(2, 2, {1, 1, 1, -1});
    auto random_factor = [&] {
        ExactMatrix m = ExactMatrix::diagonal({PhasedScalar::zeta(8, e8(rng)), PhasedScalar::zeta(8, e8(rng))});
        if (coin(rng)) m = ExactMatrix(2, 2, {0, 1, 1, 0}) * m;
        if (coin(rng)) m = h * m;
        return m;
    };
    const auto pauli = pauli_set();
    for (int rep = 0; rep < 100 && o.ok; ++rep) {
        ExactMatrix a = random_factor(), bm = random_factor();
        std::vector<ExactMatrix> ms;
        for (const auto& p : pauli) ms.push_back((a * p * bm).times(PhasedScalar::zeta(12, e12(rng))));
        std::shuffle(ms.begin(), ms.end(), rng);
        D2Normalization n;
        try {
            n = normalize_d2(from_members(ms));
        } catch (const std::exception& e) {
            o.require(false, "sample " + std::to_string(rep) + ": " + e.what());
            break;
        }
        std::vector<char> hit(4, 0);
        for (std::size_t k = 0; k < 4; ++k) {
            hit[n.sigma[k]] = 1;
            o.require((n.a * ms[k] * n.b).times(n.c[k]) == pauli[n.sigma[k]], "sample " + std::to_string(rep) + " not mapped to the Pauli set");
            o.require((n.a.inverse() * n.canonical.members[k] * n.b.inverse()).times(n.c[k].inverse()) == ms[k],
                      "sample " + std::to_string(rep) + " reconstruction differs");
        }
        o.require(hit == std::vector<char>(4, 1), "sigma is not a permutation");
    }
    return o;
}

// Order-3 elements of SL(2, F_p), and irreducibility, by direct search.
bool has_eigenline(int p, int a, int b, int c, int d) {
    for (int x = 0; x < p; ++x) {
        for (int y = 0; y < p; ++y) {
            if (x == 0 && y == 0) continue;
            const int u = (a * x + b * y) % p, v = (c * x + d * y) % p;
            if ((u * y - v * x) % p == 0) return true;
        }
    }
    return false;
}

// 6. Every order-3 element of SL(2, F_5) and SL(2, F_11) is irreducible.
Outcome sl2_brute_force() {
    Outcome o;
    for (int p : {5, 11}) {
        SL2Group g(p);
        o.require(g.order() == static_cast<std::size_t>((p + 1) * p * (p - 1)), "|SL(2," + std::to_string(p) + ")| wrong");
        std::size_t order3 = 0;
        for (std::size_t k = 0; k < g.order(); ++k) {
            const auto m = g.element_at(k);
            const auto m3 = sl2_mul(sl2_mul(m, m), m);
            if (m == g.identity() || !(m3 == g.identity())) continue;
            ++order3;
            o.require(!has_eigenline(p, m.a, m.b, m.c, m.d), "p=" + std::to_string(p) + ": " + m.str() + " has an invariant line");
            o.require(acts_irreducibly(m), "p=" + std::to_string(p) + ": library disagrees on " + m.str());
        }
        o.require(order3 > 0, "no order-3 elements for p=" + std::to_string(p));
        o.require(order3 == sl2_elements_of_order(p, 3).size(), "order-3 count disagrees for p=" + std::to_string(p));
    }
    return o;
}

// 7. alpha and beta over all pairs, and gamma^3 = 1.
Outcome automorphisms() {
    Outcome o;
    for (int p : {5, 11}) {
        HeisenbergGroup h(p);
        std::vector<HeisenbergElement> a(h.order()), b(h.order());
        for (std::size_t i = 0; i < h.order(); ++i) {
            a[i] = alpha_aut(h.element_at(i));
            b[i] = beta_aut(h.element_at(i));
        }
        std::vector<char> seen_a(h.order(), 0), seen_b(h.order(), 0);
        for (std::size_t i = 0; i < h.order(); ++i) {
            seen_a[h.index_of(a[i])] = 1;
            seen_b[h.index_of(b[i])] = 1;
        }
        o.require(std::all_of(seen_a.begin(), seen_a.end(), [](char c) { return c; }), "alpha not bijective");
        o.require(std::all_of(seen_b.begin(), seen_b.end(), [](char c) { return c; }), "beta not bijective");
        bool hom = true;
        for (std::size_t i = 0; i < h.order() && hom; ++i) {
            for (std::size_t j = 0; j < h.order() && hom; ++j) {
                const std::size_t ij = h.index_of(h.compose(h.element_at(i), h.element_at(j)));
                hom = a[ij] == h.compose(a[i], a[j]) && b[ij] == h.compose(b[i], b[j]);
            }
        }
        o.require(hom, "alpha or beta is not a homomorphism of H_" + std::to_string(p));
        const SL2Element al = sl2_alpha(p), be = sl2_beta(p);
        const SL2Element gamma = sl2_mul(sl2_mul(be, al), sl2_mul(be, al));
        const SL2Element id = sl2_make(p, 1, 0, 0, 1);
        o.require(!(gamma == id) && sl2_mul(sl2_mul(gamma, gamma), gamma) == id, "gamma^3 != 1 for p=" + std::to_string(p));
    }
    return o;
}

// 8. The 165-dimensional basis.
Outcome counterexample() {
    Outcome o;
    G165 g = build_g165();
    auto r = verify_counterexample(g);
    o.require(r.group_order == 4492125, "group order " + std::to_string(r.group_order));
    o.require(r.center_order == 165 && r.center_cyclic, "center is not cyclic of order 165");
    for (const auto& c : r.conjugator_checks) o.require(c.passed, "conjugator check failed: " + c.name);
    o.require(r.traces_checked == 27224, "traces checked " + std::to_string(r.traces_checked));
    o.require(r.traces_nonzero == 0, "nonzero trace at " + r.first_nonzero_trace.value_or("?"));
    o.require(r.nice.has_value() && r.nice->passed, "verify_nice failed");
    if (r.nice) {
        o.require(r.nice->identity.passed && r.nice->traceless.checked == 27224, "(ii) not checked on every element");
        o.require(r.nice->projective.passed, "(iii) failed: " + r.nice->projective.coverage);
    }
    o.require(r.nonmonomial_members > 0, "no nonmonomial member");
    o.require(r.passed, "pipeline reported failure");
    return o;
}

// 9. Induction from Z(H_3) and sparsity on small inductions.
Outcome sparsity() {
    Outcome o;
    HeisenbergGroup h(3);
    std::vector<std::size_t> center;
    for (std::size_t i = 0; i < h.order(); ++i) {
        const auto e = h.element_at(i);
        if (e.x == 0 && e.y == 0) center.push_back(i);
    }
    auto psi = [&](std::size_t i) { return PhasedScalar::zeta(3, h.element_at(i).z); };
    auto chi = induce_character(h, center, psi);
    auto rep = induce_representation(h, center, [&](std::size_t i) { return ExactMatrix::identity(1).times(psi(i)); });
    o.require(rep.dim() == 9, "dimension " + std::to_string(rep.dim()));
    o.require(is_block_monomial(rep), "not block monomial");
    for (const auto& m : rep.matrices) {
        o.require(m.nonzero_count() == 9, "a matrix has " + std::to_string(m.nonzero_count()) + " nonzero entries");
    }
    o.require(min_zero_fraction(rep.matrices) == Rational(8, 9), "zero fraction is not 8/9");
    for (std::size_t i = 0; i < h.order(); ++i) o.require(rep.matrices[i].trace() == chi(i), "trace differs from induced character");

    // More inductions: center and the subgroup x = 0 of H_3, H_5, H_7.
    for (int d : {3, 5, 7}) {
        HeisenbergGroup hd(d);
        for (bool full : {false, true}) {
            std::vector<std::size_t> k;
            for (std::size_t i = 0; i < hd.order(); ++i) {
                const auto e = hd.element_at(i);
                if (e.x == 0 && (full || e.y == 0)) k.push_back(i);
            }
            auto r = induce_representation(hd, k, [&](std::size_t i) { return ExactMatrix::identity(1).times(PhasedScalar::zeta(d, hd.element_at(i).z)); });
            try {
                sparsity_check(r);
            } catch (const std::logic_error& e) {
                o.require(false, e.what());
            }
        }
    }
    return o;
}

// 10. Niceness-based and definition-based checks agree on corrupted bases.
Outcome cross_verification() {
    Outcome o;
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> pick_d(2, 8), coin(0, 1);
    auto nice_certifies = [](const UnitaryErrorBasis& b) {
        auto inf = infer_index_group(b.members);
        if (!inf.group) return false;
        return verify_nice(rep_from_members(*inf.group, b.members, inf.order)).passed;
    };
    // Intact bases first: both must accept.
    for (int d = 2; d <= 8; ++d) {
        auto b = pauli_basis(d);
        o.require(nice_certifies(b) && verify_ueb(b).valid, "intact d=" + std::to_string(d) + " rejected");
    }
    for (int k = 0; k < 20; ++k) {
        const int d = pick_d(rng);
        UnitaryErrorBasis b = coin(rng) ? pauli_basis(d) : shift_and_multiply(cyclic_latin(d), HadamardSequence::constant(fourier_hadamard(d)));
        std::uniform_int_distribution<std::size_t> member(0, b.members.size() - 1), cell(0, static_cast<std::size_t>(d) - 1);
        std::uniform_int_distribution<int> phase(0, d - 1);
        const std::size_t m = member(rng), i = cell(rng), j = cell(rng);
        ExactMatrix& target = b.members[m];
        target = target.normalized();
        target.at(i, j) = target.at(i, j) + PhasedScalar::zeta(d, phase(rng));
        const bool nice = nice_certifies(b), ueb = verify_ueb(b).valid;
        const std::string where = "mutation " + std::to_string(k) + " (d=" + std::to_string(d) + ", member " + std::to_string(m) + ")";
        o.require(nice == ueb, where + ": checks disagree");
        o.require(!nice && !ueb, where + ": not caught");
    }
    return o;
}

struct Criterion {
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    // Optional arguments select criteria by number.
    std::vector<int> only;
    for (int k = 1; k < argc; ++k) only.push_back(std::atoi(argv[k]));
    const std::vector<Criterion> criteria{
        {"Pauli matrices reproduced and verified as a UEB", 1, pauli_reproduction},
        {"X^i Z^j nice for d = 2..12, all pairs", 30, pauli_niceness},
        {"shift-and-multiply E_01, E_12 and d = 3, 4 UEBs", 5, sam_fidelity},
        {"wickedness witness (1, -1, t, -t), none at t = i", 5, wickedness},
        {"d = 2 normalization of 100 seeded bases", 10, normalization},
        {"order-3 elements of SL(2,5) and SL(2,11) irreducible", 10, sl2_brute_force},
        {"alpha, beta automorphisms of H_5, H_11; gamma^3 = 1", 60, automorphisms},
        {"165-dimensional nonmonomial nice error basis", 300, counterexample},
        {"induced representation sparsity", 10, sparsity},
        {"nice and trace checks agree on 20 mutated bases", 60, cross_verification},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto& c = criteria[k];
        if (!only.empty() && std::find(only.begin(), only.end(), static_cast<int>(k + 1)) == only.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && secs > c.budget_seconds) {
            o.ok = false;
            o.detail = "over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
        }
        failed += o.ok ? 0 : 1;
        std::printf("%s %2zu %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", k + 1, c.title, secs, o.detail.empty() ? "" : ": ", o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
