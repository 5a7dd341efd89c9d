#include "uebkit/counterexample165.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

#include "uebkit/parallel.hpp"

namespace uebkit {

namespace {

int mod(std::int64_t v, int d) {
    std::int64_t r = v % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Automorphism of H_p fixed by the images of (1,0,0) and (0,1,0), using
// (x,y,z) = c^z b^y a^x with c = a b a^-1 b^-1.
HeisenbergAutomorphism automorphism_from_images(int p, const HeisenbergElement& fa, const HeisenbergElement& fb) {
    HeisenbergGroup h(p);
    const auto fc = h.compose(h.compose(fa, fb), h.compose(h.inverse(fa), h.inverse(fb)));
    return HeisenbergAutomorphism::from_map(p, [&](const HeisenbergElement& n) {
        return h.compose(h.compose(group_power(h, fc, n.z), group_power(h, fb, n.y)), group_power(h, fa, n.x));
    });
}

}  // namespace

bool ConjugatorSet::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return !checks.empty();
}

std::optional<HeisenbergElement> match_heisenberg(const ExactMatrix& m, int p) {
    const auto n = static_cast<std::size_t>(p);
    if (m.rows() != n || m.cols() != n || !m.is_monomial()) return std::nullopt;
    // X^x sends |0> to |-x>.
    const std::size_t r = m.monomial_pattern()[0];
    const int x = mod(-static_cast<std::int64_t>(r), p);
    const ExactMatrix xx = shift_matrix(p).pow(x);
    for (int y = 0; y < p; ++y) {
        auto c = m.scalar_ratio(clock_matrix(p).pow(y) * xx);
        if (!c) continue;
        for (int z = 0; z < p; ++z) {
            if (*c == PhasedScalar::zeta(p, z)) return HeisenbergElement{p, x, y, z};
        }
        return std::nullopt;
    }
    return std::nullopt;
}

ConjugatorSet conjugator_report(int p, int e) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("build_conjugators: p must be an odd prime");
    ConjugatorSet s;
    s.p = p;
    s.e = mod(e, p);
    const auto n = static_cast<std::size_t>(p);
    const ExactMatrix x = shift_matrix(p), z = clock_matrix(p);
    const ExactMatrix xinv = x.inverse();
    s.F = fourier_matrix(p);
    std::vector<PhasedScalar> dd;
    for (int i = 0; i < p; ++i) dd.push_back(PhasedScalar::zeta(p, mod(static_cast<std::int64_t>(i) * (i - 1) / 2, p)));
    s.D = ExactMatrix::diagonal(dd);
    s.B = s.D * z.pow(s.e);
    const ExactMatrix bf = s.B * s.F;
    const ExactMatrix r0 = bf * bf;
    s.R = r0.with_scale(r0.scale() / Rational(p));

    auto check = [&](std::string name, bool ok, std::string detail = "") { s.checks.push_back({std::move(name), ok, std::move(detail)}); };
    auto conj = [](const ExactMatrix& m, const ExactMatrix& a, const ExactMatrix& ainv) { return ainv * m * a; };

    const ExactMatrix finv = s.F.dagger().with_scale(Rational(1, p));
    check("F^-1 X F = Z", conj(x, s.F, finv) == z);
    check("F^-1 Z F = X^-1", conj(z, s.F, finv) == xinv);
    const ExactMatrix dinv = s.D.inverse();
    check("D^-1 X D = Z X", conj(x, s.D, dinv) == z * x);
    check("D^-1 Z D = Z", conj(z, s.D, dinv) == z);
    const ExactMatrix binv = s.B.inverse();
    check("B^-1 X B = w^e Z X", conj(x, s.B, binv) == (z * x).times(PhasedScalar::zeta(p, s.e)));
    check("B^-1 Z B = Z", conj(z, s.B, binv) == z);

    auto u = is_scaled_unitary(s.R);
    check("R is unitary", u && u->is_one());
    auto r3 = s.R.pow(3).as_scalar();
    check("R^3 is scalar", r3.has_value(), r3 ? r3->str() : "");
    if (!u) return s;

    // The action realized by M -> R M R^-1, read off from the generators.
    const ExactMatrix rinv = s.R.inverse();
    auto fa = match_heisenberg(s.R * x * rinv, p);
    auto fb = match_heisenberg(s.R * z * rinv, p);
    check("R X R^-1 and R Z R^-1 lie in rho(H_p)", fa && fb, fa && fb ? fa->str() + " " + fb->str() : "");
    if (!fa || !fb) return s;
    s.gamma = automorphism_from_images(p, *fa, *fb);
    check("gamma is an automorphism of H_p", s.gamma.is_automorphism());

    HeisenbergGroup h(p);
    bool intertwines = true;
    std::string bad;
    for (std::size_t i = 0; i < h.order() && intertwines; ++i) {
        const auto a = h.element_at(i);
        if (!(s.R * heisenberg_matrix(a) == heisenberg_matrix(s.gamma(a)) * s.R)) {
            intertwines = false;
            bad = a.str();
        }
    }
    check("R rho(n) = rho(gamma(n)) R on all of H_p", intertwines, bad);

    s.gamma_linear = s.gamma.linear_part();
    check("gamma has order 3", s.gamma.order() == 3, std::to_string(s.gamma.order()));
    check("linear part has order 3", element_order(SL2Group(p), s.gamma_linear) == 3);
    check("linear part acts irreducibly", acts_irreducibly(s.gamma_linear));
    const auto alpha = HeisenbergAutomorphism::alpha(p);
    const auto beta = HeisenbergAutomorphism::beta(p, s.e);
    check("gamma = (alpha beta_e alpha beta_e)^-1", s.gamma == (alpha * beta * alpha * beta).inverse());
    (void)n;
    return s;
}

ConjugatorSet build_conjugators(int p, int e) {
    ConjugatorSet s = conjugator_report(p, e);
    for (const auto& c : s.checks) {
        if (!c.passed) throw std::domain_error("build_conjugators(p=" + std::to_string(p) + ", e=" + std::to_string(e) + "): " + c.name + " failed");
    }
    if (s.checks.empty()) throw std::domain_error("build_conjugators: no checks ran");
    return s;
}

// ---------------------------------------------------------------------------

struct G165::Cache {
    std::vector<ExactMatrix> rho3, rho5, rho11;
    std::array<ExactMatrix, 3> r5, r11;
};

namespace {

std::vector<ExactMatrix> all_heisenberg_matrices(int p) {
    HeisenbergGroup h(p);
    std::vector<ExactMatrix> out;
    out.reserve(h.order());
    for (std::size_t i = 0; i < h.order(); ++i) out.push_back(heisenberg_matrix(h.element_at(i)));
    return out;
}

ExactMatrix times_power(const ExactMatrix& m, const std::array<ExactMatrix, 3>& powers, int k) {
    return k == 0 ? m : m * powers[static_cast<std::size_t>(k)];
}

}  // namespace

G165::G165(ConjugatorSet c5, ConjugatorSet c11) : c5_(std::move(c5)), c11_(std::move(c11)) {
    if (c5_.p != 5 || c11_.p != 11) throw std::invalid_argument("G165: conjugators for p = 5 and p = 11 required");
    group_ = std::make_shared<const TripleGroup>(make_triple_group(5, 11, 3, c5_.gamma, c11_.gamma));
    auto cache = std::make_shared<Cache>();
    cache->rho3 = all_heisenberg_matrices(3);
    cache->rho5 = all_heisenberg_matrices(5);
    cache->rho11 = all_heisenberg_matrices(11);
    cache->r5 = {ExactMatrix::identity(5), c5_.R, c5_.R * c5_.R};
    cache->r11 = {ExactMatrix::identity(11), c11_.R, c11_.R * c11_.R};
    cache_ = std::move(cache);

    const auto& n = group_->normal();
    const auto& h3 = group_->acting();
    const auto& h5 = n.first();
    const auto& h11 = n.second();
    const Element id = group_->identity();
    auto in5 = [&](int x, int y) { return Element{{h5.make(x, y, 0), h11.identity()}, h3.identity()}; };
    auto in11 = [&](int x, int y) { return Element{{h5.identity(), h11.make(x, y, 0)}, h3.identity()}; };
    auto in3 = [&](int x, int y) { return Element{id.first, h3.make(x, y, 0)}; };
    gen_elements_ = {in5(1, 0), in5(0, 1), in11(1, 0), in11(0, 1), in3(1, 0), in3(0, 1)};
}

TensorMatrix G165::mu(const Element& g) const {
    const auto& c = *cache_;
    const auto& h = g.second;
    const auto& n5 = g.first.first;
    const auto& n11 = g.first.second;
    const auto& grp = *group_;
    return TensorMatrix({c.rho3[grp.acting().index_of(h)], times_power(c.rho5[grp.normal().first().index_of(n5)], c.r5, h.x),
                         times_power(c.rho11[grp.normal().second().index_of(n11)], c.r11, h.y)});
}

std::array<TensorMatrix, 6> G165::displayed_generators() const {
    auto r = [](int p) {
        const ExactMatrix dz = [&] {
            std::vector<PhasedScalar> dd;
            for (int i = 0; i < p; ++i) dd.push_back(PhasedScalar::zeta(p, (i * (i - 1) / 2) % p));
            return ExactMatrix::diagonal(dd) * clock_matrix(p).pow(3);
        }();
        const ExactMatrix f = fourier_matrix(p);
        const ExactMatrix m = dz * f * dz * f;
        return m.with_scale(m.scale() / Rational(p));
    };
    const ExactMatrix i3 = ExactMatrix::identity(3), i5 = ExactMatrix::identity(5), i11 = ExactMatrix::identity(11);
    return {TensorMatrix({i3, shift_matrix(5), i11}), TensorMatrix({i3, clock_matrix(5), i11}),
            TensorMatrix({i3, i5, shift_matrix(11)}), TensorMatrix({i3, i5, clock_matrix(11)}),
            TensorMatrix({shift_matrix(3), r(5), i11}), TensorMatrix({clock_matrix(3), i5, r(11)})};
}

std::array<std::string, 6> G165::generator_names() {
    return {"I3 x X5 x I11", "I3 x Z5 x I11", "I3 x I5 x X11", "I3 x I5 x Z11", "X3 x R5 x I11", "Z3 x I5 x R11"};
}

G165 build_g165(int e5, int e11) { return G165(build_conjugators(5, e5), build_conjugators(11, e11)); }

std::string element_str(const G165::Element& g) {
    return "(" + g.first.first.str() + "," + g.first.second.str() + "," + g.second.str() + ")";
}

namespace {

ProjectiveRep<G165Quotient, TensorMatrix> rep_over(const G165& g, const G165Quotient& q) {
    return ProjectiveRep<G165Quotient, TensorMatrix>(q, 165, [&g, q](std::size_t t) { return g.mu(q.representative(t)); });
}

}  // namespace

ProjectiveRep<G165Quotient, TensorMatrix> g165_rep(const G165& g) {
    return rep_over(g, G165Quotient(g.group(), triple_center(g.group())));
}

CounterexampleReport verify_counterexample(const G165& g, const CounterexampleOptions& opt) {
    CounterexampleReport r;
    r.seed = opt.seed;
    const auto& grp = g.group();
    auto t0 = std::chrono::steady_clock::now();

    // Group structure.
    r.group_order = grp.order();
    const auto z = triple_center(grp);
    r.center_order = z.size();
    const auto zgen = triple_center_generator(grp);
    r.center_generator_order = element_order(grp, zgen);
    r.center_cyclic = r.center_generator_order == r.center_order;
    if (opt.generic_center) {
        auto generic = center(grp);
        bool same = generic.size() == z.size();
        for (std::size_t k = 0; same && k < z.size(); ++k) same = grp.index_of(generic[k]) == grp.index_of(z[k]);
        r.generic_center_agrees = same;
    }
    r.seconds["group"] = seconds_since(t0);

    // Conjugators, for the chosen exponents.
    t0 = std::chrono::steady_clock::now();
    bool conj_ok = true;
    for (const auto* c : {&g.conjugators5(), &g.conjugators11()}) {
        for (const auto& ch : c->checks) {
            r.conjugator_checks.push_back({"p=" + std::to_string(c->p) + " e=" + std::to_string(c->e) + ": " + ch.name, ch.passed, ch.detail});
        }
        conj_ok = conj_ok && c->passed();
    }
    {
        const int alt = g.conjugators11().e == 3 ? 6 : 3;
        for (const auto& ch : conjugator_report(11, alt).checks) {
            r.alternate_checks.push_back({"p=11 e=" + std::to_string(alt) + ": " + ch.name, ch.passed, ch.detail});
        }
    }
    r.seconds["conjugators"] = seconds_since(t0);

    // Generators and the element-to-matrix formula.
    t0 = std::chrono::steady_clock::now();
    const auto disp = g.displayed_generators();
    const auto& gens = g.generator_elements();
    r.generators_match_display = true;
    for (std::size_t k = 0; k < 6; ++k) r.generators_match_display = r.generators_match_display && g.mu(gens[k]) == disp[k];

    std::vector<std::vector<std::size_t>> words(opt.mu_words);
    {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> len(1, 6), pick(0, 5);
        for (auto& w : words) {
            w.resize(len(rng));
            for (auto& s : w) s = pick(rng);
        }
    }
    std::vector<char> word_ok(words.size(), 0);
    parallel_for(words.size(), opt.jobs, [&](std::size_t k) {
        auto e = grp.identity();
        TensorMatrix m({ExactMatrix::identity(3), ExactMatrix::identity(5), ExactMatrix::identity(11)});
        for (std::size_t s : words[k]) {
            e = grp.compose(e, gens[s]);
            m = m * disp[s];
        }
        auto c = g.mu(e).scalar_ratio(m);
        word_ok[k] = c && c->root_of_unity_order() ? 1 : 0;
    });
    r.mu_words_checked = words.size();
    r.mu_words_ok = std::all_of(word_ok.begin(), word_ok.end(), [](char c) { return c != 0; });
    r.seconds["generators"] = seconds_since(t0);

    // Transversal and trace sweep.
    t0 = std::chrono::steady_clock::now();
    const G165Quotient q(grp, z);
    r.transversal_size = q.order();
    std::vector<char> zero(q.order(), 1);
    parallel_for(q.order(), opt.jobs, [&](std::size_t t) {
        if (t != 0) zero[t] = g.mu(q.representative(t)).trace().is_zero() ? 1 : 0;
    });
    r.traces_checked = q.order() - 1;
    for (std::size_t t = 1; t < q.order(); ++t) {
        if (!zero[t]) {
            if (!r.first_nonzero_trace) r.first_nonzero_trace = element_str(q.representative(t));
            ++r.traces_nonzero;
        }
    }
    r.seconds["trace_sweep"] = seconds_since(t0);

    // Center maps to scalars, faithfully.
    t0 = std::chrono::steady_clock::now();
    {
        std::set<std::string> seen;
        bool ok = true;
        for (const auto& c : z) {
            auto s = g.mu(c).as_scalar();
            if (!s) {
                ok = false;
                break;
            }
            seen.insert(s->promote(165).str());
        }
        auto sg = g.mu(zgen).as_scalar();
        r.center_scalars = ok && seen.size() == z.size() && sg && sg->root_of_unity_order() == 165;
    }
    r.seconds["center_scalars"] = seconds_since(t0);

    // Niceness.
    if (opt.run_nice) {
        t0 = std::chrono::steady_clock::now();
        NiceOptions nopt;
        nopt.seed = opt.seed;
        nopt.jobs = opt.jobs;
        nopt.random_pairs = opt.random_pairs;
        nopt.unitary_all = false;
        r.nice = verify_nice(rep_over(g, q), nopt);
        r.seconds["nice"] = seconds_since(t0);
    }

    // Monomiality.
    t0 = std::chrono::steady_clock::now();
    {
        std::vector<ExactMatrix> gm;
        for (const auto& d : disp) gm.push_back(d.materialize());
        r.generator_monomiality = monomiality_report(gm);
        std::vector<ExactMatrix> sm;
        std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<std::size_t> pick(1, q.order() - 1);
        for (std::size_t k = 0; k < opt.monomial_samples; ++k) sm.push_back(g.mu(q.representative(pick(rng))).materialize());
        r.sample_monomiality = monomiality_report(sm);
        for (const auto* set : {&gm, &sm}) {
            for (const auto& m : *set) r.nonmonomial_members += m.is_monomial() ? 0 : 1;
        }
    }
    r.seconds["monomiality"] = seconds_since(t0);

    r.theory_note =
        "Members are nonmonomial as matrices. Nonmonomiality up to equivalence also needs that G has no subgroup of "
        "index 165; that fact is not re-verified here.";

    r.passed = r.group_order == 4492125 && r.center_order == 165 && r.center_cyclic && r.generic_center_agrees.value_or(true) && conj_ok &&
               r.generators_match_display && r.mu_words_ok && r.transversal_size == 165 * 165 && r.traces_nonzero == 0 && r.center_scalars &&
               (!r.nice || r.nice->passed) && r.nonmonomial_members > 0;
    return r;
}

}  // namespace uebkit
