#include "cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "uebkit/counterexample165.hpp"
#include "uebkit/induce.hpp"
#include "uebkit/json_io.hpp"
#include "uebkit/nice.hpp"
#include "uebkit/ueb.hpp"

namespace uebkit::cli {

using nlohmann::json;

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;

struct Settings {
    std::uint64_t seed = kDefaultSeed;
    unsigned jobs = 1;
    std::string format = "json";
    std::string out;
    std::string export_path;
    bool factors_only = false;
    bool no_nice = false;
    std::string latin;
    std::string hadamard;
    std::string group;
    std::string from = "center";
    std::string character = "zeta^z";
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Report {
    json body = json::object();
    bool passed = true;

    void check(const std::string& name, bool ok, const json& witness = nullptr, double seconds = -1) {
        json c{{"name", name}, {"passed", ok}};
        if (!witness.is_null()) c["witness"] = witness;
        if (seconds >= 0) c["seconds"] = seconds;
        body["checks"].push_back(std::move(c));
        passed = passed && ok;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json load_json(const std::string& path, Report& r) {
    std::string text = read_file(path);
    r.body["artifacts"]["input"] = {{"path", path}, {"sha256", sha256_hex(text)}};
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_json(const std::string& path, const json& j, Report& r, const char* role = "output") {
    const std::string text = j.dump() + "\n";
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw UsageError("cannot write " + path);
    r.body["artifacts"][role] = {{"path", path}, {"sha256", sha256_hex(text)}};
}

int parse_param(const std::string& text, const std::string& prefix) {
    if (text.rfind(prefix + ":", 0) != 0) throw UsageError("expected " + prefix + ":<n>, got " + text);
    try {
        std::size_t pos = 0;
        int v = std::stoi(text.substr(prefix.size() + 1), &pos);
        if (pos != text.size() - prefix.size() - 1) throw UsageError("bad number in " + text);
        return v;
    } catch (const std::logic_error&) {
        throw UsageError("bad number in " + text);
    }
}

void add_ueb_report(const UnitaryErrorBasis& b, const Settings& s, Report& r);

void emit_basis(const UnitaryErrorBasis& b, const Settings& s, Report& r) {
    add_ueb_report(b, s, r);
    r.body["d"] = b.d;
    r.body["members"] = b.members.size();
    if (!s.out.empty()) {
        write_json(s.out, basis_to_json(b), r);
    } else {
        r.body["basis"] = basis_to_json(b);
    }
}

// ---------------------------------------------------------------------------
// Reports from library results.

json nice_check_json(const NiceCheck& c) {
    json j{{"passed", c.passed}, {"checked", c.checked}};
    if (!c.coverage.empty()) j["coverage"] = c.coverage;
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

void add_nice_report(const NiceReport& n, Report& r) {
    r.check("order is d^2", n.order.passed, n.order.detail.empty() ? json(nullptr) : json(n.order.detail));
    r.check("unitary", n.unitary.passed, n.unitary.witness.empty() ? json(nullptr) : json(n.unitary.witness));
    r.check("(i) rho(1) = I", n.identity.passed, n.identity.witness.empty() ? json(nullptr) : json(n.identity.witness));
    r.check("(ii) tr rho(g) = 0 for g != 1", n.traceless.passed, n.traceless.witness.empty() ? json(nullptr) : json(n.traceless.witness));
    r.check("(iii) rho(g) rho(h) = w(g,h) rho(gh)", n.projective.passed, n.projective.witness.empty() ? json(nullptr) : json(n.projective.witness));
    r.body["nice"] = {{"group_order", n.group_order},
                      {"dim", n.dim},
                      {"seed", n.seed},
                      {"order", nice_check_json(n.order)},
                      {"unitary", nice_check_json(n.unitary)},
                      {"identity", nice_check_json(n.identity)},
                      {"traceless", nice_check_json(n.traceless)},
                      {"projective", nice_check_json(n.projective)}};
}

void add_ueb_report(const UnitaryErrorBasis& b, const Settings& s, Report& r) {
    auto t0 = Clock::now();
    UebReport u;
    try {
        u = verify_ueb(b, s.jobs);
    } catch (const std::invalid_argument& e) {
        r.check("shape", false, e.what());
        return;
    }
    const double secs = since(t0);
    r.check("shape", true);
    json bad_unitary = nullptr, bad_pair = nullptr;
    for (const auto& v : u.violations) {
        if (v.kind == UebViolation::Kind::NotUnitary && bad_unitary.is_null()) bad_unitary = {{"member", v.first}};
        if (v.kind == UebViolation::Kind::NotOrthogonal && bad_pair.is_null()) {
            bad_pair = {{"members", {v.first, v.second}}, {"trace", scalar_to_json(v.value)}};
        }
    }
    r.check("unitary", bad_unitary.is_null(), bad_unitary);
    r.check("pairwise orthogonal", bad_pair.is_null(), bad_pair, secs);
    r.body["pairs_checked"] = u.pairs_checked;
    r.body["violations"] = u.violations.size();
}

// ---------------------------------------------------------------------------
// construct

LatinSquare latin_source(const std::string& source, Report& r) {
    if (source.rfind("cyclic:", 0) == 0) return cyclic_latin(parse_param(source, "cyclic"));
    return latin_from_json(load_json(source, r));
}

HadamardSequence hadamard_source(const std::string& source, Report& r) {
    if (source.rfind("fourier:", 0) == 0) return HadamardSequence::constant(fourier_hadamard(parse_param(source, "fourier")));
    if (source == "halpha") return HadamardSequence::constant(h_alpha());
    json j = load_json(source, r);
    if (j.is_object()) return HadamardSequence::constant(matrix_from_json(j, collect_symbols(j)));
    return hadamard_from_json(j);
}

void construct_nice(const Settings& s, Report& r) {
    if (s.group.empty()) throw UsageError("construct nice needs --group heisenberg:<d>");
    const int d = parse_param(s.group, "heisenberg");
    HeisenbergGroup h(d);
    QuotientGroup<HeisenbergGroup> q(h, h.center_elements());
    ProjectiveRep<QuotientGroup<HeisenbergGroup>> rep(q, static_cast<std::size_t>(d),
                                                      [q](std::size_t t) { return heisenberg_matrix(q.representative(t)); });
    NiceOptions opt;
    opt.seed = s.seed;
    opt.jobs = s.jobs;
    auto t0 = Clock::now();
    auto n = verify_nice(rep, opt);
    r.body["seconds"] = since(t0);
    add_nice_report(n, r);
    UnitaryErrorBasis b;
    b.d = d;
    for (std::size_t t = 0; t < q.order(); ++t) {
        b.members.push_back(rep(t));
        b.labels.push_back(q.representative(t).str());
    }
    emit_basis(b, s, r);
}

json counterexample_json(const CounterexampleReport& c, Report& r) {
    r.check("group order 4492125", c.group_order == 4492125, c.group_order);
    r.check("center of order 165", c.center_order == 165, c.center_order);
    r.check("center cyclic", c.center_cyclic, c.center_generator_order);
    if (c.generic_center_agrees) r.check("center by brute force agrees", *c.generic_center_agrees);
    bool conj_ok = true;
    json failed = json::array();
    for (const auto& ch : c.conjugator_checks) {
        conj_ok = conj_ok && ch.passed;
        if (!ch.passed) failed.push_back(ch.name);
    }
    r.check("conjugator postconditions", conj_ok, failed.empty() ? json(nullptr) : failed);
    r.check("generators match the displayed list", c.generators_match_display);
    r.check("mu agrees with generator words", c.mu_words_ok, c.mu_words_checked);
    r.check("transversal size 165^2", c.transversal_size == 27225, c.transversal_size);
    r.check("trace sweep all zero", c.traces_nonzero == 0, c.first_nonzero_trace ? json(*c.first_nonzero_trace) : json(nullptr),
            c.seconds.count("trace_sweep") ? c.seconds.at("trace_sweep") : -1);
    r.check("center maps to distinct scalars", c.center_scalars);
    if (c.nice) add_nice_report(*c.nice, r);
    r.check("nonmonomial members present", c.nonmonomial_members > 0, c.nonmonomial_members);

    json conj = json::array();
    for (const auto& ch : c.conjugator_checks) conj.push_back({{"name", ch.name}, {"passed", ch.passed}});
    json alt = json::array();
    for (const auto& ch : c.alternate_checks) alt.push_back({{"name", ch.name}, {"passed", ch.passed}});
    json secs = json::object();
    for (const auto& [k, v] : c.seconds) secs[k] = v;
    return {{"group_order", c.group_order},
            {"center_order", c.center_order},
            {"conjugator_checks", conj},
            {"alternate_exponent_checks", alt},
            {"trace_sweep", {{"checked", c.traces_checked}, {"nonzero", c.traces_nonzero}}},
            {"generator_monomiality",
             {{"is_monomial", c.generator_monomiality.is_monomial},
              {"zero_fraction", c.generator_monomiality.zero_fraction.str()},
              {"nonzero_counts", c.generator_monomiality.per_matrix_nonzero_counts}}},
            {"sample_monomiality",
             {{"is_monomial", c.sample_monomiality.is_monomial},
              {"zero_fraction", c.sample_monomiality.zero_fraction.str()},
              {"nonzero_counts", c.sample_monomiality.per_matrix_nonzero_counts}}},
            {"note", c.theory_note},
            {"seconds", secs}};
}

void export_counterexample(const G165& g, const Settings& s, Report& r) {
    const auto gens = g.displayed_generators();
    const auto names = G165::generator_names();
    json out{{"kind", s.factors_only ? "counterexample165-factors" : "counterexample165"}};
    json gj = json::array();
    for (std::size_t k = 0; k < gens.size(); ++k) {
        json m = s.factors_only ? tensor_to_json(gens[k]) : matrix_to_json(gens[k].materialize());
        gj.push_back({{"name", names[k]}, {"matrix", m}});
    }
    out["generators"] = gj;
    out["conjugators"] = {{"R5", matrix_to_json(g.conjugators5().R)}, {"R11", matrix_to_json(g.conjugators11().R)}};
    // Members are mu(t) for t in the least-index transversal of the center:
    // all triples whose three central coordinates are zero.
    out["transversal"] = "elements ((x5,y5,0),(x11,y11,0),(x3,y3,0)) in lexicographic order";
    write_json(s.export_path, out, r, "export");
}

void construct_counterexample(const Settings& s, Report& r) {
    auto t0 = Clock::now();
    G165 g = build_g165();
    CounterexampleOptions opt;
    opt.seed = s.seed;
    opt.jobs = s.jobs;
    opt.run_nice = false;
    opt.generic_center = false;
    auto c = verify_counterexample(g, opt);
    r.body["counterexample165"] = counterexample_json(c, r);
    r.body["seconds"] = since(t0);
    if (!s.export_path.empty()) export_counterexample(g, s, r);
}

void construct(const std::string& kind, const std::vector<std::string>& extra, const Settings& s, Report& r) {
    r.body["kind"] = kind;
    if (kind.rfind("pauli:", 0) == 0) {
        const int d = parse_param(kind, "pauli");
        if (d < 1) throw UsageError("pauli:<d> needs d >= 1");
        emit_basis(pauli_basis(d), s, r);
    } else if (kind == "sam") {
        std::string ls = s.latin, hs = s.hadamard;
        if (ls.empty() && !extra.empty()) ls = extra[0];
        if (hs.empty() && extra.size() > 1) hs = extra[1];
        if (ls.empty() || hs.empty()) throw UsageError("construct sam needs a Latin square and a Hadamard source");
        LatinSquare l = latin_source(ls, r);
        HadamardSequence h = hadamard_source(hs, r);
        emit_basis(shift_and_multiply(l, h), s, r);
    } else if (kind == "nice") {
        construct_nice(s, r);
    } else if (kind == "counterexample165") {
        construct_counterexample(s, r);
    } else {
        throw UsageError("unknown construct kind " + kind);
    }
}

// ---------------------------------------------------------------------------
// verify

// Compares an export against the rebuilt group; the imported generators must
// equal the ones the pipeline then verifies.
void import_counterexample(const json& j, const G165& g, Report& r) {
    if (!j.is_object() || !j.contains("generators") || !j.contains("conjugators")) throw FormatError("not a counterexample165 export");
    const auto gens = g.displayed_generators();
    const auto& jg = j.at("generators");
    if (!jg.is_array() || jg.size() != gens.size()) throw FormatError("expected " + std::to_string(gens.size()) + " generators");
    json mismatched = json::array();
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const json& m = jg[k].at("matrix");
        const bool ok = m.contains("factors") ? tensor_from_json(m, collect_symbols(m)) == gens[k]
                                              : matrix_from_json(m, collect_symbols(m)) == gens[k].materialize();
        if (!ok) mismatched.push_back(k);
    }
    r.check("imported generators equal the rebuilt ones", mismatched.empty(), mismatched.empty() ? json(nullptr) : mismatched);
    const json& c = j.at("conjugators");
    const bool conj = matrix_from_json(c.at("R5")) == g.conjugators5().R && matrix_from_json(c.at("R11")) == g.conjugators11().R;
    r.check("imported R5 and R11 equal the rebuilt ones", conj);
}

void verify(const std::string& kind, const std::string& file, const Settings& s, Report& r) {
    r.body["kind"] = kind;
    if (kind == "counterexample165") {
        auto t0 = Clock::now();
        G165 g = build_g165();
        if (!file.empty()) import_counterexample(load_json(file, r), g, r);
        CounterexampleOptions opt;
        opt.seed = s.seed;
        opt.jobs = s.jobs;
        opt.run_nice = !s.no_nice;
        r.body["counterexample165"] = counterexample_json(verify_counterexample(g, opt), r);
        r.body["seconds"] = since(t0);
        return;
    }
    if (file.empty()) throw UsageError("verify " + kind + " needs an input file");
    json j = load_json(file, r);
    if (kind == "ueb") {
        add_ueb_report(basis_from_json(j), s, r);
    } else if (kind == "nice") {
        auto b = basis_from_json(j);
        auto inf = infer_index_group(b.members);
        json w = nullptr;
        if (inf.failing_pair) w = {inf.failing_pair->first, inf.failing_pair->second};
        r.check("members close projectively under products", inf.group.has_value(), inf.group ? json(nullptr) : json{{"pair", w}, {"reason", inf.failure}});
        if (!inf.group) return;
        r.body["index_order"] = inf.order;
        NiceOptions opt;
        opt.seed = s.seed;
        opt.jobs = s.jobs;
        add_nice_report(verify_nice(rep_from_members(*inf.group, b.members, inf.order), opt), r);
    } else if (kind == "hadamard") {
        HadamardSequence h = j.is_object() ? HadamardSequence::constant(matrix_from_json(j, collect_symbols(j))) : hadamard_from_json(j);
        for (std::size_t k = 0; k < h.mats.size(); ++k) {
            auto v = validate_hadamard(h.mats[k]);
            r.check("H^(" + std::to_string(k) + ") is a complex Hadamard matrix", v.ok, v.ok ? json(nullptr) : json(v.reason));
        }
    } else if (kind == "latin") {
        LatinSquare l = latin_from_json(j);
        LatinValidation v;
        try {
            v = validate_latin(l);
        } catch (const std::invalid_argument& e) {
            r.check("Latin square", false, e.what());
            return;
        }
        json w = nullptr;
        if (v.violation) w = {{"line", v.violation->in_row ? "row" : "column"}, {"index", v.violation->index}, {"repeated_symbol", v.violation->symbol}};
        r.check("Latin square", v.ok, w);
    } else {
        throw UsageError("unknown verify kind " + kind);
    }
}

// ---------------------------------------------------------------------------
// analyze

void analyze_induce(const Settings& s, Report& r) {
    const std::string group = s.group.empty() ? "heisenberg:3" : s.group;
    const int d = parse_param(group, "heisenberg");
    HeisenbergGroup h(d);
    std::vector<std::size_t> k;
    for (std::size_t i = 0; i < h.order(); ++i) {
        auto e = h.element_at(i);
        if (s.from == "center" ? (e.x == 0 && e.y == 0) : s.from == "x0" ? e.x == 0 : false) k.push_back(i);
    }
    if (k.empty()) throw UsageError("--from must be center or x0");
    std::function<PhasedScalar(std::size_t)> psi;
    if (s.character == "zeta^z") {
        psi = [&](std::size_t i) { return PhasedScalar::zeta(d, h.element_at(i).z); };
    } else if (s.character == "trivial") {
        psi = [](std::size_t) { return PhasedScalar(1); };
    } else {
        throw UsageError("--character must be zeta^z or trivial");
    }
    auto chi = induce_character(h, k, psi);
    auto rep = induce_representation(h, k, [&](std::size_t i) { return ExactMatrix::identity(1).times(psi(i)); });
    bool match = true;
    for (std::size_t i = 0; i < h.order(); ++i) match = match && rep.matrices[i].trace() == chi(i);
    r.check("class function", is_class_function(h, chi));
    r.check("degree (H:K) psi(1)", chi(0) == PhasedScalar(static_cast<std::int64_t>(rep.dim())), scalar_to_json(chi(0)));
    r.check("block monomial", is_block_monomial(rep));
    r.check("trace of induced rep equals induced character", match);
    Rational f = min_zero_fraction(rep.matrices);
    Rational bound = Rational(1) - Rational(1, static_cast<std::int64_t>(rep.index()));
    r.check("zero fraction at least 1 - 1/(H:K)", !(f < bound), f.str());
    r.body["dim"] = rep.dim();
    r.body["index"] = rep.index();
    r.body["zero_fraction"] = f.str();
    json values = json::array();
    for (const auto& v : chi.values) values.push_back(scalar_to_json(v));
    r.body["character"] = values;
    if (!s.out.empty()) {
        UnitaryErrorBasis b;
        b.d = static_cast<int>(rep.dim());
        b.members = rep.matrices;
        for (std::size_t i = 0; i < h.order(); ++i) b.labels.push_back(h.element_at(i).str());
        write_json(s.out, basis_to_json(b), r);
    }
}

void analyze(const std::string& kind, const std::string& file, const Settings& s, Report& r) {
    r.body["kind"] = kind;
    if (kind == "induce") {
        analyze_induce(s, r);
        return;
    }
    if (file.empty()) throw UsageError("analyze " + kind + " needs an input file");
    auto b = basis_from_json(load_json(file, r));
    if (b.members.empty()) throw FormatError("basis has no members");
    if (kind == "monomial") {
        auto m = monomiality_report(b.members);
        r.body["is_monomial"] = m.is_monomial;
        r.body["zero_fraction"] = m.zero_fraction.str();
        r.body["nonzero_counts"] = m.per_matrix_nonzero_counts;
    } else if (kind == "sparsity") {
        r.body["min_zero_fraction"] = min_zero_fraction(b.members).str();
        r.body["at_least_half"] = !(min_zero_fraction(b.members) < Rational(1, 2));
    } else if (kind == "wickedness") {
        auto w = wickedness_witness(b);
        r.body["witness_found"] = w.has_value();
        if (w) {
            json diag = json::array();
            for (const auto& x : w->diagonal) diag.push_back(scalar_to_json(x));
            r.body["witness"] = {{"E", w->first},
                                 {"F", w->second},
                                 {"E_label", b.labels.empty() ? "" : b.labels[w->first]},
                                 {"F_label", b.labels.empty() ? "" : b.labels[w->second]},
                                 {"diagonal", diag},
                                 {"offending_index", w->offending_index},
                                 {"offending_ratio", scalar_to_json(w->offending_ratio)}};
        }
    } else if (kind == "cocycle") {
        auto inf = infer_index_group(b.members);
        r.check("members close projectively under products", inf.group.has_value(), inf.failure.empty() ? json(nullptr) : json(inf.failure));
        if (!inf.group) return;
        auto rep = rep_from_members(*inf.group, b.members, inf.order);
        auto c = extract_cocycle(rep, s.jobs);
        const std::size_t n = inf.group->order();
        bool ok = n <= 25 ? satisfies_cocycle_identity(*inf.group, c) : satisfies_cocycle_identity(*inf.group, c, 10000, s.seed);
        r.check(n <= 25 ? "cocycle identity on all triples" : "cocycle identity on 10000 seeded triples", ok);
        json table = json::array();
        for (const auto& row : c.omega) {
            json jr = json::array();
            for (const auto& w : row) jr.push_back(scalar_to_json(w));
            table.push_back(jr);
        }
        r.body["index_order"] = inf.order;
        r.body["omega"] = table;
    } else {
        throw UsageError("unknown analyze kind " + kind);
    }
}

std::string echo(int argc, const char* const* argv) {
    std::string out;
    for (int i = 1; i < argc; ++i) out += (i > 1 ? " " : "") + std::string(argv[i]);
    return out;
}

void summarize(const Report& r, std::ostream& err) {
    err << "uebkit " << r.body.value("command", "") << ": " << (r.passed ? "PASS" : "FAIL");
    if (r.body.contains("checks")) {
        std::size_t n = r.body["checks"].size(), bad = 0;
        for (const auto& c : r.body["checks"]) bad += c["passed"].get<bool>() ? 0 : 1;
        err << " (" << n - bad << "/" << n << " checks)";
    }
    err << "\n";
    if (r.body.contains("checks")) {
        for (const auto& c : r.body["checks"]) {
            if (!c["passed"].get<bool>()) err << "  failed: " << c["name"].get<std::string>() << "\n";
        }
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and verification of unitary error bases", "uebkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    app.add_option("--seed", s.seed, "Seed for every sampled check")->capture_default_str();
    app.add_option("--jobs", s.jobs, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
    app.add_option("--format", s.format, "Report format")->check(CLI::IsMember({"json", "pretty"}))->capture_default_str();

    std::string kind, file;
    std::vector<std::string> extra;
    auto* con = app.add_subcommand("construct", "Build a basis: pauli:<d>, sam, nice, counterexample165");
    con->add_option("kind", kind)->required();
    con->add_option("sources", extra, "Latin and Hadamard sources for sam");
    con->add_option("-o,--out", s.out, "Basis output file");
    con->add_option("--latin", s.latin, "cyclic:<d> or a file");
    con->add_option("--hadamard", s.hadamard, "fourier:<d>, halpha or a file");
    con->add_option("--group", s.group, "heisenberg:<d>");
    con->add_option("--export", s.export_path, "Export file for counterexample165");
    con->add_flag("--factors-only", s.factors_only, "Export tensor factors instead of full matrices");

    auto* ver = app.add_subcommand("verify", "Check ueb, nice, hadamard, latin or counterexample165");
    ver->add_option("kind", kind)->required()->check(CLI::IsMember({"ueb", "nice", "hadamard", "latin", "counterexample165"}));
    ver->add_option("file", file, "Input file; for counterexample165 an optional export to import");
    ver->add_flag("--no-nice", s.no_nice, "counterexample165: skip the sampled nice-basis check");

    auto* ana = app.add_subcommand("analyze", "Report monomial, sparsity, wickedness, cocycle or induce");
    ana->add_option("kind", kind)->required()->check(CLI::IsMember({"monomial", "sparsity", "wickedness", "cocycle", "induce"}));
    ana->add_option("file", file);
    ana->add_option("--group", s.group, "heisenberg:<d>");
    ana->add_option("--from", s.from, "center or x0")->capture_default_str();
    ana->add_option("--character", s.character, "zeta^z or trivial")->capture_default_str();
    ana->add_option("-o,--out", s.out, "Write the induced matrices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return ExitCode::InputError;
    }

    Report r;
    r.body["command"] = echo(argc, argv);
    r.body["seed"] = s.seed;
    r.body["checks"] = json::array();
    int code = Pass;
    try {
        if (*con) construct(kind, extra, s, r);
        if (*ver) verify(kind, file, s, r);
        if (*ana) analyze(kind, file, s, r);
        code = r.passed ? Pass : Fail;
    } catch (const FormatError& e) {
        r.body["error"] = e.what();
        code = ExitCode::InputError;
    } catch (const UsageError& e) {
        r.body["error"] = e.what();
        code = ExitCode::InputError;
    } catch (const json::exception& e) {
        r.body["error"] = e.what();
        code = ExitCode::InputError;
    } catch (const std::invalid_argument& e) {
        r.body["error"] = e.what();
        code = ExitCode::InputError;
    }
    r.body["passed"] = code == Pass;
    r.body["exit_code"] = code;
    out << (s.format == "pretty" ? r.body.dump(2) : r.body.dump()) << "\n";
    if (code == ExitCode::InputError) {
        err << "uebkit " << r.body["command"].get<std::string>() << ": input error: " << r.body["error"].get<std::string>() << "\n";
    } else {
        r.passed = code == Pass;
        summarize(r, err);
    }
    return code;
}

}  // namespace uebkit::cli
