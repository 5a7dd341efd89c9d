#include "uebkit/json_io.hpp"

#include <algorithm>
#include <set>

namespace uebkit {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw FormatError(what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::int64_t as_int(const json& j, const char* what) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_string()) {
        try {
            std::size_t pos = 0;
            std::int64_t v = std::stoll(j.get<std::string>(), &pos);
            if (pos == j.get<std::string>().size()) return v;
        } catch (const std::exception&) {
        }
    }
    fail(std::string(what) + " must be an integer");
}

Rational as_rational(const json& j, const char* what) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) fail(std::string(what) + " must be a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(std::string(what) + ": " + e.what());
    }
}

json term_to_json(const PhasedScalar::Term& t, const SymbolAlphabet& alphabet) {
    json coeffs = json::object();
    for (const auto& [k, v] : t.coeff.terms()) coeffs[std::to_string(k)] = v.str();
    json symbols = json::object();
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
        if (t.exponents[i] != 0) symbols[(*alphabet)[i]] = t.exponents[i];
    }
    return json{{"order", t.coeff.order()}, {"coeffs", coeffs}, {"symbols", symbols}};
}

PhasedScalar term_from_json(const json& j, const SymbolAlphabet& alphabet) {
    const auto n = as_int(field(j, "order"), "order");
    if (n < 1 || n > 100000) fail("order out of range");
    std::vector<Rational> raw(static_cast<std::size_t>(n));
    const json& coeffs = field(j, "coeffs");
    if (!coeffs.is_object()) fail("coeffs must be an object");
    for (const auto& [k, v] : coeffs.items()) {
        std::int64_t e = as_int(json(k), "coefficient exponent");
        e %= n;
        if (e < 0) e += n;
        raw[static_cast<std::size_t>(e)] += as_rational(v, "coefficient");
    }
    Cyclotomic c = Cyclotomic::from_power_coefficients(static_cast<int>(n), std::move(raw));
    PhasedScalar out(c);
    if (j.contains("symbols")) {
        const json& syms = j.at("symbols");
        if (!syms.is_object()) fail("symbols must be an object");
        for (const auto& [name, e] : syms.items()) {
            if (!alphabet || std::find(alphabet->begin(), alphabet->end(), name) == alphabet->end()) fail("undeclared symbol \"" + name + "\"");
            out = out * PhasedScalar::symbol(alphabet, name, static_cast<int>(as_int(e, "symbol exponent")));
        }
    }
    return out;
}

void collect(const json& j, std::set<std::string>& names) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (k == "symbols" && v.is_object()) {
                for (const auto& [name, e] : v.items()) names.insert(name);
            } else if (k == "symbols" && v.is_array()) {
                for (const auto& name : v)
                    if (name.is_string()) names.insert(name.get<std::string>());
            } else {
                collect(v, names);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) collect(v, names);
    }
}

}  // namespace

json scalar_to_json(const PhasedScalar& s) {
    if (s.is_zero()) return json{{"order", 1}, {"coeffs", json::object()}, {"symbols", json::object()}};
    if (s.is_monomial()) return term_to_json(s.terms().front(), s.alphabet());
    json terms = json::array();
    for (const auto& t : s.terms()) terms.push_back(term_to_json(t, s.alphabet()));
    return json{{"terms", terms}};
}

PhasedScalar scalar_from_json(const json& j, const SymbolAlphabet& alphabet) {
    if (j.is_number_integer()) return PhasedScalar(j.get<std::int64_t>());
    if (j.is_string()) return PhasedScalar(as_rational(j, "scalar"));
    if (!j.is_object()) fail("scalar must be an object");
    if (j.contains("terms")) {
        const json& ts = j.at("terms");
        if (!ts.is_array()) fail("terms must be an array");
        PhasedScalar out;
        for (const auto& t : ts) out += term_from_json(t, alphabet);
        return out;
    }
    return term_from_json(j, alphabet);
}

json matrix_to_json(const ExactMatrix& m) {
    json entries = json::array();
    for (const auto& e : m.entries()) entries.push_back(scalar_to_json(e));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"scale", m.scale().str()}, {"entries", entries}};
}

ExactMatrix matrix_from_json(const json& j, const SymbolAlphabet& alphabet) {
    const auto rows = as_int(field(j, "rows"), "rows");
    const auto cols = as_int(field(j, "cols"), "cols");
    if (rows < 0 || cols < 0 || rows * cols > 100000000) fail("matrix shape out of range");
    const json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows * cols)) fail("entries must hold rows*cols scalars");
    std::vector<PhasedScalar> e;
    e.reserve(entries.size());
    for (const auto& x : entries) e.push_back(scalar_from_json(x, alphabet));
    Rational scale = j.contains("scale") ? as_rational(j.at("scale"), "scale") : Rational(1);
    if (scale.is_zero()) fail("scale must be nonzero");
    return ExactMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(e), scale);
}

json tensor_to_json(const TensorMatrix& m) {
    json fs = json::array();
    for (const auto& f : m.factors()) fs.push_back(matrix_to_json(f));
    return json{{"factors", fs}};
}

TensorMatrix tensor_from_json(const json& j, const SymbolAlphabet& alphabet) {
    const json& fs = field(j, "factors");
    if (!fs.is_array()) fail("factors must be an array");
    std::vector<ExactMatrix> out;
    for (const auto& f : fs) out.push_back(matrix_from_json(f, alphabet));
    try {
        return TensorMatrix(std::move(out));
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

json basis_to_json(const UnitaryErrorBasis& b) {
    json members = json::array();
    SymbolAlphabet alphabet;
    for (const auto& m : b.members) {
        members.push_back(matrix_to_json(m));
        for (const auto& e : m.entries()) {
            if (!alphabet && e.alphabet()) alphabet = e.alphabet();
        }
    }
    json out{{"d", b.d}, {"members", members}, {"labels", b.labels}};
    if (alphabet) out["symbols"] = *alphabet;
    return out;
}

UnitaryErrorBasis basis_from_json(const json& j) {
    UnitaryErrorBasis b;
    b.d = static_cast<int>(as_int(field(j, "d"), "d"));
    if (b.d < 1) fail("d must be positive");
    SymbolAlphabet alphabet;
    if (j.contains("symbols") && j.at("symbols").is_array()) {
        alphabet = make_alphabet(j.at("symbols").get<std::vector<std::string>>());
    } else {
        alphabet = collect_symbols(j);
    }
    const json& ms = field(j, "members");
    if (!ms.is_array()) fail("members must be an array");
    for (const auto& m : ms) {
        b.members.push_back(matrix_from_json(m, alphabet));
        if (b.members.back().rows() != static_cast<std::size_t>(b.d) || !b.members.back().is_square()) fail("member is not d x d");
    }
    if (j.contains("labels")) {
        for (const auto& l : j.at("labels")) {
            if (!l.is_string()) fail("labels must be strings");
            b.labels.push_back(l.get<std::string>());
        }
    }
    if (!b.labels.empty() && b.labels.size() != b.members.size()) fail("labels and members differ in length");
    return b;
}

json latin_to_json(const LatinSquare& l) {
    json rows = json::array();
    for (int i = 0; i < l.d; ++i) {
        json row = json::array();
        for (int k = 0; k < l.d; ++k) row.push_back(l(i, k));
        rows.push_back(row);
    }
    return rows;
}

LatinSquare latin_from_json(const json& j) {
    if (!j.is_array()) fail("Latin square must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) fail("Latin square rows must be arrays");
        std::vector<int> row;
        for (const auto& v : r) row.push_back(static_cast<int>(as_int(v, "Latin square entry")));
        rows.push_back(std::move(row));
    }
    try {
        return latin_from_rows(rows);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

json hadamard_to_json(const HadamardSequence& h) {
    json out = json::array();
    for (const auto& m : h.mats) out.push_back(matrix_to_json(m));
    return out;
}

HadamardSequence hadamard_from_json(const json& j) {
    if (!j.is_array() || j.empty()) fail("Hadamard sequence must be a nonempty array of matrices");
    SymbolAlphabet alphabet = collect_symbols(j);
    HadamardSequence h;
    for (const auto& m : j) h.mats.push_back(matrix_from_json(m, alphabet));
    h.d = static_cast<int>(h.mats.front().rows());
    return h;
}

SymbolAlphabet collect_symbols(const json& j) {
    std::set<std::string> names;
    collect(j, names);
    if (names.empty()) return nullptr;
    return make_alphabet(std::vector<std::string>(names.begin(), names.end()));
}

}  // namespace uebkit
