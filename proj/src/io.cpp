#include "casilab/io.hpp"

#include <fstream>
#include <sstream>

namespace casilab::io {

namespace {

Scalar scalar_from_json(const json& j) {
    if (!j.is_string()) throw parse_error("scalar values must be strings like \"p/q\"");
    return Scalar::parse(j.get<std::string>());
}

uint32_t uint_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw parse_error(std::string("missing or invalid field \"") + key + "\"");
    return j[key].get<uint32_t>();
}

}  // namespace

json algebra_to_json(const LieAlgebra& alg) {
    json j;
    j["format_version"] = kFormatVersion;
    j["name"] = alg.name();
    j["dim"] = alg.dim();
    j["generators"] = alg.names();
    json brackets = json::array();
    for (const auto& [ij, row] : alg.table()) {
        json entry;
        entry["i"] = ij.first;
        entry["j"] = ij.second;
        json terms = json::array();
        for (const auto& [k, c] : row) terms.push_back({{"k", k}, {"c", c.str()}});
        entry["terms"] = std::move(terms);
        brackets.push_back(std::move(entry));
    }
    j["brackets"] = std::move(brackets);
    return j;
}

LieAlgebra algebra_from_json(const json& j) {
    uint32_t dim = uint_field(j, "dim");
    std::vector<std::string> names;
    if (j.contains("generators")) names = j["generators"].get<std::vector<std::string>>();
    LieAlgebra alg(dim, names);
    if (j.contains("name")) alg.set_name(j["name"].get<std::string>());
    if (!j.contains("brackets") || !j["brackets"].is_array())
        throw parse_error("algebra file lacks a \"brackets\" array");
    for (const auto& entry : j["brackets"]) {
        uint32_t i = uint_field(entry, "i");
        uint32_t jj = uint_field(entry, "j");
        if (i >= jj) throw parse_error("bracket entries must have i < j");
        for (const auto& term : entry["terms"])
            alg.set_constant(i, jj, uint_field(term, "k"), scalar_from_json(term["c"]));
    }
    return alg;
}

json chain_to_json(const ChainSpec& chain) {
    json j;
    j["format_version"] = kFormatVersion;
    if (chain.basis_change) {
        json rows = json::array();
        for (size_t r = 0; r < chain.basis_change->rows(); ++r) {
            json row = json::array();
            for (size_t c = 0; c < chain.basis_change->cols(); ++c)
                row.push_back(chain.basis_change->at(r, c).str());
            rows.push_back(std::move(row));
        }
        j["basis_change"] = std::move(rows);
    } else {
        j["basis_change"] = nullptr;
    }
    j["sub_dim"] = chain.sub_dim;
    return j;
}

ChainSpec chain_from_json(const json& j) {
    ChainSpec chain;
    chain.sub_dim = uint_field(j, "sub_dim");
    if (j.contains("basis_change") && !j["basis_change"].is_null()) {
        const auto& rows = j["basis_change"];
        if (!rows.is_array() || rows.empty()) throw parse_error("basis_change must be a matrix");
        size_t n = rows.size();
        ScalarMat m(n, n);
        for (size_t r = 0; r < n; ++r) {
            if (!rows[r].is_array() || rows[r].size() != n)
                throw parse_error("basis_change must be square");
            for (size_t c = 0; c < n; ++c) m.at(r, c) = scalar_from_json(rows[r][c]);
        }
        chain.basis_change = std::move(m);
    }
    return chain;
}

json poly_to_json(const Poly& p) {
    json j;
    j["dim"] = p.dim();
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json term;
        term["coeff"] = it->second.str();
        json exps = json::array();
        for (const auto& [v, e] : it->first.entries()) exps.push_back({v, e});
        term["exps"] = std::move(exps);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

Poly poly_from_json(const json& j) {
    Poly p(uint_field(j, "dim"));
    if (!j.contains("terms") || !j["terms"].is_array())
        throw parse_error("polynomial file lacks a \"terms\" array");
    for (const auto& term : j["terms"]) {
        if (!term.contains("coeff")) throw parse_error("polynomial term lacks \"coeff\"");
        std::vector<Monomial::Entry> entries;
        for (const auto& pair : term["exps"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw parse_error("exps entries must be [variable, exponent] pairs");
            uint32_t v = pair[0].get<uint32_t>();
            uint32_t e = pair[1].get<uint32_t>();
            if (v >= p.dim()) throw parse_error("variable index out of range in polynomial");
            entries.push_back({v, e});
        }
        p.add_term(Monomial(std::move(entries)), scalar_from_json(term["coeff"]));
    }
    return p;
}

json ue_to_json(const UEElement& e) {
    json j;
    j["dim"] = e.dim;
    json terms = json::array();
    for (const auto& [w, c] : e.terms) {
        json term;
        term["coeff"] = c.str();
        json word = json::array();
        for (const auto& [g, exp] : UEElement::grouped(w)) word.push_back({g, exp});
        term["word"] = std::move(word);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

UEElement ue_from_json(const json& j) {
    UEElement e = UEElement::zero(uint_field(j, "dim"));
    if (!j.contains("terms") || !j["terms"].is_array())
        throw parse_error("element file lacks a \"terms\" array");
    for (const auto& term : j["terms"]) {
        std::vector<std::pair<uint32_t, uint32_t>> gw;
        uint32_t last = 0;
        bool first = true;
        for (const auto& pair : term["word"]) {
            uint32_t g = pair[0].get<uint32_t>();
            uint32_t exp = pair[1].get<uint32_t>();
            if (g >= e.dim) throw parse_error("generator index out of range in element");
            if (exp == 0) throw parse_error("word exponents must be positive");
            if (!first && g <= last)
                throw parse_error("word generator indices must be strictly increasing");
            first = false;
            last = g;
            gw.push_back({g, exp});
        }
        Letters w = UEElement::ungroup(gw);
        Scalar c = scalar_from_json(term["coeff"]);
        if (c.is_zero()) continue;
        auto [it, inserted] = e.terms.emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) e.terms.erase(it);
        }
    }
    return e;
}

json template_to_json(const MatrixTemplate& t) {
    json j;
    j["format_version"] = kFormatVersion;
    j["size"] = t.size;
    j["dim"] = t.dim;
    if (!t.comment.empty()) j["comment"] = t.comment;
    json rows = json::array();
    for (uint32_t r = 0; r < t.size; ++r) {
        json row = json::array();
        for (uint32_t c = 0; c < t.size; ++c) row.push_back(poly_to_json(t.entries[r][c]));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

MatrixTemplate template_from_json(const json& j) {
    MatrixTemplate t;
    t.size = uint_field(j, "size");
    t.dim = uint_field(j, "dim");
    if (j.contains("comment")) t.comment = j["comment"].get<std::string>();
    if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != t.size)
        throw parse_error("template entries must form a size x size matrix");
    t.entries.assign(t.size, std::vector<Poly>(t.size, Poly(t.dim)));
    for (uint32_t r = 0; r < t.size; ++r) {
        if (j["entries"][r].size() != t.size)
            throw parse_error("template entries must form a size x size matrix");
        for (uint32_t c = 0; c < t.size; ++c) {
            Poly p = poly_from_json(j["entries"][r][c]);
            if (p.dim() != t.dim) throw parse_error("template entry dimension mismatch");
            t.entries[r][c] = std::move(p);
        }
    }
    return t;
}

json jacobi_report_to_json(const JacobiReport& r) {
    json j;
    j["pass"] = r.pass;
    json v = json::array();
    for (const auto& viol : r.violations)
        v.push_back({{"i", viol.i},
                     {"j", viol.j},
                     {"k", viol.k},
                     {"l", viol.l},
                     {"residual", viol.residual.str()}});
    j["violations"] = std::move(v);
    return j;
}

json chain_report_to_json(const ChainReport& r) {
    json j;
    j["pass"] = r.pass;
    j["complement_dim"] = r.complement_dim;
    if (!r.violation.empty()) j["violation"] = r.violation;
    return j;
}

json counts_to_json(const MLPCounts& c) {
    json j;
    j["dim_s"] = c.dim_s;
    j["N_s"] = c.n_s;
    j["dim_h"] = c.dim_h;
    j["N_h"] = c.n_h;
    j["l_prime"] = c.l_prime;
    j["n"] = c.needed;
    j["m"] = c.available;
    j["total_solutions"] = c.total_solutions;
    return j;
}

json decomposition_to_json(const Decomposition& d, const LieAlgebra& chain_alg,
                           const std::string& source_id) {
    json j;
    j["format_version"] = kFormatVersion;
    j["source"] = source_id;
    j["sub_dim"] = d.sub_dim;
    j["M"] = d.max_comp_deg;
    json comps = json::array();
    for (const auto& [bd, comp] : d.components) {
        json c;
        c["bidegree"] = {bd.sub_deg, bd.comp_deg};
        c["paper_style"] = {bd.comp_deg, bd.sub_deg};
        c["term_count"] = comp.term_count();
        c["subgroup_scalar"] = is_subgroup_scalar(chain_alg, d.sub_dim, comp);
        c["contracted_invariant"] = (bd.comp_deg == d.max_comp_deg);
        c["poly"] = poly_to_json(comp);
        comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    return j;
}

json certificate_to_json(const JacobianCertificate& c) {
    json j;
    j["independent"] = c.independent;
    j["seed"] = c.seed;
    j["retries_used"] = c.retries_used;
    if (c.independent) {
        j["variable_subset"] = c.variable_subset;
        json pt = json::array();
        for (const auto& v : c.point) pt.push_back(v.str());
        j["point"] = std::move(pt);
        j["minor_value"] = c.minor_value.str();
    }
    return j;
}

namespace {

const char* verdict_name(CommutationVerdict v) {
    switch (v) {
        case CommutationVerdict::ExactZero: return "exact-pass";
        case CommutationVerdict::ExactViaSubalgebra: return "exact-pass (subalgebra generators)";
        case CommutationVerdict::ExactCentral: return "exact-pass (central)";
        case CommutationVerdict::PoissonOnly: return "poisson-only (necessary, not sufficient)";
        case CommutationVerdict::PoissonFail: return "poisson-fail";
        case CommutationVerdict::ExactFail: return "exact-fail";
    }
    return "unknown";
}

}  // namespace

json mlp_report_to_json(const MLPReport& r) {
    json j;
    j["format_version"] = kFormatVersion;
    j["tool_version"] = kToolVersion;
    j["seed"] = r.seed;
    j["exact_commutators"] = r.exact;
    j["counts"] = counts_to_json(r.counts);
    j["contracted_invariant_count"] = r.n_contracted;
    json cas = json::array();
    for (const auto& [id, p] : r.casimirs)
        cas.push_back({{"id", id}, {"degree", p.total_degree()}, {"terms", p.term_count()}});
    j["casimirs"] = std::move(cas);
    json sub = json::array();
    for (const auto& [id, p] : r.sub_casimirs)
        sub.push_back({{"id", id}, {"degree", p.total_degree()}, {"terms", p.term_count()}});
    j["subalgebra_casimirs"] = std::move(sub);
    json cands = json::array();
    for (const auto& c : r.candidates) {
        cands.push_back({{"id", c.id},
                         {"source", c.source},
                         {"bidegree", {c.bidegree.sub_deg, c.bidegree.comp_deg}},
                         {"paper_style", {c.bidegree.comp_deg, c.bidegree.sub_deg}},
                         {"term_count", c.term_count},
                         {"subgroup_scalar", c.subgroup_scalar},
                         {"selectable", c.selectable}});
    }
    j["candidates"] = std::move(cands);
    j["selected"] = r.selected;
    j["alternatives"] = r.alternatives;
    j["independence"] = certificate_to_json(r.independence);
    json comm = json::array();
    for (const auto& e : r.commutation) {
        json entry = {{"left", e.left}, {"right", e.right}, {"verdict", verdict_name(e.verdict)}};
        if (e.commutator_terms > 0) entry["commutator_terms"] = e.commutator_terms;
        comm.push_back(std::move(entry));
    }
    j["commutation"] = std::move(comm);
    j["final_set"] = r.final_set;
    j["notes"] = r.notes;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write file: " + path);
    out << content;
}

json load_json(const std::string& path) {
    std::string content = read_file(path);
    try {
        return json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("parse error in " + path + " at byte " + std::to_string(e.byte) + ": " +
                          e.what());
    }
}

void save_json(const std::string& path, const json& j) { write_file(path, j.dump(2) + "\n"); }

std::string fnv1a_digest(const std::string& content) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : content) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace casilab::io
