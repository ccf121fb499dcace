// casilab: exact computational engine for Casimir invariants, reduction
// chains, Inonu-Wigner contractions and missing-label operators.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "casilab/builtins.hpp"
#include "casilab/contraction.hpp"
#include "casilab/enveloping.hpp"
#include "casilab/invariants.hpp"
#include "casilab/io.hpp"
#include "casilab/mlp.hpp"

using namespace casilab;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitInput = 2;

struct NamedAlgebra {
    LieAlgebra alg;
    std::string digest;
};

bool is_builtin(const std::string& path) { return path.rfind("builtin:", 0) == 0; }

NamedAlgebra resolve_algebra(const std::string& path) {
    if (is_builtin(path)) {
        std::string key = path.substr(8);
        LieAlgebra alg;
        if (key == "sp6")
            alg = build_sp6();
        else if (key == "su22")
            alg = build_su22();
        else if (key == "su2")
            alg = build_su2();
        else
            throw parse_error("unknown builtin algebra \"" + key +
                              "\" (available: sp6, su22, su2)");
        return {alg, io::fnv1a_digest(io::algebra_to_json(alg).dump())};
    }
    std::string content = io::read_file(path);
    json j;
    try {
        j = json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("parse error in " + path + " at byte " + std::to_string(e.byte) + ": " +
                          e.what());
    }
    return {io::algebra_from_json(j), io::fnv1a_digest(content)};
}

ChainSpec resolve_chain(const std::string& path) {
    if (is_builtin(path)) {
        std::string key = path.substr(8);
        if (key == "sp6_unitary") return sp6_unitary_chain();
        if (key == "su22_cartan") return su22_cartan_chain();
        throw parse_error("unknown builtin chain \"" + key +
                          "\" (available: sp6_unitary, su22_cartan)");
    }
    return io::chain_from_json(io::load_json(path));
}

MatrixTemplate resolve_template(const std::string& path) {
    if (is_builtin(path)) {
        std::string key = path.substr(8);
        if (key == "sp6_charpoly") return sp6_charpoly_template();
        if (key == "su22_charpoly") return su22_charpoly_template();
        throw parse_error("unknown builtin template \"" + key +
                          "\" (available: sp6_charpoly, su22_charpoly)");
    }
    return io::template_from_json(io::load_json(path));
}

// The default template and coefficient degrees for a known algebra.
std::optional<std::pair<MatrixTemplate, std::vector<uint32_t>>> default_template(
    const LieAlgebra& alg) {
    if (alg.name() == "sp6" && alg.dim() == 21)
        return {{sp6_charpoly_template(), sp6_casimir_degrees()}};
    if (alg.name() == "su22" && alg.dim() == 15)
        return {{su22_charpoly_template(), su22_casimir_degrees()}};
    return std::nullopt;
}

std::vector<uint32_t> template_degrees(const MatrixTemplate& t) {
    std::vector<uint32_t> degrees;
    for (uint32_t d = 1; d <= t.size; ++d) degrees.push_back(d);
    return degrees;
}

// Charpoly coefficients that exist and are nonzero, keyed by degree.
std::map<uint32_t, Poly> casimirs_from_template(const MatrixTemplate& tmpl,
                                                const std::vector<uint32_t>& degrees) {
    std::map<uint32_t, Poly> out;
    for (uint32_t d : degrees) {
        try {
            auto res = charpoly_invariants(tmpl, {d});
            out.insert(res.invariants.begin(), res.invariants.end());
        } catch (const domain_error&) {
            // missing coefficient: fine when scanning all degrees
        }
    }
    return out;
}

void emit(const json& j, const std::string& out_path, bool human, const std::string& summary) {
    if (!out_path.empty()) {
        io::save_json(out_path, j);
        if (human && !summary.empty()) std::cout << summary;
    } else if (human && !summary.empty()) {
        std::cout << summary;
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lie-algebra invariants, contractions and missing-label operators"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", io::kToolVersion);

    std::string format = "structured";
    app.add_option("--format", format, "output format: human | structured")
        ->check(CLI::IsMember({"human", "structured"}));

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "exact Jacobi check of an algebra file");
    std::string validate_path;
    cmd_validate->add_option("algebra", validate_path)->required();

    // invariants
    auto* cmd_inv = app.add_subcommand("invariants", "compute Casimir invariants");
    std::string inv_path, inv_method = "charpoly", inv_template, inv_out = "invariant";
    uint32_t inv_degree = 2;
    cmd_inv->add_option("algebra", inv_path)->required();
    cmd_inv->add_option("--method", inv_method)->check(CLI::IsMember({"charpoly", "pde"}));
    cmd_inv->add_option("--degree", inv_degree, "degree for the pde method");
    cmd_inv->add_option("--template", inv_template, "matrix template file or builtin:...");
    cmd_inv->add_option("--out", inv_out, "output file prefix");

    // counts
    auto* cmd_counts = app.add_subcommand("counts", "missing-label counting formulas");
    std::string counts_path, counts_chain, counts_dims, counts_lprime_from;
    std::optional<uint64_t> counts_seed;
    cmd_counts->add_option("algebra", counts_path);
    cmd_counts->add_option("--chain", counts_chain);
    cmd_counts->add_option("--dims", counts_dims,
                           "pure arithmetic mode: dim_s,N_s,dim_h,N_h,lprime");
    cmd_counts->add_option("--lprime-from", counts_lprime_from,
                           "comma-separated invariant polynomial files");
    cmd_counts->add_option("--seed", counts_seed, "seed for the rank sampling");

    // contract
    auto* cmd_contract = app.add_subcommand("contract", "Inonu-Wigner contraction of a chain");
    std::string contract_path, contract_chain, contract_out;
    cmd_contract->add_option("algebra", contract_path)->required();
    cmd_contract->add_option("--chain", contract_chain)->required();
    cmd_contract->add_option("--out", contract_out, "output algebra file");

    // decompose
    auto* cmd_dec = app.add_subcommand("decompose", "bi-degree decomposition of a Casimir");
    std::string dec_path, dec_chain, dec_casimir, dec_out;
    cmd_dec->add_option("algebra", dec_path)->required();
    cmd_dec->add_option("--chain", dec_chain)->required();
    cmd_dec->add_option("--casimir", dec_casimir,
                        "polynomial file in the original basis, or builtin:<alg>:C<d>")
        ->required();
    cmd_dec->add_option("--out", dec_out, "report file; component files use this prefix");

    // mlp
    auto* cmd_mlp = app.add_subcommand("mlp", "full missing-label pipeline");
    std::string mlp_path, mlp_chain, mlp_source = "charpoly", mlp_template, mlp_files,
                mlp_out;
    uint64_t mlp_seed = 0;
    bool mlp_seed_set = false, mlp_poisson_only = false;
    uint32_t mlp_max_degree = 4;
    unsigned mlp_threads = 1;
    uint32_t mlp_pde_degree = 4;
    size_t mlp_term_cap = 5000000;
    cmd_mlp->add_option("algebra", mlp_path)->required();
    cmd_mlp->add_option("--chain", mlp_chain)->required();
    cmd_mlp->add_option("--source", mlp_source)
        ->check(CLI::IsMember({"charpoly", "pde", "files"}));
    cmd_mlp->add_option("--template", mlp_template);
    cmd_mlp->add_option("--casimir-files", mlp_files, "comma-separated polynomial files");
    cmd_mlp->add_option("--pde-max-degree", mlp_pde_degree);
    cmd_mlp->add_option("--seed", mlp_seed)->required()->each([&](const std::string&) {
        mlp_seed_set = true;
    });
    cmd_mlp->add_flag("--poisson-only", mlp_poisson_only,
                      "skip exact commutators; verdicts are necessary-only");
    cmd_mlp->add_option("--max-degree", mlp_max_degree, "subalgebra invariant search depth");
    cmd_mlp->add_option("--threads", mlp_threads);
    cmd_mlp->add_option("--term-cap", mlp_term_cap,
                        "ceiling on cached straightening terms");
    cmd_mlp->add_option("--out", mlp_out, "report file");

    // commute
    auto* cmd_comm = app.add_subcommand("commute", "exact enveloping-algebra commutator");
    std::string comm_a, comm_b, comm_alg, comm_out;
    unsigned comm_threads = 1;
    size_t comm_term_cap = 5000000;
    cmd_comm->add_option("a", comm_a)->required();
    cmd_comm->add_option("b", comm_b)->required();
    cmd_comm->add_option("--algebra", comm_alg)->required();
    cmd_comm->add_option("--threads", comm_threads);
    cmd_comm->add_option("--term-cap", comm_term_cap,
                         "ceiling on cached straightening terms");
    cmd_comm->add_option("--out", comm_out, "write the commutator element to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    bool human = format == "human";
    try {
        if (*cmd_validate) {
            NamedAlgebra na = resolve_algebra(validate_path);
            JacobiReport rep = validate_jacobi(na.alg);
            json j = io::jacobi_report_to_json(rep);
            j["algebra"] = na.alg.name();
            j["digest"] = na.digest;
            std::ostringstream os;
            os << "jacobi check for " << na.alg.name() << ": "
               << (rep.pass ? "pass" : "FAIL (" + std::to_string(rep.violations.size()) +
                                           " violating triples)")
               << "\n";
            emit(j, "", human, os.str());
            return rep.pass ? kExitOk : kExitMath;
        }

        if (*cmd_inv) {
            NamedAlgebra na = resolve_algebra(inv_path);
            std::map<uint32_t, Poly> invariants;
            if (inv_method == "charpoly") {
                MatrixTemplate tmpl;
                std::vector<uint32_t> degrees;
                if (!inv_template.empty()) {
                    tmpl = resolve_template(inv_template);
                    degrees = template_degrees(tmpl);
                } else if (auto d = default_template(na.alg)) {
                    tmpl = d->first;
                    degrees = d->second;
                } else {
                    throw parse_error("no default template for this algebra; pass --template");
                }
                if (tmpl.dim != na.alg.dim())
                    throw parse_error("template dimension does not match the algebra");
                invariants = casimirs_from_template(tmpl, degrees);
            } else {
                for (const Poly& p : solve_invariants_degree(na.alg, inv_degree)) {
                    uint32_t d = p.total_degree();
                    while (invariants.count(d)) ++d;  // distinct keys per basis element
                    invariants.emplace(d, p);
                }
                if (invariants.empty()) {
                    std::cerr << "no invariants at degree " << inv_degree << "\n";
                    return kExitMath;
                }
            }
            json index = json::array();
            int file_no = 0;
            for (const auto& [d, p] : invariants) {
                bool ok = is_invariant(na.alg, p);
                std::string fname = inv_out + "_" + std::to_string(file_no++) + ".poly.json";
                io::save_json(fname, io::poly_to_json(p));
                index.push_back({{"degree", p.total_degree()},
                                 {"file", fname},
                                 {"terms", p.term_count()},
                                 {"verified_invariant", ok},
                                 {"real", p.imag_part().is_zero()}});
                if (human)
                    std::cout << "degree " << p.total_degree() << " (" << p.term_count()
                              << " terms) -> " << fname << (ok ? "" : "  NOT INVARIANT") << "\n";
            }
            json j;
            j["format_version"] = io::kFormatVersion;
            j["algebra"] = na.alg.name();
            j["digest"] = na.digest;
            j["method"] = inv_method;
            j["invariants"] = std::move(index);
            if (!human) std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (*cmd_counts) {
            MLPCounts counts;
            json j;
            if (!counts_dims.empty()) {
                std::vector<uint32_t> v;
                std::stringstream ss(counts_dims);
                std::string tok;
                while (std::getline(ss, tok, ',')) v.push_back(std::stoul(tok));
                if (v.size() != 5)
                    throw parse_error("--dims expects dim_s,N_s,dim_h,N_h,lprime");
                counts = mlp_counts(v[0], v[1], v[2], v[3], v[4]);
            } else {
                if (counts_path.empty() || counts_chain.empty())
                    throw parse_error("counts needs an algebra and --chain (or --dims)");
                if (!counts_seed)
                    throw parse_error("--seed is required for the rank sampling mode");
                NamedAlgebra na = resolve_algebra(counts_path);
                ChainSpec chain = resolve_chain(counts_chain);
                ChainReport rep = check_chain(na.alg, chain);
                if (!rep.pass) throw domain_error("invalid chain: " + rep.violation);
                LieAlgebra cb = chain_basis_algebra(na.alg, chain);
                LieAlgebra sub = leading_subalgebra(cb, chain.sub_dim);
                uint32_t n_s = count_invariants(cb, *counts_seed);
                uint32_t n_h = count_invariants(sub, *counts_seed);
                uint32_t lp = 0;
                if (!counts_lprime_from.empty()) {
                    std::vector<Poly> invs;
                    std::stringstream ss(counts_lprime_from);
                    std::string tok;
                    while (std::getline(ss, tok, ','))
                        invs.push_back(io::poly_from_json(io::load_json(tok)));
                    lp = compute_lprime(invs, chain.sub_dim);
                }
                counts = mlp_counts(cb.dim(), n_s, chain.sub_dim, n_h, lp);
                j["algebra"] = na.alg.name();
                j["seed"] = *counts_seed;
            }
            json cj = io::counts_to_json(counts);
            for (auto& [k, v] : cj.items()) j[k] = v;
            std::ostringstream os;
            os << "n = " << counts.needed << ", m = " << counts.available
               << ", total solutions = " << counts.total_solutions << "\n";
            emit(j, "", human, os.str());
            return kExitOk;
        }

        if (*cmd_contract) {
            NamedAlgebra na = resolve_algebra(contract_path);
            ChainSpec chain = resolve_chain(contract_chain);
            LieAlgebra contracted = contract(na.alg, chain);
            json j = io::algebra_to_json(contracted);
            std::ostringstream os;
            os << "contracted algebra " << contracted.name() << " (dim " << contracted.dim()
               << ")";
            if (!contract_out.empty()) os << " -> " << contract_out;
            os << "\n";
            emit(j, contract_out, human, os.str());
            return kExitOk;
        }

        if (*cmd_dec) {
            NamedAlgebra na = resolve_algebra(dec_path);
            ChainSpec chain = resolve_chain(dec_chain);
            ChainReport rep = check_chain(na.alg, chain);
            if (!rep.pass) throw domain_error("invalid chain: " + rep.violation);
            LieAlgebra cb = chain_basis_algebra(na.alg, chain);

            Poly p;
            std::string source_id = dec_casimir;
            if (is_builtin(dec_casimir)) {
                // builtin:<alg>:C<degree>
                std::string rest = dec_casimir.substr(8);
                auto colon = rest.find(':');
                if (colon == std::string::npos || rest[colon + 1] != 'C')
                    throw parse_error("builtin casimir syntax: builtin:<algebra>:C<degree>");
                uint32_t degree = std::stoul(rest.substr(colon + 2));
                NamedAlgebra base = resolve_algebra("builtin:" + rest.substr(0, colon));
                auto d = default_template(base.alg);
                if (!d) throw parse_error("no builtin template for " + rest.substr(0, colon));
                auto res = charpoly_invariants(d->first, {degree});
                p = res.invariants.at(degree);
                source_id = "C" + std::to_string(degree);
            } else {
                p = io::poly_from_json(io::load_json(dec_casimir));
            }
            // The input polynomial lives in the original basis; move it to
            // the chain basis before splitting.
            if (chain.basis_change) {
                auto inv = chain.basis_change->inverse();
                std::vector<std::vector<Scalar>> rows(cb.dim(),
                                                      std::vector<Scalar>(cb.dim()));
                for (uint32_t r = 0; r < cb.dim(); ++r)
                    for (uint32_t c = 0; c < cb.dim(); ++c) rows[r][c] = inv->at(r, c);
                p = p.substitute_linear(rows);
            }
            Decomposition dec = decompose_casimir(cb, chain.sub_dim, p);
            json j = io::decomposition_to_json(dec, cb, source_id);
            std::ostringstream os;
            os << source_id << " splits into " << dec.components.size()
               << " bi-homogeneous components, M = " << dec.max_comp_deg << "\n";
            for (const auto& [bd, comp] : dec.components)
                os << "  (sub " << bd.sub_deg << ", comp " << bd.comp_deg << ")  paper-style ("
                   << bd.comp_deg << "," << bd.sub_deg << ")  " << comp.term_count()
                   << " terms\n";
            if (!dec_out.empty()) {
                int idx = 0;
                for (const auto& [bd, comp] : dec.components) {
                    std::string fname = dec_out + ".component" + std::to_string(idx++) +
                                        ".poly.json";
                    io::save_json(fname, io::poly_to_json(comp));
                }
            }
            emit(j, dec_out, human, os.str());
            return kExitOk;
        }

        if (*cmd_mlp) {
            NamedAlgebra na = resolve_algebra(mlp_path);
            ChainSpec chain = resolve_chain(mlp_chain);
            std::map<uint32_t, Poly> casimirs;
            if (mlp_source == "charpoly") {
                MatrixTemplate tmpl;
                std::vector<uint32_t> degrees;
                if (!mlp_template.empty()) {
                    tmpl = resolve_template(mlp_template);
                    degrees = template_degrees(tmpl);
                } else if (auto d = default_template(na.alg)) {
                    tmpl = d->first;
                    degrees = d->second;
                } else {
                    throw parse_error("no default template for this algebra; pass --template");
                }
                casimirs = casimirs_from_template(tmpl, degrees);
            } else if (mlp_source == "files") {
                if (mlp_files.empty()) throw parse_error("--casimir-files is required");
                std::stringstream ss(mlp_files);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    Poly p = io::poly_from_json(io::load_json(tok));
                    uint32_t d = p.total_degree();
                    while (casimirs.count(d)) ++d;
                    casimirs.emplace(d, std::move(p));
                }
            } else {  // pde
                for (uint32_t d = 1; d <= mlp_pde_degree; ++d)
                    for (const Poly& p : solve_invariants_degree(na.alg, d)) {
                        uint32_t key = p.total_degree();
                        while (casimirs.count(key)) ++key;
                        casimirs.emplace(key, p);
                    }
            }
            MLPOptions opts;
            opts.seed = mlp_seed;
            opts.exact_commutators = !mlp_poisson_only;
            opts.max_degree = mlp_max_degree;
            opts.threads = mlp_threads;
            opts.ue.term_ceiling = mlp_term_cap;
            MLPReport rep = mlp_solve(na.alg, chain, casimirs, opts);
            json j = io::mlp_report_to_json(rep);
            j["input_digest"] = na.digest;
            std::ostringstream os;
            os << "n = " << rep.counts.needed << "; final commuting set:";
            for (const auto& id : rep.final_set) os << " " << id;
            os << "\n";
            if (!rep.exact) os << "(poisson-only verdicts: necessary, not sufficient)\n";
            emit(j, mlp_out, human, os.str());
            return kExitOk;
        }

        if (*cmd_comm) {
            NamedAlgebra na = resolve_algebra(comm_alg);
            UEElement a = io::ue_from_json(io::load_json(comm_a));
            UEElement b = io::ue_from_json(io::load_json(comm_b));
            UEOptions uopts;
            uopts.term_ceiling = comm_term_cap;
            UEElement comm = parallel_commutator(na.alg, a, b, comm_threads, uopts);
            if (comm.is_zero()) {
                std::cout << "ZERO\n";
            } else if (!comm_out.empty()) {
                io::save_json(comm_out, io::ue_to_json(comm));
                std::cout << comm.term_count() << " terms -> " << comm_out << "\n";
            } else {
                std::cout << io::ue_to_json(comm).dump(2) << "\n";
            }
            return kExitOk;
        }
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitMath;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
