#pragma once

#include <optional>
#include <string>
#include <vector>

#include "casilab/algebra.hpp"
#include "casilab/contraction.hpp"
#include "casilab/enveloping.hpp"
#include "casilab/invariants.hpp"

namespace casilab {

/// Witness of functional independence: a variable subset and a rational
/// point at which the corresponding Jacobian minor is nonzero.
struct JacobianCertificate {
    bool independent = false;
    std::vector<uint32_t> variable_subset;
    std::vector<Scalar> point;
    Scalar minor_value;
    uint64_t seed = 0;
    uint32_t retries_used = 0;
};

/// Searches (deterministically, seeded) for a nonzero Jacobian minor of
/// the family at a random integer point. Failure after all retries means
/// "dependent (probabilistic)".
JacobianCertificate jacobian_independent(const std::vector<Poly>& polys, uint32_t nvars,
                                         uint64_t seed, uint32_t retries = 5, long bound = 100);

/// One labelling-operator candidate: a bi-homogeneous component of a
/// decomposed Casimir.
struct Candidate {
    std::string id;          // e.g. "C6(4,2)" (paper-style subscripts)
    std::string source;      // originating Casimir id
    BiDegree bidegree;       // (sub_deg, comp_deg)
    Poly component;
    size_t term_count = 0;
    bool subgroup_scalar = false;
    bool selectable = false;  // comp_deg > 0 and total degree >= 3
};

enum class CommutationVerdict {
    ExactZero,          // full enveloping-algebra commutator vanished
    ExactViaSubalgebra, // operator commutes with every subalgebra generator
    ExactCentral,       // operator commutes with every algebra generator
    PoissonOnly,        // necessary test only (exact commutators disabled)
    PoissonFail,
    ExactFail,
};

struct CommutationEntry {
    std::string left, right;
    CommutationVerdict verdict;
    size_t commutator_terms = 0;  // nonzero only for failing exact pairs
};

struct MLPOptions {
    uint64_t seed = 0;
    uint32_t max_degree = 4;         // subalgebra Casimir search depth
    bool exact_commutators = true;
    unsigned threads = 1;
    uint32_t count_retries = 5;
    UEOptions ue;
};

struct MLPReport {
    MLPCounts counts;
    uint32_t n_contracted = 0;  // invariant count of the contracted algebra
    std::vector<std::pair<std::string, Poly>> casimirs;      // of s, chain basis
    std::vector<std::pair<std::string, Poly>> sub_casimirs;  // of s'
    std::vector<Candidate> candidates;
    std::vector<std::string> selected;                 // candidate ids, tie-break order
    std::vector<std::vector<std::string>> alternatives;
    JacobianCertificate independence;                  // for the full final family
    std::vector<CommutationEntry> commutation;
    std::vector<std::string> final_set;
    std::vector<std::string> notes;
    uint64_t seed = 0;
    bool exact = true;
};

/// The three-step procedure: decompose the Casimirs of degree >= 3,
/// certify commutators of the symmetrized components, and extract
/// `needed` operators functionally independent of the Casimirs of the
/// algebra and the subalgebra.
MLPReport mlp_solve(const LieAlgebra& alg, const ChainSpec& chain,
                    const std::map<uint32_t, Poly>& casimirs_original_basis,
                    const MLPOptions& opts);

/// Greedy independent-candidate selection in tie-break order (ascending
/// total degree, then complement degree, then leading monomial), gated by
/// Jacobian independence against the Casimirs and prior picks.
std::vector<const Candidate*> select_candidates(const std::vector<Candidate>& candidates,
                                                uint32_t needed,
                                                const std::vector<Poly>& casimir_context,
                                                uint32_t nvars, uint64_t seed);

}  // namespace casilab
