#pragma once

#include "fusion_ring.hpp"
#include "modular.hpp"
#include "quiver.hpp"

#include <optional>
#include <vector>

namespace pathact {

// Classification data of a based action: an ordered partition of the vertices
// into rank-sized groups, a bijection psi_k from each group to the simples, and
// for every ordered group pair (i, j) the multiplicity vector of Z_ij.
struct ActionWitness {
    std::vector<std::vector<int>> partition;       // ascending inside, groups by min vertex
    std::vector<std::vector<int>> bijections;      // bijections[k][a] = simple of partition[k][a]
    std::vector<std::vector<std::vector<long>>> Z; // Z[i][j] over simples
};

enum class DecompCount { Zero, One, Infinite };

struct OracleViolation {
    int step = 0;
    int row = 0;
    int col = 0;
    Rational value;
};

struct OracleReport {
    bool survived = false;  // all K iterates were nonnegative integer matrices
    bool certified = false; // exact eigenprojection proves survival for every k
    int steps_checked = 0;
    std::optional<OracleViolation> first_violation;
};

// M = sum_X n[X] F_X with nonnegative integer n, if possible. The candidate is
// read off M's unit column and then verified globally, so a returned vector is
// the unique decomposition.
std::optional<std::vector<long>> decompose_over_basis(const IntMat &M, const FusionRing &ring);

struct ClassifyOptions {
    bool parallel = true;
    bool dim_prune = true; // quantum-dimension eigen-test on candidate blocks (PSU(2) rings)
};

// Complete enumeration of valid witnesses in canonical order. Empty when the
// vertex count is not a multiple of the rank.
std::vector<ActionWitness> classify(const Quiver &q, const FusionRing &ring,
                                    const ClassifyOptions &opts = {});

// Exact integer check of the witness validity invariant; throws on a witness
// that is not structurally well-formed for q and ring.
bool check_witness(const Quiver &q, const FusionRing &ring, const ActionWitness &w);

// Conjugates the adjacency by the block-diagonal matrix with psi-permuted F_X
// per consecutive rank-sized vertex group, iterating k = 1..K over exact
// rationals. Survival for all k is certified by projecting every block onto
// the Kronecker eigenbasis and checking that all non-unit components vanish.
OracleReport conjugation_oracle(const Quiver &q, const FusionRing &ring, int X,
                                const std::vector<std::vector<int>> &psi, int K);

// Projects each psi-relabeled block onto the eigenvalue-1 eigenspace of
// T_{X_2} via exact S-matrix arithmetic: zero residual plus nonnegative
// integer coefficients. Equivalent to a per-block witness check, but computed
// through the spectral route.
bool spectral_oracle(const Quiver &q, const FusionRing &ring,
                     const std::vector<std::vector<int>> &psi);
bool spectral_oracle(const IntMat &adj, const ModularData &md,
                     const std::vector<std::vector<int>> &psi,
                     std::vector<std::vector<std::vector<Rational>>> *coeffs_out = nullptr);

// Decomposition count of a generated-quiver matrix over the fusion-matrix
// basis with coefficients in N ∪ {inf}; blocks are consecutive rank-sized
// vertex groups.
DecompCount count_decompositions(const TildeMatrix &tm, const FusionRing &ring, int module_shape);

// Base-space dimension matrix of the bimodule F(X) attached to a witness:
// within each group, entry (v, w) = N_{X, psi(v)}^{psi(w)}; zero across groups.
IntMat based_space_dims(const ActionWitness &w, const FusionRing &ring, int X);

// Helper shared by renderers: identity bijections for consecutive groups.
std::vector<std::vector<int>> identity_bijections(int groups, int rank);

} // namespace pathact
