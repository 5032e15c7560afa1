#pragma once

#include "cyclo.hpp"
#include "fusion_ring.hpp"

namespace pathact {

// S entry recorded as sign * dims[index]; every PSU(2)_{p-2} S entry has this form.
struct SignedDim {
    int sign = 1;
    int index = 0;
};

// Unnormalized S-matrix and quantum dimensions of PSU(2)_{p-2}.
// S(j,k) = [(2j+1)(2k+1)]_q, dims[j] = [2j+1]_q, all exact.
struct ModularData {
    int p = 0;
    int rank = 0;
    std::vector<CycloReal> dims;
    std::vector<CycloReal> dim_inverses;
    Mat<CycloReal> S;
    Mat<SignedDim> pattern;

    // Sum of squared dimensions; S^T S = gram * I, so S^{-1} = S / gram.
    CycloReal gram() const;
    std::vector<CycloReal> column(int j) const;
};

ModularData smatrix(int p);

struct KronPair {
    int i = 0;
    int j = 0;
    CycloReal lambda; // (S_{X,i}/d_i) * (S_{X,j}/d_j)^{-1}
};

// Spectral data of the conjugation operator T_X : M -> F_X^{-1} M F_X.
// Columns of S are the eigenvectors of F_X; Kronecker pairs S_i (x) S_j carry
// eigenvalue lambda_i / lambda_j.
struct EigenSystem {
    int object = 0;
    std::vector<CycloReal> eigenvalues; // lambda_j = S(X,j)/d_j
    std::vector<KronPair> kron;         // rank^2 pairs in row-major (i, j) order

    const CycloReal &kron_lambda(int i, int j) const;
};

// Builds and exactly verifies the full eigensystem (throws on any residual).
EigenSystem conj_eigensystem(const ModularData &md, int X, bool allow_unit = false);

// F_X * S == S * diag(S(X,j)/d_j) for every simple X, checked exactly,
// together with exact column orthogonality (which makes S invertible).
bool verlinde_check(const FusionRing &ring, const ModularData &md);

// No Kronecker eigenvalue of T_{X_2} equals -1.
bool prop_no_minus_one(const ModularData &md);
// Kronecker eigenvalues of T_{X_2} with |lambda| != 1 have pairwise distinct
// magnitudes (compared exactly via signs of squares).
bool prop_distinct_magnitudes(const ModularData &md);
// Every non-unit S column has a strictly positive and a strictly negative entry,
// and consequently every Kronecker eigenvector S_i (x) S_j with (i,j) != (0,0)
// has mixed signs.
bool prop_mixed_signs(const ModularData &md);
// The absolute-value pattern of every row and column of S is a permutation of dims.
bool cor_pm_d_once(const ModularData &md);

bool prop_no_minus_one(int p);
bool prop_distinct_magnitudes(int p);
bool prop_mixed_signs(int p);
bool cor_pm_d_once(int p);

// Number of Kronecker eigenvalues of T_X exactly equal to 1.
int eig1_multiplicity(const EigenSystem &es);

// The eigenvalue-1 eigenspace of T_{X_2} (spanned by the rank-1 projectors
// S_j S_j^T) coincides with the span of the fusion matrices: established
// exactly via the diagonalization residuals, orthogonality, and the
// independence of both spanning families.
bool eig1_span_equals_fusion_span(const FusionRing &ring, const ModularData &md);

// Exact eigen-residual F_X S_col(j) - lambda_j S_col(j) == 0 for all X, j.
bool eigen_residuals_zero(const FusionRing &ring, const ModularData &md);

} // namespace pathact
