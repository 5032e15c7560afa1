#include "modular.hpp"

#include <algorithm>

namespace pathact {

CycloReal ModularData::gram() const {
    CycloReal g = CycloReal::zero(p);
    for (const auto &d : dims)
        g += d * d;
    return g;
}

std::vector<CycloReal> ModularData::column(int j) const {
    std::vector<CycloReal> col;
    col.reserve(rank);
    for (int i = 0; i < rank; ++i)
        col.push_back(S(i, j));
    return col;
}

ModularData smatrix(int p) {
    if (p < 5 || !is_prime(p))
        throw std::domain_error("p must be an odd prime >= 5, got " + std::to_string(p));
    ModularData md;
    md.p = p;
    md.rank = (p - 1) / 2;
    md.dims.reserve(md.rank);
    for (int j = 0; j < md.rank; ++j)
        md.dims.push_back(quantum_integer(2 * j + 1, p));
    md.dim_inverses.reserve(md.rank);
    for (int j = 0; j < md.rank; ++j)
        md.dim_inverses.push_back(md.dims[j].inverse());
    md.S = Mat<CycloReal>(md.rank, md.rank, CycloReal::zero(p));
    md.pattern = Mat<SignedDim>(md.rank, md.rank);
    for (int j = 0; j < md.rank; ++j)
        for (int k = 0; k < md.rank; ++k) {
            // residue (2j+1)(2k+1) mod 2p is odd and lands in [1, p-2] or [p+2, 2p-1]
            const long r = (static_cast<long>(2 * j + 1) * (2 * k + 1)) % (2 * p);
            SignedDim sd;
            if (r <= p - 2) {
                sd.sign = 1;
                sd.index = static_cast<int>((r - 1) / 2);
            } else {
                sd.sign = -1;
                sd.index = static_cast<int>((2 * p - r - 1) / 2);
            }
            md.pattern(j, k) = sd;
            md.S(j, k) = (sd.sign > 0) ? md.dims[sd.index] : -md.dims[sd.index];
        }
    return md;
}

const CycloReal &EigenSystem::kron_lambda(int i, int j) const {
    const int rank = static_cast<int>(eigenvalues.size());
    return kron.at(static_cast<size_t>(i) * rank + j).lambda;
}

EigenSystem conj_eigensystem(const ModularData &md, int X, bool allow_unit) {
    if (X < 0 || X >= md.rank)
        throw std::out_of_range("simple index out of range");
    if (X == 0 && !allow_unit)
        throw std::domain_error("conjugation by the unit object is the identity operator");
    EigenSystem es;
    es.object = X;
    es.eigenvalues.reserve(md.rank);
    for (int j = 0; j < md.rank; ++j)
        es.eigenvalues.push_back(md.S(X, j) * md.dim_inverses[j]);

    // Exact residual check F_X S_col(j) = lambda_j S_col(j). Together with the
    // ratio identity below this verifies T_X(S_i (x) S_j) = (lambda_i/lambda_j)
    // S_i (x) S_j for every Kronecker pair.
    const FusionRing ring = FusionRing::psu2(md.p);
    const IntMat f = ring.fusion_matrix(X);
    for (int j = 0; j < md.rank; ++j) {
        for (int m = 0; m < md.rank; ++m) {
            CycloReal acc = CycloReal::zero(md.p);
            for (int l = 0; l < md.rank; ++l)
                if (f(m, l) != 0)
                    acc += md.S(l, j) * Rational(f(m, l));
            if (acc != es.eigenvalues[j] * md.S(m, j))
                throw std::runtime_error("eigen residual is nonzero (internal failure)");
        }
    }

    std::vector<CycloReal> inv;
    inv.reserve(md.rank);
    for (int j = 0; j < md.rank; ++j)
        inv.push_back(es.eigenvalues[j].inverse());
    es.kron.reserve(static_cast<size_t>(md.rank) * md.rank);
    for (int i = 0; i < md.rank; ++i)
        for (int j = 0; j < md.rank; ++j) {
            KronPair kp;
            kp.i = i;
            kp.j = j;
            kp.lambda = es.eigenvalues[i] * inv[j];
            if (kp.lambda * es.eigenvalues[j] != es.eigenvalues[i])
                throw std::runtime_error("Kronecker eigenvalue ratio failed (internal failure)");
            es.kron.push_back(std::move(kp));
        }
    return es;
}

bool eigen_residuals_zero(const FusionRing &ring, const ModularData &md) {
    for (int X = 0; X < md.rank; ++X) {
        const IntMat f = ring.fusion_matrix(X);
        for (int j = 0; j < md.rank; ++j) {
            const CycloReal lambda = md.S(X, j) * md.dim_inverses[j];
            for (int m = 0; m < md.rank; ++m) {
                CycloReal acc = CycloReal::zero(md.p);
                for (int l = 0; l < md.rank; ++l)
                    if (f(m, l) != 0)
                        acc += md.S(l, j) * Rational(f(m, l));
                if (acc != lambda * md.S(m, j))
                    return false;
            }
        }
    }
    return true;
}

bool verlinde_check(const FusionRing &ring, const ModularData &md) {
    if (ring.psu2_p() != md.p || ring.rank() != md.rank)
        throw std::invalid_argument("ring does not match the modular data");
    const CycloReal gram = md.gram();
    if (gram.is_zero())
        throw std::runtime_error("singular S-matrix (internal failure)");
    // Orthogonality S^T S = gram * I, exact; then S^{-1} F_X S = diag(lambda)
    // is equivalent to the column residuals.
    for (int i = 0; i < md.rank; ++i)
        for (int j = i; j < md.rank; ++j) {
            CycloReal dot = CycloReal::zero(md.p);
            for (int k = 0; k < md.rank; ++k)
                dot += md.S(k, i) * md.S(k, j);
            if (i == j ? (dot != gram) : !dot.is_zero())
                return false;
        }
    return eigen_residuals_zero(ring, md);
}

bool prop_no_minus_one(const ModularData &md) {
    const EigenSystem es = conj_eigensystem(md, 1);
    const CycloReal one = CycloReal::one(md.p);
    for (const auto &kp : es.kron)
        if ((kp.lambda + one).is_zero())
            return false;
    return true;
}

bool prop_distinct_magnitudes(const ModularData &md) {
    const EigenSystem es = conj_eigensystem(md, 1);
    const CycloReal one = CycloReal::one(md.p);
    std::vector<CycloReal> squares;
    for (const auto &kp : es.kron) {
        CycloReal sq = kp.lambda * kp.lambda;
        if (!(sq - one).is_zero())
            squares.push_back(std::move(sq));
    }
    // |a| == |b| iff a^2 == b^2 in the real field
    std::sort(squares.begin(), squares.end(), [](const CycloReal &a, const CycloReal &b) {
        return CycloReal::compare_repr(a, b) < 0;
    });
    for (size_t k = 1; k < squares.size(); ++k)
        if (squares[k] == squares[k - 1])
            return false;
    return true;
}

bool prop_mixed_signs(const ModularData &md) {
    for (int j = 0; j < md.rank; ++j) {
        bool pos = false, neg = false;
        for (int i = 0; i < md.rank; ++i) {
            const int s = md.S(i, j).sign();
            if (s > 0)
                pos = true;
            else if (s < 0)
                neg = true;
            else
                return false; // zero entries would break the column structure
        }
        if (j == 0) {
            if (neg || !pos)
                return false; // unit column is the dims vector, strictly positive
        } else if (!pos || !neg) {
            return false;
        }
    }
    // Kronecker consequence: S_i (x) S_j mixes signs whenever (i,j) != (0,0).
    for (int i = 0; i < md.rank; ++i)
        for (int j = 0; j < md.rank; ++j) {
            if (i == 0 && j == 0)
                continue;
            bool pos = false, neg = false;
            for (int a = 0; a < md.rank && !(pos && neg); ++a)
                for (int b = 0; b < md.rank && !(pos && neg); ++b) {
                    const int s = md.pattern(a, i).sign * md.pattern(b, j).sign;
                    (s > 0 ? pos : neg) = true;
                }
            if (!pos || !neg)
                return false;
        }
    return true;
}

bool cor_pm_d_once(const ModularData &md) {
    for (int pass = 0; pass < 2; ++pass) { // rows, then columns
        for (int i = 0; i < md.rank; ++i) {
            std::vector<int> hits(md.rank, 0);
            for (int j = 0; j < md.rank; ++j) {
                const CycloReal &entry = pass == 0 ? md.S(i, j) : md.S(j, i);
                int match = -1;
                for (int k = 0; k < md.rank; ++k) {
                    if ((entry - md.dims[k]).is_zero() || (entry + md.dims[k]).is_zero()) {
                        if (match >= 0)
                            return false; // |entry| matched two distinct dims
                        match = k;
                    }
                }
                if (match < 0)
                    return false;
                ++hits[match];
            }
            for (int k = 0; k < md.rank; ++k)
                if (hits[k] != 1)
                    return false;
        }
    }
    return true;
}

bool prop_no_minus_one(int p) { return prop_no_minus_one(smatrix(p)); }
bool prop_distinct_magnitudes(int p) { return prop_distinct_magnitudes(smatrix(p)); }
bool prop_mixed_signs(int p) { return prop_mixed_signs(smatrix(p)); }
bool cor_pm_d_once(int p) { return cor_pm_d_once(smatrix(p)); }

int eig1_multiplicity(const EigenSystem &es) {
    int count = 0;
    const int p = es.kron.empty() ? 0 : es.kron.front().lambda.p();
    const CycloReal one = CycloReal::one(p);
    for (const auto &kp : es.kron)
        if ((kp.lambda - one).is_zero())
            ++count;
    return count;
}

bool eig1_span_equals_fusion_span(const FusionRing &ring, const ModularData &md) {
    // The eigenvalue-1 eigenvectors of T_{X_2} are the projectors S_j S_j^T.
    // F_X = sum_j lambda_j^{(X)} S_j S_j^T / gram follows exactly from
    // F_X S = S diag(lambda) and S^T S = gram I, so span{F_X} sits inside the
    // eigenspace; equality is then a dimension count (both families have
    // rank-many independent members: unit columns e_X, resp. orthogonality).
    if (!verlinde_check(ring, md))
        return false;
    const EigenSystem es = conj_eigensystem(md, 1);
    return eig1_multiplicity(es) == md.rank;
}

} // namespace pathact
