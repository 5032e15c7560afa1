#include "classify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <thread>

namespace pathact {

namespace {

// Relabeled adjacency block for the ordered group pair (i, j): rows are target
// simples through psi_j, columns source simples through psi_i, so a valid block
// equals sum_X Z[X] F_X directly.
IntMat relabeled_block(const IntMat &adj, const std::vector<int> &group_i,
                       const std::vector<int> &group_j, const std::vector<int> &psi_i,
                       const std::vector<int> &psi_j) {
    const int rank = static_cast<int>(group_i.size());
    std::vector<int> inv_i(rank), inv_j(rank);
    for (int pos = 0; pos < rank; ++pos) {
        inv_i[psi_i[pos]] = pos;
        inv_j[psi_j[pos]] = pos;
    }
    IntMat r(rank, rank);
    for (int a = 0; a < rank; ++a)
        for (int b = 0; b < rank; ++b)
            r(a, b) = adj(group_j[inv_j[a]], group_i[inv_i[b]]);
    return r;
}

struct RingContext {
    const FusionRing &ring;
    std::vector<IntMat> fusion;           // F_X per simple
    std::vector<std::vector<long>> rowsum; // rowsum[X][m]
    std::vector<std::vector<long>> colsum; // colsum[X][l]
    bool has_dims = false;
    std::vector<CycloReal> dims;

    RingContext(const FusionRing &r, bool want_dims) : ring(r) {
        const int rank = r.rank();
        fusion.reserve(rank);
        for (int X = 0; X < rank; ++X)
            fusion.push_back(r.fusion_matrix(X));
        rowsum.assign(rank, std::vector<long>(rank, 0));
        colsum.assign(rank, std::vector<long>(rank, 0));
        for (int X = 0; X < rank; ++X)
            for (int m = 0; m < rank; ++m)
                for (int l = 0; l < rank; ++l) {
                    rowsum[X][m] += fusion[X](m, l);
                    colsum[X][l] += fusion[X](m, l);
                }
        if (want_dims && r.psu2_p() != 0) {
            has_dims = true;
            dims.reserve(rank);
            for (int j = 0; j < rank; ++j)
                dims.push_back(quantum_integer(2 * j + 1, r.psu2_p()));
        }
    }

    // Candidate coefficients from the unit column, then sound prunes
    // (row/column sums, quantum-dimension eigen-test) before the full verify.
    std::optional<std::vector<long>> decompose(const IntMat &m) const {
        const int rank = ring.rank();
        std::vector<long> n(rank);
        for (int a = 0; a < rank; ++a) {
            n[a] = m(a, ring.unit());
            if (n[a] < 0)
                return std::nullopt;
        }
        for (int a = 0; a < rank; ++a) {
            long rs = 0, cs = 0, ers = 0, ecs = 0;
            for (int b = 0; b < rank; ++b) {
                rs += m(a, b);
                cs += m(b, a);
            }
            for (int X = 0; X < rank; ++X) {
                ers += n[X] * rowsum[X][a];
                ecs += n[X] * colsum[X][a];
            }
            if (rs != ers || cs != ecs)
                return std::nullopt;
        }
        if (has_dims) {
            // F-candidate eigen-test: m d = (sum_X n_X d_X) d, exact.
            CycloReal scale = CycloReal::zero(ring.psu2_p());
            for (int X = 0; X < rank; ++X)
                if (n[X] != 0)
                    scale += dims[X] * Rational(n[X]);
            for (int a = 0; a < rank; ++a) {
                CycloReal acc = CycloReal::zero(ring.psu2_p());
                for (int b = 0; b < rank; ++b)
                    if (m(a, b) != 0)
                        acc += dims[b] * Rational(m(a, b));
                if (acc != scale * dims[a])
                    return std::nullopt;
            }
        }
        for (int a = 0; a < rank; ++a)
            for (int b = 0; b < rank; ++b) {
                long acc = 0;
                for (int X = 0; X < rank; ++X)
                    acc += n[X] * fusion[X](a, b);
                if (acc != m(a, b))
                    return std::nullopt;
            }
        return n;
    }
};

std::vector<std::vector<std::vector<int>>> all_partitions(int n, int rank) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> unused(n);
    std::iota(unused.begin(), unused.end(), 0);
    std::vector<std::vector<int>> current;

    // The first group always anchors the smallest unassigned vertex, so groups
    // come out ordered by their minimum and no partition repeats.
    std::function<void()> rec = [&]() {
        if (unused.empty()) {
            out.push_back(current);
            return;
        }
        const int anchor = unused.front();
        std::vector<int> rest(unused.begin() + 1, unused.end());
        const int need = rank - 1;
        std::vector<int> pick(need);
        std::function<void(int, int)> choose = [&](int start, int depth) {
            if (depth == need) {
                std::vector<int> group{anchor};
                group.insert(group.end(), pick.begin(), pick.end());
                std::vector<int> remaining;
                for (int v : rest)
                    if (std::find(pick.begin(), pick.end(), v) == pick.end())
                        remaining.push_back(v);
                current.push_back(group);
                std::swap(unused, remaining);
                rec();
                std::swap(unused, remaining);
                current.pop_back();
                return;
            }
            for (int k = start; k <= static_cast<int>(rest.size()) - (need - depth); ++k) {
                pick[depth] = rest[k];
                choose(k + 1, depth + 1);
            }
        };
        if (need == 0) {
            current.push_back({anchor});
            std::vector<int> remaining = rest;
            std::swap(unused, remaining);
            rec();
            std::swap(unused, remaining);
            current.pop_back();
        } else {
            choose(0, 0);
        }
    };
    rec();
    return out;
}

std::vector<ActionWitness> classify_partition(const IntMat &adj, const RingContext &ctx,
                                              const std::vector<std::vector<int>> &partition) {
    const int rank = ctx.ring.rank();
    const int groups = static_cast<int>(partition.size());
    std::vector<ActionWitness> found;
    std::vector<std::vector<int>> psi(groups);
    std::vector<std::vector<std::vector<long>>> Z(
        groups, std::vector<std::vector<long>>(groups));

    std::function<void(int)> assign = [&](int g) {
        if (g == groups) {
            found.push_back({partition, psi, Z});
            return;
        }
        std::vector<int> perm(rank);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            psi[g] = perm;
            bool ok = true;
            for (int i = 0; i <= g && ok; ++i) {
                auto zij = ctx.decompose(
                    relabeled_block(adj, partition[i], partition[g], psi[i], psi[g]));
                if (!zij) {
                    ok = false;
                    break;
                }
                Z[i][g] = std::move(*zij);
                if (i != g) {
                    auto zji = ctx.decompose(
                        relabeled_block(adj, partition[g], partition[i], psi[g], psi[i]));
                    if (!zji) {
                        ok = false;
                        break;
                    }
                    Z[g][i] = std::move(*zji);
                }
            }
            if (ok)
                assign(g + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
        psi[g].clear();
    };
    assign(0);
    return found;
}

} // namespace

std::optional<std::vector<long>> decompose_over_basis(const IntMat &M, const FusionRing &ring) {
    if (M.rows() != ring.rank() || M.cols() != ring.rank())
        throw std::invalid_argument("matrix size does not match the ring rank");
    RingContext ctx(ring, false);
    return ctx.decompose(M);
}

std::vector<ActionWitness> classify(const Quiver &q, const FusionRing &ring,
                                    const ClassifyOptions &opts) {
    const int n = q.order();
    const int rank = ring.rank();
    if (n % rank != 0)
        return {};
    const RingContext ctx(ring, opts.dim_prune);
    const auto partitions = all_partitions(n, rank);

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (!opts.parallel || partitions.size() < 16 || hw < 2) {
        std::vector<ActionWitness> out;
        for (const auto &p : partitions) {
            auto found = classify_partition(q.adj(), ctx, p);
            out.insert(out.end(), std::make_move_iterator(found.begin()),
                       std::make_move_iterator(found.end()));
        }
        return out;
    }

    // Candidate partitions are independent; fan out in chunks and merge in
    // partition order so the result stays deterministic.
    const size_t chunks = std::min<size_t>(hw, partitions.size());
    std::vector<std::future<std::vector<ActionWitness>>> futures;
    for (size_t c = 0; c < chunks; ++c) {
        const size_t lo = partitions.size() * c / chunks;
        const size_t hi = partitions.size() * (c + 1) / chunks;
        futures.push_back(std::async(std::launch::async, [&, lo, hi]() {
            std::vector<ActionWitness> local;
            for (size_t k = lo; k < hi; ++k) {
                auto found = classify_partition(q.adj(), ctx, partitions[k]);
                local.insert(local.end(), std::make_move_iterator(found.begin()),
                             std::make_move_iterator(found.end()));
            }
            return local;
        }));
    }
    std::vector<ActionWitness> out;
    for (auto &f : futures) {
        auto local = f.get();
        out.insert(out.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
    }
    return out;
}

bool check_witness(const Quiver &q, const FusionRing &ring, const ActionWitness &w) {
    const int n = q.order();
    const int rank = ring.rank();
    const int groups = static_cast<int>(w.partition.size());
    if (groups * rank != n)
        throw std::invalid_argument("witness partition does not match the quiver");
    std::vector<bool> seen(n, false);
    for (const auto &g : w.partition) {
        if (static_cast<int>(g.size()) != rank)
            throw std::invalid_argument("witness group size must equal the ring rank");
        for (int v : g) {
            if (v < 0 || v >= n || seen[v])
                throw std::invalid_argument("witness groups must partition the vertices");
            seen[v] = true;
        }
    }
    if (static_cast<int>(w.bijections.size()) != groups)
        throw std::invalid_argument("witness bijection count does not match the partition");
    for (const auto &psi : w.bijections) {
        if (static_cast<int>(psi.size()) != rank)
            throw std::invalid_argument("witness bijection has wrong size");
        std::vector<bool> used(rank, false);
        for (int s : psi) {
            if (s < 0 || s >= rank || used[s])
                throw std::invalid_argument("witness bijection is not a bijection");
            used[s] = true;
        }
    }
    if (static_cast<int>(w.Z.size()) != groups)
        throw std::invalid_argument("witness Z table does not match the partition");
    for (const auto &row : w.Z) {
        if (static_cast<int>(row.size()) != groups)
            throw std::invalid_argument("witness Z table does not match the partition");
        for (const auto &z : row) {
            if (static_cast<int>(z.size()) != rank)
                throw std::invalid_argument("witness Z vector has wrong size");
            for (long v : z)
                if (v < 0)
                    throw std::invalid_argument("witness Z multiplicities must be nonnegative");
        }
    }

    std::vector<IntMat> fusion;
    fusion.reserve(rank);
    for (int X = 0; X < rank; ++X)
        fusion.push_back(ring.fusion_matrix(X));
    for (int i = 0; i < groups; ++i)
        for (int j = 0; j < groups; ++j) {
            const IntMat r = relabeled_block(q.adj(), w.partition[i], w.partition[j],
                                             w.bijections[i], w.bijections[j]);
            for (int a = 0; a < rank; ++a)
                for (int b = 0; b < rank; ++b) {
                    long acc = 0;
                    for (int X = 0; X < rank; ++X)
                        acc += w.Z[i][j][X] * fusion[X](a, b);
                    if (acc != r(a, b))
                        return false;
                }
        }
    return true;
}

OracleReport conjugation_oracle(const Quiver &q, const FusionRing &ring, int X,
                                const std::vector<std::vector<int>> &psi, int K) {
    if (K < 1)
        throw std::invalid_argument("step count must be >= 1");
    if (X < 0 || X >= ring.rank())
        throw std::out_of_range("simple index out of range");
    if (X == ring.unit())
        throw std::domain_error("conjugation by the unit object is trivial");
    const int n = q.order();
    const int rank = ring.rank();
    if (n % rank != 0)
        throw std::invalid_argument("vertex count must be a multiple of the rank");
    const int groups = n / rank;
    if (static_cast<int>(psi.size()) != groups)
        throw std::invalid_argument("need one bijection per vertex group");
    for (const auto &pk : psi) {
        if (static_cast<int>(pk.size()) != rank)
            throw std::invalid_argument("bijection has wrong size");
        std::vector<bool> used(rank, false);
        for (int s : pk) {
            if (s < 0 || s >= rank || used[s])
                throw std::invalid_argument("bijection is not a bijection");
            used[s] = true;
        }
    }

    const IntMat f = ring.fusion_matrix(X);
    RatMat g(n, n);
    for (int k = 0; k < groups; ++k)
        for (int a = 0; a < rank; ++a)
            for (int b = 0; b < rank; ++b)
                g(k * rank + a, k * rank + b) = Rational(f(psi[k][a], psi[k][b]));
    RatMat ginv;
    if (!rat_invert(g, ginv))
        throw std::domain_error("fusion matrix is singular; conjugation undefined");

    RatMat cur(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            cur(r, c) = Rational(q.adj()(r, c));

    OracleReport rep;
    rep.survived = true;
    bool fixpoint = false;
    for (int step = 1; step <= K; ++step) {
        RatMat next = ginv * cur * g;
        rep.steps_checked = step;
        for (int r = 0; r < n && rep.survived; ++r)
            for (int c = 0; c < n; ++c) {
                const Rational &v = next(r, c);
                if (!is_integral(v) || sgn(v) < 0) {
                    rep.survived = false;
                    rep.first_violation = OracleViolation{step, r, c, v};
                    break;
                }
            }
        if (!rep.survived)
            break;
        if (next == cur) {
            // Conjugation fixes the matrix, so every further iterate repeats it.
            fixpoint = true;
            rep.steps_checked = K;
            break;
        }
        cur = std::move(next);
    }

    if (fixpoint) {
        rep.certified = true;
    } else if (rep.survived && ring.psu2_p() != 0) {
        // Exact eigenprojection certificate: all non-unit Kronecker components
        // of every block must vanish for the iterates to stay nonnegative
        // integers forever.
        const ModularData md = smatrix(ring.psu2_p());
        bool all_zero = true;
        for (int R = 0; R < groups && all_zero; ++R)
            for (int C = 0; C < groups && all_zero; ++C)
                for (int i = 0; i < rank && all_zero; ++i)
                    for (int j = 0; j < rank && all_zero; ++j) {
                        if (i == j)
                            continue;
                        CycloReal num = CycloReal::zero(md.p);
                        for (int r = 0; r < rank; ++r) {
                            CycloReal inner = CycloReal::zero(md.p);
                            for (int c = 0; c < rank; ++c) {
                                const long a = q.adj()(R * rank + r, C * rank + c);
                                if (a != 0)
                                    inner += md.S(psi[C][c], j) * Rational(a);
                            }
                            if (!inner.is_zero())
                                num += md.S(psi[R][r], i) * inner;
                        }
                        if (!num.is_zero())
                            all_zero = false;
                    }
        rep.certified = all_zero;
    }
    return rep;
}

bool spectral_oracle(const IntMat &adj, const ModularData &md,
                     const std::vector<std::vector<int>> &psi,
                     std::vector<std::vector<std::vector<Rational>>> *coeffs_out) {
    const int rank = md.rank;
    const int n = adj.rows();
    if (n % rank != 0 || adj.cols() != n)
        throw std::invalid_argument("adjacency must split into rank-sized groups");
    const int groups = n / rank;
    if (static_cast<int>(psi.size()) != groups)
        throw std::invalid_argument("need one bijection per vertex group");

    const CycloReal gram = md.gram();
    const CycloReal gram_inv = gram.inverse();
    if (coeffs_out)
        coeffs_out->assign(groups, std::vector<std::vector<Rational>>(groups));

    std::vector<std::vector<int>> inv(groups, std::vector<int>(rank));
    for (int k = 0; k < groups; ++k)
        for (int pos = 0; pos < rank; ++pos)
            inv[k][psi[k][pos]] = pos;

    for (int i = 0; i < groups; ++i)
        for (int j = 0; j < groups; ++j) {
            IntMat r(rank, rank);
            for (int a = 0; a < rank; ++a)
                for (int b = 0; b < rank; ++b)
                    r(a, b) = adj(j * rank + inv[j][a], i * rank + inv[i][b]);

            // u_a[c] = (S_a)^T R column c
            Mat<CycloReal> u(rank, rank, CycloReal::zero(md.p));
            for (int a = 0; a < rank; ++a)
                for (int c = 0; c < rank; ++c) {
                    CycloReal acc = CycloReal::zero(md.p);
                    for (int row = 0; row < rank; ++row)
                        if (r(row, c) != 0)
                            acc += md.S(row, a) * Rational(r(row, c));
                    u(a, c) = std::move(acc);
                }

            // Zero residual: off-diagonal components S_a^T R S_b must vanish.
            std::vector<CycloReal> diag;
            diag.reserve(rank);
            for (int a = 0; a < rank; ++a)
                for (int b = 0; b < rank; ++b) {
                    CycloReal acc = CycloReal::zero(md.p);
                    for (int c = 0; c < rank; ++c)
                        if (!u(a, c).is_zero())
                            acc += u(a, c) * md.S(c, b);
                    if (a == b)
                        diag.push_back(std::move(acc));
                    else if (!acc.is_zero())
                        return false;
                }

            // Eigenvalues c_a = diag_a / gram; coefficients from S n = (c_a d_a).
            std::vector<Rational> coeffs(rank);
            for (int Zi = 0; Zi < rank; ++Zi) {
                CycloReal acc = CycloReal::zero(md.p);
                for (int a = 0; a < rank; ++a)
                    acc += md.S(Zi, a) * diag[a] * md.dims[a];
                acc = acc * gram_inv * gram_inv;
                if (!acc.is_rational())
                    return false;
                const Rational nz = acc.rational_part();
                if (!is_integral(nz) || sgn(nz) < 0)
                    return false;
                coeffs[Zi] = nz;
            }
            if (coeffs_out)
                (*coeffs_out)[i][j] = std::move(coeffs);
        }
    return true;
}

bool spectral_oracle(const Quiver &q, const FusionRing &ring,
                     const std::vector<std::vector<int>> &psi) {
    if (ring.psu2_p() == 0)
        throw std::domain_error("spectral oracle requires a PSU(2) ring");
    const ModularData md = smatrix(ring.psu2_p());
    return spectral_oracle(q.adj(), md, psi, nullptr);
}

DecompCount count_decompositions(const TildeMatrix &tm, const FusionRing &ring,
                                 int module_shape) {
    const int rank = ring.rank();
    const int n = tm.m.rows();
    if (module_shape < 1 || n != module_shape * rank || tm.m.cols() != n)
        throw std::invalid_argument("tilde matrix does not split into rank-sized blocks");

    std::vector<IntMat> fusion;
    fusion.reserve(rank);
    for (int X = 0; X < rank; ++X)
        fusion.push_back(ring.fusion_matrix(X));

    bool any_infinite = false;
    for (int i = 0; i < module_shape; ++i)
        for (int j = 0; j < module_shape; ++j) {
            // Block entry (a, b): paths from vertex (i, b) to vertex (j, a).
            std::vector<ExtNat> coeff(rank);
            for (int X = 0; X < rank; ++X)
                coeff[X] = tm.m(j * rank + X, i * rank + ring.unit());
            for (int a = 0; a < rank; ++a)
                for (int b = 0; b < rank; ++b) {
                    ExtNat acc(0);
                    for (int X = 0; X < rank; ++X)
                        acc += coeff[X] * ExtNat(fusion[X](a, b));
                    const ExtNat &want = tm.m(j * rank + a, i * rank + b);
                    if (acc != want)
                        return DecompCount::Zero;
                    if (want.is_infinite())
                        any_infinite = true;
                }
        }

    // Degenerate rank-1 colimit: a trivial ring cannot pin the filtration of an
    // infinite block, so the coefficient is treated as unconstrained.
    if (rank == 1 && any_infinite)
        return DecompCount::Infinite;
    return DecompCount::One;
}

IntMat based_space_dims(const ActionWitness &w, const FusionRing &ring, int X) {
    if (X < 0 || X >= ring.rank())
        throw std::out_of_range("simple index out of range");
    int n = 0;
    for (const auto &g : w.partition)
        n += static_cast<int>(g.size());
    IntMat out(n, n);
    for (size_t k = 0; k < w.partition.size(); ++k) {
        const auto &group = w.partition[k];
        const auto &psi = w.bijections.at(k);
        for (size_t a = 0; a < group.size(); ++a)
            for (size_t b = 0; b < group.size(); ++b)
                out(group[a], group[b]) = ring.N(X, psi[a], psi[b]);
    }
    return out;
}

std::vector<std::vector<int>> identity_bijections(int groups, int rank) {
    std::vector<int> id(rank);
    std::iota(id.begin(), id.end(), 0);
    return std::vector<std::vector<int>>(groups, id);
}

} // namespace pathact
