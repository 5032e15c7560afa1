#include "fusion_ring.hpp"

#include <algorithm>

namespace pathact {

FusionRing::FusionRing(int rank, std::vector<std::string> labels, int unit, std::vector<int> dual,
                       std::vector<std::vector<std::vector<long>>> tensor)
    : rank_(rank), labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)),
      tensor_(std::move(tensor)) {
    if (rank_ < 1)
        throw std::invalid_argument("fusion ring rank must be >= 1");
    if (static_cast<int>(labels_.size()) != rank_)
        throw std::invalid_argument("label list does not match rank");
    if (unit_ < 0 || unit_ >= rank_)
        throw std::invalid_argument("unit index out of range");
    if (static_cast<int>(dual_.size()) != rank_)
        throw std::invalid_argument("dual map does not match rank");
    for (int d : dual_)
        if (d < 0 || d >= rank_)
            throw std::invalid_argument("dual index out of range");
    if (static_cast<int>(tensor_.size()) != rank_)
        throw std::invalid_argument("N tensor does not match rank");
    for (const auto &plane : tensor_) {
        if (static_cast<int>(plane.size()) != rank_)
            throw std::invalid_argument("N tensor does not match rank");
        for (const auto &row : plane) {
            if (static_cast<int>(row.size()) != rank_)
                throw std::invalid_argument("N tensor does not match rank");
            for (long v : row)
                if (v < 0)
                    throw std::invalid_argument("N tensor entries must be nonnegative");
        }
    }
}

FusionRing FusionRing::psu2(int p) {
    if (p < 5 || !is_prime(p))
        throw std::domain_error("p must be an odd prime >= 5, got " + std::to_string(p));
    const int rank = (p - 1) / 2;
    std::vector<std::string> labels;
    labels.reserve(rank);
    for (int j = 0; j < rank; ++j)
        labels.push_back("X_" + std::to_string(2 * j));
    std::vector dual(rank, 0);
    for (int j = 0; j < rank; ++j)
        dual[j] = j;
    std::vector tensor(rank, std::vector(rank, std::vector<long>(rank, 0)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            const int lo = std::abs(i - j);
            const int hi = std::min(i + j, (p - 2) - i - j);
            for (int m = lo; m <= hi && m < rank; ++m)
                tensor[i][j][m] = 1;
        }
    FusionRing ring(rank, std::move(labels), 0, std::move(dual), std::move(tensor));
    ring.psu2_p_ = p;
    return ring;
}

IntMat FusionRing::fusion_matrix(int X) const {
    if (X < 0 || X >= rank_)
        throw std::out_of_range("simple index out of range");
    IntMat f(rank_, rank_);
    for (int m = 0; m < rank_; ++m)
        for (int l = 0; l < rank_; ++l)
            f(m, l) = tensor_[X][l][m];
    return f;
}

std::vector<FusionViolation> FusionRing::validate() const {
    std::vector<FusionViolation> out;
    for (int j = 0; j < rank_; ++j)
        for (int k = 0; k < rank_; ++k) {
            const long want = (j == k) ? 1 : 0;
            if (tensor_[unit_][j][k] != want)
                out.push_back({FusionViolation::Kind::Unit,
                               {unit_, j, k},
                               "unit axiom: N[1][" + labels_[j] + "][" + labels_[k] + "] = " +
                                   std::to_string(tensor_[unit_][j][k])});
            if (tensor_[j][unit_][k] != want)
                out.push_back({FusionViolation::Kind::Unit,
                               {j, unit_, k},
                               "unit axiom: N[" + labels_[j] + "][1][" + labels_[k] + "] = " +
                                   std::to_string(tensor_[j][unit_][k])});
        }
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            for (int k = 0; k < rank_; ++k)
                for (int l = 0; l < rank_; ++l) {
                    long lhs = 0, rhs = 0;
                    for (int m = 0; m < rank_; ++m) {
                        lhs += tensor_[i][j][m] * tensor_[m][k][l];
                        rhs += tensor_[j][k][m] * tensor_[i][m][l];
                    }
                    if (lhs != rhs)
                        out.push_back({FusionViolation::Kind::Associativity,
                                       {i, j, k, l},
                                       "associativity fails at (" + labels_[i] + "," + labels_[j] +
                                           "," + labels_[k] + "," + labels_[l] + "): " +
                                           std::to_string(lhs) + " != " + std::to_string(rhs)});
                }
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            const long want = (j == dual_[i]) ? 1 : 0;
            if (tensor_[i][j][unit_] != want)
                out.push_back({FusionViolation::Kind::Dual,
                               {i, j},
                               "dual axiom: N[" + labels_[i] + "][" + labels_[j] + "][1] = " +
                                   std::to_string(tensor_[i][j][unit_])});
        }
    return out;
}

int FusionRing::index_of(const std::string &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

bool FusionRing::same_structure(const FusionRing &o) const {
    return rank_ == o.rank_ && unit_ == o.unit_ && dual_ == o.dual_ && tensor_ == o.tensor_;
}

bool FusionRing::operator==(const FusionRing &o) const {
    return same_structure(o) && labels_ == o.labels_;
}

} // namespace pathact
