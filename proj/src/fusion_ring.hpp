#pragma once

#include "util.hpp"

#include <string>
#include <vector>

namespace pathact {

struct FusionViolation {
    enum class Kind { Unit, Associativity, Dual, Shape };
    Kind kind;
    std::vector<int> indices;
    std::string message;
};

// Grothendieck-level fusion ring: labels, structure constants N[i][j][k] = N_{i,j}^k,
// unit index and dual involution. The PSU(2)_{p-2} constructor stores p so modular
// data can be attached later; generic rings loaded from files have psu2_p() == 0.
class FusionRing {
  public:
    FusionRing(int rank, std::vector<std::string> labels, int unit, std::vector<int> dual,
               std::vector<std::vector<std::vector<long>>> tensor);

    // Simples X_0, X_2, ..., X_{p-3}; N_{2i,2j}^{2m} = 1 iff
    // |2i-2j| <= 2m <= min(2i+2j, 2(p-2)-2i-2j).
    static FusionRing psu2(int p);

    int rank() const { return rank_; }
    int unit() const { return unit_; }
    int dual(int i) const { return dual_.at(i); }
    int psu2_p() const { return psu2_p_; }
    const std::vector<std::string> &labels() const { return labels_; }
    const std::string &label(int i) const { return labels_.at(i); }
    long N(int i, int j, int k) const { return tensor_[i][j][k]; }

    // (F_X)[m][l] = N[X][l][m]; the unit column is e_X.
    IntMat fusion_matrix(int X) const;

    // Exhaustive invariant check; empty result means the ring is valid.
    std::vector<FusionViolation> validate() const;

    // -1 for "not a label", otherwise the index.
    int index_of(const std::string &label) const;

    bool same_structure(const FusionRing &o) const;
    bool operator==(const FusionRing &o) const;

  private:
    int rank_;
    std::vector<std::string> labels_;
    int unit_;
    std::vector<int> dual_;
    std::vector<std::vector<std::vector<long>>> tensor_;
    int psu2_p_ = 0;
};

} // namespace pathact
