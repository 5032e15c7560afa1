#pragma once

#include "util.hpp"

#include <string>
#include <vector>

namespace pathact {

struct Edge {
    int src = 0;
    int dst = 0;
    std::string name;
};

// Finite quiver: named vertices plus adjacency with adj(t, s) = #edges s -> t.
// Individual edges carry names so paths and automorphism maps can refer to them;
// names are presentation data and do not enter quiver equality.
class Quiver {
  public:
    Quiver(std::vector<std::string> vertices, IntMat adj);
    Quiver(std::vector<std::string> vertices, std::vector<Edge> edges);

    int order() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string> &vertices() const { return vertices_; }
    const std::string &vertex(int i) const { return vertices_.at(i); }
    const IntMat &adj() const { return adj_; }
    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(int e) const { return edges_.at(e); }

    int vertex_index(const std::string &name) const; // -1 when absent
    int edge_index(const std::string &name) const;   // -1 when absent

    bool operator==(const Quiver &o) const {
        return vertices_ == o.vertices_ && adj_ == o.adj_;
    }

  private:
    void synthesize_edges();
    std::vector<std::string> vertices_;
    IntMat adj_;
    std::vector<Edge> edges_;
};

struct SccResult {
    // Components in topological order of the condensation (sources first),
    // ties broken by smallest contained vertex index; vertices sorted within.
    std::vector<std::vector<int>> components;
    std::vector<int> component_of;
    std::vector<std::pair<int, int>> condensation_edges; // (from, to), deduplicated, sorted
};

SccResult scc(const Quiver &q);

// Element of N ∪ {inf} with path-count arithmetic: inf + x = inf,
// inf * 0 = 0, inf * x = inf for x >= 1.
class ExtNat {
  public:
    ExtNat() : value_(0), infinite_(false) {}
    ExtNat(long v) : value_(v), infinite_(false) {
        if (v < 0)
            throw std::domain_error("ExtNat must be nonnegative");
    }
    explicit ExtNat(Integer v) : value_(std::move(v)), infinite_(false) {
        if (value_ < 0)
            throw std::domain_error("ExtNat must be nonnegative");
    }
    static ExtNat infinity() {
        ExtNat e;
        e.infinite_ = true;
        return e;
    }

    bool is_infinite() const { return infinite_; }
    const Integer &value() const { return value_; } // meaningful only when finite

    ExtNat operator+(const ExtNat &o) const {
        if (infinite_ || o.infinite_)
            return infinity();
        return ExtNat(Integer(value_ + o.value_));
    }
    ExtNat operator*(const ExtNat &o) const {
        if ((infinite_ && o.is_zero()) || (o.infinite_ && is_zero()))
            return ExtNat(0);
        if (infinite_ || o.infinite_)
            return infinity();
        return ExtNat(Integer(value_ * o.value_));
    }
    ExtNat &operator+=(const ExtNat &o) {
        *this = *this + o;
        return *this;
    }
    bool is_zero() const { return !infinite_ && value_ == 0; }
    bool operator==(const ExtNat &o) const {
        return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
    }
    bool operator!=(const ExtNat &o) const { return !(*this == o); }

    std::string str() const { return infinite_ ? "inf" : value_.get_str(); }

  private:
    Integer value_;
    bool infinite_;
};

// Entry (w, v): number of paths v -> w of any length >= 0 (the empty path puts
// 1 on the diagonal); inf exactly when some connecting walk meets a vertex on a
// directed cycle.
struct TildeMatrix {
    std::vector<std::string> vertices;
    Mat<ExtNat> m;
};

TildeMatrix tilde(const Quiver &q);

} // namespace pathact
