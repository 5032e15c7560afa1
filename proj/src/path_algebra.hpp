#pragma once

#include "quiver.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pathact {

// A basis path: either the length-0 path at a vertex or a composable edge word.
// Edge indices are stored in display order, so edges[0] is applied last;
// consecutive edges satisfy s(edges[i]) == t(edges[i+1]).
struct Path {
    int vertex = -1;        // set only for length-0 paths
    std::vector<int> edges; // empty for length-0 paths

    int length() const { return static_cast<int>(edges.size()); }
    bool operator<(const Path &o) const {
        if (edges.size() != o.edges.size())
            return edges.size() < o.edges.size();
        if (edges != o.edges)
            return edges < o.edges;
        return vertex < o.vertex;
    }
    bool operator==(const Path &o) const { return vertex == o.vertex && edges == o.edges; }
};

int path_source(const Quiver &q, const Path &p);
int path_target(const Quiver &q, const Path &p);
std::string path_text(const Quiver &q, const Path &p);

// Finite rational linear combination of paths in canonical form (zero
// coefficients dropped, duplicate paths merged by the map).
class PathElement {
  public:
    PathElement() = default;

    static PathElement zero() { return {}; }
    static PathElement path(const Path &p) {
        PathElement e;
        e.terms_[p] = 1;
        return e;
    }
    static PathElement vertex(int v) {
        Path p;
        p.vertex = v;
        return path(p);
    }
    static PathElement unit(const Quiver &q);

    const std::map<Path, Rational> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Path &p, const Rational &c);
    PathElement operator+(const PathElement &o) const;
    PathElement operator-(const PathElement &o) const;
    PathElement operator*(const Rational &c) const;
    bool operator==(const PathElement &o) const { return terms_ == o.terms_; }

  private:
    std::map<Path, Rational> terms_;
};

// Bilinear extension of path concatenation gated by the source/target delta.
PathElement multiply(const Quiver &q, const PathElement &a, const PathElement &b);

// All paths of length 0..maxlen grouped by length, duplicate-free, in the
// deterministic generation order (vertices by index, extensions by edge index).
std::vector<std::vector<Path>> enumerate_paths(const Quiver &q, int maxlen);

// Generator images of a candidate path-algebra endomorphism.
struct GeneratorImages {
    std::vector<int> vertex_image;        // sigma : vertex -> vertex
    std::vector<PathElement> edge_images; // per edge index
};

struct AutomorphismReport {
    int basis_size = 0;
    bool multiplicative = false;
    bool unit_preserved = false;
    bool invertible = false;
    std::optional<int> order;       // exact order when <= the search limit
    std::optional<int> order_hint;
    bool order_hint_ok = false;

    bool is_automorphism() const { return multiplicative && unit_preserved && invertible; }
};

// Verifies that the generator images extend to an algebra automorphism of kQ.
// Requires an acyclic quiver so the path basis is finite; throws when a vertex
// image is not a bijection or an edge image is not source/target compatible.
AutomorphismReport check_automorphism(const Quiver &q, const GeneratorImages &images,
                                      std::optional<int> order_hint = std::nullopt);

} // namespace pathact
