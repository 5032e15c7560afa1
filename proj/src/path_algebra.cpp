#include "path_algebra.hpp"

#include <algorithm>

namespace pathact {

int path_source(const Quiver &q, const Path &p) {
    return p.edges.empty() ? p.vertex : q.edge(p.edges.back()).src;
}

int path_target(const Quiver &q, const Path &p) {
    return p.edges.empty() ? p.vertex : q.edge(p.edges.front()).dst;
}

std::string path_text(const Quiver &q, const Path &p) {
    if (p.edges.empty())
        return "p_" + q.vertex(p.vertex);
    std::string out;
    for (size_t k = 0; k < p.edges.size(); ++k)
        out += q.edge(p.edges[k]).name;
    return out;
}

PathElement PathElement::unit(const Quiver &q) {
    PathElement e;
    for (int v = 0; v < q.order(); ++v)
        e.add_term({v, {}}, 1);
    return e;
}

void PathElement::add_term(const Path &p, const Rational &c) {
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

PathElement PathElement::operator+(const PathElement &o) const {
    PathElement r = *this;
    for (const auto &[p, c] : o.terms_)
        r.add_term(p, c);
    return r;
}

PathElement PathElement::operator-(const PathElement &o) const {
    PathElement r = *this;
    for (const auto &[p, c] : o.terms_)
        r.add_term(p, -c);
    return r;
}

PathElement PathElement::operator*(const Rational &c) const {
    PathElement r;
    if (sgn(c) == 0)
        return r;
    for (const auto &[p, coeff] : terms_)
        r.add_term(p, coeff * c);
    return r;
}

PathElement multiply(const Quiver &q, const PathElement &a, const PathElement &b) {
    PathElement r;
    for (const auto &[pa, ca] : a.terms())
        for (const auto &[pb, cb] : b.terms()) {
            if (path_source(q, pa) != path_target(q, pb))
                continue;
            Path prod;
            if (pa.edges.empty() && pb.edges.empty()) {
                prod.vertex = pa.vertex;
            } else {
                prod.edges = pa.edges;
                prod.edges.insert(prod.edges.end(), pb.edges.begin(), pb.edges.end());
            }
            r.add_term(prod, ca * cb);
        }
    return r;
}

std::vector<std::vector<Path>> enumerate_paths(const Quiver &q, int maxlen) {
    if (maxlen < 0)
        throw std::invalid_argument("maxlen must be >= 0");
    std::vector<std::vector<Path>> out(maxlen + 1);
    for (int v = 0; v < q.order(); ++v)
        out[0].push_back({v, {}});
    // Extend on the left: a length-l path with target t grows by every edge
    // whose source is t.
    for (int l = 1; l <= maxlen; ++l) {
        for (const auto &p : out[l - 1]) {
            const int t = path_target(q, p);
            for (size_t e = 0; e < q.edges().size(); ++e) {
                if (q.edge(static_cast<int>(e)).src != t)
                    continue;
                Path np;
                np.edges.reserve(p.edges.size() + 1);
                np.edges.push_back(static_cast<int>(e));
                np.edges.insert(np.edges.end(), p.edges.begin(), p.edges.end());
                out[l].push_back(std::move(np));
            }
        }
        std::sort(out[l].begin(), out[l].end());
    }
    return out;
}

namespace {

bool quiver_is_acyclic(const Quiver &q) {
    const SccResult comps = scc(q);
    for (int v = 0; v < q.order(); ++v)
        if (q.adj()(v, v) > 0 || comps.components[comps.component_of[v]].size() >= 2)
            return false;
    return true;
}

} // namespace

AutomorphismReport check_automorphism(const Quiver &q, const GeneratorImages &images,
                                      std::optional<int> order_hint) {
    if (!quiver_is_acyclic(q))
        throw std::domain_error("automorphism check requires an acyclic quiver");
    const int n = q.order();
    if (static_cast<int>(images.vertex_image.size()) != n)
        throw std::invalid_argument("vertex image does not cover all vertices");
    std::vector<bool> hit(n, false);
    for (int v = 0; v < n; ++v) {
        const int w = images.vertex_image[v];
        if (w < 0 || w >= n || hit[w])
            throw std::invalid_argument("vertex image is not a bijection");
        hit[w] = true;
    }
    if (images.edge_images.size() != q.edges().size())
        throw std::invalid_argument("edge image does not cover all edges");
    for (size_t e = 0; e < q.edges().size(); ++e) {
        const Edge &edge = q.edge(static_cast<int>(e));
        const int want_src = images.vertex_image[edge.src];
        const int want_dst = images.vertex_image[edge.dst];
        for (const auto &[p, c] : images.edge_images[e].terms())
            if (path_source(q, p) != want_src || path_target(q, p) != want_dst)
                throw std::invalid_argument("image of edge '" + edge.name +
                                            "' is not source/target compatible");
    }

    // Full path basis (acyclic, so paths have fewer than n edges).
    std::vector<Path> basis;
    for (auto &group : enumerate_paths(q, std::max(0, n - 1)))
        for (auto &p : group)
            basis.push_back(std::move(p));
    const int dim = static_cast<int>(basis.size());
    std::map<Path, int> basis_index;
    for (int i = 0; i < dim; ++i)
        basis_index[basis[i]] = i;

    auto apply = [&](const Path &p) -> PathElement {
        if (p.edges.empty())
            return PathElement::vertex(images.vertex_image[p.vertex]);
        PathElement acc = images.edge_images[p.edges[0]];
        for (size_t k = 1; k < p.edges.size(); ++k)
            acc = multiply(q, acc, images.edge_images[p.edges[k]]);
        return acc;
    };

    std::vector<PathElement> image_of(dim);
    for (int i = 0; i < dim; ++i)
        image_of[i] = apply(basis[i]);

    AutomorphismReport rep;
    rep.basis_size = dim;
    rep.order_hint = order_hint;

    auto image_of_element = [&](const PathElement &x) {
        PathElement acc;
        for (const auto &[p, c] : x.terms()) {
            auto it = basis_index.find(p);
            if (it == basis_index.end())
                throw std::runtime_error("product left the path basis (internal failure)");
            acc = acc + image_of[it->second] * c;
        }
        return acc;
    };

    rep.multiplicative = true;
    for (int i = 0; i < dim && rep.multiplicative; ++i)
        for (int j = 0; j < dim && rep.multiplicative; ++j) {
            const PathElement prod =
                multiply(q, PathElement::path(basis[i]), PathElement::path(basis[j]));
            const PathElement lhs = image_of_element(prod);
            const PathElement rhs = multiply(q, image_of[i], image_of[j]);
            if (!(lhs == rhs))
                rep.multiplicative = false;
        }

    PathElement unit_image;
    for (int v = 0; v < n; ++v)
        unit_image = unit_image + image_of[basis_index[Path{v, {}}]];
    rep.unit_preserved = unit_image == PathElement::unit(q);

    // Matrix of the map in the path basis.
    RatMat m(dim, dim);
    for (int col = 0; col < dim; ++col)
        for (const auto &[p, c] : image_of[col].terms())
            m(basis_index.at(p), col) = c;
    RatMat inv;
    rep.invertible = rat_invert(m, inv);

    const int order_limit = 256;
    RatMat power = m;
    const RatMat id = RatMat::identity(dim);
    for (int k = 1; k <= order_limit; ++k) {
        if (power == id) {
            rep.order = k;
            break;
        }
        power = power * m;
    }
    if (order_hint) {
        if (*order_hint < 1) {
            rep.order_hint_ok = false;
        } else {
            RatMat acc = RatMat::identity(dim);
            bool exact = true;
            for (int k = 1; k <= *order_hint; ++k) {
                acc = acc * m;
                if (k < *order_hint && *order_hint % k == 0 && acc == id)
                    exact = false; // a proper divisor already reaches the identity
            }
            rep.order_hint_ok = exact && acc == id;
        }
    }
    return rep;
}

} // namespace pathact
