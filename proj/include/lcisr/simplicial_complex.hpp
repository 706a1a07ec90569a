#ifndef LCISR_SIMPLICIAL_COMPLEX_HPP
#define LCISR_SIMPLICIAL_COMPLEX_HPP

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "face.hpp"

namespace lcisr {

/// Keeps only the inclusion-maximal members; result is sorted and duplicate-free.
inline std::vector<Face> maximal_faces(std::vector<Face> faces) {
    // Larger faces first so a face is only compared against possible supersets.
    std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (Face f : faces) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [f](Face g) { return f.subset_of(g); });
        if (!dominated) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

/// A simplicial complex on the vertex set {0, ..., n-1}, stored by its facets.
///
/// Every vertex is a face. Each complex also records, per internal vertex, the
/// 1-based label it carries in the complex it was derived from, so links,
/// restrictions and components can be reported in original labels.
///
/// The complex {∅} (no vertices, only the empty face) is a distinct value
/// obtained from empty_complex(); it arises as the link of a facet.
class SimplicialComplex {
public:
    /// Builds a complex from 1-based vertex lists.
    static SimplicialComplex from_facets(unsigned n, const std::vector<std::vector<unsigned>>& facets) {
        if (facets.empty()) throw Error(ErrorKind::EmptyInput, "facet list is empty");
        if (n == 0) throw Error(ErrorKind::EmptyInput, "vertex count must be positive");
        if (n > kMaxVertices)
            throw Error(ErrorKind::VertexOutOfRange, "at most " + std::to_string(kMaxVertices) + " vertices supported");
        std::vector<Face> masks;
        masks.reserve(facets.size());
        for (const auto& facet : facets) {
            Face f;
            for (unsigned v : facet) {
                if (v < 1 || v > n)
                    throw Error(ErrorKind::VertexOutOfRange,
                                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
                f = f.with(v - 1);
            }
            masks.push_back(f);
        }
        return from_masks(n, std::move(masks));
    }

    /// Builds a complex from 0-based masks; `labels` defaults to 1..n.
    static SimplicialComplex from_masks(unsigned n, std::vector<Face> facets, std::vector<unsigned> labels = {}) {
        if (facets.empty()) throw Error(ErrorKind::EmptyInput, "facet list is empty");
        if (n == 0 || n > kMaxVertices) throw Error(ErrorKind::VertexOutOfRange, "vertex count out of range");
        if (!labels.empty() && labels.size() != n)
            throw Error(ErrorKind::DimensionMismatch, "label count differs from vertex count");
        Face covered;
        for (Face f : facets) {
            if (!f.subset_of(Face::full(n))) throw Error(ErrorKind::VertexOutOfRange, "facet outside vertex set");
            covered = covered | f;
        }
        Face missing = Face::full(n) - covered;
        if (!missing.empty()) {
            unsigned v = missing.first();
            unsigned shown = labels.empty() ? v + 1 : labels.at(v);
            throw Error(ErrorKind::UncoveredVertex, "vertex " + std::to_string(shown) + " lies in no facet");
        }
        SimplicialComplex c;
        c.n_ = n;
        c.facets_ = maximal_faces(std::move(facets));
        if (labels.empty()) {
            c.labels_.resize(n);
            std::iota(c.labels_.begin(), c.labels_.end(), 1u);
        } else {
            c.labels_ = std::move(labels);
        }
        return c;
    }

    /// The complex {∅}.
    static SimplicialComplex empty_complex() {
        SimplicialComplex c;
        c.facets_ = {Face{}};
        return c;
    }

    /// The full simplex on n vertices.
    static SimplicialComplex simplex(unsigned n) { return from_masks(n, {Face::full(n)}); }

    bool is_empty_complex() const { return n_ == 0; }
    unsigned n_vertices() const { return n_; }
    Face vertex_set() const { return Face::full(n_); }
    const std::vector<Face>& facets() const { return facets_; }
    const std::vector<unsigned>& labels() const { return labels_; }
    unsigned label(unsigned v) const { return labels_.at(v); }

    int dim() const {
        int d = -1;
        for (Face f : facets_) d = std::max(d, f.dim());
        return d;
    }

    bool is_pure() const {
        return std::all_of(facets_.begin(), facets_.end(),
                           [&](Face f) { return f.size() == facets_.front().size(); });
    }

    bool contains(Face f) const {
        return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.subset_of(g); });
    }

    /// All faces, the empty face included, ordered by size then mask.
    std::vector<Face> faces() const {
        std::unordered_set<Face> seen;
        for (Face f : facets_) f.for_each_subset([&](Face s) { seen.insert(s); });
        std::vector<Face> out(seen.begin(), seen.end());
        std::sort(out.begin(), out.end(), [](Face a, Face b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        return out;
    }

    /// Number of faces per dimension, index k holding faces of dimension k-1.
    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> counts(static_cast<std::size_t>(dim() + 2), 0);
        for (Face f : faces()) ++counts[f.size()];
        return counts;
    }

    /// {G ∈ Δ : G ∪ F ∈ Δ, G ∩ F = ∅}, re-indexed onto the vertices it uses.
    SimplicialComplex link(Face f) const {
        if (!contains(f)) throw Error(ErrorKind::NotAFace, "face is not in the complex");
        std::vector<Face> pieces;
        Face support;
        for (Face g : facets_) {
            if (f.subset_of(g)) {
                pieces.push_back(g - f);
                support = support | (g - f);
            }
        }
        if (support.empty()) return empty_complex();
        return reindexed(support, pieces);
    }

    /// {G ∈ Δ : G ⊆ W}, re-indexed onto W.
    SimplicialComplex restriction(Face w) const {
        w = w & vertex_set();
        if (w.empty()) return empty_complex();
        std::vector<Face> pieces;
        pieces.reserve(facets_.size());
        for (Face g : facets_) pieces.push_back(g & w);
        return reindexed(w, pieces);
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    std::vector<Face> component_vertex_sets() const {
        std::vector<unsigned> parent(n_);
        std::iota(parent.begin(), parent.end(), 0u);
        auto find = [&](unsigned v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (Face f : facets_) {
            if (f.empty()) continue;
            unsigned root = find(f.first());
            f.for_each_vertex([&](unsigned v) { parent[find(v)] = root; });
        }
        std::vector<Face> groups(n_);
        for (unsigned v = 0; v < n_; ++v) groups[find(v)] = groups[find(v)].with(v);
        std::vector<Face> out;
        for (Face g : groups)
            if (!g.empty()) out.push_back(g);
        std::sort(out.begin(), out.end(), [](Face a, Face b) { return a.first() < b.first(); });
        return out;
    }

    std::vector<SimplicialComplex> connected_components() const {
        std::vector<SimplicialComplex> out;
        for (Face w : component_vertex_sets()) out.push_back(restriction(w));
        return out;
    }

    bool is_connected() const { return component_vertex_sets().size() <= 1; }

    /// Inclusion-minimal subsets of V that are not faces.
    std::vector<Face> minimal_nonfaces() const {
        std::unordered_set<Face> found;
        for (Face g : faces()) {
            for (unsigned v = 0; v < n_; ++v) {
                if (g.contains(v)) continue;
                Face candidate = g.with(v);
                if (contains(candidate) || found.count(candidate)) continue;
                bool minimal = true;
                candidate.for_each_vertex([&](unsigned u) {
                    if (minimal && !contains(candidate.without(u))) minimal = false;
                });
                if (minimal) found.insert(candidate);
            }
        }
        std::vector<Face> out(found.begin(), found.end());
        std::sort(out.begin(), out.end(), [](Face a, Face b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        return out;
    }

    /// Number of facets containing vertex v.
    unsigned facet_degree(unsigned v) const {
        return static_cast<unsigned>(std::count_if(facets_.begin(), facets_.end(), [v](Face f) { return f.contains(v); }));
    }

    /// Vertex v is sent to perm[v]; labels follow their vertices.
    SimplicialComplex permuted(std::span<const unsigned> perm) const {
        if (perm.size() != n_) throw Error(ErrorKind::DimensionMismatch, "permutation size differs from vertex count");
        if (is_empty_complex()) return *this;
        std::vector<Face> mapped;
        for (Face f : facets_) {
            Face g;
            f.for_each_vertex([&](unsigned v) { g = g.with(perm[v]); });
            mapped.push_back(g);
        }
        std::vector<unsigned> labels(n_);
        for (unsigned v = 0; v < n_; ++v) labels[perm[v]] = labels_[v];
        return from_masks(n_, std::move(mapped), std::move(labels));
    }

    /// Facets as sorted 1-based lists in original labels.
    std::vector<std::vector<unsigned>> labeled_facets() const {
        std::vector<std::vector<unsigned>> out;
        for (Face f : facets_) {
            std::vector<unsigned> lst;
            f.for_each_vertex([&](unsigned v) { lst.push_back(labels_[v]); });
            std::sort(lst.begin(), lst.end());
            out.push_back(std::move(lst));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<unsigned> labeled_vertices(Face f) const {
        std::vector<unsigned> out;
        f.for_each_vertex([&](unsigned v) { out.push_back(labels_[v]); });
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

private:
    // `pieces` are faces inside `support`; the new complex lives on support's vertices.
    SimplicialComplex reindexed(Face support, const std::vector<Face>& pieces) const {
        std::vector<unsigned> old_of_new = support.vertices();
        std::vector<unsigned> new_of_old(n_, 0);
        for (unsigned i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = i;
        std::vector<Face> mapped;
        mapped.reserve(pieces.size());
        for (Face p : pieces) {
            Face g;
            p.for_each_vertex([&](unsigned v) { g = g.with(new_of_old[v]); });
            mapped.push_back(g);
        }
        std::vector<unsigned> labels;
        for (unsigned v : old_of_new) labels.push_back(labels_[v]);
        return from_masks(static_cast<unsigned>(old_of_new.size()), std::move(mapped), std::move(labels));
    }

    unsigned n_ = 0;
    std::vector<Face> facets_;
    std::vector<unsigned> labels_;
};

/// Disjoint union; the second complex's vertices are shifted past the first's.
inline SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_empty_complex()) return b;
    if (b.is_empty_complex()) return a;
    unsigned shift = a.n_vertices();
    if (shift + b.n_vertices() > kMaxVertices) throw Error(ErrorKind::VertexOutOfRange, "union too large");
    std::vector<Face> facets = a.facets();
    for (Face f : b.facets()) facets.push_back(Face(f.bits() << shift));
    return SimplicialComplex::from_masks(shift + b.n_vertices(), std::move(facets));
}

/// The n-gon 1-2-...-n-1 (n ≥ 3).
inline SimplicialComplex polygon(unsigned n) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "an n-gon needs n >= 3");
    std::vector<Face> edges;
    for (unsigned i = 0; i < n; ++i) edges.push_back(Face::of({i, (i + 1) % n}));
    return SimplicialComplex::from_masks(n, std::move(edges));
}

/// The n-pointed path 1-2-...-n (n ≥ 2).
inline SimplicialComplex pointed_path(unsigned n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "an n-pointed path needs n >= 2");
    std::vector<Face> edges;
    for (unsigned i = 0; i + 1 < n; ++i) edges.push_back(Face::of({i, i + 1}));
    return SimplicialComplex::from_masks(n, std::move(edges));
}

}  // namespace lcisr

#endif
