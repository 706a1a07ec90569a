#ifndef LCISR_ENUMERATION_HPP
#define LCISR_ENUMERATION_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "face.hpp"
#include "simplicial_complex.hpp"

namespace lcisr {

/// Isomorphism-invariant encoding of a complex: the vertex count followed by the
/// lexicographically least sorted facet list over all relabelings.
using CanonicalForm = std::vector<std::uint64_t>;

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& form) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto x : form) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

namespace detail {

// Colour refinement: a vertex's colour is refined by the multiset, over facets
// containing it, of (facet size, sorted colours of the facet).
inline std::vector<unsigned> refine_colours(const SimplicialComplex& complex) {
    const unsigned n = complex.n_vertices();
    std::vector<unsigned> colour(n, 0);
    unsigned classes = 1;
    while (true) {
        std::vector<std::pair<std::vector<std::uint64_t>, unsigned>> signatures(n);
        for (unsigned v = 0; v < n; ++v) {
            std::vector<std::vector<unsigned>> around;
            for (Face f : complex.facets()) {
                if (!f.contains(v)) continue;
                std::vector<unsigned> cs;
                f.for_each_vertex([&](unsigned u) { cs.push_back(colour[u]); });
                std::sort(cs.begin(), cs.end());
                around.push_back(std::move(cs));
            }
            std::sort(around.begin(), around.end());
            std::vector<std::uint64_t> sig{colour[v]};
            for (const auto& cs : around) {
                sig.push_back(0xffffffffull + cs.size());
                sig.insert(sig.end(), cs.begin(), cs.end());
            }
            signatures[v] = {std::move(sig), v};
        }
        std::vector<std::vector<std::uint64_t>> distinct;
        for (const auto& s : signatures) distinct.push_back(s.first);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (unsigned v = 0; v < n; ++v)
            colour[v] = static_cast<unsigned>(std::lower_bound(distinct.begin(), distinct.end(), signatures[v].first) -
                                              distinct.begin());
        if (distinct.size() == classes) break;
        classes = static_cast<unsigned>(distinct.size());
    }
    return colour;
}

}  // namespace detail

/// Canonical form under vertex permutation. Vertices are first split by an
/// invariant colouring; only orderings compatible with the colour classes are tried.
inline CanonicalForm canonical_form(const SimplicialComplex& complex) {
    const unsigned n = complex.n_vertices();
    if (n == 0) return {0, 0};
    std::vector<unsigned> colour = detail::refine_colours(complex);
    unsigned classes = *std::max_element(colour.begin(), colour.end()) + 1;
    std::vector<std::vector<unsigned>> cells(classes);
    for (unsigned v = 0; v < n; ++v) cells[colour[v]].push_back(v);

    std::vector<unsigned> offset(classes, 0);
    for (unsigned c = 1; c < classes; ++c) offset[c] = offset[c - 1] + static_cast<unsigned>(cells[c - 1].size());

    CanonicalForm best;
    std::vector<unsigned> perm(n);
    std::vector<std::uint64_t> image(complex.facets().size());
    auto evaluate = [&] {
        for (std::size_t i = 0; i < complex.facets().size(); ++i) {
            std::uint64_t bits = 0;
            complex.facets()[i].for_each_vertex([&](unsigned v) { bits |= std::uint64_t{1} << perm[v]; });
            image[i] = bits;
        }
        std::sort(image.begin(), image.end());
        if (best.empty() || std::lexicographical_compare(image.begin(), image.end(), best.begin() + 1, best.end())) {
            best.assign(1, n);
            best.insert(best.end(), image.begin(), image.end());
        }
    };
    // Walk the product of per-cell orderings.
    std::function<void(unsigned)> assign = [&](unsigned c) {
        if (c == classes) {
            evaluate();
            return;
        }
        std::vector<unsigned> order = cells[c];
        do {
            for (unsigned k = 0; k < order.size(); ++k) perm[order[k]] = offset[c] + k;
            assign(c + 1);
        } while (std::next_permutation(order.begin(), order.end()));
    };
    assign(0);
    return best;
}

inline bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    return canonical_form(a) == canonical_form(b);
}

/// Calls fn on every subcomplex of Δ (including {∅}, excluding the void complex)
/// whose faces have at most `max_face_size` vertices; each is passed as its face list.
template <class Fn>
void for_each_subcomplex(const SimplicialComplex& complex, unsigned max_face_size, Fn&& fn) {
    std::vector<Face> faces;
    for (Face f : complex.faces())
        if (f.size() <= max_face_size) faces.push_back(f);
    std::unordered_map<Face, std::size_t> index;
    for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], i);
    std::vector<char> chosen(faces.size(), 0);
    std::vector<Face> current;
    chosen[0] = 1;  // faces[0] is ∅
    current.push_back(faces[0]);
    std::function<void(std::size_t)> step = [&](std::size_t i) {
        if (i == faces.size()) {
            fn(static_cast<const std::vector<Face>&>(current));
            return;
        }
        step(i + 1);
        bool boundary_present = true;
        faces[i].for_each_vertex([&](unsigned v) {
            if (boundary_present && !chosen[index.at(faces[i].without(v))]) boundary_present = false;
        });
        if (!boundary_present) return;
        chosen[i] = 1;
        current.push_back(faces[i]);
        step(i + 1);
        current.pop_back();
        chosen[i] = 0;
    };
    step(1);
}

/// Representatives of every isomorphism class of simplicial complexes on exactly
/// k vertices, for k = 1..max_vertices (result[k-1]); optionally capped in dimension.
///
/// A complex on k+1 vertices is the restriction Δ' to the first k vertices plus
/// the cone v * link(v), where link(v) is any subcomplex of Δ'; every class
/// therefore arises from some class on k vertices.
inline std::vector<std::vector<SimplicialComplex>> complexes_up_to_isomorphism(unsigned max_vertices,
                                                                                int max_dim = 63) {
    if (max_vertices < 1 || max_vertices > 12)
        throw Error(ErrorKind::InvalidArgument, "exhaustive enumeration supports 1..12 vertices");
    std::vector<std::vector<SimplicialComplex>> levels;
    levels.push_back({SimplicialComplex::simplex(1)});
    const unsigned link_cap = static_cast<unsigned>(std::max(0, max_dim));
    for (unsigned k = 1; k < max_vertices; ++k) {
        std::unordered_map<CanonicalForm, std::size_t, CanonicalFormHash> seen;
        std::vector<SimplicialComplex> next;
        for (const SimplicialComplex& base : levels.back()) {
            for_each_subcomplex(base, link_cap, [&](const std::vector<Face>& link_faces) {
                std::vector<Face> facets = base.facets();
                for (Face g : link_faces) facets.push_back(g.with(k));
                SimplicialComplex candidate = SimplicialComplex::from_masks(k + 1, std::move(facets));
                auto form = canonical_form(candidate);
                if (seen.emplace(std::move(form), next.size()).second) next.push_back(std::move(candidate));
            });
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

/// Calls fn on every labeled complex on {0..n-1} (n ≤ 6) in which all vertices are faces.
template <class Fn>
void for_each_labeled_complex(unsigned n, Fn&& fn) {
    if (n < 1 || n > 6) throw Error(ErrorKind::InvalidArgument, "labeled enumeration supports 1..6 vertices");
    std::vector<Face> subsets;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
        if (Face(s).size() >= 2) subsets.push_back(Face(s));
    std::stable_sort(subsets.begin(), subsets.end(), [](Face a, Face b) { return a.size() < b.size(); });
    std::vector<char> in(std::size_t{1} << n, 0);
    for (unsigned v = 0; v < n; ++v) in[std::size_t{1} << v] = 1;
    std::function<void(std::size_t)> step = [&](std::size_t i) {
        if (i == subsets.size()) {
            std::vector<Face> faces;
            for (std::uint64_t s = 1; s < in.size(); ++s)
                if (in[s]) faces.push_back(Face(s));
            fn(SimplicialComplex::from_masks(n, std::move(faces)));
            return;
        }
        step(i + 1);
        Face f = subsets[i];
        bool ok = true;
        f.for_each_vertex([&](unsigned v) { ok = ok && in[f.without(v).bits()]; });
        if (!ok) return;
        in[f.bits()] = 1;
        step(i + 1);
        in[f.bits()] = 0;
    };
    step(0);
}

}  // namespace lcisr

#endif
