#ifndef LCISR_LOCAL_COHOMOLOGY_HPP
#define LCISR_LOCAL_COHOMOLOGY_HPP

#include <algorithm>
#include <future>
#include <optional>
#include <span>
#include <vector>

#include "error.hpp"
#include "face.hpp"
#include "homology.hpp"
#include "monomial_ideal.hpp"
#include "simplicial_complex.hpp"

namespace lcisr {

/// A multidegree a ∈ Z^n.
struct DegreeVector {
    std::vector<int> a;

    unsigned size() const { return static_cast<unsigned>(a.size()); }

    /// G_a = {i : a_i < 0}.
    Face negative_support() const {
        Face g;
        for (unsigned i = 0; i < a.size(); ++i)
            if (a[i] < 0) g = g.with(i);
        return g;
    }

    /// Same degree complex, with every negative coordinate replaced by -1.
    DegreeVector canonical() const {
        DegreeVector out = *this;
        for (int& x : out.a) x = std::max(x, -1);
        return out;
    }

    friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
    friend auto operator<=>(const DegreeVector& x, const DegreeVector& y) { return x.a <=> y.a; }
};

/// A complex on a subset of the ambient vertices, kept by facets. It can be void
/// (no faces at all) or {∅} (facets == {∅}); the two are distinct.
struct FaceComplex {
    Face ambient;
    std::vector<Face> facets;

    bool is_void() const { return facets.empty(); }
    bool is_empty_complex() const { return facets.size() == 1 && facets.front().empty(); }

    bool contains(Face f) const {
        return std::any_of(facets.begin(), facets.end(), [f](Face g) { return f.subset_of(g); });
    }

    unsigned component_count() const {
        std::vector<Face> groups;
        for (Face f : facets) {
            if (f.empty()) continue;
            Face merged = f;
            std::vector<Face> rest;
            for (Face g : groups) {
                if (g.intersects(merged)) merged = merged | g;
                else rest.push_back(g);
            }
            rest.push_back(merged);
            groups = std::move(rest);
        }
        return static_cast<unsigned>(groups.size());
    }

    bool is_disconnected() const { return component_count() >= 2; }

    friend bool operator==(const FaceComplex&, const FaceComplex&) = default;
};

/// Masks W_m = {i ∉ G_a : ν_i(m) > a_i}; a face L ⊇ G_a of Δ survives in Δ_a
/// exactly when no W_m is contained in L.
inline std::vector<Face> witness_masks(const MonomialIdeal& gens, const DegreeVector& a) {
    std::vector<Face> out;
    out.reserve(gens.size());
    for (const Monomial& m : gens.generators()) {
        Face w;
        for (unsigned i = 0; i < a.size(); ++i)
            if (a.a[i] >= 0 && static_cast<long long>(m[i]) > a.a[i]) w = w.with(i);
        out.push_back(w);
    }
    return out;
}

/// Δ_a(I) = {L ∖ G_a : G_a ⊆ L ∈ Δ, every m ∈ G(I) has some i ∉ L with ν_i(m) > a_i}.
inline FaceComplex degree_complex(const SimplicialComplex& complex, const MonomialIdeal& gens, const DegreeVector& a) {
    const unsigned n = complex.n_vertices();
    if (gens.n_vars() != n || a.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "degree vector, ideal and complex must share the vertex count");
    const Face g = a.negative_support();
    FaceComplex out;
    out.ambient = complex.vertex_set() - g;
    if (!complex.contains(g)) return out;
    const std::vector<Face> witnesses = witness_masks(gens, a);
    auto qualifies = [&](Face l) {
        return std::none_of(witnesses.begin(), witnesses.end(), [l](Face w) { return w.subset_of(l); });
    };
    std::vector<Face> kept;
    for (Face facet : complex.facets()) {
        if (!g.subset_of(facet)) continue;
        (facet - g).for_each_subset([&](Face s) {
            if (qualifies(s | g)) kept.push_back(s);
        });
    }
    if (!kept.empty()) out.facets = maximal_faces(std::move(kept));
    return out;
}

inline HomologyDims reduced_homology_dims(const FaceComplex& c, Field field) {
    return reduced_homology_dims(std::span<const Face>(c.facets), field);
}

/// One nonzero graded piece dim H̃_k(Δ_a) feeding H^i_m(S/I^ℓ) at degree a, k = i - #G_a - 1.
struct Contribution {
    unsigned cohomological_degree = 0;
    DegreeVector degree;
    int homology_index = 0;
    std::size_t dim = 0;

    friend bool operator==(const Contribution&, const Contribution&) = default;
};

struct CohomologyPiece {
    unsigned index = 0;
    /// False when some contribution has G_a ≠ ∅ (an infinite family of degrees).
    bool finite = true;
    std::optional<std::size_t> total_dim;
    /// Sorted by degree; negative coordinates appear as -1.
    std::vector<Contribution> contributions;

    friend bool operator==(const CohomologyPiece&, const CohomologyPiece&) = default;
};

struct CohomologyReport {
    unsigned power = 1;
    Field field = Field::rationals();
    unsigned dim = 0;
    /// Pieces H^0 .. H^{d-1}; H^d is not computed.
    std::vector<CohomologyPiece> pieces;
    unsigned depth = 0;
    bool is_cm = false;

    friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

namespace detail {

/// Calls fn on every a with a_j = -1 on `negative` and a_j ∈ [0, ell-1] elsewhere.
template <class Fn>
void for_each_degree(unsigned n, Face negative, unsigned ell, Fn&& fn) {
    DegreeVector a{std::vector<int>(n, 0)};
    std::vector<unsigned> free;
    for (unsigned j = 0; j < n; ++j) {
        if (negative.contains(j)) a.a[j] = -1;
        else free.push_back(j);
    }
    while (true) {
        fn(a);
        std::size_t k = 0;
        while (k < free.size() && a.a[free[k]] == static_cast<int>(ell) - 1) a.a[free[k++]] = 0;
        if (k == free.size()) break;
        ++a.a[free[k]];
    }
}

inline std::vector<Contribution> contributions_for_faces(const SimplicialComplex& complex, const MonomialIdeal& gens,
                                                         std::span<const Face> faces, unsigned ell, unsigned d,
                                                         Field field) {
    std::vector<Contribution> out;
    for (Face f : faces) {
        for_each_degree(complex.n_vertices(), f, ell, [&](const DegreeVector& a) {
            FaceComplex da = degree_complex(complex, gens, a);
            if (da.is_void()) return;
            HomologyDims h = reduced_homology_dims(da, field);
            for (unsigned i = f.size(); i < d; ++i) {
                int k = static_cast<int>(i) - static_cast<int>(f.size()) - 1;
                if (std::size_t dim = h.at(k); dim > 0) out.push_back({i, a, k, dim});
            }
        });
    }
    return out;
}

}  // namespace detail

/// Graded pieces of H^i_m(S/I_Δ^ℓ) for i < d, read off the degree complexes Δ_a.
///
/// Degrees range over a with G_a = F ∈ Δ, a_j = -1 on F and 0 ≤ a_j ≤ ℓ-1 off F.
/// `threads` > 1 splits the faces into batches; the merged report is identical.
inline CohomologyReport cohomology(const SimplicialComplex& complex, unsigned ell, Field field, unsigned threads = 1) {
    if (ell < 1) throw Error(ErrorKind::InvalidArgument, "power must be at least 1");
    if (complex.is_empty_complex()) throw Error(ErrorKind::InvalidArgument, "complex needs a nonempty vertex set");
    const MonomialIdeal gens = power_generators(stanley_reisner_ideal(complex), ell);
    const unsigned d = static_cast<unsigned>(complex.dim() + 1);

    std::vector<Face> faces;
    for (Face f : complex.faces())
        if (f.size() < d) faces.push_back(f);

    std::vector<Contribution> all;
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(faces.size())));
    if (threads == 1) {
        all = detail::contributions_for_faces(complex, gens, faces, ell, d, field);
    } else {
        std::vector<std::future<std::vector<Contribution>>> jobs;
        const std::size_t chunk = (faces.size() + threads - 1) / threads;
        for (std::size_t start = 0; start < faces.size(); start += chunk) {
            std::span<const Face> batch(faces.data() + start, std::min(chunk, faces.size() - start));
            jobs.push_back(std::async(std::launch::async, [&, batch] {
                return detail::contributions_for_faces(complex, gens, batch, ell, d, field);
            }));
        }
        for (auto& job : jobs) {
            auto part = job.get();
            all.insert(all.end(), part.begin(), part.end());
        }
    }
    std::sort(all.begin(), all.end(), [](const Contribution& x, const Contribution& y) {
        return x.cohomological_degree != y.cohomological_degree ? x.cohomological_degree < y.cohomological_degree
                                                                : x.degree < y.degree;
    });

    CohomologyReport report;
    report.power = ell;
    report.field = field;
    report.dim = d;
    report.pieces.resize(d);
    for (unsigned i = 0; i < d; ++i) report.pieces[i].index = i;
    for (auto& c : all) report.pieces[c.cohomological_degree].contributions.push_back(std::move(c));
    report.depth = d;
    for (auto& piece : report.pieces) {
        std::size_t total = 0;
        for (const auto& c : piece.contributions) {
            if (!c.degree.negative_support().empty()) piece.finite = false;
            total += c.dim;
        }
        if (piece.finite) piece.total_dim = total;
        if (!piece.contributions.empty() && report.depth == d) report.depth = piece.index;
    }
    report.is_cm = report.depth == d;
    return report;
}

/// depth S/I_Δ^ℓ: the least i with H^i_m ≠ 0, or d when all lower pieces vanish.
inline unsigned depth(const SimplicialComplex& complex, unsigned ell, Field field) {
    return cohomology(complex, ell, field).depth;
}

/// The degree sets that make up H^1_m(S/I_Δ^ℓ).
struct H1DegreeSets {
    /// a ∈ [0, ℓ-1]^n with Δ_a disconnected.
    std::vector<DegreeVector> disconnected;
    /// Per vertex i (0-based): canonical a with a_i = -1, other entries in [0, ℓ-1], Δ_a = {∅}.
    /// A nonempty set makes H^1 of infinite length.
    std::vector<std::vector<DegreeVector>> empty_complex_by_vertex;
};

inline H1DegreeSets a_sets_for_h1(const SimplicialComplex& complex, unsigned ell, Field field) {
    if (ell < 1) throw Error(ErrorKind::InvalidArgument, "power must be at least 1");
    const unsigned n = complex.n_vertices();
    const MonomialIdeal gens = power_generators(stanley_reisner_ideal(complex), ell);
    H1DegreeSets out;
    detail::for_each_degree(n, Face{}, ell, [&](const DegreeVector& a) {
        FaceComplex da = degree_complex(complex, gens, a);
        if (reduced_homology_dims(da, field).at(0) > 0) out.disconnected.push_back(a);
    });
    out.empty_complex_by_vertex.resize(n);
    for (unsigned i = 0; i < n; ++i) {
        detail::for_each_degree(n, Face{}.with(i), ell, [&](const DegreeVector& a) {
            if (degree_complex(complex, gens, a).is_empty_complex()) out.empty_complex_by_vertex[i].push_back(a);
        });
    }
    return out;
}

}  // namespace lcisr

#endif
