#ifndef LCISR_CLASSIFY_HPP
#define LCISR_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "monomial_ideal.hpp"
#include "simplicial_complex.hpp"

namespace lcisr {

/// Whether I_Δ is generated by a regular sequence.
inline bool is_ci_complex(const SimplicialComplex& complex) {
    if (complex.is_empty_complex()) return true;
    return is_complete_intersection(stanley_reisner_ideal(complex)).is_ci;
}

struct LocalCIResult {
    bool is_lci = true;
    /// First vertex (original label) whose link is not a complete intersection.
    std::optional<unsigned> witness_vertex;
};

/// Every vertex link has a complete-intersection Stanley-Reisner ideal.
inline LocalCIResult is_locally_ci(const SimplicialComplex& complex) {
    for (unsigned v = 0; v < complex.n_vertices(); ++v) {
        if (!is_ci_complex(complex.link(Face{}.with(v)))) return {false, complex.label(v)};
    }
    return {};
}

enum class ComponentKind { CompleteIntersection, Gon, PointedPath, Point, NotLCI };

inline const char* to_string(ComponentKind kind) {
    switch (kind) {
        case ComponentKind::CompleteIntersection: return "ci";
        case ComponentKind::Gon: return "gon";
        case ComponentKind::PointedPath: return "pointed_path";
        case ComponentKind::Point: return "point";
        case ComponentKind::NotLCI: return "not_lci";
    }
    return "unknown";
}

struct ComponentLabel {
    ComponentKind kind = ComponentKind::NotLCI;
    /// Vertex count for gons and pointed paths, 0 otherwise.
    unsigned size = 0;
    /// Original 1-based labels, ascending.
    std::vector<unsigned> vertices;

    friend bool operator==(const ComponentLabel&, const ComponentLabel&) = default;
};

inline void require_dimension_one(const SimplicialComplex& complex) {
    if (complex.dim() != 1)
        throw Error(ErrorKind::WrongDimension, "expected a 1-dimensional complex, got dimension " +
                                                   std::to_string(complex.dim()));
}

/// Reads a connected 1-dimensional complex as a graph: 2-regular is an n-gon,
/// two leaves and the rest of degree 2 is an n-pointed path.
inline ComponentLabel recognize_gon_or_path(const SimplicialComplex& complex) {
    require_dimension_one(complex);
    ComponentLabel label;
    label.vertices = complex.labeled_vertices(complex.vertex_set());
    if (!complex.is_connected() || !complex.is_pure()) return label;
    const unsigned n = complex.n_vertices();
    unsigned leaves = 0, middle = 0;
    for (unsigned v = 0; v < n; ++v) {
        unsigned deg = complex.facet_degree(v);
        if (deg == 1) ++leaves;
        else if (deg == 2) ++middle;
    }
    if (middle == n && n >= 3) {
        label.kind = ComponentKind::Gon;
        label.size = n;
    } else if (leaves == 2 && leaves + middle == n) {
        label.kind = ComponentKind::PointedPath;
        label.size = n;
    }
    return label;
}

enum class Dim1Class { Gon, Path, NotLCI };

inline const char* to_string(Dim1Class c) {
    switch (c) {
        case Dim1Class::Gon: return "gon";
        case Dim1Class::Path: return "path";
        case Dim1Class::NotLCI: return "not_lci";
    }
    return "unknown";
}

inline Dim1Class dim1_connected_lci_classification(const SimplicialComplex& complex) {
    switch (recognize_gon_or_path(complex).kind) {
        case ComponentKind::Gon: return Dim1Class::Gon;
        case ComponentKind::PointedPath: return Dim1Class::Path;
        default: return Dim1Class::NotLCI;
    }
}

/// Local Gorenstein property of a 1-dimensional complex: every vertex link is at most two points.
inline bool is_locally_gorenstein_dim1(const SimplicialComplex& complex) {
    require_dimension_one(complex);
    for (unsigned v = 0; v < complex.n_vertices(); ++v) {
        SimplicialComplex lk = complex.link(Face{}.with(v));
        if (lk.dim() > 0 || lk.n_vertices() > 2) return false;
    }
    return true;
}

/// Serre's S2 for K[Δ]: Δ is pure and every link of dimension ≥ 1 is connected.
inline bool is_s2(const SimplicialComplex& complex) {
    if (!complex.is_pure()) return false;
    for (Face f : complex.faces()) {
        SimplicialComplex lk = complex.link(f);
        if (lk.dim() >= 1 && !lk.is_connected()) return false;
    }
    return true;
}

/// Every link of dimension exactly 1 is a complete-intersection complex.
/// Defined for S2 complexes of dimension ≥ 2, where it is equivalent to Δ being CI.
inline bool one_dimensional_links_are_ci(const SimplicialComplex& complex) {
    if (complex.dim() < 2) throw Error(ErrorKind::PreconditionFailed, "complex must have dimension at least 2");
    if (!is_s2(complex)) throw Error(ErrorKind::PreconditionFailed, "complex must satisfy S2");
    for (Face f : complex.faces()) {
        SimplicialComplex lk = complex.link(f);
        if (lk.dim() == 1 && !is_ci_complex(lk)) return false;
    }
    return true;
}

enum class Verdict { Yes, No, Unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown_by_this_criterion";
    }
    return "unknown";
}

struct ClassificationReport {
    std::vector<ComponentLabel> components;
    bool is_connected = false;
    bool is_pure = false;
    int dim = -1;
    bool is_ci = false;
    bool is_lci = false;
    bool is_gci = false;
    bool is_s2 = false;
    std::optional<unsigned> witness_vertex;
    /// Only decided for locally complete intersection complexes.
    Verdict cohen_macaulay = Verdict::Unknown;
    Verdict buchsbaum = Verdict::Unknown;
};

/// Structure classification of a complex into CI (dim ≥ 2), gon, pointed path
/// and point components, with CM and Buchsbaum verdicts when Δ is locally CI.
inline ClassificationReport classify(const SimplicialComplex& complex) {
    ClassificationReport report;
    report.dim = complex.dim();
    report.is_pure = complex.is_pure();
    report.is_connected = complex.is_connected();
    report.is_ci = is_ci_complex(complex);
    report.is_s2 = is_s2(complex);

    bool all_labeled = true;
    for (const SimplicialComplex& part : complex.connected_components()) {
        ComponentLabel label;
        label.vertices = part.labeled_vertices(part.vertex_set());
        if (is_locally_ci(part).is_lci) {
            if (part.dim() == 0) {
                label.kind = ComponentKind::Point;
            } else if (part.dim() == 1) {
                label = recognize_gon_or_path(part);
            } else {
                label.kind = ComponentKind::CompleteIntersection;
            }
        }
        all_labeled = all_labeled && label.kind != ComponentKind::NotLCI;
        report.components.push_back(std::move(label));
    }
    report.is_lci = all_labeled;
    if (!report.is_lci) report.witness_vertex = is_locally_ci(complex).witness_vertex;
    report.is_gci = report.is_lci && report.is_pure;
    if (report.is_lci) {
        report.cohen_macaulay = (report.dim == 0 || report.is_connected) ? Verdict::Yes : Verdict::No;
        report.buchsbaum = report.is_pure ? Verdict::Yes : Verdict::No;
    }
    return report;
}

}  // namespace lcisr

#endif
