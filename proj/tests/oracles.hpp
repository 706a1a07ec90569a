#ifndef LCISR_TESTS_ORACLES_HPP
#define LCISR_TESTS_ORACLES_HPP

// Brute-force reference computations used only by the tests. Each one follows a
// definition directly and shares no code path with the routine it checks beyond
// the plain data types.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcisr/face.hpp"
#include "lcisr/monomial_ideal.hpp"
#include "lcisr/simplicial_complex.hpp"

namespace oracle {

using lcisr::Face;
using lcisr::Monomial;
using lcisr::MonomialIdeal;
using lcisr::SimplicialComplex;
using FaceSet = std::set<std::uint64_t>;

/// Every subset of V contained in some facet, found by scanning all 2^n subsets.
inline FaceSet faces(const SimplicialComplex& c) {
    FaceSet out;
    if (c.is_empty_complex()) return {0};
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << c.n_vertices()); ++s) {
        for (Face f : c.facets())
            if ((s & ~f.bits()) == 0) {
                out.insert(s);
                break;
            }
    }
    return out;
}

/// Face set of a complex expressed in the labels of `c` (1-based label -> bit label-1).
inline FaceSet faces_in_labels(const SimplicialComplex& c) {
    FaceSet out;
    for (std::uint64_t s : faces(c)) {
        std::uint64_t mapped = 0;
        for (unsigned v = 0; v < c.n_vertices(); ++v)
            if ((s >> v) & 1) mapped |= std::uint64_t{1} << (c.label(v) - 1);
        out.insert(mapped);
    }
    return out;
}

/// {G : G ∩ F = ∅, G ∪ F ∈ Δ} by definition; faces reported in labels (bit label-1).
inline FaceSet link(const SimplicialComplex& c, Face f) {
    FaceSet all = faces(c), out;
    for (std::uint64_t g : all)
        if ((g & f.bits()) == 0 && all.count(g | f.bits())) {
            std::uint64_t mapped = 0;
            for (unsigned v = 0; v < c.n_vertices(); ++v)
                if ((g >> v) & 1) mapped |= std::uint64_t{1} << (c.label(v) - 1);
            out.insert(mapped);
        }
    return out;
}

/// Subsets of V outside Δ all of whose proper subsets lie in Δ.
inline std::set<std::uint64_t> minimal_nonfaces(const SimplicialComplex& c) {
    FaceSet all = faces(c);
    std::set<std::uint64_t> out;
    const std::uint64_t full = (std::uint64_t{1} << c.n_vertices()) - 1;
    for (std::uint64_t s = 0; s <= full; ++s) {
        if (all.count(s)) continue;
        bool minimal = true;
        for (std::uint64_t t = (s - 1) & s; minimal; t = (t - 1) & s) {
            if (!all.count(t)) minimal = false;
            if (t == 0) break;
        }
        if (minimal) out.insert(s);
    }
    return out;
}

/// Every product of ℓ generators (with repetition), reduced to the minimal ones
/// by an all-pairs divisibility scan.
inline std::vector<Monomial> power_by_expansion(const MonomialIdeal& ideal, unsigned ell) {
    const auto& g = ideal.generators();
    std::vector<Monomial> products;
    if (g.empty()) return products;
    std::vector<std::size_t> pick(ell, 0);
    while (true) {
        Monomial m = Monomial::one(ideal.n_vars());
        for (auto k : pick) m = m * g[k];
        products.push_back(m);
        // next non-decreasing index tuple
        int pos = static_cast<int>(ell) - 1;
        while (pos >= 0 && pick[pos] == g.size() - 1) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (std::size_t k = pos + 1; k < ell; ++k) pick[k] = pick[pos];
    }
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < products.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < products.size() && keep; ++j) {
            if (products[j] == products[i]) {
                if (j < i) keep = false;
            } else if (products[j].divides(products[i])) {
                keep = false;
            }
        }
        if (keep) minimal.push_back(products[i]);
    }
    return minimal;
}

/// m ∈ I^ℓ iff some product of ℓ generators divides m.
inline bool in_power_by_expansion(const MonomialIdeal& ideal, unsigned ell, const Monomial& m) {
    for (const auto& p : power_by_expansion(ideal, ell))
        if (p.divides(m)) return true;
    return false;
}

/// Rank by ordinary Gaussian elimination over exact rationals.
inline std::size_t rational_rank(std::vector<std::vector<boost::multiprecision::cpp_rational>> a) {
    std::size_t rank = 0;
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            boost::multiprecision::cpp_rational factor = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Rank over GF(2) by XOR elimination.
inline std::size_t gf2_rank(std::vector<std::vector<int>> a) {
    std::size_t rank = 0;
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    for (auto& row : a)
        for (auto& x : row) x &= 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != rank && a[i][col])
                for (std::size_t j = col; j < cols; ++j) a[i][j] ^= a[rank][j];
        ++rank;
    }
    return rank;
}

/// Reduced homology of a face set (must include ∅ unless void); index k+1 holds H̃_k.
/// `characteristic` is 0 (rationals) or 2.
inline std::vector<std::size_t> reduced_homology(const FaceSet& face_set, unsigned characteristic) {
    if (face_set.empty()) return {};
    unsigned top = 0;
    for (auto f : face_set) top = std::max(top, static_cast<unsigned>(std::popcount(f)));
    std::vector<std::vector<std::uint64_t>> by_size(top + 1);
    for (auto f : face_set) by_size[std::popcount(f)].push_back(f);
    std::vector<std::size_t> ranks(top + 2, 0);
    for (unsigned s = 1; s <= top; ++s) {
        const auto& hi = by_size[s];
        const auto& lo = by_size[s - 1];
        std::vector<std::vector<int>> m(lo.size(), std::vector<int>(hi.size(), 0));
        for (std::size_t c = 0; c < hi.size(); ++c) {
            int sign = 1;
            for (unsigned v = 0; v < 64; ++v) {
                if (!((hi[c] >> v) & 1)) continue;
                std::uint64_t sub = hi[c] & ~(std::uint64_t{1} << v);
                auto r = static_cast<std::size_t>(std::find(lo.begin(), lo.end(), sub) - lo.begin());
                m[r][c] = sign;
                sign = -sign;
            }
        }
        if (characteristic == 2) {
            ranks[s] = gf2_rank(m);
        } else {
            std::vector<std::vector<boost::multiprecision::cpp_rational>> q(m.size());
            for (std::size_t r = 0; r < m.size(); ++r)
                for (int x : m[r]) q[r].push_back(x);
            ranks[s] = rational_rank(q);
        }
    }
    std::vector<std::size_t> dims(top + 1);
    for (unsigned s = 0; s <= top; ++s) dims[s] = by_size[s].size() - ranks[s] - ranks[s + 1];
    return dims;
}

inline std::size_t homology_at(const std::vector<std::size_t>& dims, int k) {
    auto idx = static_cast<std::size_t>(k + 1);
    return (k < -1 || idx >= dims.size()) ? 0 : dims[idx];
}

/// depth K[Δ] from links: H^i_m(K[Δ]) ≠ 0 iff H̃_{i-#F-1}(link F) ≠ 0 for some F ∈ Δ.
inline unsigned reisner_depth(const SimplicialComplex& c, unsigned characteristic) {
    const unsigned d = static_cast<unsigned>(c.dim() + 1);
    unsigned depth = d;
    for (std::uint64_t f : faces(c)) {
        auto dims = reduced_homology(link(c, Face(f)), characteristic);
        for (int k = -1; k + 1 < static_cast<int>(dims.size()); ++k) {
            if (homology_at(dims, k) == 0) continue;
            unsigned i = static_cast<unsigned>(k + 1 + std::popcount(f));
            depth = std::min(depth, i);
        }
    }
    return depth;
}

/// Δ_a straight from the definition: scan every face L of Δ with G_a ⊆ L and test
/// condition (*) literally against every generator of I^ℓ. Works for any integer a.
inline FaceSet degree_complex(const SimplicialComplex& c, const std::vector<Monomial>& gens, const std::vector<int>& a) {
    const unsigned n = c.n_vertices();
    std::uint64_t g = 0;
    for (unsigned i = 0; i < n; ++i)
        if (a[i] < 0) g |= std::uint64_t{1} << i;
    FaceSet out;
    for (std::uint64_t l : faces(c)) {
        if ((g & ~l) != 0) continue;
        bool ok = true;
        for (const auto& m : gens) {
            bool witnessed = false;
            for (unsigned i = 0; i < n && !witnessed; ++i)
                if (!((l >> i) & 1) && static_cast<long long>(m[i]) > a[i]) witnessed = true;
            if (!witnessed) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(l & ~g);
    }
    return out;
}

/// λ(S_P / I^ℓ S_P) for the minimal prime P of the facet `facet`: invert the facet
/// variables (set their exponents to 0 in every generator of I^ℓ) and count the
/// monomials in the remaining variables outside the localized ideal inside a box
/// large enough to contain all of them. Returns nullopt when the count does not
/// stabilize inside the box.
inline std::optional<std::uint64_t> local_length(const SimplicialComplex& c, unsigned ell, Face facet) {
    const unsigned n = c.n_vertices();
    MonomialIdeal ideal = lcisr::stanley_reisner_ideal(c);
    std::vector<Monomial> local;
    for (const auto& m : power_by_expansion(ideal, ell)) {
        std::vector<std::uint32_t> e = m.exponents();
        for (unsigned i = 0; i < n; ++i)
            if (facet.contains(i)) e[i] = 0;
        local.push_back(Monomial(e));
    }
    std::vector<unsigned> free;
    for (unsigned i = 0; i < n; ++i)
        if (!facet.contains(i)) free.push_back(i);
    const std::uint32_t box = ell + 1;
    std::uint64_t count = 0;
    bool touches_box_edge = false;
    std::vector<std::uint32_t> e(n, 0);
    while (true) {
        Monomial m(e);
        bool inside = std::any_of(local.begin(), local.end(), [&](const Monomial& g) { return g.divides(m); });
        if (!inside) {
            ++count;
            for (unsigned i : free)
                if (e[i] == box) touches_box_edge = true;
        }
        std::size_t k = 0;
        while (k < free.size() && e[free[k]] == box) e[free[k++]] = 0;
        if (k == free.size()) break;
        ++e[free[k]];
    }
    if (touches_box_edge) return std::nullopt;
    return count;
}

}  // namespace oracle

#endif
