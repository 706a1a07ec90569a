#ifndef LCISR_HOMOLOGY_HPP
#define LCISR_HOMOLOGY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "face.hpp"
#include "simplicial_complex.hpp"

namespace lcisr {

/// Coefficient field: characteristic 0 means the rationals, otherwise GF(p).
class Field {
public:
    static Field rationals() { return Field(0); }

    static Field prime(std::uint32_t p) {
        if (p < 2 || p > (1u << 31)) throw Error(ErrorKind::InvalidArgument, "prime must lie in [2, 2^31]");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
        return Field(p);
    }

    std::uint32_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    std::string name() const { return p_ == 0 ? "q" : "p:" + std::to_string(p_); }

    friend bool operator==(Field, Field) = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

/// Dense integer matrix with entries in {-1, 0, 1} as produced by boundary maps.
using IntMatrix = std::vector<std::vector<int>>;

/// Rank over the rationals by fraction-free (Bareiss) elimination on exact integers.
inline std::size_t rank_rational(const IntMatrix& input) {
    using boost::multiprecision::cpp_int;
    if (input.empty()) return 0;
    const std::size_t rows = input.size(), cols = input.front().size();
    std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = input[i][j];
    cpp_int prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

/// Rank over GF(p).
inline std::size_t rank_mod_p(const IntMatrix& input, std::uint32_t p) {
    if (input.empty()) return 0;
    const std::size_t rows = input.size(), cols = input.front().size();
    const std::uint64_t mod = p;
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::int64_t v = input[i][j] % static_cast<std::int64_t>(mod);
            a[i][j] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(mod) : v);
        }
    auto power = [mod](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= mod;
        while (e) {
            if (e & 1) r = r * b % mod;
            b = b * b % mod;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        std::uint64_t inv = power(a[rank][col], mod - 2);
        for (std::size_t j = col; j < cols; ++j) a[rank][j] = a[rank][j] * inv % mod;
        for (std::size_t i = rank + 1; i < rows; ++i) {
            std::uint64_t factor = a[i][col];
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] = (a[i][j] + (mod - factor) * a[rank][j]) % mod;
        }
        ++rank;
    }
    return rank;
}

inline std::size_t matrix_rank(const IntMatrix& m, Field field) {
    return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

/// Reduced homology dimensions, indexed from -1.
struct HomologyDims {
    /// dims[k + 1] = dim H̃_k.
    std::vector<std::size_t> dims;

    std::size_t at(int k) const {
        std::size_t idx = static_cast<std::size_t>(k + 1);
        return (k < -1 || idx >= dims.size()) ? 0 : dims[idx];
    }
    bool is_zero() const {
        for (auto d : dims)
            if (d != 0) return false;
        return true;
    }
};

/// All faces of the complex generated by `facets`, grouped by cardinality.
inline std::vector<std::vector<Face>> faces_by_size(std::span<const Face> facets) {
    std::unordered_set<Face> seen;
    unsigned top = 0;
    for (Face f : facets) {
        top = std::max(top, f.size());
        f.for_each_subset([&](Face s) { seen.insert(s); });
    }
    std::vector<std::vector<Face>> out(facets.empty() ? 0 : top + 1);
    for (Face f : seen) out[f.size()].push_back(f);
    for (auto& level : out) std::sort(level.begin(), level.end());
    return out;
}

/// Boundary map from faces of size k+1 to faces of size k, rows indexed by the smaller faces.
inline IntMatrix boundary_matrix(const std::vector<Face>& higher, const std::vector<Face>& lower) {
    std::unordered_map<Face, std::size_t> row_of;
    for (std::size_t i = 0; i < lower.size(); ++i) row_of.emplace(lower[i], i);
    IntMatrix m(lower.size(), std::vector<int>(higher.size(), 0));
    for (std::size_t col = 0; col < higher.size(); ++col) {
        int sign = 1;
        higher[col].for_each_vertex([&](unsigned v) {
            m[row_of.at(higher[col].without(v))][col] = sign;
            sign = -sign;
        });
    }
    return m;
}

/// Reduced simplicial homology of the complex generated by `facets`.
/// No facets means the void complex (all zero); {∅} gives H̃_{-1} = K.
inline HomologyDims reduced_homology_dims(std::span<const Face> facets, Field field) {
    HomologyDims out;
    if (facets.empty()) return out;
    auto levels = faces_by_size(facets);
    // ranks[s] = rank of the boundary map leaving faces of size s (s ≥ 1).
    std::vector<std::size_t> ranks(levels.size() + 1, 0);
    for (std::size_t s = 1; s < levels.size(); ++s) ranks[s] = matrix_rank(boundary_matrix(levels[s], levels[s - 1]), field);
    out.dims.resize(levels.size());
    for (std::size_t s = 0; s < levels.size(); ++s) out.dims[s] = levels[s].size() - ranks[s] - ranks[s + 1];
    return out;
}

inline HomologyDims reduced_homology_dims(const SimplicialComplex& complex, Field field) {
    return reduced_homology_dims(std::span<const Face>(complex.facets()), field);
}

/// Σ (-1)^{dim F} over all faces, ∅ included at dimension -1.
inline long long reduced_euler_characteristic(std::span<const Face> facets) {
    long long chi = 0;
    auto levels = faces_by_size(facets);
    for (std::size_t s = 0; s < levels.size(); ++s) {
        long long count = static_cast<long long>(levels[s].size());
        chi += (s % 2 == 1) ? count : -count;
    }
    return chi;
}

}  // namespace lcisr

#endif
