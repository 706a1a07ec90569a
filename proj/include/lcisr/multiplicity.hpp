#ifndef LCISR_MULTIPLICITY_HPP
#define LCISR_MULTIPLICITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "classify.hpp"
#include "error.hpp"
#include "monomial_ideal.hpp"
#include "simplicial_complex.hpp"

namespace lcisr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Numerical invariants of S/I_Δ.
struct IdealNumerics {
    unsigned n = 0;          ///< number of variables
    unsigned d = 0;          ///< Krull dimension, dim Δ + 1
    unsigned c = 0;          ///< codimension n - d
    std::optional<unsigned> q;  ///< initial degree; absent for the zero ideal
    unsigned e = 0;          ///< multiplicity: facets of maximal dimension
};

inline IdealNumerics numerics(const SimplicialComplex& complex) {
    if (complex.is_empty_complex()) throw Error(ErrorKind::InvalidArgument, "numerics need a nonempty vertex set");
    IdealNumerics out;
    out.n = complex.n_vertices();
    out.d = static_cast<unsigned>(complex.dim() + 1);
    out.c = out.n - out.d;
    for (Face f : complex.facets())
        if (f.size() == out.d) ++out.e;
    auto nonfaces = complex.minimal_nonfaces();
    if (!nonfaces.empty()) {
        unsigned q = nonfaces.front().size();
        for (Face f : nonfaces) q = std::min(q, f.size());
        out.q = q;
    }
    return out;
}

/// e(S/I_Δ^ℓ) = e · C(c+ℓ-1, c).
inline BigInt power_multiplicity(std::uint64_t e, std::uint64_t c, std::uint64_t ell) {
    if (e < 1 || ell < 1) throw Error(ErrorKind::InvalidArgument, "need e >= 1 and power >= 1");
    return BigInt(e) * binomial(c + ell - 1, c);
}

/// Right-hand side of the multiplicity lower bound for a Buchsbaum S/I:
/// C(c+q-2, c) + Σ_{i=1}^{d-1} C(d-1, i-1) · dim H^i_m(S/I).
/// `cohomology_dims[i-1]` holds dim H^i_m for i = 1..d-1; nullopt marks infinite length.
inline BigInt gy_lower_bound(std::uint64_t c, std::uint64_t q, std::uint64_t d,
                             const std::vector<std::optional<BigInt>>& cohomology_dims) {
    if (c < 2 || q < 2 || d < 1) throw Error(ErrorKind::PreconditionFailed, "need c >= 2, q >= 2, d >= 1");
    if (cohomology_dims.size() != d - 1)
        throw Error(ErrorKind::DimensionMismatch, "expected d-1 local cohomology dimensions");
    BigInt bound = binomial(c + q - 2, c);
    for (std::uint64_t i = 1; i < d; ++i) {
        const auto& h = cohomology_dims[i - 1];
        if (!h) throw Error(ErrorKind::InfiniteCohomology, "H^" + std::to_string(i) + " has infinite length");
        bound += binomial(d - 1, i - 1) * *h;
    }
    return bound;
}

/// f(ℓ) = C(c+qℓ-2, c) / C(c+ℓ-1, c): the least multiplicity e(S/I_Δ) compatible
/// with S/I_Δ^ℓ being Buchsbaum.
inline Rational buchsbaum_power_bound(std::uint64_t c, std::uint64_t q, std::uint64_t ell) {
    if (c < 2 || q < 2 || ell < 1) throw Error(ErrorKind::PreconditionFailed, "need c >= 2, q >= 2, power >= 1");
    return Rational(binomial(c + q * ell - 2, c), binomial(c + ell - 1, c));
}

enum class ScreenVerdict { RuledOut, Inconclusive };

inline const char* to_string(ScreenVerdict v) {
    return v == ScreenVerdict::RuledOut ? "RULED_OUT" : "INCONCLUSIVE";
}

struct ScreenRow {
    std::uint64_t power = 0;
    Rational bound;
    ScreenVerdict verdict = ScreenVerdict::Inconclusive;
};

/// For ℓ = 1..max_power: RULED_OUT when e(S/I_Δ) < f(ℓ), which excludes S/I_Δ^ℓ
/// being Buchsbaum; INCONCLUSIVE otherwise (ties included).
inline std::vector<ScreenRow> screen_buchsbaum_powers(const SimplicialComplex& complex, std::uint64_t max_power) {
    if (max_power < 1) throw Error(ErrorKind::InvalidArgument, "max power must be at least 1");
    IdealNumerics num = numerics(complex);
    if (num.c < 2) throw Error(ErrorKind::PreconditionFailed, "screening needs codimension c >= 2");
    if (!num.q || *num.q < 2) throw Error(ErrorKind::PreconditionFailed, "screening needs initial degree q >= 2");
    std::vector<ScreenRow> rows;
    for (std::uint64_t ell = 1; ell <= max_power; ++ell) {
        ScreenRow row;
        row.power = ell;
        row.bound = buchsbaum_power_bound(num.c, *num.q, ell);
        row.verdict = Rational(num.e) < row.bound ? ScreenVerdict::RuledOut : ScreenVerdict::Inconclusive;
        rows.push_back(std::move(row));
    }
    return rows;
}

struct CIMultiplicity {
    bool holds = false;       ///< e ≤ 2^d
    BigInt e;                 ///< multiplicity from the facet count
    BigInt block_product;     ///< h_1 ⋯ h_c over the generator degrees
    unsigned d = 0;
};

/// For a CI complex: e(K[Δ]) = h_1 ⋯ h_c and e ≤ 2^d.
inline CIMultiplicity ci_multiplicity_bound(const SimplicialComplex& complex) {
    auto ci = is_complete_intersection(stanley_reisner_ideal(complex));
    if (!ci.is_ci) throw Error(ErrorKind::NotCI, "complex is not a complete intersection");
    IdealNumerics num = numerics(complex);
    CIMultiplicity out;
    out.d = num.d;
    out.e = num.e;
    out.block_product = 1;
    for (const auto& block : ci.blocks) out.block_product *= block.size();
    out.holds = out.e <= (BigInt(1) << num.d);
    return out;
}

inline bool ci_multiplicity_bound_holds(const SimplicialComplex& complex) {
    return ci_multiplicity_bound(complex).holds;
}

/// e(K[Δ]) < 2^c for pure, locally CI, non-CI complexes.
inline bool lci_strict_bound_holds(const SimplicialComplex& complex) {
    if (!complex.is_pure()) throw Error(ErrorKind::PreconditionFailed, "complex must be pure");
    if (!is_locally_ci(complex).is_lci) throw Error(ErrorKind::PreconditionFailed, "complex must be locally CI");
    if (is_ci_complex(complex)) throw Error(ErrorKind::PreconditionFailed, "complex must not be CI");
    IdealNumerics num = numerics(complex);
    return BigInt(num.e) < (BigInt(1) << num.c);
}

}  // namespace lcisr

#endif
