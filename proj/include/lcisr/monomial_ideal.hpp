#ifndef LCISR_MONOMIAL_IDEAL_HPP
#define LCISR_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "face.hpp"
#include "simplicial_complex.hpp"

namespace lcisr {

/// X_1^{e_1} ... X_n^{e_n}, stored as its exponent vector.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {}

    static Monomial one(unsigned n) { return Monomial(std::vector<std::uint32_t>(n, 0)); }

    /// Product of the variables in `f` (0-based), each to the first power.
    static Monomial squarefree(unsigned n, Face f) {
        Monomial m = one(n);
        f.for_each_vertex([&](unsigned v) { m.exps_.at(v) = 1; });
        return m;
    }

    /// Parses `x1*x3^2` style text (1-based variable indices). "1" is the unit.
    static Monomial parse(std::string_view text, unsigned n) {
        Monomial m = one(n);
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        };
        auto read_int = [&]() -> std::uint64_t {
            skip_ws();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw Error(ErrorKind::InvalidArgument, "expected a number in monomial '" + std::string(text) + "'");
            std::uint64_t value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
                if (value > 1'000'000) throw Error(ErrorKind::InvalidArgument, "number too large in monomial");
                ++pos;
            }
            return value;
        };
        skip_ws();
        if (text.substr(pos) == "1") return m;
        while (true) {
            skip_ws();
            if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'X'))
                throw Error(ErrorKind::InvalidArgument, "expected 'x<k>' in monomial '" + std::string(text) + "'");
            ++pos;
            std::uint64_t var = read_int();
            if (var < 1 || var > n)
                throw Error(ErrorKind::VertexOutOfRange,
                            "variable x" + std::to_string(var) + " outside x1..x" + std::to_string(n));
            std::uint64_t power = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                power = read_int();
            }
            m.exps_[var - 1] += static_cast<std::uint32_t>(power);
            skip_ws();
            if (pos == text.size()) break;
            if (text[pos] != '*')
                throw Error(ErrorKind::InvalidArgument, "unexpected character in monomial '" + std::string(text) + "'");
            ++pos;
        }
        return m;
    }

    unsigned n_vars() const { return static_cast<unsigned>(exps_.size()); }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint32_t operator[](unsigned i) const { return exps_[i]; }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto e : exps_) d += e;
        return d;
    }

    Face support() const {
        Face f;
        for (unsigned i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0) f = f.with(i);
        return f;
    }

    bool is_squarefree() const {
        return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        if (other.exps_.size() != exps_.size()) throw Error(ErrorKind::DimensionMismatch, "variable counts differ");
        Monomial out = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
        return out;
    }

    /// Multiplies by X_{var} (0-based).
    Monomial times_variable(unsigned var) const {
        Monomial out = *this;
        ++out.exps_.at(var);
        return out;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!out.empty()) out += '*';
            out += 'x' + std::to_string(i + 1);
            if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
        }
        return out.empty() ? "1" : out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Canonical generator order: lexicographically larger exponent vectors first
    /// (x1^2*x3^2 before x1^2*x3*x4).
    friend bool lex_before(const Monomial& a, const Monomial& b) { return a.exps_ > b.exps_; }

private:
    std::vector<std::uint32_t> exps_;
};

/// A monomial ideal given by its minimal generating set G(I).
class MonomialIdeal {
public:
    explicit MonomialIdeal(unsigned n_vars, std::vector<Monomial> gens = {}) : n_(n_vars) {
        for (const auto& g : gens) {
            if (g.n_vars() != n_) throw Error(ErrorKind::DimensionMismatch, "generator has wrong variable count");
            if (g.degree() == 0) throw Error(ErrorKind::InvalidArgument, "the unit cannot be a generator");
        }
        gens_ = minimize(std::move(gens));
    }

    unsigned n_vars() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }

    bool is_squarefree() const {
        return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
    }

    /// Whether some generator divides m.
    bool contains(const Monomial& m) const {
        if (m.n_vars() != n_) throw Error(ErrorKind::DimensionMismatch, "monomial has wrong variable count");
        return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
    }

    /// Whether X_i * m ∈ I for every variable X_i, i.e. m ∈ I : (X_1, ..., X_n).
    bool in_colon_by_max_ideal(const Monomial& m) const {
        for (unsigned i = 0; i < n_; ++i)
            if (!contains(m.times_variable(i))) return false;
        return true;
    }

    /// Least generator degree.
    std::uint64_t indeg() const {
        if (gens_.empty()) throw Error(ErrorKind::ZeroIdeal, "the zero ideal has no initial degree");
        std::uint64_t q = gens_.front().degree();
        for (const auto& g : gens_) q = std::min(q, g.degree());
        return q;
    }

    std::uint64_t max_generator_degree() const {
        std::uint64_t q = 0;
        for (const auto& g : gens_) q = std::max(q, g.degree());
        return q;
    }

    /// Product ideal I * J, reduced to minimal generators.
    MonomialIdeal operator*(const MonomialIdeal& other) const {
        if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "variable counts differ");
        std::vector<Monomial> products;
        products.reserve(gens_.size() * other.gens_.size());
        for (const auto& a : gens_)
            for (const auto& b : other.gens_) products.push_back(a * b);
        return MonomialIdeal(n_, std::move(products));
    }

    /// G(I^ℓ), built as I^{k+1} = I^k * I with pruning after every step.
    MonomialIdeal power(unsigned ell) const {
        if (ell == 0) throw Error(ErrorKind::InvalidArgument, "power must be at least 1");
        MonomialIdeal acc = *this;
        for (unsigned k = 1; k < ell; ++k) acc = acc * *this;
        return acc;
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    static std::vector<Monomial> minimize(std::vector<Monomial> gens) {
        // Low degree first: a generator can only be divided by one of no larger degree.
        std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
            return a.degree() != b.degree() ? a.degree() < b.degree() : lex_before(a, b);
        });
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> kept;
        for (auto& g : gens) {
            bool divisible = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
            if (!divisible) kept.push_back(std::move(g));
        }
        std::sort(kept.begin(), kept.end(), [](const Monomial& a, const Monomial& b) { return lex_before(a, b); });
        return kept;
    }

    unsigned n_;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal power_generators(const MonomialIdeal& ideal, unsigned ell) { return ideal.power(ell); }

/// I_Δ: one squarefree generator per minimal non-face.
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    if (complex.is_empty_complex())
        throw Error(ErrorKind::InvalidArgument, "the complex {∅} has no Stanley-Reisner ideal over a vertex set");
    std::vector<Monomial> gens;
    for (Face f : complex.minimal_nonfaces()) gens.push_back(Monomial::squarefree(complex.n_vertices(), f));
    return MonomialIdeal(complex.n_vertices(), std::move(gens));
}

/// The complex Δ with I_Δ = I; faces are the sets supporting no generator.
inline SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal) {
    const unsigned n = ideal.n_vars();
    std::vector<Face> supports;
    for (const auto& g : ideal.generators()) {
        if (!g.is_squarefree()) throw Error(ErrorKind::NotSquarefree, "generator " + g.to_string() + " is not squarefree");
        if (g.degree() < 2)
            throw Error(ErrorKind::DegreeOneGenerator, "generator " + g.to_string() + " has degree one");
        supports.push_back(g.support());
    }
    // Facets are complements of the minimal transversals of the generator supports.
    std::vector<Face> transversals{Face{}};
    for (Face edge : supports) {
        std::vector<Face> next;
        for (Face t : transversals) {
            if (t.intersects(edge)) {
                next.push_back(t);
            } else {
                edge.for_each_vertex([&](unsigned v) { next.push_back(t.with(v)); });
            }
        }
        // Keep the inclusion-minimal ones.
        std::sort(next.begin(), next.end(), [](Face a, Face b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        transversals.clear();
        for (Face t : next) {
            bool dominated = std::any_of(transversals.begin(), transversals.end(), [t](Face s) { return s.subset_of(t); });
            if (!dominated) transversals.push_back(t);
        }
    }
    std::vector<Face> facets;
    for (Face t : transversals) facets.push_back(Face::full(n) - t);
    return SimplicialComplex::from_masks(n, std::move(facets));
}

/// Result of complete-intersection detection. When `is_ci`, `blocks` lists the
/// disjoint variable supports (1-based) of the generators.
struct CompleteIntersection {
    bool is_ci = false;
    std::vector<std::vector<unsigned>> blocks;
};

/// A squarefree monomial ideal is a complete intersection iff its minimal
/// generators have pairwise disjoint supports.
inline CompleteIntersection is_complete_intersection(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw Error(ErrorKind::NotSquarefree, "complete-intersection test needs a squarefree ideal");
    CompleteIntersection out;
    Face used;
    for (const auto& g : ideal.generators()) {
        Face s = g.support();
        if (s.intersects(used)) return CompleteIntersection{};
        used = used | s;
        std::vector<unsigned> block;
        s.for_each_vertex([&](unsigned v) { block.push_back(v + 1); });
        out.blocks.push_back(std::move(block));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    out.is_ci = true;
    return out;
}

/// Searches monomials with every exponent ≤ max_exponent for one outside I that
/// lies in I : m; such a monomial spans a socle element of S/I, so depth S/I = 0.
/// Candidates are tried in increasing degree, ties in canonical order.
inline std::optional<Monomial> find_socle_witness(const MonomialIdeal& ideal, std::uint32_t max_exponent) {
    const unsigned n = ideal.n_vars();
    std::vector<Monomial> candidates;
    std::vector<std::uint32_t> e(n, 0);
    while (true) {
        Monomial m(e);
        if (!ideal.contains(m) && ideal.in_colon_by_max_ideal(m)) candidates.push_back(m);
        unsigned i = 0;
        while (i < n && e[i] == max_exponent) e[i++] = 0;
        if (i == n) break;
        ++e[i];
    }
    if (candidates.empty()) return std::nullopt;
    return *std::min_element(candidates.begin(), candidates.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() != b.degree() ? a.degree() < b.degree() : lex_before(a, b);
    });
}

}  // namespace lcisr

#endif
