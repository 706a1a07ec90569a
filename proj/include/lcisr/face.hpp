#ifndef LCISR_FACE_HPP
#define LCISR_FACE_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace lcisr {

/// Maximum number of vertices a complex (or variables an ideal) may have.
inline constexpr unsigned kMaxVertices = 64;

/// A set of 0-based vertex indices stored as a 64-bit mask.
class Face {
public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

    static Face of(std::initializer_list<unsigned> vertices) {
        Face f;
        for (unsigned v : vertices) f = f.with(v);
        return f;
    }

    /// {0, ..., n-1}
    static constexpr Face full(unsigned n) {
        return Face(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
    /// dim F = #F - 1; the empty face has dimension -1.
    constexpr int dim() const { return static_cast<int>(size()) - 1; }

    constexpr bool contains(unsigned v) const { return (bits_ >> v) & 1u; }
    constexpr bool subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }

    constexpr Face with(unsigned v) const { return Face(bits_ | (std::uint64_t{1} << v)); }
    constexpr Face without(unsigned v) const { return Face(bits_ & ~(std::uint64_t{1} << v)); }

    constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
    constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
    /// Set difference.
    constexpr Face operator-(Face o) const { return Face(bits_ & ~o.bits_); }

    /// Smallest member; undefined on the empty face.
    constexpr unsigned first() const { return static_cast<unsigned>(std::countr_zero(bits_)); }

    std::vector<unsigned> vertices() const {
        std::vector<unsigned> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<unsigned>(std::countr_zero(b)));
        return out;
    }

    template <class Fn>
    void for_each_vertex(Fn&& fn) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            fn(static_cast<unsigned>(std::countr_zero(b)));
    }

    /// Calls fn on every subset of this face, the empty set included.
    template <class Fn>
    void for_each_subset(Fn&& fn) const {
        std::uint64_t s = 0;
        while (true) {
            fn(Face(s));
            if (s == bits_) break;
            s = (s - bits_) & bits_;
        }
    }

    friend constexpr bool operator==(Face, Face) = default;
    friend constexpr auto operator<=>(Face a, Face b) { return a.bits_ <=> b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace lcisr

template <>
struct std::hash<lcisr::Face> {
    std::size_t operator()(lcisr::Face f) const noexcept { return std::hash<std::uint64_t>{}(f.bits()); }
};

#endif
