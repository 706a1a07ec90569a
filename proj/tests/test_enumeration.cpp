#include <random>
#include <unordered_set>

#include <gtest/gtest.h>

#include "lcisr/enumeration.hpp"

using namespace lcisr;

TEST(Enumeration, ComplexCountsUpToIsomorphism) {
    auto levels = complexes_up_to_isomorphism(6);
    std::vector<std::size_t> counts;
    for (const auto& l : levels) counts.push_back(l.size());
    // simplicial complexes on exactly n vertices, n = 1..6
    EXPECT_EQ(counts, (std::vector<std::size_t>{1, 2, 5, 20, 180, 16143}));
}

TEST(Enumeration, GraphCountsUpToIsomorphism) {
    auto levels = complexes_up_to_isomorphism(7, 1);
    std::vector<std::size_t> counts;
    for (const auto& l : levels) counts.push_back(l.size());
    EXPECT_EQ(counts, (std::vector<std::size_t>{1, 2, 4, 11, 34, 156, 1044}));
}

TEST(Enumeration, LabeledComplexesCollapseToIsomorphismClasses) {
    auto levels = complexes_up_to_isomorphism(5);
    for (unsigned n = 1; n <= 5; ++n) {
        std::unordered_set<CanonicalForm, CanonicalFormHash> forms;
        std::size_t labeled = 0;
        for_each_labeled_complex(n, [&](const SimplicialComplex& c) {
            ++labeled;
            forms.insert(canonical_form(c));
        });
        EXPECT_EQ(forms.size(), levels[n - 1].size()) << n;
        std::unordered_set<CanonicalForm, CanonicalFormHash> reps;
        for (const auto& c : levels[n - 1]) reps.insert(canonical_form(c));
        EXPECT_EQ(reps, forms);
        EXPECT_GE(labeled, forms.size());
    }
}

TEST(Enumeration, LabeledCountsOnFourVertices) {
    // abstract complexes on {1..4} using every vertex, counted by subsets of the power set directly
    std::size_t direct = 0;
    for (std::uint32_t family = 0; family < (1u << 11); ++family) {
        std::vector<std::uint64_t> sets;
        for (std::uint64_t s = 0, k = 0; s < 16; ++s)
            if (std::popcount(s) >= 2) {
                if ((family >> k) & 1) sets.push_back(s);
                ++k;
            }
        auto in = [&](std::uint64_t s) {
            return std::popcount(s) <= 1 || std::find(sets.begin(), sets.end(), s) != sets.end();
        };
        bool closed = true;
        for (auto s : sets)
            for (unsigned v = 0; v < 4; ++v)
                if ((s >> v) & 1) closed = closed && in(s & ~(std::uint64_t{1} << v));
        if (closed) ++direct;
    }
    std::size_t enumerated = 0;
    for_each_labeled_complex(4, [&](const SimplicialComplex&) { ++enumerated; });
    EXPECT_EQ(enumerated, direct);
}

TEST(CanonicalForm, InvariantUnderPermutation) {
    std::mt19937 rng(2);
    auto levels = complexes_up_to_isomorphism(6);
    for (std::size_t i = 0; i < levels[5].size(); i += 37) {
        const auto& c = levels[5][i];
        std::vector<unsigned> perm(6);
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(canonical_form(c), canonical_form(c.permuted(perm)));
        EXPECT_TRUE(isomorphic(c, c.permuted(perm)));
    }
}

TEST(CanonicalForm, DistinguishesNonIsomorphic) {
    EXPECT_FALSE(isomorphic(polygon(6), disjoint_union(polygon(3), polygon(3))));
    EXPECT_FALSE(isomorphic(pointed_path(4), SimplicialComplex::from_facets(4, {{1, 2}, {1, 3}, {1, 4}})));
    EXPECT_TRUE(isomorphic(pointed_path(4), SimplicialComplex::from_facets(4, {{3, 1}, {1, 4}, {4, 2}})));
}

TEST(Enumeration, RejectsBadSizes) {
    EXPECT_THROW(complexes_up_to_isomorphism(0), Error);
    EXPECT_THROW(for_each_labeled_complex(7, [](const SimplicialComplex&) {}), Error);
}
