#include <random>

#include <gtest/gtest.h>

#include "lcisr/enumeration.hpp"
#include "lcisr/simplicial_complex.hpp"
#include "oracles.hpp"

using namespace lcisr;

namespace {

SimplicialComplex make(unsigned n, std::vector<std::vector<unsigned>> facets) {
    return SimplicialComplex::from_facets(n, facets);
}

std::vector<std::vector<unsigned>> labeled_faces(std::vector<Face> faces) {
    std::vector<std::vector<unsigned>> out;
    for (Face f : faces) {
        std::vector<unsigned> lst;
        f.for_each_vertex([&](unsigned v) { lst.push_back(v + 1); });
        out.push_back(lst);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(FromFacets, FourPointedPath) {
    auto c = make(4, {{1, 2}, {2, 3}, {3, 4}});
    EXPECT_EQ(c.n_vertices(), 4u);
    EXPECT_EQ(c.labeled_facets(), (std::vector<std::vector<unsigned>>{{1, 2}, {2, 3}, {3, 4}}));
}

TEST(FromFacets, Point) {
    auto c = make(1, {{1}});
    EXPECT_EQ(c.dim(), 0);
    EXPECT_EQ(c.facets().size(), 1u);
}

TEST(FromFacets, KeepsOnlyMaximalMembers) {
    auto c = make(3, {{1, 2}, {1, 2, 3}});
    EXPECT_EQ(c.labeled_facets(), (std::vector<std::vector<unsigned>>{{1, 2, 3}}));
}

TEST(FromFacets, Errors) {
    try {
        make(3, {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EmptyInput);
    }
    try {
        make(4, {{1, 2}, {2, 3}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UncoveredVertex);
        EXPECT_NE(std::string(e.what()).find("vertex 4"), std::string::npos);
    }
    try {
        make(2, {{1, 3}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::VertexOutOfRange);
    }
}

TEST(Dim, Examples) {
    EXPECT_EQ(polygon(5).dim(), 1);
    EXPECT_EQ(SimplicialComplex::simplex(4).dim(), 3);
    EXPECT_EQ(make(4, {{1, 2, 3}, {4}}).dim(), 2);
    EXPECT_EQ(SimplicialComplex::empty_complex().dim(), -1);
}

TEST(IsPure, Examples) {
    EXPECT_TRUE(polygon(6).is_pure());
    EXPECT_FALSE(make(3, {{1, 2}, {3}}).is_pure());
    EXPECT_TRUE(make(6, {{1, 2, 3}, {4, 5, 6}}).is_pure());
}

TEST(Link, OfVertexInPentagonIsTwoPoints) {
    auto pentagon = polygon(5);
    auto lk = pentagon.link(Face::of({0}));
    EXPECT_EQ(lk.n_vertices(), 2u);
    EXPECT_EQ(lk.dim(), 0);
    EXPECT_EQ(lk.labeled_facets(), (std::vector<std::vector<unsigned>>{{2}, {5}}));
    EXPECT_EQ(oracle::faces_in_labels(lk), oracle::link(pentagon, Face::of({0})));
}

TEST(Link, OfEmptyFaceIsTheComplex) {
    auto c = make(5, {{1, 2, 3}, {3, 4}, {5}});
    EXPECT_EQ(c.link(Face{}), c);
}

TEST(Link, OfEdgeOfTriangle) {
    auto c = SimplicialComplex::simplex(3);
    auto lk = c.link(Face::of({0, 1}));
    EXPECT_EQ(lk.labeled_facets(), (std::vector<std::vector<unsigned>>{{3}}));
}

TEST(Link, OfFacetIsEmptyComplex) {
    auto c = make(5, {{1, 2, 3}, {3, 4}, {5}});
    for (Face f : c.facets()) EXPECT_TRUE(c.link(f).is_empty_complex());
}

TEST(Link, RejectsNonFace) {
    try {
        polygon(5).link(Face::of({0, 2}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAFace);
    }
}

TEST(Restriction, Examples) {
    auto pentagon = polygon(5);
    auto r = pentagon.restriction(Face::of({0, 1, 2}));
    EXPECT_EQ(r.labeled_facets(), (std::vector<std::vector<unsigned>>{{1, 2}, {2, 3}}));
    EXPECT_EQ(pentagon.restriction(pentagon.vertex_set()), pentagon);
    EXPECT_TRUE(pentagon.restriction(Face{}).is_empty_complex());
}

TEST(Components, Examples) {
    auto two = make(6, {{1, 2, 3}, {4, 5, 6}});
    auto parts = two.connected_components();
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[1].labels(), (std::vector<unsigned>{4, 5, 6}));
    EXPECT_EQ(polygon(5).connected_components().size(), 1u);
    EXPECT_EQ(make(4, {{1}, {2}, {3}, {4}}).connected_components().size(), 4u);
}

TEST(MinimalNonfaces, Examples) {
    EXPECT_EQ(labeled_faces(pointed_path(4).minimal_nonfaces()),
              (std::vector<std::vector<unsigned>>{{1, 3}, {1, 4}, {2, 4}}));
    EXPECT_EQ(labeled_faces(polygon(5).minimal_nonfaces()),
              (std::vector<std::vector<unsigned>>{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}}));
    EXPECT_TRUE(SimplicialComplex::simplex(5).minimal_nonfaces().empty());
}

// Exhaustive over all complexes on up to 5 vertices.
class EveryComplex : public ::testing::Test {
protected:
    static const std::vector<SimplicialComplex>& all() {
        static const std::vector<SimplicialComplex> list = [] {
            std::vector<SimplicialComplex> out;
            for (auto& level : complexes_up_to_isomorphism(5))
                for (auto& c : level) out.push_back(c);
            return out;
        }();
        return list;
    }
};

TEST_F(EveryComplex, FacesMatchBruteForce) {
    for (const auto& c : all()) {
        oracle::FaceSet got;
        for (Face f : c.faces()) got.insert(f.bits());
        EXPECT_EQ(got, oracle::faces(c));
    }
}

TEST_F(EveryComplex, LinksMatchDefinition) {
    for (const auto& c : all()) {
        EXPECT_EQ(c.link(Face{}), c);
        for (Face f : c.faces()) {
            auto lk = c.link(f);
            EXPECT_EQ(oracle::faces_in_labels(lk), oracle::link(c, f));
        }
        for (Face f : c.facets()) EXPECT_TRUE(c.link(f).is_empty_complex());
    }
}

TEST_F(EveryComplex, RestrictionNeverRaisesDimension) {
    for (const auto& c : all()) {
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << c.n_vertices()); ++w)
            EXPECT_LE(c.restriction(Face(w)).dim(), c.dim());
    }
}

TEST_F(EveryComplex, FacetRoundTrip) {
    for (const auto& c : all()) EXPECT_EQ(SimplicialComplex::from_facets(c.n_vertices(), c.labeled_facets()), c);
}

TEST_F(EveryComplex, MinimalNonfacesDetermineFaces) {
    for (const auto& c : all()) {
        auto nonfaces = c.minimal_nonfaces();
        std::set<std::uint64_t> mine;
        for (Face f : nonfaces) {
            EXPECT_GE(f.size(), 2u);
            mine.insert(f.bits());
        }
        EXPECT_EQ(mine, oracle::minimal_nonfaces(c));
        auto faces = oracle::faces(c);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << c.n_vertices()); ++s) {
            bool hits = std::any_of(nonfaces.begin(), nonfaces.end(), [s](Face f) { return f.subset_of(Face(s)); });
            EXPECT_EQ(!hits, faces.count(s) == 1);
        }
    }
}

TEST_F(EveryComplex, ComponentCountInvariantUnderRelabeling) {
    std::mt19937 rng(7);
    for (const auto& c : all()) {
        std::vector<unsigned> perm(c.n_vertices());
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(c.permuted(perm).connected_components().size(), c.connected_components().size());
    }
}

TEST(MinimalNonfaces, SixVertexSampleMatchesBruteForce) {
    auto levels = complexes_up_to_isomorphism(6);
    std::size_t step = 0;
    for (const auto& c : levels[5]) {
        if (step++ % 97 != 0) continue;
        std::set<std::uint64_t> mine;
        for (Face f : c.minimal_nonfaces()) mine.insert(f.bits());
        EXPECT_EQ(mine, oracle::minimal_nonfaces(c));
    }
}
