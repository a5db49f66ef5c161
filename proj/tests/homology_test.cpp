#include <catch2/catch_amalgamated.hpp>

#include "cactusreg/homology.hpp"
#include "cactusreg/ideal.hpp"
#include "cactusreg/linalg.hpp"

using namespace cactusreg;

TEST_CASE("field parsing") {
    REQUIRE(parse_field("2").prime == 2);
    REQUIRE(parse_field("32003").prime == 32003);
    REQUIRE(parse_field("Q").is_rational());
    REQUIRE(parse_field("q").is_rational());
    REQUIRE(parse_field("0").is_rational());
    REQUIRE_THROWS_AS(parse_field("7"), ParseError);
    REQUIRE(FieldSpec{2}.describe() == "GF(2)");
    REQUIRE(FieldSpec{0}.describe() == "Q");
}

TEST_CASE("matrix rank over three fields") {
    // columns of a 3x3 matrix with rank 2: c2 = -c0 - c1
    std::vector<IntColumn> cols = {
        {{0, 1}, {1, 1}},            // e0 + e1
        {{1, 1}, {2, 1}},            // e1 + e2
        {{0, -1}, {1, -2}, {2, -1}}  // -(c0 + c1)
    };
    for (const char* f : {"2", "32003", "Q"}) REQUIRE(matrix_rank(cols, parse_field(f)) == 2);
    REQUIRE(matrix_rank({}, FieldSpec{}) == 0);
    // mod 2 the sign flip vanishes: e0+e1, e0-e1 agree, rank drops
    std::vector<IntColumn> signy = {{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}};
    REQUIRE(matrix_rank(signy, parse_field("2")) == 1);
    REQUIRE(matrix_rank(signy, parse_field("Q")) == 2);
}

TEST_CASE("stanley_reisner faces") {
    // nonfaces {1,2} on 2 vertices: faces are {}, {1}, {2}
    SquarefreeMonomialIdeal I{2, {0b11}};
    SimplicialComplex c = stanley_reisner(I);
    REQUIRE(c.is_face(0b00));
    REQUIRE(c.is_face(0b01));
    REQUIRE(c.is_face(0b10));
    REQUIRE_FALSE(c.is_face(0b11));
    REQUIRE_THROWS_AS(stanley_reisner(SquarefreeMonomialIdeal{2, {0}}), GraphError);
}

TEST_CASE("faces_by_size levels") {
    SimplicialComplex c = stanley_reisner(SquarefreeMonomialIdeal{3, {0b011}});
    auto levels = faces_by_size(c);
    REQUIRE(levels.size() == 3);          // sizes 0, 1, 2
    REQUIRE(levels[0] == std::vector<std::uint64_t>{0});
    REQUIRE(levels[1].size() == 3);
    REQUIRE(levels[2] == std::vector<std::uint64_t>{0b101, 0b110});
    // restricting to {1,2} keeps the nonface and drops the size-2 faces
    auto restricted = faces_by_size(induced_subcomplex(c, 0b011));
    REQUIRE(restricted.size() == 2);
    REQUIRE(restricted[1].size() == 2);
    // void complex: the empty set itself is a nonface
    SimplicialComplex v{1, {0}, };
    REQUIRE(faces_by_size(v).empty());
}

TEST_CASE("reduced homology of two points") {
    // complex on {1,2} with edge removed: H~_0 has rank 1
    SimplicialComplex c = stanley_reisner(SquarefreeMonomialIdeal{2, {0b11}});
    auto ranks = reduced_homology_ranks(c, 0b11, FieldSpec{});
    REQUIRE(ranks.size() >= 2);
    REQUIRE(ranks[0] == 0);  // H~_{-1}
    REQUIRE(ranks[1] == 1);  // H~_0
}

TEST_CASE("reduced homology of a hollow triangle") {
    // nonface {1,2,3}: the boundary of a 2-simplex, a circle
    SimplicialComplex c = stanley_reisner(SquarefreeMonomialIdeal{3, {0b111}});
    for (const char* f : {"2", "32003", "Q"}) {
        auto ranks = reduced_homology_ranks(c, 0b111, parse_field(f));
        REQUIRE(ranks == std::vector<long>{0, 0, 1});  // only H~_1
    }
}

TEST_CASE("reduced homology of a hollow square") {
    // vertices 1..4, nonfaces {1,3} and {2,4}: a 4-gon, again a circle
    SimplicialComplex c = stanley_reisner(SquarefreeMonomialIdeal{4, {0b0101, 0b1010}});
    auto ranks = reduced_homology_ranks(c, 0b1111, FieldSpec{});
    REQUIRE(ranks == std::vector<long>{0, 0, 1});
}

TEST_CASE("irrelevant complex has H~ in degree -1") {
    // every vertex is a nonface; only the empty face remains
    SimplicialComplex c = stanley_reisner(SquarefreeMonomialIdeal{2, {0b01, 0b10}});
    auto ranks = reduced_homology_ranks(c, 0b11, FieldSpec{});
    REQUIRE(ranks == std::vector<long>{1});
    // void complex: no homology at all
    auto none = reduced_homology_ranks(SimplicialComplex{1, {0}}, 0b1, FieldSpec{});
    REQUIRE(none.empty());
}

TEST_CASE("restricting to W ignores outside vertices") {
    // hollow triangle on {1,2,3} with a cone vertex 4 attached to all:
    // full complex is contractible-ish over W = all, but W = {1,2,3}
    // recovers the circle
    SimplicialComplex c = stanley_reisner(SquarefreeMonomialIdeal{4, {0b0111}});
    auto full = reduced_homology_ranks(c, 0b1111, FieldSpec{});
    for (int r : full) REQUIRE(r == 0);
    auto circle = reduced_homology_ranks(c, 0b0111, FieldSpec{});
    REQUIRE(circle == std::vector<long>{0, 0, 1});
}

TEST_CASE("top homology degree scan") {
    SimplicialComplex c = stanley_reisner(SquarefreeMonomialIdeal{3, {0b111}});
    auto levels = faces_by_size(c);
    REQUIRE(top_homology_degree_at_least(levels, FieldSpec{}, -1) == 1);
    // floor above the answer skips everything
    REQUIRE(top_homology_degree_at_least(levels, FieldSpec{}, 5) == kNoHomology);
}
