#include <doctest.h>

#include "trimlab/embedding.hpp"
#include "trimlab/errors.hpp"
#include "trimlab/graph.hpp"

using namespace trimlab;

namespace {

std::vector<Rational> nums(std::initializer_list<int> v) {
  return std::vector<Rational>(v.begin(), v.end());
}

int face_count(const WeightedGraph& g, const PlaneEmbedding& e) {
  return static_cast<int>(trace_faces(g, e).faces.size());
}

}  // namespace

TEST_CASE("straight-line drawings") {
  const WeightedGraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto e = embedding_from_coordinates(tri, nums({0, 1, 0}), nums({0, 0, 1}));
  CHECK(face_count(tri, e) == 2);
  CHECK(e.outer.size() == 1);
  CHECK(e.nested.empty());

  // Square with one diagonal: 2 bounded faces plus the outer one.
  const WeightedGraph sq(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  CHECK(face_count(sq, embedding_from_coordinates(sq, nums({0, 1, 1, 0}), nums({0, 0, 1, 1}))) ==
        3);

  // Both diagonals cross.
  const WeightedGraph x(4, {{0, 2}, {1, 3}});
  CHECK_THROWS_WITH_AS(embedding_from_coordinates(x, nums({0, 1, 1, 0}), nums({0, 0, 1, 1})),
                       "edges {0,2} and {1,3} cross", StructuralError);

  const WeightedGraph p2(3, {{0, 1}});
  CHECK_THROWS_AS(embedding_from_coordinates(p2, nums({0, 2, 1}), nums({0, 0, 0})),
                  StructuralError);
  CHECK_THROWS_AS(embedding_from_coordinates(p2, nums({0, 0, 1}), nums({0, 0, 0})),
                  StructuralError);
  CHECK_THROWS_AS(embedding_from_coordinates(p2, nums({0, 1}), nums({0, 0})), StructuralError);
}

TEST_CASE("faces satisfy Euler's formula per component") {
  for (int rows = 1; rows <= 4; ++rows) {
    for (int cols = 1; cols <= 4; ++cols) {
      const WeightedGraph g = grid_graph(rows, cols);
      std::vector<Rational> xs, ys;
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          xs.emplace_back(c);
          ys.emplace_back(r);
        }
      }
      const auto e = embedding_from_coordinates(g, xs, ys);
      const int expected = g.edge_count() == 0 ? 0 : g.edge_count() - g.vertex_count() + 2;
      CHECK(face_count(g, e) == expected);
    }
  }
}

TEST_CASE("rotation-system search") {
  const auto k4 = find_planar_embedding(complete_graph(4));
  CHECK(face_count(complete_graph(4), k4) == 4);

  const auto w = find_planar_embedding(wheel_graph(5));
  CHECK(face_count(wheel_graph(5), w) == 6);

  CHECK_THROWS_AS(find_planar_embedding(complete_graph(5)), StructuralError);
  std::vector<std::pair<int, int>> k33;
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) k33.emplace_back(a, b);
  }
  CHECK_THROWS_AS(find_planar_embedding(WeightedGraph(6, k33)), StructuralError);
  CHECK_THROWS_AS(find_planar_embedding(path_graph(kEmbeddingSearchLimit + 1)), SizeGuardError);

  // Two components each get an outer dart.
  const WeightedGraph two(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  CHECK(find_planar_embedding(two).outer.size() == 2);
}

TEST_CASE("inconsistent rotation systems are rejected") {
  const WeightedGraph k4 = complete_graph(4);
  PlaneEmbedding e = find_planar_embedding(k4);
  // Swapping two neighbours at one vertex of K4 makes the genus positive.
  std::swap(e.rotation[0][1], e.rotation[0][2]);
  CHECK_THROWS_AS(trace_faces(k4, e), StructuralError);

  PlaneEmbedding missing = find_planar_embedding(k4);
  missing.rotation[1].pop_back();
  CHECK_THROWS_AS(trace_faces(k4, missing), StructuralError);

  PlaneEmbedding bad_outer = find_planar_embedding(k4);
  bad_outer.outer = {{0, 0}};
  CHECK_THROWS_AS(trace_faces(k4, bad_outer), StructuralError);
}
