#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quiverfan/schofield.hpp"
#include "support/examples.hpp"

using namespace quiverfan;

namespace {

Quiver random_quiver(std::mt19937& rng, int max_n = 4, int max_mult = 3) {
  std::uniform_int_distribution<int> nv(1, max_n);
  int n = nv(rng);
  std::uniform_int_distribution<int> mult(0, max_mult);
  std::vector<std::array<int, 3>> arrows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int m = mult(rng);
      if (m > 0) arrows.push_back({i, j, m});
    }
  return Quiver(n, arrows);
}

DimVector random_dv(std::mt19937& rng, int n, int max_coord = 2,
                    bool nonzero = false) {
  std::uniform_int_distribution<int> coord(0, max_coord);
  DimVector d;
  for (int i = 0; i < n; ++i) d.coords.push_back(coord(rng));
  if (nonzero && d.is_zero()) d.coords[0] = 1;
  return d;
}

}  // namespace

TEST_CASE("generic subdims of the 3-Kronecker quiver") {
  SchofieldCache c(qftest::kronecker3());
  auto gen = c.generic_subdims(DimVector{1, 1});
  REQUIRE(gen.size() == 3);
  CHECK(gen[0] == DimVector{0, 0});
  CHECK(gen[1] == DimVector{0, 1});
  CHECK(gen[2] == DimVector{1, 1});

  CHECK(c.is_generic_subdim(DimVector{0, 1}, DimVector{1, 1}));
  CHECK(!c.is_generic_subdim(DimVector{1, 0}, DimVector{1, 1}));
  CHECK(c.is_generic_subdim(DimVector{1, 1}, DimVector{1, 1}));
  CHECK_THROWS_AS(c.is_generic_subdim(DimVector{2, 0}, DimVector{1, 1}),
                  std::invalid_argument);
}

TEST_CASE("arrowless quiver: every subdimension vector is generic") {
  SchofieldCache c(qftest::arrowless2());
  auto gen = c.generic_subdims(DimVector{1, 1});
  CHECK(gen.size() == 4);
}

TEST_CASE("generic subdims match the independent top-down oracle") {
  std::mt19937 rng(23);
  for (int it = 0; it < 60; ++it) {
    Quiver q = random_quiver(rng);
    SchofieldCache c(q);
    qftest::GenericOracle oracle(q);
    DimVector d = random_dv(rng, q.vertex_count(), 2);
    CHECK(c.generic_subdims(d) == oracle.generic_subdims(d));
  }
}

TEST_CASE("0 and d are always generic") {
  std::mt19937 rng(31);
  for (int it = 0; it < 50; ++it) {
    Quiver q = random_quiver(rng);
    SchofieldCache c(q);
    DimVector d = random_dv(rng, q.vertex_count(), 3);
    const auto& gen = c.generic_subdims(d);
    DimVector zero;
    zero.coords.assign(d.coords.size(), 0);
    CHECK(std::find(gen.begin(), gen.end(), zero) != gen.end());
    CHECK(std::find(gen.begin(), gen.end(), d) != gen.end());
  }
}

TEST_CASE("ext_generic values on the 3-Kronecker quiver") {
  SchofieldCache c(qftest::kronecker3());
  CHECK(c.ext_generic(DimVector{0, 1}, DimVector{1, 0}) == 0);
  CHECK(c.ext_generic(DimVector{1, 0}, DimVector{0, 1}) == 3);
  CHECK(c.ext_generic(DimVector{1, 0}, DimVector{0, 2}) == 6);
}

TEST_CASE("ext linearity and the saturation of generic embeddings") {
  std::mt19937 rng(41);
  for (int it = 0; it < 60; ++it) {
    Quiver q = random_quiver(rng);
    SchofieldCache c(q);
    DimVector d = random_dv(rng, q.vertex_count(), 2);
    DimVector e = random_dv(rng, q.vertex_count(), 2);
    for (int k : {2, 3}) {
      CHECK(k * c.ext_generic(d, e) == c.ext_generic(d, k * e));
      CHECK(k * c.ext_generic(d, e) == c.ext_generic(k * d, e));
    }
    // e generic in d implies ke generic in kd
    for (const DimVector& g : c.generic_subdims(d))
      for (int k : {2, 3})
        CHECK(c.is_generic_subdim(k * g, k * d));
  }
}

TEST_CASE("membership test equals vanishing of ext(e, d-e)") {
  std::mt19937 rng(43);
  for (int it = 0; it < 60; ++it) {
    Quiver q = random_quiver(rng);
    SchofieldCache c(q);
    DimVector d = random_dv(rng, q.vertex_count(), 2);
    for (const DimVector& e : subdim_vectors(d, false, false)) {
      bool member = c.is_generic_subdim(e, d);
      bool ext0 = c.ext_generic(e, d - e) == 0;
      CHECK(member == ext0);
    }
  }
}

TEST_CASE("Schur root test") {
  SchofieldCache k(qftest::kronecker3());
  CHECK(k.is_schur_root(DimVector{1, 1}));

  SchofieldCache a(qftest::arrowless2());
  CHECK(!a.is_schur_root(DimVector{1, 1}));

  SchofieldCache f(qftest::flag_quiver());
  CHECK(f.is_schur_root(DimVector{1, 2, 1}));

  CHECK_THROWS_AS(k.is_schur_root(DimVector{0, 0}), std::invalid_argument);
}

TEST_CASE("free-function wrappers agree with the cache") {
  Quiver q = qftest::kronecker3();
  SchofieldCache c(q);
  DimVector d{1, 1};
  CHECK(generic_subdims(q, d) == c.generic_subdims(d));
  CHECK(is_generic_subdim(q, DimVector{0, 1}, d));
  CHECK(ext_generic(q, DimVector{1, 0}, DimVector{0, 1}) == 3);
  CHECK(is_schur_root(q, d));
}
