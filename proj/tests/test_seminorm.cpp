#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l1hom/errors.hpp"
#include "l1hom/measure.hpp"
#include "l1hom/subdivision.hpp"
#include "support.hpp"

using namespace l1hom;
using testutil::simplex;
using testutil::unit_chain;

namespace {

HomologyClass fundamental_class(const SimplicialComplex& x, Chain& storage) {
  storage = fundamental_cycle(x);
  return HomologyClass{&x, storage, x.dim()};
}

}  // namespace

TEST_CASE("seminorm of the tetrahedron boundary fundamental class is 4") {
  SimplicialComplex sphere = testutil::load_complex("boundary_delta3.json");
  Chain z;
  HomologyClass alpha = fundamental_class(sphere, z);

  SeminormResult res = l1_seminorm(alpha);
  // The cycle space in degree 2 is one-dimensional and there are no
  // 3-simplices, so the only representatives are multiples of z.
  CHECK(res.value == 4);
  CHECK(l1_norm(res.optimal_chain) == 4);
  CHECK(boundary(res.optimal_chain).is_zero());
  auto witness = is_homologous(sphere, res.optimal_chain, z);
  CHECK(witness.has_value());
}

TEST_CASE("seminorm of a boundary class is zero") {
  SimplicialComplex disk = testutil::load_complex("delta2.json");
  Chain z = boundary(unit_chain(2, {0, 1, 2}));
  SeminormResult res = l1_seminorm(HomologyClass{&disk, z, 1});
  CHECK(res.value == 0);
  CHECK(res.optimal_chain.is_zero());
}

TEST_CASE("non-cycles are rejected") {
  SimplicialComplex disk = testutil::load_complex("delta2.json");
  Chain c = unit_chain(1, {0, 1});
  CHECK_THROWS_AS(l1_seminorm(HomologyClass{&disk, c, 1}), NotACycle);
  CHECK_THROWS_AS(dual_certificate(HomologyClass{&disk, c, 1}), NotACycle);
}

TEST_CASE("dual certificate for the tetrahedron boundary") {
  SimplicialComplex sphere = testutil::load_complex("boundary_delta3.json");
  Chain z;
  HomologyClass alpha = fundamental_class(sphere, z);

  auto cert = dual_certificate(alpha);
  REQUIRE(cert.has_value());
  CHECK(cert->pairing == 1);
  CHECK(cert->sup_norm == Rat(1, 4));
  // C_3 = 0, so every cochain is a cocycle; the optimal certificate is the
  // sign pattern of the fundamental cycle scaled by 1/4.
  for (int i = 0; i < sphere.count(2); ++i) {
    Rat zi = z.coeff(sphere.simplex(2, i));
    CHECK(cert->cochain.values[i] == zi / 4);
  }
  CHECK(verify_certificate(cert->cochain, alpha) == 4);
}

TEST_CASE("certificates of boundary classes do not exist") {
  SimplicialComplex disk = testutil::load_complex("delta2.json");
  Chain z = boundary(unit_chain(2, {0, 1, 2}));
  HomologyClass alpha{&disk, z, 1};
  CHECK(!dual_certificate(alpha).has_value());
  // The if-and-only-if direction: every cocycle pairs to zero with the
  // class.
  for (const auto& phi : cocycle_basis(disk, 1)) {
    CHECK(evaluate(phi, disk, z) == 0);
  }
}

TEST_CASE("verify_certificate rejects tampered certificates") {
  SimplicialComplex sphere = testutil::load_complex("boundary_delta3.json");
  Chain z;
  HomologyClass alpha = fundamental_class(sphere, z);
  auto cert = dual_certificate(alpha);
  REQUIRE(cert.has_value());

  Cochain doubled = cert->cochain;
  for (auto& v : doubled.values) v *= 2;
  CHECK_THROWS_AS(verify_certificate(doubled, alpha), PairingNotOne);

  SimplicialComplex torus = testutil::load_complex("torus7.json");
  auto basis = homology_basis(torus, 1);
  REQUIRE(basis.size() == 2);
  auto tcert = dual_certificate(basis[0]);
  REQUIRE(tcert.has_value());
  Cochain broken = tcert->cochain;
  broken.values[0] += 1;  // no longer vanishes on all boundaries
  CHECK_THROWS_AS(verify_certificate(broken, basis[0]), NotACocycle);
}

TEST_CASE("strong duality on the bundled torus classes") {
  SimplicialComplex torus = testutil::load_complex("torus7.json");
  for (const auto& alpha : homology_basis(torus, 1)) {
    SeminormResult primal = l1_seminorm(alpha);
    CHECK(primal.value > 0);
    auto cert = dual_certificate(alpha);
    REQUIRE(cert.has_value());
    // 1/||phi||_inf equals the primal value exactly: zero duality gap.
    CHECK(Rat(1) / cert->sup_norm == primal.value);
    CHECK(verify_certificate(cert->cochain, alpha) == primal.value);
  }
}

TEST_CASE("weak duality holds for arbitrary rescaled cocycles") {
  SimplicialComplex torus = testutil::load_complex("torus7.json");
  auto basis = homology_basis(torus, 1);
  REQUIRE(!basis.empty());
  testutil::Rng rng(23);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    const HomologyClass& alpha = basis[rng.uniform(0, 1)];
    Cochain phi = rng.cocycle(torus, 1);
    Rat pairing = evaluate(phi, torus, alpha.cycle);
    if (pairing == 0) continue;
    for (auto& v : phi.values) v /= pairing;
    Rat bound = verify_certificate(phi, alpha);
    CHECK(bound <= l1_seminorm(alpha).value);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("seminorm scales with the class") {
  SimplicialComplex torus = testutil::load_complex("torus7.json");
  auto basis = homology_basis(torus, 1);
  testutil::Rng rng(29);
  for (const auto& alpha : basis) {
    Rat base = l1_seminorm(alpha).value;
    for (int t = 0; t < 3; ++t) {
      Rat q = rng.rat(true);
      HomologyClass scaled{&torus, alpha.cycle * q, 1};
      CHECK(l1_seminorm(scaled).value == rat_abs(q) * base);
    }
  }
}

TEST_CASE("seminorm vanishes exactly on boundary classes") {
  SimplicialComplex torus = testutil::load_complex("torus7.json");
  testutil::Rng rng(31);
  for (int t = 0; t < 25; ++t) {
    int k = rng.uniform(0, 2);
    Chain z = rng.cycle(torus, k);
    HomologyClass alpha{&torus, z, k};
    bool zero = l1_seminorm(alpha).value == 0;
    bool bounding = is_homologous(torus, z, Chain(k)).has_value();
    CHECK(zero == bounding);
  }
}

TEST_CASE("simplicial maps do not increase the seminorm") {
  SimplicialComplex torus = testutil::load_complex("torus7.json");
  testutil::Rng rng(37);
  for (int t = 0; t < 15; ++t) {
    int k = rng.uniform(0, 2);
    Chain z = rng.cycle(torus, k);
    VertexMap g = rng.self_map(torus);
    Chain gz = pushforward_chain(z, g);
    if (k > 0) REQUIRE(boundary(gz).is_zero());
    Rat before = l1_seminorm(HomologyClass{&torus, z, k}).value;
    Rat after = l1_seminorm(HomologyClass{&torus, gz, k}).value;
    CHECK(after <= before);
  }
}

TEST_CASE("genus-2 fundamental class certifies the 4g-4 lower bound") {
  SimplicialComplex genus2 = testutil::load_complex("genus2.json");
  Chain z;
  HomologyClass alpha = fundamental_class(genus2, z);
  SeminormResult res = l1_seminorm(alpha);
  CHECK(res.value >= 4);
  auto cert = dual_certificate(alpha);
  REQUIRE(cert.has_value());
  CHECK(Rat(1) / cert->sup_norm == res.value);
}

TEST_CASE("volume upper bounds via subdivision") {
  SimplicialComplex sphere = testutil::load_complex("boundary_delta3.json");
  CHECK(simplicial_volume_upper(sphere, 0) == std::vector<Rat>{Rat(4)});

  SimplicialComplex torus = testutil::load_complex("torus7.json");
  // One subdivision: every triangle splits into 6, and with no 3-simplices
  // the fundamental class has a unique representative of norm 6 * 14.
  std::vector<Rat> values = simplicial_volume_upper(torus, 1);
  CHECK(values == std::vector<Rat>{Rat(14), Rat(84)});
  for (const Rat& v : values) CHECK(v >= 0);

  SimplicialComplex rp2 = testutil::load_complex("projective_plane6.json");
  CHECK_THROWS_AS(simplicial_volume_upper(rp2, 0), NotOrientable);
  SimplicialComplex disk = testutil::load_complex("delta2.json");
  CHECK_THROWS_AS(simplicial_volume_upper(disk, 0), NotClosed);
}

TEST_CASE("cocycle basis pairs to zero with every boundary") {
  SimplicialComplex genus2 = testutil::load_complex("genus2.json");
  testutil::Rng rng(41);
  for (int k = 0; k + 1 <= genus2.dim(); ++k) {
    auto basis = cocycle_basis(genus2, k);
    for (int t = 0; t < 10; ++t) {
      Chain b = rng.boundary_chain(genus2, k);
      for (const auto& phi : basis) CHECK(evaluate(phi, genus2, b) == 0);
    }
  }
}
