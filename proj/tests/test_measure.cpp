#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l1hom/errors.hpp"
#include "support.hpp"

using namespace l1hom;
using testutil::simplex;
using testutil::unit_chain;

TEST_CASE("include_chain sends simplices to atomic measures") {
  MeasureChain mu = include_chain(unit_chain(1, {0, 1}));
  CHECK(mu.masses.size() == 1);
  CHECK(mu.mass(simplex({0, 1})) == 1);
  CHECK(total_variation(mu) == 1);

  Chain c(1);
  c.add(simplex({0, 1}), Rat(2));
  c.add(simplex({1, 2}), Rat(-3));
  MeasureChain m2 = include_chain(c);
  CHECK(m2.mass(simplex({0, 1})) == 2);
  CHECK(m2.mass(simplex({1, 2})) == -3);
  CHECK(total_variation(m2) == 5);
}

TEST_CASE("total variation is the positive part minus the negative part") {
  MeasureChain mu(1);
  mu.add(simplex({0, 1}), Rat(3, 2));
  mu.add(simplex({1, 2}), Rat(-1, 2));
  CHECK(total_variation(mu) == 2);
  CHECK(total_variation(MeasureChain(1)) == 0);
}

TEST_CASE("total variation of included chains equals the l1 norm") {
  SimplicialComplex torus = testutil::load_complex("torus7.json");
  testutil::Rng rng(43);
  for (int t = 0; t < 300; ++t) {
    Chain c = rng.chain(torus, rng.uniform(0, 2));
    CHECK(total_variation(include_chain(c)) == l1_norm(c));
  }
}

TEST_CASE("pushforward of atoms") {
  SimplicialComplex disk = testutil::load_complex("delta2.json");
  VertexMap identity{{0, 0}, {1, 1}, {2, 2}};
  MeasureChain mu = include_chain(unit_chain(1, {0, 1}));
  CHECK(pushforward(mu, identity) == mu);

  // g maps [0,1] and [0,2] onto the same edge with the same orientation;
  // opposite masses cancel and the total variation drops from 2 to 0.
  VertexMap fold{{0, 0}, {1, 1}, {2, 1}};
  MeasureChain pair(1);
  pair.add(simplex({0, 1}), Rat(1));
  pair.add(simplex({0, 2}), Rat(-1));
  CHECK(total_variation(pair) == 2);
  MeasureChain pushed = pushforward(pair, fold);
  CHECK(pushed.is_zero());

  // Degenerate images are dropped with their mass.
  VertexMap collapse{{0, 0}, {1, 0}, {2, 0}};
  CHECK(pushforward(pair, collapse).is_zero());
}

TEST_CASE("pushforward never increases the total variation") {
  SimplicialComplex torus = testutil::load_complex("torus7.json");
  testutil::Rng rng(47);
  for (int t = 0; t < 100; ++t) {
    MeasureChain mu = rng.measure(torus, rng.uniform(0, 2));
    VertexMap g = rng.self_map(torus);
    CHECK(total_variation(pushforward(mu, g)) <= total_variation(mu));
  }
}

TEST_CASE("boundary of an atomic measure expands like the chain boundary") {
  MeasureChain mu = include_chain(unit_chain(2, {0, 1, 2}));
  MeasureChain bd = boundary_measure(mu);
  CHECK(bd.mass(simplex({1, 2})) == 1);
  CHECK(bd.mass(simplex({0, 2})) == -1);
  CHECK(bd.mass(simplex({0, 1})) == 1);
  CHECK_THROWS_AS(boundary_measure(include_chain(unit_chain(0, {3}))),
                  DegreeError);
}

TEST_CASE("measure chains form a chain complex compatible with inclusion") {
  SimplicialComplex genus2 = testutil::load_complex("genus2.json");
  testutil::Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    MeasureChain mu = rng.measure(genus2, 2);
    CHECK(boundary_measure(boundary_measure(mu)).is_zero());
  }
  for (int t = 0; t < 200; ++t) {
    Chain c = rng.chain(genus2, rng.uniform(1, 2));
    CHECK(boundary_measure(include_chain(c)) == include_chain(boundary(c)));
  }
}

TEST_CASE("kronecker product on atoms, zero, and bounds") {
  SimplicialComplex torus = testutil::load_complex("torus7.json");
  testutil::Rng rng(59);
  BoundedFunction f = rng.function(torus, 1);

  int idx = rng.uniform(0, torus.count(1) - 1);
  MeasureChain atom(1);
  atom.add(torus.simplex(1, idx), Rat(1));
  CHECK(kronecker(torus, f, atom) == f.values[idx]);
  CHECK(kronecker(torus, f, MeasureChain(1)) == 0);

  for (int t = 0; t < 500; ++t) {
    int k = rng.uniform(0, 2);
    BoundedFunction g = rng.function(torus, k);
    MeasureChain mu = rng.measure(torus, k);
    CHECK(rat_abs(kronecker(torus, g, mu)) <=
          sup_norm(g) * total_variation(mu));
  }

  MeasureChain wrong(2);
  wrong.add(torus.simplex(2, 0), Rat(1));
  CHECK_THROWS_AS(kronecker(torus, f, wrong), DegreeMismatch);
}

TEST_CASE("kronecker product is bilinear") {
  SimplicialComplex torus = testutil::load_complex("torus7.json");
  testutil::Rng rng(61);
  for (int t = 0; t < 100; ++t) {
    int k = rng.uniform(0, 2);
    BoundedFunction f = rng.function(torus, k), g = rng.function(torus, k);
    MeasureChain mu = rng.measure(torus, k), nu = rng.measure(torus, k);
    Rat a = rng.rat(), b = rng.rat();

    MeasureChain mcombo(k);
    for (const auto& [s, m] : mu.masses) mcombo.add(s, a * m);
    for (const auto& [s, m] : nu.masses) mcombo.add(s, b * m);
    CHECK(kronecker(torus, f, mcombo) ==
          a * kronecker(torus, f, mu) + b * kronecker(torus, f, nu));

    BoundedFunction fcombo{k, std::vector<Rat>(torus.count(k))};
    for (int i = 0; i < torus.count(k); ++i) {
      fcombo.values[i] = a * f.values[i] + b * g.values[i];
    }
    CHECK(kronecker(torus, fcombo, mu) ==
          a * kronecker(torus, f, mu) + b * kronecker(torus, g, mu));
  }
}

TEST_CASE("v2 extension agrees with the kronecker product") {
  SimplicialComplex torus = testutil::load_complex("torus7.json");
  testutil::Rng rng(67);

  // Hand expansion on a two-term chain.
  BoundedFunction f = rng.function(torus, 1);
  Chain c(1);
  const Simplex s = torus.simplex(1, 2);
  const Simplex u = torus.simplex(1, 5);
  c.add(s, Rat(2));
  c.add(u, Rat(-3));
  Rat expected = Rat(2) * f.values[2] - Rat(3) * f.values[5];
  CHECK(evaluate(v2_extend(f), torus, c) == expected);
  CHECK(kronecker(torus, f, include_chain(c)) == expected);

  for (int t = 0; t < 500; ++t) {
    int k = rng.uniform(0, 2);
    BoundedFunction g = rng.function(torus, k);
    Chain d = rng.chain(torus, k);
    CHECK(evaluate(v2_extend(g), torus, d) ==
          kronecker(torus, g, include_chain(d)));
  }
}

TEST_CASE("v2 extension is a cochain map") {
  SimplicialComplex torus = testutil::load_complex("torus7.json");
  testutil::Rng rng(71);
  for (int t = 0; t < 100; ++t) {
    int k = rng.uniform(0, 1);
    BoundedFunction f = rng.function(torus, k);
    // Coboundary on bounded functions: (df)(tau) = (-1)^(k+1) f(d tau).
    BoundedFunction df{k + 1, std::vector<Rat>(torus.count(k + 1))};
    int csign = (k + 1) % 2 == 0 ? 1 : -1;
    for (int i = 0; i < torus.count(k + 1); ++i) {
      const Simplex& tau = torus.simplex(k + 1, i);
      Rat sum(0);
      int sign = 1;
      for (int j = 0; j <= k + 1; ++j) {
        sum += Rat(sign) * f.values[torus.index_of(tau.face(j))];
        sign = -sign;
      }
      df.values[i] = Rat(csign) * sum;
    }
    Chain b = rng.chain(torus, k + 1);
    CHECK(evaluate(v2_extend(df), torus, b) ==
          Rat(csign) * evaluate(v2_extend(f), torus, boundary(b)));
  }
}

TEST_CASE("measure seminorm agrees with the chain seminorm through i_X") {
  SimplicialComplex sphere = testutil::load_complex("boundary_delta3.json");
  Chain z = fundamental_cycle(sphere);
  CHECK(measure_seminorm(sphere, include_chain(z)).value == 4);
  CHECK(l1_seminorm(HomologyClass{&sphere, z, 2}).value == 4);

  SimplicialComplex torus = testutil::load_complex("torus7.json");
  testutil::Rng rng(73);
  for (int t = 0; t < 12; ++t) {
    int k = rng.uniform(0, 2);
    Chain cyc = rng.cycle(torus, k);
    Rat chain_value = l1_seminorm(HomologyClass{&torus, cyc, k}).value;
    Rat measure_value = measure_seminorm(torus, include_chain(cyc)).value;
    CHECK(chain_value == measure_value);
  }
}

TEST_CASE("measure seminorm of boundary measures is zero") {
  SimplicialComplex torus = testutil::load_complex("torus7.json");
  testutil::Rng rng(79);
  for (int t = 0; t < 10; ++t) {
    MeasureChain mu = include_chain(rng.boundary_chain(torus, 1));
    CHECK(measure_seminorm(torus, mu).value == 0);
  }

  MeasureChain bad(1);
  bad.add(torus.simplex(1, 0), Rat(1));
  CHECK_THROWS_AS(measure_seminorm(torus, bad), NotACycle);
}

TEST_CASE("duality bound of measure homology") {
  SimplicialComplex torus = testutil::load_complex("torus7.json");
  testutil::Rng rng(83);
  int checked = 0;
  for (int t = 0; t < 60 && checked < 20; ++t) {
    int k = rng.uniform(0, 1);
    Cochain phi = rng.cocycle(torus, k);
    Chain z = rng.cycle(torus, k);
    MeasureChain mu = include_chain(z);
    BoundedFunction f{k, phi.values};
    Rat pairing = kronecker(torus, f, mu);
    if (pairing == 0) continue;
    for (auto& v : f.values) v /= pairing;
    CHECK(measure_seminorm(torus, mu).value >= Rat(1) / sup_norm(f));
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("measure selftest passes on bundled complexes") {
  for (const char* name : {"delta2.json", "torus7.json"}) {
    SimplicialComplex x = testutil::load_complex(name);
    for (const auto& [check, ok] : measure_selftest(x, 40, 0xfeedULL)) {
      INFO(name << ": " << check);
      CHECK(ok);
    }
  }
}
