#include <cmath>
#include <string>

#include "doctest.h"
#include "siqm/dilation.hpp"
#include "siqm/error.hpp"
#include "siqm/lattice.hpp"

using namespace siqm;

namespace {

const Grid& grid15() {
  static const Grid g = build_grid(-15.0, 15.0, 3001);
  return g;
}

PotentialFamily half() { return PotentialFamily::selfsimilar(0.5, 1.0, 1.0); }

LatticeState packet_at(const Lattice& lat, std::size_t level) {
  LatticeState s = lat.zero_state();
  s.components[level] = sample(lat.grid(), [](double x) { return std::exp(-0.5 * (x - 0.3) * (x - 0.3)); });
  return s;
}

}  // namespace

TEST_CASE("lattice bookkeeping") {
  const Lattice lat(half(), grid15(), 8);
  CHECK(lat.parameter(0, 0) == 1.0);
  CHECK(lat.parameter(2, 0) == 0.25);
  CHECK(lat.parameter(2, -1) == 0.5);
  CHECK_THROWS_AS(Lattice(half(), grid15(), 5), Error);
  CHECK_THROWS_AS(relation_from_string("not-a-relation"), Error);
  for (auto id : all_relations()) CHECK(relation_from_string(to_string(id)) == id);
}

TEST_CASE("shift operators") {
  const Lattice lat(half(), grid15(), 8);
  const auto s = packet_at(lat, 3);
  const auto down = lattice_apply(shift_down(), lat, s);
  CHECK(down.components[2].norm() == doctest::Approx(s.components[3].norm()));
  CHECK(down.components[3].norm() == 0.0);
  const auto back = lattice_apply(shift_up() * shift_down(), lat, s);
  CHECK((back.components[3] - s.components[3]).norm() == 0.0);
}

TEST_CASE("B+ B- acts as the factorized Hamiltonian on each level") {
  const Lattice lat(half(), grid15(), 8);
  const auto s = packet_at(lat, 3);
  const auto out = lattice_apply(b_plus() * b_minus(), lat, s);
  const auto& w = lat.W(3, 0);
  const auto expect = apply_ladder(w, apply_ladder(w, s.components[3], LadderMode::Lowering), LadderMode::Raising);
  CHECK((out.components[3] - expect).interior_norm(0.9) < 1e-12);
}

TEST_CASE("remainder commutator picks R(a_k)") {
  // level 2 carries a3, and R(a2) = c q a1 = 0.5
  const Lattice lat(half(), grid15(), 8);
  const auto s = packet_at(lat, 2);
  const auto out = lattice_apply(commutator(b_minus(), b_plus()), lat, s);
  CHECK((out.components[2] - 0.5 * s.components[2]).interior_norm(0.9) / s.components[2].norm() < 1e-6);
}

TEST_CASE("J3 eigenvalues") {
  const Lattice lat(half(), grid15(), 8);
  for (std::size_t k : {1u, 3u, 5u}) {
    const auto s = packet_at(lat, k);
    const auto out = lattice_apply(j3(), lat, s);
    const double expect = -(static_cast<double>(k) - 1.0);
    CHECK((out.components[k] - complex(expect) * s.components[k]).norm() < 1e-12);
  }
}

TEST_CASE("all relations hold for the self-similar family") {
  const Lattice lat(half(), grid15(), 8);
  for (auto id : all_relations()) {
    CAPTURE(to_string(id));
    CHECK(commutator_residual(id, lat) <= 1e-6);
  }
}

TEST_CASE("q = 1 reduces to the Heisenberg algebra") {
  const Grid g = build_grid(-10.0, 10.0, 2001);
  const Lattice lat(PotentialFamily::harmonic(1.0), g, 8);
  // all R(a_k) equal: the shift brackets vanish identically
  CHECK(commutator_residual(RelationId::BracketShift, lat) <= 1e-8);
  CHECK(commutator_residual(RelationId::BracketSecond, lat) <= 1e-8);
  CHECK(commutator_residual(RelationId::BracketDepth3, lat) <= 1e-8);
  // [B-, B+] = 2 up to stencil error
  CHECK(commutator_residual(RelationId::BracketRemainder, lat) <= 1e-6);
  CHECK(commutator_residual(RelationId::QOscillator, lat) <= 1e-6);
  CHECK_FALSE(relation_applicable(RelationId::J3RaisesB, PotentialFamily::harmonic(1.0)));
}

TEST_CASE("Morse lattice") {
  const Grid g = build_grid(-6.0, 40.0, 4601);
  const auto morse = PotentialFamily::morse(6.5);
  const Lattice lat(morse, g, 8);
  CHECK(commutator_residual(RelationId::BracketRemainder, lat) <= 1e-6);
  CHECK(commutator_residual(RelationId::BracketDepth3, lat) <= 1e-6);
  CHECK_FALSE(relation_applicable(RelationId::ScaledBracket, morse));
}

TEST_CASE("B+ and B- are adjoint") {
  const Lattice lat(half(), grid15(), 8);
  LatticeState phi = packet_at(lat, 3);
  LatticeState psi = lat.zero_state();
  psi.components[4] = sample(lat.grid(), [](double x) { return x * std::exp(-0.4 * x * x); });
  CHECK(adjoint_defect(b_plus(), b_minus(), lat, phi, psi) < 1e-8);
}

TEST_CASE("residuals do not grow with the window") {
  double previous = 1.0;
  for (std::size_t K : {6u, 8u, 12u}) {
    const Lattice lat(half(), grid15(), K);
    const double r = commutator_residual(RelationId::BracketRemainder, lat);
    CHECK(r <= previous + 1e-9);
    previous = r;
  }
}

TEST_CASE("a perturbed superpotential breaks the algebra") {
  const Lattice lat(half().with_perturbation(1e-2), grid15(), 8);
  CHECK(commutator_residual(RelationId::BracketRemainder, lat) > 1e-6);
}

TEST_CASE("dilation identities") {
  const auto fns = dilation_test_functions(grid15());
  SUBCASE("q = 1 limit") {
    const Grid g = build_grid(-10.0, 10.0, 2001);
    const auto ho = PotentialFamily::harmonic(1.0);
    const auto f = dilation_test_functions(g);
    DilationOptions sixth;
    sixth.order = StencilOrder::Sixth;
    CHECK(dilation_identity_residual(ho, g, DilationIdentity::Direct, f, sixth) <= 1e-8);
    CHECK(dilation_identity_residual(ho, g, DilationIdentity::Conjugated, f, sixth) <= 1e-8);
  }
  SUBCASE("q = 1/2") {
    CHECK(dilation_identity_residual(half(), grid15(), DilationIdentity::Direct, fns) <= 1e-5);
    CHECK(dilation_identity_residual(half(), grid15(), DilationIdentity::Conjugated, fns) <= 1e-5);
  }
  SUBCASE("pointwise constant") {
    const auto lhs = dilation_lhs(half(), fns[0], DilationIdentity::Direct);
    const auto [lo, hi] = grid15().interior(0.5);
    for (std::size_t i = lo; i < hi; i += 97) CHECK(std::abs(lhs[i] - fns[0][i]) < 1e-6);
  }
  SUBCASE("names") {
    CHECK(to_string(DilationIdentity::Direct) == "yy3");
    CHECK(to_string(DilationIdentity::Conjugated) == "yy6");
  }
}
