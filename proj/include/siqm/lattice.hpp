#pragma once

// Parameter-lattice representation of the shift operator algebra.
//
// Level k (0-based) carries the parameter a_{k+1}, so with a scaling rule it
// holds q^k a1. On a state psi = (psi_0, ..., psi_{K-1}):
//
//   (T psi)_k      = psi_{k+1}            (T^dag psi)_k = psi_{k-1}
//   (B+ psi)_k     = A^dag(a_{k+1}) psi_{k+1}
//   (B- psi)_k     = A(a_k) psi_{k-1}
//   (f(a_{1+j}) psi)_k = f(a_{k+1+j}) psi_k
//
// R(a_0) is the offset j = -1 function, R(a_1) offset 0, R(a_2) offset +1, and
// J3 = -(1/p) log a_0 with p = log q. Components pushed outside the window are
// dropped; residuals only look at levels 1 .. K-2.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "siqm/families.hpp"
#include "siqm/grid.hpp"

namespace siqm {

struct LatticeState {
  double a1 = 1.0;
  double q = 1.0;
  std::vector<WaveFunctionGrid> components;

  std::size_t window() const { return components.size(); }
  // sqrt(sum_k ||psi_k||^2) over levels first..last inclusive.
  double norm(std::size_t first, std::size_t last) const;
};

// Shared per-family data for lattice operators: the grid, the stencil order
// and a cache of W sampled at each parameter a_m.
class Lattice {
 public:
  static constexpr std::size_t min_window = 6;

  Lattice(PotentialFamily family, Grid grid, std::size_t window,
          StencilOrder order = StencilOrder::Fourth);

  const PotentialFamily& family() const { return family_; }
  const Grid& grid() const { return grid_; }
  std::size_t window() const { return window_; }
  StencilOrder order() const { return order_; }

  // a_{level + 1 + offset}
  double parameter(int level, int offset) const;
  const GridSamples& W(int level, int offset) const;

  LatticeState zero_state() const;

 private:
  PotentialFamily family_;
  Grid grid_;
  std::size_t window_;
  StencilOrder order_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const GridSamples>> cache_;
};

// Level bookkeeping of an operator word: a source level j ends up at
// j + net, visiting levels j + min_shift .. j + max_shift on the way.
struct LevelReach {
  int net = 0;
  int min_shift = 0;
  int max_shift = 0;
};

class LatticeOperator {
 public:
  using Action = std::function<LatticeState(const Lattice&, const LatticeState&)>;

  LatticeOperator(std::string name, LevelReach reach, Action action);

  const std::string& name() const { return name_; }
  const LevelReach& reach() const { return reach_; }
  LatticeState operator()(const Lattice& lattice, const LatticeState& state) const;

 private:
  std::string name_;
  LevelReach reach_;
  Action action_;
};

// Primitives.
LatticeOperator identity_op();
LatticeOperator shift_down();  // T
LatticeOperator shift_up();    // T^dag
LatticeOperator level_ladder(LadderMode mode, int offset);
LatticeOperator level_function(std::string name, std::function<double(double)> f, int offset);
// Level-diagonal multiplication by an arbitrary per-level value.
LatticeOperator level_diagonal(std::string name, std::function<double(const Lattice&, int level)> value);

// Composition (rhs acts first), sums and scalar multiples.
LatticeOperator operator*(const LatticeOperator& lhs, const LatticeOperator& rhs);
LatticeOperator operator+(const LatticeOperator& lhs, const LatticeOperator& rhs);
LatticeOperator operator-(const LatticeOperator& lhs, const LatticeOperator& rhs);
LatticeOperator operator*(double s, const LatticeOperator& op);
LatticeOperator power(const LatticeOperator& op, int n);
LatticeOperator commutator(const LatticeOperator& a, const LatticeOperator& b);

// Composite operators.
LatticeOperator b_plus();
LatticeOperator b_minus();
LatticeOperator k_plus();   // sqrt(q) B+
LatticeOperator k_minus();  // sqrt(q) B-
LatticeOperator s_plus();   // K+ R(a1)^{-1/2}
LatticeOperator s_minus();  // R(a1)^{-1/2} K-
LatticeOperator remainder_op(int offset);  // R(a_{1+offset})
LatticeOperator j3();

LatticeState lattice_apply(const LatticeOperator& op, const Lattice& lattice, const LatticeState& state);

enum class RelationId {
  BracketRemainder,     // [B-, B+] = R(a0)
  BracketShift,         // [B+, R(a0)] = (R(a1) - R(a0)) B+
  BracketSecond,        // next bracket of the chain
  BracketDepth3,        // third bracket of the chain
  ScaledBracket,        // [K-, K+] = R(a1)
  ScaledRemainder,      // [K+, R(a1)] = (q - 1) R(a1) K+
  NonClosure1,          // [K+, (q-1)^n R(a1) K+^n] = (q-1)^{n+1} R(a1) K+^{n+1}
  NonClosure2,
  NonClosure3,
  QOscillator,          // S- S+ - q S+ S- = 1
  DeformedSo21,         // [B-, B+] = c exp(-p J3)
  J3RaisesB,            // [J3, B+] = B+
  J3LowersB,            // [J3, B-] = -B-
  ShiftRulePlus,        // f(a_n) B+ = B+ f(a_{n-1})
  ShiftRuleMinus,       // f(a_n) B- = B- f(a_{n+1})
};

std::string to_string(RelationId id);
RelationId relation_from_string(const std::string& name);
const std::vector<RelationId>& all_relations();

struct Relation {
  RelationId id;
  LatticeOperator lhs;
  LatticeOperator rhs;
  bool scaling_only = false;  // needs a scaling rule (q < 1 for J3)
};

Relation make_relation(RelationId id);

// Whether the relation is meaningful for the family (J3 and the scaled
// operators require a scaling rule; J3 additionally q < 1).
bool relation_applicable(RelationId id, const PotentialFamily& family);

// Gaussian packets placed in the two middle levels of the source range for
// which every intermediate level stays in the window and the output lands on
// an interior level. Throws window-too-small when no such level exists.
std::vector<LatticeState> make_test_states(const Lattice& lattice, const LevelReach& reach);

// max over states of ||(LHS - RHS) psi|| / ||psi|| on levels 1 .. K-2.
double commutator_residual(RelationId id, const Lattice& lattice, const std::vector<LatticeState>& states);

// Same, with test states from make_test_states.
double commutator_residual(RelationId id, const Lattice& lattice);

// Adjointness defect |<phi, B+ psi> - <B- phi, psi>| on interior levels,
// relative to ||phi|| ||psi||.
double adjoint_defect(const LatticeOperator& op, const LatticeOperator& adjoint, const Lattice& lattice,
                      const LatticeState& phi, const LatticeState& psi);

}  // namespace siqm
