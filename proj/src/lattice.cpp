#include "siqm/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "siqm/error.hpp"

namespace siqm {

double LatticeState::norm(std::size_t first, std::size_t last) const {
  double sum = 0.0;
  for (std::size_t k = first; k <= last && k < components.size(); ++k) {
    const double n = components[k].norm();
    sum += n * n;
  }
  return std::sqrt(sum);
}

Lattice::Lattice(PotentialFamily family, Grid grid, std::size_t window, StencilOrder order)
    : family_(std::move(family)), grid_(grid), window_(window), order_(order) {
  if (window_ < min_window) {
    std::ostringstream os;
    os << "lattice window " << window_ << " is below the minimum " << min_window;
    throw Error(ErrorKind::WindowTooSmall, os.str());
  }
}

double Lattice::parameter(int level, int offset) const { return family_.parameter(level + 1 + offset); }

const GridSamples& Lattice::W(int level, int offset) const {
  const int m = level + 1 + offset;
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(m);
  if (it == cache_.end()) {
    auto samples = std::make_shared<const GridSamples>(eval_W(family_, family_.parameter(m), grid_));
    it = cache_.emplace(m, std::move(samples)).first;
  }
  return *it->second;
}

LatticeState Lattice::zero_state() const {
  LatticeState s;
  s.a1 = family_.a1();
  s.q = family_.q();
  s.components.assign(window_, WaveFunctionGrid(grid_));
  return s;
}

LatticeOperator::LatticeOperator(std::string name, LevelReach reach, Action action)
    : name_(std::move(name)), reach_(reach), action_(std::move(action)) {}

LatticeState LatticeOperator::operator()(const Lattice& lattice, const LatticeState& state) const {
  if (state.window() != lattice.window()) {
    throw Error(ErrorKind::WindowTooSmall, "state window differs from the lattice window");
  }
  return action_(lattice, state);
}

LatticeOperator identity_op() {
  return {"1", {}, [](const Lattice&, const LatticeState& s) { return s; }};
}

LatticeOperator shift_down() {
  return {"T", {-1, -1, 0}, [](const Lattice& lat, const LatticeState& s) {
            LatticeState out = lat.zero_state();
            for (std::size_t k = 0; k + 1 < s.window(); ++k) out.components[k] = s.components[k + 1];
            return out;
          }};
}

LatticeOperator shift_up() {
  return {"T^dag", {1, 0, 1}, [](const Lattice& lat, const LatticeState& s) {
            LatticeState out = lat.zero_state();
            for (std::size_t k = 1; k < s.window(); ++k) out.components[k] = s.components[k - 1];
            return out;
          }};
}

LatticeOperator level_ladder(LadderMode mode, int offset) {
  std::ostringstream name;
  name << (mode == LadderMode::Lowering ? "A" : "A^dag") << "(a" << 1 + offset << ")";
  return {name.str(), {}, [mode, offset](const Lattice& lat, const LatticeState& s) {
            LatticeState out = s;
            for (std::size_t k = 0; k < s.window(); ++k) {
              out.components[k] =
                  apply_ladder(lat.W(static_cast<int>(k), offset), s.components[k], mode, lat.order());
            }
            return out;
          }};
}

LatticeOperator level_diagonal(std::string name, std::function<double(const Lattice&, int)> value) {
  return {std::move(name), {}, [value](const Lattice& lat, const LatticeState& s) {
            LatticeState out = s;
            for (std::size_t k = 0; k < s.window(); ++k) out.components[k] *= complex(value(lat, static_cast<int>(k)));
            return out;
          }};
}

LatticeOperator level_function(std::string name, std::function<double(double)> f, int offset) {
  return level_diagonal(std::move(name), [f, offset](const Lattice& lat, int level) {
    return f(lat.parameter(level, offset));
  });
}

LatticeOperator operator*(const LatticeOperator& lhs, const LatticeOperator& rhs) {
  const LevelReach& l = lhs.reach();
  const LevelReach& r = rhs.reach();
  LevelReach reach{r.net + l.net, std::min(r.min_shift, r.net + l.min_shift),
                   std::max(r.max_shift, r.net + l.max_shift)};
  return {lhs.name() + " " + rhs.name(), reach, [lhs, rhs](const Lattice& lat, const LatticeState& s) {
            return lhs(lat, rhs(lat, s));
          }};
}

namespace {

LevelReach merge(const LevelReach& a, const LevelReach& b) {
  if (a.net != b.net) throw Error(ErrorKind::InvalidParameter, "summands shift levels differently");
  return {a.net, std::min(a.min_shift, b.min_shift), std::max(a.max_shift, b.max_shift)};
}

LatticeOperator combine(const LatticeOperator& a, const LatticeOperator& b, double sign, const char* op) {
  return {"(" + a.name() + op + b.name() + ")", merge(a.reach(), b.reach()),
          [a, b, sign](const Lattice& lat, const LatticeState& s) {
            LatticeState out = a(lat, s);
            const LatticeState other = b(lat, s);
            for (std::size_t k = 0; k < out.window(); ++k) out.components[k] += complex(sign) * other.components[k];
            return out;
          }};
}

}  // namespace

LatticeOperator operator+(const LatticeOperator& lhs, const LatticeOperator& rhs) {
  return combine(lhs, rhs, 1.0, " + ");
}

LatticeOperator operator-(const LatticeOperator& lhs, const LatticeOperator& rhs) {
  return combine(lhs, rhs, -1.0, " - ");
}

LatticeOperator operator*(double s, const LatticeOperator& op) {
  std::ostringstream name;
  name << s << " " << op.name();
  return {name.str(), op.reach(), [s, op](const Lattice& lat, const LatticeState& st) {
            LatticeState out = op(lat, st);
            for (auto& c : out.components) c *= complex(s);
            return out;
          }};
}

LatticeOperator power(const LatticeOperator& op, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "negative operator power");
  if (n == 0) return identity_op();
  LatticeOperator out = op;
  for (int i = 1; i < n; ++i) out = op * out;
  return out;
}

LatticeOperator commutator(const LatticeOperator& a, const LatticeOperator& b) { return a * b - b * a; }

LatticeOperator b_plus() {
  LatticeOperator op = level_ladder(LadderMode::Raising, 0) * shift_down();
  return {"B+", op.reach(), [op](const Lattice& lat, const LatticeState& s) { return op(lat, s); }};
}

LatticeOperator b_minus() {
  LatticeOperator op = shift_up() * level_ladder(LadderMode::Lowering, 0);
  return {"B-", op.reach(), [op](const Lattice& lat, const LatticeState& s) { return op(lat, s); }};
}

namespace {

double sqrt_q(const Lattice& lat) { return std::sqrt(lat.family().q()); }

LatticeOperator scaled(const LatticeOperator& b, const char* name) {
  return {name, b.reach(), [b](const Lattice& lat, const LatticeState& s) {
            LatticeState out = b(lat, s);
            const complex f(sqrt_q(lat));
            for (auto& c : out.components) c *= f;
            return out;
          }};
}

// R evaluated at a_{level + 1 + offset}.
double remainder_at(const Lattice& lat, int level, int offset) {
  return lat.family().remainder(lat.parameter(level, offset));
}

// m-th forward difference of R along the chain, starting at a_0.
LatticeOperator remainder_difference(int m) {
  std::ostringstream name;
  name << "D" << m << "R";
  return level_diagonal(name.str(), [m](const Lattice& lat, int level) {
    double sum = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= m; ++j) {
      const double sign = ((m - j) % 2 == 0) ? 1.0 : -1.0;
      sum += sign * binom * remainder_at(lat, level, j - 1);
      binom = binom * (m - j) / (j + 1);
    }
    return sum;
  });
}

// Smooth test function of the parameter for the shift rules.
double probe(double a) { return std::sin(a) + a * a; }

}  // namespace

LatticeOperator k_plus() { return scaled(b_plus(), "K+"); }
LatticeOperator k_minus() { return scaled(b_minus(), "K-"); }

LatticeOperator remainder_op(int offset) {
  std::ostringstream name;
  name << "R(a" << 1 + offset << ")";
  return level_diagonal(name.str(), [offset](const Lattice& lat, int level) { return remainder_at(lat, level, offset); });
}

LatticeOperator s_plus() {
  return k_plus() * level_diagonal("R(a1)^-1/2", [](const Lattice& lat, int level) {
           return 1.0 / std::sqrt(remainder_at(lat, level, 0));
         });
}

LatticeOperator s_minus() {
  return level_diagonal("R(a1)^-1/2", [](const Lattice& lat, int level) {
           return 1.0 / std::sqrt(remainder_at(lat, level, 0));
         }) *
         k_minus();
}

LatticeOperator j3() {
  return level_diagonal("J3", [](const Lattice& lat, int level) {
    const double p = std::log(lat.family().q());
    return -std::log(lat.parameter(level, -1)) / p;
  });
}

LatticeState lattice_apply(const LatticeOperator& op, const Lattice& lattice, const LatticeState& state) {
  const LevelReach& r = op.reach();
  const int span = r.max_shift - r.min_shift + 1;
  if (static_cast<int>(lattice.window()) < span + 2) {
    std::ostringstream os;
    os << "operator " << op.name() << " spans " << span << " levels; window " << lattice.window()
       << " leaves no interior level";
    throw Error(ErrorKind::WindowTooSmall, os.str());
  }
  return op(lattice, state);
}

std::string to_string(RelationId id) {
  switch (id) {
    case RelationId::BracketRemainder: return "bracket-remainder";
    case RelationId::BracketShift: return "bracket-shift";
    case RelationId::BracketSecond: return "bracket-second";
    case RelationId::BracketDepth3: return "bracket-depth3";
    case RelationId::ScaledBracket: return "scaled-bracket";
    case RelationId::ScaledRemainder: return "scaled-remainder";
    case RelationId::NonClosure1: return "non-closure-1";
    case RelationId::NonClosure2: return "non-closure-2";
    case RelationId::NonClosure3: return "non-closure-3";
    case RelationId::QOscillator: return "q-oscillator";
    case RelationId::DeformedSo21: return "deformed-so21";
    case RelationId::J3RaisesB: return "j3-raise";
    case RelationId::J3LowersB: return "j3-lower";
    case RelationId::ShiftRulePlus: return "shift-rule-plus";
    case RelationId::ShiftRuleMinus: return "shift-rule-minus";
  }
  return "unknown";
}

const std::vector<RelationId>& all_relations() {
  static const std::vector<RelationId> ids = {
      RelationId::BracketRemainder, RelationId::BracketShift,    RelationId::BracketSecond,
      RelationId::BracketDepth3,    RelationId::ScaledBracket,   RelationId::ScaledRemainder,
      RelationId::NonClosure1,      RelationId::NonClosure2,     RelationId::NonClosure3,
      RelationId::QOscillator,      RelationId::DeformedSo21,    RelationId::J3RaisesB,
      RelationId::J3LowersB,        RelationId::ShiftRulePlus,   RelationId::ShiftRuleMinus,
  };
  return ids;
}

RelationId relation_from_string(const std::string& name) {
  for (RelationId id : all_relations()) {
    if (to_string(id) == name) return id;
  }
  throw Error(ErrorKind::UnknownRelation, "unknown relation '" + name + "'");
}

Relation make_relation(RelationId id) {
  const LatticeOperator bp = b_plus();
  const LatticeOperator bm = b_minus();
  switch (id) {
    case RelationId::BracketRemainder:
      return {id, commutator(bm, bp), remainder_op(-1)};
    case RelationId::BracketShift:
      return {id, commutator(bp, remainder_op(-1)), remainder_difference(1) * bp};
    case RelationId::BracketSecond:
      return {id, commutator(bp, remainder_difference(1) * bp), remainder_difference(2) * power(bp, 2)};
    case RelationId::BracketDepth3:
      return {id, commutator(bp, remainder_difference(2) * power(bp, 2)), remainder_difference(3) * power(bp, 3)};
    case RelationId::ScaledBracket:
      return {id, commutator(k_minus(), k_plus()), remainder_op(0), true};
    case RelationId::ScaledRemainder:
      return {id, commutator(k_plus(), remainder_op(0)),
              level_diagonal("(q-1)R(a1)", [](const Lattice& lat, int level) {
                return (lat.family().q() - 1.0) * remainder_at(lat, level, 0);
              }) * k_plus(),
              true};
    case RelationId::NonClosure1:
    case RelationId::NonClosure2:
    case RelationId::NonClosure3: {
      const int n = id == RelationId::NonClosure1 ? 1 : id == RelationId::NonClosure2 ? 2 : 3;
      auto weighted = [](int power_of) {
        return level_diagonal("(q-1)^n R(a1)", [power_of](const Lattice& lat, int level) {
          return std::pow(lat.family().q() - 1.0, power_of) * remainder_at(lat, level, 0);
        });
      };
      return {id, commutator(k_plus(), weighted(n) * power(k_plus(), n)), weighted(n + 1) * power(k_plus(), n + 1),
              true};
    }
    case RelationId::QOscillator: {
      const LatticeOperator sp = s_plus();
      const LatticeOperator sm = s_minus();
      const LatticeOperator q_times = level_diagonal("q", [](const Lattice& lat, int) { return lat.family().q(); });
      return {id, sm * sp - q_times * (sp * sm), identity_op(), true};
    }
    case RelationId::DeformedSo21:
      return {id, commutator(bm, bp),
              level_diagonal("c exp(-p J3)", [](const Lattice& lat, int level) {
                const double p = std::log(lat.family().q());
                const double j = -std::log(lat.parameter(level, -1)) / p;
                return lat.family().c() * std::exp(-p * j);
              }),
              true};
    case RelationId::J3RaisesB:
      return {id, commutator(j3(), bp), bp, true};
    case RelationId::J3LowersB:
      return {id, commutator(j3(), bm), -1.0 * bm, true};
    case RelationId::ShiftRulePlus:
      return {id, level_function("f(a1)", probe, 0) * bp, bp * level_function("f(a0)", probe, -1)};
    case RelationId::ShiftRuleMinus:
      return {id, level_function("f(a1)", probe, 0) * bm, bm * level_function("f(a2)", probe, 1)};
  }
  throw Error(ErrorKind::UnknownRelation, "unknown relation");
}

bool relation_applicable(RelationId id, const PotentialFamily& family) {
  const bool scaling = family.rule().kind == RuleKind::Scaling;
  const bool constant_remainder = family.rule().kind == RuleKind::Translation && family.rule().shift_delta == 0.0;
  switch (id) {
    case RelationId::DeformedSo21:
    case RelationId::J3RaisesB:
    case RelationId::J3LowersB:
      return scaling && family.q() < 1.0;
    case RelationId::ScaledBracket:
    case RelationId::ScaledRemainder:
    case RelationId::NonClosure1:
    case RelationId::NonClosure2:
    case RelationId::NonClosure3:
    case RelationId::QOscillator:
      return scaling || constant_remainder;
    default:
      return true;
  }
}

std::vector<LatticeState> make_test_states(const Lattice& lattice, const LevelReach& reach) {
  const int K = static_cast<int>(lattice.window());
  std::vector<int> sources;
  for (int j = 0; j < K; ++j) {
    const bool inside = j + reach.min_shift >= 0 && j + reach.max_shift <= K - 1;
    const bool interior = j + reach.net >= 1 && j + reach.net <= K - 2;
    if (inside && interior) sources.push_back(j);
  }
  if (sources.empty()) {
    std::ostringstream os;
    os << "window " << K << " has no admissible source level for reach [" << reach.min_shift << ", "
       << reach.max_shift << "]";
    throw Error(ErrorKind::WindowTooSmall, os.str());
  }
  const std::size_t mid = (sources.size() - 1) / 2;
  std::vector<int> levels = {sources[mid]};
  if (mid + 1 < sources.size()) levels.push_back(sources[mid + 1]);

  const Grid& g = lattice.grid();
  const double width = g.x_max() - g.x_min();
  const double centre = 0.5 * (g.x_max() + g.x_min());
  const double sigma = std::min(1.0, width / 20.0);
  auto packet = [&](double shift, double k, double s) {
    return sample(g, [=](double x) {
      const double u = (x - centre - shift * sigma) / (s * sigma);
      return std::exp(-0.5 * u * u) * std::exp(complex(0.0, k * x / sigma));
    });
  };

  std::vector<LatticeState> states;
  for (int variant = 0; variant < 2; ++variant) {
    LatticeState s = lattice.zero_state();
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const double shift = variant == 0 ? 0.3 * static_cast<double>(i) : -0.5 + 0.2 * static_cast<double>(i);
      const double k = variant == 0 ? 0.0 : 0.7 - 0.4 * static_cast<double>(i);
      const double s_width = variant == 0 ? 1.0 + 0.2 * static_cast<double>(i) : 0.8;
      s.components[static_cast<std::size_t>(levels[i])] = packet(shift, k, s_width);
    }
    states.push_back(std::move(s));
  }
  return states;
}

double commutator_residual(RelationId id, const Lattice& lattice, const std::vector<LatticeState>& states) {
  const Relation rel = make_relation(id);
  if (!relation_applicable(id, lattice.family())) {
    throw Error(ErrorKind::InvalidParameter,
                "relation " + to_string(id) + " does not apply to family " + to_string(lattice.family().name()));
  }
  const LatticeOperator diff = rel.lhs - rel.rhs;
  const std::size_t last = lattice.window() - 2;
  double worst = 0.0;
  for (const auto& s : states) {
    const LatticeState out = lattice_apply(diff, lattice, s);
    const double denom = s.norm(0, lattice.window() - 1);
    if (denom == 0.0) continue;
    worst = std::max(worst, out.norm(1, last) / denom);
  }
  return worst;
}

double commutator_residual(RelationId id, const Lattice& lattice) {
  const Relation rel = make_relation(id);
  const LevelReach reach = merge(rel.lhs.reach(), rel.rhs.reach());
  return commutator_residual(id, lattice, make_test_states(lattice, reach));
}

double adjoint_defect(const LatticeOperator& op, const LatticeOperator& adjoint, const Lattice& lattice,
                      const LatticeState& phi, const LatticeState& psi) {
  const LatticeState a = op(lattice, psi);
  const LatticeState b = adjoint(lattice, phi);
  complex lhs = 0.0;
  complex rhs = 0.0;
  for (std::size_t k = 1; k + 1 < lattice.window(); ++k) {
    lhs += inner_product(phi.components[k], a.components[k]);
    rhs += inner_product(b.components[k], psi.components[k]);
  }
  const double scale = phi.norm(0, lattice.window() - 1) * psi.norm(0, lattice.window() - 1);
  return std::abs(lhs - rhs) / scale;
}

}  // namespace siqm
