#include "binact/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "binact/errors.hpp"

namespace binact {

namespace {

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Vector random_vector(std::size_t n, std::mt19937_64& rng, double box) {
  std::uniform_real_distribution<double> coord(-box, box);
  Vector v(n);
  for (auto& c : v) c = coord(rng);
  return v;
}

}  // namespace

EuclideanAction::EuclideanAction(std::size_t dim, double tol_axiom, double tol_reach)
    : dim_(dim), tol_axiom_(tol_axiom), tol_reach_(tol_reach) {
  if (dim == 0) throw DimensionMismatch("dimension must be at least 1");
  if (!(tol_axiom > 0) || !(tol_reach > 0)) throw ShapeError("tolerances must be positive");
}

Vector EuclideanAction::direction(std::span<const double> x) const {
  if (x.size() != dim_) {
    throw DimensionMismatch("expected a vector of length " + std::to_string(dim_) + ", got " +
                            std::to_string(x.size()));
  }
  Vector d(dim_);
  double sines = 1.0;
  for (std::size_t k = 0; k + 1 < dim_; ++k) {
    d[k] = sines * std::cos(x[k]);
    sines *= std::sin(x[k]);
  }
  d[dim_ - 1] = sines;
  return d;
}

Vector EuclideanAction::apply(double g, std::span<const double> x,
                              std::span<const double> y) const {
  if (y.size() != dim_) {
    throw DimensionMismatch("expected a vector of length " + std::to_string(dim_) + ", got " +
                            std::to_string(y.size()));
  }
  Vector z = direction(x);
  for (std::size_t k = 0; k < dim_; ++k) z[k] = g * z[k] + y[k];
  return z;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

AxiomResiduals check_axioms_sampled(const EuclideanAction& action, std::size_t samples,
                                    std::uint64_t seed, double box) {
  AxiomResiduals out;
  out.samples = samples;
  out.seed = seed;
  out.box = box;
  const std::size_t n = action.dim();
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = sample_rng(seed, i);
    std::uniform_real_distribution<double> scalar(-box, box);
    const double g = scalar(rng);
    const double h = scalar(rng);
    const Vector x = random_vector(n, rng, box);
    const Vector y = random_vector(n, rng, box);
    out.max_identity = std::max(out.max_identity, max_abs_diff(action.apply(0.0, x, y), y));
    const Vector lhs = action.apply(g + h, x, y);
    const Vector rhs = action.apply(g, x, action.apply(h, x, y));
    out.max_composition = std::max(out.max_composition, max_abs_diff(lhs, rhs));
  }
  out.pass = out.max_identity < action.tol_axiom() && out.max_composition < action.tol_axiom();
  return out;
}

Hyperspherical hyperspherical_inverse(const EuclideanAction& action, std::span<const double> z,
                                      std::size_t k) {
  if (z.size() != action.dim()) {
    throw DimensionMismatch("expected a vector of length " + std::to_string(action.dim()));
  }
  if (k > action.dim()) throw DimensionMismatch("k exceeds the dimension");
  for (std::size_t j = k; j < z.size(); ++j) {
    if (std::abs(z[j]) > action.tol_reach()) {
      throw TailNotZero("coordinate " + std::to_string(j + 1) + " = " + std::to_string(z[j]) +
                        " is beyond k = " + std::to_string(k));
    }
  }
  Hyperspherical out;
  if (k == 0) return out;
  if (k == 1) {
    out.radius = z[0];
    return out;
  }
  double sq = 0;
  for (std::size_t j = 0; j < k; ++j) sq += z[j] * z[j];
  out.radius = std::sqrt(sq);
  out.angles.assign(k - 1, 0.0);
  if (out.radius == 0) return out;
  for (std::size_t i = 0; i + 2 < k; ++i) {
    double tail = 0;
    for (std::size_t j = i; j < k; ++j) tail += z[j] * z[j];
    tail = std::sqrt(tail);
    if (tail == 0) break;
    out.angles[i] = std::acos(std::clamp(z[i] / tail, -1.0, 1.0));
  }
  out.angles[k - 2] = std::atan2(z[k - 1], z[k - 2]);
  return out;
}

struct ReachTerm::Node {
  double g;
  ReachTerm first;
  ReachTerm second;
  std::size_t depth;
};

ReachTerm ReachTerm::base() { return ReachTerm{}; }

ReachTerm ReachTerm::node(double g, ReachTerm first, ReachTerm second) {
  ReachTerm t;
  const std::size_t depth = 1 + std::max(first.depth(), second.depth());
  t.node_ = std::make_shared<const Node>(Node{g, std::move(first), std::move(second), depth});
  return t;
}

double ReachTerm::g() const {
  if (!node_) throw ShapeError("base term has no group element");
  return node_->g;
}

const ReachTerm& ReachTerm::first() const {
  if (!node_) throw ShapeError("base term has no children");
  return node_->first;
}

const ReachTerm& ReachTerm::second() const {
  if (!node_) throw ShapeError("base term has no children");
  return node_->second;
}

std::size_t ReachTerm::depth() const noexcept { return node_ ? node_->depth : 0; }

Vector ReachTerm::evaluate(const EuclideanAction& action) const {
  if (!node_) return action.origin();
  return action.apply(node_->g, node_->first.evaluate(action), node_->second.evaluate(action));
}

ReachTerm reach(const EuclideanAction& action, std::span<const double> z) {
  if (z.size() != action.dim()) {
    throw DimensionMismatch("expected a vector of length " + std::to_string(action.dim()));
  }
  std::size_t k = z.size();
  while (k > 0 && z[k - 1] == 0.0) --k;
  if (k == 0) return ReachTerm::base();
  const Hyperspherical coords = hyperspherical_inverse(action, z, k);
  Vector angle_point(action.dim(), 0.0);
  std::copy(coords.angles.begin(), coords.angles.end(), angle_point.begin());
  return ReachTerm::node(coords.radius, reach(action, angle_point), ReachTerm::base());
}

ReachTerm random_term(std::size_t depth, std::mt19937_64& rng, double box) {
  if (depth == 0) return ReachTerm::base();
  std::uniform_real_distribution<double> scalar(-box, box);
  std::uniform_int_distribution<std::size_t> other(0, depth - 1);
  const double g = scalar(rng);
  ReachTerm first = random_term(depth - 1, rng, box);
  ReachTerm second = random_term(other(rng), rng, box);
  return ReachTerm::node(g, std::move(first), std::move(second));
}

SubspaceWitness subspace_witness(const EuclideanAction& action, std::size_t k,
                                 std::uint64_t seed, std::size_t inclusion_samples,
                                 std::size_t reach_samples, double box) {
  if (k > action.dim()) throw DimensionMismatch("k exceeds the dimension");
  constexpr double tail_tolerance = 1e-12;
  SubspaceWitness out;
  out.k = k;
  out.inclusion_samples = inclusion_samples;
  out.reach_samples = reach_samples;
  for (std::size_t i = 0; i < inclusion_samples; ++i) {
    auto rng = sample_rng(seed, i);
    std::uniform_int_distribution<std::size_t> depth(0, k);
    const Vector z = random_term(depth(rng), rng, box).evaluate(action);
    for (std::size_t j = k; j < z.size(); ++j) out.max_tail = std::max(out.max_tail, std::abs(z[j]));
  }
  out.inclusion_pass = out.max_tail < tail_tolerance;

  bool depth_ok = true;
  for (std::size_t i = 0; i < reach_samples; ++i) {
    auto rng = sample_rng(seed, inclusion_samples + i);
    Vector target(action.dim(), 0.0);
    const Vector head = random_vector(k, rng, box);
    std::copy(head.begin(), head.end(), target.begin());
    const ReachTerm term = reach(action, target);
    out.max_depth = std::max(out.max_depth, term.depth());
    depth_ok = depth_ok && term.depth() <= k;
    out.max_reach_error =
        std::max(out.max_reach_error, max_abs_diff(term.evaluate(action), target));
  }
  out.surjectivity_pass = depth_ok && out.max_reach_error < action.tol_reach();
  return out;
}

}  // namespace binact
