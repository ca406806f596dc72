#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/NonLinearOptimization>

#include "ssetkit/errors.hpp"
#include "ssetkit/mixture_engine.hpp"

namespace ssetkit {
namespace {

constexpr int kPoints = 5;

// Centred statistics t - 2 and (t - 2)^2 - 2 span the same family as 1, t, t^2
// and keep the natural parameters well scaled.
double stat(int x, int j) {
  const double c = x - 2;
  return j == 0 ? c : c * c - 2;
}

std::array<double, kPoints> member(double u0, double u1) {
  std::array<double, kPoints> s{};
  double top = -INFINITY;
  for (int x = 0; x < kPoints; ++x) {
    s[x] = u0 * stat(x, 0) + u1 * stat(x, 1);
    top = std::max(top, s[x]);
  }
  double z = 0;
  for (auto& v : s) z += (v = std::exp(v - top));
  for (auto& v : s) v /= z;
  return s;
}

// z = (logit alpha, theta_1, theta_2), residual alpha f1 + (1 - alpha) f2 - p.
struct Residual {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;

  std::array<double, kPoints> p;

  int inputs() const { return 5; }
  int values() const { return kPoints; }

  static double sigmoid(double a) { return 1 / (1 + std::exp(-a)); }

  int operator()(const Eigen::VectorXd& z, Eigen::VectorXd& r) const {
    const double alpha = sigmoid(z(0));
    auto f1 = member(z(1), z(2));
    auto f2 = member(z(3), z(4));
    for (int x = 0; x < kPoints; ++x) r(x) = alpha * f1[x] + (1 - alpha) * f2[x] - p[x];
    return 0;
  }

  int df(const Eigen::VectorXd& z, Eigen::MatrixXd& jac) const {
    const double alpha = sigmoid(z(0));
    auto f1 = member(z(1), z(2));
    auto f2 = member(z(3), z(4));
    double mean1[2] = {0, 0}, mean2[2] = {0, 0};
    for (int x = 0; x < kPoints; ++x)
      for (int j = 0; j < 2; ++j) {
        mean1[j] += f1[x] * stat(x, j);
        mean2[j] += f2[x] * stat(x, j);
      }
    for (int x = 0; x < kPoints; ++x) {
      jac(x, 0) = alpha * (1 - alpha) * (f1[x] - f2[x]);
      for (int j = 0; j < 2; ++j) {
        jac(x, 1 + j) = alpha * f1[x] * (stat(x, j) - mean1[j]);
        jac(x, 3 + j) = (1 - alpha) * f2[x] * (stat(x, j) - mean2[j]);
      }
    }
    return 0;
  }
};

double max_residual(const Residual& fn, const Eigen::VectorXd& z) {
  Eigen::VectorXd r(kPoints);
  fn(z, r);
  return r.cwiseAbs().maxCoeff();
}

// Supports that are not the whole pentagon split into at most two edges or
// vertices, each of which carries every distribution on it.
bool exact_split(const std::array<double, kPoints>& p, const std::vector<bool>& in, PentagonFit& fit) {
  std::vector<std::vector<int>> pieces;
  for (int x = 0; x < kPoints; ++x) {
    if (!in[x]) continue;
    pieces.push_back({x});
    if (in[(x + 1) % kPoints]) pieces.push_back({x, (x + 1) % kPoints});
  }
  auto mass = [&](const std::vector<int>& s) {
    double m = 0;
    for (int x : s) m += p[x];
    return m;
  };
  auto fill = [&](const std::vector<int>& s, std::array<double, kPoints>& f) {
    const double m = mass(s);
    f.fill(0);
    for (int x : s) f[x] = p[x] / m;
  };
  const int count = static_cast<int>(std::count(in.begin(), in.end(), true));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (static_cast<int>(pieces[i].size()) == count) {
      fit.alpha = 1;
      fill(pieces[i], fit.f1);
      fit.f2 = fit.f1;
      return true;
    }
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (static_cast<int>(pieces[i].size() + pieces[j].size()) != count) continue;
      bool disjoint = std::none_of(pieces[i].begin(), pieces[i].end(), [&](int x) {
        return std::find(pieces[j].begin(), pieces[j].end(), x) != pieces[j].end();
      });
      if (!disjoint) continue;
      fit.alpha = mass(pieces[i]);
      fill(pieces[i], fit.f1);
      fill(pieces[j], fit.f2);
      return true;
    }
  }
  return false;
}

}  // namespace

PentagonFit pentagon_two_mixture_solve(const Distribution& target, const PentagonOptions& options) {
  if (target.size() != kPoints || target.space().variables() != 1)
    throw ShapeError("pentagon solver needs a distribution on five points");
  Residual fn;
  std::vector<bool> in(kPoints);
  for (int x = 0; x < kPoints; ++x) {
    fn.p[x] = to_double(target[static_cast<std::size_t>(x)]);
    in[x] = target[static_cast<std::size_t>(x)] != 0;
  }

  PentagonFit fit;
  auto residual_of = [&](const PentagonFit& f) {
    double worst = 0;
    for (int x = 0; x < kPoints; ++x) worst = std::max(worst, std::fabs(f.alpha * f.f1[x] + (1 - f.alpha) * f.f2[x] - fn.p[x]));
    return worst;
  };
  if (std::find(in.begin(), in.end(), false) != in.end() && exact_split(fn.p, in, fit)) {
    fit.exact = true;
    fit.residual = residual_of(fit);
    fit.success = fit.residual < options.tol;
    return fit;
  }

  const double stop = options.tol * 1e-2;
  double best = INFINITY;
  Eigen::VectorXd best_z(5);
  auto attempt = [&](Eigen::VectorXd z) {
    ++fit.starts;
    Eigen::LevenbergMarquardt<Residual> lm(fn);
    lm.parameters.xtol = 1e-15;
    lm.parameters.ftol = 1e-15;
    lm.parameters.gtol = 1e-15;
    lm.parameters.maxfev = 2000;
    lm.minimize(z);
    const double r = max_residual(fn, z);
    if (r < best) {
      best = r;
      best_z = z;
    }
    return best < stop;
  };

  // Grid of starts: weight logit x two directions for each component.
  const double radius = 3;
  bool done = false;
  for (int ia = 0; ia < 5 && !done; ++ia)
    for (int i1 = 0; i1 < 5 && !done; ++i1)
      for (int i2 = 0; i2 < 5 && !done; ++i2) {
        const double g1 = 2 * std::numbers::pi * i1 / 5, g2 = 2 * std::numbers::pi * i2 / 5;
        Eigen::VectorXd z(5);
        z << -2 + ia, radius * std::cos(g1), radius * std::sin(g1), radius * std::cos(g2), radius * std::sin(g2);
        done = attempt(z);
      }
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0, 3);
  for (std::size_t s = 0; s < options.extra_starts && !done; ++s) {
    Eigen::VectorXd z(5);
    for (int i = 0; i < 5; ++i) z(i) = normal(rng);
    done = attempt(z);
  }

  fit.alpha = Residual::sigmoid(best_z(0));
  fit.f1 = member(best_z(1), best_z(2));
  fit.f2 = member(best_z(3), best_z(4));
  fit.residual = best;
  fit.success = best < options.tol;
  return fit;
}

}  // namespace ssetkit
