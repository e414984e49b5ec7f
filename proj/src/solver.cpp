#include "modkit/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "modkit/errors.hpp"

namespace modkit {

double energy(const Density& rho, double p, const EdgeVector& sigma) {
  if (!(p >= 1.0)) throw DomainError("energy needs p >= 1, got " + std::to_string(p));
  if (rho.size() != sigma.size()) {
    throw DomainError("density and weights differ in size");
  }
  double total = 0.0;
  for (std::size_t e = 0; e < rho.size(); ++e) {
    if (std::isinf(p)) {
      total = std::max(total, sigma[e] * rho[e]);
    } else {
      total += sigma[e] * std::pow(rho[e], p);
    }
  }
  return total;
}

double rho_length(const Density& rho, const UsageRow& row) {
  if (rho.size() != row.usage.size()) {
    throw DomainError("row '" + row.label + "' has " +
                      std::to_string(row.usage.size()) + " entries, density has " +
                      std::to_string(rho.size()));
  }
  double len = 0.0;
  for (std::size_t e = 0; e < rho.size(); ++e) len += row.usage[e] * rho[e];
  return len;
}

namespace {

struct SparseRow {
  std::vector<int> index;
  std::vector<double> value;

  double dot(const Eigen::VectorXd& x) const {
    double s = 0.0;
    for (std::size_t i = 0; i < index.size(); ++i) s += value[i] * x[index[i]];
    return s;
  }
  void axpy(double a, Eigen::VectorXd& y) const {
    for (std::size_t i = 0; i < index.size(); ++i) y[index[i]] += a * value[i];
  }
};

class InteriorPoint {
 public:
  InteriorPoint(std::vector<SparseRow> rows, Eigen::VectorXd sigma, double p,
                double tol)
      : rows_(std::move(rows)),
        sigma_(std::move(sigma)),
        p_(p),
        tol_(tol),
        m_(static_cast<int>(rows_.size())),
        k_(static_cast<int>(sigma_.size())) {}

  bool run(int max_iter);

  const Eigen::VectorXd& x() const { return x_; }
  const Eigen::VectorXd& lambda() const { return lam_; }
  const Eigen::VectorXd& slack() const { return s_; }
  int iterations() const { return iter_; }

 private:
  void residuals() {
    g_ = p_ * sigma_.array() * x_.array().pow(p_ - 1.0);
    rd_ = g_ - nu_;
    for (int i = 0; i < m_; ++i) rows_[i].axpy(-lam_[i], rd_);
    for (int i = 0; i < m_; ++i) rp_[i] = rows_[i].dot(x_) - s_[i] - 1.0;
  }

  double mu() const {
    return (s_.dot(lam_) + x_.dot(nu_)) / static_cast<double>(m_ + k_);
  }

  double dual_error() const {
    return rd_.lpNorm<Eigen::Infinity>() / (1.0 + g_.lpNorm<Eigen::Infinity>());
  }
  double primal_error() const { return rp_.lpNorm<Eigen::Infinity>(); }

  bool converged(double scale) const {
    return mu() <= 1e-4 * scale && dual_error() <= 1e-3 * scale &&
           primal_error() <= 1e-3 * scale;
  }

  // Solves the reduced Newton system for right-hand sides cs, cx.
  void direction(const Eigen::VectorXd& cs, const Eigen::VectorXd& cx,
                 Eigen::VectorXd& dx, Eigen::VectorXd& ds, Eigen::VectorXd& dl,
                 Eigen::VectorXd& dn) {
    Eigen::VectorXd rhs = -rd_ + (cx.array() / x_.array()).matrix();
    for (int i = 0; i < m_; ++i) {
      rows_[i].axpy(cs[i] / s_[i] - lam_[i] / s_[i] * rp_[i], rhs);
    }
    dx = ldlt_.solve(rhs);
    ds.resize(m_);
    dl.resize(m_);
    for (int i = 0; i < m_; ++i) {
      ds[i] = rows_[i].dot(dx) + rp_[i];
      dl[i] = cs[i] / s_[i] - lam_[i] / s_[i] * ds[i];
    }
    dn = ((cx.array() - nu_.array() * dx.array()) / x_.array()).matrix();
  }

  static double max_step(const Eigen::VectorXd& v, const Eigen::VectorXd& dv) {
    double a = 1.0;
    for (int i = 0; i < v.size(); ++i) {
      if (dv[i] < 0.0) a = std::min(a, -v[i] / dv[i]);
    }
    return a;
  }

  std::vector<SparseRow> rows_;
  Eigen::VectorXd sigma_;
  double p_;
  double tol_;
  int m_;
  int k_;
  int iter_ = 0;
  Eigen::VectorXd x_, s_, lam_, nu_, g_, rd_, rp_;
  Eigen::LDLT<Eigen::MatrixXd> ldlt_;
};

bool InteriorPoint::run(int max_iter) {
  x_ = Eigen::VectorXd::Ones(k_);
  s_.resize(m_);
  rp_.resize(m_);
  for (int i = 0; i < m_; ++i) s_[i] = std::max(rows_[i].dot(x_) - 1.0, 1.0);
  lam_ = Eigen::VectorXd::Ones(m_);
  nu_ = Eigen::VectorXd::Ones(k_);

  Eigen::MatrixXd K(k_, k_);
  for (iter_ = 0; iter_ < max_iter; ++iter_) {
    residuals();
    if (converged(tol_)) return true;
    const double mu0 = mu();

    K.setZero();
    Eigen::ArrayXd h = p_ * (p_ - 1.0) * sigma_.array() * x_.array().pow(p_ - 2.0);
    K.diagonal() = (h + nu_.array() / x_.array()).matrix();
    for (int i = 0; i < m_; ++i) {
      const double w = lam_[i] / s_[i];
      const auto& r = rows_[i];
      for (std::size_t a = 0; a < r.index.size(); ++a) {
        for (std::size_t b = 0; b < r.index.size(); ++b) {
          K(r.index[a], r.index[b]) += w * r.value[a] * r.value[b];
        }
      }
    }
    ldlt_.compute(K);
    if (ldlt_.info() != Eigen::Success) break;

    Eigen::VectorXd dx, ds, dl, dn;
    Eigen::VectorXd cs = -(s_.array() * lam_.array()).matrix();
    Eigen::VectorXd cx = -(x_.array() * nu_.array()).matrix();
    direction(cs, cx, dx, ds, dl, dn);
    double a_aff = std::min({max_step(x_, dx), max_step(s_, ds),
                             max_step(lam_, dl), max_step(nu_, dn)});
    double mu_aff = ((s_ + a_aff * ds).dot(lam_ + a_aff * dl) +
                     (x_ + a_aff * dx).dot(nu_ + a_aff * dn)) /
                    static_cast<double>(m_ + k_);
    double target = std::max(std::pow(mu_aff / mu0, 3.0) * mu0, 1e-6 * tol_);

    cs = (target - s_.array() * lam_.array() - ds.array() * dl.array()).matrix();
    cx = (target - x_.array() * nu_.array() - dx.array() * dn.array()).matrix();
    direction(cs, cx, dx, ds, dl, dn);
    double a = std::min({max_step(x_, dx), max_step(s_, ds), max_step(lam_, dl),
                         max_step(nu_, dn)});
    a = std::min(1.0, 0.995 * a);
    if (!std::isfinite(a) || a < 1e-14) break;
    x_ += a * dx;
    s_ += a * ds;
    lam_ += a * dl;
    nu_ += a * dn;
  }
  residuals();
  return converged(1e4 * tol_);
}

// Rho as a function of the multipliers: stationarity gives
// p w x^(p-1) = y with y = N^T lambda.
double rho_of(double y, double w, double p) {
  return y > 0.0 ? std::pow(y / (p * w), 1.0 / (p - 1.0)) : 0.0;
}

// Newton on N_T x(lambda) = 1 over the rows the interior point found
// tight. Degenerate edges come out exactly zero. Returns false, leaving x
// and lambda alone, when the guessed tight set does not give a KKT point.
bool polish(const std::vector<SparseRow>& rows, const Eigen::VectorXd& w, double p,
            const Eigen::VectorXd& slack, Eigen::VectorXd& x, Eigen::VectorXd& lambda) {
  const int m = static_cast<int>(rows.size());
  const int k = static_cast<int>(w.size());
  std::vector<int> tight;
  for (int i = 0; i < m; ++i) {
    if (lambda[i] > slack[i]) tight.push_back(i);
  }
  const int t = static_cast<int>(tight.size());
  if (t == 0) return false;
  Eigen::MatrixXd N = Eigen::MatrixXd::Zero(t, k);
  for (int a = 0; a < t; ++a) {
    const auto& r = rows[tight[a]];
    for (std::size_t j = 0; j < r.index.size(); ++j) N(a, r.index[j]) = r.value[j];
  }
  Eigen::VectorXd lam(t);
  for (int a = 0; a < t; ++a) lam[a] = lambda[tight[a]];

  Eigen::VectorXd xs(k), y(k), F(t);
  auto evaluate = [&](const Eigen::VectorXd& l) {
    y = N.transpose() * l;
    for (int e = 0; e < k; ++e) xs[e] = rho_of(y[e], w[e], p);
    F = N * xs - Eigen::VectorXd::Ones(t);
    return F.lpNorm<Eigen::Infinity>();
  };
  double err = evaluate(lam);
  for (int it = 0; it < 50 && err > 1e-14; ++it) {
    Eigen::VectorXd d(k);
    for (int e = 0; e < k; ++e) d[e] = y[e] > 0.0 ? xs[e] / ((p - 1.0) * y[e]) : 0.0;
    Eigen::MatrixXd J = N * d.asDiagonal() * N.transpose();
    Eigen::LDLT<Eigen::MatrixXd> ldlt(J);
    if (ldlt.info() != Eigen::Success) return false;
    Eigen::VectorXd step = ldlt.solve(-F);
    if (!step.allFinite()) return false;
    double a = 1.0;
    for (; a > 1e-10; a *= 0.5) {
      Eigen::VectorXd trial = lam + a * step;
      if (trial.minCoeff() <= 0.0) continue;
      double trial_err = evaluate(trial);
      if (trial_err < err) {
        lam = trial;
        err = trial_err;
        break;
      }
    }
    if (a <= 1e-10) break;
  }
  err = evaluate(lam);
  if (err > 1e-12 || lam.minCoeff() <= 0.0) return false;
  for (int i = 0; i < m; ++i) {
    if (rows[i].dot(xs) < 1.0 - 1e-12) return false;
  }
  x = xs;
  lambda.setZero();
  for (int a = 0; a < t; ++a) lambda[tight[a]] = lam[a];
  return true;
}

}  // namespace

SubproblemSolution solve_subproblem(const std::vector<UsageRow>& active,
                                    double p, const EdgeVector& sigma,
                                    double tol) {
  if (!(p > 1.0) || std::isinf(p)) {
    throw DomainError("solver needs 1 < p < infinity, got " + std::to_string(p));
  }
  if (active.empty()) throw DomainError("subproblem has no rows");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const std::size_t n_edges = sigma.size();
  for (double s : sigma) {
    if (!(s > 0.0)) throw DomainError("weights must be positive");
  }

  // Only edges used by some row can be positive at the optimum.
  std::vector<int> column(n_edges, -1);
  std::vector<std::size_t> used;
  for (const auto& row : active) {
    if (row.usage.size() != n_edges) {
      throw DomainError("row '" + row.label + "' has the wrong dimension");
    }
    bool positive = false;
    for (std::size_t e = 0; e < n_edges; ++e) {
      if (row.usage[e] < 0.0) throw DomainError("row '" + row.label + "' is negative");
      if (row.usage[e] > 0.0) {
        positive = true;
        if (column[e] < 0) {
          column[e] = static_cast<int>(used.size());
          used.push_back(e);
        }
      }
    }
    if (!positive) throw DomainError("row '" + row.label + "' is all zero");
  }
  std::vector<SparseRow> rows;
  rows.reserve(active.size());
  for (const auto& row : active) {
    SparseRow r;
    for (std::size_t e = 0; e < n_edges; ++e) {
      if (row.usage[e] > 0.0) {
        r.index.push_back(column[e]);
        r.value.push_back(row.usage[e]);
      }
    }
    rows.push_back(std::move(r));
  }
  // The minimizer is invariant under scaling sigma; the multipliers scale
  // with it.
  double scale = 0.0;
  for (std::size_t e : used) scale += sigma[e];
  scale /= static_cast<double>(used.size());
  Eigen::VectorXd w(used.size());
  for (std::size_t j = 0; j < used.size(); ++j) w[j] = sigma[used[j]] / scale;

  InteriorPoint ipm(rows, w, p, tol);
  if (!ipm.run(kMaxInteriorIterations)) {
    throw SolverError("interior point method did not converge in " +
                      std::to_string(kMaxInteriorIterations) + " iterations");
  }
  Eigen::VectorXd x = ipm.x();
  Eigen::VectorXd lambda = ipm.lambda();
  polish(rows, w, p, ipm.slack(), x, lambda);

  SubproblemSolution out;
  out.rho.assign(n_edges, 0.0);
  for (std::size_t j = 0; j < used.size(); ++j) out.rho[used[j]] = std::max(0.0, x[j]);
  out.lambda.resize(active.size());
  for (std::size_t i = 0; i < active.size(); ++i) {
    out.lambda[i] = std::max(0.0, lambda[i]) * scale;
  }
  out.iterations = ipm.iterations();
  return out;
}

ModulusResult basic_algorithm(const FamilyOracle& family, double p,
                              const EdgeVector& sigma, double tol) {
  if (!(p > 1.0) || std::isinf(p)) {
    throw DomainError("solver needs 1 < p < infinity, got " + std::to_string(p));
  }
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const std::size_t n_edges = family.graph().num_edges();
  if (sigma.size() != n_edges) {
    throw DomainError("weights have " + std::to_string(sigma.size()) +
                      " entries, graph has " + std::to_string(n_edges) + " edges");
  }

  ModulusResult result;
  result.p = p;
  result.sigma = sigma;
  result.tolerance_used = tol;
  result.active_rows.push_back(family.shortest(Density(n_edges, 0.0)).row);

  for (int it = 1; it <= kMaxOuterIterations; ++it) {
    SubproblemSolution sol = solve_subproblem(result.active_rows, p, sigma, tol / 10);
    result.iterations = it;
    result.rho_star = std::move(sol.rho);
    result.lambda = std::move(sol.lambda);
    ShortestObject next = family.shortest(result.rho_star);
    if (next.length >= 1.0 - tol) {
      result.modulus = energy(result.rho_star, p, sigma);
      return result;
    }
    if (std::find(result.active_rows.begin(), result.active_rows.end(), next.row) !=
        result.active_rows.end()) {
      throw SolverError("stalled: active row '" + next.row.label +
                        "' has length " + std::to_string(next.length));
    }
    result.active_rows.push_back(std::move(next.row));
  }
  throw SolverError("basic algorithm exceeded " +
                    std::to_string(kMaxOuterIterations) + " iterations");
}

ModulusResult basic_algorithm(const FamilyOracle& family, double p, double tol) {
  return basic_algorithm(family, p, family.graph().sigma(), tol);
}

}  // namespace modkit
