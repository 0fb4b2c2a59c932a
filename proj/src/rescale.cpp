#include "artifact/rescale.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "artifact/format.hpp"
#include "artifact/roots.hpp"

namespace artifact {

namespace {
namespace mp = boost::multiprecision;

Real ten_pow(int e) { return mp::pow(Real(10), e); }

ParamPoint to_param(const Point& p) {
  if (p.inf) return ParamPoint::infinity();
  if (!is_rational(p.z)) throw JobError("exact conjugators need rational target points");
  return ParamPoint::finite(ParamCoeff(p.z.a.a));
}

Point specialize_point(const ParamPoint& p, const Rational& a) {
  if (p.inf) return Point::infinity();
  return Point::finite(to_scalar(specialize(p.z, a)));
}

CxMoebius specialize_moebius(const ParamMoebius& m, const Rational& a) {
  return CxMoebius(to_cx(specialize(m.a, a)), to_cx(specialize(m.b, a)), to_cx(specialize(m.c, a)),
                   to_cx(specialize(m.d, a)));
}

// Numerator of f(z) - z, whose roots are the finite fixed points.
Poly<Scalar> fixed_poly(const RationalFunction& f) { return f.num() - f.den() * Poly<Scalar>::x(); }

CxPoint iterate_numeric(const CxPoly& num, const CxPoly& den, CxPoint p, int n) {
  for (int i = 0; i < n; ++i) p = eval(num, den, p);
  return p;
}

Real residual(const CxPoly& num, const CxPoly& den, const CxPoint& p, int n) {
  CxPoint q = iterate_numeric(num, den, p, n);
  if (!p.inf && !q.inf) return abs(q.z - p.z);
  return chordal(p, q);
}

// Solve the homogeneous system A x = 0 (one more column than rows) by
// Gaussian elimination with full pivoting.
std::vector<Cx> null_vector(std::vector<std::vector<Cx>> A) {
  size_t m = A.size(), n = A.empty() ? 1 : A[0].size();
  std::vector<size_t> col(n);
  for (size_t j = 0; j < n; ++j) col[j] = j;
  size_t rank = 0;
  for (size_t r = 0; r < m; ++r) {
    Real best = -1;
    size_t bi = r, bj = r;
    for (size_t i = r; i < m; ++i)
      for (size_t j = r; j < n; ++j) {
        Real v = abs(A[i][j]);
        if (v > best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best <= 0) break;
    std::swap(A[r], A[bi]);
    for (auto& row : A) std::swap(row[r], row[bj]);
    std::swap(col[r], col[bj]);
    for (size_t i = r + 1; i < m; ++i) {
      Cx f = A[i][r] / A[r][r];
      for (size_t j = r; j < n; ++j) A[i][j] -= f * A[r][j];
    }
    ++rank;
  }
  // Free variables: set the first one to 1, the others to 0.
  std::vector<Cx> y(n);
  y[rank] = Cx(1);
  for (size_t r = rank; r-- > 0;) {
    Cx s;
    for (size_t j = r + 1; j < n; ++j) s += A[r][j] * y[j];
    y[r] = -s / A[r][r];
  }
  std::vector<Cx> x(n);
  for (size_t j = 0; j < n; ++j) x[col[j]] = y[j];
  return x;
}

struct Fit {
  int degree = -1;
  CxPoly num, den;
  Real max_residual = 0;
};

int effective_degree(const CxPoly& p, const Real& thresh) {
  int d = (int)p.size() - 1;
  while (d >= 0 && abs(p[d]) <= thresh) --d;
  return d;
}

// Smallest degree whose interpolant through the first 2d+1 nodes matches the
// remaining nodes within tol.
Fit fit_rational(const std::vector<Cx>& z, const std::vector<Cx>& w, int dmax, const Real& tol, const Real& zero) {
  for (int d = 0; d <= dmax; ++d) {
    size_t need = 2 * d + 1;
    if (z.size() < need + 2) break;
    std::vector<std::vector<Cx>> A;
    for (size_t j = 0; j < need; ++j) {
      std::vector<Cx> row;
      Cx p(1);
      std::vector<Cx> pw;
      for (int i = 0; i <= d; ++i) {
        pw.push_back(p);
        p = p * z[j];
      }
      for (int i = 0; i <= d; ++i) row.push_back(pw[i]);
      for (int i = 0; i <= d; ++i) row.push_back(-w[j] * pw[i]);
      A.push_back(std::move(row));
    }
    auto x = null_vector(A);
    CxPoly num(x.begin(), x.begin() + d + 1), den(x.begin() + d + 1, x.end());
    Real scale = 0;
    for (const auto& c : x) scale = std::max(scale, abs(c));
    int dd = effective_degree(den, zero * scale);
    if (dd < 0) continue;
    Cx lead = den[dd];
    for (auto& c : num) c /= lead;
    for (auto& c : den) c /= lead;
    Real worst = 0;
    for (size_t j = need; j < z.size(); ++j) {
      Cx dv = eval(den, z[j]);
      if (is_zero(dv)) {
        worst = Real(1e300);
        break;
      }
      worst = std::max(worst, abs(eval(num, z[j]) / dv - w[j]) / (1 + abs(w[j])));
    }
    if (worst <= tol) {
      Real s2 = 0;
      for (const auto& c : num) s2 = std::max(s2, abs(c));
      for (const auto& c : den) s2 = std::max(s2, abs(c));
      int dn = effective_degree(num, zero * s2), dd2 = effective_degree(den, zero * s2);
      num.resize(std::max(dn, 0) + 1);
      den.resize(dd2 + 1);
      return {std::max(dn, dd2), num, den, worst};
    }
  }
  return {};
}

RationalFunction snap_map(const CxPoly& num, const CxPoly& den, const std::vector<Real>& nerr,
                          const std::vector<Real>& derr, bool& ok) {
  ok = true;
  auto snap_poly = [&](const CxPoly& p, const std::vector<Real>& err) {
    std::vector<Scalar> cs;
    for (size_t i = 0; i < p.size(); ++i) {
      Real tol = std::max(Real(1e-8), 10 * (i < err.size() ? err[i] : Real(0)));
      auto re = snap_rational(p[i].re, 1L << 16, tol), im = snap_rational(p[i].im, 1L << 16, tol);
      if (!re || !im) {
        ok = false;
        return Poly<Scalar>();
      }
      cs.push_back(Scalar(GaussianRational(*re, *im)));
    }
    return Poly<Scalar>(cs);
  };
  Poly<Scalar> n = snap_poly(num, nerr);
  if (!ok) return {};
  Poly<Scalar> d = snap_poly(den, derr);
  if (!ok || d.is_zero_poly()) {
    ok = false;
    return {};
  }
  return RationalFunction(n, d);
}
}  // namespace

bool Conjugator::exact() const {
  if (type == Type::ExplicitMoebius) return true;
  return std::all_of(points.begin(), points.end(), [](const MarkedPoint& p) { return p.kind == MarkedPoint::Kind::Exact; });
}

std::string status_name(LimitStatus s) {
  switch (s) {
    case LimitStatus::Converged:
      return "Converged";
    case LimitStatus::Divergent:
      return "Divergent";
    case LimitStatus::DegreeInstability:
      return "DegreeInstability";
  }
  return "";
}

std::vector<Rational> default_samples(const Rational& a0, int direction) {
  std::vector<Rational> out;
  mpz_class p = 1000;
  for (int j = 3; j <= 6; ++j) {
    Rational a = a0 - Rational(direction) / Rational(p);
    a.canonicalize();
    out.push_back(a);
    p *= 10;
  }
  return out;
}

std::vector<Rational> job_samples(const RescalingJob& job) {
  return job.samples.empty() ? default_samples(job.family.a0, job.direction) : job.samples;
}

ParamMoebius exact_conjugator(const Conjugator& c) {
  if (c.type == Conjugator::Type::ExplicitMoebius) return c.moebius;
  if (!c.exact()) throw JobError("conjugator has tracked points; use the numeric engine");
  return ParamMoebius::from_triples(c.points[0].exact, c.points[1].exact, c.points[2].exact, to_param(c.targets[0]),
                                    to_param(c.targets[1]), to_param(c.targets[2]));
}

ParamRationalFunction conjugated_iterate(const RescalingJob& job) {
  if (job.k < 1) throw JobError("period must be positive");
  ParamRationalFunction g = iterate(job.family.f, job.k);
  ParamMoebius M = exact_conjugator(job.conjugator);
  if (M.is_identity()) return g;
  return M.conjugate(g);
}

LimitResult exact_limit(const RescalingJob& job) {
  ParamRationalFunction F = conjugated_iterate(job);
  LimitInfo info = limit_at_param(F, job.family.a0);
  LimitResult r;
  r.mode = LimitMode::Exact;
  r.exact_map = info.map;
  r.generic_degree = info.generic_degree;
  r.limit_degree = info.limit_degree;
  r.cancelled_order = info.cancelled_order;
  if (r.limit_degree < r.generic_degree)
    r.notes.push_back("degree drops from " + std::to_string(r.generic_degree) + " to " + std::to_string(r.limit_degree));
  if (r.limit_degree < 2) {
    r.status = LimitStatus::DegreeInstability;
    r.message = "limit has degree " + std::to_string(r.limit_degree) + " < 2: not a rescaling limit";
  }
  return r;
}

TrackedSolution periodic_candidates(const RationalFunction& f, int n) {
  if (n < 1) throw JobError("period must be positive");
  TrackedSolution out;
  RationalFunction g = iterate(f, n);
  Poly<Scalar> P = fixed_poly(g);
  for (int m = 1; m < n; ++m) {
    if (n % m) continue;
    Poly<Scalar> Q = fixed_poly(iterate(f, m));
    for (Poly<Scalar> h = gcd(P, Q); h.degree() > 0; h = gcd(P, Q)) P = P / h;
  }
  auto rs = exact_roots(P);
  for (const auto& [pt, mult] : rs.roots) {
    out.candidates.push_back(to_cx(pt));
    out.exact_candidates.push_back(pt);
  }
  for (const auto& [fac, mult] : rs.unresolved)
    for (const auto& z : polynomial_roots(to_cx(fac))) {
      out.candidates.push_back(CxPoint::finite(z));
      out.exact_candidates.push_back(std::nullopt);
    }
  const Point inf = Point::infinity();
  if (g.eval(inf) == inf) {
    bool lower = false;
    for (int m = 1; m < n; ++m)
      if (n % m == 0 && iterate(f, m).eval(inf) == inf) lower = true;
    if (!lower) {
      out.candidates.push_back(CxPoint::infinity());
      out.exact_candidates.push_back(inf);
    }
  }
  return out;
}

TrackedSolution solve_tracked_point(const Family& fam, const TrackedSpec& spec, const Rational& a, int digits,
                                    std::optional<CxPoint> seed, std::optional<Real> radius) {
  PrecisionScope prec(digits);
  RationalFunction f = specialize(fam.f, a);
  TrackedSolution sol = periodic_candidates(f, spec.period);
  if (sol.candidates.empty()) throw TrackingFailure("no point of period " + std::to_string(spec.period));
  CxPoint s = seed ? *seed : to_cx(spec.target);
  std::vector<size_t> idx(sol.candidates.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<Real> dist;
  // Distance in the chart of the seed: infinity is far from every finite point.
  for (const auto& c : sol.candidates) {
    if (c.inf || s.inf) dist.push_back(c.inf && s.inf ? Real(0) : std::numeric_limits<Real>::infinity());
    else dist.push_back(abs(c.z - s.z));
  }
  std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) { return dist[x] < dist[y]; });
  const Real& d0 = dist[idx[0]];
  if (idx.size() > 1) {
    const Real& d1 = dist[idx[1]];
    if (mp::isfinite(d1) && d1 - d0 <= ten_pow(-digits / 2) * (d1 + ten_pow(-digits)))
      throw AmbiguousTracking("several candidates equidistant from the target", sol.candidates);
    Real rad = radius ? *radius : d1 / 2;
    if (d0 > rad) throw TrackingFailure("no candidate within the selection radius");
  } else if (radius && d0 > *radius) {
    throw TrackingFailure("no candidate within the selection radius");
  }
  sol.point = sol.candidates[idx[0]];
  sol.exact = sol.exact_candidates[idx[0]];
  CxPoly num = to_cx(f.num()), den = to_cx(f.den());
  sol.residual = sol.exact ? Real(0) : residual(num, den, sol.point, spec.period);
  if (sol.residual > ten_pow(-digits / 2)) throw TrackingFailure("residual too large: " + to_string(sol.residual, 6));
  return sol;
}

LimitResult numeric_limit(const RescalingJob& job) {
  if (job.digits < 30) throw JobError("numeric limits need at least 30 digits");
  if (job.k < 1) throw JobError("period must be positive");
  PrecisionScope prec(job.digits + 10);
  const Rational& a0 = job.family.a0;
  std::vector<Rational> samples = job_samples(job);
  if (samples.size() < 3) throw JobError("need at least three samples");
  std::vector<Real> t;
  for (size_t i = 0; i < samples.size(); ++i) {
    Rational d = samples[i] - a0;
    if (is_zero(d)) throw JobError("sample equals the degeneration point");
    if (i > 0) {
      Rational p = samples[i - 1] - a0;
      if (sgn(p) != sgn(d) || abs(d) >= abs(p)) throw JobError("samples must approach a0 strictly monotonically");
    }
    t.push_back(to_real(abs(d)));
  }

  LimitResult res;
  res.mode = LimitMode::Numeric;
  const int Dg = iterate(specialize(job.family.f, samples[0]), job.k).degree();
  res.generic_degree = Dg;

  // Nodes on a Fibonacci (sunflower) pattern in the disk of radius 6/5.
  const int N = 2 * Dg + 9;
  const Real golden = (3 - mp::sqrt(Real(5))) / 2;
  const Real twopi = 2 * mp::acos(Real(-1));
  std::vector<Cx> nodes;
  for (int j = 0; j < N; ++j) {
    Real rho = Real(6) / 5 * mp::sqrt((Real(j) + Real(1) / 2) / N);
    Real th = twopi * golden * j;
    nodes.push_back(Cx(rho * mp::cos(th), rho * mp::sin(th)));
  }

  std::vector<std::vector<std::optional<Cx>>> values;  // [sample][node]
  std::vector<std::optional<CxPoint>> seeds(3);
  for (const auto& a : samples) {
    SampleRecord rec;
    rec.a = a;
    RationalFunction g = iterate(specialize(job.family.f, a), job.k);
    CxPoly gn = to_cx(g.num()), gd = to_cx(g.den());
    CxMoebius M;
    if (job.conjugator.type == Conjugator::Type::ExplicitMoebius) {
      M = specialize_moebius(job.conjugator.moebius, a);
    } else {
      std::array<CxPoint, 3> pts;
      for (int i = 0; i < 3; ++i) {
        const auto& mp_ = job.conjugator.points[i];
        if (mp_.kind == MarkedPoint::Kind::Exact) {
          pts[i] = to_cx(specialize_point(mp_.exact, a));
        } else {
          auto sol = solve_tracked_point(job.family, mp_.tracked, a, job.digits + 10, seeds[i]);
          seeds[i] = sol.point;
          pts[i] = sol.point;
          rec.tracked.push_back(sol.point);
          rec.tracked_residuals.push_back(sol.residual);
        }
      }
      M = CxMoebius::from_triples(pts[0], pts[1], pts[2], to_cx(job.conjugator.targets[0]),
                                  to_cx(job.conjugator.targets[1]), to_cx(job.conjugator.targets[2]));
    }
    CxMoebius Mi = M.inverse();
    std::vector<std::optional<Cx>> row;
    for (const auto& z : nodes) {
      CxPoint w = M(eval(gn, gd, Mi(CxPoint::finite(z))));
      if (w.inf) {
        row.push_back(std::nullopt);
      } else {
        rec.node_spread = std::max(rec.node_spread, abs(w.z));
        row.push_back(w.z);
      }
    }
    values.push_back(std::move(row));
    res.samples.push_back(std::move(rec));
  }

  // Richardson (polynomial in t = |a - a0|) extrapolation per node, with the
  // farthest sample dropped for the error estimate.
  const size_t S = samples.size();
  res.extrapolation_order = (int)S - 1;
  std::vector<Real> t_sub(t.begin() + 1, t.end());
  std::vector<Cx> zs, full, sub;
  std::vector<Real> growth;
  for (int j = 0; j < N; ++j) {
    std::vector<Cx> y;
    for (size_t i = 0; i < S; ++i)
      if (values[i][j]) y.push_back(*values[i][j]);
    if (y.size() < S) {
      res.holes.push_back(j);
      res.node_errors.push_back(Real(-1));
      continue;
    }
    Cx e = neville_at_zero(t, y);
    Cx e2 = neville_at_zero(t_sub, std::vector<Cx>(y.begin() + 1, y.end()));
    Real err = abs(e - e2);
    res.node_errors.push_back(err);
    Real a1 = abs(y[S - 2]), a2 = abs(y[S - 1]);
    if (a1 > 0 && a2 > 0) growth.push_back(Real(mp::log(a2 / a1) / mp::log(t[S - 2] / t[S - 1])));
    if (err > Real(1e-6) * (1 + abs(e))) {
      res.holes.push_back(j);
      continue;
    }
    zs.push_back(nodes[j]);
    full.push_back(e);
    sub.push_back(e2);
  }
  if (!growth.empty()) {
    std::sort(growth.begin(), growth.end());
    res.growth_rate = growth[growth.size() / 2];
  }
  if ((int)zs.size() * 2 < N) {
    res.status = LimitStatus::Divergent;
    res.message = std::to_string(res.holes.size()) + " of " + std::to_string(N) +
                  " node sequences do not converge; median growth exponent " +
                  (res.growth_rate ? to_string(*res.growth_rate, 6) : std::string("n/a"));
    return res;
  }

  Real maxerr = 0;
  for (size_t j = 0; j < zs.size(); ++j) maxerr = std::max(maxerr, abs(full[j] - sub[j]));
  Real tol = std::max(Real(1000) * maxerr, ten_pow(-job.digits / 2));
  Real zero = std::max(Real(100) * maxerr, ten_pow(-job.digits / 2));
  Fit f1 = fit_rational(zs, full, Dg, tol, zero);
  Fit f2 = fit_rational(zs, sub, Dg, tol, zero);
  if (f1.degree < 0) {
    res.status = LimitStatus::DegreeInstability;
    res.message = "no rational map of degree <= " + std::to_string(Dg) + " fits the extrapolated values";
    return res;
  }
  res.num = f1.num;
  res.den = f1.den;
  res.limit_degree = f1.degree;
  auto diff = [](const CxPoly& p, const CxPoly& q) {
    std::vector<Real> e;
    for (size_t i = 0; i < p.size(); ++i) e.push_back(i < q.size() ? abs(p[i] - q[i]) : abs(p[i]));
    return e;
  };
  res.num_err = diff(f1.num, f2.num);
  res.den_err = diff(f1.den, f2.den);
  if (f2.degree != f1.degree) {
    res.status = LimitStatus::DegreeInstability;
    res.message = "fitted degree changes between sample subsets (" + std::to_string(f1.degree) + " vs " +
                  std::to_string(f2.degree) + ")";
    return res;
  }
  if (f1.degree < 2) {
    res.status = LimitStatus::DegreeInstability;
    res.message = "the conjugated iterate (degree " + std::to_string(Dg) + ") tends to a map of degree " +
                  std::to_string(f1.degree) + " < 2: not a rescaling limit";
    return res;
  }
  bool ok = false;
  RationalFunction cand = snap_map(res.num, res.den, res.num_err, res.den_err, ok);
  if (ok) {
    res.exact_map = cand;
    res.notes.push_back("snapped candidate (denominators <= 2^16): " + to_string(cand));
  } else {
    res.notes.push_back("coefficients did not snap to small rationals");
  }
  return res;
}

Family milnor_family_spec() { return {"milnor", milnor_family(), "a", Rational(1)}; }

RescalingJob job_milnor_k1() {
  RescalingJob j;
  j.name = "milnor_k1";
  j.family = milnor_family_spec();
  j.k = 1;
  return j;
}

RescalingJob job_milnor_k2() {
  RescalingJob j = job_milnor_k1();
  j.name = "milnor_k2";
  j.k = 2;
  return j;
}

RescalingJob job_milnor_k3(const Point& target) {
  RescalingJob j;
  j.name = "milnor_k3";
  j.family = milnor_family_spec();
  j.k = 3;
  j.conjugator.type = Conjugator::Type::MarkedTriple;
  ParamCoeff a = param_a();
  j.conjugator.points = {MarkedPoint::of(ParamPoint::finite(ParamCoeff(3) * a)), MarkedPoint::of(ParamPoint::finite(-a)),
                         MarkedPoint::periodic(3, Point::finite(Scalar(-1)))};
  j.conjugator.targets = {Point::infinity(), Point::finite(Scalar(0)), target};
  return j;
}

RescalingJob job_milnor_k3_misconfigured() {
  RescalingJob j = job_milnor_k3();
  j.name = "milnor_k3_period2";
  j.conjugator.points[2] = MarkedPoint::periodic(2, Point::finite(Scalar(-1)));
  return j;
}

const std::vector<NamedJob>& builtin_jobs() {
  static const std::vector<NamedJob> all{
      {"milnor_k1", job_milnor_k1},
      {"milnor_k2", job_milnor_k2},
      {"milnor_k3", [] { return job_milnor_k3(); }},
      {"milnor_k3_period2", job_milnor_k3_misconfigured},
      {"milnor_k3_target1", [] { return job_milnor_k3(Point::finite(Scalar(1))); }},
  };
  return all;
}

}  // namespace artifact
