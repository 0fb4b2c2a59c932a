#pragma once
// Rescaling limits lim M_a o f_a^k o M_a^-1 of one-parameter families as
// a -> a0: exactly over Q(a), or numerically with tracked periodic points
// and Richardson extrapolation.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "artifact/numeric.hpp"
#include "artifact/param.hpp"

namespace artifact {

struct TrackingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AmbiguousTracking : std::runtime_error {
  AmbiguousTracking(const std::string& msg, std::vector<CxPoint> c) : std::runtime_error(msg), candidates(std::move(c)) {}
  std::vector<CxPoint> candidates;
};
struct JobError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ParamMoebius = Moebius<ParamCoeff>;
using ParamPoint = ExtendedPoint<ParamCoeff>;

struct Family {
  std::string name;
  ParamRationalFunction f;
  std::string param = "a";
  Rational a0;
};

// A periodic point of f_a of exact period n, selected near target.
struct TrackedSpec {
  int period = 1;
  Point target;
};

struct MarkedPoint {
  enum class Kind { Exact, Tracked };
  Kind kind = Kind::Exact;
  ParamPoint exact;  // a point depending rationally on a
  TrackedSpec tracked;
  static MarkedPoint of(const ParamPoint& p) { return {Kind::Exact, p, {}}; }
  static MarkedPoint periodic(int n, const Point& target) { return {Kind::Tracked, {}, {n, target}}; }
};

struct Conjugator {
  enum class Type { ExplicitMoebius, MarkedTriple };
  Type type = Type::ExplicitMoebius;
  ParamMoebius moebius;  // identity by default
  std::array<MarkedPoint, 3> points;
  // M_a sends points[i] to targets[i].
  std::array<Point, 3> targets{Point::infinity(), Point::finite(Scalar(0)), Point::finite(Scalar(1))};
  bool exact() const;
};

struct RescalingJob {
  std::string name;
  Family family;
  int k = 1;
  Conjugator conjugator;
  std::vector<Rational> samples;  // empty: a0 - direction * 10^-j, j = 3..6
  int digits = 50;
  int direction = 1;
};

std::vector<Rational> default_samples(const Rational& a0, int direction);
std::vector<Rational> job_samples(const RescalingJob& job);

enum class LimitMode { Exact, Numeric };
enum class LimitStatus { Converged, Divergent, DegreeInstability };
std::string status_name(LimitStatus s);

struct SampleRecord {
  Rational a;
  std::vector<CxPoint> tracked;
  std::vector<Real> tracked_residuals;
  Real node_spread = 0;  // max |value| over the nodes, a growth indicator
};

struct LimitResult {
  LimitMode mode = LimitMode::Exact;
  LimitStatus status = LimitStatus::Converged;
  std::string message;
  int generic_degree = 0;
  int limit_degree = 0;
  // Exact mode: the limit.  Numeric mode: snapped candidate, when every
  // coefficient snapped.
  std::optional<RationalFunction> exact_map;
  // Numeric mode: fitted limit num/den with monic den, and error bars.
  CxPoly num, den;
  std::vector<Real> num_err, den_err;
  int extrapolation_order = 0;
  std::vector<SampleRecord> samples;
  std::vector<Real> node_errors;
  std::vector<int> holes;  // node indices excluded as non-convergent
  std::optional<Real> growth_rate;
  int cancelled_order = 0;  // exact mode: power of (a - a0) removed
  std::vector<std::string> notes;
};

// M_a as an exact Moebius map over Q(a); requires an exact conjugator.
ParamMoebius exact_conjugator(const Conjugator& c);

// M_a o f_a^k o M_a^-1 over Q(a)(z).
ParamRationalFunction conjugated_iterate(const RescalingJob& job);

LimitResult exact_limit(const RescalingJob& job);

struct TrackedSolution {
  CxPoint point;
  std::optional<Point> exact;  // when the root was resolved exactly
  Real residual = 0;           // |f^n(z) - z| (chordal when at infinity)
  std::vector<CxPoint> candidates;
  std::vector<std::optional<Point>> exact_candidates;
};

// All points of exact period n of f (exact where resolvable).
TrackedSolution periodic_candidates(const RationalFunction& f, int n);

// Select the candidate nearest seed (the target when no seed); radius
// bounds the accepted distance.
TrackedSolution solve_tracked_point(const Family& fam, const TrackedSpec& spec, const Rational& a, int digits,
                                    std::optional<CxPoint> seed = std::nullopt,
                                    std::optional<Real> radius = std::nullopt);

LimitResult numeric_limit(const RescalingJob& job);

// The Milnor family and its jobs.
Family milnor_family_spec();
// f_a^2, identity conjugator.
RescalingJob job_milnor_k2();
// f_a^3 conjugated by 3a -> inf, -a -> 0, p3_a -> target (default 1/2).
RescalingJob job_milnor_k3(const Point& target = Point::finite(Scalar(make_rational(1, 2))));
// Same, with a period-2 point near -1 tracked instead of the period-3 one.
RescalingJob job_milnor_k3_misconfigured();
// f_a alone, identity conjugator.
RescalingJob job_milnor_k1();

struct NamedJob {
  std::string name;
  RescalingJob (*build)();
};
const std::vector<NamedJob>& builtin_jobs();

}  // namespace artifact
