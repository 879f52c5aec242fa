#include "fbweyl/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "fbweyl/errors.hpp"

namespace fbweyl {

void Tolerances::validate() const {
  if (!(quad_tol > 0) || !(root_tol > 0) || !(fd_step > 0) || !(tangent_tol > 0)) {
    throw DomainError("tolerances must be strictly positive");
  }
  if (grid_n < 16) {
    std::ostringstream msg;
    msg << "grid_n must be at least 16 (got " << grid_n << ")";
    throw DomainError(msg.str());
  }
}

namespace numerics {
namespace {

double eval_checked(const RealFn& f, double x) {
  double y;
  try {
    y = f(x);
  } catch (const DomainError& e) {
    throw EvaluationError(std::string("evaluation outside domain: ") + e.what(), x);
  }
  if (!std::isfinite(y)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "non-finite function value at x = " << x;
    throw EvaluationError(msg.str(), x);
  }
  return y;
}

// Kronrod abscissae on [0,1] (descending) and weights; every other node is a
// 7-point Gauss node.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const RealFn& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = eval_checked(f, center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = eval_checked(f, center - dx) + eval_checked(f, center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

double integrate(const RealFn& f, double a, double b, const Tolerances& tol) {
  if (!(a <= b)) throw DomainError("integrate: requires a <= b");
  if (a == b) return 0.0;

  constexpr int kMaxSegments = 4000;
  std::priority_queue<Segment> work;
  Segment whole = gauss_kronrod(f, a, b);
  double total = whole.value;
  double error = whole.error;
  work.push(whole);

  const double eps = std::numeric_limits<double>::epsilon();
  int segments = 1;
  while (error > std::max(tol.quad_tol, 50 * eps * std::abs(total)) &&
         segments < kMaxSegments) {
    const Segment worst = work.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // interval exhausted
    work.pop();
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    work.push(left);
    work.push(right);
    ++segments;
  }

  // Re-sum from the segments to avoid drift from the running updates.
  std::vector<Segment> parts;
  parts.reserve(work.size());
  while (!work.empty()) {
    parts.push_back(work.top());
    work.pop();
  }
  std::sort(parts.begin(), parts.end(),
            [](const Segment& l, const Segment& r) { return l.a < r.a; });
  double sum = 0.0;
  for (const auto& s : parts) sum += s.value;
  return sum;
}

namespace {

double bisect(const RealFn& f, double a, double b, double fa, double root_tol) {
  for (int it = 0; it < 200 && (b - a) > root_tol; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = eval_checked(f, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (fa < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// Minimizes sign * f on [a, b] by golden-section search.
double golden_extremum(const RealFn& f, double a, double b, double sign, double x_tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = sign * eval_checked(f, c);
  double fd = sign * eval_checked(f, d);
  for (int it = 0; it < 200 && (b - a) > x_tol; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = sign * eval_checked(f, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = sign * eval_checked(f, d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<Root> find_roots(const RealFn& f, double lo, double hi, int n_seed,
                             const Tolerances& tol) {
  if (!(lo < hi)) throw DomainError("find_roots: requires lo < hi");
  if (n_seed < 1) throw DomainError("find_roots: n_seed must be positive");

  const std::vector<double> xs = linspace(lo, hi, n_seed + 1);
  std::vector<double> ys(xs.size());
  std::vector<bool> finite(xs.size());
  bool any_finite = false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    try {
      ys[i] = f(xs[i]);
      finite[i] = std::isfinite(ys[i]);
    } catch (const DomainError&) {
      finite[i] = false;
    }
    any_finite = any_finite || finite[i];
  }
  if (!any_finite) throw EvaluationError("find_roots: no finite evaluations on interval", lo);

  std::vector<Root> roots;
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!finite[i] || ys[i] != 0.0) continue;
    const bool left = i > 0 && finite[i - 1];
    const bool right = i + 1 < n && finite[i + 1];
    const bool touching = left && right && (ys[i - 1] > 0) == (ys[i + 1] > 0);
    roots.push_back({xs[i], touching});
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!finite[i] || !finite[i + 1]) continue;
    const double a = xs[i], b = xs[i + 1];
    const double fa = ys[i], fb = ys[i + 1];
    if (fa == 0.0 || fb == 0.0) continue;
    if ((fa < 0) != (fb < 0)) {
      roots.push_back({bisect(f, a, b, fa, tol.root_tol), false});
      continue;
    }
    // Same sign at both ends: look for an interior extremum that touches or
    // crosses zero (slopes at the ends point towards the axis from both sides).
    const double h = 1e-3 * (b - a);
    const double slope_a = (eval_checked(f, a + h) - fa) / h;
    const double slope_b = (fb - eval_checked(f, b - h)) / h;
    const double sign = fa > 0 ? 1.0 : -1.0;
    if (!(sign * slope_a < 0 && sign * slope_b > 0)) continue;
    const double xm = golden_extremum(f, a, b, sign, tol.root_tol);
    const double fm = eval_checked(f, xm);
    if (sign * fm < 0) {
      roots.push_back({bisect(f, a, xm, fa, tol.root_tol), false});
      roots.push_back({bisect(f, xm, b, fm, tol.root_tol), false});
    } else if (std::abs(fm) <= tol.tangent_tol) {
      roots.push_back({xm, true});
    }
  }

  std::sort(roots.begin(), roots.end(),
            [](const Root& l, const Root& r) { return l.x < r.x; });
  return roots;
}

std::vector<double> root_positions(const std::vector<Root>& roots) {
  std::vector<double> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.x);
  return out;
}

double derivative(const RealFn& f, double x, int order, const Tolerances& tol) {
  if (order != 1 && order != 2) throw DomainError("derivative: order must be 1 or 2");

  constexpr int kTable = 10;
  constexpr double kShrink = 1.4;
  constexpr double kShrink2 = kShrink * kShrink;

  const double fx = order == 2 ? eval_checked(f, x) : 0.0;
  auto central = [&](double h) {
    const double up = eval_checked(f, x + h);
    const double down = eval_checked(f, x - h);
    return order == 1 ? (up - down) / (2 * h) : (up - 2 * fx + down) / (h * h);
  };

  double h = 0.1 * std::max(1.0, std::abs(x));
  std::array<std::array<double, kTable>, kTable> a{};
  a[0][0] = central(h);
  double best = a[0][0];
  double err = std::numeric_limits<double>::max();
  for (int i = 1; i < kTable; ++i) {
    h /= kShrink;
    if (h < tol.fd_step) break;
    a[0][i] = central(h);
    double fac = kShrink2;
    for (int j = 1; j <= i; ++j) {
      a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
      fac *= kShrink2;
      const double e = std::max(std::abs(a[j][i] - a[j - 1][i]),
                                std::abs(a[j][i] - a[j - 1][i - 1]));
      if (e <= err) {
        err = e;
        best = a[j][i];
      }
    }
    // Higher order is getting worse: stop early.
    if (std::abs(a[i][i] - a[i - 1][i - 1]) >= 2.0 * err) break;
  }
  return best;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out;
  if (n <= 0) return out;
  if (n == 1) return {a};
  out.reserve(static_cast<std::size_t>(n));
  const double step = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) out.push_back(a + step * i);
  out.back() = b;
  return out;
}

}  // namespace numerics
}  // namespace fbweyl
