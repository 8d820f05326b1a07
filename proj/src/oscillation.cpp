#include "nlsup/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace nlsup::oscillation {

using functional::Piece;
using setcore::PairPoint;
using setcore::Point;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCutEps = 1e-14;  // dedupe threshold for period breakpoints

double solve_lambda(const Point& v, const Point& alpha, const Point& beta,
                    double tol) {
  if (setcore::approx_eq(alpha, beta, tol)) {
    if (!setcore::approx_eq(v, alpha, tol)) {
      throw PreconditionError(
          "degenerate segment: target value differs from its endpoints");
    }
    return 1.0;
  }
  std::size_t k = 0;
  double span = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const double s = std::abs(alpha[i] - beta[i]);
    if (s > span) {
      span = s;
      k = i;
    }
  }
  double l = (v[k] - beta[k]) / (alpha[k] - beta[k]);
  l = std::clamp(l, 0.0, 1.0);
  if (!setcore::approx_eq(v, setcore::lin_comb(l, alpha, beta), tol)) {
    throw PreconditionError(
        "target value does not lie on the oscillation segment");
  }
  return l;
}

}  // namespace

OscillationSpec make_spec(const Point& alpha, const Point& beta,
                          const SimpleFunction& target, double tol) {
  target.validate(tol);
  setcore::validate_point(alpha, target.m);
  setcore::validate_point(beta, target.m);
  OscillationSpec spec;
  spec.alpha = alpha;
  spec.beta = beta;
  spec.target = target;
  spec.target.normalize();
  spec.tol = tol;
  for (const Piece& p : spec.target.pieces) {
    spec.lambdas.push_back(solve_lambda(p.value, alpha, beta, tol));
  }
  return spec;
}

SimpleFunction build_sequence(const OscillationSpec& spec, int j) {
  if (j < 1) throw PreconditionError("sequence index must be positive");
  SimpleFunction u;
  u.m = spec.target.m;
  for (std::size_t i = 0; i < spec.target.pieces.size(); ++i) {
    const Piece& p = spec.target.pieces[i];
    const double l = spec.lambdas[i];
    if (l >= 1.0 - spec.tol) {
      u.pieces.push_back({p.a, p.b, spec.alpha});
      continue;
    }
    if (l <= spec.tol) {
      u.pieces.push_back({p.a, p.b, spec.beta});
      continue;
    }
    std::vector<double> cuts = {p.a, p.b};
    const long k0 = static_cast<long>(std::floor(j * p.a)) - 1;
    const long k1 = static_cast<long>(std::ceil(j * p.b)) + 1;
    for (long k = k0; k <= k1; ++k) {
      for (double t : {static_cast<double>(k) / j,
                       (static_cast<double>(k) + l) / j}) {
        if (t > p.a + kCutEps && t < p.b - kCutEps) cuts.push_back(t);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
      const double lo = cuts[t];
      const double hi = cuts[t + 1];
      if (hi - lo <= kCutEps) continue;
      const double mid = 0.5 * (lo + hi);
      const double phase = j * mid - std::floor(j * mid);
      u.pieces.push_back({lo, hi, phase < l ? spec.alpha : spec.beta});
    }
  }
  u.normalize();
  return u;
}

// ---- exact pairings --------------------------------------------------------

namespace {

struct TestFn {
  std::string name;
  // Integral of the test function over [lo, hi].
  std::function<double(double, double)> mass;
};

std::vector<TestFn> test_family() {
  std::vector<TestFn> fam;
  for (int k = 1; k <= 15; ++k) {
    const double c = static_cast<double>(k) / 16.0;
    fam.push_back({"ind(0," + std::to_string(k) + "/16)",
                   [c](double lo, double hi) {
                     const double a = std::max(lo, 0.0);
                     const double b = std::min(hi, c);
                     return std::max(0.0, b - a);
                   }});
  }
  fam.push_back({"1", [](double lo, double hi) { return hi - lo; }});
  fam.push_back(
      {"x", [](double lo, double hi) { return 0.5 * (hi * hi - lo * lo); }});
  fam.push_back({"x^2", [](double lo, double hi) {
                   return (hi * hi * hi - lo * lo * lo) / 3.0;
                 }});
  return fam;
}

std::vector<double> merged_cuts(const SimpleFunction& f,
                                const SimpleFunction& g) {
  std::vector<double> cuts;
  for (const Piece& p : f.pieces) {
    cuts.push_back(p.a);
    cuts.push_back(p.b);
  }
  for (const Piece& p : g.pieces) {
    cuts.push_back(p.a);
    cuts.push_back(p.b);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> out;
  for (double c : cuts) {
    if (out.empty() || c - out.back() > kCutEps) out.push_back(c);
  }
  return out;
}

}  // namespace

OscillationReport weak_star_report(const OscillationSpec& spec,
                                   const std::vector<int>& j_list) {
  if (j_list.empty()) throw PreconditionError("empty j list");
  const std::vector<TestFn> fam = test_family();
  const int m = spec.target.m;
  OscillationReport rep;
  for (int j : j_list) {
    const SimpleFunction uj = build_sequence(spec, j);
    JReport jr;
    jr.j = j;

    const std::vector<Point> vals = uj.value_set(spec.tol);
    for (const Point& a : vals) {
      for (const Point& b : vals) {
        const bool a_ok = setcore::approx_eq(a, spec.alpha, spec.tol) ||
                          setcore::approx_eq(a, spec.beta, spec.tol);
        const bool b_ok = setcore::approx_eq(b, spec.alpha, spec.tol) ||
                          setcore::approx_eq(b, spec.beta, spec.tol);
        if (!a_ok || !b_ok) ++jr.violations;
      }
    }

    const std::vector<double> cuts = merged_cuts(uj, spec.target);
    for (const TestFn& fn : fam) {
      Point acc(static_cast<std::size_t>(m), 0.0);
      for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
        const double lo = cuts[t];
        const double hi = cuts[t + 1];
        const double mid = 0.5 * (lo + hi);
        const Point& a = uj.value_at(mid);
        const Point& b = spec.target.value_at(mid);
        const double w = fn.mass(lo, hi);
        for (int c = 0; c < m; ++c) {
          acc[static_cast<std::size_t>(c)] +=
              w * (a[static_cast<std::size_t>(c)] -
                   b[static_cast<std::size_t>(c)]);
        }
      }
      jr.pairings.push_back({fn.name, setcore::norm_inf(acc)});
    }

    const bool degenerate = setcore::approx_eq(spec.alpha, spec.beta, spec.tol);
    for (std::size_t i = 0; i < spec.target.pieces.size(); ++i) {
      const Piece& p = spec.target.pieces[i];
      const EmpiricalMeasure em =
          empirical_young_measure(uj, p.a, p.b, spec.tol);
      double w_alpha = 0.0;
      double w_beta = 0.0;
      double other = 0.0;
      for (std::size_t t = 0; t < em.atoms.size(); ++t) {
        if (setcore::approx_eq(em.atoms[t], spec.alpha, spec.tol)) {
          w_alpha += em.weights[t];
        } else if (setcore::approx_eq(em.atoms[t], spec.beta, spec.tol)) {
          w_beta += em.weights[t];
        } else {
          other += em.weights[t];
        }
      }
      const double l = spec.lambdas[i];
      double tv;
      if (degenerate) {
        tv = 1.0 - w_alpha;
      } else {
        tv = 0.5 * (std::abs(w_alpha - l) + std::abs(w_beta - (1.0 - l)) +
                    other);
      }
      jr.ym.push_back({i, tv});
    }
    rep.per_j.push_back(std::move(jr));
  }
  return rep;
}

EmpiricalMeasure empirical_young_measure(const SimpleFunction& u, double a,
                                         double b, double tol) {
  u.validate(tol);
  if (!(a < b)) throw PreconditionError("empty averaging window");
  EmpiricalMeasure em;
  double total = 0.0;
  for (const Piece& p : u.pieces) {
    const double lo = std::max(a, p.a);
    const double hi = std::min(b, p.b);
    if (hi - lo <= 0.0) continue;
    const double len = hi - lo;
    total += len;
    bool found = false;
    for (std::size_t t = 0; t < em.atoms.size(); ++t) {
      if (setcore::approx_eq(em.atoms[t], p.value, tol)) {
        em.weights[t] += len;
        found = true;
        break;
      }
    }
    if (!found) {
      em.atoms.push_back(p.value);
      em.weights.push_back(len);
    }
  }
  if (total <= 0.0) {
    throw PreconditionError("window does not meet the function domain");
  }
  for (double& w : em.weights) w /= total;
  std::vector<std::size_t> order(em.atoms.size());
  for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return setcore::lex_less(em.atoms[x], em.atoms[y]);
  });
  EmpiricalMeasure sorted;
  for (std::size_t t : order) {
    sorted.atoms.push_back(em.atoms[t]);
    sorted.weights.push_back(em.weights[t]);
  }
  return sorted;
}

ApproxResult simple_approximation(const std::vector<Point>& samples,
                                  const setcore::SetHandle& e, int j,
                                  double tol) {
  if (j < 1) throw PreconditionError("approximation index must be positive");
  if (samples.empty()) throw PreconditionError("no samples given");
  const int m = setcore::dim(e);
  for (const Point& v : samples) setcore::validate_point(v, m);

  ApproxResult res;
  // The construction only applies to E-conforming data: every ordered pair
  // of sampled values (including self-pairs) must lie in E.
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t k = 0; k < samples.size(); ++k) {
      if (!setcore::member(e, setcore::pp(samples[i], samples[k]))) {
        res.ok = false;
        res.message = "samples are not E-conforming: pair (" +
                      std::to_string(i) + ", " + std::to_string(k) +
                      ") lies outside E";
        return res;
      }
    }
  }

  // Half-open value boxes of diameter strictly below 1/j.
  const double root_m = std::sqrt(static_cast<double>(m));
  std::vector<double> lo(static_cast<std::size_t>(m), kInf);
  std::vector<double> hi(static_cast<std::size_t>(m), -kInf);
  for (const Point& v : samples) {
    for (int c = 0; c < m; ++c) {
      lo[static_cast<std::size_t>(c)] =
          std::min(lo[static_cast<std::size_t>(c)],
                   v[static_cast<std::size_t>(c)]);
      hi[static_cast<std::size_t>(c)] =
          std::max(hi[static_cast<std::size_t>(c)],
                   v[static_cast<std::size_t>(c)]);
    }
  }
  std::vector<int> boxes(static_cast<std::size_t>(m), 1);
  std::vector<double> side(static_cast<std::size_t>(m), 0.0);
  for (int c = 0; c < m; ++c) {
    const std::size_t cc = static_cast<std::size_t>(c);
    const double range = hi[cc] - lo[cc];
    boxes[cc] = static_cast<int>(std::floor(range * j * root_m)) + 1;
    side[cc] = range > 0.0 ? range / boxes[cc] : 1.0;
  }
  auto box_id = [&](const Point& v) {
    std::vector<int> id(static_cast<std::size_t>(m), 0);
    for (int c = 0; c < m; ++c) {
      const std::size_t cc = static_cast<std::size_t>(c);
      const int k = static_cast<int>(std::floor((v[cc] - lo[cc]) / side[cc]));
      id[cc] = std::clamp(k, 0, boxes[cc] - 1);
    }
    return id;
  };

  // One representative per box; the first sample that lands there. The
  // conformity audit above already guarantees representative pairs are in E.
  std::map<std::vector<int>, std::size_t> rep;
  std::vector<std::size_t> chosen(samples.size(), 0);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto id = box_id(samples[i]);
    auto it = rep.find(id);
    if (it == rep.end()) it = rep.emplace(id, i).first;
    chosen[i] = it->second;
  }

  const double n = static_cast<double>(samples.size());
  SimpleFunction approx;
  approx.m = m;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    approx.pieces.push_back({static_cast<double>(i) / n,
                             static_cast<double>(i + 1) / n,
                             samples[chosen[i]]});
  }
  approx.normalize();

  double sup_err = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    sup_err = std::max(sup_err, setcore::dist(samples[i], samples[chosen[i]]));
  }
  if (!(sup_err < 1.0 / j)) {
    throw ToleranceFailure("box bucketing failed to reach the 1/j bound");
  }

  res.ok = true;
  res.approx = std::move(approx);
  res.sup_error = sup_err;
  res.boxes_used = static_cast<int>(rep.size());
  res.message = "ok";
  (void)tol;
  return res;
}

ClosureWitness closure_witness(const setcore::FinitePairSet& k,
                               const SimpleFunction& u,
                               const std::vector<int>& j_list) {
  if (k.m != 1) {
    throw PreconditionError("closure witness supports scalar sets only");
  }
  u.validate();
  if (u.m != 1) {
    throw PreconditionError("closure witness supports scalar functions only");
  }
  ClosureWitness wit;

  const setcore::FinitePairSet hatk = setcore::hat(k);
  if (hatk.empty()) {
    wit.feasible = false;
    wit.message = "hat of K is empty: no nonempty conforming class";
    return wit;
  }
  const hulls::DexSet dex = hulls::dex_prune(hatk);

  const std::vector<Point> vals = u.value_set();
  const PairPoint* base = nullptr;
  for (std::size_t g : dex.kept) {
    const PairPoint& q = hatk.points[g];
    const double a = std::min(q.first[0], q.second[0]);
    const double b = std::max(q.first[0], q.second[0]);
    bool all_in = true;
    for (const Point& v : vals) {
      if (v[0] < a - k.tol || v[0] > b + k.tol) {
        all_in = false;
        break;
      }
    }
    if (all_in) {
      base = &q;
      break;
    }
  }
  if (base == nullptr) {
    wit.feasible = false;
    wit.message =
        "no generator square of the hull contains all target values; the "
        "target is not hull-conforming";
    return wit;
  }
  wit.base = *base;

  const OscillationSpec spec = make_spec(base->first, base->second, u, k.tol);
  wit.report = weak_star_report(spec, j_list);

  wit.pairs_in_K = true;
  for (const Point& a : {base->first, base->second}) {
    for (const Point& b : {base->first, base->second}) {
      if (!k.contains(setcore::pp(a, b))) wit.pairs_in_K = false;
    }
  }
  wit.feasible = true;
  wit.message = "ok";
  return wit;
}

}  // namespace nlsup::oscillation
