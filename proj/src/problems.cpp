#include "clde/problem.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace clde {

namespace {

const double kPi = 3.14159265358979323846264338327950288;

// ---- 1D Shubert factor g(x) = sum_{j=1..5} j cos((j+1)x + j) ----------
// Its global minima/maxima on [-10, 10] drive the product landscapes.
// Locations refined by Newton to full double precision (see
// tools/derive_optima.py), frozen here and mirrored in data/optima.
const double kShubertArgmin[3] = {-7.7083137354993474, -1.4251284283197610,
                                  4.8580568788598255};
const double kShubertArgmax[3] = {-7.0835064076515596, -0.80032110047197312,
                                  5.4828642067076134};
const double kShubertPeak2d = 186.73090883102383;
const double kShubertPeak3d = 2709.0935055728267;

const double kHimmelblauOptima[4][2] = {{3.0, 2.0},
                                        {-2.8051180869527449, 3.1313125182505730},
                                        {-3.7793102533777469, -3.2831859912861694},
                                        {3.5844283403304917, -1.8481265269644036}};

const double kCamelOptima[2][2] = {{0.089842013100318062, -0.71265640302073963},
                                   {-0.089842013100318062, 0.71265640302073963}};
const double kCamelPeak = 1.0316284534898773;

const double kUnevenDecreasingArgmax = 0.079699779611795815;
const double kUnevenDecreasingPeak = 0.99999982845447246;

double shubert_factor(double x) {
  double s = 0.0;
  for (int j = 1; j <= 5; ++j) s += j * std::cos((j + 1) * x + j);
  return s;
}

double vincent_term(double x) { return std::sin(10.0 * std::log(x)); }

Problem base_so(const std::string& id, std::vector<double> lo, std::vector<double> hi,
                double peak) {
  Problem p;
  p.id = id;
  p.dim = static_cast<int>(lo.size());
  p.n_obj = 1;
  p.sense = Sense::maximize;
  p.lower = std::move(lo);
  p.upper = std::move(hi);
  p.has_peaks = true;
  p.peak_height = peak;
  return p;
}

Problem make_f1() {
  Problem p = base_so("f1_five_uneven_peak_trap", {0.0}, {30.0}, 200.0);
  p.known_optima = {{0.0}, {30.0}};
  p.fn = [](const std::vector<double>& x) -> std::vector<double> {
    const double t = x[0];
    double f;
    if (t < 2.5)
      f = 80.0 * (2.5 - t);
    else if (t < 5.0)
      f = 64.0 * (t - 2.5);
    else if (t < 7.5)
      f = 64.0 * (7.5 - t);
    else if (t < 12.5)
      f = 28.0 * (t - 7.5);
    else if (t < 17.5)
      f = 28.0 * (17.5 - t);
    else if (t < 22.5)
      f = 32.0 * (t - 17.5);
    else if (t < 27.5)
      f = 32.0 * (27.5 - t);
    else
      f = 80.0 * (t - 27.5);
    return {f};
  };
  return p;
}

Problem make_f2() {
  Problem p = base_so("f2_equal_maxima", {0.0}, {1.0}, 1.0);
  p.known_optima = {{0.1}, {0.3}, {0.5}, {0.7}, {0.9}};
  p.fn = [](const std::vector<double>& x) -> std::vector<double> {
    const double s = std::sin(5.0 * kPi * x[0]);
    return {std::pow(s, 6)};
  };
  return p;
}

Problem make_f3() {
  Problem p = base_so("f3_uneven_decreasing_maxima", {0.0}, {1.0}, kUnevenDecreasingPeak);
  p.known_optima = {{kUnevenDecreasingArgmax}};
  p.fn = [](const std::vector<double>& x) -> std::vector<double> {
    const double t = x[0];
    const double e = std::exp(-2.0 * std::log(2.0) * std::pow((t - 0.08) / 0.854, 2));
    const double s = std::sin(5.0 * kPi * (std::pow(t, 0.75) - 0.05));
    return {e * std::pow(s, 6)};
  };
  return p;
}

Problem make_f4() {
  Problem p = base_so("f4_himmelblau", {-6.0, -6.0}, {6.0, 6.0}, 200.0);
  for (const auto& o : kHimmelblauOptima) p.known_optima.push_back({o[0], o[1]});
  p.fn = [](const std::vector<double>& x) -> std::vector<double> {
    const double a = x[0] * x[0] + x[1] - 11.0;
    const double b = x[0] + x[1] * x[1] - 7.0;
    return {200.0 - a * a - b * b};
  };
  return p;
}

Problem make_f5() {
  Problem p = base_so("f5_six_hump_camel_back", {-1.9, -1.1}, {1.9, 1.1}, kCamelPeak);
  for (const auto& o : kCamelOptima) p.known_optima.push_back({o[0], o[1]});
  p.fn = [](const std::vector<double>& x) -> std::vector<double> {
    const double a = x[0], b = x[1];
    const double term = (4.0 - 2.1 * a * a + a * a * a * a / 3.0) * a * a + a * b +
                        (4.0 * b * b - 4.0) * b * b;
    return {-term};
  };
  return p;
}

Problem make_f6() {
  Problem p = base_so("f6_shubert_2d", {-10.0, -10.0}, {10.0, 10.0}, kShubertPeak2d);
  for (double a : kShubertArgmin)
    for (double b : kShubertArgmax) p.known_optima.push_back({a, b});
  for (double b : kShubertArgmax)
    for (double a : kShubertArgmin) p.known_optima.push_back({b, a});
  p.fn = [](const std::vector<double>& x) -> std::vector<double> {
    return {-shubert_factor(x[0]) * shubert_factor(x[1])};
  };
  return p;
}

Problem make_f7() {
  Problem p = base_so("f7_vincent_2d", {0.25, 0.25}, {10.0, 10.0}, 1.0);
  std::vector<double> roots;
  for (int k = -2; k <= 3; ++k) roots.push_back(std::exp(kPi / 20.0 + k * kPi / 5.0));
  for (double a : roots)
    for (double b : roots) p.known_optima.push_back({a, b});
  p.fn = [](const std::vector<double>& x) -> std::vector<double> {
    return {0.5 * (vincent_term(x[0]) + vincent_term(x[1]))};
  };
  return p;
}

Problem make_f8() {
  Problem p = base_so("f8_shubert_3d", {-10.0, -10.0, -10.0}, {10.0, 10.0, 10.0},
                      kShubertPeak3d);
  for (int lowdim = 0; lowdim < 3; ++lowdim)
    for (double a : kShubertArgmin)
      for (double b1 : kShubertArgmax)
        for (double b2 : kShubertArgmax) {
          std::vector<double> pt(3);
          int pos = 0;
          for (int j = 0; j < 3; ++j)
            if (j == lowdim)
              pt[j] = a;
            else
              pt[j] = (pos++ == 0) ? b1 : b2;
          p.known_optima.push_back(pt);
        }
  p.fn = [](const std::vector<double>& x) -> std::vector<double> {
    return {-shubert_factor(x[0]) * shubert_factor(x[1]) * shubert_factor(x[2])};
  };
  return p;
}

Problem make_f9() {
  Problem p = base_so("f9_vincent_3d", {0.25, 0.25, 0.25}, {10.0, 10.0, 10.0}, 1.0);
  std::vector<double> roots;
  for (int k = -2; k <= 3; ++k) roots.push_back(std::exp(kPi / 20.0 + k * kPi / 5.0));
  for (double a : roots)
    for (double b : roots)
      for (double c : roots) p.known_optima.push_back({a, b, c});
  p.fn = [](const std::vector<double>& x) -> std::vector<double> {
    return {(vincent_term(x[0]) + vincent_term(x[1]) + vincent_term(x[2])) / 3.0};
  };
  return p;
}

Problem make_f10() {
  Problem p = base_so("f10_modified_rastrigin_2d", {0.0, 0.0}, {1.0, 1.0}, -2.0);
  const int kfreq[2] = {3, 4};
  for (int i = 0; i < kfreq[0]; ++i)
    for (int j = 0; j < kfreq[1]; ++j)
      p.known_optima.push_back(
          {(2.0 * i + 1.0) / (2.0 * kfreq[0]), (2.0 * j + 1.0) / (2.0 * kfreq[1])});
  p.fn = [kfreq](const std::vector<double>& x) -> std::vector<double> {
    double s = 0.0;
    for (int j = 0; j < 2; ++j) s += 10.0 + 9.0 * std::cos(2.0 * kPi * kfreq[j] * x[j]);
    return {-s};
  };
  return p;
}

// ---- DTLZ family -------------------------------------------------------

// simplex-lattice weight vectors (H divisions over m parts)
void simplex_lattice(int m, int H, int pos, int left, std::vector<int>& acc,
                     std::vector<std::vector<double>>& out) {
  if (pos == m - 1) {
    acc[pos] = left;
    std::vector<double> w(m);
    for (int i = 0; i < m; ++i) w[i] = static_cast<double>(acc[i]) / H;
    out.push_back(std::move(w));
    return;
  }
  for (int v = 0; v <= left; ++v) {
    acc[pos] = v;
    simplex_lattice(m, H, pos + 1, left - v, acc, out);
  }
}

std::vector<std::vector<double>> lattice_points(int m, int H) {
  std::vector<std::vector<double>> out;
  std::vector<int> acc(m, 0);
  simplex_lattice(m, H, 0, H, acc, out);
  return out;
}

Problem make_dtlz(int which, int dim, int m) {
  Problem p;
  p.id = "dtlz" + std::to_string(which) + "_d" + std::to_string(dim) + "_m" + std::to_string(m);
  p.dim = dim;
  p.n_obj = m;
  p.sense = Sense::minimize;
  p.lower.assign(dim, 0.0);
  p.upper.assign(dim, 1.0);
  const int k = dim - m + 1;
  if (which == 1) {
    p.fn = [dim, m, k](const std::vector<double>& x) -> std::vector<double> {
      double g = 0.0;
      for (int i = m - 1; i < dim; ++i) {
        const double t = x[i] - 0.5;
        g += t * t - std::cos(20.0 * kPi * t);
      }
      g = 100.0 * (k + g);
      std::vector<double> f(m);
      for (int i = 0; i < m; ++i) {
        double v = 0.5 * (1.0 + g);
        for (int j = 0; j < m - 1 - i; ++j) v *= x[j];
        if (i > 0) v *= 1.0 - x[m - 1 - i];
        f[i] = v;
      }
      return f;
    };
    for (const auto& w : lattice_points(m, 30)) {
      std::vector<double> r(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) r[i] = 0.5 * w[i];
      p.pareto_front_ref.push_back(std::move(r));
    }
  } else {
    p.fn = [dim, m](const std::vector<double>& x) -> std::vector<double> {
      double g = 0.0;
      for (int i = m - 1; i < dim; ++i) {
        const double t = x[i] - 0.5;
        g += t * t;
      }
      std::vector<double> f(m);
      for (int i = 0; i < m; ++i) {
        double v = 1.0 + g;
        for (int j = 0; j < m - 1 - i; ++j) v *= std::cos(x[j] * kPi / 2.0);
        if (i > 0) v *= std::sin(x[m - 1 - i] * kPi / 2.0);
        f[i] = v;
      }
      return f;
    };
    for (const auto& w : lattice_points(m, 30)) {
      double norm = 0.0;
      for (double v : w) norm += v * v;
      norm = std::sqrt(norm);
      std::vector<double> r(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) r[i] = w[i] / norm;
      p.pareto_front_ref.push_back(std::move(r));
    }
  }
  return p;
}

// ---- two-segment Pareto set problem ------------------------------------
// Minimize (x1, 1 - x1 + w(x2)) on [0,1] x [0,2], where w is the distance
// to the nearest of the lines x2 = 0.5 and x2 = 1.5. Both segments map
// exactly onto the front {(t, 1-t)}, one unit apart in decision space.
Problem make_two_basin() {
  Problem p;
  p.id = "two_basin";
  p.dim = 2;
  p.n_obj = 2;
  p.sense = Sense::minimize;
  p.lower = {0.0, 0.0};
  p.upper = {1.0, 2.0};
  p.fn = [](const std::vector<double>& x) -> std::vector<double> {
    const double w = std::min(std::fabs(x[1] - 0.5), std::fabs(x[1] - 1.5));
    return {x[0], 1.0 - x[0] + w};
  };
  const int per_segment = 100;
  for (int i = 0; i < per_segment; ++i) {
    const double t = static_cast<double>(i) / (per_segment - 1);
    p.pareto_set_ref.push_back({t, 0.5});
    p.pareto_front_ref.push_back({t, 1.0 - t});
  }
  for (int i = 0; i < per_segment; ++i) {
    const double t = static_cast<double>(i) / (per_segment - 1);
    p.pareto_set_ref.push_back({t, 1.5});
  }
  return p;
}

using Factory = Problem (*)();

Problem make_dtlz1_d7() { return make_dtlz(1, 7, 3); }
Problem make_dtlz1_d30() { return make_dtlz(1, 30, 3); }
Problem make_dtlz2_d12() { return make_dtlz(2, 12, 3); }
Problem make_dtlz2_d30() { return make_dtlz(2, 30, 3); }

const std::map<std::string, Factory>& registry() {
  static const std::map<std::string, Factory> reg = {
      {"f1_five_uneven_peak_trap", make_f1},
      {"f2_equal_maxima", make_f2},
      {"f3_uneven_decreasing_maxima", make_f3},
      {"f4_himmelblau", make_f4},
      {"f5_six_hump_camel_back", make_f5},
      {"f6_shubert_2d", make_f6},
      {"f7_vincent_2d", make_f7},
      {"f8_shubert_3d", make_f8},
      {"f9_vincent_3d", make_f9},
      {"f10_modified_rastrigin_2d", make_f10},
      {"dtlz1_d7_m3", make_dtlz1_d7},
      {"dtlz1_d30_m3", make_dtlz1_d30},
      {"dtlz2_d12_m3", make_dtlz2_d12},
      {"dtlz2_d30_m3", make_dtlz2_d30},
      {"two_basin", make_two_basin},
  };
  return reg;
}

}  // namespace

std::vector<double> Problem::evaluate(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dim)
    throw std::invalid_argument("evaluate(" + id + "): expected " + std::to_string(dim) +
                                " coordinates, got " + std::to_string(x.size()));
  for (int j = 0; j < dim; ++j) {
    if (!std::isfinite(x[j]) || x[j] < lower[j] || x[j] > upper[j])
      throw std::invalid_argument("evaluate(" + id + "): coordinate " + std::to_string(j) +
                                  " outside [" + std::to_string(lower[j]) + ", " +
                                  std::to_string(upper[j]) + "]");
  }
  return fn(x);
}

std::vector<std::string> problem_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, make] : registry()) ids.push_back(id);
  return ids;
}

Problem make_problem(const std::string& id) {
  auto it = registry().find(id);
  if (it == registry().end())
    throw std::invalid_argument("unknown problem id: " + id);
  return it->second();
}

}  // namespace clde
