#pragma once

#include <functional>
#include <string>
#include <vector>

namespace clde {

enum class Sense { minimize, maximize };

// A box-bounded benchmark. Maximization problems report their raw
// classical value; callers negate once when a minimizing view is needed.
struct Problem {
  std::string id;
  int dim = 0;
  int n_obj = 1;
  Sense sense = Sense::minimize;
  std::vector<double> lower, upper;

  // single-objective ground truth, when catalogued
  bool has_peaks = false;
  std::vector<std::vector<double>> known_optima;
  double peak_height = 0.0;  // objective value shared by all known optima

  // multi-objective reference data, when available
  std::vector<std::vector<double>> pareto_front_ref;  // objective space
  std::vector<std::vector<double>> pareto_set_ref;    // decision space

  std::function<std::vector<double>(const std::vector<double>&)> fn;

  // Validates length and bounds, then evaluates. Deterministic and finite
  // for any in-bounds input.
  std::vector<double> evaluate(const std::vector<double>& x) const;
};

// Registry of all built-in problems.
std::vector<std::string> problem_ids();
Problem make_problem(const std::string& id);

}  // namespace clde
