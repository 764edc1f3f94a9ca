#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kostka/shoji.hpp"

namespace kostka::transition {

struct ClassMismatch : std::runtime_error {
  explicit ClassMismatch(const std::string& label)
      : std::runtime_error("input family does not cover " + label) {}
};
struct NegativeCoefficient : std::runtime_error {
  explicit NegativeCoefficient(const std::string& label)
      : std::runtime_error("triangular inversion left " + label + " outside N[t]") {}
};
struct NotFound : std::runtime_error {
  NotFound() : std::runtime_error("no asymptotic parameter below the search bound") {}
};

/// Graded character in the simple basis and a full family of them, keyed by
/// the module label.
using GradedChar = std::map<BiPartition, QPoly>;
using CharFamily = std::map<BiPartition, GradedChar>;

/// The Kostka family in the asymptotic region (s large), built from type-A
/// standard modules: the rank-|lambda0| part is the degree-doubled standard
/// module tensored with the squarefree exterior algebra and the sign twist,
/// then induced against the trivial-type factor.
CharFamily asymptotic_system(int n, int r);

/// K at s + eps from K at integer s: sum over strongly similar mu with
/// sigma(mu) contained in sigma(lambda), shifted by t^distance.
CharFamily midpoint_up(int n, int r, long s, const CharFamily& base);

/// K at s + eps from K at integer s+1: sum over strongly similar mu (classes
/// of s+1) with sigma(mu) containing sigma(lambda).
CharFamily midpoint_down(int n, int r, long s, const CharFamily& next);

/// Inverts the superset relation at s+1: recovers K^{s+1} from the midpoint
/// family at s + eps.
CharFamily step_to_next(int n, int r, long s, const CharFamily& mid);

/// Inverts the subset relation at s: recovers K^s from the midpoint family.
CharFamily step_to_prev(int n, int r, long s, const CharFamily& mid);

/// Smallest integer s whose phyla (at s and s+1) are all-singleton, ordered
/// identically, with |lambda0| descending, validated against the orthogonality
/// engine. Searches up to 4n + 4.
int detect_s_asym(int n, int r);

struct StepTrace {
  long s_from = 0;
  long s_to = 0;
  struct ClassInfo {
    std::vector<std::string> members;
    std::vector<std::string> sigma;   // per member, as "{p,q,...}"
    std::vector<int> distances;       // distance of each member to the first
  };
  std::vector<ClassInfo> classes;
  bool residual_check = false;
};

/// Full inductive computation: seed at the detected asymptotic parameter and
/// step down to the target. Integer targets (eps_sign = 0) give the system at
/// s; non-integer s0 or eps_sign != 0 give the system of the open interval
/// containing s0 + eps_sign * eps. The result is packaged against the phyla
/// of the requested parameters with engine tag "transition".
shoji::KostkaSystem walk(int n, int r, const Rat& s0, int eps_sign,
                         std::vector<StepTrace>* trace = nullptr);

}  // namespace kostka::transition
