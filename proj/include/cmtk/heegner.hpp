#ifndef CMTK_HEEGNER_HPP
#define CMTK_HEEGNER_HPP

#include "cmtk/quadfield.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cmtk {

enum class HeegnerMode {
  Conditions,     // test "every prime dividing n splits" directly
  LemmaFaithful,  // m = 1 mod n, odd degree, odd-degree prime factors that are constants mod n
};

struct HeegnerSearchSpec {
  Poly n;
  std::optional<PrimePoly> p;  // tower prime; must be coprime to n when given
  int max_degree = 7;
  std::size_t count = 10;
  HeegnerMode mode = HeegnerMode::Conditions;
};

struct HeegnerCheck {
  PrimePoly prime;
  int chi;
};

struct HeegnerField {
  ImagQuadField field;
  std::vector<HeegnerCheck> checks;
};

struct HeegnerSearch {
  std::vector<HeegnerField> fields;  // canonical order of m
  bool exhausted = false;            // fewer than `count` found up to max_degree
  int searched_degree = 0;
};

HeegnerSearch find_heegner_fields(const HeegnerSearchSpec& spec, const EnumerationBudget& budget = {});

/// The Heegner conditions re-checked from scratch.
bool satisfies_heegner(const ImagQuadField& K, const Poly& n);

struct TowerLevel {
  unsigned level;
  QuadOrder order;                  // conductor p^level
  FormClass ideal;                  // N_j: a-part equal to monic(n)
  std::optional<FormClass> reduced; // its class, when forms reduce
  Int norm;                         // |A/N_j| = |n|
  Int pic;
  std::string pic_method;  // reduced-forms when enumerable, else the conductor formula
  std::optional<Rational> step_factor;  // pic_j / pic_{j-1}
  std::optional<Rational> expected_step;
  bool recursion_holds = true;
};

/// O_j = A + p^j O_K and N_j = product of canonical primes above the primes of n.
/// Class numbers are enumerated directly when the budget allows.
std::vector<TowerLevel> order_tower(const ImagQuadField& K, const PrimePoly& p, const Poly& n, unsigned levels,
                                    const ClassGroupBudget& budget = {});

}  // namespace cmtk

#endif  // CMTK_HEEGNER_HPP
