#pragma once

#include <optional>

#include "triolab/group.hpp"
#include "triolab/setops.hpp"

namespace triolab {

// A similarity transform plus the subgroup H such that
// apply_transform(g, trio, transform) satisfies the beat clauses for H.
struct BeatWitness {
  Transform transform;
  Mask h = 0;
};

// Clause checks on an already transformed trio (A, B, C).
bool pure_beat_clauses(const FiniteGroup& g, const Trio& t, Mask h);
bool impure_beat_clauses(const FiniteGroup& g, const Trio& t, Mask h);

// Searches the similarity class. With `relative_to` set, only that H is tried.
std::optional<BeatWitness> find_pure_beat(const FiniteGroup& g, const Trio& t,
                                          std::optional<Mask> relative_to = std::nullopt);
std::optional<BeatWitness> find_impure_beat(const FiniteGroup& g, const Trio& t,
                                            std::optional<Mask> relative_to = std::nullopt);

// (A, B n H, C n H) of the transformed trio, as a trio of H in local indices.
struct Continuation {
  EmbeddedSubgroup sub;
  Trio trio;
};
Continuation impure_beat_continuation(const FiniteGroup& g, const Trio& t, const BeatWitness& w);

}  // namespace triolab
