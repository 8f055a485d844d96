#pragma once

#include <vector>

#include "semiflow/net.hpp"
#include "semiflow/types.hpp"

namespace semiflow {

// Largest antichain in the subset lattice of a d-element set: C(d, floor(d/2)).
// Upper bound on the number of distinct minimal supports.
Int sperner_bound(int places);

// Places merged when a transition has exactly one input and one output place
// (each with any weight): any semiflow support containing one endpoint of
// such a transition relates the pair, so supports are unions of classes.
struct PlacePartition {
  std::vector<int> class_of;             // place -> class id (0..k-1)
  std::vector<std::vector<int>> classes; // class id -> member places
  int count() const { return static_cast<int>(classes.size()); }
};

PlacePartition merge_classes(const PetriNet& net);

// Sperner bound applied to the merged classes; never worse than the raw one.
Int refined_bound(const PetriNet& net);

}  // namespace semiflow
