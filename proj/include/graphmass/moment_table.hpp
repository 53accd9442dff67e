#pragma once

#include <map>
#include <optional>

#include "graphmass/partition.hpp"

namespace graphmass {

/// Moment values keyed by multi-index, in lexicographic key order.
/// Time-dependent tables cover all of one order n at a fixed time;
/// stationary tables cover every order up to max_order at a fixed alpha.
template <typename Scalar>
struct MomentTable {
  std::map<Partition, Scalar> entries;
  int order = 0;                      // n (highest order present)
  std::optional<double> time;         // set for time-dependent tables
  std::optional<Scalar> alpha;        // set for stationary tables

  const Scalar& at(const Partition& a) const {
    auto it = entries.find(a);
    if (it == entries.end())
      throw std::invalid_argument("MomentTable: requested moment not in table");
    return it->second;
  }
};

}  // namespace graphmass
