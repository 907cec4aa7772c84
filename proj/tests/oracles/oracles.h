// Copyright 2026 The revcover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Exhaustive reference implementations for small inputs. Each one is
// written from the definitions alone and shares no code with the library
// beyond the data types.

#ifndef REVCOVER_TESTS_ORACLES_H_
#define REVCOVER_TESTS_ORACLES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "revcover/flow.h"
#include "revcover/model.h"
#include "revcover/network.h"

namespace revcover::oracle {

// Minimum cost over every integral flow respecting bounds, conservation and
// the demand (any value when unset). nullopt when no such flow exists.
// Intended for networks with a handful of edges and capacities <= 3.
std::optional<int64_t> MinCostByEnumeration(const BoundedFlowNetwork& net);

// Smallest capacity of an s-t cut, trying every node subset.
int64_t MinCutByEnumeration(const BoundedFlowNetwork& net);

// Set rules checked straight from their statement.
bool SetDiverse(std::span<const Reviewer* const> members);

struct BruteAssignment {
  bool feasible = false;
  int64_t scaled = 0;  // sum of round(f(s) * 1e4) over assigned pairs
  double J = 0.0;
  Assignment assignment;
};

// Best assignment of every paper in `pairs` by enumerating all reviewer
// subsets of size lambda per paper, subject to loads, independence and the
// set rules (the last two dropped when `set_rules` is false). Maximises the
// scaled objective, then J.
BruteAssignment BestAssignment(const ConferenceInstance& instance,
                               const PairSet& pairs,
                               std::span<const int> mu_lower,
                               std::span<const int> mu_upper,
                               bool set_rules = true);

// KL(p || q) for two distributions over the same two outcomes.
double TwoTermKl(double p0, double q0);

// DCG with linear gains and a log2(rank + 1) discount.
double Dcg(std::span<const double> relevance);

// min over papers of the summed f(S_ij), by a direct loop.
double FairnessByLoop(const Assignment& assignment,
                      const ConferenceInstance& instance);

}  // namespace revcover::oracle

#endif  // REVCOVER_TESTS_ORACLES_H_
