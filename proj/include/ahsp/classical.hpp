#pragma once

#include "ahsp/oracle.hpp"

namespace ahsp {

struct ClassicalReport {
  Subgroup recovered;
  std::vector<u64> queries_per_node;
  u64 total_queries = 0;
  u64 max_node_queries = 0;
  u64 classical_bytes = 0;  // serialized K_i messages to the central node
  bool success = false;
};

// Reference solver: K = { x : f(x) = f(0) }, one query per element.
Subgroup brute_force_solve(const GroupSpec& g, HiddenOracle& o);

struct NodeSolve {
  Subgroup hidden;
  u64 queries = 0;
};

// Deterministic solver for one p-group component. Walks the coordinates in
// order; for coordinate l it probes the cosets p^j e_l + V for ascending j,
// where V is the canonical transversal box of the subgroup found so far.
// A collision between the query sets certifies an element p^j e_l + v of K,
// which extends the subgroup; the box then keeps p^j residues in that
// coordinate. Queries are memoized, so repeated points are free.
NodeSolve classical_node_solve(const GroupSpec& g_i, HiddenOracle& o_i);

// Per-component deterministic solve (optionally in parallel) followed by the
// direct-sum aggregation.
ClassicalReport run_edck(const GroupSpec& g, HiddenOracle& o, bool parallel);

}  // namespace ahsp
