#include "ahsp/classical.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <unordered_map>

#include "ahsp/instance.hpp"

namespace ahsp {

Subgroup brute_force_solve(const GroupSpec& g, HiddenOracle& o) {
  if (g.order() > 4096)
    throw std::invalid_argument("brute_force_solve: group too large");
  if (o.domain() != g)
    throw std::invalid_argument("brute_force_solve: oracle domain mismatch");
  GroupElement zero = GroupElement::zero(g);
  const i64 label0 = o.codomain().flat_index(o.query(zero).coords());
  std::vector<GroupElement> members;
  for (i64 x = 1; x < g.order(); ++x) {
    GroupElement e(g, g.coords_of(x));
    if (o.codomain().flat_index(o.query(e).coords()) == label0)
      members.push_back(std::move(e));
  }
  return Subgroup::span(g, members);
}

namespace {

// Memoized oracle access; only cache misses hit the counted query path.
class QueryMemo {
 public:
  explicit QueryMemo(const GroupSpec& g, HiddenOracle& o) : g_(g), o_(o) {}

  i64 label(i64 flat_x) {
    auto it = memo_.find(flat_x);
    if (it != memo_.end()) return it->second;
    GroupElement v = o_.query(GroupElement(g_, g_.coords_of(flat_x)));
    i64 lab = o_.codomain().flat_index(v.coords());
    memo_.emplace(flat_x, lab);
    return lab;
  }

 private:
  const GroupSpec& g_;
  HiddenOracle& o_;
  std::unordered_map<i64, i64> memo_;
};

// Enumerates the set { sum_c r_c * step_c * e_c : 0 <= r_c < count_c } as
// flat indices of g, optionally negated.
std::vector<i64> box_points(const GroupSpec& g, const std::vector<i64>& steps,
                            const std::vector<i64>& counts, bool negate) {
  const std::size_t k = g.num_factors();
  std::vector<i64> coords(k, 0);
  std::vector<i64> r(counts.size(), 0);
  std::vector<i64> out;
  for (;;) {
    std::vector<i64> c(k, 0);
    for (std::size_t j = 0; j < counts.size(); ++j) {
      i64 v = mod_floor(r[j] * steps[j], g.modulus(j));
      c[j] = negate ? mod_floor(-v, g.modulus(j)) : v;
    }
    out.push_back(g.flat_index(c));
    std::size_t j = counts.size();
    bool done = true;
    while (j-- > 0) {
      if (++r[j] < counts[j]) {
        done = false;
        break;
      }
      r[j] = 0;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct PairCover {
  std::vector<i64> w1;  // queried once per coordinate pass
  std::vector<i64> w2;  // translated by the probe element
};

// Splits the transversal box (exponents t_c of prime p) into W1 and W2 with
// W2 - W1 covering it exactly. |W2| targets sqrt(|box| * r_hat), per the
// sizing of the query-free pair construction this stands in for.
PairCover find_pair(const GroupSpec& g, i64 p, const std::vector<int>& t,
                    u64 r_hat) {
  double box_size = 1.0;
  for (std::size_t c = 0; c < t.size(); ++c)
    box_size *= std::pow(static_cast<double>(p), t[c]);
  const double target = std::sqrt(box_size * static_cast<double>(r_hat));

  std::vector<int> b(t.size(), 0);
  double cur = 1.0;
  for (std::size_t c = 0; c < t.size(); ++c)
    while (b[c] < t[c] && cur * static_cast<double>(p) <= target) {
      ++b[c];
      cur *= static_cast<double>(p);
    }

  std::vector<i64> lo_steps(t.size()), lo_counts(t.size());
  std::vector<i64> hi_steps(t.size()), hi_counts(t.size());
  for (std::size_t c = 0; c < t.size(); ++c) {
    i64 pb = 1;
    for (int e = 0; e < b[c]; ++e) pb = checked_mul(pb, p);
    i64 rest = 1;
    for (int e = b[c]; e < t[c]; ++e) rest = checked_mul(rest, p);
    lo_steps[c] = 1;
    lo_counts[c] = pb;
    hi_steps[c] = pb;
    hi_counts[c] = rest;
  }
  PairCover cover;
  cover.w2 = box_points(g, lo_steps, lo_counts, false);
  cover.w1 = box_points(g, hi_steps, hi_counts, true);
  return cover;
}

}  // namespace

NodeSolve classical_node_solve(const GroupSpec& g_i, HiddenOracle& o_i) {
  if (g_i.sylow_blocks().size() > 1)
    throw std::invalid_argument("classical_node_solve: not a p-group");
  if (o_i.domain() != g_i)
    throw std::invalid_argument("classical_node_solve: oracle domain mismatch");
  const u64 q0 = o_i.query_count();
  const std::size_t r_i = g_i.num_factors();
  const i64 p = r_i == 0 ? 2 : g_i.prime(0);

  QueryMemo memo(g_i, o_i);
  Subgroup found = Subgroup::trivial(g_i);
  std::vector<int> box;  // residue exponents of the processed coordinates
  u64 r_full = 0;

  for (std::size_t l = 0; l < r_i; ++l) {
    const int alpha = prime_power_of(g_i.modulus(l)).exponent;
    PairCover cover = find_pair(g_i, p, box, std::max<u64>(1, r_full));

    std::unordered_map<i64, i64> w1_labels;
    for (i64 x : cover.w1) {
      i64 lab = memo.label(x);
      auto it = w1_labels.find(lab);
      if (it == w1_labels.end() || x < it->second) w1_labels[lab] = x;
    }

    int t_l = alpha;
    for (int j = 0; j < alpha && t_l == alpha; ++j) {
      std::vector<i64> w_coords(r_i, 0);
      i64 pj = 1;
      for (int e = 0; e < j; ++e) pj = checked_mul(pj, p);
      w_coords[l] = pj;
      GroupElement w(g_i, w_coords);

      i64 best_x = -1, best_y = -1;
      for (i64 y0 : cover.w2) {
        GroupElement y = GroupElement(g_i, g_i.coords_of(y0)) + w;
        i64 yf = g_i.flat_index(y.coords());
        auto it = w1_labels.find(memo.label(yf));
        if (it == w1_labels.end()) continue;
        if (best_x < 0 || std::pair(it->second, yf) < std::pair(best_x, best_y)) {
          best_x = it->second;
          best_y = yf;
        }
      }
      if (best_x >= 0) {
        GroupElement diff = GroupElement(g_i, g_i.coords_of(best_y)) -
                            GroupElement(g_i, g_i.coords_of(best_x));
        found = found.joined_with(diff);
        t_l = j;
        if (j == 0) ++r_full;
      }
    }
    box.push_back(t_l);
  }
  return NodeSolve{std::move(found), o_i.query_count() - q0};
}

ClassicalReport run_edck(const GroupSpec& g, HiddenOracle& o, bool parallel) {
  std::vector<SylowComponent> comps = sylow_decompose(g);
  std::vector<NodeSolve> nodes(comps.size());
  if (parallel) {
    std::vector<std::future<NodeSolve>> futures;
    futures.reserve(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      HiddenOracle o_i = o.subfunction(comps, i);
      futures.push_back(std::async(
          std::launch::async, [&comps, i, oi = std::move(o_i)]() mutable {
            return classical_node_solve(comps[i].group, oi);
          }));
    }
    for (std::size_t i = 0; i < comps.size(); ++i) nodes[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      HiddenOracle o_i = o.subfunction(comps, i);
      nodes[i] = classical_node_solve(comps[i].group, o_i);
    }
  }

  ClassicalReport report;
  std::vector<Subgroup> parts;
  parts.reserve(nodes.size());
  for (auto& n : nodes) {
    report.queries_per_node.push_back(n.queries);
    report.total_queries += n.queries;
    report.max_node_queries = std::max(report.max_node_queries, n.queries);
    report.classical_bytes += subgroup_to_json(n.hidden).size();
    parts.push_back(std::move(n.hidden));
  }
  report.recovered = direct_sum_subgroups(g, comps, parts);
  report.success = report.recovered == o.hidden_for_verification();
  return report;
}

}  // namespace ahsp
