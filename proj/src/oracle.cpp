#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

#include "gooddecomp/oracle.hpp"

namespace gooddecomp {

std::string_view to_string(OracleOutcome outcome) {
  switch (outcome) {
    case OracleOutcome::found: return "found";
    case OracleOutcome::none: return "none";
    case OracleOutcome::aborted: return "aborted";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

// Reachability closure from vertex 0 along `adj`.
Mask reach_from_zero(const std::vector<Mask>& adj, Mask all) {
  Mask seen = 1;
  Mask frontier = 1;
  while (frontier) {
    const std::size_t v = static_cast<std::size_t>(std::countr_zero(frontier));
    frontier &= frontier - 1;
    const Mask fresh = adj[v] & ~seen;
    seen |= fresh;
    frontier |= fresh;
    if (seen == all) break;
  }
  return seen;
}

bool strong_masks(const std::vector<Mask>& out, const std::vector<Mask>& in, Mask all) {
  return reach_from_zero(out, all) == all && reach_from_zero(in, all) == all;
}

class Search {
 public:
  Search(const Digraph& d, std::uint64_t budget)
      : n_(d.order()), arcs_(d.arcs()), budget_(budget),
        all_(n_ == 64 ? ~Mask{0} : bit(n_) - 1) {
    for (int s = 0; s < 2; ++s) {
      possible_out_[s].assign(n_, 0);
      possible_in_[s].assign(n_, 0);
      taken_out_[s].assign(n_, 0);
      taken_in_[s].assign(n_, 0);
    }
    for (const Arc& a : arcs_) {
      for (int s = 0; s < 2; ++s) {
        possible_out_[s][a.tail] |= bit(a.head);
        possible_in_[s][a.head] |= bit(a.tail);
      }
    }
    side_.assign(arcs_.size(), -1);
  }

  // True when found; aborted_ tells a budget stop from exhaustion.
  bool run() { return descend(0); }

  bool aborted() const noexcept { return aborted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  const ArcSet& first() const noexcept { return result_[0]; }
  const ArcSet& second() const noexcept { return result_[1]; }

 private:
  bool descend(std::size_t i) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (i == arcs_.size()) {
      record(0, false);
      return true;
    }
    // Greedy: A1 takes an arc unless A2 cannot spare it.
    for (int s = 0; s < 2; ++s) {
      if (i == 0 && s == 1) break;
      if (!assign(i, s)) continue;
      if (strong_masks(taken_out_[s], taken_in_[s], all_)) {
        record(s, true);
        unassign(i, s);
        return true;
      }
      const bool ok = descend(i + 1);
      unassign(i, s);
      if (ok || aborted_) return ok;
    }
    return false;
  }

  // Puts arc i on side s; fails (leaving no trace) when the other side
  // loses strongness.
  bool assign(std::size_t i, int s) {
    const Arc& a = arcs_[i];
    const int o = 1 - s;
    possible_out_[o][a.tail] &= ~bit(a.head);
    possible_in_[o][a.head] &= ~bit(a.tail);
    if (possible_out_[o][a.tail] == 0 || possible_in_[o][a.head] == 0 ||
        !strong_masks(possible_out_[o], possible_in_[o], all_)) {
      possible_out_[o][a.tail] |= bit(a.head);
      possible_in_[o][a.head] |= bit(a.tail);
      return false;
    }
    taken_out_[s][a.tail] |= bit(a.head);
    taken_in_[s][a.head] |= bit(a.tail);
    side_[i] = s;
    return true;
  }

  void unassign(std::size_t i, int s) {
    const Arc& a = arcs_[i];
    const int o = 1 - s;
    possible_out_[o][a.tail] |= bit(a.head);
    possible_in_[o][a.head] |= bit(a.tail);
    taken_out_[s][a.tail] &= ~bit(a.head);
    taken_in_[s][a.head] &= ~bit(a.tail);
    side_[i] = -1;
  }

  // Side s keeps only its assigned arcs; the other side gets everything else.
  void record(int s, bool taken_only) {
    for (auto& r : result_) r.clear();
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const bool on_s = side_[i] == s || (!taken_only && side_[i] == -1);
      result_[on_s ? s : 1 - s].insert(arcs_[i]);
    }
  }

  std::size_t n_;
  std::vector<Arc> arcs_;
  std::uint64_t budget_;
  Mask all_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::array<std::vector<Mask>, 2> possible_out_, possible_in_, taken_out_, taken_in_;
  std::vector<int> side_;
  std::array<ArcSet, 2> result_;
};

// Quick necessary conditions: every vertex needs two in- and two out-arcs,
// and the digraph must be 2-arc-strong.
bool may_have_good_decomposition(const Digraph& d) {
  for (VertexId v = 0; v < d.order(); ++v) {
    if (d.in_degree(v) < 2 || d.out_degree(v) < 2) return false;
  }
  return arc_connectivity(d) >= 2;
}

}  // namespace

OracleReport oracle_good_decomposition(const Digraph& d, std::uint64_t budget) {
  if (d.order() > kOracleMaxOrder) {
    throw std::invalid_argument("oracle supports at most 64 vertices");
  }
  const auto start = std::chrono::steady_clock::now();
  OracleReport report;
  auto finish = [&] {
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  };

  if (d.order() <= 1) {
    report.outcome = OracleOutcome::found;
    report.decomposition = certify(d, {}, {}, "oracle");
    return finish();
  }
  if (!may_have_good_decomposition(d)) {
    report.outcome = OracleOutcome::none;
    return finish();
  }

  Search search(d, budget);
  const bool found = search.run();
  report.nodes_explored = std::min(search.nodes(), budget);
  if (found) {
    report.outcome = OracleOutcome::found;
    report.decomposition = certify(d, search.first(), search.second(), "oracle");
  } else {
    report.outcome = search.aborted() ? OracleOutcome::aborted : OracleOutcome::none;
  }
  return finish();
}

// ---------------------------------------------------------------------------
// Semicomplete enumeration by vertex extension and canonical codes.
// ---------------------------------------------------------------------------

namespace {

using Code = std::uint64_t;

// Bit (i * n + j) set iff i -> j; n <= 6 so 36 bits suffice.
Code encode(const std::vector<Mask>& out, std::span<const std::size_t> order) {
  const std::size_t n = order.size();
  Code code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && (out[order[i]] & bit(order[j]))) code |= Code{1} << (i * n + j);
    }
  }
  return code;
}

// Least code over all relabelings that keep vertices sorted by
// (out-degree, in-degree). Any isomorphism preserves those classes, so the
// minimum is a complete invariant.
Code canonical_code(const std::vector<Mask>& out) {
  const std::size_t n = out.size();
  std::vector<std::pair<int, int>> sig(n, {0, 0});
  for (std::size_t v = 0; v < n; ++v) {
    sig[v].first = std::popcount(out[v]);
    for (std::size_t u = 0; u < n; ++u)
      if (out[u] & bit(v)) ++sig[v].second;
  }
  std::vector<std::size_t> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sig[a] < sig[b] || (sig[a] == sig[b] && a < b); });
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && sig[order[j]] == sig[order[i]]) ++j;
    groups.push_back({i, j});
    i = j;
  }

  Code best = ~Code{0};
  // Odometer over the permutations of each group.
  auto recurse = [&](auto&& self, std::size_t g) -> void {
    if (g == groups.size()) {
      best = std::min(best, encode(out, order));
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(groups[g].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(groups[g].second);
    std::sort(first, last);
    do {
      self(self, g + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return best;
}

Digraph from_masks(const std::vector<Mask>& out) {
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < out.size(); ++u)
    for (std::size_t v = 0; v < out.size(); ++v)
      if (out[u] & bit(v)) arcs.push_back({u, v});
  return Digraph(out.size(), arcs);
}

}  // namespace

std::vector<Digraph> enumerate_semicomplete(std::size_t n, std::size_t min_arc_strong) {
  if (n > 6) throw std::invalid_argument("enumerate_semicomplete supports n <= 6");
  if (n == 0) return min_arc_strong == 0 ? std::vector<Digraph>{Digraph(0)} : std::vector<Digraph>{};

  std::map<Code, std::vector<Mask>> layer{{0, std::vector<Mask>(1, 0)}};
  for (std::size_t k = 1; k < n; ++k) {
    std::map<Code, std::vector<Mask>> next;
    std::size_t patterns = 1;
    for (std::size_t i = 0; i < k; ++i) patterns *= 3;
    for (const auto& [code, base] : layer) {
      for (std::size_t p = 0; p < patterns; ++p) {
        std::vector<Mask> out = base;
        out.push_back(0);
        std::size_t rest = p;
        // Each old vertex i meets the new vertex k by k->i, i->k or both.
        for (std::size_t i = 0; i < k; ++i, rest /= 3) {
          const std::size_t choice = rest % 3;
          if (choice != 1) out[k] |= bit(i);
          if (choice != 0) out[i] |= bit(k);
        }
        next.emplace(canonical_code(out), std::move(out));
      }
    }
    layer = std::move(next);
  }

  std::vector<Digraph> result;
  for (const auto& [code, out] : layer) {
    Digraph d = from_masks(out);
    if (min_arc_strong == 0 || (n >= 2 && arc_connectivity(d) >= min_arc_strong)) {
      result.push_back(std::move(d));
    }
  }
  return result;
}

}  // namespace gooddecomp
