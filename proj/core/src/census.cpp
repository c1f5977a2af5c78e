#include "gotzmann/census.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

#include "gotzmann/binomial.hpp"
#include "gotzmann/errors.hpp"
#include "gotzmann/growth.hpp"
#include "gotzmann/text_format.hpp"
#include "internal.hpp"
#include "parallel.hpp"

namespace gotzmann {

Count default_budget() {
  if (const char* env = std::getenv("GOTZMANN_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the built-in default
    }
  }
  return 50'000'000;
}

namespace {

using Index = std::uint32_t;

/// Degree-t stratum with, for each member, the indices of its nonzero
/// variable multiples in the degree-(t+1) stratum.
struct Stratum {
  std::vector<Monomial> members;
  std::vector<std::vector<Index>> up;
  std::size_t shadow_dim = 0;

  Stratum(const RingSpec& ring, Degree t) : members(enumerate_degree(ring, t)) {
    const auto above = enumerate_degree(ring, t + 1);
    shadow_dim = above.size();
    up.resize(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (std::size_t v = 0; v < ring.num_vars(); ++v) {
        if (!ring.cap(v).admits(members[k][v] + 1)) continue;
        const Monomial m = members[k].times_var(v);
        const auto it = std::lower_bound(above.begin(), above.end(), m, LexGreater{});
        up[k].push_back(static_cast<Index>(it - above.begin()));
      }
    }
  }
};

/// Shadow size of the current subset, maintained under add/remove in O(n).
class ShadowCounter {
 public:
  explicit ShadowCounter(const Stratum& s) : stratum_(s), mult_(s.shadow_dim, 0) {}

  void add(Index k) {
    for (Index u : stratum_.up[k])
      if (mult_[u]++ == 0) ++size_;
  }
  void remove(Index k) {
    for (Index u : stratum_.up[k])
      if (--mult_[u] == 0) --size_;
  }
  Count size() const noexcept { return size_; }

 private:
  const Stratum& stratum_;
  std::vector<std::uint32_t> mult_;
  Count size_ = 0;
};

struct TaskResult {
  Count gotzmann = 0;
  Count below = 0;
  std::vector<std::vector<Index>> witnesses;
};

struct Search {
  const Stratum& stratum;
  Count target;
  bool prune;
  bool store;

  void leaf(const ShadowCounter& counter, const std::vector<Index>& chosen, TaskResult& out) const {
    const Count s = counter.size();
    if (s < target) ++out.below;
    if (s == target) {
      ++out.gotzmann;
      if (store) out.witnesses.push_back(chosen);
    }
  }

  void extend(ShadowCounter& counter, std::vector<Index>& chosen, Index start, Count remaining,
              TaskResult& out) const {
    if (remaining == 0) {
      leaf(counter, chosen, out);
      return;
    }
    const auto n = static_cast<Index>(stratum.members.size());
    for (Index k = start; k + remaining <= n; ++k) {
      counter.add(k);
      chosen.push_back(k);
      if (!(prune && counter.size() > target)) extend(counter, chosen, k + 1, remaining - 1, out);
      chosen.pop_back();
      counter.remove(k);
    }
  }

  /// Subtree of subsets whose smallest indices are exactly `prefix`.
  TaskResult run(const std::vector<Index>& prefix, Count d) const {
    TaskResult out;
    ShadowCounter counter(stratum);
    std::vector<Index> chosen;
    chosen.reserve(static_cast<std::size_t>(d));
    bool alive = true;
    for (Index k : prefix) {
      counter.add(k);
      chosen.push_back(k);
      if (prune && counter.size() > target) alive = false;
    }
    if (alive) {
      const Index start = prefix.empty() ? 0 : prefix.back() + 1;
      extend(counter, chosen, start, d - prefix.size(), out);
    }
    return out;
  }
};

/// Ordered prefixes of length min(d, 2) that partition the search space.
std::vector<std::vector<Index>> make_prefixes(Index n, Count d) {
  std::vector<std::vector<Index>> out;
  if (d == 0) {
    out.push_back({});
  } else if (d == 1) {
    for (Index a = 0; a < n; ++a) out.push_back({a});
  } else {
    for (Index a = 0; a + d <= n; ++a)
      for (Index b = a + 1; b + (d - 1) <= n; ++b) out.push_back({a, b});
  }
  return out;
}

}  // namespace

CensusRecord enumerate_gotzmann(const RingSpec& ring, Degree t, Count d, const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Count dim = dim_degree(ring, t);
  if (d > dim)
    throw DefinednessError("census: d = " + std::to_string(d) + " exceeds stratum size " + std::to_string(dim));

  Count total = 0;
  try {
    total = binomial(dim, d);
  } catch (const std::overflow_error&) {
    throw BudgetExceeded(~Count{0}, options.budget);
  }
  if (total > options.budget) throw BudgetExceeded(total, options.budget);

  CensusRecord rec{ring, t, d, lex_target(ring, t, d), total, 0, 0, {}, {}, 0.0};

  const Stratum stratum(ring, t);
  const Search search{stratum, rec.target, options.prune, options.store_witnesses};
  const auto prefixes = make_prefixes(static_cast<Index>(stratum.members.size()), d);
  std::vector<TaskResult> results(prefixes.size());
  detail::parallel_for(prefixes.size(), options.threads,
                       [&](std::size_t i) { results[i] = search.run(prefixes[i], d); });

  for (auto& r : results) {
    rec.gotzmann_count += r.gotzmann;
    rec.below_target += r.below;
    for (const auto& w : r.witnesses) {
      std::vector<Monomial> members;
      members.reserve(w.size());
      bool lex = true;
      for (std::size_t k = 0; k < w.size(); ++k) {
        members.push_back(stratum.members[w[k]]);
        lex = lex && w[k] == k;
      }
      rec.witnesses.push_back(make_trusted_set(ring, t, std::move(members)));
      rec.witness_is_lex.push_back(lex);
    }
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::string census_witness_lines(const CensusRecord& record) {
  std::string out;
  for (const auto& w : record.witnesses) {
    out += format_set_line(w);
    out += '\n';
  }
  return out;
}

std::string census_summary_json(const CensusRecord& record, Count budget, bool include_timing) {
  nlohmann::ordered_json j;
  j["params"] = {{"ring", format_ring(record.ring)}, {"t", record.degree}, {"d", record.size}};
  j["count"] = record.gotzmann_count;
  j["target"] = record.target;
  j["subsets"] = record.subsets_total;
  j["below_target"] = record.below_target;
  j["lexsegment_witnesses"] =
      std::count(record.witness_is_lex.begin(), record.witness_is_lex.end(), true);
  j["budget"] = budget;
  j["elapsed"] = include_timing ? nlohmann::ordered_json(record.elapsed_ms) : nlohmann::ordered_json(nullptr);
  return j.dump(2);
}

}  // namespace gotzmann
