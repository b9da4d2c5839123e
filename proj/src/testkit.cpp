#include "coxrh/testkit.hpp"

#include <algorithm>
#include <random>

#include "coxrh/relhyp.hpp"

namespace coxrh {

GeneratorConfig uniform_config(int n, std::uint64_t seed,
                               std::vector<int> labels) {
  GeneratorConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  for (int lab : labels) cfg.label_weights.emplace_back(lab, 1.0);
  return cfg;
}

namespace {

// mt19937_64 output is pinned by the standard, and the arithmetic below is
// plain IEEE double operations, so draws are reproducible across platforms.
int draw_label(std::mt19937_64& rng,
               const std::vector<std::pair<int, double>>& weights,
               double total) {
  double u = (static_cast<double>(rng() >> 11) / 9007199254740992.0) * total;
  for (const auto& [label, w] : weights) {
    u -= w;
    if (u < 0) return label;
  }
  return weights.back().first;
}

}  // namespace

CoxeterMatrix random_matrix(const GeneratorConfig& cfg) {
  if (cfg.n > CoxeterMatrix::kMaxRank)
    throw Error(ErrorCode::TooLarge, "rank exceeds the cap");
  double total = 0;
  for (const auto& [label, w] : cfg.label_weights) {
    if (w < 0)
      throw Error(ErrorCode::ValidationError, "negative label weight");
    total += w;
  }
  if (total <= 0)
    throw Error(ErrorCode::ValidationError, "label weights sum to zero");

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::vector<int>> entries(cfg.n, std::vector<int>(cfg.n, 2));
  for (int i = 0; i < cfg.n; ++i) entries[i][i] = 1;
  for (int i = 0; i < cfg.n; ++i) {
    for (int j = i + 1; j < cfg.n; ++j) {
      int lab = draw_label(rng, cfg.label_weights, total);
      entries[i][j] = lab;
      entries[j][i] = lab;
    }
  }
  return CoxeterMatrix(cfg.n, entries);
}

SimpleGraph random_graph(int n, std::uint64_t seed, double edge_prob) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double u = static_cast<double>(rng() >> 11) / 9007199254740992.0;
      if (u < edge_prob) edges.emplace_back(i, j);
    }
  }
  return SimpleGraph(n, std::move(edges));
}

BruteForceDecision brute_force_decide(const CoxeterMatrix& m) {
  std::vector<GenSet> core_sets;
  for (const Core& c : cores(m)) core_sets.push_back(c.members);
  const int k = static_cast<int>(core_sets.size());
  if (k > 10)
    throw Error(ErrorCode::TooManyCores,
                std::to_string(k) + " maximal cores exceed the partition guard");

  BruteForceDecision result;
  if (k == 0) {
    result.exists_proper_family = true;
    return result;
  }

  SubsetTable table(m);
  const GenSet whole = m.all();

  std::vector<GenSet> finest;
  int finest_blocks = -1;

  // Restricted growth strings enumerate every set partition exactly once.
  std::vector<int> assign(k, 0);
  while (true) {
    int blocks = *std::max_element(assign.begin(), assign.end()) + 1;
    std::vector<GenSet> unions(blocks);
    for (int i = 0; i < k; ++i) unions[assign[i]] |= core_sets[i];

    bool valid = true;
    for (int a = 0; a < blocks && valid; ++a)
      for (int b = a + 1; b < blocks; ++b)
        if (!table.spherical(unions[a] & unions[b])) {
          valid = false;
          break;
        }
    if (valid) {
      bool proper = std::none_of(unions.begin(), unions.end(),
                                 [&](GenSet u) { return u == whole; });
      result.exists_proper_family |= proper;
      if (blocks > finest_blocks) {
        finest_blocks = blocks;
        std::sort(unions.begin(), unions.end());
        finest = unions;
      }
    }

    // next restricted growth string
    int i = k - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(assign.begin(), assign.begin() + i) + 1;
      if (assign[i] < cap) {
        ++assign[i];
        std::fill(assign.begin() + i + 1, assign.end(), 0);
        break;
      }
      assign[i] = 0;
    }
    if (i == 0) break;
  }

  result.coarsest = std::move(finest);
  return result;
}

std::uint64_t exhaustive_corpus_size(int n, int label_count) {
  std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::uint64_t size = 1;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    size *= static_cast<std::uint64_t>(label_count);
    if (size > 100000000ull) return size;  // saturating, only used for guards
  }
  return size;
}

void exhaustive_corpus(int n, const std::vector<int>& labels,
                       const std::function<void(const CoxeterMatrix&)>& fn) {
  if (labels.empty())
    throw Error(ErrorCode::ValidationError, "empty label list");
  if (exhaustive_corpus_size(n, static_cast<int>(labels.size())) > 10000000ull)
    throw Error(ErrorCode::TooLarge, "corpus exceeds the 10^7 instance guard");

  const int pairs = n * (n - 1) / 2;
  std::vector<int> digits(pairs, 0);
  std::vector<std::vector<int>> entries(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) entries[i][i] = 1;

  while (true) {
    int d = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        entries[i][j] = entries[j][i] = labels[digits[d]];
        ++d;
      }
    fn(CoxeterMatrix(n, entries));

    int pos = pairs - 1;
    for (; pos >= 0; --pos) {
      if (++digits[pos] < static_cast<int>(labels.size())) break;
      digits[pos] = 0;
    }
    if (pos < 0) break;
  }
}

}  // namespace coxrh
