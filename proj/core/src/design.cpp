#include "bwf/design.hpp"

#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace bwf {

ExperimentDesign::ExperimentDesign(int n_subjects, int n_items, std::vector<Trial> trials)
    : n_subjects_(n_subjects), n_items_(n_items), trials_(std::move(trials)) {
  if (n_subjects_ < 1 || n_items_ < 1)
    throw std::invalid_argument("ExperimentDesign: subject and item counts must be >= 1");
  std::set<std::pair<int, int>> seen;
  std::vector<int> so_balance(static_cast<std::size_t>(n_subjects_), 0);
  for (const Trial& t : trials_) {
    if (t.subject < 0 || t.subject >= n_subjects_)
      throw std::invalid_argument("ExperimentDesign: subject index out of range");
    if (t.item < 0 || t.item >= n_items_)
      throw std::invalid_argument("ExperimentDesign: item index out of range");
    if (t.so != -1 && t.so != 1)
      throw std::invalid_argument("ExperimentDesign: condition code must be -1 or +1");
    if (!seen.emplace(t.subject, t.item).second)
      throw std::invalid_argument("ExperimentDesign: duplicate (subject, item) pair");
    so_balance[static_cast<std::size_t>(t.subject)] += t.so;
  }
  for (int s = 0; s < n_subjects_; ++s) {
    if (std::abs(so_balance[static_cast<std::size_t>(s)]) > 1)
      throw std::invalid_argument("ExperimentDesign: condition codes unbalanced for subject " +
                                  std::to_string(s + 1));
  }
}

ExperimentDesign generate_design(int n_subjects, int n_items) {
  if (n_subjects < 1 || n_items < 1)
    throw std::invalid_argument("generate_design: counts must be >= 1");
  std::vector<Trial> trials;
  trials.reserve(static_cast<std::size_t>(n_subjects) * static_cast<std::size_t>(n_items));
  for (int s = 0; s < n_subjects; ++s) {
    for (int i = 0; i < n_items; ++i) {
      // Parity rotation balances conditions within subjects and items.
      const std::int8_t so = ((s + i) % 2 == 0) ? std::int8_t{1} : std::int8_t{-1};
      trials.push_back(Trial{s, i, so});
    }
  }
  return ExperimentDesign(n_subjects, n_items, std::move(trials));
}

Dataset::Dataset(ExperimentDesign d, std::vector<double> rt) : design(std::move(d)), rt_ms(std::move(rt)) {
  if (rt_ms.size() != static_cast<std::size_t>(design.n_trials()))
    throw std::invalid_argument("Dataset: rt count does not match trial count");
  for (std::size_t i = 0; i < rt_ms.size(); ++i) {
    if (!std::isfinite(rt_ms[i]) || rt_ms[i] <= 0.0)
      throw std::invalid_argument("Dataset: rt must be finite and positive (trial " +
                                  std::to_string(i + 1) + ")");
  }
}

}  // namespace bwf
