#pragma once

#include <cstdint>
#include <vector>

namespace bwf {

/// One presentation of an item to a subject. `so` is the sum-coded
/// condition: -1 subject relative, +1 object relative.
struct Trial {
  std::int32_t subject = 0;  // 0-based dense index
  std::int32_t item = 0;     // 0-based dense index
  std::int8_t so = -1;
};

/// Latin-square repeated-measures layout: each (subject, item) pair occurs
/// at most once and condition codes are balanced within +-1 per subject.
class ExperimentDesign {
 public:
  ExperimentDesign(int n_subjects, int n_items, std::vector<Trial> trials);

  int n_subjects() const { return n_subjects_; }
  int n_items() const { return n_items_; }
  const std::vector<Trial>& trials() const { return trials_; }
  int n_trials() const { return static_cast<int>(trials_.size()); }

 private:
  int n_subjects_;
  int n_items_;
  std::vector<Trial> trials_;
};

/// Complete crossed design: every subject sees every item exactly once,
/// with conditions alternating over item and subject parity so that both
/// per-subject and per-item counts are balanced within +-1.
ExperimentDesign generate_design(int n_subjects, int n_items);

/// Reading times (milliseconds) on a design; rt_ms[i] belongs to trials()[i].
struct Dataset {
  ExperimentDesign design;
  std::vector<double> rt_ms;

  Dataset(ExperimentDesign d, std::vector<double> rt);
};

}  // namespace bwf
