#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "realsnf/random.hpp"
#include "realsnf/verifier.hpp"

namespace realsnf {

struct TrialOutcome {
  int index = 0;
  std::uint64_t seed = 0;
  std::size_t size = 0;
  Conclusion conclusion = Conclusion::NotApplicableNotPsd;
  std::vector<std::string> diagonals;
  std::vector<bool> positivizable;
  bool breach = false;
  std::string breach_reason;
};

struct SuiteSummary {
  int trials = 0;
  std::map<std::string, int> conclusions;
  int breaches = 0;

  int count(Conclusion c) const {
    auto it = conclusions.find(to_string(c));
    return it == conclusions.end() ? 0 : it->second;
  }
};

/**
 * Falsification harness for the positive-diagonal theorem. Every trial builds a Gram
 * matrix (PSD by construction), runs verify_main_theorem and checks:
 * the input is reported PSD, M = P*D*Q, and the report is consistent
 * (psd and (PNRI) force every diagonal to be positivizable).
 */
template <EuclideanRing R>
SuiteSummary run_property_suite(const R& ring, const TrialConfig& cfg,
                                const std::function<void(const TrialOutcome&)>& on_trial = {}) {
  SuiteSummary summary;
  for (int i = 0; i < cfg.trial_count; ++i) {
    TrialConfig tc = cfg;
    tc.seed = trial_seed(cfg.seed, static_cast<std::uint64_t>(i));
    auto m = random_psd_matrix(ring, tc);
    auto rep = verify_main_theorem(ring, m);

    TrialOutcome out;
    out.index = i;
    out.seed = tc.seed;
    out.size = m.rows();
    out.conclusion = rep.conclusion;
    out.positivizable = rep.positivizable;
    for (const auto& d : rep.snf_diagonals) out.diagonals.push_back(ring.format(d));
    if (!rep.input_psd) {
      out.breach = true;
      out.breach_reason = "Gram matrix reported not PSD";
    } else if (!rep.consistent()) {
      out.breach = true;
      out.breach_reason = "PSD input with (PNRI) has a non-positivizable SNF diagonal";
    } else if (!(rep.snf.P * rep.snf.D * rep.snf.Q == m)) {
      out.breach = true;
      out.breach_reason = "M != P*D*Q";
    }

    ++summary.trials;
    ++summary.conclusions[to_string(out.conclusion)];
    if (out.breach) ++summary.breaches;
    if (on_trial) on_trial(out);
  }
  return summary;
}

}  // namespace realsnf
