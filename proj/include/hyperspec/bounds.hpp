#ifndef HYPERSPEC_BOUNDS_HPP
#define HYPERSPEC_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperspec/spectra.hpp"

namespace hyperspec {

struct KappaResult {
  std::size_t kappa = 0;
  std::vector<int> witness;  // a minimum weak vertex cut
};

// Minimum weak vertex cut by ascending-size subset search. Errors:
// TooLarge beyond the limit, NoWeakCut when every vertex pair is
// adjacent (no deletion can disconnect the rest).
KappaResult exact_kappa_w(const Hypergraph& h, std::size_t limit = 20);

struct CutOracles {
  std::size_t mc = 0;       // max |boundary(S)|
  std::size_t bw = 0;       // min |boundary(S)| over |S| = floor(n/2)
  double cheeger = 0.0;     // min |boundary(S)| / min(|S|, n-|S|)
  std::vector<int> mc_witness;
  std::vector<int> bw_witness;
  std::vector<int> cheeger_witness;
};

// Exhaustive enumeration over nonempty proper subsets. Error: TooLarge.
// `threads` partitions the subset space; reductions tie-break on the
// smaller subset mask, so the result is identical for any thread count.
CutOracles exact_cuts(const Hypergraph& h, std::size_t limit = 20,
                      unsigned threads = 1);

struct BoundRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string relation = "<=";  // lhs <= rhs or lhs >= rhs
  double slack = 0.0;           // positive when the inequality holds
  bool holds = false;
  bool evaluated = false;       // false: hypothesis failed / oracle gated
  std::string note;
  std::string witness;
};

struct BoundReport {
  std::vector<BoundRecord> records;
  std::optional<KappaResult> kappa;
  std::optional<CutOracles> cuts;
  bool exact = false;     // oracles ran exhaustively
  bool all_hold = true;   // over the evaluated records
};

struct AuditOptions {
  std::size_t exact_limit = 20;       // subset oracles gate
  std::size_t exhaustive_limit = 14;  // per-subset boundary audit gate
  unsigned threads = 1;
};

// Evaluates both sides of every spectral inequality against the supplied
// spectrum of -L (kind laplacian, same scheme). Inequalities whose
// hypotheses fail are reported with evaluated = false rather than
// dropped.
BoundReport audit_bounds(const Hypergraph& h, const WeightAssignment& wa,
                         const Spectrum& laplacian_spectrum,
                         const AuditOptions& opts = {});

}  // namespace hyperspec

#endif
