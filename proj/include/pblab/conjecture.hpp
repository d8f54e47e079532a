#ifndef PBLAB_CONJECTURE_HPP
#define PBLAB_CONJECTURE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pblab/degree.hpp"
#include "pblab/poly.hpp"
#include "pblab/rational.hpp"

namespace pblab {

/// Search configuration: pairs (F, G) of degrees d and N with neither
/// degree dividing the other, top components proportional to powers of a
/// common h of degree t, no constant term, and (unless the degenerate
/// mode is requested) independent linear parts.
struct CandidateConfig {
  int nvars = 3;
  int d = 2;
  int N = 3;
  int t = 1;
  int samples = 100;
  uint64_t seed = 0;
  int coeff_bound = 9;
  int den_bound = 4;
  int component_terms = 2;
  bool degenerate_mode = false;  // proportional linear parts
  int threads = 1;

  void validate() const;
};

struct PairReport {
  uint64_t index = 0;
  Degree bracket_deg;
  long min_degree = 0;
  std::optional<Rational> ratio;  // bracket degree / min degree, when the bracket is nonzero

  bool constant_free = false;
  bool linear_parts_independent = false;
  bool makar_limanov_degenerate = false;    // dependent linear parts
  bool top_forms_commute = false;           // [F_d, G_N] = 0, i.e. powers of a common h
  bool top_forms_independent_certified = false;  // nonzero bracket of the top forms
  bool degrees_non_dividing = false;        // deg F does not divide deg G and vice versa
  bool centralizer_heuristic_f = false;
  bool centralizer_heuristic_g = false;
  bool counterexample_candidate = false;

  Poly f, g;

  PairReport() : f(1), g(1) {}
};

/// Deterministic from (config.seed, index); independent of every other
/// sample, so workers can split the index range arbitrarily.
std::pair<Poly, Poly> generate_pair(const CandidateConfig& config, uint64_t index);

/// Recomputes every flag from the pair itself. Usable for round-trip
/// audits of stored reports.
PairReport evaluate_pair(const Poly& F, const Poly& G);

/// Necessary-condition filter for "F generates its own centralizer":
/// rejects F whose top form is a proper power, and F lying in Q[Q] for a
/// lower-degree homogeneous candidate Q (tested via commutation and
/// expansion in powers of Q, candidates drawn from F's components). A
/// true result is NOT a proof; the search reports this verdict separately
/// from the certified flags.
bool heuristic_centralizer_filter(const Poly& F);

struct SearchSummary {
  CandidateConfig config;
  std::string notes;
  std::optional<Rational> min_ratio;
  std::map<std::string, int> ratio_histogram;  // canonical "p/q" -> count
  int degenerate_count = 0;
  int inapplicable_count = 0;  // vanishing bracket
  std::vector<PairReport> candidates;  // ratio <= 1 passing all hypothesis flags, full dumps
  std::vector<PairReport> reports;     // every sample, index order
};

SearchSummary run_search(const CandidateConfig& config);

/// Byte-stable serialization: sorted keys, rationals as canonical "p/q"
/// strings, no floats. Identical configurations produce identical bytes
/// regardless of worker count.
std::string summary_to_json(const SearchSummary& summary, bool include_reports = false);
std::string pair_report_to_json(const PairReport& report);

}  // namespace pblab

#endif
