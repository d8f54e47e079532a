#include "pblab/conjecture.hpp"

#include <atomic>
#include <thread>

#include <json.hpp>

#include "pblab/bracket.hpp"
#include "pblab/h_reduction.hpp"
#include "pblab/linalg.hpp"
#include "pblab/poly_gcd.hpp"
#include "pblab/poly_io.hpp"
#include "pblab/sampling.hpp"

namespace pblab {

void CandidateConfig::validate() const {
  require(nvars >= 2 && nvars <= 9, errc::invalid_parameters, "nvars must be 2..9");
  require(d >= 2 && N >= 2, errc::invalid_parameters, "degrees must be >= 2");
  require(d % N != 0 && N % d != 0, errc::invalid_parameters,
          "degrees must not divide one another");
  require(t >= 1 && d % t == 0 && N % t == 0, errc::invalid_parameters, "t must divide gcd(d, N)");
  require(samples >= 0, errc::invalid_parameters, "sample count must be >= 0");
  require(threads >= 1 && threads <= 64, errc::invalid_parameters, "threads must be 1..64");
}

namespace {

bool linear_parts_independent(const Poly& F, const Poly& G) {
  Poly lf = F.homogeneous_component(1);
  Poly lg = G.homogeneous_component(1);
  if (lf.is_zero() || lg.is_zero()) return false;
  QMatrix m;
  QVector zero_rhs;
  // Rank of the 2 x n coefficient matrix, via the nullspace of its transpose.
  for (int v = 0; v < F.nvars(); ++v) {
    m.push_back({lf.coefficient(Monomial::variable(F.nvars(), v)),
                 lg.coefficient(Monomial::variable(F.nvars(), v))});
    zero_rhs.push_back(Rational(0));
  }
  auto sol = linear_solve(m, zero_rhs);
  return sol && sol->nullspace.empty();
}

}  // namespace

std::pair<Poly, Poly> generate_pair(const CandidateConfig& config, uint64_t index) {
  config.validate();
  Rng rng(Rng::mix(config.seed, index));
  int n = config.nvars;

  HomogeneousPoly h = random_base_form(rng, n, config.t, 3, config.coeff_bound, config.den_bound);
  Rational a = rng.rational(config.coeff_bound, config.den_bound, true);
  Rational b = rng.rational(config.coeff_bound, config.den_bound, true);

  Poly lin_f = random_linear(rng, n, config.coeff_bound, config.den_bound);
  Poly lin_g(n);
  if (config.degenerate_mode) {
    lin_g = lin_f.scaled(rng.rational(config.coeff_bound, config.den_bound, true));
  } else {
    do {
      lin_g = random_linear(rng, n, config.coeff_bound, config.den_bound);
    } while (!linear_parts_independent(lin_f, lin_g));
  }

  auto middle = [&](int top_degree) {
    Poly acc(n);
    for (int deg = 2; deg < top_degree; ++deg)
      if (rng.chance(1, 2))
        acc += random_homogeneous(rng, n, deg, config.component_terms, config.coeff_bound,
                                  config.den_bound);
    return acc;
  };

  Poly F = pow(h.poly(), config.d / config.t).scaled(a) + middle(config.d) + lin_f;
  Poly G = pow(h.poly(), config.N / config.t).scaled(b) + middle(config.N) + lin_g;
  return {F, G};
}

bool heuristic_centralizer_filter(const Poly& F) {
  if (F.is_constant()) return true;
  long deg_f = F.degree().value();
  if (deg_f == 1) return true;

  HomogeneousPoly top(F.homogeneous_component(static_cast<int>(deg_f)),
                      static_cast<int>(deg_f));
  if (is_proper_power(top).has_value()) return false;

  // Lower-degree homogeneous candidates Q: when [Q, F] = 0 and Q is no
  // proper power, F expands in powers of Q, i.e. F fails to generate its
  // own centralizer.
  for (const auto& [deg, comp] : F.homogeneous_components()) {
    if (deg < 1 || deg >= deg_f || deg_f % deg != 0) continue;
    HomogeneousPoly q(comp, deg);
    if (is_proper_power(q).has_value()) continue;
    if (!bracket_degree(comp, F).is_neg_infinity()) continue;
    try {
      express_in_h(q, F);
      return false;
    } catch (const error&) {
      // Not expressible; keep scanning.
    }
  }
  return true;
}

PairReport evaluate_pair(const Poly& F, const Poly& G) {
  require(F.nvars() == G.nvars(), errc::nvars_mismatch, "pair evaluation");
  PairReport rep;
  rep.f = F;
  rep.g = G;
  rep.bracket_deg = bracket_degree(F, G);

  Degree df = F.degree(), dg = G.degree();
  bool nontrivial = df.is_finite() && dg.is_finite() && df.value() >= 1 && dg.value() >= 1;
  if (nontrivial) {
    rep.min_degree = std::min(df.value(), dg.value());
    if (!rep.bracket_deg.is_neg_infinity())
      rep.ratio = Rational(rep.bracket_deg.value(), rep.min_degree);
    rep.degrees_non_dividing = df.value() % dg.value() != 0 && dg.value() % df.value() != 0;
  }

  std::vector<Rational> origin(static_cast<size_t>(F.nvars()), Rational(0));
  rep.constant_free = F.evaluate(origin).is_zero() && G.evaluate(origin).is_zero();
  rep.linear_parts_independent = linear_parts_independent(F, G);
  rep.makar_limanov_degenerate = !rep.linear_parts_independent;

  if (nontrivial) {
    Poly tf = F.homogeneous_component(static_cast<int>(df.value()));
    Poly tg = G.homogeneous_component(static_cast<int>(dg.value()));
    Degree top_bd = bracket_degree(tf, tg);
    rep.top_forms_commute = top_bd.is_neg_infinity();
    rep.top_forms_independent_certified = !rep.top_forms_commute;
  }

  rep.centralizer_heuristic_f = heuristic_centralizer_filter(F);
  rep.centralizer_heuristic_g = heuristic_centralizer_filter(G);

  rep.counterexample_candidate = rep.ratio.has_value() && *rep.ratio <= Rational(1) &&
                                 rep.constant_free && rep.linear_parts_independent &&
                                 rep.degrees_non_dividing && rep.centralizer_heuristic_f &&
                                 rep.centralizer_heuristic_g;
  return rep;
}

SearchSummary run_search(const CandidateConfig& config) {
  config.validate();
  SearchSummary summary;
  summary.config = config;
  summary.notes =
      "centralizer filter is a necessary-condition heuristic, not a decision procedure; "
      "its verdict is reported separately from the certified flags";

  summary.reports.resize(static_cast<size_t>(config.samples));
  std::atomic<uint64_t> next{0};
  auto worker = [&]() {
    while (true) {
      uint64_t idx = next.fetch_add(1);
      if (idx >= static_cast<uint64_t>(config.samples)) return;
      auto [F, G] = generate_pair(config, idx);
      PairReport rep = evaluate_pair(F, G);
      rep.index = idx;
      summary.reports[idx] = std::move(rep);
    }
  };
  if (config.threads <= 1 || config.samples <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    int count = std::min<int>(config.threads, std::max(1, config.samples));
    pool.reserve(static_cast<size_t>(count));
    for (int w = 0; w < count; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Ordered merge: everything below depends only on the index order.
  for (const auto& rep : summary.reports) {
    if (rep.makar_limanov_degenerate) ++summary.degenerate_count;
    if (!rep.ratio) {
      ++summary.inapplicable_count;
      continue;
    }
    ++summary.ratio_histogram[rep.ratio->str()];
    if (!summary.min_ratio || *rep.ratio < *summary.min_ratio) summary.min_ratio = rep.ratio;
    if (rep.counterexample_candidate) summary.candidates.push_back(rep);
  }
  return summary;
}

namespace {

using json = nlohmann::json;

json degree_json(const Degree& d) {
  return d.is_neg_infinity() ? json("-inf") : json(d.value());
}

json report_json(const PairReport& rep) {
  json j;
  j["index"] = rep.index;
  j["bracket_degree"] = degree_json(rep.bracket_deg);
  j["min_degree"] = rep.min_degree;
  j["ratio"] = rep.ratio ? json(rep.ratio->str()) : json(nullptr);
  j["constant_free"] = rep.constant_free;
  j["linear_parts_independent"] = rep.linear_parts_independent;
  j["makar_limanov_degenerate"] = rep.makar_limanov_degenerate;
  j["top_forms_commute"] = rep.top_forms_commute;
  j["top_forms_independent_certified"] = rep.top_forms_independent_certified;
  j["degrees_non_dividing"] = rep.degrees_non_dividing;
  j["centralizer_heuristic_f"] = rep.centralizer_heuristic_f;
  j["centralizer_heuristic_g"] = rep.centralizer_heuristic_g;
  j["counterexample_candidate"] = rep.counterexample_candidate;
  j["f"] = to_string(rep.f);
  j["g"] = to_string(rep.g);
  return j;
}

}  // namespace

std::string pair_report_to_json(const PairReport& report) { return report_json(report).dump(2); }

std::string summary_to_json(const SearchSummary& summary, bool include_reports) {
  json j;
  j["config"] = {{"nvars", summary.config.nvars},
                 {"d", summary.config.d},
                 {"N", summary.config.N},
                 {"t", summary.config.t},
                 {"samples", summary.config.samples},
                 {"seed", summary.config.seed},
                 {"coeff_bound", summary.config.coeff_bound},
                 {"den_bound", summary.config.den_bound},
                 {"component_terms", summary.config.component_terms},
                 {"degenerate_mode", summary.config.degenerate_mode}};
  j["notes"] = summary.notes;
  j["min_ratio"] = summary.min_ratio ? json(summary.min_ratio->str()) : json(nullptr);
  j["ratio_histogram"] = summary.ratio_histogram;
  j["degenerate_count"] = summary.degenerate_count;
  j["inapplicable_count"] = summary.inapplicable_count;
  json cands = json::array();
  for (const auto& rep : summary.candidates) cands.push_back(report_json(rep));
  j["counterexample_candidates"] = cands;
  if (include_reports) {
    json reps = json::array();
    for (const auto& rep : summary.reports) reps.push_back(report_json(rep));
    j["reports"] = reps;
  }
  return j.dump(2);
}

}  // namespace pblab
