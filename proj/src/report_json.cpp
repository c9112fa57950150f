#include "opmeans/report_json.hpp"

#include <cmath>

namespace opmeans {

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json norms_json(const std::vector<NormKind>& norms) {
  json out = json::array();
  for (const NormKind& k : norms) out.push_back(k.to_string());
  return out;
}

}  // namespace

json to_json(const CheckReport& r) {
  const ClaimInfo& ci = info(r.claim);
  return {
      {"id", ci.name},
      {"anchor", ci.anchor},
      {"margin_or_residual", number_or_null(r.margin_or_residual)},
      {"tolerance", r.tolerance},
      {"passed", r.passed},
      {"detail", r.detail},
      {"inputs_digest",
       {{"seed", r.inputs_digest.seed}, {"dim", r.inputs_digest.dim}, {"t_values", r.inputs_digest.t_values}}},
  };
}

json to_json(const Witness& w) {
  json j = {
      {"a", to_json(w.a)},
      {"b", to_json(w.b)},
      {"trial", w.trial},
      {"seed", w.seed},
      {"detail", w.detail},
  };
  if (w.x) j["x"] = to_json(*w.x);
  return j;
}

json to_json(const FalsificationReport& r) {
  return {
      {"id", info(r.claim).name},
      {"anchor", info(r.claim).anchor},
      {"found", r.found},
      {"trials_run", r.trials_run},
      {"violation_margin", number_or_null(r.violation_margin)},
      {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
  };
}

json to_json(const ExampleResult& r) {
  return {
      {"name", r.name},
      {"expected", r.expected},
      {"computed", r.computed},
      {"tolerance", r.tolerance},
      {"ok", r.ok},
  };
}

json to_json(const ClaimAggregate& a) {
  const ClaimInfo& ci = info(a.claim);
  json j = {
      {"id", ci.name},
      {"anchor", ci.anchor},
      {"kind", to_string(ci.kind)},
      {"trials", a.trials},
      {"failures", a.failures},
      {"worst_margin", a.worst_margin ? number_or_null(*a.worst_margin) : json(nullptr)},
      {"passed", a.passed},
  };
  if (a.worst_margin) {
    j["worst"] = {{"detail", a.worst_detail}, {"seed", a.worst_seed}, {"dim", a.worst_dim}};
  }
  return j;
}

json to_json(const SuiteConfig& c) {
  return {
      {"trials", c.trials},
      {"dims", {c.dim_min, c.dim_max}},
      {"cond_max", c.cond_max},
      {"t_grid", c.t_grid},
      {"seed", c.seed},
      {"tol", c.rel_tol},
      {"falsify_trials", c.falsify_trials},
      {"norms", c.norms.empty() ? json("all") : norms_json(c.norms)},
  };
}

json to_json(const SuiteReport& r) {
  json claims = json::array();
  for (const ClaimAggregate& a : r.claims) claims.push_back(to_json(a));
  json falsifications = json::array();
  for (const FalsificationReport& f : r.falsifications) falsifications.push_back(to_json(f));
  json examples = json::array();
  for (const ExampleResult& e : r.examples) examples.push_back(to_json(e));
  return {
      {"config", to_json(r.config)},
      {"claims", std::move(claims)},
      {"falsifications", std::move(falsifications)},
      {"examples", std::move(examples)},
  };
}

json error_json(const std::exception& e) {
  json err = {{"type", "Error"}, {"message", e.what()}};
  if (const auto* oe = dynamic_cast<const Error*>(&e)) err["type"] = oe->type_name();
  if (const auto* npd = dynamic_cast<const NotPositiveDefinite*>(&e)) {
    err["min_eigenvalue"] = number_or_null(npd->min_eigenvalue());
  }
  if (const auto* h = dynamic_cast<const HypothesisNotMet*>(&e)) {
    err["hypothesis"] = h->hypothesis();
    err["margin"] = number_or_null(h->margin());
  }
  return {{"error", err}};
}

}  // namespace opmeans
