#pragma once

#include <functional>
#include <string>
#include <vector>

#include "epg/genus.hpp"
#include "epg/pseries.hpp"
#include "epg/weights.hpp"

namespace epg {

struct CheckReport {
  enum class Status { Pass, Fail, Inconclusive };

  std::string name;
  Status status = Status::Pass;
  std::string detail;  // empty iff passed
  std::string region;  // the truncation region actually compared

  bool passed() const { return status == Status::Pass; }
  std::string to_json() const;
};

// A sample point (z, tau) for the numeric backend, kept as decimal strings
// so the evaluation precision is chosen at parse time.
struct SamplePoint {
  std::string z_re, z_im, tau_re, tau_im;
};
std::vector<SamplePoint> default_samples();

// Weak-Jacobi-form laws checkable on q-expansions: z -> z+1, z -> z+tau
// (coefficient stripes related by q^{-m} y^{-2m} with the (-1)^{2m} sign),
// tau -> tau+1. Inconclusive when the window is too small to pair any
// stripe coefficients.
CheckReport check_jacobi(const GenusReport& r);

CheckReport verify_lg_cy(long n, const GenusOptions& opt);
CheckReport verify_weighted_lg_cy(const WeightSystem& w,
                                  const GenusOptions& opt);
CheckReport verify_hybrid(const HybridSpec& spec, const GenusOptions& opt);

// chi_{-y} of a smooth degree-d hypersurface in P^{n-1}, centered by
// y^{-(n-2)/2}, via Griffiths-residue monomial counting. q-free series.
Series hodge_oracle(long n, long d);

// Steenbrink spectrum generating polynomial prod (t^{q_i}-t)/(1-t^{q_i}),
// returned with t in the y slot of a q-free series.
Series spectrum_oracle(const WeightSystem& w);

// Recompute through the given windows and compare on |ey| <= w1.
CheckReport check_window_stability(
    const std::string& name,
    const std::function<Series(const Rational& ywindow)>& compute,
    const Rational& w1, const Rational& w2);

// Exact-series vs theta-product agreement at sample points, within the
// truncation bound computed from the series itself. Fermat pipeline only.
CheckReport check_numeric(long n, const GenusOptions& opt,
                          const std::vector<SamplePoint>& samples,
                          long digits);

// Numeric tau -> -1/tau law for the Fermat genus, index (n-2)/2.
CheckReport check_s_law(long n, const std::vector<SamplePoint>& samples,
                        long digits, double tolerance_log10 = -20);

// Campaign file: JSON list of {"check": ..., params...}. Reports are
// returned in a deterministic order (sorted by name).
std::vector<CheckReport> run_campaign(const std::string& json_text);
std::string reports_to_json(const std::vector<CheckReport>& reports);

}  // namespace epg
