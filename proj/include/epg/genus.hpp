#pragma once

#include <stdexcept>
#include <string>

#include "epg/cohring.hpp"
#include "epg/pseries.hpp"
#include "epg/theta.hpp"
#include "epg/weights.hpp"

namespace epg {

struct GenusOptions {
  Rational qmax;
  Rational ywindow;
  long denom_override = 0;  // 0: derive from the inputs
};

struct GenusReport {
  Series series;
  std::string formula;  // "lg", "origin", "cy_fermat", "weighted_cy", "hybrid_*"
  std::string params;   // JSON object with the defining parameters
  long dimension = 0;   // complex dimension of the associated CY
  bool cy = true;       // Calabi-Yau condition of the input data

  Rational index() const { return make_rational(dimension, 2); }
  std::string to_json() const;
};

// A sector whose denominator theta vanishes identically; carries the
// sector identification for diagnostics (CLI exit code 3).
struct SectorError : std::runtime_error {
  std::string sector;
  SectorError(const std::string& what, std::string sec)
      : std::runtime_error(what + " [sector " + sec + "]"),
        sector(std::move(sec)) {}
};

// Orbifold LG genus: (1/|H|) sum over (h_a, h_b) in H^2 of the product of
// per-coordinate theta-ratio factors with characters theta_i(h_a),
// theta_i(h_b).
GenusReport lg_genus(const WeightSystem& w, const GroupSpec& h,
                     const GenusOptions& opt);

// Equivariant origin contribution with u = c*z substituted: the (1/D) sum
// over (a, b) of products of theta ratios shifted by w_i (a - b tau) / D.
GenusReport origin_contrib_equivariant(const WeightSystem& w,
                                       const Rational& c,
                                       const GenusOptions& opt);

// Degree-n Fermat hypersurface in P^{n-1}: pushforward of
// U(x)^n * theta(nx)/theta(nx - z) over K[x]/(x^n), one trivial-summand
// factor divided out.
GenusReport cy_fermat_genus(long n, const GenusOptions& opt);

// Degree-D hypersurface in P(w_1,...,w_n) via the global-quotient
// presentation P^{n-1} / prod mu_{w_i}: the (1/prod w_i) average over
// (g, h) of fixed-locus contributions.
GenusReport weighted_cy_genus(const WeightSystem& w, const GenusOptions& opt);

enum class HybridPhase { H1, H2, H3 };

// Hybrid phases of the bidegree-(n,m) model over P^{m-1} / P^{n-1}, and
// the bidegree hypersurface in P^{n-1} x P^{m-1}.
GenusReport hybrid_genus(const HybridSpec& spec, HybridPhase phase,
                         const GenusOptions& opt);

// The (identity, identity) summand of lg_genus, without the 1/|H| average;
// its q^0 slice is (-1)^n y^{-n/2} Sp_W(y).
Series lg_identity_sector(const WeightSystem& w, const GenusOptions& opt);

// Exponent lattice shared by exponents and coefficient roots of unity.
long genus_denominator(const WeightSystem& w, const GroupSpec& h);

}  // namespace epg
