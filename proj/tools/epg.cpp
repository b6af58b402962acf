#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "epg/genus.hpp"
#include "epg/verify.hpp"

using namespace epg;
using nlohmann::json;

namespace {

struct RunConfig {
  std::vector<long> weights;
  long degree = 0;
  long fermat = 0;
  long n = 0, m = 0;
  std::string phase = "h1";
  long qmax = 2;
  long ywindow = 6;
  long denom = 0;
  long digits = 50;
  std::string format = "text";
  std::string input;
  std::string file;
};

GenusOptions options_of(const RunConfig& c) {
  return {Rational(c.qmax), Rational(c.ywindow), c.denom};
}

void print_series_text(const Series& s, std::ostream& os) {
  os << "region: q<=" << s.qmax().get_str() << ", |y|<="
     << s.ywindow().get_str() << "\n";
  s.for_each([&](const Rational& eq, const Rational& ey, const Cyclo& c) {
    os << "  q^" << eq.get_str() << " y^" << ey.get_str() << " : " << c.str()
       << "\n";
  });
}

int emit_genus(const GenusReport& rep, const RunConfig& c) {
  if (c.format == "json") {
    std::cout << rep.to_json() << "\n";
  } else {
    std::cout << rep.formula << " " << rep.params << "\n"
              << "dimension " << rep.dimension << ", index "
              << rep.index().get_str() << ", cy " << (rep.cy ? "yes" : "no")
              << "\n";
    print_series_text(rep.series, std::cout);
  }
  return 0;
}

int emit_checks(const std::vector<CheckReport>& reps, const RunConfig& c) {
  if (c.format == "json") {
    std::cout << reports_to_json(reps) << "\n";
  } else {
    for (const auto& r : reps) {
      std::cout << r.name << ": "
                << (r.passed() ? "pass"
                    : r.status == CheckReport::Status::Fail ? "FAIL"
                                                            : "inconclusive")
                << " [" << r.region << "]";
      if (!r.detail.empty()) std::cout << " " << r.detail;
      std::cout << "\n";
    }
  }
  bool any_fail = false, any_inconclusive = false;
  for (const auto& r : reps) {
    if (r.status == CheckReport::Status::Fail) any_fail = true;
    if (r.status == CheckReport::Status::Inconclusive) any_inconclusive = true;
  }
  return any_fail ? 1 : any_inconclusive ? 4 : 0;
}

GenusReport genus_report_from_json(const std::string& text) {
  json doc = json::parse(text);
  GenusReport rep;
  rep.series = Series::from_json(doc.at("series").dump());
  rep.formula = doc.value("formula", "input");
  rep.params = doc.value("params", json::object()).dump();
  rep.dimension = doc.at("dimension").get<long>();
  rep.cy = doc.value("cy", true);
  return rep;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elliptic genera of Landau-Ginzburg / Calabi-Yau / hybrid "
               "phases, with verification checks"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--qmax", c.qmax, "q-expansion order");
    cmd->add_option("--ywindow", c.ywindow, "y-exponent window");
    cmd->add_option("--denom", c.denom, "exponent lattice denominator");
    cmd->add_option("--format", c.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* lg = app.add_subcommand("lg", "Landau-Ginzburg orbifold genus");
  lg->add_option("--weights", c.weights, "weights w_1,...,w_n")
      ->delimiter(',')
      ->required();
  lg->add_option("--degree", c.degree, "degree D")->required();
  add_common(lg);

  CLI::App* cy = app.add_subcommand("cy", "Calabi-Yau hypersurface genus");
  cy->add_option("--fermat", c.fermat, "degree-n Fermat in P^{n-1}");
  cy->add_option("--weights", c.weights, "weights of the ambient P(w)")
      ->delimiter(',');
  cy->add_option("--degree", c.degree, "hypersurface degree");
  add_common(cy);

  CLI::App* hy = app.add_subcommand("hybrid", "hybrid phase genus");
  hy->add_option("--n", c.n, "first block size")->required();
  hy->add_option("--m", c.m, "second block size")->required();
  hy->add_option("--phase", c.phase, "h1, h2 or h3")
      ->check(CLI::IsMember({"h1", "h2", "h3"}));
  add_common(hy);

  CLI::App* ver = app.add_subcommand("verify", "correspondence checks");
  ver->require_subcommand(1);
  CLI::App* vl = ver->add_subcommand("lgcy", "LG vs CY, Fermat");
  vl->add_option("--n", c.n, "number of variables")->required();
  add_common(vl);
  CLI::App* vj = ver->add_subcommand("jacobi", "Jacobi-form laws");
  vj->add_option("--input", c.input, "GenusReport JSON file")->required();
  vj->add_option("--format", c.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  CLI::App* vc = ver->add_subcommand("campaign", "run a campaign file");
  vc->add_option("--file", c.file, "JSON list of checks")->required();
  vc->add_option("--format", c.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (lg->parsed()) {
      WeightSystem w(c.weights, c.degree);
      return emit_genus(lg_genus(w, GroupSpec::cyclic(w.j_w()), options_of(c)),
                        c);
    }
    if (cy->parsed()) {
      if (c.fermat > 0)
        return emit_genus(cy_fermat_genus(c.fermat, options_of(c)), c);
      if (c.weights.empty() || c.degree == 0)
        throw std::invalid_argument("cy: need --fermat or --weights/--degree");
      WeightSystem w(c.weights, c.degree);
      return emit_genus(weighted_cy_genus(w, options_of(c)), c);
    }
    if (hy->parsed()) {
      HybridSpec spec{c.n, c.m};
      HybridPhase ph = c.phase == "h1"   ? HybridPhase::H1
                       : c.phase == "h2" ? HybridPhase::H2
                                         : HybridPhase::H3;
      return emit_genus(hybrid_genus(spec, ph, options_of(c)), c);
    }
    if (vl->parsed()) return emit_checks({verify_lg_cy(c.n, options_of(c))}, c);
    if (vj->parsed())
      return emit_checks({check_jacobi(genus_report_from_json(slurp(c.input)))},
                         c);
    if (vc->parsed()) return emit_checks(run_campaign(slurp(c.file)), c);
  } catch (const SectorError& e) {
    std::cerr << "singular sector: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
