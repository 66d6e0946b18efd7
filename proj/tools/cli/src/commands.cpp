#include <algorithm>
#include <functional>
#include <map>

#include "gaussmap/error.hpp"
#include "gaussmap/gaussian_maps.hpp"
#include "gaussmap/schiffer.hpp"
#include "gaussmap_cli/cli.hpp"

namespace gaussmap::cli {

using nlohmann::json;

namespace {

json check(const std::string& item, const std::string& expected, const std::string& got, bool ok) {
  return {{"item", item}, {"expected", expected}, {"got", got}, {"ok", ok}};
}

std::string zero_or_nonzero(const Rational& v) { return v.is_zero() ? "zero" : "nonzero"; }
std::string yes(bool b) { return b ? "true" : "false"; }

std::string gk(int g, int k) { return "g=" + std::to_string(g) + " k=" + std::to_string(k); }

int top_even_level(int g) { return (g - 1) / 2; }
int top_witness_level(int g) { return (g - 3) / 2; }

std::vector<int> levels(const RunConfig& cfg, int top) {
  if (cfg.k) {
    if (*cfg.k < 0) throw UsageError("--k must be non-negative");
    if (*cfg.k > top) return {};
    return {*cfg.k};
  }
  std::vector<int> out;
  for (int k = 0; k <= top; ++k) out.push_back(k);
  return out;
}

std::uint64_t curve_seed(std::uint64_t seed, int g, int i) {
  return seed * 1000003ULL + static_cast<std::uint64_t>(g) * 1009ULL + static_cast<std::uint64_t>(i);
}

std::vector<Curve> curves_for(const RunConfig& cfg, int g) {
  std::vector<Curve> out;
  if (!cfg.curve_source.empty()) {
    Curve c = load_curve(cfg.curve_source);
    if (c.genus() != g) {
      throw UsageError("curve has genus " + std::to_string(c.genus()) + " but genus " +
                       std::to_string(g) + " was requested");
    }
    out.push_back(std::move(c));
  } else {
    out.push_back(default_curve(g));
  }
  for (int i = 0; i < cfg.random_curves; ++i) out.push_back(random_curve(g, curve_seed(cfg.seed, g, i)));
  return out;
}

json vector_json(int g, const RatVector& v) { return QuadricI2(g, v).sparse_a(); }

json basis_json(int g, const std::vector<RatVector>& basis) {
  json arr = json::array();
  for (const auto& v : basis) arr.push_back(vector_json(g, v));
  return arr;
}

json rationals_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

json config_json(const RunConfig& cfg) {
  json j = {{"command", cfg.command}, {"g_min", cfg.g_min}, {"g_max", cfg.g_max},
            {"seed", cfg.seed},       {"samples", cfg.samples}, {"random_curves", cfg.random_curves},
            {"method", cfg.method}};
  j["k"] = cfg.k ? json(*cfg.k) : json(nullptr);
  if (!cfg.curve_source.empty()) j["curve_source"] = cfg.curve_source;
  if (!cfg.theorem.empty()) j["theorem"] = cfg.theorem;
  if (!cfg.quadric.empty()) j["quadric"] = cfg.quadric;
  if (!cfg.pair.empty()) j["pair"] = cfg.pair;
  return j;
}

struct Suite {
  json checks = json::array();
  json curves = json::array();
  json details = json::object();

  void add(json c) { checks.push_back(std::move(c)); }
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const json& c) { return c["ok"].get<bool>(); });
  }
};

void note_curves(Suite& s, const std::vector<Curve>& curves) {
  for (const auto& c : curves) s.curves.push_back(curve_json(c));
}

std::string curve_tag(std::size_t i) { return i == 0 ? "curve 0" : "curve " + std::to_string(i); }

// Rank law and chain endpoints from the equation route, cross-checked
// against the oracle.
void suite_rank(const RunConfig& cfg, Suite& s) {
  for (int g = cfg.g_min; g <= cfg.g_max; ++g) {
    const int top = top_even_level(g);
    const KernelChain eq = kernel_chain_via_equations(g, top);
    const KernelChain orc = kernel_chain_via_polynomial_oracle(g, top);
    for (int k : levels(cfg, top)) {
      const auto& lvl = eq.levels[static_cast<std::size_t>(k)];
      s.add(check("rank mu_" + std::to_string(2 * k) + " " + gk(g, k), std::to_string(expected_rank(g, k)),
                  std::to_string(lvl.rank), static_cast<long>(lvl.rank) == expected_rank(g, k)));
      s.add(check("dim Ker mu_" + std::to_string(2 * k) + " " + gk(g, k),
                  std::to_string(expected_kernel_dim(g, k)), std::to_string(lvl.dimension),
                  static_cast<long>(lvl.dimension) == expected_kernel_dim(g, k)));
      const bool same = lvl.basis == orc.levels[static_cast<std::size_t>(k)].basis;
      s.add(check("oracle agrees " + gk(g, k), "true", yes(same), same));
      if (k >= 1) {
        const bool strict = lvl.dimension < eq.levels[static_cast<std::size_t>(k - 1)].dimension;
        s.add(check("strict inclusion " + gk(g, k), "true", yes(strict), strict));
      }
    }
  }
}

void suite_factorization(const RunConfig& cfg, Suite& s) {
  for (int g = cfg.g_min; g <= cfg.g_max; ++g) {
    const auto curves = curves_for(cfg, g);
    note_curves(s, curves);
    for (int k : levels(cfg, top_witness_level(g))) {
      const auto kappa = factorization_constant(g, k);
      s.details[gk(g, k)] = {{"constant", kappa ? kappa->str() : "none"}};
      const auto qs = kernel_via_equations(g, k).quadrics();
      for (std::size_t qi = 0; qi < qs.size(); ++qi) {
        const std::string base = gk(g, k) + " Q" + std::to_string(qi);
        const bool x = factorization_check(qs[qi], k).holds;
        s.add(check(base + " x-chart", "true", yes(x), x));
        for (std::size_t ci = 0; ci < curves.size(); ++ci) {
          const bool z = factorization_check_local(qs[qi], k, curves[ci]).holds;
          s.add(check(base + " z-chart " + curve_tag(ci), "true", yes(z), z));
        }
      }
    }
  }
}

void suite_b_support(const RunConfig& cfg, Suite& s) {
  for (int g = cfg.g_min; g <= cfg.g_max; ++g) {
    for (int k : levels(cfg, top_even_level(g))) {
      const auto qs = kernel_via_equations(g, k).quadrics();
      for (std::size_t qi = 0; qi < qs.size(); ++qi) {
        const bool ok = b_support_check(qs[qi], k);
        s.add(check(gk(g, k) + " Q" + std::to_string(qi) + " b_{r,m}=0 for r+m>=" +
                        std::to_string(2 * g - 2 * k - 2),
                    "true", yes(ok), ok));
      }
    }
  }
}

void suite_isotropy(const RunConfig& cfg, Suite& s) {
  for (int g = cfg.g_min; g <= cfg.g_max; ++g) {
    const auto curves = curves_for(cfg, g);
    note_curves(s, curves);
    for (int k : levels(cfg, top_witness_level(g))) {
      for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        const IsotropyReport rep = isotropy_suite(g, k, curves[ci]);
        for (const auto& c : rep.checks) {
          s.add(check(gk(g, k) + " " + curve_tag(ci) + " Q" + std::to_string(c.quadric) + " rho(" +
                          std::to_string(c.n) + "," + std::to_string(c.r) + ")",
                      "zero", c.ok ? c.rho.value.str() : "BeyondThreshold", c.ok));
        }
      }
    }
  }
}

json functional_json(const Functional& f) {
  json coeffs = json::object();
  for (const auto& [idx, c] : f.coefficients) {
    coeffs[std::to_string(idx.first) + "," + std::to_string(idx.second)] = c.str();
  }
  json support = json::array();
  for (const auto& [r, m] : f.expected_support) support.push_back(std::to_string(r) + "," + std::to_string(m));
  return {{"coefficients", coeffs}, {"expected_support", support}, {"values", rationals_json(f.values)},
          {"domain_dim", f.domain_basis.size()}};
}

void suite_witness(const RunConfig& cfg, Suite& s) {
  for (int g = cfg.g_min; g <= cfg.g_max; ++g) {
    const auto curves = curves_for(cfg, g);
    note_curves(s, curves);
    for (int k : levels(cfg, top_witness_level(g))) {
      for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        const std::string base = gk(g, k) + " " + curve_tag(ci);
        const Functional f = witness_functional(g, k, curves[ci]);
        const LambdaComparison l = compare_lambda(f, curves[ci]);
        s.add(check(base + " functional nonzero", "nonzero", f.nonzero ? "nonzero" : "zero", f.nonzero));
        s.add(check(base + " support inside expected set", "true", yes(f.support_ok), f.support_ok));
        s.add(check(base + " all " + std::to_string(k + 1) + " support coefficients nonzero", "true",
                    yes(f.support_coefficients_nonzero), f.support_coefficients_nonzero));
        s.add(check(base + " coordinate form matches licensed values", "true", yes(f.matches_licensed),
                    f.matches_licensed));
        s.add(check(base + " odd factor is odd", "true", yes(l.odd_factor_odd), l.odd_factor_odd));
        s.add(check(base + " proportional to lambda closed form (odd-factor form)", "true",
                    yes(l.printed_proportional), l.printed_proportional));
        s.add(check(base + " proportional to lambda closed form (factorial-weighted form)", "true",
                    yes(l.corrected_proportional), l.corrected_proportional));
        json lam = functional_json(f);
        lam["lambda_actual"] = rationals_json(l.actual);
        lam["lambda_odd_factor_form"] = rationals_json(l.printed);
        lam["lambda_factorial_form"] = rationals_json(l.corrected);
        lam["odd_factor"] = l.odd_factor;
        s.details[base] = lam;
      }
    }
  }
}

void suite_hyperplanes(const RunConfig& cfg, Suite& s) {
  for (int g = cfg.g_min; g <= cfg.g_max; ++g) {
    const auto curves = curves_for(cfg, g);
    note_curves(s, curves);
    for (int k : levels(cfg, top_witness_level(g))) {
      for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        const std::string base = gk(g, k) + " " + curve_tag(ci);
        const Hyperplane h = hyperplane_Ak0(g, k, curves[ci]);
        const bool codim = h.basis.size() + 1 == h.ambient_dim;
        s.add(check(base + " dim A_k0", std::to_string(h.ambient_dim - 1), std::to_string(h.basis.size()), codim));
        s.add(check(base + " witness support vanishes on A_k0", "true", yes(h.support_vanishes),
                    h.support_vanishes));
        try {
          const DiagonalFunctional d = diag_functional_on_Ak0(g, k, curves[ci]);
          const Functional& f = d.functional;
          s.add(check(base + " diagonal support inside expected set", "true", yes(f.support_ok), f.support_ok));
          s.add(check(base + " diagonal support coefficients nonzero", "true",
                      yes(f.support_coefficients_nonzero), f.support_coefficients_nonzero));
          s.add(check(base + " diagonal coordinate form matches licensed values", "true",
                      yes(f.matches_licensed), f.matches_licensed));
          const std::size_t codim00 = f.domain_basis.size() - d.a_k00.size();
          const bool strict = h.ambient_dim < 3 || codim00 == 1;
          s.add(check(base + " codim A_k00 in A_k0", h.ambient_dim >= 3 ? "1" : "0 or 1",
                      std::to_string(codim00), strict && codim00 <= 1));
          json det = functional_json(f);
          det["dim_A_k00"] = d.a_k00.size();
          s.details[base + " diagonal"] = det;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::ThresholdNotExtended) throw;
          s.add(check(base + " threshold extends on A_k0", "true", e.what(), false));
        }
      }
    }
  }
}

json certificate_json(const AsymptoticCertificate& c) {
  json j = {{"lambdas", rationals_json(c.lambdas)},
            {"verdict", c.verdict == Verdict::Asymptotic ? "asymptotic" : "not_asymptotic"},
            {"top_index", c.top_index}};
  if (c.verdict == Verdict::Asymptotic) {
    j["quadrics_checked"] = c.quadrics_checked;
  } else {
    j["witness"] = c.witness->sparse_a();
    j["witness_level"] = c.witness_level;
    j["value"] = c.value.str();
    j["cross_terms"] = c.cross_terms;
    j["cross_terms_zero"] = c.cross_terms_zero;
  }
  return j;
}

bool certificate_ok(const AsymptoticCertificate& c) {
  if (c.verdict == Verdict::Asymptotic) return c.top_index == 1;
  return c.top_index >= 3 && c.cross_terms_zero && !c.value.is_zero();
}

// Deterministic corner directions: each single xi^{2k+1} and each sum of two
// adjacent odd indices.
std::vector<std::vector<Rational>> corner_directions(int g) {
  const int n = direction_count(g);
  std::vector<std::vector<Rational>> out;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(i)] = Rational(1);
    out.push_back(v);
  }
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<Rational> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(i)] = Rational(1);
    v[static_cast<std::size_t>(i + 1)] = Rational(1);
    out.push_back(v);
  }
  return out;
}

std::string direction_label(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

void suite_certificates(const RunConfig& cfg, Suite& s, bool with_corners) {
  for (int g = cfg.g_min; g <= cfg.g_max; ++g) {
    if (g < 4) {
      s.details["g=" + std::to_string(g)] = "V is spanned by xi^1 alone; nothing to certify beyond it";
    }
    const auto curves = curves_for(cfg, g);
    note_curves(s, curves);
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
      AsymptoticClassifier classifier(curves[ci]);
      const std::string base = "g=" + std::to_string(g) + " " + curve_tag(ci);
      std::vector<Rational> xi1(static_cast<std::size_t>(direction_count(g)));
      xi1[0] = Rational(1);
      const auto c1 = classifier.classify(xi1);
      s.add(check(base + " xi^1", "asymptotic",
                  c1.verdict == Verdict::Asymptotic ? "asymptotic" : "not_asymptotic", certificate_ok(c1)));
      for (const auto& [i, j] : quadric_pairs(g)) {
        const auto w = mu2_at_weierstrass(basis_quadric(g, i, j), curves[ci]);
        s.add(check(base + " Q" + std::to_string(i) + std::to_string(j) +
                        " rho(1,1) vs x-chart mu_2 at p",
                    "zero/zero", zero_or_nonzero(w.rho11.value) + "/" + zero_or_nonzero(w.mu2_at_p),
                    w.ok));
      }
      json certs = json::array();
      certs.push_back(certificate_json(c1));
      if (g >= 4) {
        if (with_corners) {
          for (const auto& v : corner_directions(g)) {
            if (v == xi1) continue;
            const auto c = classifier.classify(v);
            s.add(check(base + " corner " + direction_label(v), "not_asymptotic",
                        c.verdict == Verdict::Asymptotic ? "asymptotic" : "not_asymptotic",
                        certificate_ok(c)));
            certs.push_back(certificate_json(c));
          }
        }
        SeededRng rng(cfg.seed + static_cast<std::uint64_t>(g));
        std::size_t certified = 0;
        for (int n = 0; n < cfg.samples; ++n) {
          const auto v = random_direction(g, rng);
          const auto c = classifier.classify(v);
          if (certificate_ok(c) && c.verdict == Verdict::NotAsymptotic) ++certified;
          certs.push_back(certificate_json(c));
        }
        s.add(check(base + " random directions certified not_asymptotic", std::to_string(cfg.samples),
                    std::to_string(certified), certified == static_cast<std::size_t>(cfg.samples)));
      }
      s.details[base] = {{"certificates", certs}};
    }
  }
}

void suite_cup(const RunConfig& cfg, Suite& s) {
  for (int g = cfg.g_min; g <= cfg.g_max; ++g) {
    const auto curves = curves_for(cfg, g);
    note_curves(s, curves);
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
      for (int n = 1; n <= g; ++n) {
        const CupRank r = cup_rank(curves[ci], n);
        const std::string base = "g=" + std::to_string(g) + " " + curve_tag(ci) + " n=" + std::to_string(n);
        s.add(check(base + " rank <= n", "<=" + std::to_string(n), std::to_string(r.rank), r.rank_bound_ok));
        s.add(check(base + " kernel contains alpha_i with 2i >= n", "true", yes(r.kernel_contains_vanishing),
                    r.kernel_contains_vanishing));
      }
    }
  }
}

const std::map<std::string, std::function<void(const RunConfig&, Suite&)>>& theorem_table() {
  static const std::map<std::string, std::function<void(const RunConfig&, Suite&)>> table = {
      {"T3.1", suite_rank},
      {"L3.4", suite_factorization},
      {"L6.2", suite_b_support},
      {"T6.5", suite_isotropy},
      {"T6.6", suite_witness},
      {"T6.9", suite_hyperplanes},
      {"T6.12", [](const RunConfig& c, Suite& s) { suite_certificates(c, s, false); }},
      {"R4.1", suite_cup},
  };
  return table;
}

json base_report(const RunConfig& cfg) {
  return {{"tool_version", tool_version()}, {"config", config_json(cfg)}, {"seed", cfg.seed}};
}

CommandResult finish(const RunConfig& cfg, Suite& s, const std::string& suite_id) {
  CommandResult r;
  r.report = base_report(cfg);
  r.report["suite"] = suite_id;
  r.report["checks"] = s.checks;
  r.report["curves"] = s.curves;
  if (!s.details.empty()) r.report["details"] = s.details;
  r.report["pass"] = s.pass();
  r.report["genus"] = cfg.g_min == cfg.g_max ? json(cfg.g_min)
                                             : json(std::to_string(cfg.g_min) + ".." + std::to_string(cfg.g_max));
  r.report["k"] = cfg.k ? json(*cfg.k) : json(nullptr);
  r.exit_code = s.pass() ? kExitOk : kExitFalsified;
  return r;
}

CommandResult cmd_rank_table(const RunConfig& cfg) {
  CommandResult r;
  r.report = base_report(cfg);
  json rows = json::array();
  bool ok = true;
  for (int g = cfg.g_min; g <= cfg.g_max; ++g) {
    const int top = top_even_level(g);
    if (cfg.k && *cfg.k > top) {
      rows.push_back({{"g", g}, {"k", *cfg.k}, {"rank", 0}, {"dim_ker", 0}, {"rank_formula_ok", true},
                      {"domain_zero", true}});
      continue;
    }
    for (const auto& row : rank_table(g, g)) {
      if (cfg.k && row.k != *cfg.k) continue;
      rows.push_back({{"g", row.genus}, {"k", row.k}, {"rank", row.rank}, {"dim_ker", row.dim_ker},
                      {"rank_formula_ok", row.formula_ok}, {"domain_zero", false}});
      ok = ok && row.formula_ok;
    }
  }
  r.report["suite"] = "T3.1";
  r.report["rows"] = rows;
  r.report["pass"] = ok;
  r.report["note"] = "the domain of mu_{2k} is 0 for k > floor((g-1)/2)";
  r.exit_code = ok ? kExitOk : kExitFalsified;
  return r;
}

CommandResult cmd_kernel(const RunConfig& cfg) {
  if (cfg.g_min != cfg.g_max) throw UsageError("kernel takes a single genus");
  if (!cfg.k) throw UsageError("kernel needs --k");
  if (cfg.method != "equations" && cfg.method != "oracle" && cfg.method != "both") {
    throw UsageError("--method must be equations, oracle or both");
  }
  const int g = cfg.g_min;
  const int k = *cfg.k;
  if (k < 0) throw UsageError("--k must be non-negative");
  CommandResult r;
  r.report = base_report(cfg);
  r.report["genus"] = g;
  r.report["k"] = k;
  r.report["method"] = cfg.method;
  std::optional<KernelLevel> eq;
  std::optional<KernelLevel> orc;
  if (cfg.method != "oracle") {
    eq = kernel_via_equations(g, k);
    const EquationSystem sys = build_kernel_equations(g, k);
    json nl = json::object();
    for (const auto& [l, n] : sys.n_l) nl[std::to_string(l)] = n;
    r.report["n_l"] = nl;
    r.report["s"] = sys.s;
    r.report["equation_rows"] = sys.rows.rows();
  }
  if (cfg.method != "equations") orc = kernel_via_polynomial_oracle(g, k);
  const KernelLevel& lvl = eq ? *eq : *orc;
  r.report["basis"] = basis_json(g, lvl.basis);
  r.report["dimension"] = lvl.dimension;
  r.report["rank"] = lvl.rank;
  r.report["expected_dimension"] =
      k <= top_even_level(g) ? json(expected_kernel_dim(g, k)) : json(0);
  if (eq && orc) {
    const bool agree = eq->basis == orc->basis;
    r.report["methods_agree"] = agree;
    if (!agree) {
      r.report["oracle_basis"] = basis_json(g, orc->basis);
      r.exit_code = kExitFalsified;
    }
  }
  return r;
}

QuadricI2 parse_quadric(const RunConfig& cfg, int g) {
  const std::string& spec = cfg.quadric;
  auto ints = [](const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const auto comma = s.find(',', pos);
      const std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        std::size_t used = 0;
        out.push_back(std::stoi(part, &used));
        if (used != part.size()) throw UsageError("bad index list '" + s + "'");
      } catch (const std::logic_error&) {
        throw UsageError("bad index list '" + s + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return out;
  };
  try {
    if (spec.rfind("basis:", 0) == 0) {
      const auto v = ints(spec.substr(6));
      if (v.size() != 2) throw UsageError("basis quadric needs two indices i,j");
      return basis_quadric(g, v[0], v[1]);
    }
    if (spec.rfind("kernel:", 0) == 0) {
      const auto v = ints(spec.substr(7));
      if (v.size() != 2 || v[0] < 0 || v[1] < 0) throw UsageError("kernel quadric needs k,index");
      const auto lvl = kernel_via_equations(g, v[0]);
      if (static_cast<std::size_t>(v[1]) >= lvl.basis.size()) {
        throw UsageError("Ker mu_" + std::to_string(2 * v[0]) + " has only " +
                         std::to_string(lvl.basis.size()) + " basis vectors");
      }
      return QuadricI2(g, lvl.basis[static_cast<std::size_t>(v[1])]);
    }
    const json j = json::parse(spec);
    if (!j.is_object()) throw UsageError("quadric JSON must be an object keyed \"i,j\"");
    RatVector a(quadric_dimension(g));
    for (const auto& [key, val] : j.items()) {
      const auto v = ints(key);
      if (v.size() != 2) throw UsageError("quadric key '" + key + "' is not i,j");
      if (!val.is_string()) throw UsageError("quadric coefficients must be strings \"p/q\"");
      a[pair_index(g, v[0], v[1])] = Rational::parse(val.get<std::string>());
    }
    return QuadricI2(g, std::move(a));
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed quadric: ") + e.what());
  } catch (const Error& e) {
    throw UsageError(std::string("malformed quadric: ") + e.what());
  }
}

CommandResult cmd_rho(const RunConfig& cfg) {
  if (cfg.g_min != cfg.g_max) throw UsageError("rho takes a single genus");
  if (cfg.pair.size() != 2) throw UsageError("rho needs --pair n r");
  if (cfg.quadric.empty()) throw UsageError("rho needs --quadric");
  const int g = cfg.g_min;
  const QuadricI2 q = parse_quadric(cfg, g);
  const Curve curve = curves_for(cfg, g).front();
  std::optional<SchifferIndex> n;
  std::optional<SchifferIndex> r;
  try {
    n.emplace(cfg.pair[0]);
    r.emplace(cfg.pair[1]);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  CommandResult res;
  res.report = base_report(cfg);
  res.report["genus"] = g;
  res.report["curve"] = curve_json(curve);
  res.report["quadric"] = q.sparse_a();
  res.report["pair"] = cfg.pair;
  try {
    const RhoValue v = rho_pair(q, curve, *n, *r);
    res.report["value"] = v.value.str();
    res.report["licensing_threshold"] = v.licensing_threshold;
    res.report["unit"] = "2*pi*i";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BeyondThreshold) throw;
    res.report["error"] = std::string(e.name());
    res.report["message"] = e.detail();
  }
  return res;
}

CommandResult cmd_scan(const RunConfig& cfg) {
  Suite s;
  suite_certificates(cfg, s, true);
  CommandResult r = finish(cfg, s, "T6.12-scan");
  json counts = json::object();
  for (const auto& [key, det] : s.details.items()) {
    if (!det.is_object() || !det.contains("certificates")) continue;
    std::size_t asym = 0;
    std::size_t non = 0;
    for (const auto& c : det["certificates"]) (c["verdict"] == "asymptotic" ? asym : non)++;
    counts[key] = {{"asymptotic", asym}, {"not_asymptotic", non}};
  }
  r.report["verdict_counts"] = counts;
  r.report["directions"] = "V spanned by xi^1, xi^3, ... up to xi^{g-1} (g even) or xi^{g-2} (g odd)";
  return r;
}

}  // namespace

CommandResult run_command(const RunConfig& cfg) {
  if (cfg.command == "rank-table") return cmd_rank_table(cfg);
  if (cfg.command == "kernel") return cmd_kernel(cfg);
  if (cfg.command == "rho") return cmd_rho(cfg);
  if (cfg.command == "scan") return cmd_scan(cfg);
  if (cfg.command == "verify") {
    const auto& table = theorem_table();
    auto it = table.find(cfg.theorem);
    if (it == table.end()) {
      std::string known;
      for (const auto& [id, fn] : table) known += (known.empty() ? "" : ", ") + id;
      throw UsageError("unknown theorem id '" + cfg.theorem + "' (known: " + known + ")");
    }
    Suite s;
    it->second(cfg, s);
    CommandResult r = finish(cfg, s, cfg.theorem);
    r.report["theorem"] = cfg.theorem;
    return r;
  }
  throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace gaussmap::cli
