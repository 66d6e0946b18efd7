#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "gaussmap/error.hpp"
#include "gaussmap_cli/cli.hpp"

namespace gaussmap::cli {

using nlohmann::json;

namespace {

std::string csv_field(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string render_csv(const RunConfig& cfg, const json& r) {
  std::ostringstream os;
  if (r.contains("error") && !r.contains("value")) {
    os << "error,message\n" << csv_field(r["error"]) << "," << csv_field(r["message"]) << "\n";
  } else if (cfg.command == "rank-table") {
    os << "g,k,rank,dim_ker,rank_formula_ok\n";
    for (const auto& row : r["rows"]) {
      os << row["g"] << "," << row["k"] << "," << row["rank"] << "," << row["dim_ker"] << ","
         << (row["rank_formula_ok"].get<bool>() ? "true" : "false") << "\n";
    }
  } else if (cfg.command == "kernel") {
    os << "vector,pair,value\n";
    std::size_t i = 0;
    for (const auto& v : r["basis"]) {
      for (const auto& [key, val] : v.items()) os << i << "," << csv_field(key) << "," << csv_field(val) << "\n";
      ++i;
    }
  } else if (cfg.command == "rho") {
    os << "n,r,value,licensing_threshold\n"
       << r["pair"][0] << "," << r["pair"][1] << "," << csv_field(r["value"]) << ","
       << r["licensing_threshold"] << "\n";
  } else {
    os << "item,expected,got,ok\n";
    for (const auto& c : r["checks"]) {
      os << csv_field(c["item"]) << "," << csv_field(c["expected"]) << "," << csv_field(c["got"]) << ","
         << (c["ok"].get<bool>() ? "true" : "false") << "\n";
    }
  }
  return os.str();
}

std::string md_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

std::string render_markdown(const RunConfig& cfg, const json& r) {
  std::ostringstream os;
  os << "# gaussmap " << cfg.command;
  if (r.contains("suite")) os << " " << r["suite"].get<std::string>();
  os << "\n\n";
  if (r.contains("pass")) os << "Result: **" << (r["pass"].get<bool>() ? "pass" : "FAIL") << "**\n\n";
  if (r.contains("rows")) {
    os << "| g | k | rank | dim_ker | rank_formula_ok |\n|---|---|---|---|---|\n";
    for (const auto& row : r["rows"]) {
      os << "| " << row["g"] << " | " << row["k"] << " | " << row["rank"] << " | " << row["dim_ker"] << " | "
         << row["rank_formula_ok"] << " |\n";
    }
  } else if (r.contains("checks")) {
    os << "| item | expected | got | ok |\n|---|---|---|---|\n";
    for (const auto& c : r["checks"]) {
      os << "| " << md_cell(c["item"]) << " | " << md_cell(c["expected"]) << " | " << md_cell(c["got"])
         << " | " << (c["ok"].get<bool>() ? "yes" : "**no**") << " |\n";
    }
  } else {
    os << "```json\n" << r.dump(2) << "\n```\n";
  }
  os << "\nTool version " << tool_version() << ", seed " << cfg.seed << ".\n";
  return os.str();
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "md" || s == "markdown") return Format::Markdown;
  throw UsageError("--format must be json, csv or md");
}

json error_json(std::string_view name, const std::string& message) {
  return {{"error", std::string(name)}, {"message", message}};
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& genus, std::string& format) {
  sub->add_option("--g", genus, "genus N or range A..B");
  sub->add_option("--k", cfg.k, "level k");
  sub->add_option("--curve", cfg.curve_source, "curve JSON file or inline comma-separated branch points");
  sub->add_option("--seed", cfg.seed, "seed for random curves and directions");
  sub->add_option("--random-curves", cfg.random_curves, "extra seeded random curves per genus");
  sub->add_option("--samples", cfg.samples, "random directions per genus");
  sub->add_option("--format", format, "json, csv or md");
  sub->add_option("--out", cfg.out_path, "write output to this file");
  sub->add_flag("--timing", cfg.timing, "print elapsed time to stderr");
}

}  // namespace

std::string render(const RunConfig& config, const CommandResult& result) {
  const Format f = config.format.value_or(config.command == "rank-table" ? Format::Csv : Format::Json);
  switch (f) {
    case Format::Csv: return render_csv(config, result.report);
    case Format::Markdown: return render_markdown(config, result.report);
    case Format::Json: break;
  }
  return result.report.dump(2) + "\n";
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string genus;
  std::string format;
  CLI::App app{"Higher Gaussian maps and second fundamental form checks on hyperelliptic curves", "gaussmap"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  auto* rank = app.add_subcommand("rank-table", "rank and kernel dimension of mu_{2k}");
  add_common(rank, cfg, genus, format);
  auto* kernel = app.add_subcommand("kernel", "canonical basis of Ker mu_{2k} in a-coordinates");
  add_common(kernel, cfg, genus, format);
  kernel->add_option("--method", cfg.method, "equations, oracle or both");
  auto* verify = app.add_subcommand("verify", "run a theorem suite");
  add_common(verify, cfg, genus, format);
  verify->add_option("--theorem", cfg.theorem, "T3.1, L3.4, L6.2, T6.5, T6.6, T6.9, T6.12 or R4.1")->required();
  auto* rho = app.add_subcommand("rho", "evaluate rho(Q) on a pair of Schiffer variations");
  add_common(rho, cfg, genus, format);
  rho->add_option("--quadric", cfg.quadric, "basis:i,j | kernel:k,index | JSON {\"i,j\": \"p/q\"}");
  rho->add_option("--pair", cfg.pair, "odd indices n r")->expected(2);
  auto* scan = app.add_subcommand("scan", "classify directions in V as asymptotic or not");
  add_common(scan, cfg, genus, format);

  auto emit_error = [&](std::string_view name, const std::string& message, int code) {
    out << error_json(name, message).dump(2) << "\n";
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return kExitOk;
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return emit_error("UsageError", e.what(), kExitUsage);
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    if (!format.empty()) cfg.format = parse_format(format);
    if (cfg.random_curves < 0) throw UsageError("--random-curves must be non-negative");
    if (cfg.samples < 0) throw UsageError("--samples must be non-negative");
    if (genus.empty()) {
      if (cfg.curve_source.empty()) throw UsageError("--g is required (or give --curve)");
      const Curve c = load_curve(cfg.curve_source);
      genus = std::to_string(c.genus());
    }
    std::tie(cfg.g_min, cfg.g_max) = parse_genus_range(genus);
    if (!cfg.curve_source.empty()) {
      const Curve c = load_curve(cfg.curve_source);
      if (cfg.g_min != cfg.g_max || c.genus() != cfg.g_min) {
        throw UsageError("--curve has genus " + std::to_string(c.genus()) + " but --g is " + genus);
      }
    }
  } catch (const UsageError& e) {
    return emit_error("UsageError", e.what(), kExitUsage);
  } catch (const Error& e) {
    return emit_error(e.name(), e.detail(), kExitUsage);
  }

  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  try {
    result = run_command(cfg);
  } catch (const UsageError& e) {
    return emit_error("UsageError", e.what(), kExitUsage);
  } catch (const Error& e) {
    result.report = error_json(e.name(), e.detail());
    result.exit_code = kExitFalsified;
  }
  const std::string text = render(cfg, result);
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) return emit_error("UsageError", "cannot write " + cfg.out_path, kExitUsage);
    f << text;
  }
  if (cfg.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    err << "elapsed_ms: " << ms.count() << "\n";
  }
  return result.exit_code;
}

}  // namespace gaussmap::cli
