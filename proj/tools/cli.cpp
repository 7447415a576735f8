#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cactus/asymptotics.hpp"
#include "cactus/catalog.hpp"
#include "cactus/emit.hpp"
#include "cactus/graph.hpp"
#include "cactus/mis.hpp"
#include "cactus/series.hpp"
#include "cactus/verify.hpp"

namespace cactus::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string family;
  int n = 0;
  int n_max = 0;
  std::string aux = "none";
  std::string format;
  std::string build_format = "dot";
  std::string output;
  std::string scope = "all";
  std::string source = "auto";
  bool bivariate = false;
  bool has_n_max = false;
  long vertex_limit = 0;
  unsigned workers = 0;
};

FamilyId require_family(const std::string& text) {
  if (text.empty()) throw UsageError("--family is required");
  auto id = parse_family(text);
  if (!id) throw UsageError("unknown family '" + text + "' (see --list-families)");
  return *id;
}

GraphKind require_kind(FamilyId family, const std::string& text) {
  auto kind = parse_kind(text);
  if (!kind) throw UsageError("unknown aux kind '" + text + "'");
  if (*kind == GraphKind::Tilde && !supports_tilde(family)) {
    throw UsageError("family '" + std::string(family_name(family)) + "' has no tilde gadget");
  }
  return *kind;
}

OracleOptions oracle_options(const Settings& s) {
  OracleOptions options;
  if (const char* env = std::getenv("CACTUSMIS_VERTEX_LIMIT"); env && *env) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value <= 0) {
      throw UsageError(std::string("CACTUSMIS_VERTEX_LIMIT must be a positive integer, got '") +
                       env + "'");
    }
    options.vertex_limit = static_cast<std::size_t>(value);
  }
  if (s.vertex_limit > 0) options.vertex_limit = static_cast<std::size_t>(s.vertex_limit);
  return options;
}

void emit(const Settings& s, const std::string& text, std::ostream& out) {
  if (s.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(s.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + s.output + "' for writing");
  file << text;
}

std::string format_double(double v, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

template <typename T, typename F>
std::string join(const std::vector<T>& items, std::string_view sep, F&& f) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += f(items[i]);
  }
  return out;
}

// Counts that fit 64 bits are JSON numbers, larger ones strings.
nlohmann::ordered_json json_count(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return to_string(v);
}

int cmd_list_families(std::ostream& out) {
  for (FamilyId id : kAllFamilies) {
    FamilySpec spec = family_spec(id);
    out << family_letter(id) << ' ' << std::left << std::setw(16) << family_name(id)
        << " cycle " << spec.cycle_length << ", attach " << spec.attach_distance << '\n';
  }
  return kOk;
}

int cmd_build(const Settings& s, std::ostream& out) {
  FamilyId family = require_family(s.family);
  GraphKey key{family, require_kind(family, s.aux), s.n};
  Graph g = build_graph(key);
  std::string text;
  if (s.build_format == "dot") {
    std::string name = describe(key);
    std::replace_if(name.begin(), name.end(), [](char c) { return !std::isalnum(static_cast<unsigned char>(c)); }, '_');
    if (name.back() == '_') name.pop_back();
    text = to_dot(g, name);
  } else if (s.build_format == "json") {
    text = to_json(g, key);
  } else {
    text = to_edge_list(g);
  }
  emit(s, text, out);
  return kOk;
}

int cmd_census(const Settings& s, std::ostream& out) {
  FamilyId family = require_family(s.family);
  GraphKey key{family, require_kind(family, s.aux), s.n};
  SizeDistribution dist = enumerate_mis(build_graph(key), oracle_options(s));
  std::string name(family_name(family));
  std::ostringstream os;
  if (s.format == "csv") {
    os << "family,n,k,count\n";
    std::string prefix = name + (key.kind == GraphKind::Family ? "" : "-" + std::string(kind_name(key.kind)));
    for (const auto& [k, c] : dist.counts()) os << prefix << ',' << s.n << ',' << k << ',' << c << '\n';
    os << prefix << ',' << s.n << ",total," << dist.total() << '\n';
  } else if (s.format == "json") {
    nlohmann::ordered_json j;
    j["family"] = name;
    j["aux"] = key.kind == GraphKind::Family ? "none" : std::string(kind_name(key.kind));
    j["n"] = s.n;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [k, c] : dist.counts()) counts[std::to_string(k)] = json_count(c);
    j["counts"] = std::move(counts);
    j["total"] = json_count(dist.total());
    os << j.dump(2) << '\n';
  } else {
    os << describe(key) << ": " << dist.to_string() << '\n' << "total " << dist.total() << '\n';
  }
  emit(s, os.str(), out);
  return kOk;
}

int cmd_verify(const Settings& s, std::ostream& out) {
  const Catalog& catalog = load_catalog();
  VerifyOptions options;
  options.oracle = oracle_options(s);
  options.workers = s.workers ? s.workers : std::max(1u, std::thread::hardware_concurrency());
  if (s.has_n_max) {
    if (s.n_max < 0) throw UsageError("--n-max must be non-negative");
    options.n_max = s.n_max;
  }
  std::optional<FamilyId> family;
  if (!s.family.empty()) family = require_family(s.family);

  Verifier verifier(catalog, options);
  VerificationReport report;
  if (s.scope == "all") {
    if (family) throw UsageError("--family is not used with --scope all");
    report = verifier.verify_all();
  } else if (s.scope == "family") {
    if (!family) throw UsageError("--scope family requires --family");
    report = verifier.verify_family(*family, options.n_max.value_or(default_n_max(*family)));
  } else if (s.scope == "identities") {
    if (family) {
      for (const auto& identity : catalog.identities) {
        if (identity.family == *family) report.append(verifier.verify_transfer(identity, options.n_max));
      }
    } else {
      report = verifier.verify_identities(options.n_max);
    }
  } else {
    for (FamilyId id : kAllFamilies) {
      if (!family || *family == id) report.append(verifier.verify_asymptotics(id));
    }
  }
  emit(s, s.format == "table" ? to_table(report) : to_json(report), out);
  return report.any_refuted() ? kRefuted : kOk;
}

const GfCandidate& pick_candidate(const FamilyRecord& record, const Catalog& catalog,
                                  std::ostream& err) {
  for (const auto& c : record.gf_candidates) {
    if (!catalog.is_disputed(c.anchor)) return c;
  }
  err << "note: every printed generating function for " << record.name()
      << " is refuted; expanding " << record.gf_candidates.front().anchor << '\n';
  return record.gf_candidates.front();
}

int cmd_series(const Settings& s, std::ostream& out, std::ostream& err) {
  FamilyId family = require_family(s.family);
  if (!s.has_n_max || s.n_max < 0) throw UsageError("--n-max is required and must be non-negative");
  const Catalog& catalog = load_catalog();
  const FamilyRecord& record = catalog.family(family);
  std::string source = s.source;
  if (source == "auto") source = s.bivariate ? "gf" : "recurrence";

  std::string text;
  if (s.bivariate) {
    std::vector<UnivarPoly> coeffs;
    if (source == "recurrence") throw UsageError("--bivariate needs --source gf or oracle");
    if (source == "gf") {
      coeffs = series_in_x(pick_candidate(record, catalog, err).gf, s.n_max);
    } else {
      OracleOptions options = oracle_options(s);
      for (int n = 0; n <= s.n_max; ++n) {
        SizeDistribution d = enumerate_mis(build_family(record.spec, n), options);
        std::vector<BigInt> c(static_cast<std::size_t>(std::max(0, d.max_size()) + 1));
        for (const auto& [k, v] : d.counts()) c[static_cast<std::size_t>(k)] = v;
        coeffs.emplace_back(std::move(c));
      }
    }
    text = join(coeffs, "; ", [](const UnivarPoly& p) { return p.to_string('y'); });
  } else {
    std::vector<BigInt> totals;
    if (source == "recurrence") {
      totals.push_back(1);
      if (s.n_max >= 1) {
        auto rest = eval_recurrence_range(record.recurrence.seeded, s.n_max);
        totals.insert(totals.end(), rest.begin(), rest.end());
      }
    } else if (source == "gf") {
      totals = series(specialize_y1(pick_candidate(record, catalog, err).gf), s.n_max);
    } else {
      OracleOptions options = oracle_options(s);
      for (int n = 0; n <= s.n_max; ++n) totals.push_back(mis_count(build_family(record.spec, n), options));
    }
    text = join(totals, ", ", [](const BigInt& v) { return to_string(v); });
  }
  emit(s, text + "\n", out);
  return kOk;
}

int cmd_estimate(const Settings& s, std::ostream& out) {
  FamilyId family = require_family(s.family);
  const FamilyRecord& record = load_catalog().family(family);
  AsymptoticEstimate e = family_estimate(record);
  double estimate = estimate_value(e, s.n);
  BigInt exact = s.n == 0 ? BigInt(1) : eval_recurrence(record.recurrence.seeded, s.n);
  double exact_d = to_double(exact);
  std::ostringstream os;
  os << "family: " << record.name() << '\n'
     << "n: " << s.n << '\n'
     << "rho: " << format_double(e.rho, 12) << '\n'
     << "C: " << format_double(e.constant, 12) << '\n'
     << "estimate: " << format_double(estimate, 12) << '\n'
     << "exact: " << to_string(exact) << '\n'
     << "relative error: " << format_double(std::abs(estimate - exact_d) / exact_d, 6) << '\n';
  emit(s, os.str(), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal independent set counts of polygonal cactus families", "cactusmis"};
  Settings s;
  bool list = false;
  app.add_flag("--list-families", list, "Print family ids with their letters and shapes");

  auto add_family = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--family", s.family, "Family id, case-insensitive (see --list-families)");
    if (required) opt->required();
  };
  auto add_vertex_limit = [&](CLI::App* cmd) {
    cmd->add_option("--vertex-limit", s.vertex_limit,
                    "Oracle vertex limit (default 64, or CACTUSMIS_VERTEX_LIMIT)")
        ->check(CLI::PositiveNumber);
  };

  auto* build = app.add_subcommand("build", "Emit a family graph or gadget graph");
  add_family(build, true);
  build->add_option("--n", s.n, "Number of polygons")->required()->check(CLI::NonNegativeNumber);
  build->add_option("--aux", s.aux, "Graph kind")->check(CLI::IsMember({"none", "bar", "tilde"}));
  build->add_option("--format", s.build_format, "Output format")->check(CLI::IsMember({"dot", "json", "edges"}));
  build->add_option("--output", s.output, "Write to this file instead of stdout");

  auto* census = app.add_subcommand("census", "Count maximal independent sets by size");
  add_family(census, true);
  census->add_option("--n", s.n, "Number of polygons")->required()->check(CLI::NonNegativeNumber);
  census->add_option("--aux", s.aux, "Graph kind")->check(CLI::IsMember({"none", "bar", "tilde"}));
  census->add_option("--format", s.format, "Output format (default table)")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  census->add_option("--output", s.output, "Write to this file instead of stdout");
  add_vertex_limit(census);

  auto* verify = app.add_subcommand("verify", "Check catalog claims against the oracle");
  verify->add_option("--scope", s.scope, "What to verify")
      ->check(CLI::IsMember({"all", "family", "identities", "asymptotics"}));
  add_family(verify, false);
  verify->add_option("--n-max", s.n_max, "Largest n for family and identity checks");
  verify->add_option("--format", s.format, "Report format (default json)")
      ->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--output", s.output, "Write to this file instead of stdout");
  verify->add_option("--workers", s.workers, "Oracle worker threads (default: processor count)")
      ->check(CLI::PositiveNumber);
  add_vertex_limit(verify);

  auto* series_cmd = app.add_subcommand("series", "Print counting series coefficients");
  add_family(series_cmd, true);
  series_cmd->add_option("--n-max", s.n_max, "Largest n")->required()->check(CLI::NonNegativeNumber);
  series_cmd->add_flag("--bivariate", s.bivariate, "Print polynomials in y instead of totals");
  series_cmd->add_option("--source", s.source, "auto, recurrence, gf or oracle")
      ->check(CLI::IsMember({"auto", "recurrence", "gf", "oracle"}));
  series_cmd->add_option("--output", s.output, "Write to this file instead of stdout");
  add_vertex_limit(series_cmd);

  auto* estimate = app.add_subcommand("estimate", "Asymptotic estimate C/rho^(n+1) with the exact count");
  add_family(estimate, true);
  estimate->add_option("--n", s.n, "Number of polygons")->required()->check(CLI::NonNegativeNumber);
  estimate->add_option("--output", s.output, "Write to this file instead of stdout");

  app.require_subcommand(0, 1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  s.has_n_max = (verify->parsed() && verify->count("--n-max") > 0) || series_cmd->parsed();

  try {
    if (list) {
      if (app.get_subcommands().size() > 0) throw UsageError("--list-families takes no command");
      return cmd_list_families(out);
    }
    if (build->parsed()) return cmd_build(s, out);
    if (census->parsed()) {
      if (s.format.empty()) s.format = "table";
      return cmd_census(s, out);
    }
    if (verify->parsed()) {
      if (s.format.empty()) s.format = "json";
      return cmd_verify(s, out);
    }
    if (series_cmd->parsed()) return cmd_series(s, out, err);
    if (estimate->parsed()) return cmd_estimate(s, out);
    err << app.help();
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const VertexLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kRefuted;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace cactus::cli
