#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "borderidx/decomposition.hpp"
#include "borderidx/errors.hpp"
#include "borderidx/index_engine.hpp"
#include "borderidx/json_io.hpp"
#include "borderidx/order_ideal.hpp"
#include "borderidx/pn_forms.hpp"
#include "borderidx/random_gen.hpp"
#include "borderidx/render.hpp"

namespace {

using namespace borderidx;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvalidIdeal = 3;
constexpr int kExitVerification = 4;

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

// What a command hands back to main: the stdout payload, the report pieces,
// and the exit code.
struct Outcome {
  int exit_code = kExitOk;
  std::string rendered;
  ordered_json outputs;
  ordered_json verdicts;
};

struct InputIdeal {
  OrderIdeal ideal;
  std::string digest;
};

InputIdeal load_ideal(const std::string& path, bool require_nonempty = true) {
  const std::string text = read_file(path);
  InputIdeal in{order_ideal_from_json(text), fnv1a_digest(text)};
  if (require_nonempty && in.ideal.empty()) {
    throw InvalidIdealError("this command needs a nonempty order ideal");
  }
  return in;
}

ExponentVector parse_bounds(const std::vector<std::uint32_t>& raw,
                            std::size_t dim, const char* flag) {
  if (raw.size() != dim) {
    throw ParseError(std::string(flag) + " needs " + std::to_string(dim) +
                     " comma-separated entries");
  }
  return ExponentVector(raw);
}

ExponentVector padded_corner(const OrderIdeal& ideal, std::uint32_t pad) {
  auto coords = bounding_box(ideal).corner.coords();
  for (auto& c : coords) c += pad;
  return ExponentVector(std::move(coords));
}

ordered_json exponents_json(const std::vector<ExponentVector>& points) {
  ordered_json out = ordered_json::array();
  for (const auto& p : points) out.push_back(p.coords());
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BORDERIDX_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 20260810ull;
}

// --- index ---------------------------------------------------------------

struct IndexOptions {
  std::string input;
  std::vector<std::uint32_t> bounds;
  std::string format = "matrix";
};

Outcome run_index(const IndexOptions& opt) {
  auto in = load_ideal(opt.input);
  const auto bounds = parse_bounds(opt.bounds, in.ideal.dim(), "--bounds");
  const auto table = index_table(in.ideal, bounds);

  Outcome out;
  if (opt.format == "matrix") {
    out.rendered = render_index_matrix(table);
    out.outputs["matrix"] = out.rendered;
  } else if (opt.format == "json") {
    out.rendered = index_table_to_json(table);
    out.outputs = ordered_json::parse(out.rendered);
  } else {
    throw ParseError("index supports --format matrix|json");
  }
  out.outputs["input_digest"] = in.digest;
  return out;
}

// --- border --------------------------------------------------------------

struct BorderOptions {
  std::string input;
  unsigned k = 1;
  std::string format = "json";
};

Outcome run_border(const BorderOptions& opt) {
  auto in = load_ideal(opt.input);
  const auto layer = higher_border(in.ideal, opt.k);

  Outcome out;
  if (opt.format == "json") {
    ordered_json doc;
    doc["dim"] = in.ideal.dim();
    doc["k"] = opt.k;
    doc["elements"] = exponents_json(layer);
    out.rendered = doc.dump(2) + "\n";
    out.outputs = std::move(doc);
  } else if (opt.format == "text") {
    out.rendered = render_exponents_text(layer);
    out.outputs["text"] = out.rendered;
  } else if (opt.format == "latex") {
    out.rendered = render_exponents_latex(layer) + "\n";
    out.outputs["latex"] = render_exponents_latex(layer);
  } else {
    throw ParseError("border supports --format json|text|latex");
  }
  out.outputs["input_digest"] = in.digest;
  return out;
}

// --- gf ------------------------------------------------------------------

struct GfOptions {
  std::string input;
  std::string method = "box";
  std::string format = "json";
  std::vector<std::uint32_t> verify_bounds;
};

Outcome run_gf(const GfOptions& opt) {
  auto in = load_ideal(opt.input);
  IndGF result = [&] {
    if (opt.method == "box") return ind_gf(in.ideal);
    if (opt.method == "2d") {
      if (in.ideal.dim() != 2) {
        throw InvalidIdealError("--method 2d needs a dimension-2 ideal");
      }
      return ind_gf_2d(partition_of(in.ideal));
    }
    throw ParseError("gf supports --method box|2d");
  }();

  Outcome out;
  std::optional<VerifyMismatch> mismatch;
  bool verified = false;
  ExponentVector bounds;
  if (!opt.verify_bounds.empty()) {
    bounds = parse_bounds(opt.verify_bounds, in.ideal.dim(),
                          "--verify-bounds");
    mismatch = verify_ind_gf(result.gf, in.ideal, bounds);
    verified = true;
    out.verdicts["verify_ok"] = !mismatch.has_value();
    if (mismatch) out.exit_code = kExitVerification;
  }

  ordered_json doc;
  doc["dim"] = in.ideal.dim();
  doc["method"] = opt.method;
  doc["source"] = result.source;
  doc["gf"] = ordered_json::parse(gf_to_json(result.gf));
  if (verified) {
    ordered_json verdict;
    verdict["bounds"] = bounds.coords();
    verdict["ok"] = !mismatch.has_value();
    if (mismatch) {
      verdict["witness"] = mismatch->point.coords();
      verdict["expected"] = format_rational(mismatch->expected);
      verdict["actual"] = format_rational(mismatch->actual);
    }
    doc["verify"] = std::move(verdict);
  }

  if (opt.format == "json") {
    out.rendered = doc.dump(2) + "\n";
  } else if (opt.format == "latex") {
    out.rendered = result.gf.to_latex() + "\n";
    if (mismatch) {
      std::cerr << "verification failed at " << mismatch->point.to_string()
                << ": expected " << format_rational(mismatch->expected)
                << ", series gives " << format_rational(mismatch->actual)
                << "\n";
    }
  } else {
    throw ParseError("gf supports --format json|latex");
  }
  out.outputs = std::move(doc);
  out.outputs["input_digest"] = in.digest;
  return out;
}

// --- pn ------------------------------------------------------------------

struct PnOptions {
  std::vector<std::string> a;
  std::string b = "0";
  std::string format = "json";
  bool check = false;
  std::vector<std::uint32_t> check_bounds;
};

Outcome run_pn(const PnOptions& opt) {
  LinearWeight w;
  try {
    for (const auto& part : opt.a) w.a.push_back(parse_rational(part));
    w.b = parse_rational(opt.b);
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
  const auto gf = pn_closed(w);

  Outcome out;
  ordered_json doc;
  ordered_json a_list = ordered_json::array();
  for (const auto& ai : w.a) a_list.push_back(format_rational(ai));
  doc["a"] = std::move(a_list);
  doc["b"] = format_rational(w.b);
  doc["gf"] = ordered_json::parse(gf_to_json(gf));
  doc["latex"] = gf.to_latex();

  if (opt.check || !opt.check_bounds.empty()) {
    const auto bounds =
        opt.check_bounds.empty()
            ? ExponentVector(std::vector<std::uint32_t>(w.dim(), 6))
            : parse_bounds(opt.check_bounds, w.dim(), "--check-bounds");
    const bool series_ok = expand(gf, bounds) == pn_series_oracle(w, bounds);
    bool integral = w.b.get_den() == 1 && w.b >= 0;
    for (const auto& ai : w.a) {
      if (ai.get_den() != 1 || ai < 0) integral = false;
    }
    ordered_json check;
    check["bounds"] = bounds.coords();
    check["closed_matches_series"] = series_ok;
    if (integral) {
      const bool derivative_ok =
          pn_derivative_oracle(w, bounds) == pn_series_oracle(w, bounds);
      check["derivative_matches"] = derivative_ok;
      if (!derivative_ok) out.exit_code = kExitVerification;
    }
    if (!series_ok) out.exit_code = kExitVerification;
    out.verdicts = check;
    doc["check"] = std::move(check);
  }

  if (opt.format == "json") {
    out.rendered = doc.dump(2) + "\n";
  } else if (opt.format == "latex") {
    out.rendered = gf.to_latex() + "\n";
  } else {
    throw ParseError("pn supports --format json|latex");
  }
  out.outputs = std::move(doc);
  return out;
}

// --- decompose -----------------------------------------------------------

struct DecomposeOptions {
  std::string input;
  std::string check_path;
  std::vector<std::uint32_t> bounds;
  std::string format = "json";
};

Outcome run_decompose(const DecomposeOptions& opt) {
  auto in = load_ideal(opt.input);
  Outcome out;

  if (opt.check_path.empty()) {
    const auto d = enlarged_box_decomposition(in.ideal);
    const std::string json_text = decomposition_to_json(d);
    if (opt.format == "json") {
      out.rendered = json_text;
    } else if (opt.format == "text") {
      std::ostringstream text;
      for (const auto& cone : d.cones) {
        text << "anchor " << cone.anchor.to_string() << " free {";
        for (std::size_t i = 0; i < cone.free.size(); ++i) {
          if (i > 0) text << ',';
          text << cone.free[i] + 1;
        }
        text << "}\n";
      }
      out.rendered = text.str();
    } else {
      throw ParseError("decompose supports --format json|text");
    }
    out.outputs = ordered_json::parse(json_text);
    out.outputs["input_digest"] = in.digest;
    return out;
  }

  const auto d =
      decomposition_from_json(read_file(opt.check_path), in.ideal.dim());
  const auto bounds = opt.bounds.empty()
                          ? padded_corner(in.ideal, 4)
                          : parse_bounds(opt.bounds, in.ideal.dim(),
                                         "--bounds");
  const auto partition = validate_partition(d, in.ideal);

  ordered_json doc;
  doc["cones"] = ordered_json::parse(decomposition_to_json(d))["cones"];
  doc["partition_valid"] = partition.ok;
  if (!partition.ok) {
    doc["partition_failure"] = partition.describe();
    out.exit_code = kExitVerification;
  } else {
    const auto verdict = check_admissible(d, in.ideal, bounds);
    doc["admissibility"] =
        verdict.tier == AdmissibilityTier::proved
            ? "proved"
            : verdict.tier == AdmissibilityTier::falsified ? "falsified"
                                                           : "sampled_ok";
    doc["sample_bounds"] = bounds.coords();
    if (verdict.tier == AdmissibilityTier::falsified) {
      doc["witness_cone"] = verdict.cone;
      doc["witness_beta"] = verdict.beta->coords();
      out.exit_code = kExitVerification;
    }
  }
  out.verdicts["partition_valid"] = partition.ok;
  if (doc.contains("admissibility")) {
    out.verdicts["admissibility"] = doc["admissibility"];
  }

  if (opt.format == "json") {
    out.rendered = doc.dump(2) + "\n";
  } else if (opt.format == "text") {
    std::ostringstream text;
    text << partition.describe() << "\n";
    if (partition.ok) {
      text << "admissibility: " << doc["admissibility"].get<std::string>();
      if (doc.contains("witness_cone")) {
        text << " (cone " << doc["witness_cone"].get<std::size_t>()
             << ", beta "
             << ExponentVector(
                    doc["witness_beta"].get<std::vector<std::uint32_t>>())
                    .to_string()
             << ")";
      }
      text << "\n";
    }
    out.rendered = text.str();
  } else {
    throw ParseError("decompose supports --format json|text");
  }
  out.outputs = std::move(doc);
  out.outputs["input_digest"] = in.digest;
  return out;
}

// --- verify --------------------------------------------------------------

struct VerifyOptions {
  std::string input;
  std::vector<std::uint32_t> bounds;
  std::size_t count = 50;
  std::size_t max_dim = 4;
  std::uint64_t seed = default_seed();
  std::string format = "text";
};

ordered_json verify_one(const OrderIdeal& ideal, const ExponentVector& bounds,
                        bool& ok) {
  const auto gf = ind_gf(ideal);
  const auto mismatch = verify_ind_gf(gf.gf, ideal, bounds);
  const bool den_ok = gf.gf.clears_denominator(
      ExponentVector(std::vector<std::uint32_t>(ideal.dim(), 2)));
  ordered_json entry;
  entry["dim"] = ideal.dim();
  entry["elements"] = ideal.size();
  entry["bounds"] = bounds.coords();
  entry["series_ok"] = !mismatch.has_value();
  entry["denominator_ok"] = den_ok;
  if (mismatch) entry["witness"] = mismatch->point.coords();
  ok = !mismatch.has_value() && den_ok;
  return entry;
}

Outcome run_verify(const VerifyOptions& opt) {
  Outcome out;
  ordered_json doc;
  bool all_ok = true;

  if (!opt.input.empty()) {
    auto in = load_ideal(opt.input);
    const auto bounds = opt.bounds.empty()
                            ? padded_corner(in.ideal, 3)
                            : parse_bounds(opt.bounds, in.ideal.dim(),
                                           "--bounds");
    bool ok = false;
    doc["results"] = ordered_json::array({verify_one(in.ideal, bounds, ok)});
    all_ok = ok;
    doc["input_digest"] = in.digest;
  } else {
    doc["seed"] = opt.seed;
    doc["count"] = opt.count;
    RandomGen gen(opt.seed);
    ordered_json results = ordered_json::array();
    for (std::size_t i = 0; i < opt.count; ++i) {
      const std::size_t dim = 1 + gen.below(opt.max_dim);
      const auto ideal = gen.order_ideal(dim);
      bool ok = false;
      results.push_back(verify_one(ideal, padded_corner(ideal, 3), ok));
      all_ok = all_ok && ok;
    }
    doc["results"] = std::move(results);
  }
  doc["ok"] = all_ok;
  out.verdicts["ok"] = all_ok;
  if (!all_ok) out.exit_code = kExitVerification;

  if (opt.format == "json") {
    out.rendered = doc.dump(2) + "\n";
  } else if (opt.format == "text") {
    std::ostringstream text;
    std::size_t passed = 0;
    for (const auto& entry : doc["results"]) {
      const bool ok = entry["series_ok"].get<bool>() &&
                      entry["denominator_ok"].get<bool>();
      passed += ok;
      text << "dim=" << entry["dim"].get<std::size_t>()
           << " elements=" << entry["elements"].get<std::size_t>()
           << " series=" << (entry["series_ok"].get<bool>() ? "ok" : "FAIL")
           << " denominator="
           << (entry["denominator_ok"].get<bool>() ? "ok" : "FAIL") << "\n";
    }
    text << "verified " << passed << "/" << doc["results"].size()
         << " ideals\n";
    out.rendered = text.str();
  } else {
    throw ParseError("verify supports --format text|json");
  }
  out.outputs = std::move(doc);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "borderidx: borders, lattice-point indexes, and exact rational "
      "generating functions of finite staircases"};
  app.require_subcommand(1);

  std::string report_path;
  app.add_option("--report", report_path,
                 "write a JSON run report to this path");

  IndexOptions index_opt;
  auto* index_cmd = app.add_subcommand("index", "index table over a box");
  index_cmd->add_option("--input", index_opt.input, "order ideal JSON file")
      ->required();
  index_cmd->add_option("--bounds", index_opt.bounds, "box corner a,b,...")
      ->required()
      ->delimiter(',');
  index_cmd->add_option("--format", index_opt.format, "matrix|json");

  BorderOptions border_opt;
  auto* border_cmd = app.add_subcommand("border", "k-th border layer");
  border_cmd->add_option("--input", border_opt.input, "order ideal JSON file")
      ->required();
  border_cmd->add_option("--k", border_opt.k, "layer (default 1)");
  border_cmd->add_option("--format", border_opt.format, "json|text|latex");

  GfOptions gf_opt;
  auto* gf_cmd = app.add_subcommand("gf", "index generating function");
  gf_cmd->add_option("--input", gf_opt.input, "order ideal JSON file")
      ->required();
  gf_cmd->add_option("--method", gf_opt.method, "box|2d");
  gf_cmd->add_option("--verify-bounds", gf_opt.verify_bounds,
                     "check the series against the index table up to a,b,...")
      ->delimiter(',');
  gf_cmd->add_option("--format", gf_opt.format, "json|latex");

  PnOptions pn_opt;
  auto* pn_cmd = app.add_subcommand("pn", "closed form of a cone sum P_n");
  pn_cmd->add_option("--a", pn_opt.a, "weights, e.g. 1,1 or 2,-1/3")
      ->delimiter(',');
  pn_cmd->add_option("--b", pn_opt.b, "offset (rational)");
  pn_cmd->add_flag("--check", pn_opt.check,
                   "compare against the series oracle on bounds (6,...,6)");
  pn_cmd->add_option("--check-bounds", pn_opt.check_bounds,
                     "explicit oracle bounds a,b,...")
      ->delimiter(',');
  pn_cmd->add_option("--format", pn_opt.format, "json|latex");

  DecomposeOptions decompose_opt;
  auto* decompose_cmd = app.add_subcommand(
      "decompose", "enlarged-box cone decomposition, or check one");
  decompose_cmd
      ->add_option("--input", decompose_opt.input, "order ideal JSON file")
      ->required();
  decompose_cmd->add_option("--check", decompose_opt.check_path,
                            "decomposition JSON to validate");
  decompose_cmd
      ->add_option("--bounds", decompose_opt.bounds,
                   "admissibility sample box (default corner+4)")
      ->delimiter(',');
  decompose_cmd->add_option("--format", decompose_opt.format, "json|text");

  VerifyOptions verify_opt;
  auto* verify_cmd = app.add_subcommand(
      "verify", "oracle sweep: series expansion vs index table");
  verify_cmd->add_option("--input", verify_opt.input,
                         "verify one ideal instead of random ones");
  verify_cmd
      ->add_option("--bounds", verify_opt.bounds,
                   "verification box (default corner+3)")
      ->delimiter(',');
  verify_cmd->add_option("--count", verify_opt.count,
                         "number of random ideals (default 50)");
  verify_cmd->add_option("--max-dim", verify_opt.max_dim,
                         "largest random dimension (default 4)");
  verify_cmd->add_option("--seed", verify_opt.seed,
                         "RNG seed (default env BORDERIDX_SEED)");
  verify_cmd->add_option("--format", verify_opt.format, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  const auto started = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (*index_cmd) {
      outcome = run_index(index_opt);
    } else if (*border_cmd) {
      outcome = run_border(border_opt);
    } else if (*gf_cmd) {
      outcome = run_gf(gf_opt);
    } else if (*pn_cmd) {
      outcome = run_pn(pn_opt);
    } else if (*decompose_cmd) {
      outcome = run_decompose(decompose_opt);
    } else {
      outcome = run_verify(verify_opt);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidIdealError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidIdeal;
  }

  std::cout << outcome.rendered;

  if (!report_path.empty()) {
    std::ostringstream echo;
    for (int i = 0; i < argc; ++i) {
      if (i > 0) echo << ' ';
      echo << argv[i];
    }
    ordered_json report;
    report["command"] = echo.str();
    std::string digest;
    if (outcome.outputs.contains("input_digest")) {
      digest = outcome.outputs["input_digest"].get<std::string>();
      outcome.outputs.erase("input_digest");
    }
    report["input_digest"] = digest;
    report["outputs"] = std::move(outcome.outputs);
    report["verdicts"] = std::move(outcome.verdicts);
    report["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - started)
            .count();
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write report to '" << report_path << "'\n";
      return kExitParse;
    }
    out << report.dump(2) << "\n";
  }
  return outcome.exit_code;
}
