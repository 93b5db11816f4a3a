#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tailspace/io.hpp"
#include "tailspace/suite.hpp"

namespace ts = tailspace;
using ts::Json;

namespace {

constexpr const char* kToolVersion = "1.0.0";

/// Collects input/output digests for the run manifest.  Reports themselves
/// carry no wall-clock or host state, so reruns byte-compare; timing lives
/// only here.
struct Manifest {
  std::string path;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::vector<std::string> argv;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  bool enabled() const { return !path.empty(); }
  void record_input(const std::string& file) {
    if (enabled()) inputs[file] = ts::digest_hex(ts::read_text_file(file));
  }
  void record_output(const std::string& file) {
    if (enabled()) outputs[file] = ts::digest_hex(ts::read_text_file(file));
  }
  void write(std::uint64_t seed) {
    if (!enabled()) return;
    Json j;
    j["argv"] = argv;
    j["tool_version"] = kToolVersion;
    j["seed"] = seed;
    j["tolerances"] = {{"pointwise", ts::kTolPointwise},
                       {"sweep", ts::kTolSweep},
                       {"solver", ts::kTolSolver}};
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["wall_clock_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ts::write_text_file(path, j.dump(2) + "\n");
  }
};

void emit(const Json& j, const std::string& out_path, Manifest& manifest) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    ts::write_text_file(out_path, text);
    manifest.record_output(out_path);
  }
}

ts::LinearCode parse_code_spec(const std::string& spec, Manifest& manifest) {
  const auto colon = spec.find(':');
  const std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "hamming74") return ts::hamming_7_4();
  if (head == "exthamming84") return ts::extended_hamming_8_4();
  if (head == "repetition") return ts::repetition_code(std::stoi(tail));
  if (head == "even") return ts::even_weight_code(tail.empty() ? 0 : std::stoi(tail));
  if (head == "zero") return ts::zero_code(std::stoi(tail));
  if (head == "full") return ts::full_code(std::stoi(tail));
  if (head == "file") {
    manifest.record_input(tail);
    return ts::code_from_json(Json::parse(ts::read_text_file(tail)));
  }
  // Bare path fallback.
  manifest.record_input(spec);
  return ts::code_from_json(Json::parse(ts::read_text_file(spec)));
}

Json analyze_function(const ts::CubeFunction& f, int tail_k, int top,
                      const std::vector<double>& p_grid) {
  Json j;
  j["n"] = f.dimension();
  j["kind"] = ts::to_string(f.kind());
  j["mean"] = ts::mean(f);
  const ts::FourierSpectrum spec = ts::fwht(f);
  j["degree_profile"] = spec.degree_profile();

  std::vector<std::pair<double, std::uint32_t>> ranked;
  for (ts::Index s = 0; s < spec.size(); ++s) {
    ranked.emplace_back(std::abs(spec.coeffs()(s)), static_cast<std::uint32_t>(s));
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.first > b.first;
  });
  Json tops = Json::array();
  for (int i = 0; i < top && i < static_cast<int>(ranked.size()); ++i) {
    const std::uint32_t mask = ranked[static_cast<std::size_t>(i)].second;
    tops.push_back({{"subset_mask", mask},
                    {"degree", ts::popcount32(mask)},
                    {"coefficient", spec.coeffs()(mask)}});
  }
  j["top_coefficients"] = std::move(tops);

  Json norms;
  for (double p : p_grid) {
    norms[Json(p).dump()] = ts::lp_norm(f, p);
  }
  norms["inf"] = ts::lp_norm(f, std::numeric_limits<double>::infinity());
  j["norms"] = std::move(norms);

  if (f.is_boolean()) {
    j["mean_exact"] = ts::mean_dyadic(f).to_string();
  }
  if (f.kind() == ts::ValueKind::PlusMinusOne) {
    Json inf = Json::array();
    for (int i = 1; i <= f.dimension(); ++i) {
      inf.push_back({{"coordinate", i},
                     {"pivotal", ts::pivotal_probability(f, i).to_string()},
                     {"resampling", ts::influence(f, i).to_string()}});
    }
    j["influences"] = std::move(inf);
    j["total_pivotal"] = ts::total_influence(f).to_string();
    j["max_pivotal"] = ts::max_pivotal_probability(f).to_string();
    double spectral = 0.0;
    for (ts::Index s = 0; s < spec.size(); ++s) {
      spectral += ts::popcount32(static_cast<std::uint32_t>(s)) *
                  spec.coeffs()(s) * spec.coeffs()(s);
    }
    j["spectral_total_influence"] = spectral;
  }

  Json tail;
  tail["achieved_level_mean_free"] = ts::achieved_tail_level(f, false);
  tail["achieved_level_strict"] = ts::achieved_tail_level(f, true);
  if (tail_k >= 0) {
    const int kk = std::min(tail_k, f.dimension());
    const ts::TailCertificate strict = ts::tail_certificate(f, kk, true);
    const ts::TailCertificate mean_free = ts::tail_certificate(f, kk, false);
    tail["certificate"] = {{"k", kk},
                           {"strict_member", strict.member},
                           {"mean_free_member", mean_free.member},
                           {"exact", strict.exact},
                           {"max_violation", mean_free.max_violation}};
  }
  j["tail"] = std::move(tail);
  return j;
}

int run(const std::vector<std::string>& args);

int cmd_rerun(const std::string& manifest_path) {
  const Json m = Json::parse(ts::read_text_file(manifest_path));
  std::vector<std::string> argv = m.at("argv").get<std::vector<std::string>>();
  return run(argv);
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"Fourier analysis of Boolean functions in tail spaces"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  Manifest manifest;
  manifest.argv = args;

  std::string out_path, manifest_path;
  std::uint64_t seed = 0;
  bool seed_given = false;

  // ---- analyze ----
  auto* analyze = app.add_subcommand("analyze", "spectrum, influences, norms, tail");
  std::string an_input;
  int an_k = -1, an_top = 8;
  std::vector<double> an_pgrid{1.0, 2.0, 4.0};
  analyze->add_option("input", an_input, "function file (JSON)")->required();
  analyze->add_option("--k", an_k, "tail certificate level");
  analyze->add_option("--top", an_top, "top coefficients to list");
  analyze->add_option("--p-grid", an_pgrid, "norm exponents to report");
  analyze->add_option("--out", out_path, "output report path (default stdout)");
  analyze->add_option("--manifest", manifest_path, "write a run manifest");

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "build the named functions");
  std::string c_kind, c_base = "hamming74", c_out;
  int c_b = 2, c_r = 2, c_m = 3, c_ntarget = 3;
  long long c_t = 1;
  double c_delta = 0.5;
  construct->add_option("kind", c_kind,
                        "tribes|alleq|coding-tribes|balanced|harper-witness|mean-adjust")
      ->required();
  construct->add_option("--b", c_b, "tribes block count");
  construct->add_option("--r", c_r, "tribes block width / alleq parameter");
  construct->add_option("--m", c_m, "target exponent");
  construct->add_option("--t", c_t, "mean numerator for mean-adjust");
  construct->add_option("--n-target", c_ntarget, "mean denominator exponent");
  construct->add_option("--base", c_base, "base code for mean-adjust");
  construct->add_option("--delta", c_delta, "weight fraction for harper-witness");
  construct->add_option("--seed", seed, "RNG seed (required for randomized kinds)")
      ->each([&](const std::string&) { seed_given = true; });
  construct->add_option("--out", c_out, "output prefix")->required();
  construct->add_option("--manifest", manifest_path, "write a run manifest");

  // ---- codes ----
  auto* codes = app.add_subcommand("codes", "GF(2) code operations");
  codes->require_subcommand(1);
  auto* csearch = codes->add_subcommand("search", "randomized good-code search");
  int s_mprime = 8, s_budget = 4000;
  double s_delta = 0.5;
  csearch->add_option("--mprime", s_mprime, "code length")->required();
  csearch->add_option("--delta", s_delta, "weight fraction in (0, 1/2]")->required();
  csearch->add_option("--seed", seed, "RNG seed")
      ->required()
      ->each([&](const std::string&) { seed_given = true; });
  csearch->add_option("--budget", s_budget, "trial budget");
  csearch->add_option("--out", out_path, "output code file");
  csearch->add_option("--manifest", manifest_path, "write a run manifest");
  auto* cdual = codes->add_subcommand("dual", "dual code");
  std::string d_in;
  cdual->add_option("--in", d_in, "code spec (builtin or file)")->required();
  cdual->add_option("--out", out_path, "output code file");
  cdual->add_option("--manifest", manifest_path, "write a run manifest");
  auto* cweight = codes->add_subcommand("weight", "exact minimum weight");
  std::string w_in;
  cweight->add_option("--in", w_in, "code spec (builtin or file)")->required();
  cweight->add_option("--out", out_path, "output report");
  cweight->add_option("--manifest", manifest_path, "write a run manifest");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run one named check sweep");
  std::string v_id;
  ts::SweepOptions v_opt;
  double v_tol = 0.0;
  verify->add_option("check", v_id, "check id (see `verify list`)")->required();
  verify->add_option("--n", v_opt.n, "max cube dimension");
  verify->add_option("--k", v_opt.k, "tail level");
  verify->add_option("--trials", v_opt.trials, "sweep size");
  verify->add_option("--seed", v_opt.seed, "RNG seed");
  verify->add_option("--p-grid", v_opt.p_grid, "exponent grid");
  verify->add_option("--t-grid", v_opt.t_grid, "time grid");
  verify->add_option("--tol", v_tol, "override pass tolerance");
  verify->add_option("--workers", v_opt.workers, "worker threads");
  verify->add_option("--out", out_path, "report path (.json or .csv)");
  verify->add_option("--manifest", manifest_path, "write a run manifest");

  // ---- sweep ----
  auto* sweep = app.add_subcommand("sweep", "run the whole verification battery");
  ts::SweepOptions sw_opt;
  std::string sw_prefix;
  sweep->add_option("--seed", sw_opt.seed, "RNG seed");
  sweep->add_option("--workers", sw_opt.workers, "worker threads");
  sweep->add_option("--out", sw_prefix, "output prefix (.json/.csv appended)");
  sweep->add_option("--manifest", manifest_path, "write a run manifest");

  // ---- rerun ----
  auto* rerun = app.add_subcommand("rerun", "re-execute a run manifest");
  std::string rr_path;
  rerun->add_option("manifest", rr_path, "manifest file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  manifest.path = manifest_path;

  if (rerun->parsed()) return cmd_rerun(rr_path);

  if (analyze->parsed()) {
    manifest.record_input(an_input);
    const ts::CubeFunction f =
        ts::function_from_json(Json::parse(ts::read_text_file(an_input)));
    emit(analyze_function(f, an_k, an_top, an_pgrid), out_path, manifest);
    manifest.write(seed);
    return 0;
  }

  if (construct->parsed()) {
    std::optional<ts::ConstructionRecord> rec;
    if (c_kind == "tribes") {
      rec = ts::or_compose(ts::tribes(1, c_r), c_b);
    } else if (c_kind == "alleq") {
      ts::CubeFunction f = ts::alleq(c_r);
      ts::ConstructionRecord r{f, {{"r", std::to_string(c_r)}}, {}};
      r.claims.push_back(ts::make_claim("probability_one", "==",
                                        ts::probability_equal(f, 1.0),
                                        ts::Dyadic::one_over_pow2(c_r)));
      r.claims.push_back(ts::make_claim(
          "tail_level", ">=", ts::achieved_tail_level(f, false), ts::Dyadic(1)));
      rec = std::move(r);
    } else if (c_kind == "coding-tribes") {
      ts::require(seed_given, "missing-seed", "coding-tribes requires --seed");
      rec = ts::coding_tribes(c_m, seed);
    } else if (c_kind == "balanced") {
      ts::require(seed_given, "missing-seed", "balanced requires --seed");
      rec = ts::balanced_coding_tribes(c_m, seed);
    } else if (c_kind == "harper-witness") {
      ts::require(seed_given, "missing-seed", "harper-witness requires --seed");
      rec = ts::harper_witness(c_m, seed, c_delta);
    } else if (c_kind == "mean-adjust") {
      ts::require(seed_given, "missing-seed", "mean-adjust requires --seed");
      const ts::LinearCode base = parse_code_spec(c_base, manifest);
      ts::CubeFunction h = ts::mean_adjust(c_ntarget, c_t, base, seed);
      ts::ConstructionRecord r{h,
                               {{"n_target", std::to_string(c_ntarget)},
                                {"t", std::to_string(c_t)},
                                {"base", c_base}},
                               {}};
      r.claims.push_back(ts::make_claim(
          "mean", "==", ts::mean_dyadic(h),
          ts::Dyadic::ratio(c_t, c_ntarget)));
      r.claims.push_back(ts::make_claim(
          "tail_level", ">=", ts::achieved_tail_level(h, false), ts::Dyadic(c_ntarget)));
      rec = std::move(r);
    } else {
      ts::fail("unknown-kind", "no construction named '" + c_kind + "'");
    }
    Json meta;
    meta["construction"] = c_kind;
    for (const auto& [k, v] : rec->parameters) meta[k] = v;
    const std::string fn_path = c_out + ".function.json";
    const std::string rec_path = c_out + ".record.json";
    ts::write_text_file(fn_path,
                        ts::function_to_json(rec->function, meta).dump(2) + "\n");
    manifest.record_output(fn_path);
    ts::write_text_file(rec_path, ts::record_to_json(*rec).dump(2) + "\n");
    manifest.record_output(rec_path);
    manifest.write(seed);
    std::cout << "wrote " << fn_path << " and " << rec_path
              << (rec->all_hold() ? " (all claims hold)" : " (CLAIM FAILURE)") << "\n";
    return rec->all_hold() ? 0 : 1;
  }

  if (codes->parsed()) {
    if (csearch->parsed()) {
      const ts::LinearCode c =
          ts::good_code_search(s_mprime, s_delta, seed, {s_budget});
      Json j = ts::code_to_json(c);
      j["dimension"] = c.dimension();
      const auto w = ts::min_weight(c);
      j["min_weight"] = w.has_value() ? Json(*w) : Json("infinity");
      emit(j, out_path, manifest);
    } else if (cdual->parsed()) {
      const ts::LinearCode c = parse_code_spec(d_in, manifest);
      const ts::LinearCode d = ts::dual(c);
      Json j = ts::code_to_json(d);
      j["dimension"] = d.dimension();
      emit(j, out_path, manifest);
    } else if (cweight->parsed()) {
      const ts::LinearCode c = parse_code_spec(w_in, manifest);
      const auto w = ts::min_weight(c);
      Json j;
      j["length"] = c.length();
      j["dimension"] = c.dimension();
      j["min_weight"] = w.has_value() ? Json(*w) : Json("infinity");
      emit(j, out_path, manifest);
    }
    manifest.write(seed);
    return 0;
  }

  if (verify->parsed()) {
    if (v_id == "list") {
      for (const std::string& id : ts::known_check_ids()) std::cout << id << "\n";
      return 0;
    }
    std::vector<ts::CheckReport> reports = ts::run_check_sweep(v_id, v_opt);
    if (v_tol > 0.0) {
      for (ts::CheckReport& r : reports) {
        r.tol = v_tol;
        r.pass = (r.note == "equality") ? std::abs(r.slack) <= v_tol
                                        : r.slack >= -v_tol;
      }
    }
    const bool ok = ts::all_pass(reports);
    if (!out_path.empty()) {
      if (out_path.size() > 4 && out_path.substr(out_path.size() - 4) == ".csv") {
        ts::write_text_file(out_path, ts::reports_to_csv(reports));
      } else {
        ts::write_text_file(out_path,
                            ts::reports_to_json(v_id, reports).dump(2) + "\n");
      }
      manifest.record_output(out_path);
    }
    std::size_t failures = 0;
    for (const auto& r : reports) failures += r.pass ? 0 : 1;
    std::cout << v_id << ": " << reports.size() << " checks, " << failures
              << " failures -> " << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) {
      // Full reports for the offending checks; the (seed, trial) parameters
      // reproduce the exact instance.
      int shown = 0;
      for (const auto& r : reports) {
        if (!r.pass && shown++ < 20) {
          std::cerr << ts::report_to_json(r).dump() << "\n";
        }
      }
      if (shown > 20) {
        std::cerr << "... " << (shown - 20) << " more failing checks\n";
      }
    }
    manifest.write(v_opt.seed);
    return ok ? 0 : 1;
  }

  if (sweep->parsed()) {
    bool ok = true;
    std::vector<ts::CheckReport> combined;
    for (const std::string& id : ts::known_check_ids()) {
      std::vector<ts::CheckReport> reports = ts::run_check_sweep(id, sw_opt);
      std::size_t failures = 0;
      for (const auto& r : reports) failures += r.pass ? 0 : 1;
      std::cout << id << ": " << reports.size() << " checks, " << failures
                << " failures\n";
      ok = ok && (failures == 0);
      combined.insert(combined.end(), std::make_move_iterator(reports.begin()),
                      std::make_move_iterator(reports.end()));
    }
    if (!sw_prefix.empty()) {
      const std::string jp = sw_prefix + ".json";
      const std::string cp = sw_prefix + ".csv";
      ts::write_text_file(jp, ts::reports_to_json("full", combined).dump(2) + "\n");
      ts::write_text_file(cp, ts::reports_to_csv(combined));
      manifest.record_output(jp);
      manifest.record_output(cp);
    }
    std::cout << (ok ? "PASS" : "FAIL") << " (" << combined.size() << " checks)\n";
    manifest.write(sw_opt.seed);
    return ok ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(args);
  } catch (const ts::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 2;
  }
}
