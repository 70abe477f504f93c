// Copyright 2026 The maskmt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// maskmt command-line tool. Talks to the library only through its C API.

#include <chrono>
#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maskmt/maskmt.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitEngine = 2;

volatile std::sig_atomic_t g_stop = 0;

void OnSignal(int) { g_stop = 1; }

int ExitCode(maskmt_status status) {
  if (status == MASKMT_OK) return kExitOk;
  return status == MASKMT_ENGINE ? kExitEngine : kExitInvalid;
}

int Report(maskmt_status status) {
  if (status != MASKMT_OK) {
    std::cerr << "error (" << maskmt_status_name(status)
              << "): " << maskmt_last_error() << "\n";
  }
  return ExitCode(status);
}

// Owns a string returned by the library.
class LibString {
 public:
  LibString() = default;
  ~LibString() { maskmt_string_free(s_); }
  LibString(const LibString&) = delete;
  LibString& operator=(const LibString&) = delete;
  char** out() { return &s_; }
  std::string str() const { return s_ != nullptr ? s_ : ""; }

 private:
  char* s_ = nullptr;
};

struct ContextDeleter {
  void operator()(maskmt_context* ctx) const { maskmt_context_destroy(ctx); }
};
using Context = std::unique_ptr<maskmt_context, ContextDeleter>;

std::optional<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

bool WriteFile(const std::string& path, const std::string& contents) {
  std::error_code ec;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  return static_cast<bool>(out);
}

std::string NowUtc() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct GlobalOptions {
  std::string config;
  std::optional<uint64_t> seed;
  std::vector<std::string> dictionaries;
  std::string pos_lexicon;
  std::string audit_log;
};

struct TextInput {
  std::string text;
  std::string in;
};

void AddTextInput(CLI::App* cmd, TextInput& input) {
  cmd->add_option("--text", input.text, "Input text");
  cmd->add_option("--in", input.in, "Read the input text from a file")
      ->check(CLI::ExistingFile);
}

std::string ResolveText(const TextInput& input) {
  if (!input.text.empty()) return input.text;
  if (!input.in.empty()) return ReadFile(input.in).value_or("");
  return std::string(std::istreambuf_iterator<char>(std::cin), {});
}

struct MechanismOptions {
  std::string method = "prism_r";
  double ratio = 0.5;
  double beta = 0.0;
};

void AddMechanismOptions(CLI::App* cmd, MechanismOptions& m) {
  cmd->add_option("--method", m.method,
                  "prism_r, prism_star or mixed (dashes also accepted)");
  cmd->add_option("--ratio", m.ratio, "Substitution ratio r in (0, 1)");
  cmd->add_option("--beta", m.beta, "PRISM* probability for --method mixed");
}

std::string ParamsJson(const MechanismOptions& m,
                       const std::optional<std::string>& engine = {}) {
  ordered_json j = {{"method", m.method}, {"ratio", m.ratio}, {"beta", m.beta}};
  if (engine) j["engine"] = *engine;
  return j.dump();
}

maskmt_status OpenContext(const GlobalOptions& g, Context& ctx) {
  std::string config = g.config;
  if (config.empty()) {
    if (const char* env = std::getenv("MASKMT_CONFIG"); env && *env) {
      config = env;
    }
  }
  maskmt_context* raw = nullptr;
  maskmt_status st = config.empty()
                         ? maskmt_context_create_fixture(&raw)
                         : maskmt_context_create_from_config(config.c_str(),
                                                             &raw);
  if (st != MASKMT_OK) return st;
  ctx.reset(raw);
  if (g.seed) {
    if ((st = maskmt_set_seed(ctx.get(), *g.seed)) != MASKMT_OK) return st;
  }
  if (!g.pos_lexicon.empty()) {
    st = maskmt_load_pos_lexicon(ctx.get(), g.pos_lexicon.c_str());
    if (st != MASKMT_OK) return st;
  }
  for (const std::string& d : g.dictionaries) {
    if ((st = maskmt_load_dictionary(ctx.get(), d.c_str())) != MASKMT_OK) {
      return st;
    }
  }
  if (!g.audit_log.empty()) {
    st = maskmt_open_audit_log(ctx.get(), g.audit_log.c_str());
    if (st != MASKMT_OK) return st;
  }
  return MASKMT_OK;
}

void PrintMisses(const ordered_json& result) {
  for (const auto& m : result.value("misses", ordered_json::array())) {
    std::cerr << "decode miss at token " << m.value("position", 0) << " ("
              << m.value("original", "") << " -> " << m.value("substitute", "")
              << "): " << m.value("reason", "") << "\n";
  }
}

std::vector<double> ParseGrid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maskmt: translate sensitive text through an untrusted engine"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--config", g.config,
                 "Engine and service config (JSON); default $MASKMT_CONFIG");
  app.add_option("--seed", g.seed, "Random seed; default $MASKMT_SEED or 0");
  app.add_option("--dict", g.dictionaries, "Dictionary TSV to load")
      ->check(CLI::ExistingFile);
  app.add_option("--pos-lexicon", g.pos_lexicon, "POS lexicon TSV")
      ->check(CLI::ExistingFile);
  app.add_option("--audit-log", g.audit_log, "Append audit records here");

  // build-dict
  auto* build = app.add_subcommand("build-dict", "Induce a word dictionary");
  std::string build_engine = "mock-en-fr", build_corpus, build_vocab,
              build_mode = "plain", build_out;
  int64_t samples = 1000, base_samples = 0, min_support = 10;
  std::size_t top_k = 10;
  double alpha = 1.0;
  int jobs = 1;
  build->add_option("--engine", build_engine, "Engine to probe");
  build->add_option("--corpus", build_corpus, "One sentence per line")
      ->check(CLI::ExistingFile);
  build->add_option("--vocab", build_vocab, "One source word per line")
      ->check(CLI::ExistingFile);
  build->add_option("--mode", build_mode, "plain or pos_keyed")
      ->check(CLI::IsMember({"plain", "pos_keyed", "pos-keyed"}));
  build->add_option("--samples", samples, "Probes per word");
  build->add_option("--base-samples", base_samples,
                    "Unmodified translations in the base pool (0: --samples)");
  build->add_option("--top-k", top_k, "Candidates kept per word");
  build->add_option("--min-support", min_support, "Minimum probes per key");
  build->add_option("--alpha", alpha, "Smoothing constant");
  build->add_option("--jobs", jobs, "Concurrent probes");
  build->add_option("--out", build_out, "Output TSV")->required();

  // encode
  auto* encode = app.add_subcommand("encode", "Substitute words before sending");
  TextInput encode_in;
  MechanismOptions encode_mech;
  std::string history_out;
  bool encode_json = false;
  AddTextInput(encode, encode_in);
  AddMechanismOptions(encode, encode_mech);
  encode->add_option("--history-out", history_out,
                     "Write the encode result (with history) as JSON");
  encode->add_flag("--json", encode_json, "Print the full result as JSON");

  // translate
  auto* translate = app.add_subcommand("translate", "Send text to an engine");
  TextInput translate_in;
  std::string translate_engine = "mock-en-fr";
  AddTextInput(translate, translate_in);
  translate->add_option("--engine", translate_engine, "Engine id");

  // decode
  auto* decode = app.add_subcommand("decode", "Restore words after translation");
  TextInput decode_in;
  std::string history_path;
  bool decode_json = false;
  AddTextInput(decode, decode_in);
  decode->add_option("--history", history_path,
                     "Encode result, history or session export (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  decode->add_flag("--json", decode_json, "Print the full result as JSON");

  // run
  auto* run = app.add_subcommand("run", "Encode, translate and decode");
  TextInput run_in;
  MechanismOptions run_mech;
  std::string run_engine = "mock-en-fr", run_export, run_session_dir = "sessions";
  bool run_json = false;
  AddTextInput(run, run_in);
  AddMechanismOptions(run, run_mech);
  run->add_option("--engine", run_engine, "Engine id");
  run->add_option("--export", run_export, "Session export path");
  run->add_option("--session-dir", run_session_dir,
                  "Directory for the session export when --export is unset");
  run->add_flag("--json", run_json, "Print the full result as JSON");

  // eval-sweep
  auto* sweep = app.add_subcommand("eval-sweep",
                                   "Privacy/quality curve on the synthetic corpus");
  std::string sweep_mechanism = "prism_star", sweep_engine = "mock-en-fr",
              sweep_grid = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9", sweep_out;
  std::size_t docs = 100;
  double sweep_beta = 0.5;
  sweep->add_option("--mechanism", sweep_mechanism,
                    "prism_r, prism_star, no_decode or mixed");
  sweep->add_option("--engine", sweep_engine, "Engine id");
  sweep->add_option("--grid", sweep_grid, "Comma-separated ratios");
  sweep->add_option("--docs", docs, "Synthetic documents");
  sweep->add_option("--beta", sweep_beta, "Mixture weight for mixed");
  sweep->add_option("--out", sweep_out, "Curve CSV (default: stdout)");

  // aupqc
  auto* aupqc = app.add_subcommand("aupqc", "Area under a curve CSV");
  std::string curve_path, report_mechanism, report_engine;
  std::vector<double> qs_at;
  bool report_json = false;
  aupqc->add_option("curve", curve_path, "Curve CSV (param,pps,qs)")
      ->required()
      ->check(CLI::ExistingFile);
  aupqc->add_option("--qs-at", qs_at, "Also print QS at these PPS levels");
  aupqc->add_flag("--json", report_json, "Print the JSON report");
  aupqc->add_option("--mechanism", report_mechanism, "Report label");
  aupqc->add_option("--engine", report_engine, "Report label");

  // serve
  auto* serve = app.add_subcommand("serve", "Run the local HTTP service");
  std::optional<std::string> bind, session_dir;
  int port = -1;
  serve->add_option("--bind", bind, "Bind address (default 127.0.0.1)");
  serve->add_option("--port", port, "Port (default from config, else 8080)");
  serve->add_option("--session-dir", session_dir, "Session export directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (*aupqc) {
    const std::optional<std::string> csv = ReadFile(curve_path);
    if (!csv) return Report(MASKMT_IO);
    if (report_json) {
      LibString out;
      const std::string ps = nlohmann::json(qs_at).dump();
      maskmt_status st = maskmt_report_json(
          csv->c_str(), report_mechanism.c_str(), report_engine.c_str(),
          ps.c_str(), out.out());
      if (st != MASKMT_OK) return Report(st);
      std::cout << out.str() << "\n";
      return kExitOk;
    }
    double area = 0.0;
    maskmt_status st = maskmt_aupqc_csv(csv->c_str(), &area);
    if (st != MASKMT_OK) return Report(st);
    std::printf("%.10g\n", area);
    for (double p : qs_at) {
      double q = 0.0;
      int extrapolated = 0;
      st = maskmt_qs_at_csv(csv->c_str(), p, &q, &extrapolated);
      if (st != MASKMT_OK) return Report(st);
      std::printf("qs@%g %.10g%s\n", p, q, extrapolated ? " (extrapolated)" : "");
    }
    return kExitOk;
  }

  Context ctx;
  if (maskmt_status st = OpenContext(g, ctx); st != MASKMT_OK) {
    return Report(st);
  }

  if (*build) {
    ordered_json opts = {{"engine", build_engine},
                         {"mode", build_mode},
                         {"samples_per_word", samples},
                         {"base_samples", base_samples},
                         {"top_k", top_k},
                         {"min_support", min_support},
                         {"alpha", alpha},
                         {"max_in_flight", jobs},
                         {"out", build_out}};
    if (!build_corpus.empty()) opts["corpus_path"] = build_corpus;
    if (!build_vocab.empty()) opts["vocab_path"] = build_vocab;
    LibString out;
    maskmt_status st =
        maskmt_build_dictionary(ctx.get(), opts.dump().c_str(), out.out());
    if (st != MASKMT_OK) return Report(st);
    std::cout << out.str() << "\n";
    return kExitOk;
  }

  if (*encode) {
    const std::string text = ResolveText(encode_in);
    LibString out;
    maskmt_status st = maskmt_encode(ctx.get(), text.c_str(),
                                     ParamsJson(encode_mech).c_str(), out.out());
    if (st != MASKMT_OK) return Report(st);
    const ordered_json result = ordered_json::parse(out.str());
    if (!history_out.empty() && !WriteFile(history_out, result.dump(2) + "\n")) {
      std::cerr << "error (IO): cannot write " << history_out << "\n";
      return kExitInvalid;
    }
    if (result.contains("warning")) {
      std::cerr << "warning: " << result["warning"].get<std::string>() << "\n";
    }
    if (encode_json) {
      std::cout << result.dump(2) << "\n";
    } else {
      std::cout << result["x_pub"].get<std::string>() << "\n";
      if (result.contains("epsilon")) {
        std::cerr << "epsilon: " << result["epsilon"].get<double>() << "\n";
      }
    }
    return kExitOk;
  }

  if (*translate) {
    const std::string text = ResolveText(translate_in);
    LibString out;
    maskmt_status st = maskmt_translate(ctx.get(), translate_engine.c_str(),
                                        text.c_str(), out.out());
    if (st != MASKMT_OK) return Report(st);
    std::cout << out.str() << "\n";
    return kExitOk;
  }

  if (*decode) {
    const std::string text = ResolveText(decode_in);
    const std::optional<std::string> history = ReadFile(history_path);
    if (!history) return Report(MASKMT_IO);
    LibString out;
    maskmt_status st =
        maskmt_decode(ctx.get(), text.c_str(), history->c_str(), out.out());
    if (st != MASKMT_OK) return Report(st);
    const ordered_json result = ordered_json::parse(out.str());
    PrintMisses(result);
    if (decode_json) {
      std::cout << result.dump(2) << "\n";
    } else {
      std::cout << result["y_pri"].get<std::string>() << "\n";
    }
    return kExitOk;
  }

  if (*run) {
    const std::string text = ResolveText(run_in);
    LibString out;
    maskmt_status st = maskmt_run(ctx.get(), text.c_str(),
                                  ParamsJson(run_mech, run_engine).c_str(),
                                  out.out());
    if (st != MASKMT_OK) return Report(st);
    const ordered_json result = ordered_json::parse(out.str());
    ordered_json session = {{"created_at", NowUtc()},
                            {"state", "decoded"},
                            {"text", text},
                            {"encode", result},
                            {"engine", run_engine},
                            {"y_pub", result["y_pub"]},
                            {"y_pri", result["y_pri"]},
                            {"misses", result["misses"]}};
    std::string path = run_export;
    if (path.empty()) {
      const auto stamp = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::system_clock::now().time_since_epoch())
                             .count();
      path = (std::filesystem::path(run_session_dir) /
              ("run-" + std::to_string(stamp) + ".json"))
                 .string();
    }
    if (!WriteFile(path, session.dump(2) + "\n")) {
      std::cerr << "error (IO): cannot write " << path << "\n";
      return kExitInvalid;
    }
    if (result.contains("warning")) {
      std::cerr << "warning: " << result["warning"].get<std::string>() << "\n";
    }
    PrintMisses(result);
    if (run_json) {
      std::cout << result.dump(2) << "\n";
    } else {
      std::cout << result["y_pri"].get<std::string>() << "\n";
    }
    std::cerr << "session written to " << path << "\n";
    return kExitOk;
  }

  if (*sweep) {
    std::vector<double> grid;
    try {
      grid = ParseGrid(sweep_grid);
    } catch (const std::exception&) {
      std::cerr << "error (INVALID_ARGUMENT): bad --grid " << sweep_grid << "\n";
      return kExitInvalid;
    }
    ordered_json opts = {{"mechanism", sweep_mechanism},
                         {"engine", sweep_engine},
                         {"grid", grid},
                         {"docs", docs},
                         {"beta", sweep_beta}};
    if (g.seed) opts["seed"] = *g.seed;
    LibString out;
    maskmt_status st =
        maskmt_eval_sweep(ctx.get(), opts.dump().c_str(), out.out());
    if (st != MASKMT_OK) return Report(st);
    if (sweep_out.empty()) {
      std::cout << out.str();
    } else if (!WriteFile(sweep_out, out.str())) {
      std::cerr << "error (IO): cannot write " << sweep_out << "\n";
      return kExitInvalid;
    }
    return kExitOk;
  }

  if (*serve) {
    maskmt_server* server = nullptr;
    int bound = 0;
    maskmt_status st = maskmt_server_start(
        ctx.get(), bind ? bind->c_str() : nullptr, port,
        session_dir ? session_dir->c_str() : nullptr, &server, &bound);
    if (st != MASKMT_OK) return Report(st);
    std::signal(SIGINT, OnSignal);
    std::signal(SIGTERM, OnSignal);
    std::cout << "listening on http://" << maskmt_server_bind_address(server)
              << ":" << bound << std::endl;
    while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
    maskmt_server_stop(server);
    maskmt_server_destroy(server);
    return kExitOk;
  }
  return kExitInvalid;
}
