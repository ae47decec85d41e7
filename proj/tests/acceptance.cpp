// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Thresholds are fixed below.

#include <fcntl.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tropkex/analysis.hpp"
#include "tropkex/errors.hpp"
#include "tropkex/frame.hpp"
#include "tropkex/protocol.hpp"
#include "tropkex/replay.hpp"
#include "tropkex/sampling.hpp"
#include "tropkex/semidirect.hpp"

extern char** environ;

using namespace tropkex;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr double kReplaySeconds = 1.0;
constexpr std::size_t kAgreementTrials = 20;
constexpr double kAgreementTrialSeconds = 10.0;
constexpr std::size_t kOracleInstances = 200;
constexpr std::size_t kLawCases = 500;
constexpr std::size_t kHarnessTrials = 100;
constexpr std::uint64_t kHarnessMaxExp = 64;
constexpr double kReducedScheme2Seconds = 60.0;
constexpr double kNetworkSeconds = 5.0;
constexpr std::size_t kFuzzFrames = 10000;
constexpr double kFuzzSeconds = 30.0;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int n, const std::string& title, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << n << "] " << title << ": " << o.detail
            << std::endl;
  if (!o.pass) ++failures;
}

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

// 1 -----------------------------------------------------------------------

Outcome worked_examples() {
  const auto t0 = Clock::now();
  const auto checks = replay_worked_examples(1, 50);
  const double secs = since(t0);
  std::size_t ok = 0;
  std::string failed;
  for (const auto& c : checks) {
    if (c.passed) {
      ++ok;
    } else {
      failed += "\n      failed: " + c.name + "\n        " + c.detail;
    }
  }
  std::ostringstream os;
  os << ok << "/" << checks.size() << " examples hold, " << secs << " s" << failed;
  return {ok == checks.size() && secs < kReplaySeconds, os.str()};
}

// 2 -----------------------------------------------------------------------

Outcome scheme1_full_scale() {
  const ParamSpec spec = param_default(1);
  double worst = 0.0;
  std::size_t agree = 0;
  for (std::size_t t = 0; t < kAgreementTrials; ++t) {
    const auto t0 = Clock::now();
    const ParamSet p = gen_params(spec, 1000 + t);
    const PrivateKey a = gen_private(spec.exp_bits, 2 * t + 1);
    const PrivateKey b = gen_private(spec.exp_bits, 2 * t + 2);
    const PublicMessage pa = compute_public(p, a);
    const PublicMessage pb = compute_public(p, b);
    const bool eq = derive_shared(p, a, pb, Variant::literal) ==
                    derive_shared(p, b, pa, Variant::literal);
    worst = std::max(worst, since(t0));
    if (eq && a.exponent() != b.exponent()) ++agree;
  }
  std::ostringstream os;
  os << agree << "/" << kAgreementTrials << " trials agree (k=30, [-1000,1000], 200-bit), "
     << "slowest trial " << worst << " s (limit " << kAgreementTrialSeconds << ")";
  return {agree == kAgreementTrials && worst < kAgreementTrialSeconds, os.str()};
}

// 3 -----------------------------------------------------------------------

Outcome fast_paths_match() {
  SplitMix64 rng(3);
  std::size_t adj_ok = 0, sw_ok = 0;
  for (std::size_t t = 0; t < kOracleInstances; ++t) {
    const auto k = static_cast<std::size_t>(rng.uniform(1, 4));
    const long n = static_cast<long>(rng.uniform(1, 64));
    const TropMatrix m = random_matrix(rng, k, -10, 10);
    const TropMatrix h = random_matrix(rng, k, -10, 10);
    if (sd_power_fast({m, h}, n, Action::adjoint()) == sd_power_ltr({m, h}, n, Action::adjoint()))
      ++adj_ok;
    if (sandwich_power_fast(m, h, n) == sd_power_ltr({m, h}, n, Action::sandwich())) ++sw_ok;
  }
  std::ostringstream os;
  os << "adjoint " << adj_ok << "/" << kOracleInstances << ", sandwich " << sw_ok << "/"
     << kOracleInstances;
  return {adj_ok == kOracleInstances && sw_ok == kOracleInstances, os.str()};
}

// 4 -----------------------------------------------------------------------

ExtVal draw(SplitMix64& rng) {
  return rng.uniform(0, 7) == 0 ? ExtVal::infinity() : ExtVal(rng.uniform(-1000, 1000));
}

TropMatrix draw_matrix(SplitMix64& rng, std::size_t k) {
  return random_matrix_with_eps(rng, k, -100, 100, 8);
}

Outcome law_suite() {
  SplitMix64 rng(4);
  struct Law {
    std::string name;
    std::function<bool()> holds;
  };
  const auto dim = [&] { return static_cast<std::size_t>(rng.uniform(1, 4)); };
  const std::vector<Law> laws = {
      {"semiring", [&] {
         const ExtVal a = draw(rng), b = draw(rng), c = draw(rng);
         const ExtVal zero = ExtVal::infinity(), one(0);
         return add(add(a, b), c) == add(a, add(b, c)) && add(a, b) == add(b, a) &&
                mul(mul(a, b), c) == mul(a, mul(b, c)) && mul(a, b) == mul(b, a) &&
                mul(a, add(b, c)) == add(mul(a, b), mul(a, c)) && add(a, zero) == a &&
                mul(a, one) == a && mul(a, zero) == zero && add(a, a) == a;
       }},
      {"scalar adjoint assoc/distrib", [&] {
         const ExtVal a = draw(rng), b = draw(rng), c = draw(rng);
         return adjoint(adjoint(a, b), c) == adjoint(a, adjoint(b, c)) &&
                adjoint(add(a, b), c) == add(adjoint(a, c), adjoint(b, c));
       }},
      {"matrix adjoint assoc/distrib", [&] {
         const std::size_t k = dim();
         const TropMatrix x = draw_matrix(rng, k), y = draw_matrix(rng, k), z = draw_matrix(rng, k);
         return adjoint(adjoint(x, y), z) == adjoint(x, adjoint(y, z)) &&
                adjoint(add(x, y), z) == add(adjoint(x, z), adjoint(y, z));
       }},
      {"adjoint semidirect associativity", [&] {
         const std::size_t k = dim();
         const Action a = Action::adjoint();
         const SemidirectPair p{draw_matrix(rng, k), draw_matrix(rng, k)};
         const SemidirectPair q{draw_matrix(rng, k), draw_matrix(rng, k)};
         const SemidirectPair r{draw_matrix(rng, k), draw_matrix(rng, k)};
         return sd_mul(sd_mul(p, q, a), r, a) == sd_mul(p, sd_mul(q, r, a), a);
       }},
      {"sandwich additivity", [&] {
         const std::size_t k = dim();
         const TropMatrix x = draw_matrix(rng, k), y = draw_matrix(rng, k), h = draw_matrix(rng, k);
         return sandwich_action(add(x, y), h) == add(sandwich_action(x, h), sandwich_action(y, h));
       }},
      {"phi linearity", [&] {
         const std::size_t k = dim();
         const TropMatrix phi = phi_operator(draw_matrix(rng, k));
         const TropMatrix x = draw_matrix(rng, k), y = draw_matrix(rng, k);
         const ExtVal s(rng.uniform(-100, 100));
         const auto apply = [&](const TropMatrix& m) { return unvec(mat_vec(phi, vec(m)), k); };
         return apply(add(x, y)) == add(apply(x), apply(y)) &&
                apply(scalar_mul(s, x)) == scalar_mul(s, apply(x));
       }},
  };
  bool all = true;
  std::ostringstream os;
  for (const Law& law : laws) {
    std::size_t ok = 0;
    for (std::size_t t = 0; t < kLawCases; ++t) ok += law.holds() ? 1 : 0;
    all = all && ok == kLawCases;
    os << law.name << " " << ok << "/" << kLawCases << "; ";
  }
  return {all, os.str()};
}

// 5 -----------------------------------------------------------------------

Outcome scheme2_measured() {
  ParamSpec spec = param_default(2);
  spec.k = 5;
  spec.lo = -10;
  spec.hi = 10;
  bool ok = true;
  std::ostringstream os;
  for (Variant v : {Variant::literal, Variant::action}) {
    const AgreementStats s = run_agreement_harness(spec, kHarnessTrials, 500, v, kHarnessMaxExp);
    const AgreementStats again = run_agreement_harness(spec, kHarnessTrials, 500, v, kHarnessMaxExp);
    const bool reproducible = again.distinct_exp_agree == s.distinct_exp_agree;
    const bool diff_shown = s.distinct_exp_agree == s.distinct_exp_trials ||
                            (s.first_disagreement && !s.first_disagreement->report.diffs.empty());
    ok = ok && s.equal_exp_agree == s.equal_exp_trials && reproducible && diff_shown;
    os << "\n      ";
    std::ostringstream block;
    print_agreement(block, s);
    std::string text = block.str();
    for (std::size_t pos = 0; (pos = text.find('\n', pos)) != std::string::npos && pos + 1 < text.size();)
      text.replace(pos, 1, "\n      "), pos += 7;
    if (!text.empty() && text.back() == '\n') text.pop_back();
    os << text << (reproducible ? "\n      rate reproducible on rerun" : "\n      rate NOT reproducible");
  }

  ParamSpec reduced = param_default(2);
  reduced.k = 10;
  reduced.exp_bits = 64;
  const auto t0 = Clock::now();
  const BenchReport r = run_bench(reduced, 7, 1, 2, Variant::action);
  const double secs = since(t0);
  ok = ok && secs < kReducedScheme2Seconds && r.bounds_hold;
  os << "\n      reduced run k=10, 64-bit exponents: " << secs << " s (limit "
     << kReducedScheme2Seconds << "), keys " << (r.keys_equal ? "equal" : "differ");
  return {ok, os.str()};
}

// 6 -----------------------------------------------------------------------

Outcome message_size() {
  const BenchReport r = run_bench(param_default(1), 1, 1, 2, Variant::literal);
  std::ostringstream block;
  print_bench(block, r);
  std::string text = block.str();
  std::ostringstream os;
  std::size_t start = 0;
  for (std::size_t nl; (nl = text.find('\n', start)) != std::string::npos; start = nl + 1)
    os << "\n      " << text.substr(start, nl - start);
  return {!text.empty() && r.bounds_hold && r.keys_equal, os.str()};
}

// 7 -----------------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

pid_t spawn(const std::vector<std::string>& args, const std::filesystem::path& out) {
  posix_spawn_file_actions_t fa;
  posix_spawn_file_actions_init(&fa);
  posix_spawn_file_actions_addopen(&fa, STDOUT_FILENO, out.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  std::vector<char*> argv;
  for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
  argv.push_back(nullptr);
  pid_t pid = -1;
  const int rc = posix_spawn(&pid, argv[0], &fa, nullptr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&fa);
  if (rc != 0) throw std::runtime_error("posix_spawn failed for " + args[0]);
  return pid;
}

int wait_exit(pid_t pid) {
  int status = 0;
  waitpid(pid, &status, 0);
  return WIFEXITED(status) ? WEXITSTATUS(status) : 128;
}

std::string line_value(const std::string& text, const std::string& key) {
  const std::size_t pos = text.find(key + " ");
  if (pos == std::string::npos) return {};
  const std::size_t end = text.find('\n', pos);
  return text.substr(pos + key.size() + 1, end - pos - key.size() - 1);
}

struct NetRun {
  int serve_code, connect_code;
  std::string serve_fp, connect_fp, serve_transcript, connect_transcript;
  double seconds;
};

NetRun network_run(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto port_file = dir / "port";
  std::filesystem::remove(port_file);
  const auto t0 = Clock::now();
  const std::string cli = TROPKEX_CLI;
  const pid_t server = spawn({cli, "serve", "--endpoint", "127.0.0.1:0", "--key-seed", "2",
                              "--port-file", port_file.string(), "--transcript",
                              (dir / "serve.transcript").string(), "--timeout-ms", "4000"},
                             dir / "serve.out");
  std::string port;
  while (since(t0) < kNetworkSeconds) {
    port = slurp(port_file);
    if (!port.empty() && port.back() == '\n') break;
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  if (port.empty() || port.back() != '\n') {
    kill(server, SIGKILL);
    wait_exit(server);
    throw std::runtime_error("server did not report its port");
  }
  port.pop_back();
  const pid_t client = spawn({cli, "connect", "--endpoint", "127.0.0.1:" + port, "--scheme", "1",
                              "--k", "5", "--exp-bits", "32", "--seed", "17", "--key-seed", "1",
                              "--transcript", (dir / "connect.transcript").string(),
                              "--timeout-ms", "4000"},
                             dir / "connect.out");
  NetRun r;
  r.connect_code = wait_exit(client);
  r.serve_code = wait_exit(server);
  r.seconds = since(t0);
  r.serve_fp = line_value(slurp(dir / "serve.out"), "fingerprint");
  r.connect_fp = line_value(slurp(dir / "connect.out"), "fingerprint");
  r.serve_transcript = slurp(dir / "serve.transcript");
  r.connect_transcript = slurp(dir / "connect.transcript");
  return r;
}

Outcome network_exchange() {
  const auto base = std::filesystem::temp_directory_path() /
                    ("tropkex-acceptance-" + std::to_string(getpid()));
  const NetRun a = network_run(base / "run1");
  const NetRun b = network_run(base / "run2");
  std::filesystem::remove_all(base);
  const bool exits = a.serve_code == 0 && a.connect_code == 0 && b.serve_code == 0 &&
                     b.connect_code == 0;
  const bool fps = !a.serve_fp.empty() && a.serve_fp == a.connect_fp && b.serve_fp == b.connect_fp;
  const bool transcripts = !a.connect_transcript.empty() &&
                           a.connect_transcript == b.connect_transcript &&
                           a.serve_transcript == b.serve_transcript;
  const double worst = std::max(a.seconds, b.seconds);
  std::ostringstream os;
  os << "exit codes " << a.serve_code << "/" << a.connect_code << ", " << b.serve_code << "/"
     << b.connect_code << "; fingerprint " << a.connect_fp << (fps ? " on both sides" : " MISMATCH")
     << "; transcripts " << (transcripts ? "byte-identical" : "DIFFER") << " across runs; slowest "
     << worst << " s (limit " << kNetworkSeconds << ")";
  return {exits && fps && transcripts && worst < kNetworkSeconds, os.str()};
}

// 8 -----------------------------------------------------------------------

Outcome fuzz_frames() {
  ParamsMessage pm;
  pm.spec = param_default(1);
  pm.spec.k = 2;
  pm.explicit_m = TropMatrix{{1, 2}, {5, -1}};
  pm.explicit_h = TropMatrix{{0, 3}, {2, 8}};
  const std::vector<std::string> seeds = {
      encode_frame({FrameType::hello, encode_hello({1, Role::initiator})}),
      encode_frame({FrameType::params, encode_params(pm)}),
      encode_frame({FrameType::pub, "TROPMAT 1 2\n1 2\n5 -1\n"}),
      encode_frame({FrameType::fin, encode_fin(0x0123456789abcdefull)}),
      encode_frame({FrameType::err, "key mismatch"}),
  };
  SplitMix64 rng(8);
  std::size_t structured = 0, accepted = 0, other = 0;
  const auto t0 = Clock::now();
  for (std::size_t t = 0; t < kFuzzFrames; ++t) {
    std::string s = seeds[static_cast<std::size_t>(rng.uniform(0, 4))];
    if (rng.uniform(0, 2) == 0) {
      s.resize(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(s.size()) - 1)));
    } else {
      const auto edits = rng.uniform(1, 4);
      for (std::int64_t e = 0; e < edits; ++e) {
        const auto pos = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(s.size())));
        const char c = static_cast<char>(rng.uniform(0, 255));
        switch (rng.uniform(0, 2)) {
          case 0: if (pos < s.size()) s[pos] = c; break;
          case 1: if (pos < s.size()) s.erase(pos, 1); break;
          default: s.insert(pos, 1, c); break;
        }
      }
    }
    try {
      const Frame f = decode_frame(s);
      switch (f.type) {
        case FrameType::hello: decode_hello(f.payload); break;
        case FrameType::params: decode_params(f.payload); break;
        case FrameType::fin: decode_fin(f.payload); break;
        default: break;
      }
      ++accepted;
    } catch (const FrameError&) {
      ++structured;
    } catch (...) {
      ++other;
    }
  }
  const double secs = since(t0);
  std::ostringstream os;
  os << kFuzzFrames << " frames: " << structured << " structured errors, " << accepted
     << " still valid, " << other << " other failures, " << secs << " s";
  return {other == 0 && secs < kFuzzSeconds, os.str()};
}

}  // namespace

int main() {
  std::cout << std::boolalpha;
  report(1, "worked examples", guarded(worked_examples));
  report(2, "scheme 1 agreement at full parameters", guarded(scheme1_full_scale));
  report(3, "fast powers equal left-to-right powers", guarded(fast_paths_match));
  report(4, "algebraic laws", guarded(law_suite));
  report(5, "scheme 2 agreement measured", guarded(scheme2_measured));
  report(6, "message size report", guarded(message_size));
  report(7, "network exchange between two processes", guarded(network_exchange));
  report(8, "frame parser fuzzing", guarded(fuzz_frames));
  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : "all criteria pass")
            << std::endl;
  return failures ? 1 : 0;
}
