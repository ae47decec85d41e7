// tropkex: tropical semidirect-product key exchange toolkit.

#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "tropkex/analysis.hpp"
#include "tropkex/codec.hpp"
#include "tropkex/exchange.hpp"
#include "tropkex/protocol.hpp"
#include "tropkex/replay.hpp"

using namespace tropkex;

namespace {

struct CommonOpts {
  int scheme = 1;
  std::size_t k = 30;
  std::int64_t lo = -1000;
  std::int64_t hi = 1000;
  unsigned exp_bits = 200;
  std::uint64_t seed = 0;
  std::string variant = "literal";

  ParamSpec spec() const {
    ParamSpec s;
    s.scheme = scheme_from_int(scheme);
    s.k = k;
    s.lo = lo;
    s.hi = hi;
    s.exp_bits = exp_bits;
    s.validate();
    return s;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_variant) {
  cmd->add_option("--scheme", o.scheme, "1 = adjoint, 2 = transpose sandwich")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  cmd->add_option("--k", o.k, "matrix side")->check(CLI::Range(1, 4096))->capture_default_str();
  cmd->add_option("--lo", o.lo, "lowest public entry")->capture_default_str();
  cmd->add_option("--hi", o.hi, "highest public entry")->capture_default_str();
  cmd->add_option("--exp-bits", o.exp_bits, "private exponent bit length")
      ->check(CLI::Range(1u, 1u << 20))
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "seed for the public matrices")->capture_default_str();
  if (with_variant) {
    cmd->add_option("--variant", o.variant, "scheme 2 key derivation")
        ->check(CLI::IsMember({"literal", "action"}))
        ->capture_default_str();
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

ParamSet load_params(const CommonOpts& o, const std::string& m_file, const std::string& h_file) {
  if (m_file.empty() != h_file.empty()) throw InputError("--m-file and --h-file go together");
  if (m_file.empty()) return gen_params(o.spec(), o.seed);
  return make_params(o.spec(), decode_matrix(read_file(m_file)), decode_matrix(read_file(h_file)));
}

void print_session(std::ostream& os, const SessionReport& r) {
  if (r.fingerprint) os << "fingerprint " << to_hex(*r.fingerprint) << '\n';
  if (r.peer_fingerprint) os << "peer-fingerprint " << to_hex(*r.peer_fingerprint) << '\n';
  os << "match " << (r.peer_match ? "yes" : "no") << '\n';
  if (!r.error.empty()) os << "error " << r.error << '\n';
}

void finish_session(const SessionReport& r, const std::string& transcript, const std::string& key_out) {
  if (!transcript.empty()) write_file(transcript, r.transcript);
  if (!key_out.empty() && r.key) write_file(key_out, encode_matrix(r.key->k));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical semidirect-product key exchange toolkit"};
  app.require_subcommand(1);

  CommonOpts gp;
  std::string out_m, out_h;
  auto* gen = app.add_subcommand("gen-params", "draw public M, H and write canonical text");
  add_common(gen, gp, false);
  gen->add_option("--out-m", out_m, "file for M (default: stdout)");
  gen->add_option("--out-h", out_h, "file for H (default: stdout)");

  CommonOpts kg;
  std::uint64_t kg_key_seed = 1;
  std::string kg_m_file, kg_h_file, out_key, out_pub;
  auto* keygen = app.add_subcommand("keygen", "draw a private exponent and its public matrix");
  add_common(keygen, kg, false);
  keygen->add_option("--key-seed", kg_key_seed, "seed for the private exponent")->capture_default_str();
  keygen->add_option("--m-file", kg_m_file, "explicit M (canonical text)");
  keygen->add_option("--h-file", kg_h_file, "explicit H (canonical text)");
  keygen->add_option("--out-key", out_key, "file for the exponent (decimal)");
  keygen->add_option("--out-pub", out_pub, "file for the public matrix (default: stdout)");

  CommonOpts xl;
  xl.k = 5;
  xl.exp_bits = 32;
  std::uint64_t alice_seed = 1, bob_seed = 2, oracle_bound = 64, max_exp = 16;
  std::string m_exp, n_exp;
  std::size_t trials = 1;
  auto* local = app.add_subcommand("exchange-local", "run both parties in-process and compare keys");
  add_common(local, xl, true);
  local->add_option("--alice-seed", alice_seed, "seed for Alice's exponent")->capture_default_str();
  local->add_option("--bob-seed", bob_seed, "seed for Bob's exponent")->capture_default_str();
  local->add_option("--m", m_exp, "explicit exponent for Alice (overrides --alice-seed)");
  local->add_option("--n", n_exp, "explicit exponent for Bob (overrides --bob-seed)");
  local->add_option("--oracle-bound", oracle_bound,
                    "compare with the left-to-right power when m+n is at most this")
      ->capture_default_str();
  local->add_option("--trials", trials, "run the agreement harness over this many seeded trials")
      ->capture_default_str();
  local->add_option("--max-exp", max_exp, "harness exponent range [1, max]")->capture_default_str();

  CommonOpts sv;
  sv.k = 5;
  sv.exp_bits = 32;
  std::string sv_endpoint = "127.0.0.1:7878", port_file, sv_transcript, sv_key_out;
  std::uint64_t sv_key_seed = 2;
  unsigned timeout_ms = 10000;
  std::size_t sessions = 1;
  auto* serve = app.add_subcommand("serve", "listen and run the responder side");
  serve->add_option("--variant", sv.variant, "scheme 2 key derivation")
      ->check(CLI::IsMember({"literal", "action"}))
      ->capture_default_str();
  serve->add_option("--endpoint", sv_endpoint, "host:port to listen on")->capture_default_str();
  serve->add_option("--key-seed", sv_key_seed, "seed for the private exponent")->capture_default_str();
  serve->add_option("--port-file", port_file, "write the bound port here once listening");
  serve->add_option("--transcript", sv_transcript, "write the frame transcript here");
  serve->add_option("--key-out", sv_key_out, "write the shared key (canonical text) here");
  serve->add_option("--timeout-ms", timeout_ms, "per-operation timeout")->capture_default_str();
  serve->add_option("--sessions", sessions, "connections to serve concurrently")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}))
      ->capture_default_str();

  CommonOpts cn;
  cn.k = 5;
  cn.exp_bits = 32;
  std::string cn_endpoint = "127.0.0.1:7878", cn_transcript, cn_key_out, cn_m_file, cn_h_file;
  std::uint64_t cn_key_seed = 1;
  bool explicit_mode = false;
  auto* connect = app.add_subcommand("connect", "connect and run the initiator side");
  add_common(connect, cn, true);
  connect->add_option("--endpoint", cn_endpoint, "host:port to connect to")->capture_default_str();
  connect->add_option("--key-seed", cn_key_seed, "seed for the private exponent")->capture_default_str();
  connect->add_flag("--explicit", explicit_mode, "ship M and H in PARAMS instead of the seed");
  connect->add_option("--m-file", cn_m_file, "explicit M (implies --explicit)");
  connect->add_option("--h-file", cn_h_file, "explicit H (implies --explicit)");
  connect->add_option("--transcript", cn_transcript, "write the frame transcript here");
  connect->add_option("--key-out", cn_key_out, "write the shared key (canonical text) here");
  connect->add_option("--timeout-ms", timeout_ms, "per-operation timeout")->capture_default_str();

  CommonOpts bn;
  std::uint64_t bn_alice = 1, bn_bob = 2;
  auto* bench = app.add_subcommand("bench", "time one exchange and report message sizes");
  add_common(bench, bn, true);
  bench->add_option("--alice-seed", bn_alice, "seed for Alice's exponent")->capture_default_str();
  bench->add_option("--bob-seed", bn_bob, "seed for Bob's exponent")->capture_default_str();

  CommonOpts an;
  an.k = 5;
  std::size_t powers = 8;
  auto* analyze = app.add_subcommand("analyze", "entry statistics of (M,H)^j, j = 1..powers");
  add_common(analyze, an, false);
  analyze->add_option("--powers", powers, "highest power")->check(CLI::Range(1, 4096))->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "replay the reference worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      const ParamSet p = gen_params(gp.spec(), gp.seed);
      if (out_m.empty()) std::cout << encode_matrix(p.m); else write_file(out_m, encode_matrix(p.m));
      if (out_h.empty()) std::cout << encode_matrix(p.h); else write_file(out_h, encode_matrix(p.h));
      return kExitOk;
    }

    if (*keygen) {
      const ParamSet p = load_params(kg, kg_m_file, kg_h_file);
      const PrivateKey sk = gen_private(kg.exp_bits, kg_key_seed);
      const std::string pub = encode_matrix(compute_public(p, sk).a);
      if (!out_key.empty()) write_file(out_key, sk.exponent().get_str() + "\n");
      if (out_pub.empty()) std::cout << pub; else write_file(out_pub, pub);
      return kExitOk;
    }

    if (*local) {
      const ParamSpec spec = xl.spec();
      const Variant variant = variant_from_string(xl.variant);
      if (trials > 1) {
        const AgreementStats s = run_agreement_harness(spec, trials, xl.seed, variant, max_exp);
        print_agreement(std::cout, s);
        return s.distinct_exp_agree + s.equal_exp_agree == s.trials ? kExitOk : kExitKeyMismatch;
      }
      const ParamSet p = gen_params(spec, xl.seed);
      const BigInt m = m_exp.empty() ? gen_private(spec.exp_bits, alice_seed).exponent() : BigInt(m_exp);
      const BigInt n = n_exp.empty() ? gen_private(spec.exp_bits, bob_seed).exponent() : BigInt(n_exp);
      const AgreementReport r = agreement_check(p, m, n, variant, oracle_bound);
      std::cout << "scheme " << xl.scheme << (spec.scheme == Scheme::sandwich ? " variant " + xl.variant : "")
                << "  k=" << spec.k << "  m=" << m << "  n=" << n << '\n';
      std::cout << "alice fingerprint " << to_hex(fingerprint(r.alice)) << '\n';
      std::cout << "bob   fingerprint " << to_hex(fingerprint(r.bob)) << '\n';
      std::cout << "agreement " << (r.equal ? "yes" : "no") << '\n';
      if (r.reference) {
        std::cout << "alice = reference " << (r.alice_matches_reference() ? "yes" : "no") << '\n';
        std::cout << "bob   = reference " << (r.bob_matches_reference() ? "yes" : "no") << '\n';
      }
      if (!r.equal) print_diff(std::cout, r.diffs);
      return r.equal ? kExitOk : kExitKeyMismatch;
    }

    if (*serve) {
      SessionConfig cfg;
      cfg.role = Role::responder;
      cfg.key_seed = sv_key_seed;
      cfg.variant = variant_from_string(sv.variant);
      const auto [host, port] = parse_endpoint(sv_endpoint);
      TcpListener listener(host, port);
      if (!port_file.empty()) write_file(port_file, std::to_string(listener.port()) + "\n");
      const auto timeout = std::chrono::milliseconds(timeout_ms);
      std::vector<SessionReport> reports(sessions);
      std::vector<std::thread> workers;
      for (std::size_t i = 0; i < sessions; ++i) {
        FdChannel ch = listener.accept(timeout);
        workers.emplace_back([&reports, &cfg, i, ch = std::move(ch)]() mutable {
          reports[i] = run_session(ch, cfg);
        });
      }
      for (auto& w : workers) w.join();
      int code = kExitOk;
      for (std::size_t i = 0; i < sessions; ++i) {
        if (sessions > 1) std::cout << "session " << i << '\n';
        print_session(std::cout, reports[i]);
        if (reports[i].exit_code != kExitOk && code == kExitOk) code = reports[i].exit_code;
      }
      finish_session(reports[0], sv_transcript, sv_key_out);
      return code;
    }

    if (*connect) {
      SessionConfig cfg;
      cfg.role = Role::initiator;
      cfg.key_seed = cn_key_seed;
      cfg.variant = variant_from_string(cn.variant);
      cfg.params.spec = cn.spec();
      cfg.params.seed = cn.seed;
      if (explicit_mode || !cn_m_file.empty()) {
        const ParamSet p = load_params(cn, cn_m_file, cn_h_file);
        cfg.params.explicit_m = p.m;
        cfg.params.explicit_h = p.h;
      }
      const SessionReport r =
          run_exchange_network(cn_endpoint, cfg, std::chrono::milliseconds(timeout_ms));
      print_session(std::cout, r);
      finish_session(r, cn_transcript, cn_key_out);
      return r.exit_code;
    }

    if (*bench) {
      const ParamSpec spec = bn.spec();
      if (spec.scheme == Scheme::sandwich && spec.k > 10) {
        std::cerr << "warning: scheme 2 squares a " << spec.k * spec.k << "x" << spec.k * spec.k
                  << " operator per exponent bit; this will be slow\n";
      }
      const BenchReport r = run_bench(spec, bn.seed, bn_alice, bn_bob, variant_from_string(bn.variant));
      print_bench(std::cout, r);
      return kExitOk;
    }

    if (*analyze) {
      print_power_table(std::cout, power_pattern_table(gen_params(an.spec(), an.seed), powers));
      return kExitOk;
    }

    if (*selftest) {
      const auto checks = replay_worked_examples();
      print_replay(std::cout, checks);
      for (const auto& c : checks) {
        if (!c.passed) return 1;
      }
      return kExitOk;
    }
  } catch (const ChannelError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitProtocol;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
