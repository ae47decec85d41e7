#include "tropkex/exchange.hpp"

#include "tropkex/codec.hpp"

namespace tropkex {

namespace {

// Ends the session: `reason` goes out in an ERR frame (best effort).
struct Abort {
  int exit_code;
  std::string reason;
};

class Session {
 public:
  Session(FdChannel& ch, const SessionConfig& cfg) : ch_(ch), cfg_(cfg) {}

  SessionReport run() {
    try {
      cfg_.role == Role::initiator ? initiator() : responder();
      report_.exit_code = kExitOk;
    } catch (const Abort& a) {
      report_.exit_code = a.exit_code;
      report_.error = a.reason;
      if (!peer_sent_err_) {
        try {
          send({FrameType::err, a.reason});
        } catch (const Error&) {
        }
      }
    }
    return std::move(report_);
  }

 private:
  void send(const Frame& f) {
    try {
      write_frame(ch_, f);
    } catch (const ChannelError& e) {
      throw Abort{kExitProtocol, e.kind() == ChannelError::Kind::timeout ? "timeout"
                                                                         : "connection lost"};
    }
    log('>', f);
  }

  Frame receive(FrameType expected) {
    Frame f{FrameType::err, {}};
    try {
      f = read_frame(ch_);
    } catch (const FrameError&) {
      throw Abort{kExitProtocol, "bad frame"};
    } catch (const ChannelError& e) {
      throw Abort{kExitProtocol, e.kind() == ChannelError::Kind::timeout ? "timeout"
                                                                         : "connection lost"};
    }
    log('<', f);
    if (f.type == FrameType::err) {
      peer_sent_err_ = true;
      throw Abort{f.payload == "key mismatch" ? kExitKeyMismatch : kExitProtocol,
                  "peer error: " + f.payload};
    }
    if (f.type != expected) throw Abort{kExitProtocol, "unexpected frame"};
    return f;
  }

  void log(char dir, const Frame& f) {
    report_.transcript += dir;
    report_.transcript += ' ';
    report_.transcript += encode_frame(f);
    report_.transcript += '\n';
  }

  void check_hello(const Frame& f, Role expected_peer) {
    Hello h{};
    try {
      h = decode_hello(f.payload);
    } catch (const FrameError&) {
      throw Abort{kExitProtocol, "bad frame"};
    }
    if (h.version != kProtocolVersion) throw Abort{kExitProtocol, "version mismatch"};
    if (h.role != expected_peer) throw Abort{kExitProtocol, "role conflict"};
  }

  void setup(const ParamsMessage& pm) {
    try {
      params_ = pm.explicit_m ? make_params(pm.spec, *pm.explicit_m, *pm.explicit_h)
                              : gen_params(pm.spec, pm.seed);
    } catch (const Error&) {
      throw Abort{kExitProtocol, "bad params"};
    }
    key_.emplace(gen_private(pm.spec.exp_bits, cfg_.key_seed));
    own_ = compute_public(*params_, *key_);
  }

  PublicMessage peer_public(const Frame& f) {
    try {
      TropMatrix b = decode_matrix(f.payload);
      if (b.size() != params_->spec.k) throw Abort{kExitProtocol, "bad public matrix"};
      return {std::move(b)};
    } catch (const ParseError&) {
      throw Abort{kExitProtocol, "bad public matrix"};
    }
  }

  void derive(const PublicMessage& peer) {
    report_.key = derive_shared(*params_, *key_, peer, cfg_.variant);
    report_.fingerprint = fingerprint(report_.key->k);
  }

  void record_peer_fin(const Frame& f) {
    try {
      report_.peer_fingerprint = decode_fin(f.payload);
    } catch (const FrameError&) {
      throw Abort{kExitProtocol, "bad frame"};
    }
    report_.peer_match = *report_.peer_fingerprint == *report_.fingerprint;
    if (!report_.peer_match) throw Abort{kExitKeyMismatch, "key mismatch"};
  }

  void initiator() {
    send({FrameType::hello, encode_hello({kProtocolVersion, Role::initiator})});
    check_hello(receive(FrameType::hello), Role::responder);
    send({FrameType::params, encode_params(cfg_.params)});
    setup(cfg_.params);
    send({FrameType::pub, encode_matrix(own_->a)});
    derive(peer_public(receive(FrameType::pub)));
    send({FrameType::fin, encode_fin(*report_.fingerprint)});
    record_peer_fin(receive(FrameType::fin));
  }

  void responder() {
    check_hello(receive(FrameType::hello), Role::initiator);
    send({FrameType::hello, encode_hello({kProtocolVersion, Role::responder})});
    const Frame pf = receive(FrameType::params);
    ParamsMessage pm;
    try {
      pm = decode_params(pf.payload);
    } catch (const FrameError&) {
      throw Abort{kExitProtocol, "bad params"};
    }
    setup(pm);
    const PublicMessage peer = peer_public(receive(FrameType::pub));
    send({FrameType::pub, encode_matrix(own_->a)});
    derive(peer);
    const Frame fin = receive(FrameType::fin);
    record_peer_fin(fin);
    send({FrameType::fin, encode_fin(*report_.fingerprint)});
  }

  FdChannel& ch_;
  const SessionConfig& cfg_;
  SessionReport report_;
  bool peer_sent_err_ = false;
  std::optional<ParamSet> params_;
  std::optional<PrivateKey> key_;
  std::optional<PublicMessage> own_;
};

}  // namespace

SessionReport run_session(FdChannel& ch, const SessionConfig& cfg) {
  return Session(ch, cfg).run();
}

SessionReport run_exchange_network(const std::string& endpoint, const SessionConfig& cfg,
                                   std::chrono::milliseconds timeout,
                                   const std::function<void(std::uint16_t)>& on_listening) {
  const auto [host, port] = parse_endpoint(endpoint);
  SessionReport failed;
  try {
    if (cfg.role == Role::initiator) {
      FdChannel ch = connect_tcp(host, port, timeout);
      return run_session(ch, cfg);
    }
    TcpListener listener(host, port);
    if (on_listening) on_listening(listener.port());
    FdChannel ch = listener.accept(timeout);
    return run_session(ch, cfg);
  } catch (const ChannelError& e) {
    failed.error = e.kind() == ChannelError::Kind::timeout ? "timeout" : e.what();
  }
  failed.exit_code = kExitProtocol;
  return failed;
}

}  // namespace tropkex
