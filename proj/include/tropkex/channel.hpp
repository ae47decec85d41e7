#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "tropkex/errors.hpp"
#include "tropkex/frame.hpp"

namespace tropkex {

class ChannelError : public Error {
 public:
  enum class Kind { timeout, closed, io };

  ChannelError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Owning, blocking byte stream over a file descriptor with a per-call
/// deadline. Move-only.
class FdChannel {
 public:
  explicit FdChannel(int fd, std::chrono::milliseconds timeout = std::chrono::seconds(10));
  FdChannel(FdChannel&& other) noexcept;
  FdChannel& operator=(FdChannel&& other) noexcept;
  FdChannel(const FdChannel&) = delete;
  FdChannel& operator=(const FdChannel&) = delete;
  ~FdChannel();

  void set_timeout(std::chrono::milliseconds t) { timeout_ = t; }

  void write_all(std::string_view bytes);
  /// Returns 0 on orderly shutdown by the peer.
  std::size_t read_some(char* buf, std::size_t n);
  void read_exact(char* buf, std::size_t n);

  void shutdown_write();
  int fd() const noexcept { return fd_; }

 private:
  void wait(short events);

  int fd_ = -1;
  std::chrono::milliseconds timeout_;
};

/// Connected pair of local stream sockets.
std::pair<FdChannel, FdChannel> channel_pair();

FdChannel connect_tcp(const std::string& host, std::uint16_t port,
                      std::chrono::milliseconds timeout);

class TcpListener {
 public:
  /// Port 0 picks an ephemeral port; see port().
  TcpListener(const std::string& host, std::uint16_t port);
  TcpListener(TcpListener&&) noexcept;
  TcpListener& operator=(TcpListener&&) = delete;
  TcpListener(const TcpListener&) = delete;
  ~TcpListener();

  std::uint16_t port() const noexcept { return port_; }
  FdChannel accept(std::chrono::milliseconds timeout);

 private:
  int fd_ = -1;
  std::uint16_t port_ = 0;
};

/// Splits "host:port". Throws InputError.
std::pair<std::string, std::uint16_t> parse_endpoint(std::string_view endpoint);

/// Reads one frame. A header longer than kMaxHeaderBytes or a stream that
/// ends mid-frame raises FrameError; a stream closed between frames raises
/// ChannelError (closed).
Frame read_frame(FdChannel& ch);
void write_frame(FdChannel& ch, const Frame& f);

}  // namespace tropkex
