#include "tropkex/channel.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstring>

namespace tropkex {

namespace {

[[noreturn]] void throw_errno(const std::string& what) {
  throw ChannelError(ChannelError::Kind::io, what + ": " + std::strerror(errno));
}

}  // namespace

FdChannel::FdChannel(int fd, std::chrono::milliseconds timeout) : fd_(fd), timeout_(timeout) {}

FdChannel::FdChannel(FdChannel&& other) noexcept
    : fd_(std::exchange(other.fd_, -1)), timeout_(other.timeout_) {}

FdChannel& FdChannel::operator=(FdChannel&& other) noexcept {
  if (this != &other) {
    if (fd_ >= 0) ::close(fd_);
    fd_ = std::exchange(other.fd_, -1);
    timeout_ = other.timeout_;
  }
  return *this;
}

FdChannel::~FdChannel() {
  if (fd_ >= 0) ::close(fd_);
}

void FdChannel::wait(short events) {
  pollfd p{fd_, events, 0};
  for (;;) {
    int r = ::poll(&p, 1, static_cast<int>(timeout_.count()));
    if (r > 0) return;
    if (r == 0) throw ChannelError(ChannelError::Kind::timeout, "timeout");
    if (errno != EINTR) throw_errno("poll");
  }
}

void FdChannel::write_all(std::string_view bytes) {
  while (!bytes.empty()) {
    wait(POLLOUT);
    ssize_t n = ::send(fd_, bytes.data(), bytes.size(), MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      if (errno == EPIPE || errno == ECONNRESET) {
        throw ChannelError(ChannelError::Kind::closed, "connection closed by peer");
      }
      throw_errno("send");
    }
    bytes.remove_prefix(static_cast<std::size_t>(n));
  }
}

std::size_t FdChannel::read_some(char* buf, std::size_t n) {
  for (;;) {
    wait(POLLIN);
    ssize_t r = ::recv(fd_, buf, n, 0);
    if (r >= 0) return static_cast<std::size_t>(r);
    if (errno == EINTR || errno == EAGAIN) continue;
    if (errno == ECONNRESET) return 0;
    throw_errno("recv");
  }
}

void FdChannel::read_exact(char* buf, std::size_t n) {
  while (n > 0) {
    std::size_t r = read_some(buf, n);
    if (r == 0) throw ChannelError(ChannelError::Kind::closed, "connection closed by peer");
    buf += r;
    n -= r;
  }
}

void FdChannel::shutdown_write() {
  if (fd_ >= 0) ::shutdown(fd_, SHUT_WR);
}

std::pair<FdChannel, FdChannel> channel_pair() {
  int fds[2];
  if (::socketpair(AF_UNIX, SOCK_STREAM, 0, fds) != 0) throw_errno("socketpair");
  return {FdChannel(fds[0]), FdChannel(fds[1])};
}

std::pair<std::string, std::uint16_t> parse_endpoint(std::string_view endpoint) {
  const std::size_t colon = endpoint.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw InputError("endpoint must be host:port");
  }
  std::string_view port_text = endpoint.substr(colon + 1);
  unsigned port = 0;
  auto [ptr, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
  if (port_text.empty() || ec != std::errc() || ptr != port_text.data() + port_text.size() ||
      port > 65535) {
    throw InputError("bad port in endpoint '" + std::string(endpoint) + "'");
  }
  return {std::string(endpoint.substr(0, colon)), static_cast<std::uint16_t>(port)};
}

namespace {

addrinfo* resolve(const std::string& host, std::uint16_t port, bool passive) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  if (passive) hints.ai_flags = AI_PASSIVE;
  addrinfo* res = nullptr;
  const std::string service = std::to_string(port);
  int rc = ::getaddrinfo(host.c_str(), service.c_str(), &hints, &res);
  if (rc != 0) {
    throw ChannelError(ChannelError::Kind::io, "resolve " + host + ": " + ::gai_strerror(rc));
  }
  return res;
}

}  // namespace

FdChannel connect_tcp(const std::string& host, std::uint16_t port,
                      std::chrono::milliseconds timeout) {
  addrinfo* res = resolve(host, port, false);
  int fd = -1;
  int last_errno = 0;
  for (addrinfo* ai = res; ai != nullptr; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
    last_errno = errno;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(res);
  if (fd < 0) {
    errno = last_errno;
    throw_errno("connect " + host + ":" + std::to_string(port));
  }
  int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
  return FdChannel(fd, timeout);
}

TcpListener::TcpListener(const std::string& host, std::uint16_t port) {
  addrinfo* res = resolve(host, port, true);
  for (addrinfo* ai = res; ai != nullptr; ai = ai->ai_next) {
    fd_ = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd_ < 0) continue;
    int one = 1;
    ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    if (::bind(fd_, ai->ai_addr, ai->ai_addrlen) == 0 && ::listen(fd_, 16) == 0) break;
    ::close(fd_);
    fd_ = -1;
  }
  ::freeaddrinfo(res);
  if (fd_ < 0) throw_errno("listen " + host + ":" + std::to_string(port));
  sockaddr_storage addr{};
  socklen_t len = sizeof(addr);
  ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  if (addr.ss_family == AF_INET) {
    port_ = ntohs(reinterpret_cast<sockaddr_in*>(&addr)->sin_port);
  } else {
    port_ = ntohs(reinterpret_cast<sockaddr_in6*>(&addr)->sin6_port);
  }
}

TcpListener::TcpListener(TcpListener&& other) noexcept
    : fd_(std::exchange(other.fd_, -1)), port_(other.port_) {}

TcpListener::~TcpListener() {
  if (fd_ >= 0) ::close(fd_);
}

FdChannel TcpListener::accept(std::chrono::milliseconds timeout) {
  pollfd p{fd_, POLLIN, 0};
  int r = ::poll(&p, 1, static_cast<int>(timeout.count()));
  if (r == 0) throw ChannelError(ChannelError::Kind::timeout, "timeout waiting for peer");
  if (r < 0) throw_errno("poll");
  int fd = ::accept(fd_, nullptr, nullptr);
  if (fd < 0) throw_errno("accept");
  int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
  return FdChannel(fd, timeout);
}

Frame read_frame(FdChannel& ch) {
  std::string header;
  for (;;) {
    char c;
    if (ch.read_some(&c, 1) == 0) {
      if (header.empty()) throw ChannelError(ChannelError::Kind::closed, "peer closed the stream");
      throw FrameError(FrameErrc::truncated, "stream ended inside header");
    }
    if (c == '\n') break;
    header.push_back(c);
    if (header.size() > kMaxHeaderBytes) {
      throw FrameError(FrameErrc::bad_header, "header line too long");
    }
  }
  const FrameHeader h = parse_header(header);
  std::string payload(h.length, '\0');
  std::size_t got = 0;
  while (got < h.length) {
    std::size_t r = ch.read_some(payload.data() + got, h.length - got);
    if (r == 0) {
      throw FrameError(FrameErrc::truncated, "payload has " + std::to_string(got) + " of " +
                                                 std::to_string(h.length) + " bytes");
    }
    got += r;
  }
  return {h.type, std::move(payload)};
}

void write_frame(FdChannel& ch, const Frame& f) { ch.write_all(encode_frame(f)); }

}  // namespace tropkex
