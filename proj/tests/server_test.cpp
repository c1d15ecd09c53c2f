#include <doctest.h>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <json.hpp>
#include <sstream>
#include <thread>

#include "brush/protocol.hpp"
#include "brush/server.hpp"

using namespace brush;
using nlohmann::json;

namespace {

class Client {
 public:
  explicit Client(int port) {
    fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(static_cast<std::uint16_t>(port));
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    REQUIRE(::connect(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) == 0);
  }
  ~Client() { ::close(fd_); }

  void send(const std::string& text) {
    std::size_t done = 0;
    while (done < text.size()) {
      const auto n = ::write(fd_, text.data() + done, text.size() - done);
      REQUIRE(n > 0);
      done += static_cast<std::size_t>(n);
    }
  }

  std::string read_line() {
    while (true) {
      if (auto nl = buf_.find('\n'); nl != std::string::npos) {
        std::string line = buf_.substr(0, nl);
        buf_.erase(0, nl + 1);
        return line;
      }
      char chunk[4096];
      const auto n = ::read(fd_, chunk, sizeof chunk);
      if (n <= 0) return {};
      buf_.append(chunk, static_cast<std::size_t>(n));
    }
  }

 private:
  int fd_ = -1;
  std::string buf_;
};

struct RunningServer {
  Server server{0};
  int port = server.listen(0);
  std::thread loop{[this] { server.run(); }};
  ~RunningServer() {
    server.stop();
    loop.join();
  }
};

}  // namespace

TEST_SUITE("server") {

TEST_CASE("stdio stream answers line by line") {
  std::istringstream in("{\"source\":\"drawCircle(1,1,1,'red')\",\"seed\":4}\n\nnot json\n");
  std::ostringstream out;
  serve_stream(in, out, 0);
  std::istringstream lines(out.str());
  std::string a, b, extra;
  REQUIRE(std::getline(lines, a));
  REQUIRE(std::getline(lines, b));
  CHECK_FALSE(std::getline(lines, extra));
  CHECK(json::parse(a)["seed"] == 4);
  CHECK(json::parse(b)["status"] == "error");
}

TEST_CASE("over-long stdio line is refused and the stream continues") {
  std::string big(kMaxRequestBytes + 10, 'x');
  std::istringstream in(big + "\n{\"source\":\"\"}\n");
  std::ostringstream out;
  serve_stream(in, out, 0);
  std::istringstream lines(out.str());
  std::string a, b;
  REQUIRE(std::getline(lines, a));
  REQUIRE(std::getline(lines, b));
  CHECK(json::parse(a)["status"] == "error");
  CHECK(json::parse(b)["status"] == "ok");
}

TEST_CASE("tcp: requests on one connection are answered in order") {
  RunningServer s;
  Client c(s.port);
  c.send("{\"id\":1,\"source\":\"\",\"seed\":10}\n{\"id\":2,\"source\":\"\",\"seed\":20}\n");
  const auto a = json::parse(c.read_line());
  const auto b = json::parse(c.read_line());
  CHECK(a["id"] == 1);
  CHECK(a["seed"] == 10);
  CHECK(b["id"] == 2);
  CHECK(b["seed"] == 20);
}

TEST_CASE("tcp: concurrent connections with different seeds") {
  RunningServer s;
  const std::string src = "for (let i = 0; i < 2000; i++) { drawCircle(1, 1, 1, randomColor()) }";
  std::vector<std::thread> threads;
  std::vector<json> answers(8);
  for (int k = 0; k < 8; ++k) {
    threads.emplace_back([&, k] {
      Client c(s.port);
      c.send(json{{"id", k}, {"source", src}, {"seed", k}}.dump() + "\n");
      answers[k] = json::parse(c.read_line());
    });
  }
  for (auto& t : threads) t.join();
  for (int k = 0; k < 8; ++k) {
    CHECK(answers[k]["id"] == k);
    CHECK(answers[k]["seed"] == k);
    CHECK(answers[k]["frames"][0].size() == 2000);
  }
  CHECK(answers[0]["frames"][0][0]["color"] != answers[1]["frames"][0][0]["color"]);
}

TEST_CASE("tcp: garbage does not kill the server") {
  RunningServer s;
  {
    Client c(s.port);
    c.send("\x01\x02garbage\n");
    CHECK(json::parse(c.read_line())["status"] == "error");
  }
  {
    Client c(s.port);
    c.send("{\"source\":\"\"");  // closes mid-line
  }
  Client c(s.port);
  c.send("{\"source\":\"\"}\n");
  CHECK(json::parse(c.read_line())["status"] == "ok");
}

TEST_CASE("tcp: an over-long line gets an error and the connection continues") {
  RunningServer s;
  Client c(s.port);
  std::string big(kMaxRequestBytes + 100, 'y');
  std::thread writer([&] { c.send(big + "\n{\"source\":\"\"}\n"); });
  const auto a = json::parse(c.read_line());
  const auto b = json::parse(c.read_line());
  writer.join();
  CHECK(a["status"] == "error");
  CHECK(b["status"] == "ok");
}

}
