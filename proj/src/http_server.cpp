#include "acgt/service/http_server.hpp"

#include <atomic>
#include <mutex>

#include <httplib.h>

namespace acgt::service {

namespace {

std::mutex server_mutex;
httplib::Server* active = nullptr;

void forward(const Api& api, const httplib::Request& req, httplib::Response& res) {
  Request r{req.method, req.target, req.body, req.get_header_value("Authorization")};
  auto out = api.handle(r);
  res.status = out.status;
  res.set_content(out.body, out.content_type);
}

}  // namespace

void run_server(const Api& api, const ServerOptions& options, const std::function<void(int)>& on_ready) {
  httplib::Server server;
  server.set_payload_max_length(options.max_body);
  server.set_read_timeout(options.read_timeout_seconds, 0);
  auto handler = [&api](const httplib::Request& req, httplib::Response& res) { forward(api, req, res); };
  server.Get(".*", handler);
  server.Post(".*", handler);
  server.Put(".*", handler);
  server.Delete(".*", handler);
  server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr) {
    res.status = 500;
    res.set_content(R"({"error": "io-error", "message": "internal error"})", "application/json");
  });

  int port = options.port;
  if (port == 0) {
    port = server.bind_to_any_port(options.host);
  } else if (!server.bind_to_port(options.host, port)) {
    port = -1;
  }
  if (port < 0) throw Error(Errc::io_error, "cannot bind " + options.host + ":" + std::to_string(options.port));
  {
    std::lock_guard lock(server_mutex);
    active = &server;
  }
  if (on_ready) on_ready(port);
  server.listen_after_bind();
  std::lock_guard lock(server_mutex);
  active = nullptr;
}

void stop_server() {
  std::lock_guard lock(server_mutex);
  if (active) active->stop();
}

}  // namespace acgt::service
