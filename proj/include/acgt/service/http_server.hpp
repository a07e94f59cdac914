#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "acgt/service/api.hpp"

namespace acgt::service {

struct ServerOptions {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::size_t max_body = 1 << 20;  // bytes
  int read_timeout_seconds = 10;
};

// Serves `api` over HTTP until stop_server() is called from another thread
// or the process exits. `on_ready` receives the bound port.
void run_server(const Api& api, const ServerOptions& options,
                const std::function<void(int)>& on_ready = {});
void stop_server();

}  // namespace acgt::service
