#include <chrono>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "wdaug/mock_service.hpp"

int main(int argc, char** argv) {
  CLI::App app{"offline mock server speaking the wdaug wire protocols"};
  int port = 8089;
  std::string bearer;
  app.add_option("--port", port, "port to bind on 127.0.0.1 (0 = pick a free one)");
  app.add_option("--require-bearer", bearer, "reject requests lacking this bearer token");
  CLI11_PARSE(app, argc, argv);

  try {
    wdaug::mock::MockWireServer server({port, bearer});
    std::cout << "mock server listening on " << server.base_url() << "\n"
              << "routes: POST /v1/chat/completions, /v1/completions, /v1/embeddings, /translate\n"
              << std::flush;
    for (;;) {
      std::this_thread::sleep_for(std::chrono::hours(1));
    }
  } catch (const std::exception& e) {
    std::cerr << "wdaug-mock: " << e.what() << "\n";
    return 1;
  }
}
