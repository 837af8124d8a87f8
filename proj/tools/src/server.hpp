#ifndef RULEKIT_TOOLS_SERVER_HPP
#define RULEKIT_TOOLS_SERVER_HPP

#include <memory>
#include <string>

#include "api.hpp"

namespace rulekit::cli {

// HTTP front for the api_* handlers.
class ApiServer {
  public:
    explicit ApiServer(RuleStore store);
    ~ApiServer();
    ApiServer(const ApiServer&) = delete;
    ApiServer& operator=(const ApiServer&) = delete;

    // False when the port cannot be bound.
    bool bind(const std::string& host, int port);
    // Binds an ephemeral port and returns it, or -1.
    int bind_any(const std::string& host);
    // Blocks until stop().
    bool listen();
    void stop();
    void wait_until_ready() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace rulekit::cli

#endif
