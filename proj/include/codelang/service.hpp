#ifndef CODELANG_SERVICE_HPP
#define CODELANG_SERVICE_HPP

#include <charconv>
#include <memory>
#include <string>

#include <httplib.h>
#include <json.hpp>

#include "codelang/pipeline.hpp"

namespace codelang {

inline constexpr std::size_t kMaxRequestBytes = 240000;

namespace detail {

inline void send_error(httplib::Response& res, int status, const std::string& message) {
  res.status = status;
  res.set_content(nlohmann::json{{"error", message}}.dump(), "application/json");
}

}  // namespace detail

/// HTTP front end over one immutable model.
///   POST /classify  body: raw source text, optional ?top=N
///   GET  /health
/// The model must outlive the server.
inline std::unique_ptr<httplib::Server> make_server(const Model& model,
                                                    std::size_t max_body = kMaxRequestBytes) {
  auto server = std::make_unique<httplib::Server>();
  server->set_payload_max_length(max_body);

  server->Get("/health", [&model](const httplib::Request&, httplib::Response& res) {
    nlohmann::json j{{"status", "ok"},
                     {"languages", model.languages.size()},
                     {"productions", model.grammar.size()}};
    res.set_content(j.dump(), "application/json");
  });

  server->Post("/classify", [&model, max_body](const httplib::Request& req, httplib::Response& res) {
    if (req.is_multipart_form_data()) {
      detail::send_error(res, 400, "expected the raw source text as the request body");
      return;
    }
    if (req.body.size() > max_body) {
      detail::send_error(res, 413, "request body exceeds " + std::to_string(max_body) + " bytes");
      return;
    }
    std::size_t top = 0;
    if (req.has_param("top")) {
      const std::string v = req.get_param_value("top");
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), top);
      if (ec != std::errc() || ptr != v.data() + v.size()) {
        detail::send_error(res, 400, "top must be a nonnegative integer");
        return;
      }
    }
    res.set_content(classify_result_to_json(classify(model, req.body), top).dump(), "application/json");
  });

  server->set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      detail::send_error(res, 500, e.what());
    } catch (...) {
      detail::send_error(res, 500, "internal error");
    }
  });
  return server;
}

}  // namespace codelang

#endif  // CODELANG_SERVICE_HPP
