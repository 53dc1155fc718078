#include "diagen/pipeline/refine_http.hpp"

#include <regex>

#include "httplib.h"

#include "diagen/errors.hpp"

namespace diagen::pipeline {

HttpRefinementClient::HttpRefinementClient(const std::string& endpoint) {
  static const std::regex form("http://([^/:]+)(?::([0-9]+))?(/.*)?");
  std::smatch m;
  if (!std::regex_match(endpoint, m, form))
    throw ConfigError("refinement endpoint must look like http://host[:port][/path]: " +
                      endpoint);
  host_ = m[1];
  if (m[2].matched) port_ = std::stoi(m[2]);
  if (m[3].matched && m[3].length() > 0) path_ = m[3];
}

std::string HttpRefinementClient::refine(const std::string& caption) {
  httplib::Client client(host_, port_);
  client.set_connection_timeout(2, 0);
  client.set_read_timeout(5, 0);
  auto res = client.Post(path_, caption, "text/plain");
  if (!res)
    throw ClientUnavailable("refinement endpoint unreachable: " + host_ + ":" +
                            std::to_string(port_));
  if (res->status != 200)
    throw ClientUnavailable("refinement endpoint returned status " +
                            std::to_string(res->status));
  return res->body;
}

}  // namespace diagen::pipeline
