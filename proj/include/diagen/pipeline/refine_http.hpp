#pragma once

#include <string>

#include "diagen/caption/compose.hpp"

namespace diagen::pipeline {

/// Caption rewriting over HTTP: POSTs the caption text (text/plain) to the
/// endpoint and takes a 200 response body as the rewrite. The endpoint looks
/// like "http://host[:port][/path]"; a malformed one raises ConfigError at
/// construction, transport failures raise ClientUnavailable per call (which
/// refine_caption turns into a keep-the-original fallback).
class HttpRefinementClient final : public caption::RefinementClient {
 public:
  explicit HttpRefinementClient(const std::string& endpoint);
  std::string refine(const std::string& caption) override;

 private:
  std::string host_;
  int port_ = 80;
  std::string path_ = "/";
};

}  // namespace diagen::pipeline
