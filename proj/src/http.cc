// Copyright 2026 The varbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "varbench/http.h"

#include <stdexcept>

#include "httplib.h"

namespace varbench::http {

Url parse_url(std::string_view url) {
  size_t scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) {
    throw std::invalid_argument("not an absolute URL: " + std::string(url));
  }
  std::string_view scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw std::invalid_argument("unsupported URL scheme: " + std::string(scheme));
  }
  size_t host_begin = scheme_end + 3;
  size_t path_begin = url.find('/', host_begin);
  Url out;
  if (path_begin == std::string_view::npos) {
    out.origin = std::string(url);
  } else {
    out.origin = std::string(url.substr(0, path_begin));
    out.path = std::string(url.substr(path_begin));
    while (!out.path.empty() && out.path.back() == '/') out.path.pop_back();
  }
  if (out.origin.size() == host_begin) throw std::invalid_argument("URL has no host");
  return out;
}

PostResult post_json(const Url& base, const std::string& path, const std::string& body,
                     const std::map<std::string, std::string>& headers,
                     std::chrono::milliseconds timeout) {
  PostResult result;
  try {
    httplib::Client client(base.origin);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    httplib::Headers h;
    for (const auto& [k, v] : headers) h.emplace(k, v);
    auto res = client.Post(base.path + path, h, body, "application/json");
    if (!res) {
      result.error = "transport: " + httplib::to_string(res.error());
      return result;
    }
    result.response = Response{res->status, res->body};
  } catch (const std::exception& e) {
    result.error = std::string("transport: ") + e.what();
  }
  return result;
}

}  // namespace varbench::http
