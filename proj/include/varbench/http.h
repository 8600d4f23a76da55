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

#ifndef VARBENCH_HTTP_H_
#define VARBENCH_HTTP_H_

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace varbench::http {

struct Url {
  std::string origin;  // scheme://host[:port]
  std::string path;    // without trailing '/', may be empty
};

// Throws std::invalid_argument on anything but http:// or https:// URLs.
Url parse_url(std::string_view url);

struct Response {
  int status = 0;
  std::string body;
};

struct PostResult {
  std::optional<Response> response;  // absent on connection-level failure
  std::string error;                 // set when response is absent
};

PostResult post_json(const Url& base, const std::string& path, const std::string& body,
                     const std::map<std::string, std::string>& headers,
                     std::chrono::milliseconds timeout);

}  // namespace varbench::http

#endif  // VARBENCH_HTTP_H_
