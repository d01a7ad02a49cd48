#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ytcc/corpus.hpp"

namespace ytcc {

struct FetchConfig {
    std::string api_key;
    std::vector<std::string> video_ids;
    int max_comments_per_video = 1000;
    int page_size = 100;  // API bound [1, 100]
};

/// One commentThreads.list call, already reduced to what the client
/// needs.
struct HttpResponse {
    int status = 0;
    std::string body;
};

/// Transport seam: production uses HTTPS, tests replay recorded fixtures.
class HttpTransport {
public:
    virtual ~HttpTransport() = default;
    /// GET with query parameters; path is relative to the API root.
    virtual HttpResponse get(const std::string& path,
                             const std::map<std::string, std::string>& query) = 0;
};

/// Real transport for www.googleapis.com.
std::unique_ptr<HttpTransport> make_https_transport();

struct FetchWarning {
    std::string video_id;
    std::string message;
};

struct FetchResult {
    std::vector<Comment> comments;
    std::vector<FetchWarning> warnings;  // per-video failures; other videos proceed
    std::size_t requests_made = 0;
};

/// Fetches up to max_comments_per_video top-level comments per video via
/// commentThreads.list, following page tokens. Retryable errors (quota,
/// rate) back off exponentially: base 1s, factor 2, at most 5 retries.
/// Auth failures throw CredentialError; unknown videos produce a warning.
/// `sleeper` injects the backoff wait (tests pass a recorder).
FetchResult fetch_comments(FetchConfig config, HttpTransport& transport,
                           const std::function<void(std::chrono::milliseconds)>& sleeper = {});

/// JSONL without a label field; loadable by the corpus loaders once
/// labels are attached. Text is written byte-identical to the API
/// payload.
void save_raw(const std::vector<Comment>& comments, const std::string& path);

}  // namespace ytcc
