#include "ytcc/ingest.hpp"

#include <fstream>
#include <set>
#include <thread>

#include <json.hpp>

#include "ytcc/errors.hpp"

#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#endif

namespace ytcc {

namespace {

constexpr const char* kApiHost = "https://www.googleapis.com";
constexpr const char* kThreadsPath = "/youtube/v3/commentThreads";
constexpr int kMaxRetries = 5;

#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
class HttpsTransport final : public HttpTransport {
public:
    HttpResponse get(const std::string& path, const std::map<std::string, std::string>& query) override {
        httplib::Client client(kApiHost);
        client.set_connection_timeout(30);
        client.set_read_timeout(60);
        httplib::Params params(query.begin(), query.end());
        auto result = client.Get(path, params, httplib::Headers{});
        if (!result) {
            throw IoError("network error: " + httplib::to_string(result.error()));
        }
        return {result->status, result->body};
    }
};
#endif

struct ApiError {
    int status = 0;
    std::string reason;  // first errors[].reason, e.g. "quotaExceeded"
    std::string message;
};

ApiError parse_error(const HttpResponse& response) {
    ApiError err;
    err.status = response.status;
    try {
        const auto j = nlohmann::json::parse(response.body);
        const auto& error = j.at("error");
        err.message = error.value("message", "");
        if (error.contains("errors") && !error["errors"].empty()) {
            err.reason = error["errors"][0].value("reason", "");
        }
    } catch (const nlohmann::json::exception&) {
        err.message = response.body.substr(0, 200);
    }
    return err;
}

bool is_retryable(const ApiError& err) {
    return err.status == 429 || err.reason == "quotaExceeded" || err.reason == "rateLimitExceeded" ||
           err.reason == "userRateLimitExceeded" || err.status >= 500;
}

bool is_credential_failure(const ApiError& err) {
    return err.status == 401 || (err.status == 403 && !is_retryable(err));
}

bool is_video_failure(const ApiError& err) {
    return err.status == 404 || err.reason == "videoNotFound" || err.reason == "commentsDisabled" ||
           err.reason == "forbidden";
}

}  // namespace

std::unique_ptr<HttpTransport> make_https_transport() {
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
    return std::make_unique<HttpsTransport>();
#else
    throw IoError("built without TLS support; live fetch unavailable");
#endif
}

FetchResult fetch_comments(FetchConfig config, HttpTransport& transport,
                           const std::function<void(std::chrono::milliseconds)>& sleeper) {
    if (config.api_key.empty()) throw CredentialError("api_key is empty");
    if (config.page_size < 1 || config.page_size > 100) {
        throw SchemaError("page_size must lie in [1, 100]");
    }
    if (config.max_comments_per_video < 1) {
        throw SchemaError("max_comments_per_video must be positive");
    }
    const auto wait = sleeper ? sleeper : [](std::chrono::milliseconds d) {
        std::this_thread::sleep_for(d);
    };

    FetchResult result;
    for (const std::string& video_id : config.video_ids) {
        std::string page_token;
        std::set<std::string> seen_tokens;
        int fetched = 0;
        try {
            while (fetched < config.max_comments_per_video) {
                const int remaining = config.max_comments_per_video - fetched;
                std::map<std::string, std::string> query = {
                    {"part", "snippet"},
                    {"videoId", video_id},
                    {"maxResults", std::to_string(std::min(config.page_size, remaining))},
                    {"key", config.api_key},
                };
                if (!page_token.empty()) query["pageToken"] = page_token;

                HttpResponse response;
                int attempt = 0;
                for (;;) {
                    response = transport.get(kThreadsPath, query);
                    ++result.requests_made;
                    if (response.status == 200) break;
                    const ApiError err = parse_error(response);
                    if (is_retryable(err) && attempt < kMaxRetries) {
                        wait(std::chrono::milliseconds(1000) * (1 << attempt));
                        ++attempt;
                        continue;
                    }
                    if (is_credential_failure(err)) {
                        throw CredentialError("authentication failed (" +
                                              std::to_string(err.status) + "): " + err.message);
                    }
                    if (is_retryable(err)) {
                        throw QuotaError("rate/quota error after " + std::to_string(kMaxRetries) +
                                         " retries: " + err.message);
                    }
                    if (is_video_failure(err)) {
                        throw Error("video unavailable: " + err.message);
                    }
                    throw Error("API error (" + std::to_string(err.status) + "): " + err.message);
                }

                nlohmann::json j;
                try {
                    j = nlohmann::json::parse(response.body);
                } catch (const nlohmann::json::exception& e) {
                    throw ParseError(std::string("bad API payload: ") + e.what());
                }
                for (const auto& item : j.value("items", nlohmann::json::array())) {
                    if (fetched >= config.max_comments_per_video) break;
                    const auto& top = item.at("snippet").at("topLevelComment");
                    Comment comment;
                    comment.id = top.at("id").get<std::string>();
                    const auto& snippet = top.at("snippet");
                    // textOriginal is the author's exact text; stored unmodified
                    comment.text = snippet.contains("textOriginal")
                                       ? snippet.at("textOriginal").get<std::string>()
                                       : snippet.at("textDisplay").get<std::string>();
                    comment.video_id = snippet.value("videoId", video_id);
                    result.comments.push_back(std::move(comment));
                    ++fetched;
                }
                if (!j.contains("nextPageToken")) break;
                page_token = j["nextPageToken"].get<std::string>();
                if (!seen_tokens.insert(page_token).second) {
                    throw Error("pagination loop: token repeated");
                }
            }
        } catch (const CredentialError&) {
            throw;  // credentials are wrong for every video; abort the run
        } catch (const Error& e) {
            result.warnings.push_back({video_id, e.what()});
        }
    }
    return result;
}

void save_raw(const std::vector<Comment>& comments, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    for (const Comment& comment : comments) {
        nlohmann::json j;
        j["id"] = comment.id;
        j["video_id"] = comment.video_id ? nlohmann::json(*comment.video_id) : nlohmann::json(nullptr);
        j["text"] = comment.text;
        out << j.dump() << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace ytcc
