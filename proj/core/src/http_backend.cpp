#include <nlohmann/json.hpp>

// cpp-httplib pulls in OpenSSL support only when asked; plain HTTP is all the
// generic adapter speaks. TLS termination belongs to the deployment proxy.
#include <httplib.h>

#include "addrparse/infer.hpp"

namespace addrparse {

namespace {

struct ParsedEndpoint {
    std::string base;  // scheme://host:port
    std::string path;  // /v1/complete
};

ParsedEndpoint split_endpoint(const std::string& endpoint) {
    const std::size_t scheme = endpoint.find("://");
    const std::size_t path_start =
        endpoint.find('/', scheme == std::string::npos ? 0 : scheme + 3);
    if (path_start == std::string::npos) return {endpoint, "/"};
    return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

}  // namespace

HttpBackend::HttpBackend(std::string endpoint, std::string auth_token)
    : endpoint_(std::move(endpoint)), auth_token_(std::move(auth_token)) {
    if (endpoint_.empty()) {
        throw BackendUnavailableError("http backend requires an endpoint URL");
    }
}

std::string HttpBackend::complete(const std::string& prompt,
                                  const DecodingConfig& config) {
    const ParsedEndpoint target = split_endpoint(endpoint_);

    nlohmann::json body = {
        {"prompt", prompt},
        {"max_tokens", config.max_tokens},
        {"temperature", config.temperature},
        {"top_p", config.top_p},
        {"top_k", config.top_k},
        {"stop", config.stop_sequences},
    };
    if (config.seed) body["seed"] = *config.seed;

    httplib::Client client(target.base);
    client.set_connection_timeout(10, 0);
    client.set_read_timeout(120, 0);
    httplib::Headers headers;
    if (!auth_token_.empty()) {
        headers.emplace("Authorization", "Bearer " + auth_token_);
    }

    const auto result =
        client.Post(target.path, headers, body.dump(), "application/json");
    if (!result) {
        throw BackendUnavailableError("http backend unreachable at " + endpoint_ +
                                      ": " + httplib::to_string(result.error()));
    }
    if (result->status != 200) {
        throw BackendUnavailableError("http backend returned status " +
                                      std::to_string(result->status));
    }
    nlohmann::json reply = nlohmann::json::parse(result->body, nullptr, false);
    if (reply.is_discarded() || !reply.contains("text") || !reply["text"].is_string()) {
        throw BackendUnavailableError(
            "http backend reply is not a JSON object with a \"text\" string");
    }
    return reply["text"].get<std::string>();
}

}  // namespace addrparse
