#include "marsops/textgen.hpp"

#include <cstdlib>
#include <stdexcept>

#include "httplib.h"
#include "json.hpp"
#include "marsops/rng.hpp"

namespace marsops {

TextGenResponse MockTextGenerator::generate(const TextGenRequest& req) {
    std::uint64_t h = fnv1a64(req.system_role);
    for (const std::string& c : req.context) h = fnv1a64(c, h);
    h = fnv1a64(req.prompt_fragment, h) ^ req.seed;

    static const char* kOpeners[] = {"ack", "copy", "noted", "confirmed"};
    static const char* kClosers[] = {"proceeding", "standing by", "logged", "will report"};
    std::string text = std::string(kOpeners[h % 4]) + ": " + req.prompt_fragment;
    if (text.size() > 120) text.resize(120);
    text += " | " + std::string(kClosers[(h >> 8) % 4]);
    return {text};
}

HttpTextGenerator::HttpTextGenerator() {
    const char* url = std::getenv("MARSOPS_TEXTGEN_URL");
    if (!url) throw std::runtime_error("MARSOPS_TEXTGEN_URL is not set");
    std::string u(url);  // expected form: host:port/path
    auto slash = u.find('/');
    std::string hostport = slash == std::string::npos ? u : u.substr(0, slash);
    path_ = slash == std::string::npos ? "/generate" : u.substr(slash);
    auto colon = hostport.find(':');
    host_ = colon == std::string::npos ? hostport : hostport.substr(0, colon);
    port_ = colon == std::string::npos ? 80 : std::stoi(hostport.substr(colon + 1));
    if (const char* token = std::getenv("MARSOPS_TEXTGEN_TOKEN")) token_ = token;
}

HttpTextGenerator::HttpTextGenerator(std::string host, int port, std::string path,
                                     std::string token)
    : host_(std::move(host)), port_(port), path_(std::move(path)), token_(std::move(token)) {}

TextGenResponse HttpTextGenerator::generate(const TextGenRequest& req) {
    nlohmann::json body{{"system_role", req.system_role},
                        {"context", req.context},
                        {"prompt_fragment", req.prompt_fragment},
                        {"seed", req.seed}};
    httplib::Client client(host_, port_);
    client.set_connection_timeout(5);
    client.set_read_timeout(10);
    httplib::Headers headers;
    if (!token_.empty()) headers.emplace("Authorization", "Bearer " + token_);
    auto res = client.Post(path_, headers, body.dump(), "application/json");
    if (!res || res->status != 200)
        throw std::runtime_error("text generation request failed for " + host_ + path_);
    return {nlohmann::json::parse(res->body).at("text").get<std::string>()};
}

}  // namespace marsops
