#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace marsops {

// Request/response contract for an external text-generation backend. The
// benchmark never requires it; the deterministic mock stands in for tests.
struct TextGenRequest {
    std::string system_role;            // role title of the speaking agent
    std::vector<std::string> context;   // retrieval context sequence
    std::string prompt_fragment;        // scenario seed text plus the cue
    std::uint64_t seed = 0;
};

struct TextGenResponse {
    std::string text;
};

class TextGenerator {
public:
    virtual ~TextGenerator() = default;
    virtual TextGenResponse generate(const TextGenRequest& req) = 0;
};

// Deterministic stand-in: assembles a reply from a hash of the request.
class MockTextGenerator : public TextGenerator {
public:
    TextGenResponse generate(const TextGenRequest& req) override;
};

// POSTs the request as JSON to an HTTP endpoint. Endpoint and credentials
// come from the environment (MARSOPS_TEXTGEN_URL, MARSOPS_TEXTGEN_TOKEN)
// unless given explicitly.
class HttpTextGenerator : public TextGenerator {
public:
    HttpTextGenerator();  // from environment
    HttpTextGenerator(std::string host, int port, std::string path, std::string token = "");

    TextGenResponse generate(const TextGenRequest& req) override;

private:
    std::string host_;
    int port_ = 0;
    std::string path_;
    std::string token_;
};

}  // namespace marsops
