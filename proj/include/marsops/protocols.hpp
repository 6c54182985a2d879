#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "marsops/roster.hpp"

namespace marsops {

enum class ProtocolMode { Off, Hetero };

std::string to_string(ProtocolMode m);
ProtocolMode protocol_mode_from_string(const std::string& s);

// A group's technical dialect: one surface term per canonical concept.
// Every lexicon in a set covers the identical concept key set.
struct Lexicon {
    std::string group;
    std::map<std::string, std::string> term_for_concept;
};

class LexiconSet {
public:
    explicit LexiconSet(std::vector<Lexicon> lexicons);

    bool has_group(const std::string& group) const;
    const Lexicon& lexicon(const std::string& group) const;
    const std::vector<Lexicon>& all() const { return lexicons_; }
    std::vector<std::string> concept_keys() const;

private:
    std::vector<Lexicon> lexicons_;
    std::map<std::string, std::size_t> by_group_;
};

struct TranslationRecord {
    std::string source_group;
    std::string target_group;
    std::string original;
    std::string translated;
    std::vector<std::pair<std::string, std::string>> mapped_terms;
    std::vector<std::string> unmapped;  // recognizable jargon with no source mapping
    AgentId translator = "COM_06";
};

class ProtocolError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Built-in dialects for the shortcut-whitelist groups plus the clinical
// groups, 22 shared concepts each. The vocabulary is stylized rather than
// field-sourced; override via load_lexicon_override for real corpora.
const LexiconSet& default_lexicons();

// Rewrites src-dialect surface terms into the dst dialect. Replacement is
// longest-match, left-to-right, case-sensitive, on whole-word boundaries.
// Terms recognizable from other dialects pass through verbatim and are
// flagged in the record. Throws on src.group == dst.group.
std::pair<std::string, TranslationRecord> translate(const std::string& msg, const Lexicon& src,
                                                    const Lexicon& dst,
                                                    const LexiconSet& known = default_lexicons());

// Override file: CSV rows "concept,group,surface term" (header optional).
LexiconSet load_lexicon_override(const std::string& path);

}  // namespace marsops
