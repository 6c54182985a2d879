#include "marsops/protocols.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace marsops {

std::string to_string(ProtocolMode m) {
    return m == ProtocolMode::Off ? "off" : "hetero";
}

ProtocolMode protocol_mode_from_string(const std::string& s) {
    if (s == "off") return ProtocolMode::Off;
    if (s == "hetero") return ProtocolMode::Hetero;
    throw ProtocolError("bad protocol mode: " + s);
}

LexiconSet::LexiconSet(std::vector<Lexicon> lexicons) : lexicons_(std::move(lexicons)) {
    if (lexicons_.empty()) throw ProtocolError("empty lexicon set");

    std::vector<std::string> keys;
    for (const auto& [concept_key, term] : lexicons_.front().term_for_concept)
        keys.push_back(concept_key);

    for (std::size_t i = 0; i < lexicons_.size(); ++i) {
        const Lexicon& lex = lexicons_[i];
        if (!by_group_.emplace(lex.group, i).second)
            throw ProtocolError("duplicate lexicon group: " + lex.group);

        std::vector<std::string> got;
        std::set<std::string> surfaces;
        for (const auto& [concept_key, term] : lex.term_for_concept) {
            got.push_back(concept_key);
            if (term.empty()) throw ProtocolError("empty surface term in " + lex.group);
            if (!surfaces.insert(term).second)
                throw ProtocolError("duplicate surface term in " + lex.group + ": " + term);
        }
        if (got != keys)
            throw ProtocolError("lexicon " + lex.group + " does not share the concept key set");
    }
}

bool LexiconSet::has_group(const std::string& group) const { return by_group_.count(group) != 0; }

const Lexicon& LexiconSet::lexicon(const std::string& group) const {
    auto it = by_group_.find(group);
    if (it == by_group_.end()) throw ProtocolError("no lexicon for group: " + group);
    return lexicons_[it->second];
}

std::vector<std::string> LexiconSet::concept_keys() const {
    std::vector<std::string> keys;
    for (const auto& [concept_key, term] : lexicons_.front().term_for_concept)
        keys.push_back(concept_key);
    return keys;
}

namespace {

bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

bool phrase_at(const std::string& text, std::size_t pos, const std::string& phrase) {
    if (text.compare(pos, phrase.size(), phrase) != 0) return false;
    std::size_t end = pos + phrase.size();
    bool start_ok = pos == 0 || !word_char(text[pos - 1]);
    bool end_ok = end == text.size() || !word_char(text[end]);
    return start_ok && end_ok;
}

struct Candidate {
    std::string term;
    std::string replacement;  // empty: pass through, flag as unmapped
};

}  // namespace

std::pair<std::string, TranslationRecord> translate(const std::string& msg, const Lexicon& src,
                                                    const Lexicon& dst, const LexiconSet& known) {
    if (src.group == dst.group)
        throw ProtocolError("translation within one group: " + src.group);

    // Longest-match candidates: source terms map, other recognizable
    // dialect terms pass through flagged.
    std::vector<Candidate> candidates;
    for (const auto& [concept_key, term] : src.term_for_concept)
        candidates.push_back({term, dst.term_for_concept.at(concept_key)});
    std::set<std::string> src_terms;
    for (const auto& [concept_key, term] : src.term_for_concept) src_terms.insert(term);
    for (const Lexicon& lex : known.all()) {
        if (lex.group == src.group) continue;
        for (const auto& [concept_key, term] : lex.term_for_concept)
            if (!src_terms.count(term)) candidates.push_back({term, ""});
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.term.size() != b.term.size()) return a.term.size() > b.term.size();
        return a.term < b.term;
    });

    TranslationRecord rec;
    rec.source_group = src.group;
    rec.target_group = dst.group;
    rec.original = msg;

    std::string out;
    std::size_t i = 0;
    while (i < msg.size()) {
        bool at_word_start = word_char(msg[i]) && (i == 0 || !word_char(msg[i - 1]));
        if (at_word_start) {
            const Candidate* hit = nullptr;
            for (const Candidate& c : candidates) {
                if (phrase_at(msg, i, c.term)) {
                    hit = &c;
                    break;
                }
            }
            if (hit) {
                if (hit->replacement.empty()) {
                    rec.unmapped.push_back(hit->term);
                    out += hit->term;
                } else {
                    rec.mapped_terms.emplace_back(hit->term, hit->replacement);
                    out += hit->replacement;
                }
                i += hit->term.size();
                continue;
            }
        }
        out += msg[i++];
    }

    rec.translated = out;
    return {std::move(out), std::move(rec)};
}

LexiconSet load_lexicon_override(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProtocolError("cannot open lexicon file: " + path);

    std::map<std::string, Lexicon> by_group;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string concept_key, group, term;
        if (!std::getline(row, concept_key, ',') || !std::getline(row, group, ',') ||
            !std::getline(row, term))
            throw ProtocolError("bad lexicon row: " + line);
        if (concept_key == "concept" && group == "group") continue;  // header
        Lexicon& lex = by_group[group];
        lex.group = group;
        lex.term_for_concept[concept_key] = term;
    }

    std::vector<Lexicon> lexicons;
    for (auto& [group, lex] : by_group) lexicons.push_back(std::move(lex));
    return LexiconSet(std::move(lexicons));
}

}  // namespace marsops
