#include <cstdio>
#include <fstream>
#include <set>

#include "doctest.h"
#include "marsops/protocols.hpp"
#include "marsops/rng.hpp"

using namespace marsops;

TEST_CASE("built-in lexicons cover the shortcut groups over one concept set") {
    const LexiconSet& set = default_lexicons();
    for (const char* g : {"GEO", "AI", "BIO", "LAB", "COM", "LSS", "PWR", "ISRU", "AGRI", "MNT"})
        CHECK(set.has_group(g));
    CHECK(set.concept_keys().size() >= 20);

    const auto keys = set.concept_keys();
    for (const Lexicon& lex : set.all()) {
        std::vector<std::string> got;
        for (const auto& [concept_key, term] : lex.term_for_concept) got.push_back(concept_key);
        CHECK(got == keys);
    }
}

TEST_CASE("surface terms are globally distinct across dialects") {
    std::set<std::string> seen;
    for (const Lexicon& lex : default_lexicons().all())
        for (const auto& [concept_key, term] : lex.term_for_concept)
            CHECK_MESSAGE(seen.insert(term).second, "duplicate term: ", term);
}

TEST_CASE("the geology/autonomy pair maps the canonical example") {
    const LexiconSet& set = default_lexicons();
    CHECK(set.lexicon("GEO").term_for_concept.at("WATER_BEARING_MINERAL") == "hydrated silicates");
    CHECK(set.lexicon("AI").term_for_concept.at("WATER_BEARING_MINERAL") == "volatile signature");

    auto [text, rec] = translate("survey hydrated silicates ridge", set.lexicon("GEO"),
                                 set.lexicon("AI"));
    CHECK(text == "survey volatile signature ridge");
    CHECK(rec.translator == AgentId("COM_06"));
    REQUIRE(rec.mapped_terms.size() == 1);
    CHECK(rec.mapped_terms[0].first == "hydrated silicates");
    CHECK(rec.mapped_terms[0].second == "volatile signature");
    CHECK(rec.unmapped.empty());
}

TEST_CASE("messages without lexicon terms pass through unchanged") {
    const LexiconSet& set = default_lexicons();
    const std::string msg = "meet at the airlock in five minutes";
    auto [text, rec] = translate(msg, set.lexicon("GEO"), set.lexicon("AI"));
    CHECK(text == msg);
    CHECK(rec.mapped_terms.empty());
    CHECK(rec.unmapped.empty());
}

TEST_CASE("jargon from a third dialect passes through flagged") {
    const LexiconSet& set = default_lexicons();
    // An LSS term inside a GEO->AI message is recognizable but unmappable.
    auto [text, rec] = translate("note the scrubber load spike before egress", set.lexicon("GEO"),
                                 set.lexicon("AI"));
    CHECK(text == "note the scrubber load spike before egress");
    REQUIRE(rec.unmapped.size() == 1);
    CHECK(rec.unmapped[0] == "scrubber load spike");
}

TEST_CASE("replacement is whole-word: substrings and prefixes do not match") {
    const LexiconSet& set = default_lexicons();
    auto [text, rec] = translate("rehydrated silicatesque samples", set.lexicon("GEO"),
                                 set.lexicon("AI"));
    CHECK(text == "rehydrated silicatesque samples");
    CHECK(rec.mapped_terms.empty());
}

TEST_CASE("same-group translation is rejected") {
    const LexiconSet& set = default_lexicons();
    CHECK_THROWS_AS(translate("x", set.lexicon("GEO"), set.lexicon("GEO")), ProtocolError);
}

TEST_CASE("property: fully mapped messages round-trip exactly") {
    const LexiconSet& set = default_lexicons();
    const Lexicon& geo = set.lexicon("GEO");
    const Lexicon& ai = set.lexicon("AI");

    std::vector<std::string> geo_terms;
    for (const auto& [concept_key, term] : geo.term_for_concept) geo_terms.push_back(term);

    Substream rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        std::string msg;
        const int words = 1 + static_cast<int>(rng.next_below(8));
        for (int w = 0; w < words; ++w) {
            if (!msg.empty()) msg += rng.bernoulli(0.3) ? ", " : " ";
            msg += geo_terms[rng.next_below(geo_terms.size())];
        }
        auto [forward, rec1] = translate(msg, geo, ai);
        auto [back, rec2] = translate(forward, ai, geo);
        CHECK(back == msg);
        CHECK(rec1.mapped_terms.size() == rec2.mapped_terms.size());
        CHECK(rec1.unmapped.empty());
        CHECK(rec2.unmapped.empty());
    }
}

TEST_CASE("lexicon override file: concept,group,term rows") {
    const std::string path = "lexicon_override_test.csv";
    {
        std::ofstream out(path);
        out << "concept,group,term\n";
        out << "ALPHA,G1,red stone\n";
        out << "ALPHA,G2,blue stone\n";
        out << "BETA,G1,long route\n";
        out << "BETA,G2,short route\n";
    }
    LexiconSet set = load_lexicon_override(path);
    CHECK(set.all().size() == 2);
    auto [text, rec] = translate("take the long route to the red stone", set.lexicon("G1"),
                                 set.lexicon("G2"), set);
    CHECK(text == "take the short route to the blue stone");
    std::remove(path.c_str());

    // Mismatched concept key sets are rejected.
    {
        std::ofstream out(path);
        out << "ALPHA,G1,red stone\nBETA,G2,short route\n";
    }
    CHECK_THROWS_AS(load_lexicon_override(path), ProtocolError);
    std::remove(path.c_str());
}
