#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numeric>

#include "stylofluct/text_pipeline.hpp"

using namespace stylofluct;

namespace {

TokenStream stream_of(std::vector<std::string> tokens) {
    TokenStream s;
    s.tokens = std::move(tokens);
    s.raw_length = s.tokens.size();
    return s;
}

std::string join(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

}  // namespace

TEST_CASE("tokenize basic examples") {
    CHECK(tokenize("In the middle of the road").tokens ==
          std::vector<std::string>{"in", "the", "middle", "of", "the", "road"});
    CHECK(tokenize("").tokens.empty());
    CHECK(tokenize("don't stop\xE2\x80\x94now!").tokens ==
          std::vector<std::string>{"don't", "stop", "now"});
}

TEST_CASE("tokenize edge cases") {
    // leading/trailing apostrophes are not part of a token
    CHECK(tokenize("'tis o'clock rock'").tokens ==
          std::vector<std::string>{"tis", "o'clock", "rock"});
    CHECK(tokenize("a1b2c3").tokens == std::vector<std::string>{"a", "b", "c"});
    CHECK(tokenize("42 1984").tokens.empty());
    CHECK(tokenize("Hello, WORLD").tokens == std::vector<std::string>{"hello", "world"});
}

TEST_CASE("tokenize is idempotent over its own joined output") {
    const std::string text = "It's a long-established FACT: readers, 42 of them, agree!";
    const auto once = tokenize(text);
    const auto twice = tokenize(join(once.tokens));
    CHECK(once.tokens == twice.tokens);
}

TEST_CASE("remove_stopwords") {
    StopwordList stops{{"in", "the", "of"}};
    const auto out = remove_stopwords(stream_of({"in", "the", "middle", "of", "the", "road"}), stops);
    CHECK(out.tokens == std::vector<std::string>{"middle", "road"});

    const auto identity = remove_stopwords(stream_of({"middle", "road"}), StopwordList{});
    CHECK(identity.tokens == std::vector<std::string>{"middle", "road"});

    StopwordList table1{{"there", "was", "a"}};
    CHECK(remove_stopwords(stream_of({"there", "was", "a", "stone"}), table1).tokens ==
          std::vector<std::string>{"stone"});
}

TEST_CASE("lemmatize") {
    LemmaDictionary dict;
    dict.mapping["retinas"] = "retina";
    dict.mapping["fatigued"] = "fatigue";
    CHECK(lemmatize(stream_of({"retinas"}), dict).tokens == std::vector<std::string>{"retina"});
    CHECK(lemmatize(stream_of({"fatigued"}), dict).tokens == std::vector<std::string>{"fatigue"});
    CHECK(lemmatize(stream_of({"stone"}), LemmaDictionary{}).tokens ==
          std::vector<std::string>{"stone"});
}

TEST_CASE("remove_stopwords and lemmatize commute when no stopword is a dict key") {
    StopwordList stops{{"the", "a"}};
    LemmaDictionary dict;
    dict.mapping["stones"] = "stone";
    const auto s = stream_of({"the", "stones", "a", "road"});
    CHECK(remove_stopwords(lemmatize(s, dict), stops).tokens ==
          lemmatize(remove_stopwords(s, stops), dict).tokens);
}

TEST_CASE("window_split") {
    TokenStream ten = stream_of({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"});

    SUBCASE("10 tokens W=3 gives 3 windows, remainder dropped") {
        const auto windows = window_split(ten, WindowSpec{3});
        REQUIRE(windows.size() == 3);
        std::size_t total = 0;
        for (const auto& w : windows) {
            CHECK(w.size() == 3);
            total += w.size();
        }
        CHECK(total == 9);
        CHECK(windows[2].tokens == std::vector<std::string>{"g", "h", "i"});
    }

    SUBCASE("exact fit") {
        TokenStream six = stream_of({"a", "b", "c", "d", "e", "f"});
        const auto windows = window_split(six, WindowSpec{6});
        REQUIRE(windows.size() == 1);
        CHECK(windows[0].tokens == six.tokens);
    }

    SUBCASE("too short errors") {
        TokenStream five = stream_of({"a", "b", "c", "d", "e"});
        CHECK_THROWS_AS(window_split(five, WindowSpec{6}), std::invalid_argument);
        CHECK_THROWS_AS(window_split(five, WindowSpec{1}), std::invalid_argument);
    }

    SUBCASE("tokens preserve input order and positions") {
        const auto windows = window_split(ten, WindowSpec{2});
        std::vector<std::string> flattened;
        for (const auto& w : windows) {
            flattened.insert(flattened.end(), w.tokens.begin(), w.tokens.end());
        }
        CHECK(flattened == ten.tokens);
    }
}

TEST_CASE("stopword and lemma file loading") {
    const std::string dir = "test_pipeline_files";
    std::filesystem::create_directories(dir);
    {
        std::ofstream s(dir + "/stops.txt");
        s << "# comment\nthe\nof\n\nin\n";
        std::ofstream l(dir + "/lemmas.tsv");
        l << "retinas\tretina\nfatigued\tfatigue\n";
    }
    const auto stops = load_stopword_file(dir + "/stops.txt");
    CHECK(stops.words.size() == 3);
    CHECK(stops.contains("the"));
    CHECK_FALSE(stops.contains("# comment"));

    const auto dict = load_lemma_file(dir + "/lemmas.tsv");
    CHECK(dict.canonical("retinas") == "retina");
    CHECK(dict.canonical("unknown") == "unknown");

    {
        std::ofstream bad(dir + "/bad.tsv");
        bad << "no-tab-here\n";
    }
    CHECK_THROWS_AS(load_lemma_file(dir + "/bad.tsv"), std::runtime_error);
    std::filesystem::remove_all(dir);
}
