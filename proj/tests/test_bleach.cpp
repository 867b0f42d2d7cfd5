#include <doctest.h>

#include "socio/bleach.hpp"

using namespace socio::features;

TEST_CASE("bleached goldens from the published table") {
    CHECK(bleach_token("I", 2117) == "X_01_True_V_2117");
    CHECK(bleach_token("!", 21) == "!_01_False_!_21");
}

TEST_CASE("bleach field rules") {
    CHECK(bleach_token("Pizza", 617) == "Xxxxx_05_True_CVCCV_617");
    CHECK(bleach_token("really", 81) == "xxxxxx_06_True_CVVCCC_81");
    CHECK(bleach_token("dee-lish", 3) == "xxx-xxxx_08_False_CVV-CVCC_3");
    CHECK(bleach_token("uh42", 7) == "xx42_04_True_VC42_7");
    CHECK(bleach_token("?!", 0) == "?!_02_False_?!_0");
}

TEST_CASE("unseen tokens carry frequency zero") {
    TokenFrequencies freqs;
    freqs.add({"pizza", "pizza", "good"});
    CHECK(freqs.count("pizza") == 2);
    CHECK(freqs.count("never-seen") == 0);
    CHECK(bleach_token("never-seen", freqs.count("never-seen")).back() == '0');
}

TEST_CASE("frequency bucketing compresses counts to digit counts") {
    CHECK(bleach_token("I", 2117, true) == "X_01_True_V_4");
    CHECK(bleach_token("I", 9, true) == "X_01_True_V_1");
    CHECK(bleach_token("I", 10, true) == "X_01_True_V_2");
    CHECK(bleach_token("I", 0, true) == "X_01_True_V_0");
}

TEST_CASE("obfuscation invariant: no source letters leak") {
    // For all-letter tokens the output may contain only X/x/V/C, the
    // True/False literal, digits and separators.
    const std::vector<std::string> tokens = {"Pizza",  "really", "LOVE", "tasty",
                                             "Begrudgingly", "ok",     "A"};
    for (const auto& tok : tokens) {
        const std::string bleached = bleach_token(tok, 13);
        for (char c : bleached) {
            if (c >= 'a' && c <= 'z') {
                const bool allowed = c == 'x' || c == 'r' || c == 'u' || c == 'e';  // True/False
                CHECK(allowed);
            } else if (c >= 'A' && c <= 'Z') {
                const bool allowed = c == 'X' || c == 'V' || c == 'C' || c == 'T' || c == 'F';
                CHECK(allowed);
            }
        }
    }
}

TEST_CASE("unicode tokens keep non-letters verbatim and count codepoints") {
    // 4-codepoint token with an accented letter.
    CHECK(bleach_token("café", 5) == "xxxx_04_True_CVCC_5");
    // An emoji is a single non-alphanumeric codepoint.
    const std::string emoji = "\U0001F355";
    CHECK(bleach_token(emoji, 2) == emoji + "_01_False_" + emoji + "_2");
}
