#include "socio/bleach.hpp"

#include <cstdio>

#include "socio/unicode.hpp"

namespace socio::features {

namespace {

bool is_english_vowel(char32_t cp) {
    const char32_t c = uni::to_lower(cp);
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

}  // namespace

std::string bleach_token(const std::string& token, std::uint64_t freq, bool bucket_freq) {
    const std::vector<char32_t> cps = uni::decode_utf8(token);

    std::string shape;
    std::string cv;
    bool all_alnum = !cps.empty();
    for (char32_t cp : cps) {
        if (uni::is_letter(cp)) {
            shape.push_back(uni::is_upper(cp) ? 'X' : 'x');
            cv.push_back(is_english_vowel(cp) ? 'V' : 'C');
        } else {
            uni::append_utf8(shape, cp);
            uni::append_utf8(cv, cp);
        }
        if (!uni::is_alnum(cp)) all_alnum = false;
    }

    char len[8];
    std::snprintf(len, sizeof(len), "%02zu", cps.size());

    std::uint64_t freq_field = freq;
    if (bucket_freq && freq > 0) {
        freq_field = 0;
        for (std::uint64_t f = freq; f > 0; f /= 10) ++freq_field;  // digits(freq)
    }

    std::string out = shape;
    out.push_back('_');
    out += len;
    out.push_back('_');
    out += all_alnum ? "True" : "False";
    out.push_back('_');
    out += cv;
    out.push_back('_');
    out += std::to_string(freq_field);
    return out;
}

}  // namespace socio::features
