#include "stressd/textprep.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <stdexcept>

namespace stressd {

namespace {

struct Decoded {
    char32_t cp;
    std::size_t len;
};

// Minimal UTF-8 decoder. Invalid or overlong sequences yield U+FFFD with
// length 1 so every byte is consumed exactly once.
Decoded decode(std::string_view s, std::size_t i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) return {b0, 1};
    auto cont = [&](std::size_t k) {
        return k < s.size() && (static_cast<unsigned char>(s[k]) & 0xC0) == 0x80;
    };
    auto tail = [&](std::size_t k) { return static_cast<char32_t>(s[k] & 0x3F); };
    if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
        const char32_t cp = ((b0 & 0x1FU) << 6) | tail(i + 1);
        if (cp >= 0x80) return {cp, 2};
    } else if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
        const char32_t cp = ((b0 & 0x0FU) << 12) | (tail(i + 1) << 6) | tail(i + 2);
        if (cp >= 0x800 && !(cp >= 0xD800 && cp <= 0xDFFF)) return {cp, 3};
    } else if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
        const char32_t cp =
            ((b0 & 0x07U) << 18) | (tail(i + 1) << 12) | (tail(i + 2) << 6) | tail(i + 3);
        if (cp >= 0x10000 && cp <= 0x10FFFF) return {cp, 4};
    }
    return {0xFFFD, 1};
}

void append_cp(std::string& out, char32_t c) {
    if (c < 0x80) {
        out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (c >> 6)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (c >> 12)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (c >> 18)));
        out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
}

// Letter/digit classification over the scripts that show up in social-media
// English. Fixed table, independent of locale, so output is identical on
// every platform.
bool is_alnum_cp(char32_t c) {
    if (c < 0x80) {
        return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    }
    if (c == 0x00D7 || c == 0x00F7) return false;  // multiply / divide signs
    struct Range {
        char32_t lo, hi;
    };
    static constexpr std::array<Range, 11> kRanges = {{
        {0x00C0, 0x00FF},  // Latin-1 letters
        {0x0100, 0x024F},  // Latin Extended-A/B
        {0x0370, 0x03FF},  // Greek
        {0x0400, 0x04FF},  // Cyrillic
        {0x0530, 0x058F},  // Armenian
        {0x05D0, 0x05EA},  // Hebrew
        {0x0620, 0x064A},  // Arabic
        {0x3040, 0x30FF},  // Hiragana / Katakana
        {0x4E00, 0x9FFF},  // CJK unified
        {0xAC00, 0xD7A3},  // Hangul
        {0x1E00, 0x1EFF},  // Latin extended additional
    }};
    for (const auto& r : kRanges) {
        if (c >= r.lo && c <= r.hi) return true;
    }
    return false;
}

char32_t to_lower_cp(char32_t c) {
    if (c >= 'A' && c <= 'Z') return c + 32;
    if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;       // Latin-1
    if (c >= 0x100 && c <= 0x137) return c | 1;                   // Latin ext-A pairs
    if (c >= 0x139 && c <= 0x148) return (c % 2 == 1) ? c + 1 : c;
    if (c >= 0x14A && c <= 0x177) return c | 1;
    if (c == 0x178) return 0xFF;
    if (c >= 0x179 && c <= 0x17E) return (c % 2 == 1) ? c + 1 : c;
    if (c >= 0x391 && c <= 0x3A9 && c != 0x3A2) return c + 32;    // Greek
    if (c >= 0x410 && c <= 0x42F) return c + 32;                  // Cyrillic
    if (c >= 0x400 && c <= 0x40F) return c + 80;
    return c;
}

bool is_ascii_ws(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_ascii_alnum(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// reddit usernames and subreddit names
bool is_entity_name_char(unsigned char c) { return is_ascii_alnum(c) || c == '_' || c == '-'; }

}  // namespace

std::string clean(std::string_view text) {
    std::string out;
    out.reserve(text.size());

    auto starts_ci = [&](std::size_t p, std::string_view pat) {
        if (p + pat.size() > text.size()) return false;
        for (std::size_t k = 0; k < pat.size(); ++k) {
            if (std::tolower(static_cast<unsigned char>(text[p + k])) != pat[k]) return false;
        }
        return true;
    };

    std::size_t i = 0;
    bool prev_alnum = false;  // span rules apply only at word boundaries
    while (i < text.size()) {
        const auto b = static_cast<unsigned char>(text[i]);
        if (!prev_alnum) {
            if (starts_ci(i, "http://") || starts_ci(i, "https://")) {
                while (i < text.size() && !is_ascii_ws(static_cast<unsigned char>(text[i]))) ++i;
                continue;
            }
            if (starts_ci(i, "www.") && i + 4 < text.size() &&
                !is_ascii_ws(static_cast<unsigned char>(text[i + 4]))) {
                while (i < text.size() && !is_ascii_ws(static_cast<unsigned char>(text[i]))) ++i;
                continue;
            }
            if ((b == 'u' || b == 'U' || b == 'r' || b == 'R') && i + 2 < text.size() &&
                text[i + 1] == '/' && is_entity_name_char(static_cast<unsigned char>(text[i + 2]))) {
                i += 2;
                while (i < text.size() && is_entity_name_char(static_cast<unsigned char>(text[i]))) ++i;
                continue;
            }
        }
        if (b == '&') {
            std::size_t j = i + 1;
            std::size_t n = 0;
            while (j < text.size() && n < 10 &&
                   (is_ascii_alnum(static_cast<unsigned char>(text[j])) || text[j] == '#')) {
                ++j;
                ++n;
            }
            if (n >= 1 && j < text.size() && text[j] == ';') {
                i = j + 1;
                prev_alnum = false;
                continue;
            }
        }
        const auto [cp, len] = decode(text, i);
        if (is_alnum_cp(cp)) {
            out.append(text.substr(i, len));
            prev_alnum = true;
        } else {
            out.push_back(' ');
            prev_alnum = false;
        }
        i += len;
    }
    return out;
}

TokenizedDoc tokenize(std::string_view text) {
    TokenizedDoc out;
    std::string cur;
    std::size_t cur_cps = 0;
    bool all_digits = true;

    auto flush = [&] {
        if (cur_cps >= 2 && !all_digits) out.push_back(cur);
        cur.clear();
        cur_cps = 0;
        all_digits = true;
    };

    std::size_t i = 0;
    while (i < text.size()) {
        const auto [cp, len] = decode(text, i);
        if (is_alnum_cp(cp)) {
            append_cp(cur, to_lower_cp(cp));
            ++cur_cps;
            if (cp < '0' || cp > '9') all_digits = false;
        } else {
            flush();
        }
        i += len;
    }
    flush();
    return out;
}

TokenizedDoc remove_stopwords(const TokenizedDoc& doc, const StopwordList& sw) {
    TokenizedDoc out;
    out.reserve(doc.size());
    for (const auto& t : doc) {
        if (!sw.contains(t)) out.push_back(t);
    }
    return out;
}

TokenizedDoc preprocess(std::string_view text, const StopwordList& sw) {
    return remove_stopwords(tokenize(clean(text)), sw);
}

namespace {

constexpr const char* kBuiltinStopwords[] = {
    "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "your", "yours",
    "yourself", "yourselves", "he", "him", "his", "himself", "she", "her", "hers", "herself",
    "it", "its", "itself", "they", "them", "their", "theirs", "themselves", "what", "which",
    "who", "whom", "this", "that", "these", "those", "am", "is", "are", "was", "were", "be",
    "been", "being", "have", "has", "had", "having", "do", "does", "did", "doing", "a", "an",
    "the", "and", "but", "if", "or", "because", "as", "until", "while", "of", "at", "by",
    "for", "with", "about", "against", "between", "into", "through", "during", "before",
    "after", "above", "below", "to", "from", "up", "down", "in", "out", "on", "off", "over",
    "under", "again", "further", "then", "once", "here", "there", "when", "where", "why",
    "how", "all", "any", "both", "each", "few", "more", "most", "other", "some", "such",
    "no", "nor", "not", "only", "own", "same", "so", "than", "too", "very", "s", "t", "can",
    "will", "just", "don", "should", "now", "d", "ll", "m", "o", "re", "ve", "y", "ain",
    "aren", "couldn", "didn", "doesn", "hadn", "hasn", "haven", "isn", "ma", "mightn",
    "mustn", "needn", "shan", "shouldn", "wasn", "weren", "won", "wouldn", "could", "would",
    "might", "must", "shall", "im", "ive", "id", "ill", "youre", "youve", "youll", "youd",
    "hes", "shes", "weve", "theyre", "theyve", "dont", "doesnt", "didnt", "isnt", "wasnt",
    "arent", "wont", "cant", "cannot", "thats",
};

}  // namespace

StopwordList StopwordList::builtin() {
    StopwordList sw;
    sw.source = "builtin";
    for (const char* w : kBuiltinStopwords) sw.words.insert(w);
    return sw;
}

StopwordList StopwordList::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword file: " + path);
    StopwordList sw;
    sw.source = path;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        std::size_t b = 0, e = line.size();
        while (b < e && is_ascii_ws(static_cast<unsigned char>(line[b]))) ++b;
        while (e > b && is_ascii_ws(static_cast<unsigned char>(line[e - 1]))) --e;
        if (b == e) continue;
        std::string w = line.substr(b, e - b);
        for (char& c : w) {
            if (is_ascii_ws(static_cast<unsigned char>(c)))
                throw std::runtime_error("stopword contains whitespace: '" + w + "' in " + path);
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
        sw.words.insert(std::move(w));
    }
    return sw;
}

}  // namespace stressd
