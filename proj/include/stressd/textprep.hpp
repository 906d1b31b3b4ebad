#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace stressd {

// Ordered lowercase tokens, after normalization.
using TokenizedDoc = std::vector<std::string>;

struct StopwordList {
    std::unordered_set<std::string> words;  // lowercase, no whitespace
    std::string source;                     // file path or "builtin"

    bool contains(const std::string& w) const { return words.count(w) != 0; }
    std::size_t size() const { return words.size(); }

    // ~175 common English words, pinned in data/stopwords_en.txt and mirrored
    // here so library users do not depend on the working directory.
    static StopwordList builtin();

    // One word per line, UTF-8, '#' starts a comment. Entries are trimmed and
    // ASCII-lowercased; entries containing whitespace are rejected.
    static StopwordList from_file(const std::string& path);

    static StopwordList none() { return StopwordList{{}, "none"}; }
};

// Noise removal. Deletes URL spans (http://, https://, www.-prefixed hosts),
// "u/<name>" and "r/<name>" references at word boundaries, and "&xxx;" HTML
// entities; every remaining non-alphanumeric codepoint becomes one space.
// Total on arbitrary UTF-8; invalid bytes are treated as non-alphanumeric.
std::string clean(std::string_view text);

// Lowercase, split into maximal alphanumeric runs, drop tokens of length 1
// (in codepoints) and tokens that are all ASCII digits.
TokenizedDoc tokenize(std::string_view text);

// Keeps tokens not in `sw`, preserving order.
TokenizedDoc remove_stopwords(const TokenizedDoc& doc, const StopwordList& sw);

// clean -> tokenize -> remove_stopwords, in that order.
TokenizedDoc preprocess(std::string_view text, const StopwordList& sw);

}  // namespace stressd
