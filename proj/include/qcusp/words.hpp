#pragma once

#include <string>
#include <vector>

namespace qcusp::rewrite {

// A word in a free monoid; each byte is an index into an Alphabet.
using Word = std::string;

struct Alphabet {
    std::vector<std::string> names;

    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> n);

    int size() const { return static_cast<int>(names.size()); }
    int index(const std::string& name) const;  // -1 if absent
    const std::string& name(int i) const { return names.at(i); }

    Word letter(int i) const { return Word(1, static_cast<char>(i)); }

    std::string print(const Word& w) const;       // "1" for the empty word
    Word parse_word(const std::string& s) const;  // wants single-char names

    bool operator==(const Alphabet& o) const { return names == o.names; }
};

}  // namespace qcusp::rewrite
