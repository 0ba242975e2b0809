#include "qcusp/words.hpp"

#include <set>
#include <stdexcept>

namespace qcusp::rewrite {

Alphabet::Alphabet(std::vector<std::string> n) : names(std::move(n)) {
    std::set<std::string> seen;
    for (auto& s : names) {
        if (s.empty() || s == "1") throw std::invalid_argument("bad symbol name");
        if (!seen.insert(s).second) throw std::invalid_argument("duplicate symbol " + s);
    }
    if (names.size() > 100) throw std::invalid_argument("alphabet too large");
}

int Alphabet::index(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names[i] == name) return i;
    return -1;
}

std::string Alphabet::print(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (char c : w) out += name(static_cast<unsigned char>(c));
    return out;
}

Word Alphabet::parse_word(const std::string& s) const {
    if (s == "1") return Word();
    Word w;
    for (char c : s) {
        int i = index(std::string(1, c));
        if (i < 0) throw std::invalid_argument(std::string("unknown symbol '") + c + "'");
        w.push_back(static_cast<char>(i));
    }
    return w;
}

}  // namespace qcusp::rewrite
