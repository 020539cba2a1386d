#include "jones2/word.hpp"

#include <cctype>
#include <sstream>

namespace jones2 {

std::string to_string(Gen g) {
    switch (g) {
        case Gen::Z1: return "z1";
        case Gen::Z2: return "z2";
        case Gen::Z3: return "z3";
        case Gen::Z4: return "z4";
        case Gen::Z5: return "z5";
        case Gen::Xi: return "xi";
    }
    return "?";
}

std::string to_string(Letter l) { return to_string(l.gen) + (l.inv ? "'" : ""); }

const std::array<Letter, 12>& all_letters() {
    static const std::array<Letter, 12> letters = {
        Letter{Gen::Z1, false}, Letter{Gen::Z2, false}, Letter{Gen::Z3, false},
        Letter{Gen::Z4, false}, Letter{Gen::Z5, false}, Letter{Gen::Xi, false},
        Letter{Gen::Z1, true},  Letter{Gen::Z2, true},  Letter{Gen::Z3, true},
        Letter{Gen::Z4, true},  Letter{Gen::Z5, true},  Letter{Gen::Xi, true},
    };
    return letters;
}

GroupWord::GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) { reduce(); }

void GroupWord::reduce() {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (const Letter& l : letters_) {
        if (!out.empty() && out.back().gen == l.gen && out.back().inv != l.inv)
            out.pop_back();
        else
            out.push_back(l);
    }
    letters_ = std::move(out);
}

GroupWord GroupWord::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    return GroupWord(std::move(out));
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), o.letters_.begin(), o.letters_.end());
    return GroupWord(std::move(out));
}

GroupWord GroupWord::conjugated_by(const GroupWord& w) const { return w * *this * w.inverse(); }

std::string GroupWord::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << " ";
        os << to_string(letters_[i]);
    }
    return os.str();
}

namespace {

const std::vector<Letter>& macro_body(const std::string& name) {
    static const std::vector<Letter> psi0 = [] {
        std::vector<Letter> w;
        for (int rep = 0; rep < 4; ++rep)
            for (Gen g : {Gen::Z1, Gen::Z2, Gen::Z1}) w.push_back({g, false});
        return w;
    }();
    static const std::vector<Letter> iota = [] {
        std::vector<Letter> w;
        for (Gen g : {Gen::Z1, Gen::Z2, Gen::Z3, Gen::Z4, Gen::Z5}) w.push_back({g, false});
        for (Gen g : {Gen::Z5, Gen::Z4, Gen::Z3, Gen::Z2, Gen::Z1}) w.push_back({g, false});
        return w;
    }();
    static const std::vector<Letter> empty;
    if (name == "psi0") return psi0;
    if (name == "iota") return iota;
    return empty;
}

bool base_token(const std::string& tok, std::vector<Letter>* body) {
    if (tok == "xi") {
        body->push_back({Gen::Xi, false});
        return true;
    }
    if (tok.size() == 2 && tok[0] == 'z' && tok[1] >= '1' && tok[1] <= '5') {
        body->push_back({static_cast<Gen>(tok[1] - '1'), false});
        return true;
    }
    const std::vector<Letter>& m = macro_body(tok);
    if (!m.empty()) {
        body->insert(body->end(), m.begin(), m.end());
        return true;
    }
    return false;
}

}  // namespace

GroupWord GroupWord::parse(std::string_view text) {
    std::vector<Letter> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::string tok(text.substr(start, i - start));

        long exponent = 1;
        if (tok.size() > 1 && tok.back() == '\'') {
            exponent = -1;
            tok.pop_back();
        } else if (std::size_t caret = tok.find('^'); caret != std::string::npos) {
            std::string expstr = tok.substr(caret + 1);
            tok = tok.substr(0, caret);
            try {
                std::size_t used = 0;
                exponent = std::stol(expstr, &used);
                if (used != expstr.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw WordParseError("invalid exponent '" + expstr + "'", start);
            }
        }

        std::vector<Letter> body;
        if (!base_token(tok, &body)) throw WordParseError("unknown token '" + tok + "'", start);

        std::vector<Letter> unit = body;
        if (exponent < 0) {
            unit.clear();
            for (auto it = body.rbegin(); it != body.rend(); ++it) unit.push_back(it->inverse());
        }
        for (long r = 0; r < (exponent < 0 ? -exponent : exponent); ++r)
            out.insert(out.end(), unit.begin(), unit.end());
    }
    return GroupWord(std::move(out));
}

GroupWord psi0_word() { return GroupWord::parse("psi0"); }
GroupWord iota_word() { return GroupWord::parse("iota"); }
GroupWord xi_word() { return GroupWord::parse("xi"); }

}  // namespace jones2
