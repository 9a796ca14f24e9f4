#include "tbk/free_word.hpp"

#include "tbk/errors.hpp"

namespace tbk {

FreeWord FreeWord::parse(std::string_view text) {
    std::vector<Letter> out;
    if (text == "1") return {};
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case 'a': out.push_back({1, 1}); break;
            case 'b': out.push_back({2, 1}); break;
            case 'A': out.push_back({1, -1}); break;
            case 'B': out.push_back({2, -1}); break;
            default: throw ParseError(std::string("unexpected letter '") + ch + "' in word");
        }
    }
    return FreeWord(std::move(out));
}

std::string FreeWord::to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    s.reserve(letters_.size());
    for (const Letter& l : letters_) {
        char base = l.gen == 1 ? 'a' : 'b';
        s += l.sign > 0 ? base : static_cast<char>(base - 'a' + 'A');
    }
    return s;
}

FreeWord FreeWord::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    return FreeWord(std::move(out));
}

FreeWord FreeWord::reversed() const {
    return FreeWord(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

FreeWord FreeWord::exponents_negated() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (const Letter& l : letters_) out.push_back(l.inverse());
    return FreeWord(std::move(out));
}

FreeWord FreeWord::power(long n) const {
    const FreeWord base = n < 0 ? inverse() : *this;
    std::vector<Letter> out;
    const std::size_t reps = static_cast<std::size_t>(n < 0 ? -n : n);
    out.reserve(base.length() * reps);
    for (std::size_t i = 0; i < reps; ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
    return FreeWord(std::move(out));
}

FreeWord FreeWord::cyclic_subword(std::size_t start, std::size_t length) const {
    std::vector<Letter> out;
    if (letters_.empty()) return {};
    out.reserve(length);
    for (std::size_t k = 0; k < length; ++k) out.push_back(letters_[(start + k) % letters_.size()]);
    return FreeWord(std::move(out));
}

long FreeWord::exponent_sum() const {
    long s = 0;
    for (const Letter& l : letters_) s += l.sign;
    return s;
}

long FreeWord::exponent_sum(int gen) const {
    long s = 0;
    for (const Letter& l : letters_)
        if (l.gen == gen) s += l.sign;
    return s;
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
    std::vector<Letter> out(u.letters_);
    out.insert(out.end(), v.letters_.begin(), v.letters_.end());
    return FreeWord(std::move(out));
}

FreeWord free_reduce(const FreeWord& w) {
    std::vector<Letter> stack;
    stack.reserve(w.length());
    for (const Letter& l : w.letters()) {
        if (!stack.empty() && stack.back() == l.inverse())
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return FreeWord(std::move(stack));
}

}  // namespace tbk
