#include "mtv/errors.hpp"
#include "mtv/stuffle.hpp"

#include <sstream>

namespace mtv {

Word z(int k) {
    if (k < 1) throw UsageError("z_k needs k >= 1");
    return Word(k - 1, 'X') + 'Y';
}

Word word_from_index(const Index& k) {
    Word w;
    for (int x : k) w += z(x);
    return w;
}

bool in_A1(const Word& w) {
    for (char c : w)
        if (c != 'X' && c != 'Y') return false;
    return w.empty() || w.back() == 'Y';
}

bool is_admissible_word(const Word& w) { return in_A1(w) && (w.empty() || w.front() == 'X'); }

Index word_to_index(const Word& w) {
    if (!in_A1(w)) throw DomainError("word '" + w + "' is not in A^1");
    Index k;
    int run = 1;
    for (char c : w) {
        if (c == 'X') {
            ++run;
        } else {
            k.push_back(run);
            run = 1;
        }
    }
    return k;
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int k : word_to_index(w)) {
        if (!first) os << ' ';
        os << 'z' << k;
        first = false;
    }
    return os.str();
}

namespace {

using Counts = std::map<Word, long, WordLess>;

// Split off the leading z_k: returns k and the rest.
std::pair<int, Word> head(const Word& w) {
    std::size_t y = w.find('Y');
    return {static_cast<int>(y) + 1, w.substr(y + 1)};
}

struct ProductCache {
    std::map<std::pair<Word, Word>, Counts> stuffle, star;
};

const Counts& product_rec(const Word& a, const Word& b, ProductMode mode, ProductCache& cache) {
    auto& memo = mode == ProductMode::stuffle ? cache.stuffle : cache.star;
    auto key = WordLess{}(b, a) ? std::make_pair(b, a) : std::make_pair(a, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Counts out;
    if (a.empty()) {
        out[b] = 1;
    } else if (b.empty()) {
        out[a] = 1;
    } else {
        auto [k, a1] = head(a);
        auto [l, b1] = head(b);
        const Word zk = z(k), zl = z(l), zkl = z(k + l);
        for (const auto& [w, c] : product_rec(a1, b, mode, cache)) out[zk + w] += c;
        for (const auto& [w, c] : product_rec(a, b1, mode, cache)) out[zl + w] += c;
        const long sgn = mode == ProductMode::stuffle ? 1 : -1;
        for (const auto& [w, c] : product_rec(a1, b1, mode, cache)) out[zkl + w] += sgn * c;
        for (auto i = out.begin(); i != out.end();) {
            if (i->second == 0) i = out.erase(i);
            else ++i;
        }
    }
    return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

const std::map<Word, long, WordLess>& word_product(const Word& a, const Word& b, ProductMode mode) {
    if (!in_A1(a) || !in_A1(b)) throw DomainError("stuffle product needs words in A^1");
    thread_local ProductCache cache;
    return product_rec(a, b, mode, cache);
}

LinComb s_map(const LinComb& w) {
    LinComb out;
    for (const auto& [word, c] : w.terms()) {
        if (!in_A1(word)) throw DomainError("S needs words in A^1");
        if (word.empty()) {
            out.add(word, c);
            continue;
        }
        // Expand each Y before the last letter into X + Y.
        std::vector<Word> cur{""};
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            std::vector<Word> next;
            for (const auto& pre : cur) {
                if (word[i] == 'X') {
                    next.push_back(pre + 'X');
                } else {
                    next.push_back(pre + 'X');
                    next.push_back(pre + 'Y');
                }
            }
            cur.swap(next);
        }
        for (auto& pre : cur) out.add(pre + 'Y', c);
    }
    return out;
}

LinComb s_inverse(const LinComb& w) {
    LinComb out;
    for (const auto& [word, c] : w.terms()) {
        if (!in_A1(word)) throw DomainError("S^-1 needs words in A^1");
        if (word.empty()) {
            out.add(word, c);
            continue;
        }
        std::vector<std::pair<Word, int>> cur{{"", 1}};
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            std::vector<std::pair<Word, int>> next;
            for (const auto& [pre, s] : cur) {
                if (word[i] == 'X') {
                    next.push_back({pre + 'X', s});
                } else {
                    next.push_back({pre + 'Y', s});
                    next.push_back({pre + 'X', -s});
                }
            }
            cur.swap(next);
        }
        for (auto& [pre, s] : cur) {
            Coef cc = c;
            cc *= Rational(s);
            out.add(pre + 'Y', cc);
        }
    }
    return out;
}

}  // namespace mtv
