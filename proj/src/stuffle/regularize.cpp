#include "mtv/errors.hpp"
#include "mtv/numerics.hpp"
#include "mtv/parallel.hpp"
#include "mtv/stuffle.hpp"

#include <mutex>

namespace mtv {

namespace {

std::size_t leading_ones(const Word& w) {
    std::size_t j = 0;
    while (j < w.size() && w[j] == 'Y') ++j;
    return j;
}

// reg(z1^j u) = (1/j) [V reg(z1^(j-1) u) - reg(rest)], where
// z1 * z1^(j-1) u = j z1^j u + rest and rest has fewer leading z1's.
const LinComb& reg_leading(const Word& w, std::map<Word, LinComb, WordLess>& memo) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    LinComb out;
    const std::size_t j = leading_ones(w);
    if (j == 0) {
        out = LinComb::word(w);
    } else {
        const Word shorter = w.substr(1);
        LinComb rest = product(LinComb::word("Y"), LinComb::word(shorter), ProductMode::stuffle);
        rest.add(w, Coef(Rational(-static_cast<long>(j))));
        LinComb acc = reg_leading(shorter, memo);
        acc *= Coef::V();
        for (const auto& [u, c] : rest.terms()) {
            LinComb r = reg_leading(u, memo);
            r *= c;
            acc -= r;
        }
        acc *= Rational(1, static_cast<long>(j));
        out = std::move(acc);
    }
    return memo.emplace(w, std::move(out)).first->second;
}

// Per-weight data for the linear solve: all A^1 words of the weight, the
// basis pairs (u, i) meaning u * z1^{*i}, and the inverse of the matrix
// whose column b is the expansion of basis element b.
struct SolveData {
    std::vector<Word> words;
    std::map<Word, std::size_t, WordLess> word_pos;
    std::vector<std::pair<Word, int>> basis;
    std::vector<std::vector<Rational>> inverse;
};

void all_A1_words(int k, std::vector<Word>& out) {
    for (int n = 1; n <= k; ++n)
        for (const auto& c : compositions(k, n)) out.push_back(word_from_index(c));
}

SolveData build_solve(int k) {
    SolveData d;
    all_A1_words(k, d.words);
    for (std::size_t i = 0; i < d.words.size(); ++i) d.word_pos[d.words[i]] = i;
    for (const auto& w : d.words) {
        std::size_t j = leading_ones(w);
        d.basis.push_back({w.substr(j), static_cast<int>(j)});
    }
    const std::size_t n = d.words.size();
    if (d.basis.size() != n) throw std::logic_error("regularization basis is not square");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t b = 0; b < n; ++b) {
        const auto& [u, i] = d.basis[b];
        LinComb e = product(LinComb::word(u), power(LinComb::word("Y"), i, ProductMode::stuffle),
                            ProductMode::stuffle);
        for (const auto& [w, c] : e.terms()) a[d.word_pos.at(w)][b] = c.rational();
    }
    for (std::size_t r = 0; r < n; ++r) a[r][n + r] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("singular regularization system");
        std::swap(a[piv], a[col]);
        Rational inv = 1 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t c = col; c < 2 * n; ++c)
                if (a[col][c] != 0) a[r][c] -= f * a[col][c];
        }
    }
    d.inverse.assign(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) d.inverse[r][c] = a[r][n + c];
    return d;
}

const SolveData& solve_data(int k) {
    static std::mutex mu;
    static std::map<int, SolveData> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, build_solve(k)).first;
    return it->second;
}

LinComb reg_solve(const Word& w) {
    if (leading_ones(w) == 0) return LinComb::word(w);
    const SolveData& d = solve_data(static_cast<int>(w.size()));
    const std::size_t col = d.word_pos.at(w);
    LinComb out;
    for (std::size_t b = 0; b < d.basis.size(); ++b) {
        const Rational& x = d.inverse[b][col];
        if (x == 0) continue;
        Coef c(x);
        for (int i = 0; i < d.basis[b].second; ++i) c = c * Coef::V();
        out.add(d.basis[b].first, c);
    }
    return out;
}

}  // namespace

LinComb regularize(const LinComb& w, RegStrategy strategy) {
    thread_local std::map<Word, LinComb, WordLess> memo;
    LinComb out;
    for (const auto& [word, c] : w.terms()) {
        if (!in_A1(word)) throw DomainError("regularize needs words in A^1");
        LinComb r = strategy == RegStrategy::leading ? reg_leading(word, memo) : reg_solve(word);
        r *= c;
        out += r;
    }
    return out;
}

TrackedReal eval_map(const LinComb& w, EvalTarget target, const LevelParams& lv, const Precision& p,
                     const Rational& V) {
    validate_level(lv);
    LinComb x = w;
    bool star = target == EvalTarget::t_star;
    if (target == EvalTarget::t_star_reg) x = s_map(x);
    if (target == EvalTarget::t_reg || target == EvalTarget::t_star_reg) x = regularize(x);

    std::vector<TValueRequest> reqs;
    std::vector<const Coef*> coefs;
    const long bits = p.bits();
    TrackedReal total(bits);
    const TrackedReal log2 = constant(Constant::log2, p);
    for (const auto& [word, c] : x.terms()) {
        if (!is_admissible_word(word)) throw DomainError("word '" + word_to_string(word) + "' is not admissible");
        if (word.empty()) {
            total += c.eval(V, log2);
            continue;
        }
        reqs.push_back({lv, word_to_index(word), star});
        coefs.push_back(&c);
    }
    std::vector<TrackedReal> vals = t_values_batch(reqs, p);
    for (std::size_t i = 0; i < vals.size(); ++i) total += coefs[i]->eval(V, log2) * vals[i];
    return total;
}

}  // namespace mtv
