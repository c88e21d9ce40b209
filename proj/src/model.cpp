#include "surml/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace surml {

SparsityPattern::SparsityPattern(std::size_t R, std::size_t C, std::vector<Entry> entries,
                                 std::vector<std::vector<Entry>> restrictions)
    : R_(R), C_(C), entries_(std::move(entries)) {
    if (R_ == 0 || C_ == 0) throw std::invalid_argument("pattern: empty dimensions");
    if (entries_.empty()) throw std::invalid_argument("pattern: no entries");

    std::sort(entries_.begin(), entries_.end());
    entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
    for (const Entry& e : entries_)
        if (e.r >= R_ || e.c >= C_) throw std::invalid_argument("pattern: entry out of range");

    // Every entry lands in exactly one class; unmentioned entries are
    // singletons.
    std::set<Entry> assigned;
    for (auto& cls : restrictions) {
        if (cls.empty()) throw std::invalid_argument("pattern: empty restriction class");
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        for (const Entry& e : cls) {
            if (!std::binary_search(entries_.begin(), entries_.end(), e))
                throw std::invalid_argument("pattern: restriction names entry outside pattern");
            if (!assigned.insert(e).second)
                throw std::invalid_argument("pattern: entry in two restriction classes");
        }
        classes_.push_back(cls);
    }
    for (const Entry& e : entries_)
        if (!assigned.count(e)) classes_.push_back({e});
    std::sort(classes_.begin(), classes_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    class_index_.assign(R_, std::vector<std::ptrdiff_t>(C_, -1));
    for (std::size_t k = 0; k < classes_.size(); ++k)
        for (const Entry& e : classes_[k]) class_index_[e.r][e.c] = static_cast<std::ptrdiff_t>(k);
}

std::size_t SparsityPattern::class_of(std::size_t r, std::size_t c) const {
    if (r >= R_ || c >= C_ || class_index_[r][c] < 0)
        throw std::out_of_range("pattern: (r,c) not in pattern");
    return static_cast<std::size_t>(class_index_[r][c]);
}

bool SparsityPattern::contains(std::size_t r, std::size_t c) const {
    return r < R_ && c < C_ && class_index_[r][c] >= 0;
}

std::vector<std::string> SparsityPattern::variable_names() const {
    std::vector<std::string> names;
    names.reserve(classes_.size());
    for (const auto& cls : classes_) {
        const Entry& rep = cls.front();
        names.push_back("b" + std::to_string(rep.r + 1) + std::to_string(rep.c + 1));
    }
    return names;
}

std::string SparsityPattern::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ",";
        out += "(" + std::to_string(entries_[i].r + 1) + "," + std::to_string(entries_[i].c + 1) + ")";
    }
    out += "}";
    if (is_restricted()) {
        out += " with";
        for (const auto& cls : classes_) {
            if (cls.size() < 2) continue;
            out += " ";
            for (std::size_t i = 0; i < cls.size(); ++i) {
                if (i) out += "=";
                out += "b" + std::to_string(cls[i].r + 1) + std::to_string(cls[i].c + 1);
            }
        }
    }
    return out;
}

std::size_t exact_rank(const std::vector<std::vector<Rational>>& m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    // Clear denominators row by row, then run Bareiss fraction-free
    // elimination over the integers.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (m[i].size() != cols) throw std::invalid_argument("exact_rank: ragged matrix");
        Integer lcm(1);
        for (const Rational& q : m[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            Rational scaled = m[i][j] * Rational(lcm);
            a[i][j] = scaled.get_num();
        }
    }

    std::size_t rank = 0;
    Integer prev(1);
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

namespace {

void check_dataset_rank(const std::vector<std::vector<Rational>>& X,
                        const std::vector<std::vector<Rational>>& Y) {
    std::size_t C = X.size(), R = Y.size();
    std::size_t N = X.empty() ? 0 : X[0].size();
    std::vector<std::vector<Rational>> stacked;
    stacked.reserve(R + C);
    for (const auto& row : Y) stacked.push_back(row);
    for (const auto& row : X) stacked.push_back(row);
    if (exact_rank(stacked) != R + C)
        throw std::invalid_argument("dataset: stacked X,Y matrix is rank deficient (N=" +
                                    std::to_string(N) + ")");
}

}  // namespace

Dataset::Dataset(std::vector<std::vector<Rational>> X, std::vector<std::vector<Rational>> Y)
    : X_(std::move(X)), Y_(std::move(Y)) {
    if (X_.empty() || Y_.empty()) throw std::invalid_argument("dataset: empty X or Y");
    N_ = X_[0].size();
    for (const auto& row : X_)
        if (row.size() != N_) throw std::invalid_argument("dataset: ragged X");
    for (const auto& row : Y_)
        if (row.size() != N_) throw std::invalid_argument("dataset: ragged Y");
    if (N_ < R() + C())
        throw std::invalid_argument("dataset: N must be at least R + C");
    check_dataset_rank(X_, Y_);
}

PolyMatrix build_B(const SparsityPattern& pattern) {
    std::size_t p = pattern.free_params();
    PolyMatrix B(pattern.R(), pattern.C(), p);
    for (std::size_t r = 0; r < pattern.R(); ++r)
        for (std::size_t c = 0; c < pattern.C(); ++c)
            if (pattern.contains(r, c))
                B.at(r, c) = MultiPoly::variable(p, pattern.class_of(r, c));
    return B;
}

ObjectiveSystem build_objective(const SparsityPattern& pattern, const Dataset& data) {
    if (pattern.R() != data.R() || pattern.C() != data.C())
        throw std::invalid_argument("objective: pattern and data dimensions differ");

    std::size_t R = pattern.R(), C = pattern.C(), N = data.N();
    std::size_t p = pattern.free_params();
    PolyMatrix B = build_B(pattern);

    // Residuals E = Y - B X, entrywise linear in the free parameters.
    PolyMatrix E(R, N, p);
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t m = 0; m < N; ++m) {
            MultiPoly e = MultiPoly::constant(p, data.Y()[r][m]);
            for (std::size_t c = 0; c < C; ++c)
                if (pattern.contains(r, c))
                    e -= B.at(r, c).scaled(data.X()[c][m]);
            E.at(r, m) = std::move(e);
        }

    PolyMatrix M(R, R, p);
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = i; j < R; ++j) {
            MultiPoly acc(p);
            for (std::size_t m = 0; m < N; ++m) acc += E.at(i, m) * E.at(j, m);
            M.at(i, j) = acc;
            if (i != j) M.at(j, i) = std::move(acc);
        }

    ObjectiveSystem sys{poly_det(M), {}, pattern, N};
    sys.gradient.reserve(p);
    for (std::size_t k = 0; k < p; ++k) sys.gradient.push_back(sys.G.differentiate(k));
    return sys;
}

Dataset apply_scaling(const Dataset& data, const Rational& lambda) {
    if (lambda <= 0) throw std::invalid_argument("apply_scaling: lambda must be positive");
    auto scale = [&](const std::vector<std::vector<Rational>>& m) {
        std::vector<std::vector<Rational>> out = m;
        for (auto& row : out)
            for (auto& q : row) q *= lambda;
        return out;
    };
    return Dataset(scale(data.X()), scale(data.Y()));
}

namespace {

// splitmix64: tiny, seedable, and stable across platforms.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long uniform(long range) {
        // Entries in [-range, range].
        std::uint64_t span = 2 * static_cast<std::uint64_t>(range) + 1;
        return static_cast<long>(next() % span) - range;
    }
};

}  // namespace

Dataset random_dataset(const SparsityPattern& pattern, std::size_t N, std::uint64_t seed,
                       long range) {
    if (N < pattern.R() + pattern.C())
        throw std::invalid_argument("random_dataset: N must be at least R + C");
    if (range <= 0) throw std::invalid_argument("random_dataset: range must be positive");

    SplitMix64 rng{seed};
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<std::vector<Rational>> X(pattern.C(), std::vector<Rational>(N));
        std::vector<std::vector<Rational>> Y(pattern.R(), std::vector<Rational>(N));
        for (auto& row : X)
            for (auto& q : row) q = Rational(rng.uniform(range));
        for (auto& row : Y)
            for (auto& q : row) q = Rational(rng.uniform(range));
        try {
            return Dataset(std::move(X), std::move(Y));
        } catch (const std::invalid_argument&) {
            continue;  // rank-deficient draw, try again
        }
    }
    throw std::runtime_error("random_dataset: no full-rank draw in 100 attempts");
}

}  // namespace surml
