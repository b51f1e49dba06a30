#include "nfbasis/normal_form.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>
#include <unordered_map>
#include <utility>

namespace nfbasis {

namespace {

// ---- combinatorics over row subsets -------------------------------------

std::uint64_t binomial_saturating(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t add_saturating(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b
               ? std::numeric_limits<std::uint64_t>::max()
               : a + b;
}

// Advance a sorted j-subset of {0..m-1} in colexicographic order, i.e. in
// increasing order of the subset's bitmask value. Returns false past the end.
bool next_combination_colex(std::vector<int>& c, int m) {
    const int j = static_cast<int>(c.size());
    for (int i = 0; i < j; ++i) {
        const int limit = (i + 1 < j) ? c[i + 1] : m;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (int t = 0; t < i; ++t) c[t] = t;
            return true;
        }
    }
    return false;
}

// Subset with the given colex rank (0-based), positions ascending.
std::vector<int> unrank_colex(int j, std::uint64_t r) {
    std::vector<int> pos(static_cast<std::size_t>(j));
    for (int i = j; i >= 1; --i) {
        int c = i - 1; // C(i-1, i) = 0 <= r always holds
        while (binomial_saturating(c + 1, i) <= r) ++c;
        pos[static_cast<std::size_t>(i - 1)] = c;
        r -= binomial_saturating(c, i);
    }
    return pos;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("NFBASIS_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Contiguous rank ranges across workers; rethrows the first worker failure.
template <class Fn>
void parallel_ranks(std::uint64_t total, int threads, Fn fn) {
    const std::uint64_t want = std::min<std::uint64_t>(
        static_cast<std::uint64_t>(std::max(threads, 1)), std::max<std::uint64_t>(total, 1));
    const int T = static_cast<int>(want);
    if (T <= 1 || total < 2048) {
        fn(0, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(T));
    pool.reserve(static_cast<std::size_t>(T));
    for (int t = 0; t < T; ++t) {
        const std::uint64_t begin = total / T * t + std::min<std::uint64_t>(t, total % T);
        const std::uint64_t end = total / T * (t + 1) + std::min<std::uint64_t>(t + 1, total % T);
        pool.emplace_back([&, t, begin, end] {
            try {
                fn(t, begin, end);
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// ---- candidate construction ----------------------------------------------

struct Classification {
    ZeroPattern pattern;
    int first_nonzero = -1; // -1 when every entry is classified zero
};

template <class Scalar>
Classification classify_image(const DenseVector<Scalar>& w, double zero_rel_tol) {
    const int m = static_cast<int>(w.size());
    Classification cls{ZeroPattern(m), -1};
    const double threshold = zero_rel_tol * w.cwiseAbs().maxCoeff();
    for (int j = 0; j < m; ++j) {
        if (std::abs(w(j)) <= threshold)
            cls.pattern.set(j);
        else if (cls.first_nonzero < 0)
            cls.first_nonzero = j;
    }
    return cls;
}

template <class Scalar>
Candidate<Scalar> finish_candidate(const DenseVector<Scalar>& s, const DenseVector<Scalar>& w,
                                   Classification cls) {
    const Scalar pivot = w(cls.first_nonzero);
    Candidate<Scalar> cand;
    cand.s_hat = s / pivot;
    cand.image = w / pivot;
    cand.key = ThetaKey{cls.pattern.count(), std::move(cls.pattern)};
    return cand;
}

// The candidate determined by requiring the given rows to vanish. Present
// iff those rows span exactly n-1 dimensions. With probe_rank_first the
// (frequent) full-rank rejections pay for singular values only.
template <class Scalar>
std::optional<Candidate<Scalar>> candidate_from_zero_rows(const DenseMatrix<Scalar>& A,
                                                          const std::vector<int>& zero_rows,
                                                          const ToleranceConfig& tol,
                                                          bool probe_rank_first) {
    const Eigen::Index n = A.cols();
    const Eigen::Index k = static_cast<Eigen::Index>(zero_rows.size());
    DenseMatrix<Scalar> rows(k, n);
    for (Eigen::Index i = 0; i < k; ++i)
        rows.row(i) = A.row(zero_rows[static_cast<std::size_t>(i)]);

    if (probe_rank_first) {
        Eigen::JacobiSVD<DenseMatrix<Scalar>> probe(rows);
        const auto& sv = probe.singularValues();
        const double thr = tol.rank_rel_tol * (sv.size() ? sv(0) : 0.0) *
                           static_cast<double>(std::max(k, n));
        Eigen::Index r = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > thr) ++r;
        if (r != n - 1)
            return std::nullopt;
    }

    const auto s = hyperplane_normal(rows, tol);
    if (!s)
        return std::nullopt;
    DenseVector<Scalar> w = A * (*s);
    Classification cls = classify_image(w, tol.zero_rel_tol);
    if (cls.first_nonzero < 0)
        throw InternalError("normal_form: image classified zero everywhere; "
                            "input is rank-deficient at the zero tolerance");
    return finish_candidate(*s, w, std::move(cls));
}

// Re-solve a provisional candidate from the full set of rows its image
// zeroes, iterating until the pattern is a fixed point. Both search
// algorithms therefore emit bitwise-identical candidates for the same
// pattern, and coincident-hyperplane selections collapse onto one float
// representation.
template <class Scalar>
Candidate<Scalar> canonicalize(const DenseMatrix<Scalar>& A, Candidate<Scalar> cand,
                               const ToleranceConfig& tol) {
    for (int iter = 0; iter < 3; ++iter) {
        auto re = candidate_from_zero_rows(A, cand.pattern().bits(), tol, false);
        if (!re)
            return cand;
        if (re->pattern() == cand.pattern())
            return *re;
        cand = std::move(*re);
    }
    return cand;
}

struct PatternHash {
    std::size_t operator()(const ZeroPattern& p) const { return p.hash(); }
};

// ---- shared pre/post ------------------------------------------------------

template <class Scalar>
void check_full_column_rank(const DenseMatrix<Scalar>& A, const RankInfo<Scalar>& info) {
    if (info.rank < A.cols())
        throw NotFullColumnRankError("normal_form: matrix does not have full column rank (rank " +
                                     std::to_string(info.rank) + " of " +
                                     std::to_string(A.cols()) + ")");
}

template <class Scalar>
NormalFormResult<Scalar> single_column_nf(const DenseMatrix<Scalar>& A, const ToleranceConfig& tol,
                                          const NormalFormOptions& opts, Algorithm algo) {
    if (!opts.allow_single_column)
        throw UnsupportedDimensionError(
            "normal_form: single-column spaces are rejected by default; "
            "set allow_single_column to scale the column to +1 at its first nonzero entry");
    DenseVector<Scalar> w = A.col(0);
    Classification cls = classify_image(w, tol.zero_rel_tol);
    if (cls.first_nonzero < 0)
        throw NotFullColumnRankError("normal_form: the single column is zero");
    Candidate<Scalar> cand = finish_candidate(DenseVector<Scalar>::Ones(1).eval(), w, std::move(cls));

    NormalFormResult<Scalar> res;
    res.columns = cand.image;
    res.s_vectors = cand.s_hat;
    res.keys = {cand.key};
    res.algorithm = algo;
    return res;
}

template <class Scalar>
NormalFormResult<Scalar> assemble_result(const std::vector<Candidate<Scalar>>& accepted,
                                         Eigen::Index m, Eigen::Index n, Algorithm algo,
                                         SearchStats stats) {
    NormalFormResult<Scalar> res;
    res.columns.resize(m, n);
    res.s_vectors.resize(n, n);
    res.keys.reserve(accepted.size());
    for (Eigen::Index j = 0; j < n; ++j) {
        const auto& cand = accepted[static_cast<std::size_t>(j)];
        res.columns.col(j) = cand.image;
        res.s_vectors.col(j) = cand.s_hat;
        res.keys.push_back(cand.key);
    }
    res.algorithm = algo;
    res.stats = stats;

    for (std::size_t j = 0; j + 1 < res.keys.size(); ++j)
        if (ThetaKey::compare(res.keys[j], res.keys[j + 1]) <= 0)
            throw InternalError("normal_form: selected keys are not strictly decreasing");
    for (const auto& key : res.keys) {
        if (key.zero_count < static_cast<int>(n) - 1)
            throw InternalError("normal_form: a selected column has fewer than n-1 zero entries");
    }
    return res;
}

// Greedy selection over a key-descending candidate stream.
template <class Scalar>
bool feed_greedy(IndependenceTracker<Scalar>& tracker, std::vector<Candidate<Scalar>>& accepted,
                 Candidate<Scalar>&& cand, const ToleranceConfig& tol, Eigen::Index n) {
    if (tracker.try_extend(cand.s_hat, tol))
        accepted.push_back(std::move(cand));
    return static_cast<Eigen::Index>(accepted.size()) == n;
}

// Rows whose norm is small enough that every image entry there is classified
// zero regardless of the normal vector; their absence from a trial pattern
// makes the pattern-match test unsatisfiable, so the rank probe can be
// skipped. Sound because |row . s| <= ||row|| and max|A s| >= sigma_min/sqrt(m)
// for unit s.
template <class Scalar>
std::vector<char> universally_zero_rows(const DenseMatrix<Scalar>& A, double sigma_min,
                                        const ToleranceConfig& tol) {
    const Eigen::Index m = A.rows();
    std::vector<char> out(static_cast<std::size_t>(m), 0);
    const double bound = tol.zero_rel_tol * sigma_min / std::sqrt(static_cast<double>(m));
    for (Eigen::Index i = 0; i < m; ++i)
        if (A.row(i).norm() <= bound)
            out[static_cast<std::size_t>(i)] = 1;
    return out;
}

} // namespace

template <class Scalar>
std::int64_t NormalFormResult<Scalar>::nonzero_entries() const {
    std::int64_t zeros = 0;
    for (const auto& key : keys)
        zeros += key.zero_count;
    return static_cast<std::int64_t>(rows()) * static_cast<std::int64_t>(cols()) - zeros;
}

template <class Scalar>
Candidate<Scalar> normalize_candidate(const DenseMatrix<Scalar>& A, const DenseVector<Scalar>& s,
                                      const ToleranceConfig& tol) {
    require_valid(A, "normalize_candidate");
    require_valid(s, "normalize_candidate");
    tol.validate();
    if (s.size() != A.cols())
        throw InvalidInputError("normalize_candidate: s has wrong dimension");
    if (s.norm() == 0.0)
        throw InvalidInputError("normalize_candidate: s must be nonzero");
    DenseVector<Scalar> w = A * s;
    Classification cls = classify_image(w, tol.zero_rel_tol);
    if (cls.first_nonzero < 0)
        throw InternalError("normalize_candidate: A*s classified zero everywhere; "
                            "A is rank-deficient or the zero tolerance is broken");
    return finish_candidate(s, w, std::move(cls));
}

template <class Scalar>
NormalFormResult<Scalar> normal_form_standard(const DenseMatrix<Scalar>& A,
                                              const ToleranceConfig& tol,
                                              const NormalFormOptions& opts) {
    require_valid(A, "normal_form_standard");
    tol.validate();
    const Eigen::Index m = A.rows();
    const Eigen::Index n = A.cols();
    if (n == 1)
        return single_column_nf(A, tol, opts, Algorithm::standard);

    const auto info = rank_info(A, tol);
    check_full_column_rank(A, info);

    const int sel = static_cast<int>(n) - 1;
    const std::uint64_t total = binomial_saturating(static_cast<int>(m), sel);
    if (total == std::numeric_limits<std::uint64_t>::max())
        throw InvalidInputError("normal_form_standard: selection count overflows; input too large");

    struct Hit {
        std::uint64_t rank;
        Candidate<Scalar> cand;
    };

    std::vector<Candidate<Scalar>> provisional; // enumeration order, deduped on pattern
    if (opts.order == EnumerationOrder::reversed) {
        // Verification path: walk everything sequentially, then flip the order.
        std::vector<Candidate<Scalar>> all;
        std::vector<int> pos(static_cast<std::size_t>(sel));
        for (int i = 0; i < sel; ++i) pos[static_cast<std::size_t>(i)] = i;
        std::uint64_t r = 0;
        do {
            auto cand = candidate_from_zero_rows(A, pos, tol, false);
            if (cand)
                all.push_back(std::move(*cand));
            ++r;
        } while (next_combination_colex(pos, static_cast<int>(m)));
        if (r != total)
            throw InternalError("normal_form_standard: enumeration count mismatch");
        std::reverse(all.begin(), all.end());
        std::unordered_map<ZeroPattern, int, PatternHash> seen;
        for (auto& cand : all)
            if (seen.emplace(cand.pattern(), 1).second)
                provisional.push_back(std::move(cand));
    } else {
        const int threads = resolve_threads(opts.threads);
        std::vector<std::vector<Hit>> chunks(static_cast<std::size_t>(std::max(threads, 1)));
        parallel_ranks(total, threads, [&](int worker, std::uint64_t begin, std::uint64_t end) {
            if (begin >= end) return;
            auto& out = chunks[static_cast<std::size_t>(worker)];
            std::unordered_map<ZeroPattern, int, PatternHash> seen;
            std::vector<int> pos = unrank_colex(sel, begin);
            for (std::uint64_t r = begin; r < end; ++r) {
                auto cand = candidate_from_zero_rows(A, pos, tol, false);
                if (cand && seen.emplace(cand->pattern(), 1).second)
                    out.push_back(Hit{r, std::move(*cand)});
                next_combination_colex(pos, static_cast<int>(m));
            }
        });
        std::unordered_map<ZeroPattern, int, PatternHash> seen;
        for (auto& chunk : chunks)
            for (auto& hit : chunk)
                if (seen.emplace(hit.cand.pattern(), 1).second)
                    provisional.push_back(std::move(hit.cand));
    }

    // Canonicalize, dedup on the final pattern, order by key.
    std::vector<Candidate<Scalar>> distinct;
    {
        std::unordered_map<ZeroPattern, int, PatternHash> seen;
        for (auto& cand : provisional) {
            Candidate<Scalar> canon = canonicalize(A, std::move(cand), tol);
            if (seen.emplace(canon.pattern(), 1).second)
                distinct.push_back(std::move(canon));
        }
    }
    std::sort(distinct.begin(), distinct.end(), [](const auto& a, const auto& b) {
        return ThetaKey::compare(a.key, b.key) > 0;
    });
    for (std::size_t i = 0; i + 1 < distinct.size(); ++i)
        if (ThetaKey::compare(distinct[i].key, distinct[i + 1].key) == 0)
            throw InternalError("normal_form_standard: two distinct candidates share a key");

    SearchStats stats;
    stats.selections_enumerated = total;
    stats.candidates_examined = distinct.size();

    IndependenceTracker<Scalar> tracker(n);
    std::vector<Candidate<Scalar>> accepted;
    accepted.reserve(static_cast<std::size_t>(n));
    for (auto& cand : distinct)
        if (feed_greedy(tracker, accepted, std::move(cand), tol, n))
            break;
    if (static_cast<Eigen::Index>(accepted.size()) != n)
        throw InternalError("normal_form_standard: exhausted candidates before finding n "
                            "independent normals");
    return assemble_result(accepted, m, n, Algorithm::standard, stats);
}

template <class Scalar>
NormalFormResult<Scalar> normal_form_topdown(const DenseMatrix<Scalar>& A,
                                             const ToleranceConfig& tol,
                                             const NormalFormOptions& opts) {
    require_valid(A, "normal_form_topdown");
    tol.validate();
    const Eigen::Index m = A.rows();
    const Eigen::Index n = A.cols();
    if (n == 1)
        return single_column_nf(A, tol, opts, Algorithm::topdown);

    const auto info = rank_info(A, tol);
    check_full_column_rank(A, info);

    const std::vector<char> forced_zero = universally_zero_rows(A, info.sigma_min, tol);
    const int threads = resolve_threads(opts.threads);

    struct Hit {
        std::uint64_t rank;
        Candidate<Scalar> cand;
    };

    SearchStats stats;
    IndependenceTracker<Scalar> tracker(n);
    std::vector<Candidate<Scalar>> accepted;
    accepted.reserve(static_cast<std::size_t>(n));

    for (int zeros = static_cast<int>(m) - 1; zeros >= static_cast<int>(n) - 1; --zeros) {
        ++stats.levels_visited;
        const int comp = static_cast<int>(m) - zeros; // rows allowed to be nonzero
        const std::uint64_t total = binomial_saturating(static_cast<int>(m), comp);
        if (total == std::numeric_limits<std::uint64_t>::max())
            throw InvalidInputError("normal_form_topdown: pattern count overflows; input too large");
        stats.selections_enumerated = add_saturating(stats.selections_enumerated, total);

        // Complements in increasing colex order give trial patterns in
        // decreasing pattern-value order, i.e. descending theta within the level.
        std::vector<std::vector<Hit>> chunks(static_cast<std::size_t>(std::max(threads, 1)));
        parallel_ranks(total, threads, [&](int worker, std::uint64_t begin, std::uint64_t end) {
            if (begin >= end) return;
            auto& out = chunks[static_cast<std::size_t>(worker)];
            std::vector<int> pos = unrank_colex(comp, begin);
            std::vector<int> zero_rows(static_cast<std::size_t>(zeros));
            for (std::uint64_t r = begin; r < end; ++r, next_combination_colex(pos, static_cast<int>(m))) {
                bool skip = false;
                for (int p : pos)
                    if (forced_zero[static_cast<std::size_t>(p)]) { skip = true; break; }
                if (skip)
                    continue;
                // complement of pos, ascending
                int w = 0, pi = 0;
                for (int row = 0; row < static_cast<int>(m); ++row) {
                    if (pi < comp && pos[static_cast<std::size_t>(pi)] == row) { ++pi; continue; }
                    zero_rows[static_cast<std::size_t>(w++)] = row;
                }
                auto cand = candidate_from_zero_rows(A, zero_rows, tol, true);
                if (!cand)
                    continue;
                // Only the exact pattern counts; supersets were already
                // handled at a higher level.
                if (cand->pattern().count() != zeros)
                    continue;
                bool exact = true;
                for (int row : zero_rows)
                    if (!cand->pattern().test(row)) { exact = false; break; }
                if (!exact)
                    continue;
                out.push_back(Hit{r, std::move(*cand)});
            }
        });

        for (auto& chunk : chunks) {
            for (auto& hit : chunk) {
                ++stats.candidates_examined;
                feed_greedy(tracker, accepted, std::move(hit.cand), tol, n);
            }
        }
        if (static_cast<Eigen::Index>(accepted.size()) == n)
            break; // every not-yet-seen candidate has a smaller key
    }

    if (static_cast<Eigen::Index>(accepted.size()) != n)
        throw InternalError("normal_form_topdown: exhausted all zero-count levels before finding "
                            "n independent normals");
    return assemble_result(accepted, m, n, Algorithm::topdown, stats);
}

template <class Scalar>
NormalFormResult<Scalar> normal_form(const DenseMatrix<Scalar>& A, Algorithm algorithm,
                                     const ToleranceConfig& tol, const NormalFormOptions& opts) {
    return algorithm == Algorithm::standard ? normal_form_standard(A, tol, opts)
                                            : normal_form_topdown(A, tol, opts);
}

template <class Scalar>
DenseMatrix<Scalar> orthogonal_complement_nf(const DenseVector<Scalar>& a,
                                             const ToleranceConfig& tol) {
    require_valid(a, "orthogonal_complement_nf");
    tol.validate();
    const Eigen::Index m = a.size();
    if (m < 3)
        throw InvalidInputError("orthogonal_complement_nf: dimension must be >= 3");
    const double max_abs = a.cwiseAbs().maxCoeff();
    if (max_abs == 0.0)
        throw InvalidInputError("orthogonal_complement_nf: a must be nonzero");

    const double threshold = tol.zero_rel_tol * max_abs;
    const bool all_nonzero = (a.cwiseAbs().minCoeff() > threshold);
    if (!all_nonzero) {
        DenseMatrix<Scalar> row = a.transpose();
        return normal_form_standard(nullspace_basis(row, tol), tol).columns;
    }

    DenseMatrix<Scalar> nf = DenseMatrix<Scalar>::Zero(m, m - 1);
    nf.row(0).setOnes();
    for (Eigen::Index c = 0; c + 1 < m; ++c)
        nf(c + 1, c) = -a(0) / a(c + 1);
    return nf;
}

template <class Scalar>
std::optional<DenseMatrix<Scalar>> two_vector_complement_nf(const DenseVector<Scalar>& a1,
                                                            const DenseVector<Scalar>& a2,
                                                            const ToleranceConfig& tol) {
    require_valid(a1, "two_vector_complement_nf");
    require_valid(a2, "two_vector_complement_nf");
    tol.validate();
    if (a1.size() != a2.size())
        throw InvalidInputError("two_vector_complement_nf: dimension mismatch");
    const Eigen::Index m = a1.size();
    if (m < 4)
        throw InvalidInputError("two_vector_complement_nf: dimension must be >= 4");

    DenseMatrix<Scalar> pair(2, m);
    pair.row(0) = a1.transpose();
    pair.row(1) = a2.transpose();
    if (rank(pair, tol) < 2)
        throw InvalidInputError("two_vector_complement_nf: a1 and a2 are linearly dependent");

    const Eigen::Index cols = m - 2;
    DenseVector<Scalar> v(cols), vp(cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        // Unknowns are the second-row entry and the diagonal entry of column c.
        Eigen::Matrix<Scalar, 2, 2> M;
        M << a1(1), a1(c + 2), a2(1), a2(c + 2);
        const Scalar det = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
        const double scale = M.cwiseAbs().maxCoeff();
        if (std::abs(det) <= tol.rank_rel_tol * 2.0 * scale * scale)
            return std::nullopt; // singular 2x2 block
        const Scalar b1 = -a1(0), b2 = -a2(0);
        v(c) = (M(1, 1) * b1 - M(0, 1) * b2) / det;
        vp(c) = (M(0, 0) * b2 - M(1, 0) * b1) / det;
    }

    DenseMatrix<Scalar> nf = DenseMatrix<Scalar>::Zero(m, cols);
    nf.row(0).setOnes();
    for (Eigen::Index c = 0; c < cols; ++c) {
        nf(1, c) = v(c);
        nf(c + 2, c) = vp(c);
    }

    // Vanishing-row conditions: if all second-row entries coincide at most
    // one diagonal entry may vanish, otherwise at most two.
    int vp_zeros = 0;
    for (Eigen::Index c = 0; c < cols; ++c) {
        const double colmax = std::max({1.0, std::abs(v(c)), std::abs(vp(c))});
        if (std::abs(vp(c)) <= tol.zero_rel_tol * colmax)
            ++vp_zeros;
    }
    const double vmax = v.cwiseAbs().maxCoeff();
    bool all_equal = true;
    for (Eigen::Index c = 1; c < cols; ++c)
        if (std::abs(v(c) - v(0)) > tol.zero_rel_tol * std::max(1.0, vmax)) {
            all_equal = false;
            break;
        }
    if (vp_zeros > (all_equal ? 1 : 2))
        return std::nullopt;

    // The assembled matrix must itself be a valid normal form: strictly
    // decreasing keys and full column rank, else the general algorithm is
    // the caller's fallback.
    ThetaKey prev;
    for (Eigen::Index c = 0; c < cols; ++c) {
        DenseVector<Scalar> col = nf.col(c);
        Classification cls = classify_image(col, tol.zero_rel_tol);
        if (cls.first_nonzero != 0)
            return std::nullopt;
        ThetaKey key{cls.pattern.count(), std::move(cls.pattern)};
        if (c > 0 && ThetaKey::compare(prev, key) <= 0)
            return std::nullopt;
        prev = std::move(key);
    }
    if (rank(nf, tol) != cols)
        return std::nullopt;
    return nf;
}

template struct Candidate<double>;
template struct Candidate<std::complex<double>>;
template struct NormalFormResult<double>;
template struct NormalFormResult<std::complex<double>>;
template Candidate<double> normalize_candidate<double>(const RealMatrix&, const RealVector&, const ToleranceConfig&);
template Candidate<std::complex<double>> normalize_candidate<std::complex<double>>(const ComplexMatrix&, const ComplexVector&, const ToleranceConfig&);
template NormalFormResult<double> normal_form_standard<double>(const RealMatrix&, const ToleranceConfig&, const NormalFormOptions&);
template NormalFormResult<std::complex<double>> normal_form_standard<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&, const NormalFormOptions&);
template NormalFormResult<double> normal_form_topdown<double>(const RealMatrix&, const ToleranceConfig&, const NormalFormOptions&);
template NormalFormResult<std::complex<double>> normal_form_topdown<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&, const NormalFormOptions&);
template NormalFormResult<double> normal_form<double>(const RealMatrix&, Algorithm, const ToleranceConfig&, const NormalFormOptions&);
template NormalFormResult<std::complex<double>> normal_form<std::complex<double>>(const ComplexMatrix&, Algorithm, const ToleranceConfig&, const NormalFormOptions&);
template RealMatrix orthogonal_complement_nf<double>(const RealVector&, const ToleranceConfig&);
template ComplexMatrix orthogonal_complement_nf<std::complex<double>>(const ComplexVector&, const ToleranceConfig&);
template std::optional<RealMatrix> two_vector_complement_nf<double>(const RealVector&, const RealVector&, const ToleranceConfig&);
template std::optional<ComplexMatrix> two_vector_complement_nf<std::complex<double>>(const ComplexVector&, const ComplexVector&, const ToleranceConfig&);

} // namespace nfbasis
