#include "maxdet/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "maxdet/bounds.hpp"

namespace maxdet {

namespace {

// Relative cut-off under which a cofactor is treated as zero.
constexpr double kNegligibleCofactor = 1e-9;
// Minimum relative gain in log|det| that counts as an improvement.
constexpr double kImprovementTolerance = 1e-12;

double log_abs(const BigInt& v) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(std::abs(mant)) + static_cast<double>(exp) * std::numbers::ln2;
}

bool improves(double old_log, double new_log) {
    return new_log - old_log > kImprovementTolerance * std::max(1.0, std::abs(old_log));
}

}  // namespace

void SearchConfig::validate() const {
    if (n == 0) throw std::invalid_argument("search: n must be positive");
    if (max_iterations == 0) throw std::invalid_argument("search: max_iterations must be positive");
    if (!(perturb_strength > 0.0 && perturb_strength <= 1.0))
        throw std::invalid_argument("search: perturb_strength must lie in (0, 1]");
    if (!(cooling > 0.0 && cooling <= 1.0)) throw std::invalid_argument("search: cooling must lie in (0, 1]");
    if (stall_threshold == 0) throw std::invalid_argument("search: stall_threshold must be positive");
    if (start && start->size() != n)
        throw std::invalid_argument("search: start matrix has order " + std::to_string(start->size()) +
                                    ", expected " + std::to_string(n));
}

SearchState::SearchState(SignMatrix start, std::uint64_t seed, double temperature)
    : current_(start), best_(start), best_det_(0), rng_(seed), temperature_(temperature) {
    refresh();
    record_if_better();
}

void SearchState::reset_current(SignMatrix m) {
    if (m.size() != current_.size()) throw std::invalid_argument("SearchState: dimension mismatch");
    current_ = std::move(m);
    refresh();
}

bool SearchState::refresh() {
    auto inv = invert(current_);
    if (!inv) {
        inverse_.clear();
        logdet_ = {0, 0.0};
        return false;
    }
    inverse_ = std::move(inv->inverse);
    logdet_ = inv->logdet;
    return true;
}

bool SearchState::record_if_better() {
    if (singular()) return false;
    const double slack = 1e-9 * std::max(1.0, best_log_);
    if (best_det_ != 0 && logdet_.log_magnitude < best_log_ - slack) return false;
    if (best_det_ != 0 && current_ == best_) return false;
    BigInt det = determinant_exact(current_);
    if (abs(det) <= abs(best_det_)) return false;
    best_ = current_;
    best_det_ = std::move(det);
    best_log_ = log_abs(best_det_);
    return true;
}

bool SearchState::rewrite_line(std::size_t index, bool is_row) {
    if (singular()) throw std::domain_error("optimize: current matrix is singular");
    const std::size_t n = current_.size();

    // Row i: C_ij = det * inv(j, i). Column j: C_ij = det * inv(j, i) with i running.
    std::vector<double> weight(n);
    double largest = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        weight[k] = is_row ? inv(k, index) : inv(index, k);
        largest = std::max(largest, std::abs(weight[k]));
    }

    // d = target - current along the line; target = sign(weight) keeps sign(det).
    std::vector<double> delta(n, 0.0);
    bool any = false;
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(weight[k]) <= kNegligibleCofactor * largest) continue;
        const int target = weight[k] > 0 ? 1 : -1;
        const int cur = is_row ? current_(index, k) : current_(k, index);
        if (target != cur) {
            delta[k] = target - cur;
            any = true;
        }
    }
    if (!any) return false;

    // det'/det = 1 + sum_k delta_k weight_k.
    double ratio = 1.0;
    for (std::size_t k = 0; k < n; ++k) ratio += delta[k] * weight[k];

    // Sherman-Morrison. Row change A' = A + e_i d^T:  A'^-1 = A^-1 - (A^-1 e_i)(d^T A^-1) / ratio.
    // Column change A' = A + d e_j^T:                 A'^-1 = A^-1 - (A^-1 d)(e_j^T A^-1) / ratio.
    std::vector<double> u(n, 0.0);
    std::vector<double> v(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        if (is_row) {
            u[k] = inv(k, index);
            for (std::size_t j = 0; j < n; ++j)
                if (delta[j] != 0.0) v[k] += delta[j] * inv(j, k);
        } else {
            for (std::size_t j = 0; j < n; ++j)
                if (delta[j] != 0.0) u[k] += inv(k, j) * delta[j];
            v[k] = inv(index, k);
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        const double scale = u[r] / ratio;
        if (scale == 0.0) continue;
        for (std::size_t c = 0; c < n; ++c) inverse_[r * n + c] -= scale * v[c];
    }

    for (std::size_t k = 0; k < n; ++k) {
        if (delta[k] == 0.0) continue;
        if (is_row)
            current_.flip(index, k);
        else
            current_.flip(k, index);
    }

    const double old_log = logdet_.log_magnitude;
    logdet_.log_magnitude += std::log(std::abs(ratio));
    if (ratio < 0) logdet_.sign = -logdet_.sign;
    return improves(old_log, logdet_.log_magnitude);
}

std::vector<double> row_cofactors(const SignMatrix& m, std::size_t i) {
    const std::size_t n = m.size();
    if (i >= n) throw std::out_of_range("row_cofactors: row index out of range");
    auto inv = invert(m);
    if (!inv) throw std::domain_error("row_cofactors: matrix is singular");
    std::vector<double> c(n);
    const double s = inv->logdet.sign;
    for (std::size_t j = 0; j < n; ++j) c[j] = s * inv->inverse[j * n + i];
    return c;
}

bool optimize_row(SearchState& state, std::size_t i) {
    if (i >= state.current().size()) throw std::out_of_range("optimize_row: row index out of range");
    return state.rewrite_line(i, true);
}

bool optimize_col(SearchState& state, std::size_t j) {
    if (j >= state.current().size()) throw std::out_of_range("optimize_col: column index out of range");
    return state.rewrite_line(j, false);
}

bool sweep(SearchState& state) {
    if (!state.refresh()) repair_singular(state);
    const std::size_t n = state.current().size();
    bool improved = false;
    for (std::size_t i = 0; i < n; ++i) improved |= optimize_row(state, i);
    for (std::size_t j = 0; j < n; ++j) improved |= optimize_col(state, j);
    return improved;
}

void perturb(SearchState& state, double strength) {
    if (!(strength > 0.0 && strength <= 1.0)) throw std::invalid_argument("perturb: strength must lie in (0, 1]");
    const std::size_t n = state.current_.size();
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    bool flipped = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (coin(state.rng_) < strength) {
                state.current_.flip(i, j);
                flipped = true;
            }
    if (!flipped) {
        std::uniform_int_distribution<std::size_t> pick(0, n * n - 1);
        const std::size_t k = pick(state.rng_);
        state.current_.flip(k / n, k % n);
    }
    state.refresh();
}

bool repair_singular(SearchState& state) {
    const std::size_t n = state.current_.size();
    if (!state.singular() || state.refresh()) return false;
    std::uniform_int_distribution<std::size_t> pick(0, n * n - 1);
    while (true) {
        for (std::size_t attempt = 0; attempt < n * n; ++attempt) {
            const std::size_t k = pick(state.rng_);
            state.current_.flip(k / n, k % n);
            if (state.refresh()) return true;
        }
        state.current_ = random_sign_matrix(n, state.rng_);
        if (state.refresh()) return true;
    }
}

SignMatrix random_sign_matrix(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::int8_t> entries(n * n);
    std::uint64_t bits = 0;
    int left = 0;
    for (auto& e : entries) {
        if (left == 0) {
            bits = rng();
            left = 64;
        }
        e = (bits & 1) ? 1 : -1;
        bits >>= 1;
        --left;
    }
    return SignMatrix(n, std::move(entries));
}

SearchResult hill_climb(const SearchConfig& config, const ProgressCallback& progress) {
    config.validate();
    const std::size_t n = config.n;
    const Rational bound = upper_bound_sq(n).value_sq;

    std::mt19937_64 seeder(config.seed);
    SignMatrix first = config.start ? *config.start : random_sign_matrix(n, seeder);
    SearchState state(first, seeder(), config.perturb_strength);

    SearchResult result{state.best(), state.best_det(), 0.0, 0, 0, config.seed};
    auto at_bound = [&] { return Rational(state.best_det() * state.best_det()) == bound; };
    auto report = [&](std::size_t restart, std::size_t iteration) {
        if (progress)
            progress({restart, iteration, log_abs(state.best_det()) / std::numbers::ln10,
                      fraction_of_bound(state.best_det(), n)});
    };
    if (state.best_det() != 0) report(0, 0);

    bool done = state.best_det() != 0 && at_bound();
    for (std::size_t run = 0; run <= config.restarts && !done; ++run) {
        if (run > 0) {
            state.reset_current(random_sign_matrix(n, state.rng()));
            state.set_temperature(config.perturb_strength);
            if (state.record_if_better()) report(run, result.iterations_used);
        }
        result.restarts_used = run;
        std::size_t stall = 0;
        for (std::size_t it = 0; it < config.max_iterations; ++it) {
            const bool improved = sweep(state);
            ++result.iterations_used;
            if (state.record_if_better()) {
                report(run, result.iterations_used);
                if (at_bound()) {
                    done = true;
                    break;
                }
            }
            if (improved) {
                stall = 0;
            } else if (++stall >= config.stall_threshold) {
                perturb(state, state.temperature());
                state.set_temperature(state.temperature() * config.cooling);
                stall = 0;
            }
        }
    }

    result.best = state.best();
    result.best_det = determinant_exact(result.best);
    result.fraction = fraction_of_bound(result.best_det, n);
    return result;
}

SearchResult hill_climb_parallel(const SearchConfig& config, std::size_t workers, const ProgressCallback& progress) {
    config.validate();
    if (workers <= 1) return hill_climb(config, progress);

    std::vector<std::optional<SearchResult>> results(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                SearchConfig local = config;
                local.seed = config.seed + w;
                // Only worker 0 reports progress; callbacks are not required to be thread-safe.
                results[w] = hill_climb(local, w == 0 ? progress : ProgressCallback{});
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::size_t winner = 0;
    for (std::size_t w = 1; w < workers; ++w)
        if (abs(results[w]->best_det) > abs(results[winner]->best_det)) winner = w;
    SearchResult out = std::move(*results[winner]);
    out.seed = config.seed;
    return out;
}

}  // namespace maxdet
