#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "maxdet/determinant.hpp"
#include "maxdet/sign_matrix.hpp"

namespace maxdet {

struct SearchConfig {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t max_iterations = 10000;  // sweeps per run
    std::size_t restarts = 10;           // extra runs from fresh random starts
    double perturb_strength = 0.05;      // initial per-entry flip probability on a stall
    double cooling = 0.9;                // perturb_strength *= cooling after each perturbation
    std::size_t stall_threshold = 3;     // non-improving sweeps before perturbing
    std::optional<SignMatrix> start;     // first run starts here instead of at random

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// Mutable state of one hill-climbing run.
///
/// Alongside the current matrix the state caches its inverse and log-determinant. Row and column
/// rewrites update that cache with rank-one (Sherman-Morrison) corrections; `refresh` rebuilds it
/// from a fresh LU factorization. The best matrix seen so far is tracked with its exact
/// determinant.
class SearchState {
public:
    SearchState(SignMatrix start, std::uint64_t seed, double temperature);

    const SignMatrix& current() const noexcept { return current_; }
    LogDet current_logdet() const noexcept { return logdet_; }
    bool singular() const noexcept { return logdet_.sign == 0; }

    const SignMatrix& best() const noexcept { return best_; }
    /// Exact determinant of best(); |best_det| never decreases.
    const BigInt& best_det() const noexcept { return best_det_; }

    double temperature() const noexcept { return temperature_; }
    void set_temperature(double t) noexcept { temperature_ = t; }
    std::mt19937_64& rng() noexcept { return rng_; }

    /// Replaces the current matrix (best-so-far is kept) and refactors.
    void reset_current(SignMatrix m);
    /// Refactors the current matrix from scratch. Returns false if it is singular.
    bool refresh();
    /// Compares the current matrix against the best so far, exactly when the float estimate
    /// says it might be at least as large. Returns true when the best was replaced.
    bool record_if_better();

private:
    friend bool optimize_row(SearchState&, std::size_t);
    friend bool optimize_col(SearchState&, std::size_t);
    friend void perturb(SearchState&, double);
    friend bool repair_singular(SearchState&);

    bool rewrite_line(std::size_t index, bool is_row);
    double inv(std::size_t i, std::size_t j) const { return inverse_[i * current_.size() + j]; }

    SignMatrix current_;
    std::vector<double> inverse_;
    LogDet logdet_;
    SignMatrix best_;
    BigInt best_det_;
    double best_log_ = -1.0;  // natural log of |best_det_|, -1 until something nonsingular is seen
    std::mt19937_64 rng_;
    double temperature_;
};

struct SearchResult {
    SignMatrix best;
    BigInt best_det;
    double fraction = 0.0;
    std::size_t iterations_used = 0;
    std::size_t restarts_used = 0;
    std::uint64_t seed = 0;
};

struct SearchProgress {
    std::size_t restart;
    std::size_t iteration;
    double log10_det;
    double fraction;
};
using ProgressCallback = std::function<void(const SearchProgress&)>;

/// Values proportional, by one positive scalar, to the cofactors C_ij of row i: entry j is
/// C_ij / |det m|. Throws std::domain_error when m is numerically singular.
std::vector<double> row_cofactors(const SignMatrix& m, std::size_t i);

/// Rewrites row i so that each entry agrees in sign with sign(det) * C_ij; entries whose cofactor
/// is negligible keep their value. |det| never decreases. Returns true on a strict increase.
/// Throws std::domain_error if the current matrix is singular.
bool optimize_row(SearchState& state, std::size_t i);
/// Column analogue of optimize_row.
bool optimize_col(SearchState& state, std::size_t j);

/// One pass over all rows then all columns, starting from a fresh factorization. A singular
/// current matrix is first repaired with forced single flips.
bool sweep(SearchState& state);

/// Flips each entry independently with probability `strength` (at least one flip is forced).
/// The best-so-far is untouched. The current matrix may come out singular.
void perturb(SearchState& state, double strength);

/// Single random flips until the current matrix is nonsingular; re-randomizes the whole matrix
/// after n^2 failed attempts. Returns true if anything was changed.
bool repair_singular(SearchState& state);

SignMatrix random_sign_matrix(std::size_t n, std::mt19937_64& rng);

/// Sweeps with stall-triggered annealed perturbation, over 1 + restarts runs. Deterministic given
/// the config. Stops early once the best determinant reaches the theoretical bound.
SearchResult hill_climb(const SearchConfig& config, const ProgressCallback& progress = {});

/// Runs `workers` independent hill climbs with seeds seed, seed+1, ... and keeps the largest
/// exact |det|, ties going to the lowest worker index.
SearchResult hill_climb_parallel(const SearchConfig& config, std::size_t workers,
                                 const ProgressCallback& progress = {});

}  // namespace maxdet
