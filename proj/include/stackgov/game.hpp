#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "stackgov/errors.hpp"
#include "stackgov/linalg.hpp"

namespace stackgov {

/// Optimization direction of a player's payoff table.
enum class Sense { Maximize, Minimize };

/// How the follower resolves indifference among its best responses:
/// Optimistic picks the response the leader likes best, Pessimistic the
/// one the leader likes least.
enum class TieBreak { Optimistic, Pessimistic };

/// Default tolerance for membership in a best-response set. LP-derived
/// strategies carry rounding noise, so callers may widen it.
inline constexpr double kBestResponseTol = 1e-9;

/// Mixed strategy of one player: a probability per action.
struct MixedStrategy {
  std::vector<double> probabilities;

  static MixedStrategy pure(std::size_t action, std::size_t n_actions) {
    MixedStrategy s;
    s.probabilities.assign(n_actions, 0.0);
    s.probabilities.at(action) = 1.0;
    return s;
  }

  static MixedStrategy uniform(std::size_t n_actions) {
    MixedStrategy s;
    s.probabilities.assign(n_actions, 1.0 / static_cast<double>(n_actions));
    return s;
  }

  std::size_t size() const { return probabilities.size(); }

  /// Entries nonnegative and summing to 1 within 1e-9.
  bool valid() const {
    double sum = 0.0;
    for (double p : probabilities) {
      if (!std::isfinite(p) || p < 0.0) return false;
      sum += p;
    }
    return !probabilities.empty() && std::fabs(sum - 1.0) <= 1e-9;
  }
};

/// Finite two-player general-sum game. Rows index leader actions, columns
/// follower actions. Each player carries its own optimization sense so
/// minimization-style payoff tables can be loaded unchanged.
struct BimatrixGame {
  Matrix leader_payoffs;
  Matrix follower_payoffs;
  Sense leader_sense = Sense::Maximize;
  Sense follower_sense = Sense::Maximize;

  std::size_t leader_actions() const { return leader_payoffs.rows(); }
  std::size_t follower_actions() const { return leader_payoffs.cols(); }

  /// Throws InvalidArgument unless the tables are nonempty, identically
  /// shaped, and finite.
  void validate() const {
    if (leader_payoffs.rows() == 0 || leader_payoffs.cols() == 0)
      throw InvalidArgument("BimatrixGame: empty payoff table");
    if (leader_payoffs.rows() != follower_payoffs.rows() ||
        leader_payoffs.cols() != follower_payoffs.cols())
      throw InvalidArgument("BimatrixGame: payoff tables differ in shape");
    if (!leader_payoffs.all_finite() || !follower_payoffs.all_finite())
      throw InvalidArgument("BimatrixGame: non-finite payoff entry");
  }
};

/// Leader commitment outcome: a (possibly degenerate) leader mixed
/// strategy, the follower's responding action, and both expected values
/// in the game's original senses.
struct StrategyProfile {
  MixedStrategy leader;
  std::size_t follower_action = 0;
  double leader_value = 0.0;
  double follower_value = 0.0;
};

namespace detail {

inline void check_leader_strategy(const BimatrixGame& game,
                                  const MixedStrategy& leader) {
  if (leader.size() != game.leader_actions())
    throw InvalidArgument("leader strategy length does not match game");
  if (!leader.valid())
    throw InvalidArgument("leader strategy is not a probability vector");
}

}  // namespace detail

/// Expected payoffs when the leader commits to `leader` and the follower
/// plays the pure action `follower_action`: probability-weighted column
/// entries of both tables.
inline std::pair<double, double> expected_payoffs(const BimatrixGame& game,
                                                  const MixedStrategy& leader,
                                                  std::size_t follower_action) {
  game.validate();
  detail::check_leader_strategy(game, leader);
  if (follower_action >= game.follower_actions())
    throw InvalidArgument("follower action out of bounds");
  double lv = 0.0, fv = 0.0;
  for (std::size_t i = 0; i < game.leader_actions(); ++i) {
    const double p = leader.probabilities[i];
    lv += p * game.leader_payoffs(i, follower_action);
    fv += p * game.follower_payoffs(i, follower_action);
  }
  return {lv, fv};
}

/// All follower actions whose expected payoff is within `tol` of the
/// follower-optimal value under the game's follower sense. Never empty.
/// Returned sorted ascending.
inline std::vector<std::size_t> follower_best_response_set(
    const BimatrixGame& game, const MixedStrategy& leader,
    double tol = kBestResponseTol) {
  game.validate();
  detail::check_leader_strategy(game, leader);
  if (tol < 0.0) throw InvalidArgument("best-response tolerance must be >= 0");

  const bool maximize = game.follower_sense == Sense::Maximize;
  std::vector<double> values(game.follower_actions(), 0.0);
  for (std::size_t j = 0; j < game.follower_actions(); ++j)
    values[j] = expected_payoffs(game, leader, j).second;

  double best = values[0];
  for (double v : values) best = maximize ? std::max(best, v) : std::min(best, v);

  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double gap = maximize ? best - values[j] : values[j] - best;
    if (gap <= tol) out.push_back(j);
  }
  return out;
}

/// Selects one action from a best-response set. Optimistic optimizes the
/// leader's expected value under the leader's sense, Pessimistic
/// pessimizes it; residual ties go to the lowest action index.
inline std::size_t tie_break(const BimatrixGame& game,
                             const MixedStrategy& leader,
                             const std::vector<std::size_t>& br_set,
                             TieBreak mode) {
  game.validate();
  detail::check_leader_strategy(game, leader);
  if (br_set.empty()) throw InvalidArgument("tie_break: empty best-response set");

  const bool leader_max = game.leader_sense == Sense::Maximize;
  std::size_t chosen = br_set.front();
  double chosen_value = expected_payoffs(game, leader, chosen).first;
  for (std::size_t k = 1; k < br_set.size(); ++k) {
    const std::size_t j = br_set[k];
    if (j >= game.follower_actions())
      throw InvalidArgument("tie_break: action index out of bounds");
    const double v = expected_payoffs(game, leader, j).first;
    // "better for the leader" in the leader's own sense
    const bool better = leader_max ? v > chosen_value : v < chosen_value;
    const bool worse = leader_max ? v < chosen_value : v > chosen_value;
    const bool take = mode == TieBreak::Optimistic ? better : worse;
    if (take) {
      chosen = j;
      chosen_value = v;
    }
  }
  return chosen;
}

/// Equivalent game with both senses flipped to Maximize; any Minimize
/// table is negated. Argmax/argmin structure is unchanged.
inline BimatrixGame canonicalize(const BimatrixGame& game) {
  game.validate();
  BimatrixGame out = game;
  auto negate = [](Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
  };
  if (out.leader_sense == Sense::Minimize) {
    negate(out.leader_payoffs);
    out.leader_sense = Sense::Maximize;
  }
  if (out.follower_sense == Sense::Minimize) {
    negate(out.follower_payoffs);
    out.follower_sense = Sense::Maximize;
  }
  return out;
}

}  // namespace stackgov
