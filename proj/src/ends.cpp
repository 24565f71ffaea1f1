#include "schreier/ends.hpp"

#include <algorithm>
#include <deque>

#include "schreier/errors.hpp"

namespace schreier {

namespace {

// Ball of radius `radius` at every level K, kept for the last few levels.
class LevelScan {
 public:
  LevelScan(FiberPoint& p, std::uint32_t radius, std::size_t keep)
      : p_(p), radius_(radius), keep_(keep), letters_(p.tower().alphabet().letters()) {}

  // Advances to the next level; returns cumulative counts by radius.
  const std::vector<std::uint64_t>& next() {
    const std::size_t K = level_++;
    BallSnapshot b = detail::bfs_ball(p_.tower().view(K), letters_, p_.vertex(K), radius_);
    b.level = K;
    std::vector<std::uint64_t> counts(radius_ + 1, 0);
    for (const auto& m : b.members) ++counts[m.second];
    for (std::uint32_t d = 1; d <= radius_; ++d) counts[d] += counts[d - 1];
    if (!history_.empty())
      for (std::uint32_t d = 0; d <= radius_; ++d)
        if (counts[d] < history_.back()[d])
          throw Error("ball size decreased between levels " + std::to_string(K - 1) + " and " + std::to_string(K) +
                      ": the tower is not a covering");
    history_.push_back(std::move(counts));
    snapshots_.push_back(std::move(b));
    if (history_.size() > keep_) {
      history_.pop_front();
      snapshots_.pop_front();
    }
    return history_.back();
  }

  std::size_t level() const { return level_; }
  const std::deque<std::vector<std::uint64_t>>& history() const { return history_; }
  const std::deque<BallSnapshot>& snapshots() const { return snapshots_; }

 private:
  FiberPoint& p_;
  std::uint32_t radius_;
  std::size_t keep_;
  std::vector<Letter> letters_;
  std::size_t level_ = 0;
  std::deque<std::vector<std::uint64_t>> history_;
  std::deque<BallSnapshot> snapshots_;
};

// Index into the kept history of the first level of a plateau of length
// confirm+1 ending at the newest level, or -1.
int plateau_start(const std::deque<std::vector<std::uint64_t>>& h, std::uint32_t radius, std::uint32_t confirm) {
  if (h.size() < confirm + 1) return -1;
  const std::size_t first = h.size() - confirm - 1;
  for (std::size_t i = first + 1; i < h.size(); ++i)
    if (h[i][radius] != h[first][radius]) return -1;
  // Smallest K: the level before must differ (or not exist).
  if (first > 0 && h[first - 1][radius] == h[first][radius]) return -1;
  return static_cast<int>(first);
}

BallSnapshot truncate(const BallSnapshot& b, std::uint32_t radius) {
  BallSnapshot out;
  out.center = b.center;
  out.radius = radius;
  out.level = b.level;
  for (const auto& m : b.members)
    if (m.second <= radius) out.members.push_back(m);
  return out;
}

}  // namespace

void EndsParams::validate() const {
  if (r_schedule.empty()) throw ConfigError("r_schedule must not be empty");
  for (std::size_t i = 0; i < r_schedule.size(); ++i) {
    if (r_schedule[i] == 0) throw ConfigError("r_schedule entries must be positive");
    if (i && r_schedule[i] <= r_schedule[i - 1]) throw ConfigError("r_schedule must be increasing");
  }
  if (R_factor < 4) throw ConfigError("R_factor must be at least 4");
  if (confirm < 1) throw ConfigError("confirm must be at least 1");
  if (window < 1) throw ConfigError("window must be at least 1");
  if (std::uint64_t{r_schedule.back()} * (R_factor + window) > 1'000'000) throw ConfigError("radii too large");
}

BallSnapshot stable_ball(FiberPoint& p, std::uint32_t R, std::uint32_t confirm, std::size_t max_level) {
  if (confirm < 1) throw InvalidInput("stable_ball: confirm must be at least 1");
  const std::size_t limit = std::min(max_level, p.tower().depth());
  LevelScan scan(p, R, confirm + 2);
  while (scan.level() <= limit) {
    scan.next();
    int start = plateau_start(scan.history(), R, confirm);
    // With a full window kept, plateau_start only rejects when the level
    // before is equal too, which cannot happen: that level would have ended
    // the search one step earlier.
    if (start >= 0) return scan.snapshots()[start];
  }
  const auto& h = scan.history();
  std::uint64_t last = h.back()[R], prev = h.size() > 1 ? h[h.size() - 2][R] : 0;
  throw BudgetExhausted("stable_ball: no stabilization of radius " + std::to_string(R) + " by level " +
                            std::to_string(limit),
                        prev, last);
}

std::string EndsReport::verdict_text() const { return verdict ? std::to_string(*verdict) : "unstable"; }

EndsReport estimate_ends(FiberPoint& p, const EndsParams& params) {
  params.validate();
  EndsReport report;
  report.point = p.id();
  report.tower = p.tower().name();
  report.params = params;

  struct Pending {
    std::uint32_t r, R;
  };
  std::vector<Pending> pending;
  for (std::uint32_t r : params.r_schedule)
    for (std::uint32_t i = 0; i < params.window; ++i) pending.push_back({r, (params.R_factor + i) * r});
  const std::uint32_t radius = std::max_element(pending.begin(), pending.end(), [](auto& x, auto& y) {
                                 return x.R < y.R;
                               })->R + 1;
  std::vector<std::optional<EndsRow>> done(pending.size());
  std::size_t remaining = pending.size();

  const std::size_t limit = std::min(params.max_level, p.tower().depth());
  LevelScan scan(p, radius, params.confirm + 2);
  while (remaining && scan.level() <= limit) {
    scan.next();
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (done[i]) continue;
      // The shell r < d <= R is read off a ball that is injective out to R+1,
      // so no spurious edges join its vertices.
      int start = plateau_start(scan.history(), pending[i].R + 1, params.confirm);
      if (start < 0) continue;
      const BallSnapshot& full = scan.snapshots()[start];
      BallSnapshot b = truncate(full, pending[i].R);
      auto view = p.tower().view(full.level);
      AnnulusCount c = detail::annulus_in_ball(view, p.tower().alphabet().letters(), b, pending[i].r, pending[i].R);
      done[i] = EndsRow{pending[i].r, pending[i].R, full.level, b.size(), c.count, c.touching};
      --remaining;
    }
  }
  if (remaining) {
    const auto& h = scan.history();
    std::uint32_t worst = 0;
    for (std::size_t i = 0; i < pending.size(); ++i)
      if (!done[i]) worst = std::max(worst, pending[i].R + 1);
    std::uint64_t last = h.back()[worst], prev = h.size() > 1 ? h[h.size() - 2][worst] : 0;
    throw BudgetExhausted("estimate_ends: ball of radius " + std::to_string(worst) + " around " + p.id() +
                              " did not stabilize by level " + std::to_string(limit),
                          prev, last);
  }

  for (std::size_t i = 0; i < pending.size(); ++i) report.rows.push_back(*done[i]);
  for (std::size_t ri = 0; ri < params.r_schedule.size(); ++ri) {
    std::optional<std::uint32_t> plateau = report.rows[ri * params.window].touching;
    for (std::uint32_t i = 1; i < params.window; ++i)
      if (report.rows[ri * params.window + i].touching != *plateau) plateau.reset();
    report.plateaus.push_back(plateau);
  }
  const std::size_t m = report.plateaus.size();
  if (m == 1) report.verdict = report.plateaus[0];
  else if (report.plateaus[m - 1] && report.plateaus[m - 1] == report.plateaus[m - 2])
    report.verdict = report.plateaus[m - 1];
  return report;
}

}  // namespace schreier
