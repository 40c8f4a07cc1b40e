#ifndef MOTZKIN_PATHS_HPP
#define MOTZKIN_PATHS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "motzkin/rational.hpp"

namespace motzkin {

enum class Step : std::uint8_t { Up, Flat, Down };

constexpr int delta(Step s) {
  return s == Step::Up ? 1 : (s == Step::Down ? -1 : 0);
}

constexpr char to_char(Step s) {
  return s == Step::Up ? 'u' : (s == Step::Flat ? 'h' : 'd');
}

/// Immutable step sequence with its height profile cached at construction.
/// Heights are h(1..len); h(0) = 0 is implicit.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps);

  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }
  const std::vector<Step>& steps() const { return steps_; }
  const std::vector<int>& heights() const { return heights_; }
  /// h(k) for 0 <= k <= size(); h(0) = 0.
  int height_after(std::size_t k) const { return k == 0 ? 0 : heights_[k - 1]; }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
  std::vector<int> heights_;
};

/// Accepts 'u'/'U'/'+', 'h'/'H'/'0', 'd'/'D'/'-'; whitespace ignored.
LatticePath parse_path(std::string_view text);

/// Canonical lowercase "uhd" alphabet; inverse of parse_path.
std::string format_path(const LatticePath& path);

struct PathClass {
  bool motzkin = false;
  bool s_motzkin = false;
  bool t_motzkin = false;
  bool u_path = false;
};

PathClass classify(const LatticePath& path);

/// Every Flat becomes Up and vice versa; Down unchanged.
LatticePath swap_flat_up(const LatticePath& path);

struct PathStatistics {
  long returns = 0;          // steps ending at height 0
  long peaks_ud = 0;         // adjacent (Up, Down)
  long peaks_uhd = 0;        // adjacent (Up, Flat, Down)
  long valleys_du = 0;       // adjacent (Down, Up)
  long valleys_dhu = 0;      // adjacent (Down, Flat, Up)
  long axis_valleys_du = 0;  // valleys_du with interior point at height 0
  long axis_valleys_dhu = 0; // valleys_dhu with both interior points at height 0
};

/// Requires a Motzkin path.
PathStatistics path_statistics(const LatticePath& path);

enum class Statistic {
  Returns,
  PeaksUd,
  PeaksUhd,
  ValleysDu,
  ValleysDhu,
  AxisValleysDu,
  AxisValleysDhu,
};

inline constexpr Statistic kAllStatistics[] = {
    Statistic::Returns,       Statistic::PeaksUd,       Statistic::PeaksUhd,
    Statistic::ValleysDu,     Statistic::ValleysDhu,    Statistic::AxisValleysDu,
    Statistic::AxisValleysDhu};

long statistic_value(const PathStatistics& stats, Statistic s);
std::string statistic_name(Statistic s);
/// Accepts "returns", "peaks-ud", "peaks_ud", "axis-valley-du", ...
Statistic statistic_from_name(std::string_view name);

/// One piece of the canonical S-path factorization: Up, Down*, Flat, Down*.
/// The characteristic pair is (down_count, flat_position), Up at position 0.
struct Piece {
  std::size_t up_position = 0;  // 0-based index into the path
  int flat_position = 0;        // i, 1 <= i <= down_count + 1
  int down_count = 0;           // t
  friend bool operator==(const Piece&, const Piece&) = default;
};

struct PieceDecomposition {
  std::vector<Piece> pieces;         // left to right
  std::size_t final_up_position = 0; // the closing Up
  int trailing_downs = 0;            // c
};

/// Requires a nonempty S-Motzkin path; concatenating
/// Flat . pieces . Up . Down^c reproduces the input.
PieceDecomposition decompose_pieces(const LatticePath& path);

}  // namespace motzkin

#endif
