#include "motzkin/paths.hpp"

#include <algorithm>
#include <cctype>

namespace motzkin {

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  heights_.reserve(steps_.size());
  int h = 0;
  for (Step s : steps_) {
    h += delta(s);
    heights_.push_back(h);
  }
}

LatticePath parse_path(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    switch (c) {
      case 'u': case 'U': case '+': steps.push_back(Step::Up); break;
      case 'h': case 'H': case '0': steps.push_back(Step::Flat); break;
      case 'd': case 'D': case '-': steps.push_back(Step::Down); break;
      default:
        if (std::isspace(static_cast<unsigned char>(c))) break;
        throw ParseError("unknown step character '" + std::string(1, c) +
                         "' at position " + std::to_string(i));
    }
  }
  return LatticePath(std::move(steps));
}

std::string format_path(const LatticePath& path) {
  std::string out;
  out.reserve(path.size());
  for (Step s : path.steps()) out.push_back(to_char(s));
  return out;
}

namespace {

bool heights_admissible(const LatticePath& p) {
  const auto& h = p.heights();
  if (p.empty()) return true;
  return std::all_of(h.begin(), h.end(), [](int v) { return v >= 0; }) &&
         h.back() == 0;
}

// Checks the merged Flat/Up subsequence strictly alternates starting with
// `first`, with n of each step kind and length 3n.
bool alternating_class(const LatticePath& p, Step first) {
  if (p.size() % 3 != 0) return false;
  std::size_t n = p.size() / 3;
  std::size_t ups = 0, flats = 0;
  Step expect = first;
  for (Step s : p.steps()) {
    if (s == Step::Down) continue;
    if (s != expect) return false;
    expect = (expect == Step::Up) ? Step::Flat : Step::Up;
    (s == Step::Up ? ups : flats)++;
  }
  return ups == n && flats == n;
}

}  // namespace

PathClass classify(const LatticePath& path) {
  PathClass c;
  c.motzkin = heights_admissible(path);
  if (path.empty()) {
    c.s_motzkin = c.t_motzkin = true;  // S_0 = T_0 = 1
    return c;
  }
  if (c.motzkin) {
    c.s_motzkin = alternating_class(path, Step::Flat);
    c.t_motzkin = alternating_class(path, Step::Up);
  }
  // u_path <=> Flat-prefixed path is S-Motzkin; the prefix changes no height.
  if (c.motzkin && (path.size() + 1) % 3 == 0) {
    std::size_t n = (path.size() + 1) / 3;
    std::size_t ups = 0, flats = 0;
    bool alt = true;
    Step expect = Step::Up;  // after the implicit leading Flat
    for (Step s : path.steps()) {
      if (s == Step::Down) continue;
      if (s != expect) { alt = false; break; }
      expect = (expect == Step::Up) ? Step::Flat : Step::Up;
      (s == Step::Up ? ups : flats)++;
    }
    c.u_path = alt && ups == n && flats == n - 1;
  }
  return c;
}

LatticePath swap_flat_up(const LatticePath& path) {
  std::vector<Step> out;
  out.reserve(path.size());
  for (Step s : path.steps()) {
    out.push_back(s == Step::Up ? Step::Flat : (s == Step::Flat ? Step::Up : s));
  }
  return LatticePath(std::move(out));
}

PathStatistics path_statistics(const LatticePath& path) {
  if (!classify(path).motzkin) {
    throw DomainError("path_statistics requires a Motzkin path, got \"" +
                      format_path(path) + "\"");
  }
  PathStatistics st;
  const std::size_t n = path.size();
  for (std::size_t i = 1; i <= n; ++i) {
    if (path.height_after(i) == 0) ++st.returns;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (path[i] == Step::Up && path[i + 1] == Step::Down) ++st.peaks_ud;
    if (path[i] == Step::Down && path[i + 1] == Step::Up) {
      ++st.valleys_du;
      if (path.height_after(i + 1) == 0) ++st.axis_valleys_du;
    }
  }
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (path[i] == Step::Up && path[i + 1] == Step::Flat &&
        path[i + 2] == Step::Down) {
      ++st.peaks_uhd;
    }
    if (path[i] == Step::Down && path[i + 1] == Step::Flat &&
        path[i + 2] == Step::Up) {
      ++st.valleys_dhu;
      if (path.height_after(i + 1) == 0 && path.height_after(i + 2) == 0) {
        ++st.axis_valleys_dhu;
      }
    }
  }
  return st;
}

long statistic_value(const PathStatistics& s, Statistic which) {
  switch (which) {
    case Statistic::Returns: return s.returns;
    case Statistic::PeaksUd: return s.peaks_ud;
    case Statistic::PeaksUhd: return s.peaks_uhd;
    case Statistic::ValleysDu: return s.valleys_du;
    case Statistic::ValleysDhu: return s.valleys_dhu;
    case Statistic::AxisValleysDu: return s.axis_valleys_du;
    case Statistic::AxisValleysDhu: return s.axis_valleys_dhu;
  }
  throw DomainError("unknown statistic");
}

std::string statistic_name(Statistic s) {
  switch (s) {
    case Statistic::Returns: return "returns";
    case Statistic::PeaksUd: return "peaks-ud";
    case Statistic::PeaksUhd: return "peaks-uhd";
    case Statistic::ValleysDu: return "valleys-du";
    case Statistic::ValleysDhu: return "valleys-dhu";
    case Statistic::AxisValleysDu: return "axis-valleys-du";
    case Statistic::AxisValleysDhu: return "axis-valleys-dhu";
  }
  throw DomainError("unknown statistic");
}

Statistic statistic_from_name(std::string_view name) {
  std::string key;
  for (char c : name) {
    key.push_back(c == '_' ? '-' : static_cast<char>(std::tolower(
                                       static_cast<unsigned char>(c))));
  }
  // singular/plural tolerated for the axis-valley flags used by the CLI
  if (key == "returns" || key == "return") return Statistic::Returns;
  if (key == "peaks-ud" || key == "peak-ud") return Statistic::PeaksUd;
  if (key == "peaks-uhd" || key == "peak-uhd") return Statistic::PeaksUhd;
  if (key == "valleys-du" || key == "valley-du") return Statistic::ValleysDu;
  if (key == "valleys-dhu" || key == "valley-dhu") return Statistic::ValleysDhu;
  if (key == "axis-valleys-du" || key == "axis-valley-du")
    return Statistic::AxisValleysDu;
  if (key == "axis-valleys-dhu" || key == "axis-valley-dhu")
    return Statistic::AxisValleysDhu;
  throw DomainError("unknown statistic \"" + std::string(name) + "\"");
}

PieceDecomposition decompose_pieces(const LatticePath& path) {
  if (path.empty() || !classify(path).s_motzkin) {
    throw DomainError("decompose_pieces requires a nonempty S-Motzkin path");
  }
  PieceDecomposition out;
  const std::size_t n = path.size();
  std::size_t i = 1;  // skip the initial Flat
  while (true) {
    // each round starts at an Up step
    std::size_t up = i;
    std::size_t j = i + 1;
    while (j < n && path[j] == Step::Down) ++j;
    if (j == n) {  // the closing Up and its Down run
      out.final_up_position = up;
      out.trailing_downs = static_cast<int>(n - up - 1);
      return out;
    }
    // path[j] is the piece's Flat; greedily take the Downs that follow
    int before = static_cast<int>(j - up - 1);
    std::size_t k = j + 1;
    while (k < n && path[k] == Step::Down) ++k;
    int after = static_cast<int>(k - j - 1);
    out.pieces.push_back(Piece{up, before + 1, before + after});
    i = k;
  }
}

}  // namespace motzkin
