#include "coxcluster/wiring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coxcluster {

int WiringDiagram::crossing_count() const {
  int c = 0;
  for (const Mark& m : marks) c += (m.kind == Kind::cross);
  return c;
}

Word WiringDiagram::crossing_word() const {
  Word w;
  for (const Mark& m : marks)
    if (m.kind == Kind::cross) w.push_back(m.level);
  return w;
}

bool is_type_a(const CartanData& cd) {
  if (!cd.simply_laced()) return false;
  for (int i = 1; i <= cd.rank(); ++i)
    for (int j = i + 1; j <= cd.rank(); ++j)
      if ((cd.a(i, j) != 0) != (j == i + 1)) return false;
  return true;
}

namespace {

void require_type_a(const CartanData& cd) {
  if (!is_type_a(cd))
    throw DomainError("wiring diagrams are defined for type A only");
}

void finish_margins(WiringDiagram& d) {
  // Trace the strands: a crossing swaps the two heights, a tangency does not.
  std::vector<int> at(d.strands + 1);  // at[h] = strand currently at height h
  std::iota(at.begin(), at.end(), 0);
  for (const WiringDiagram::Mark& m : d.marks)
    if (m.kind == WiringDiagram::Kind::cross)
      std::swap(at[m.level], at[m.level + 1]);
  d.left_labels.assign(d.strands, 0);
  d.right_labels.resize(d.strands);
  std::iota(d.right_labels.begin(), d.right_labels.end(), 1);
  for (int h = 1; h <= d.strands; ++h) d.left_labels[at[h] - 1] = h;
}

}  // namespace

WiringDiagram wiring_from_word(const CartanData& cd, const Word& word) {
  require_type_a(cd);
  WiringDiagram d;
  d.strands = cd.rank() + 1;
  int col = 0;
  for (int letter : word) {
    if (letter < 1 || letter > cd.rank())
      throw DomainError("word letter out of range");
    d.marks.push_back({++col, letter, WiringDiagram::Kind::cross, false});
  }
  finish_margins(d);
  return d;
}

WiringDiagram wiring_for_selection(const AdaptedFrame& frame,
                                   const Selection& sel) {
  require_type_a(frame.cartan());
  validate_selection(frame, sel);

  bool cluster = is_reduced_w0(frame, sel);
  std::map<int, int> circles;
  int columns = frame.size();
  if (cluster) {
    circles = projective_positions(frame, sel);
    for (auto [t, p] : circles) columns = std::max(columns, p);
  }
  int copies = (columns + frame.size() - 1) / frame.size();
  LongWord lw = long_word(frame, sel, copies);

  WiringDiagram d;
  d.strands = frame.rank() + 1;
  std::vector<char> circled(columns + 1, 0);
  for (auto [t, p] : circles) circled[p] = 1;
  for (int c = 1; c <= columns; ++c) {
    d.marks.push_back({c, lw.letters[c - 1],
                       lw.deleted[c - 1] ? WiringDiagram::Kind::tangent
                                         : WiringDiagram::Kind::cross,
                       circled[c] != 0});
  }
  finish_margins(d);
  return d;
}

WiringDiagram wiring_w0(const AdaptedFrame& frame) {
  return wiring_from_word(frame.cartan(), frame.w0_word());
}

std::string geometry_listing(const WiringDiagram& d) {
  std::ostringstream os;
  os << "strands " << d.strands << "\n";
  for (const WiringDiagram::Mark& m : d.marks) {
    os << m.column << ' ' << m.level << ' '
       << (m.kind == WiringDiagram::Kind::cross ? "cross" : "tangent");
    if (m.circled) os << " circle";
    os << "\n";
  }
  os << "left";
  for (int l : d.left_labels) os << ' ' << l;
  os << "\nright";
  for (int l : d.right_labels) os << ' ' << l;
  os << "\n";
  return os.str();
}

std::string wiring_svg(const WiringDiagram& d) {
  const int dx = 40, dy = 40;
  int cols = static_cast<int>(d.marks.size());
  int width = dx * (cols + 2), height = dy * (d.strands + 1);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\">\n";

  // heights[s] = height of strand s before each column
  std::vector<int> height_of(d.strands + 1);
  std::iota(height_of.begin(), height_of.end(), 0);
  std::vector<std::ostringstream> path(d.strands + 1);
  auto x_of = [&](int col) { return dx / 2 + dx * col; };
  auto y_of = [&](int h) { return dy * h; };
  for (int s = 1; s <= d.strands; ++s)
    path[s] << "M " << x_of(0) << ' ' << y_of(s);

  for (int c = 0; c < cols; ++c) {
    const WiringDiagram::Mark& m = d.marks[c];
    int lo = m.level, hi = m.level + 1;
    std::vector<int> at(d.strands + 1, 0);
    for (int s = 1; s <= d.strands; ++s) at[height_of[s]] = s;
    int a = at[lo], b = at[hi];
    int x0 = x_of(c), x1 = x_of(c + 1), xm = (x0 + x1) / 2;
    for (int s = 1; s <= d.strands; ++s) {
      if (s != a && s != b) {
        path[s] << " L " << x1 << ' ' << y_of(height_of[s]);
        continue;
      }
      int y0 = y_of(height_of[s]);
      if (m.kind == WiringDiagram::Kind::cross) {
        int target = (s == a) ? hi : lo;
        path[s] << " C " << xm << ' ' << y0 << ' ' << xm << ' '
                << y_of(target) << ' ' << x1 << ' ' << y_of(target);
        height_of[s] = target;
      } else {
        // tangency: bulge toward the meeting line, then return
        int ym = (y_of(lo) + y_of(hi)) / 2 + (s == a ? -4 : 4);
        path[s] << " C " << xm << ' ' << ym << ' ' << xm << ' ' << ym << ' '
                << x1 << ' ' << y0;
      }
    }
    if (m.circled) {
      os << "  <circle cx=\"" << xm << "\" cy=\""
         << (y_of(lo) + y_of(hi)) / 2 << "\" r=\"" << dy / 2
         << "\" fill=\"none\" stroke=\"red\"/>\n";
    }
  }
  for (int s = 1; s <= d.strands; ++s) {
    os << "  <path d=\"" << path[s].str()
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << 4 << "\" y=\"" << y_of(s) + 4 << "\">"
       << d.left_labels[s - 1] << "</text>\n";
    os << "  <text x=\"" << x_of(cols) + 8 << "\" y=\""
       << y_of(height_of[s]) + 4 << "\">" << height_of[s] << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace coxcluster
