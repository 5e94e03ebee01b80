#include "braidfol/surface.hpp"

#include <algorithm>
#include <sstream>

namespace braidfol {

BrickDiagram::BrickDiagram(const BraidWord& b) : word_(b) {
  int n = b.strands();
  occ_.resize(n + 1);
  for (int k = 1; k <= n - 1; ++k) occ_[k] = occurrence_positions(b, k);
  sites_.resize(n + 2);
  for (int k = 1; k <= n; ++k) {
    std::vector<int> s;
    if (k - 1 >= 1) s.insert(s.end(), occ_[k - 1].begin(), occ_[k - 1].end());
    if (k <= n - 1) s.insert(s.end(), occ_[k].begin(), occ_[k].end());
    std::sort(s.begin(), s.end());
    sites_[k] = std::move(s);
  }
}

std::pair<int, int> BrickDiagram::gap(int k, int j) const {
  const auto& o = occ_[k];
  if (o.empty()) throw NoSuchGenerator("column is empty");
  if (j < 0 || j >= static_cast<int>(o.size()))
    throw IndexError("gap index out of range");
  return {o[j], o[(j + 1) % o.size()]};
}

bool BrickDiagram::cyc_inside(int a, int x, int b) const {
  if (a == b || x == a || x == b) return false;
  if (a < b) return a < x && x < b;
  return x > a || x < b;
}

int BrickDiagram::cyc_dist(int a, int b) const {
  int C = positions();
  return ((b - a) % C + C) % C;
}

int BrickDiagram::first_after(int pos, int gen) const {
  const auto& o = occ_[gen];
  if (o.empty()) return -1;
  auto it = std::upper_bound(o.begin(), o.end(), pos);
  return it == o.end() ? o.front() : *it;
}

int BrickDiagram::last_before(int pos, int gen) const {
  const auto& o = occ_[gen];
  if (o.empty()) return -1;
  auto it = std::lower_bound(o.begin(), o.end(), pos);
  return it == o.begin() ? o.back() : *(it - 1);
}

int BrickDiagram::count_in_gap(int a, int b, int gen) const {
  int cnt = 0;
  for (int p : occ_[gen])
    if (cyc_inside(a, p, b)) ++cnt;
  return cnt;
}

std::pair<PlumbingArc, ImageArc> arc_enclosures(const BrickDiagram& d, int k,
                                                int j) {
  if (k < 1 || k > d.strands() - 1) throw IndexError("bad column");
  if (j < 1 || j > d.count(k) - 1) throw IndexError("ordinal out of range");
  auto [a, b] = d.gap(k, j - 1);
  PlumbingArc pa;
  pa.column = k;
  pa.ordinal = j;
  pa.left_enclosed_band = a;
  if (k >= 2)
    for (int p : d.occ(k - 1))
      if (d.cyc_inside(a, p, b)) pa.right_enclosure.push_back(p);
  ImageArc ia;
  ia.column = k;
  ia.ordinal = j;
  ia.right_enclosed_band = b;
  if (k + 1 <= d.strands() - 1)
    for (int p : d.occ(k + 1))
      if (d.cyc_inside(a, p, b)) ia.left_enclosure.push_back(p);
  return {pa, ia};
}

int HopfFactorization::plumbing_count() const {
  int c = 0;
  for (const auto& s : steps)
    if (s.kind == HopfStep::Plumb) ++c;
  return c;
}

HopfFactorization hopf_sequence(const BraidWord& b) {
  if (!is_knot(b)) throw NotAKnot("closure is not a knot");
  BrickDiagram d(b);
  HopfFactorization f;
  int n = b.strands();
  for (int k = 1; k <= n - 1; ++k) {
    int ck = d.count(k);
    if (ck == 0) continue;
    if (k == 1)
      f.steps.push_back({HopfStep::UnknotBand, 1, 0, d.occ(1)[0]});
    else
      f.steps.push_back({HopfStep::Stabilize, k, 0, d.occ(k)[0]});
    for (int j = 1; j <= ck - 1; ++j)
      f.steps.push_back({HopfStep::Plumb, k, j, d.occ(k)[j - 1]});
  }
  for (int k = n - 1; k >= 1; --k)
    for (int j = 1; j <= d.count(k) - 1; ++j)
      f.twist_curves.emplace_back(k, j);
  return f;
}

namespace {

struct ArcRow {
  int row;        // canvas row
  int col;        // disk index hosting the arrow
  bool image;     // image arc (dashed) vs plumbing
  Dir dir;
};

// Arrow rows: the plumbing arc of gap (a, b) is drawn just above band a on
// disk k; its image just below band a on disk k+1.
std::vector<ArcRow> arrow_rows(const BrickDiagram& d, const ArcAssignment& a) {
  std::vector<ArcRow> rows;
  for (const auto& [key, dir] : a.arcs) {
    auto [k, j] = key;
    auto [from, to] = d.gap(k, j);
    (void)to;
    rows.push_back({2 * from, k, false, dir});
    rows.push_back({2 * from + 1, k + 1, true, opposite(dir)});
  }
  return rows;
}

}  // namespace

std::string render_ascii(const BrickDiagram& d, const ArcAssignment* a) {
  int n = d.strands();
  int C = d.positions();
  const int colw = 4;
  int width = (n - 1) * colw + 1;
  int height = 2 * C + 1;
  std::vector<std::string> canvas(height, std::string(width, ' '));
  for (int r = 0; r < height; ++r)
    for (int k = 0; k < n; ++k) canvas[r][k * colw] = '|';
  for (int p = 0; p < C; ++p) {
    int k = d.column_of(p);
    int row = 2 * p + 1;
    for (int x = (k - 1) * colw + 1; x < k * colw; ++x) canvas[row][x] = '-';
  }
  if (a) {
    for (const auto& ar : arrow_rows(d, *a)) {
      int row = ar.row + 1;
      if (row < 0 || row >= height) continue;
      int x = (ar.col - 1) * colw;
      char g = (ar.dir == Dir::Left) ? '<' : '>';
      if (x + 1 < width) {
        canvas[row][x] = g;
        if (ar.image && x + 1 < width) canvas[row][x + 1] = g;
      }
    }
  }
  std::ostringstream os;
  for (const auto& line : canvas) os << line << '\n';
  return os.str();
}

std::string render_svg(const BrickDiagram& d, const ArcAssignment* a) {
  int n = d.strands();
  int C = d.positions();
  const int dx = 48, dy = 18, mx = 24, my = 24;
  int W = mx * 2 + (n - 1) * dx;
  int H = my * 2 + (C + 1) * dy;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
     << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  os << "<g stroke=\"black\" fill=\"none\">\n";
  for (int k = 0; k < n; ++k) {
    int x = mx + k * dx;
    os << "<line x1=\"" << x << "\" y1=\"" << my << "\" x2=\"" << x
       << "\" y2=\"" << H - my << "\"/>\n";
  }
  for (int p = 0; p < C; ++p) {
    int k = d.column_of(p);
    int y = my + (p + 1) * dy;
    os << "<line class=\"band\" x1=\"" << mx + (k - 1) * dx << "\" y1=\"" << y
       << "\" x2=\"" << mx + k * dx << "\" y2=\"" << y << "\"/>\n";
  }
  if (a) {
    for (const auto& [key, dir] : a->arcs) {
      auto [k, j] = key;
      auto [from, to] = d.gap(k, j);
      (void)to;
      int y = my + (from + 1) * dy - dy / 3;
      int xc = mx + (k - 1) * dx;
      int s = (dir == Dir::Left) ? -1 : 1;
      os << "<path class=\"arc arrow-" << dir_name(dir) << "\" d=\"M"
         << xc - s * 8 << ' ' << y << " L" << xc + s * 8 << ' ' << y << " l"
         << -s * 4 << " -3 m" << s * 4 << " 3 l" << -s * 4 << " 3\"/>\n";
      int yi = y + 2 * dy / 3;
      int xi = mx + k * dx;
      int si = -s;
      os << "<path class=\"image arrow-" << dir_name(opposite(dir))
         << "\" stroke-dasharray=\"3 2\" d=\"M" << xi - si * 8 << ' ' << yi
         << " L" << xi + si * 8 << ' ' << yi << "\"/>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace braidfol
