#include "braidfol/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace braidfol {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw ParseError("need at least 2 strands");
  if (letters_.empty()) throw ParseError("empty braid word");
  for (int x : letters_) {
    if (x < 1 || x > strands_ - 1)
      throw ParseError("generator index " + std::to_string(x) +
                       " out of range for " + std::to_string(strands_) +
                       " strands");
  }
}

std::string BraidWord::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << letters_[i];
  }
  return os.str();
}

BraidWord parse_braid(const std::string& text, std::optional<int> strands) {
  // strip comments
  std::string clean;
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    if (!comment) clean += c;
  }
  std::istringstream is(clean);
  std::vector<int> letters;
  std::string tok;
  int maxgen = 0;
  while (is >> tok) {
    long k = 0, p = 1;
    size_t caret = tok.find('^');
    try {
      if (caret == std::string::npos) {
        size_t used = 0;
        k = std::stol(tok, &used);
        if (used != tok.size()) throw ParseError("bad token '" + tok + "'");
      } else {
        size_t used = 0;
        k = std::stol(tok.substr(0, caret), &used);
        if (used != caret) throw ParseError("bad token '" + tok + "'");
        p = std::stol(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1)
          throw ParseError("bad token '" + tok + "'");
      }
    } catch (const std::invalid_argument&) {
      throw ParseError("bad token '" + tok + "'");
    } catch (const std::out_of_range&) {
      throw ParseError("token out of range '" + tok + "'");
    }
    if (k < 1) throw ParseError("generator index must be >= 1");
    if (p < 1) throw ParseError("power must be >= 1");
    maxgen = std::max(maxgen, static_cast<int>(k));
    for (long i = 0; i < p; ++i) letters.push_back(static_cast<int>(k));
  }
  if (letters.empty()) throw ParseError("empty braid word");
  int n = strands ? *strands : maxgen + 1;
  return BraidWord(n, std::move(letters));
}

int closure_components(const BraidWord& b) {
  int n = b.strands();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int x : b.letters()) std::swap(perm[x - 1], perm[x]);
  std::vector<bool> seen(n, false);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    for (int t = s; !seen[t]; t = perm[t]) seen[t] = true;
  }
  return comps;
}

bool is_knot(const BraidWord& b) { return closure_components(b) == 1; }

std::vector<int> occurrence_positions(const BraidWord& b, int gen) {
  std::vector<int> out;
  const auto& w = b.letters();
  for (int p = 0; p < b.length(); ++p)
    if (w[p] == gen) out.push_back(p);
  return out;
}

CrossingStats crossing_stats(const BraidWord& b) {
  CrossingStats s;
  int n = b.strands();
  s.counts.assign(n, 0);
  for (int x : b.letters()) ++s.counts[x];
  s.total = b.length();
  for (int i = 1; i <= n - 1; ++i) {
    s.mod3[((i - 1) % 3) + 1] += s.counts[i];
    if (i % 2 == 1)
      s.c_odd += s.counts[i];
    else
      s.c_even += s.counts[i];
  }
  // tie rule: unique minimum wins; C_2 = C_3 < C_1 picks C_2; otherwise C_1.
  int c1 = s.mod3[1], c2 = s.mod3[2], c3 = s.mod3[3];
  int mn = std::min({c1, c2, c3});
  int howmany = (c1 == mn) + (c2 == mn) + (c3 == mn);
  if (howmany == 1)
    s.c_min_class = (c1 == mn) ? 1 : (c2 == mn ? 2 : 3);
  else if (c2 == c3 && c2 < c1)
    s.c_min_class = 2;
  else
    s.c_min_class = 1;
  s.c_max_is_odd = s.c_odd >= s.c_even;
  return s;
}

int distance(const BraidWord& b, int j, int s, int t, Side side) {
  int n = b.strands();
  if (s == t) throw IndexError("distance needs s != t");
  int other = (side == Side::Right) ? j + 1 : j - 1;
  if (other < 1 || other > n - 1)
    throw IndexError("no adjacent column on that side");
  auto oj = occurrence_positions(b, j);
  int cj = static_cast<int>(oj.size());
  if (s < 1 || s > cj || t < 1 || t > cj)
    throw IndexError("occurrence out of range");
  auto oo = occurrence_positions(b, other);
  if (t < s) return static_cast<int>(oo.size()) - distance(b, j, t, s, side);
  int lo = oj[s - 1], hi = oj[t - 1];
  int cnt = 0;
  for (int p : oo)
    if (p > lo && p < hi) ++cnt;
  return cnt;
}

BraidWord rotate(const BraidWord& b, int k) {
  int L = b.length();
  k = ((k % L) + L) % L;
  std::vector<int> out;
  out.reserve(L);
  for (int p = 0; p < L; ++p) out.push_back(b.letters()[(p + k) % L]);
  return BraidWord(b.strands(), std::move(out));
}

BraidWord pivot(const BraidWord& b, const LetterRef& at) {
  auto occ = occurrence_positions(b, at.gen);
  if (at.occurrence < 1 || at.occurrence > static_cast<int>(occ.size()))
    throw IndexError("no such occurrence");
  return rotate(b, occ[at.occurrence - 1]);
}

namespace {

// Linear (non-wrapping) rewrite pattern anchored at p: letters[p] = i, the
// next i is at r, exactly one i+1 strictly between, and every other letter
// between commutes with sigma_i. Returns {i, q, r} or nullopt.
struct Pattern {
  int i, q, r;
};

std::optional<Pattern> linear_pattern(const std::vector<int>& w, int n, int p) {
  int L = static_cast<int>(w.size());
  int i = w[p];
  if (i > n - 2) return std::nullopt;
  int r = -1;
  for (int t = p + 1; t < L; ++t) {
    if (w[t] == i) {
      r = t;
      break;
    }
  }
  if (r < 0) return std::nullopt;
  int q = -1, cnt = 0;
  for (int t = p + 1; t < r; ++t) {
    if (w[t] == i + 1) {
      q = t;
      ++cnt;
    } else if (std::abs(w[t] - i) < 2) {
      return std::nullopt;
    }
  }
  if (cnt != 1) return std::nullopt;
  return Pattern{i, q, r};
}

bool cyclic_pattern_at(const std::vector<int>& w, int n, int p) {
  int L = static_cast<int>(w.size());
  int i = w[p];
  if (i > n - 2) return false;
  int cnt = 0;
  for (int step = 1; step < L; ++step) {
    int t = (p + step) % L;
    if (w[t] == i) return cnt == 1;
    if (w[t] == i + 1)
      ++cnt;
    else if (std::abs(w[t] - i) < 2)
      return false;
    if (cnt > 1) return false;
  }
  return false;
}

// Rewrites the window [p, r]: far letters between p and q slide left, those
// between q and r slide right, and the triple becomes i+1, i, i+1.
std::vector<int> apply_linear(const std::vector<int>& w, const Pattern& m,
                              int p) {
  std::vector<int> out(w.begin(), w.begin() + p);
  for (int t = p + 1; t < m.q; ++t) out.push_back(w[t]);
  out.push_back(m.i + 1);
  out.push_back(m.i);
  out.push_back(m.i + 1);
  for (int t = m.q + 1; t < m.r; ++t) out.push_back(w[t]);
  out.insert(out.end(), w.begin() + m.r + 1, w.end());
  return out;
}

}  // namespace

BraidWord standardize(const BraidWord& b) {
  int n = b.strands();
  std::vector<int> w = b.letters();
  int L = static_cast<int>(w.size());
  // each rewrite raises the index sum, which is bounded by (n-1)*L
  long budget = static_cast<long>(n) * L + 16;
  while (true) {
    if (--budget < 0) throw InternalError("standardize did not terminate");
    bool changed = false;
    int p = 0;
    while (p < L) {
      auto m = linear_pattern(w, n, p);
      if (!m) {
        ++p;
        continue;
      }
      w = apply_linear(w, *m, p);
      changed = true;
      p = m->r + 3;  // resume past the rewritten window
    }
    if (changed) continue;
    int pc = -1;
    for (int t = 0; t < L; ++t) {
      if (cyclic_pattern_at(w, n, t)) {
        pc = t;
        break;
      }
    }
    if (pc < 0) return BraidWord(n, w);
    std::rotate(w.begin(), w.begin() + pc, w.end());
    auto m = linear_pattern(w, n, 0);
    if (!m) throw InternalError("wrap pattern vanished after rotation");
    w = apply_linear(w, *m, 0);
  }
}

bool is_standard(const BraidWord& b) {
  const auto& w = b.letters();
  for (int p = 0; p < b.length(); ++p)
    if (cyclic_pattern_at(w, b.strands(), p)) return false;
  return true;
}

int block_count(const BraidWord& b, int gen) {
  if (gen < 1 || gen > b.strands() - 1) throw NoSuchGenerator("bad generator");
  const auto& w = b.letters();
  int L = b.length(), runs = 0, total = 0;
  for (int p = 0; p < L; ++p) {
    if (w[p] != gen) continue;
    ++total;
    if (w[(p - 1 + L) % L] != gen) ++runs;
  }
  if (total == 0) throw NoSuchGenerator("generator does not occur");
  return runs == 0 ? 1 : runs;  // runs == 0 only when the word is all sigma_gen
}

PrimalityReport primality_precheck(const BraidWord& b) {
  if (!is_knot(b)) throw NotAKnot("closure is not a knot");
  PrimalityReport rep;
  int n = b.strands();
  auto st = crossing_stats(b);
  for (int i = 1; i <= n - 1; ++i) {
    if (st.counts[i] < 2) {
      rep.violations.push_back("c_" + std::to_string(i) + " < 2");
      continue;
    }
    if (block_count(b, i) < 2)
      rep.violations.push_back("block count of sigma_" + std::to_string(i) +
                               " is 1 (connected sum)");
  }
  // cyclic gap contents per column
  auto gap_count = [&](int col, int from, int to, int gen) {
    auto occ = occurrence_positions(b, gen);
    int cnt = 0;
    for (int p : occ) {
      bool inside;
      if (from < to)
        inside = (p > from && p < to);
      else
        inside = (p > from || p < to);
      if (inside) ++cnt;
    }
    (void)col;
    return cnt;
  };
  for (int i = 1; i <= n - 1; ++i) {
    auto occ = occurrence_positions(b, i);
    int ci = static_cast<int>(occ.size());
    if (ci == 2) {
      for (int side : {-1, +1}) {
        int gen = i + side;
        if (gen < 1 || gen > n - 1) continue;
        int g1 = gap_count(i, occ[0], occ[1], gen);
        int g2 = gap_count(i, occ[1], occ[0], gen);
        if (g1 == 0 || g2 == 0)
          rep.violations.push_back(
              "c_" + std::to_string(i) + " = 2 but a gap has no sigma_" +
              std::to_string(gen) + " (connected sum)");
      }
    }
    // a single gap holding every letter of an adjacent column splits the knot
    for (int gen : {i - 1, i + 1}) {
      if (gen < 1 || gen > n - 1) continue;
      int cg = st.counts[gen];
      if (ci < 1 || cg < 1) continue;
      for (int j = 0; j < ci; ++j) {
        int from = occ[j], to = occ[(j + 1) % ci];
        if (ci == 1 || gap_count(i, from, to, gen) == cg) {
          if (ci == 1) break;
          rep.violations.push_back("all sigma_" + std::to_string(gen) +
                                   " letters lie in one sigma_" +
                                   std::to_string(i) +
                                   " gap (connected sum)");
          break;
        }
      }
    }
  }
  return rep;
}

int genus(const BraidWord& b) {
  if (!is_knot(b)) throw NotAKnot("closure is not a knot");
  int C = b.length(), n = b.strands();
  if ((C - n) % 2 == 0)
    throw InternalError("knot closure must have C - n odd");
  return (C - n + 1) / 2;
}

BraidWord canonical_calibrate(const BraidWord& b, const LetterRef& band) {
  int n = b.strands();
  if (band.gen < 1 || band.gen > n - 2)
    throw CannotCalibrate("band column must be in 1..n-2");
  auto up = occurrence_positions(b, band.gen + 1);
  if (up.size() < 2) throw CannotCalibrate("need c_{s+1} >= 2");
  BraidWord w = pivot(b, band);
  // last sigma_{s+1} in this presentation
  auto occ = occurrence_positions(w, band.gen + 1);
  return rotate(w, occ.back());
}

}  // namespace braidfol
