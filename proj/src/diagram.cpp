#include "gjs/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "gjs/scalar.hpp"

namespace gjs {

namespace {

ArcList canonical(ArcList arcs) {
  for (auto& a : arcs)
    if (a.first > a.second) std::swap(a.first, a.second);
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

}  // namespace

bool is_planar_matching(int total, const ArcList& arcs) {
  if (total % 2 != 0) return false;
  if (static_cast<int>(arcs.size()) * 2 != total) return false;
  std::vector<int> seen(static_cast<std::size_t>(total) + 1, 0);
  for (const auto& [i, j] : arcs) {
    if (i < 1 || j < 1 || i > total || j > total || i == j) return false;
    seen[static_cast<std::size_t>(i)]++;
    seen[static_cast<std::size_t>(j)]++;
  }
  for (int p = 1; p <= total; ++p)
    if (seen[static_cast<std::size_t>(p)] != 1) return false;
  for (std::size_t a = 0; a < arcs.size(); ++a)
    for (std::size_t b = a + 1; b < arcs.size(); ++b) {
      int i = std::min(arcs[a].first, arcs[a].second);
      int j = std::max(arcs[a].first, arcs[a].second);
      int k = std::min(arcs[b].first, arcs[b].second);
      int l = std::max(arcs[b].first, arcs[b].second);
      if (k < i) { std::swap(i, k); std::swap(j, l); }
      if (k < j && j < l) return false;  // i < k < j < l: crossing
    }
  return true;
}

TLDiagram::TLDiagram(int bottom, int top, ArcList arcs)
    : bottom_(bottom), top_(top), arcs_(canonical(std::move(arcs))) {
  if (bottom_ < 0 || top_ < 0)
    throw shape_error("negative boundary count");
  if (!is_planar_matching(bottom_ + top_, arcs_))
    throw shape_error("not a planar perfect matching");
}

int TLDiagram::partner(int p) const {
  for (const auto& [i, j] : arcs_) {
    if (i == p) return j;
    if (j == p) return i;
  }
  throw std::out_of_range("point not on boundary");
}

TLDiagram TLDiagram::identity(int n) {
  ArcList arcs;
  arcs.reserve(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) arcs.emplace_back(x, 2 * n + 1 - x);
  return TLDiagram(n, n, std::move(arcs));
}

std::string TLDiagram::str() const {
  std::string out = std::to_string(bottom_) + "," + std::to_string(top_) + ":[";
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    if (k) out += ",";
    out += "(" + std::to_string(arcs_[k].first) + "," +
           std::to_string(arcs_[k].second) + ")";
  }
  out += "]";
  return out;
}

TLDiagram TLDiagram::parse(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw parse_error(std::string("expected '") + c + "' in diagram", pos);
    ++pos;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) throw parse_error("expected integer in diagram", pos);
    return std::stoi(text.substr(start, pos - start));
  };
  int b = read_int();
  expect(',');
  int t = read_int();
  expect(':');
  expect('[');
  ArcList arcs;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      expect('(');
      int i = read_int();
      expect(',');
      int j = read_int();
      expect(')');
      arcs.emplace_back(i, j);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
      expect(']');
      break;
    }
  }
  skip_ws();
  if (pos != text.size()) throw parse_error("trailing input after diagram", pos);
  return TLDiagram(b, t, std::move(arcs));
}

namespace {

// Non-crossing perfect matchings of the interval [lo, hi], appended to out.
void pairings_rec(int lo, int hi, ArcList& partial, std::vector<ArcList>& out) {
  if (lo > hi) {
    out.push_back(partial);
    return;
  }
  for (int j = lo + 1; j <= hi; j += 2) {
    partial.emplace_back(lo, j);
    // match [lo+1, j-1] and [j+1, hi] independently
    ArcList saved = partial;
    std::vector<ArcList> inner;
    ArcList tmp;
    pairings_rec(lo + 1, j - 1, tmp, inner);
    for (const auto& in : inner) {
      partial = saved;
      partial.insert(partial.end(), in.begin(), in.end());
      pairings_rec(j + 1, hi, partial, out);
    }
    partial.resize(saved.size() - 1);
  }
}

}  // namespace

std::vector<TLDiagram> enumerate_pairings(int n) {
  std::vector<TLDiagram> result;
  if (n < 0 || n % 2 != 0) return result;  // odd box spaces are zero
  std::vector<ArcList> all;
  ArcList partial;
  pairings_rec(1, n, partial, all);
  result.reserve(all.size());
  for (auto& arcs : all) result.emplace_back(n, 0, std::move(arcs));
  std::sort(result.begin(), result.end());
  return result;
}

std::pair<ArcList, int> glue_arcs(const ArcList& arcsA, int nA,
                                  const ArcList& arcsB, int nB,
                                  const std::vector<Arc>& glue,
                                  const std::vector<int>& keepA,
                                  const std::vector<int>& keepB) {
  // Node ids: A point p -> p-1; B point q -> nA + q - 1.
  int N = nA + nB;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(N));
  auto add_edge = [&](int u, int v) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  };
  for (const auto& [i, j] : arcsA) add_edge(i - 1, j - 1);
  for (const auto& [i, j] : arcsB) add_edge(nA + i - 1, nA + j - 1);
  for (const auto& [p, q] : glue) add_edge(p - 1, nA + q - 1);

  auto keep_label = [&](int node) -> int {
    if (node < nA) return keepA[static_cast<std::size_t>(node)];
    return keepB[static_cast<std::size_t>(node - nA)];
  };

  std::vector<char> visited(static_cast<std::size_t>(N), 0);
  ArcList arcs;
  int loops = 0;

  // Paths: start from each external (kept) node.
  for (int v = 0; v < N; ++v) {
    if (visited[static_cast<std::size_t>(v)] || keep_label(v) < 1) continue;
    visited[static_cast<std::size_t>(v)] = 1;
    int prev = -1, cur = v;
    for (;;) {
      int next = -1;
      for (int w : adj[static_cast<std::size_t>(cur)])
        if (w != prev) { next = w; break; }
      if (next == -1) break;  // degree-1 interior end: malformed, bail out
      // Step; handle the two-step backtrack case where duplicate neighbors
      // exist (parallel edge forming a 2-cycle) by preferring unvisited.
      prev = cur;
      cur = next;
      visited[static_cast<std::size_t>(cur)] = 1;
      if (keep_label(cur) >= 1) {
        arcs.emplace_back(keep_label(v), keep_label(cur));
        break;
      }
    }
  }

  // Cycles: whatever interior nodes remain.
  for (int v = 0; v < N; ++v) {
    if (visited[static_cast<std::size_t>(v)]) continue;
    ++loops;
    int prev = -1, cur = v;
    while (!visited[static_cast<std::size_t>(cur)]) {
      visited[static_cast<std::size_t>(cur)] = 1;
      int next = -1;
      for (int w : adj[static_cast<std::size_t>(cur)])
        if (w != prev) { next = w; break; }
      if (next == -1) break;
      prev = cur;
      cur = next;
    }
  }

  return {canonical(std::move(arcs)), loops};
}

std::pair<ArcList, int> self_glue(const ArcList& arcs, int n,
                                  const std::vector<Arc>& glue,
                                  const std::vector<int>& keep) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  auto add_edge = [&](int u, int v) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  };
  for (const auto& [i, j] : arcs) add_edge(i - 1, j - 1);
  for (const auto& [p, q] : glue) add_edge(p - 1, q - 1);

  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  ArcList out;
  int loops = 0;

  for (int v = 0; v < n; ++v) {
    if (visited[static_cast<std::size_t>(v)] ||
        keep[static_cast<std::size_t>(v)] < 1)
      continue;
    visited[static_cast<std::size_t>(v)] = 1;
    int prev = -1, cur = v;
    for (;;) {
      int next = -1;
      for (int w : adj[static_cast<std::size_t>(cur)])
        if (w != prev) { next = w; break; }
      if (next == -1) break;
      prev = cur;
      cur = next;
      visited[static_cast<std::size_t>(cur)] = 1;
      if (keep[static_cast<std::size_t>(cur)] >= 1) {
        out.emplace_back(keep[static_cast<std::size_t>(v)],
                         keep[static_cast<std::size_t>(cur)]);
        break;
      }
    }
  }

  for (int v = 0; v < n; ++v) {
    if (visited[static_cast<std::size_t>(v)]) continue;
    ++loops;
    int prev = -1, cur = v;
    while (!visited[static_cast<std::size_t>(cur)]) {
      visited[static_cast<std::size_t>(cur)] = 1;
      int next = -1;
      for (int w : adj[static_cast<std::size_t>(cur)])
        if (w != prev) { next = w; break; }
      if (next == -1) break;
      prev = cur;
      cur = next;
    }
  }

  return {canonical(std::move(out)), loops};
}

std::pair<TLDiagram, int> compose(const TLDiagram& lower, const TLDiagram& upper) {
  if (lower.top_count() != upper.bottom_count())
    throw shape_error("compose: boundary mismatch (" +
                      std::to_string(lower.top_count()) + " vs " +
                      std::to_string(upper.bottom_count()) + ")");
  int b = lower.bottom_count(), t = lower.top_count(), u = upper.top_count();
  std::vector<Arc> glue;
  glue.reserve(static_cast<std::size_t>(t));
  // Lower's top at horizontal position x (left-to-right) has global index
  // b+t+1-x; upper's bottom at position x has global index x.
  for (int x = 1; x <= t; ++x) glue.emplace_back(b + t + 1 - x, x);
  std::vector<int> keepA(static_cast<std::size_t>(b + t), 0);
  for (int p = 1; p <= b; ++p) keepA[static_cast<std::size_t>(p - 1)] = p;
  std::vector<int> keepB(static_cast<std::size_t>(t + u), 0);
  for (int y = 1; y <= u; ++y) keepB[static_cast<std::size_t>(t + y - 1)] = b + y;
  auto [arcs, loops] =
      glue_arcs(lower.arcs(), b + t, upper.arcs(), t + u, glue, keepA, keepB);
  return {TLDiagram(b, u, std::move(arcs)), loops};
}

TLDiagram juxtapose(const TLDiagram& a, const TLDiagram& b) {
  int b1 = a.bottom_count(), t1 = a.top_count();
  int b2 = b.bottom_count(), t2 = b.top_count();
  int B = b1 + b2;
  ArcList arcs;
  auto map_a = [&](int p) { return p <= b1 ? p : B + t2 + (p - b1); };
  auto map_b = [&](int p) { return p <= b2 ? b1 + p : B + (p - b2); };
  for (const auto& [i, j] : a.arcs()) arcs.emplace_back(map_a(i), map_a(j));
  for (const auto& [i, j] : b.arcs()) arcs.emplace_back(map_b(i), map_b(j));
  return TLDiagram(B, t1 + t2, std::move(arcs));
}

TLDiagram adjoint(const TLDiagram& D) {
  int total = D.total();
  ArcList arcs;
  for (const auto& [i, j] : D.arcs())
    arcs.emplace_back(total + 1 - i, total + 1 - j);
  return TLDiagram(D.top_count(), D.bottom_count(), std::move(arcs));
}

namespace {

// Epi recursion over bottom positions: each position is a through strand or
// opens an arc whose interior is a fully matched block.
void epi_rec(int i, int b, ArcList& arcs, std::vector<int>& throughs,
             std::vector<TLDiagram>& out) {
  if (i > b) {
    int t = static_cast<int>(throughs.size());
    ArcList full = arcs;
    // Through strands connect order-preservingly: k-th through (left-to-right)
    // to top position k, whose global index is b + (t - k + 1).
    for (int k = 1; k <= t; ++k)
      full.emplace_back(throughs[static_cast<std::size_t>(k - 1)],
                        b + (t - k + 1));
    out.emplace_back(b, t, std::move(full));
    return;
  }
  // Option 1: through strand at i.
  throughs.push_back(i);
  epi_rec(i + 1, b, arcs, throughs, out);
  throughs.pop_back();
  // Option 2: arc (i, j) with fully matched interior.
  for (int j = i + 1; j <= b; j += 2) {
    std::vector<TLDiagram> inner = enumerate_pairings(j - i - 1);
    if (j - i - 1 == 0) {
      arcs.emplace_back(i, j);
      epi_rec(j + 1, b, arcs, throughs, out);
      arcs.pop_back();
    } else {
      for (const auto& in : inner) {
        std::size_t mark = arcs.size();
        arcs.emplace_back(i, j);
        for (const auto& [x, y] : in.arcs()) arcs.emplace_back(i + x, i + y);
        epi_rec(j + 1, b, arcs, throughs, out);
        arcs.resize(mark);
      }
    }
  }
}

}  // namespace

std::vector<TLDiagram> enumerate_epi(int b) {
  // Memoized: phi() re-enumerates the same stack family for every term.
  static std::map<int, std::vector<TLDiagram>> memo;
  if (b < 0) return {};
  auto it = memo.find(b);
  if (it != memo.end()) return it->second;
  std::vector<TLDiagram> out;
  ArcList arcs;
  std::vector<int> throughs;
  epi_rec(1, b, arcs, throughs, out);
  std::sort(out.begin(), out.end(), [](const TLDiagram& x, const TLDiagram& y) {
    if (x.top_count() != y.top_count()) return x.top_count() > y.top_count();
    return x.arcs() < y.arcs();
  });
  memo.emplace(b, out);
  return out;
}

}  // namespace gjs
