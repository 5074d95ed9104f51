#include "skein/annular.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <thread>
#include <tuple>

namespace skein {

StateCapExceeded::StateCapExceeded(int c, int k)
    : std::runtime_error("state sum needs 2^" + std::to_string(c) + " states, above the cap 2^" +
                         std::to_string(k)),
      crossings(c),
      cap(k) {}

namespace {

// Connectivity walker over a closed tile column. Level L is identified with level 0
// through the closure arcs, which never encircle the axis.
class Walker {
 public:
  Walker(int strands, const std::vector<Tile>& tiles) : n_(strands), tiles_(tiles) {
    if (tiles_.empty()) tiles_.push_back(Tile{});
    L_ = static_cast<int>(tiles_.size());
  }

  TerminalState run() {
    std::vector<char> seen(static_cast<size_t>(L_) * n_, 0);
    TerminalState ts;
    for (int j = 0; j < L_; ++j) {
      for (int p = 1; p <= n_; ++p) {
        if (seen[id(j, p)]) continue;
        int tile_sign = 0;
        int net = trace(j, p, seen, tile_sign);
        if (net == 0)
          ++ts.contractible_loops;
        else
          ts.windings.push_back(tile_sign * std::abs(net));
      }
    }
    std::sort(ts.windings.begin(), ts.windings.end(), std::greater<>());
    return ts;
  }

 private:
  size_t id(int j, int p) const { return static_cast<size_t>(j) * n_ + (p - 1); }

  // Follows one component and returns its signed pass count. Opposite passes on one component
  // can be linked with other components between them, so such states are left to the exact
  // evaluator.
  // The chirality of the winding is that of its tiles (t^-k closes to the mirror of t^k).
  int trace(int j0, int p0, std::vector<char>& seen, int& tile_sign) {
    int j = j0, p = p0;
    bool forward = true;
    int net = 0;
    long passes = 0;
    bool mixed_tiles = false;
    auto note = [&](int s) {
      if (tile_sign != 0 && tile_sign != s) mixed_tiles = true;
      tile_sign = s;
      ++passes;
    };
    do {
      seen[id(j, p)] = 1;
      if (forward) {
        const Tile& t = tiles_[j];
        if (t.kind == TileKind::CapCup && (p == t.index || p == t.index + 1)) {
          p = (p == t.index) ? p + 1 : p - 1;
          forward = false;
        } else {
          if (t.kind == TileKind::AxisPass && p == 1) net += t.sign, note(t.sign);
          j = (j + 1) % L_;
          forward = true;
        }
      } else {
        const int jb = (j - 1 + L_) % L_;
        const Tile& t = tiles_[jb];
        if (t.kind == TileKind::CapCup && (p == t.index || p == t.index + 1)) {
          p = (p == t.index) ? p + 1 : p - 1;
          forward = true;
        } else {
          if (t.kind == TileKind::AxisPass && p == 1) net -= t.sign, note(t.sign);
          j = jb;
          forward = false;
        }
      }
    } while (!(j == j0 && p == p0 && forward));
    if (passes != std::abs(net) || mixed_tiles) throw OutOfDomain("component carries axis passes of both signs");
    return net;
  }

  int n_;
  int L_ = 0;
  std::vector<Tile> tiles_;
};

std::vector<int> crossing_positions(const MixedBraidWord& w) {
  std::vector<int> pos;
  for (size_t j = 0; j < w.letters.size(); ++j)
    if (!w.letters[j].is_t) pos.push_back(static_cast<int>(j));
  return pos;
}

// Weight exponent of a crossing choice: +1 means A, -1 means A^-1.
int choice_exponent(int sign, bool capcup, Smoothing conv) {
  int e = capcup ? -sign : sign;
  return conv == Smoothing::Standard ? e : -e;
}

// One crossingless state on the annulus: vertical lines 1..n are the strands, n+1..2n the
// closure lines (line 2n+1-i closes strand i through nested caps). The seam is the ray left
// of line 1.
class ExactState {
 public:
  ExactState(int strands, const std::vector<Tile>& tiles, Smoothing conv)
      : n_(strands), W_(2 * strands), L_(static_cast<int>(tiles.size())) {
    // The spin crossings take the chirality of the moving crossings.
    K_ = conv == Smoothing::Mirrored ? 1 : -1;
    nodes_ = (L_ + 1) * W_;
    for (int j = 0; j < L_; ++j) {
      const Tile& t = tiles[j];
      if (t.kind == TileKind::AxisPass) {
        add_pass(j, t.sign);
        continue;
      }
      for (int q = 1; q <= W_; ++q) {
        if (t.kind == TileKind::CapCup && (q == t.index || q == t.index + 1)) continue;
        fixed_.push_back({v(j, q), v(j + 1, q), 0});
      }
      if (t.kind == TileKind::CapCup) {
        fixed_.push_back({v(j, t.index), v(j, t.index + 1), 0});
        fixed_.push_back({v(j + 1, t.index), v(j + 1, t.index + 1), 0});
      }
    }
    for (int i = 1; i <= n_; ++i) {
      fixed_.push_back({v(L_, i), v(L_, W_ + 1 - i), 0});
      fixed_.push_back({v(0, i), v(0, W_ + 1 - i), 0});
    }
  }

  int crossings() const { return static_cast<int>(cross_.size()); }

  SkeinVector evaluate() const {
    const int c = crossings();
    std::map<std::tuple<int, int, int>, std::uint64_t> tally;  // (exponent, trivial, essential)
    std::vector<Edge> edges;
    std::vector<std::array<int, 2>> inc(static_cast<size_t>(nodes_));
    std::vector<char> used;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << c); ++bits) {
      edges = fixed_;
      int e = 0;
      for (int k = 0; k < c; ++k) {
        const auto& x = cross_[k];
        if ((bits >> k) & 1u) {
          edges.push_back({x.north, x.east, 0});
          edges.push_back({x.south, x.west, 0});
          e += K_;
        } else {
          edges.push_back({x.north, x.west, 0});
          edges.push_back({x.south, x.east, 0});
          e -= K_;
        }
      }
      std::fill(inc.begin(), inc.end(), std::array<int, 2>{-1, -1});
      for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        for (int end : {edges[i].a, edges[i].b}) {
          auto& slot = inc[static_cast<size_t>(end)];
          (slot[0] < 0 ? slot[0] : slot[1]) = i;
        }
      }
      used.assign(edges.size(), 0);
      int trivial = 0, essential = 0;
      for (size_t e0 = 0; e0 < edges.size(); ++e0) {
        if (used[e0]) continue;
        int cur = edges[e0].a, ed = static_cast<int>(e0), net = 0;
        while (!used[static_cast<size_t>(ed)]) {
          used[static_cast<size_t>(ed)] = 1;
          const Edge& x = edges[static_cast<size_t>(ed)];
          if (x.a == cur) {
            net += x.seam;
            cur = x.b;
          } else {
            net -= x.seam;
            cur = x.a;
          }
          const auto& slot = inc[static_cast<size_t>(cur)];
          ed = slot[0] == ed ? slot[1] : slot[0];
        }
        ++(net ? essential : trivial);
      }
      ++tally[{e, trivial, essential}];
    }
    SkeinVector out;
    const int framing = K_ * passes_;  // blackboard framing differs by one kink per pass
    for (const auto& [key, cnt] : tally) {
      auto [e, trivial, essential] = key;
      SkeinVector val = essential ? delta_A().pow(static_cast<unsigned>(trivial)) *
                                        product_of_windings(std::vector<int>(static_cast<size_t>(essential), 1))
                                  : delta_A().pow(static_cast<unsigned>(trivial - 1)) * SkeinVector::basis(0);
      Integer k(static_cast<unsigned long>(cnt));
      if (framing % 2) k = -k;
      out += LaurentPoly::monomial(Var::A, k, e + 3 * framing) * val;
    }
    return out;
  }

 private:
  struct Edge {
    int a, b, seam;  // seam: +1 when crossing the seam leftwards going from a to b
  };
  struct Crossing {
    int north, south, east, west;
  };

  int v(int level, int q) const { return level * W_ + (q - 1); }

  void add_pass(int j, int sign) {
    const int s0 = nodes_;
    nodes_ += W_;
    auto seg = [&](int q) { return s0 + q - 1; };  // between lines q+1 and q
    passes_ += sign;
    if (sign > 0) {
      fixed_.push_back({v(j, 1), seg(W_), 1});
      fixed_.push_back({seg(1), v(j + 1, 1), 0});
    } else {
      fixed_.push_back({v(j + 1, 1), seg(W_), 1});
      fixed_.push_back({seg(1), v(j, 1), 0});
    }
    for (int q = 2; q <= W_; ++q) cross_.push_back({v(j + 1, q), v(j, q), seg(q), seg(q - 1)});
  }

  int n_, W_, L_;
  int K_ = 1;
  int nodes_ = 0;
  int passes_ = 0;
  std::vector<Edge> fixed_;
  std::vector<Crossing> cross_;
};

std::vector<int> encode(const std::vector<Tile>& tiles) {
  std::vector<int> out;
  for (const auto& t : tiles) {
    out.push_back(static_cast<int>(t.kind));
    out.push_back(t.kind == TileKind::CapCup ? t.index : 0);
    out.push_back(t.kind == TileKind::AxisPass ? t.sign : 0);
  }
  return out;
}

}  // namespace

SkeinVector evaluate_state_exact(const SmoothingState& s, Smoothing conv, int cap) {
  std::vector<Tile> tiles = s.tiles;
  if (tiles.empty()) tiles.push_back(Tile{});
  ExactState st(s.strands, tiles, conv);
  if (st.crossings() > cap) throw StateCapExceeded(st.crossings(), cap);
  return s.weight * st.evaluate();
}

std::vector<SmoothingState> smooth_states(const MixedBraidWord& w, int cap, Smoothing conv) {
  const auto cross = crossing_positions(w);
  const int c = static_cast<int>(cross.size());
  if (c > cap || c > 62) throw StateCapExceeded(c, cap);
  std::vector<SmoothingState> out;
  out.reserve(size_t{1} << c);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << c); ++bits) {
    SmoothingState s;
    s.strands = w.strands;
    int e = 0;
    int k = 0;
    for (const auto& l : w.letters) {
      if (l.is_t) {
        s.tiles.push_back(Tile{TileKind::AxisPass, 0, l.sign});
        continue;
      }
      bool cc = (bits >> k++) & 1u;
      e += choice_exponent(l.sign, cc, conv);
      s.tiles.push_back(cc ? Tile{TileKind::CapCup, l.index, 1} : Tile{});
    }
    s.weight = LaurentPoly::monomial(Var::A, 1, e);
    out.push_back(std::move(s));
  }
  return out;
}

TerminalState trace_components(const SmoothingState& s) { return Walker(s.strands, s.tiles).run(); }

SkeinVector merge_windings(const TerminalState& ts) {
  if (ts.windings.empty()) {
    if (ts.contractible_loops < 1) throw std::invalid_argument("empty diagram has no basis image");
    return delta_A().pow(static_cast<unsigned>(ts.contractible_loops - 1)) * SkeinVector::basis(0);
  }
  return delta_A().pow(static_cast<unsigned>(ts.contractible_loops)) * product_of_windings(ts.windings);
}

// Closures are invariant under conjugation, so g ... g^-1 around the word cancels too.
MixedBraidWord cyclic_reduce(const MixedBraidWord& input) {
  MixedBraidWord w = free_reduce(input);
  size_t lo = 0, hi = w.letters.size();
  while (hi - lo >= 2 && w.letters[lo] == w.letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  w.letters = std::vector<Letter>(w.letters.begin() + lo, w.letters.begin() + hi);
  return w;
}

SkeinVector evaluate_closure(const MixedBraidWord& input, const EvalOptions& opts) {
  const MixedBraidWord w = cyclic_reduce(input);
  const auto cross = crossing_positions(w);
  const int c = static_cast<int>(cross.size());
  if (c > opts.cap || c > 62) throw StateCapExceeded(c, opts.cap);
  const std::uint64_t total = std::uint64_t{1} << c;

  using Tally = std::map<std::pair<int, TerminalState>, std::uint64_t>;
  using ExactTally = std::map<std::vector<int>, std::pair<std::vector<Tile>, std::map<int, std::uint64_t>>>;
  auto work = [&](std::uint64_t lo, std::uint64_t hi, Tally& tally, ExactTally& exact) {
    std::vector<Tile> tiles(w.letters.size());
    for (size_t j = 0; j < w.letters.size(); ++j)
      if (w.letters[j].is_t) tiles[j] = Tile{TileKind::AxisPass, 0, w.letters[j].sign};
    for (std::uint64_t bits = lo; bits < hi; ++bits) {
      int e = 0;
      for (int k = 0; k < c; ++k) {
        const Letter& l = w.letters[cross[k]];
        bool cc = (bits >> k) & 1u;
        e += choice_exponent(l.sign, cc, opts.smoothing);
        tiles[cross[k]] = cc ? Tile{TileKind::CapCup, l.index, 1} : Tile{};
      }
      if (!opts.force_exact) {
        try {
          ++tally[{e, Walker(w.strands, tiles).run()}];
          continue;
        } catch (const OutOfDomain&) {
        }
      }
      auto& slot = exact[encode(tiles)];
      if (slot.first.empty()) slot.first = tiles;
      ++slot.second[e];
    }
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  if (total < 4096) threads = 1;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  std::vector<Tally> tallies(threads);
  std::vector<ExactTally> exacts(threads);
  if (threads == 1) {
    work(0, total, tallies[0], exacts[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
      pool.emplace_back(work, lo, hi, std::ref(tallies[t]), std::ref(exacts[t]));
    }
    for (auto& th : pool) th.join();
  }
  Tally merged;
  for (const auto& tl : tallies)
    for (const auto& [k, cnt] : tl) merged[k] += cnt;

  ExactTally exact_merged;
  for (const auto& ex : exacts) {
    for (const auto& [code, entry] : ex) {
      auto& slot = exact_merged[code];
      if (slot.first.empty()) slot.first = entry.first;
      for (const auto& [e, cnt] : entry.second) slot.second[e] += cnt;
    }
  }

  // Exact states cost 2^(extra crossings) each; the total stays under the state cap.
  if (!exact_merged.empty()) {
    const int extra = ExactState(w.strands, exact_merged.begin()->second.first, opts.smoothing).crossings();
    int pattern_bits = 0;
    while ((std::size_t{1} << pattern_bits) < exact_merged.size()) ++pattern_bits;
    if (extra + pattern_bits > opts.cap) throw StateCapExceeded(extra + pattern_bits, opts.cap);
  }

  SkeinVector out;
  for (const auto& [key, cnt] : merged) {
    LaurentPoly weight = LaurentPoly::monomial(Var::A, Integer(static_cast<unsigned long>(cnt)), key.first);
    out += weight * merge_windings(key.second);
  }
  for (const auto& [code, entry] : exact_merged) {
    LaurentPoly weight(Var::A);
    for (const auto& [e, cnt] : entry.second)
      weight += LaurentPoly::monomial(Var::A, Integer(static_cast<unsigned long>(cnt)), e);
    SmoothingState st;
    st.strands = w.strands;
    st.tiles = entry.first;
    st.weight = weight;
    out += evaluate_state_exact(st, opts.smoothing, opts.exact_cap);
  }
  return out;
}

}  // namespace skein
