#include "superpoly/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstdint>
#include <deque>
#include <mutex>
#include <queue>
#include <thread>

namespace superpoly {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Dense working grid over a fixed coordinate window. Placements are applied
// with an undo list so searches can backtrack cheaply.
class WorkGrid {
 public:
  WorkGrid(int ox, int oy, int w, int h)
      : ox_(ox), oy_(oy), w_(w), h_(h), color_(static_cast<std::size_t>(w) * h, -1) {}

  int filled() const { return filled_; }
  int minx() const { return minx_; }
  int miny() const { return miny_; }
  int maxx() const { return maxx_; }
  int maxy() const { return maxy_; }

  int at(int x, int y) const {
    int gx = x - ox_, gy = y - oy_;
    if (gx < 0 || gy < 0 || gx >= w_ || gy >= h_) return -1;
    return color_[static_cast<std::size_t>(gy) * w_ + gx];
  }

  struct Save {
    int minx, miny, maxx, maxy, filled;
  };
  Save save() const { return {minx_, miny_, maxx_, maxy_, filled_}; }

  // Places p at o. Fails (leaving the grid untouched) on a color clash or an
  // out-of-window cell. Reports the overlap cell count and whether any new
  // cell edge-touches the existing content.
  bool try_add(const Polyomino& p, Offset o, std::vector<int>& added, int& shared, bool& touch) {
    shared = 0;
    touch = false;
    for (const auto& [c, color] : p.cells()) {
      int x = c.x + o.dx, y = c.y + o.dy;
      int gx = x - ox_, gy = y - oy_;
      if (gx < 0 || gy < 0 || gx >= w_ || gy >= h_) return false;
      int cur = color_[static_cast<std::size_t>(gy) * w_ + gx];
      if (cur >= 0) {
        if (cur != color) return false;
        ++shared;
      } else if (!touch) {
        touch = at(x + 1, y) >= 0 || at(x - 1, y) >= 0 || at(x, y + 1) >= 0 || at(x, y - 1) >= 0;
      }
    }
    added.clear();
    for (const auto& [c, color] : p.cells()) {
      int gx = c.x + o.dx - ox_, gy = c.y + o.dy - oy_;
      std::size_t idx = static_cast<std::size_t>(gy) * w_ + gx;
      if (color_[idx] < 0) {
        color_[idx] = color;
        added.push_back(static_cast<int>(idx));
      }
    }
    filled_ += static_cast<int>(added.size());
    if (filled_ == static_cast<int>(added.size()) && !added.empty()) {
      minx_ = INT_MAX;
      miny_ = INT_MAX;
      maxx_ = INT_MIN;
      maxy_ = INT_MIN;
    }
    for (const auto& [c, color] : p.cells()) {
      int x = c.x + o.dx, y = c.y + o.dy;
      minx_ = std::min(minx_, x);
      miny_ = std::min(miny_, y);
      maxx_ = std::max(maxx_, x);
      maxy_ = std::max(maxy_, y);
    }
    return true;
  }

  void undo(const std::vector<int>& added, const Save& s) {
    for (int idx : added) color_[idx] = -1;
    minx_ = s.minx;
    miny_ = s.miny;
    maxx_ = s.maxx;
    maxy_ = s.maxy;
    filled_ = s.filled;
  }

  // Labels the 4-connected components of the filled cells into comp (indexed
  // like the internal grid, -1 for empty) and returns their count.
  int components(std::vector<int>& comp) const {
    comp.assign(color_.size(), -1);
    int count = 0;
    std::vector<int> stack;
    for (int gy = miny_ - oy_; gy <= maxy_ - oy_; ++gy) {
      for (int gx = minx_ - ox_; gx <= maxx_ - ox_; ++gx) {
        int idx = gy * w_ + gx;
        if (color_[idx] < 0 || comp[idx] >= 0) continue;
        comp[idx] = count;
        stack.assign(1, idx);
        while (!stack.empty()) {
          int cur = stack.back();
          stack.pop_back();
          int cx = cur % w_, cy = cur / w_;
          const int nbs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
          for (const auto& d : nbs) {
            int nx = cx + d[0], ny = cy + d[1];
            if (nx < 0 || ny < 0 || nx >= w_ || ny >= h_) continue;
            int nidx = ny * w_ + nx;
            if (color_[nidx] >= 0 && comp[nidx] < 0) {
              comp[nidx] = count;
              stack.push_back(nidx);
            }
          }
        }
        ++count;
      }
    }
    return count;
  }

  bool is_connected() const {
    std::vector<int> comp;
    return components(comp) <= 1;
  }

  int width() const { return w_; }
  int height() const { return h_; }
  int origin_x() const { return ox_; }
  int origin_y() const { return oy_; }

 private:
  int ox_, oy_, w_, h_;
  std::vector<std::int16_t> color_;
  int filled_ = 0;
  int minx_ = INT_MAX, miny_ = INT_MAX, maxx_ = INT_MIN, maxy_ = INT_MIN;
};

// Fewest empty cells whose addition joins all components of the grid into one
// 4-connected set. Exact Steiner connection on the cell graph where existing
// cells are free and empty cells cost one; solved by the classic
// tree-merging dynamic program over terminal subsets.
int steiner_helper_cells(const WorkGrid& g, int terminal_count, const std::vector<int>& comp) {
  if (terminal_count <= 1) return 0;
  if (terminal_count > 6)
    throw SearchSpaceTooLargeError("steiner connection limited to 6 components");

  // region: bbox expanded by one, clamped to the window
  int rx0 = std::max(g.minx() - 1, g.origin_x());
  int ry0 = std::max(g.miny() - 1, g.origin_y());
  int rx1 = std::min(g.maxx() + 1, g.origin_x() + g.width() - 1);
  int ry1 = std::min(g.maxy() + 1, g.origin_y() + g.height() - 1);
  int rw = rx1 - rx0 + 1, rh = ry1 - ry0 + 1;
  int area = rw * rh;
  const int INF = INT_MAX / 4;

  auto weight = [&](int v) {
    int x = rx0 + v % rw, y = ry0 + v / rw;
    return g.at(x, y) >= 0 ? 0 : 1;
  };
  auto comp_of = [&](int v) {
    int x = rx0 + v % rw, y = ry0 + v / rw;
    int gx = x - g.origin_x(), gy = y - g.origin_y();
    int idx = gy * g.width() + gx;
    return g.at(x, y) >= 0 ? comp[idx] : -1;
  };

  int full = (1 << terminal_count) - 1;
  std::vector<std::vector<int>> dp(full + 1, std::vector<int>(area, INF));

  auto relax = [&](std::vector<int>& dist) {
    // node-weighted Dijkstra from the current estimates
    using Item = std::pair<int, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (int v = 0; v < area; ++v)
      if (dist[v] < INF) pq.emplace(dist[v], v);
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d > dist[v]) continue;
      int x = v % rw, y = v / rw;
      const int nbs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
      for (const auto& dd : nbs) {
        int nx = x + dd[0], ny = y + dd[1];
        if (nx < 0 || ny < 0 || nx >= rw || ny >= rh) continue;
        int nv = ny * rw + nx;
        int nd = d + weight(nv);
        if (nd < dist[nv]) {
          dist[nv] = nd;
          pq.emplace(nd, nv);
        }
      }
    }
  };

  for (int t = 0; t < terminal_count; ++t) {
    auto& dist = dp[1 << t];
    for (int v = 0; v < area; ++v)
      if (comp_of(v) == t) dist[v] = 0;
    relax(dist);
  }

  for (int s = 1; s <= full; ++s) {
    if ((s & (s - 1)) == 0) continue;  // singletons done
    auto& dist = dp[s];
    for (int t = (s - 1) & s; t > (s ^ t); t = (t - 1) & s) {
      const auto& a = dp[t];
      const auto& b = dp[s ^ t];
      for (int v = 0; v < area; ++v)
        if (a[v] < INF && b[v] < INF)
          dist[v] = std::min(dist[v], a[v] + b[v] - weight(v));
    }
    relax(dist);
  }

  int best = INF;
  for (int v = 0; v < area; ++v) best = std::min(best, dp[full][v]);
  return best;
}

// layout offset vectors ordered by (piece index, dy, dx)
bool layout_less(const Layout& a, const Layout& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return offset_less(a[i], b[i]);
  }
  return false;
}

// Chain placement: each piece set down just right of the previous one, rows
// aligned so they edge-touch. Always valid, size = total cell count.
Layout chain_layout(const std::vector<const Polyomino*>& seq) {
  Layout lay(seq.size());
  lay[0] = {0, 0};
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const Polyomino& prev = *seq[i - 1];
    const Polyomino& cur = *seq[i];
    int prev_right = prev.width() - 1;
    int y0 = 0;
    for (int y = 0; y < prev.height(); ++y)
      if (prev.color_at(prev_right, y) >= 0) {
        y0 = y;
        break;
      }
    int y1 = 0;
    for (int y = 0; y < cur.height(); ++y)
      if (cur.color_at(0, y) >= 0) {
        y1 = y;
        break;
      }
    lay[i] = {lay[i - 1].dx + prev.width(), lay[i - 1].dy + y0 - y1};
  }
  return lay;
}

struct Incumbent {
  int size = INT_MAX;
  Layout layout;  // in search-local piece order
  int steiner_cells = 0;
};

// ---------------- contact-mode branch and bound ----------------

struct ContactShared {
  std::atomic<int> best_size{INT_MAX};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> timed_out{false};
  std::mutex mu;
  Incumbent best;  // layout kept in instance order
  std::vector<std::pair<std::uint64_t, int>> history;
  Clock::time_point start;
  double time_limit = 0;
};

struct ContactWorker {
  const std::vector<const Polyomino*>& piece;  // sorted order
  const std::vector<int>& order;               // sorted position -> instance index
  ContactShared& shared;
  WorkGrid grid;
  std::vector<char> placed;
  Layout offsets;  // sorted order
  int placed_count = 0;
  std::uint64_t local_nodes = 0;

  ContactWorker(const std::vector<const Polyomino*>& pieces, const std::vector<int>& ord,
                ContactShared& sh, int ext)
      : piece(pieces),
        order(ord),
        shared(sh),
        grid(-ext, -ext, 2 * ext + 1, 2 * ext + 1),
        placed(pieces.size(), 0),
        offsets(pieces.size()) {}

  bool out_of_time() {
    if (shared.timed_out.load(std::memory_order_relaxed)) return true;
    if (shared.time_limit > 0 && (local_nodes & 1023) == 0 &&
        seconds_since(shared.start) > shared.time_limit) {
      shared.timed_out.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  void offer_leaf() {
    int size = grid.filled();
    Layout inst_lay(offsets.size());
    for (std::size_t i = 0; i < offsets.size(); ++i) inst_lay[order[i]] = offsets[i];
    std::lock_guard<std::mutex> lock(shared.mu);
    if (size < shared.best.size ||
        (size == shared.best.size && layout_less(inst_lay, shared.best.layout))) {
      bool improved = size < shared.best.size;
      shared.best.size = size;
      shared.best.layout = std::move(inst_lay);
      shared.best_size.store(size, std::memory_order_relaxed);
      if (improved)
        shared.history.emplace_back(shared.nodes.load(std::memory_order_relaxed) + local_nodes,
                                    size);
    }
  }

  void dfs() {
    int n = static_cast<int>(piece.size());
    if (placed_count == n) {
      offer_leaf();
      return;
    }
    if (out_of_time()) return;
    int largest_unplaced = 0;
    for (int p = 0; p < n; ++p)
      if (!placed[p]) {
        largest_unplaced = piece[p]->size();  // sorted descending
        break;
      }
    int bound = std::max(grid.filled(), largest_unplaced);
    if (bound > shared.best_size.load(std::memory_order_relaxed)) return;

    std::vector<int> added;
    for (int p = 0; p < n; ++p) {
      if (placed[p]) continue;
      const Polyomino& pl = *piece[p];
      for (int dy = grid.miny() - pl.height(); dy <= grid.maxy() + 1; ++dy) {
        for (int dx = grid.minx() - pl.width(); dx <= grid.maxx() + 1; ++dx) {
          ++local_nodes;
          int sharedCells = 0;
          bool touch = false;
          auto save = grid.save();
          if (!grid.try_add(pl, {dx, dy}, added, sharedCells, touch)) continue;
          if (sharedCells == 0 && !touch) {
            grid.undo(added, save);
            continue;
          }
          placed[p] = 1;
          offsets[p] = {dx, dy};
          ++placed_count;
          dfs();
          --placed_count;
          placed[p] = 0;
          grid.undo(added, save);
          if (out_of_time()) return;
        }
      }
    }
  }
};

SolveResult contact_search(const Instance& inst, const SolverConfig& cfg) {
  auto start = Clock::now();
  int n = inst.piece_count();

  // largest piece first; ties keep instance order
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.piece(a).size() > inst.piece(b).size();
  });
  std::vector<const Polyomino*> pieces(n);
  for (int i = 0; i < n; ++i) pieces[i] = &inst.piece(order[i]);

  int ext = 2;
  for (int i = 0; i < n; ++i) ext += std::max(pieces[i]->width(), pieces[i]->height());

  ContactShared shared;
  shared.start = start;
  shared.time_limit = cfg.time_limit_seconds;

  // seed with the always-valid chain so a timeout still reports a layout
  {
    Layout chain = chain_layout(pieces);
    shared.best.size = 0;
    for (int i = 0; i < n; ++i) shared.best.size += pieces[i]->size();
    shared.best.layout.assign(n, Offset{});
    for (int i = 0; i < n; ++i) shared.best.layout[order[i]] = chain[i];
    shared.best_size.store(shared.best.size);
    shared.history.emplace_back(0, shared.best.size);
  }

  auto run_single = [&](ContactWorker& w) {
    std::vector<int> added;
    int sharedCells = 0;
    bool touch = false;
    w.grid.try_add(*pieces[0], {0, 0}, added, sharedCells, touch);
    w.placed[0] = 1;
    w.offsets[0] = {0, 0};
    w.placed_count = 1;
    w.dfs();
    shared.nodes.fetch_add(w.local_nodes, std::memory_order_relaxed);
  };

  int workers = std::max(1, cfg.workers);
  if (workers == 1 || n <= 1) {
    ContactWorker w(pieces, order, shared, ext);
    run_single(w);
  } else {
    // enumerate first-level branches, then split them across workers;
    // the merged answer is order-independent because equal sizes resolve by
    // layout order under the shared lock
    struct Branch {
      int p;
      Offset o;
    };
    std::vector<Branch> branches;
    {
      ContactWorker probe(pieces, order, shared, ext);
      std::vector<int> added;
      int sharedCells = 0;
      bool touch = false;
      probe.grid.try_add(*pieces[0], {0, 0}, added, sharedCells, touch);
      for (int p = 1; p < n; ++p) {
        const Polyomino& pl = *pieces[p];
        for (int dy = probe.grid.miny() - pl.height(); dy <= probe.grid.maxy() + 1; ++dy)
          for (int dx = probe.grid.minx() - pl.width(); dx <= probe.grid.maxx() + 1; ++dx) {
            std::vector<int> a2;
            int sc = 0;
            bool t2 = false;
            auto save = probe.grid.save();
            if (!probe.grid.try_add(pl, {dx, dy}, a2, sc, t2)) continue;
            probe.grid.undo(a2, save);
            if (sc > 0 || t2) branches.push_back({p, {dx, dy}});
          }
      }
      shared.nodes.fetch_add(branches.size(), std::memory_order_relaxed);
    }
    std::atomic<std::size_t> next{0};
    auto worker_fn = [&]() {
      ContactWorker w(pieces, order, shared, ext);
      std::vector<int> added;
      int sharedCells = 0;
      bool touch = false;
      w.grid.try_add(*pieces[0], {0, 0}, added, sharedCells, touch);
      w.placed[0] = 1;
      w.offsets[0] = {0, 0};
      w.placed_count = 1;
      for (std::size_t i = next.fetch_add(1); i < branches.size(); i = next.fetch_add(1)) {
        const auto& br = branches[i];
        std::vector<int> a2;
        int sc = 0;
        bool t2 = false;
        auto save = w.grid.save();
        if (!w.grid.try_add(*pieces[br.p], br.o, a2, sc, t2)) continue;
        w.placed[br.p] = 1;
        w.offsets[br.p] = br.o;
        ++w.placed_count;
        w.dfs();
        --w.placed_count;
        w.placed[br.p] = 0;
        w.grid.undo(a2, save);
      }
      shared.nodes.fetch_add(w.local_nodes, std::memory_order_relaxed);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker_fn);
    for (auto& th : pool) th.join();
  }

  SolveResult res;
  res.size = shared.best.size;
  res.layout = shared.best.layout;
  res.stats.nodes = shared.nodes.load();
  res.stats.elapsed_seconds = seconds_since(start);
  res.stats.incumbent_history = shared.history;
  res.stats.timed_out = shared.timed_out.load();
  res.optimal = !res.stats.timed_out;
  return res;
}

// ---------------- windowed enumeration (brute / steiner) ----------------

struct WindowSearch {
  const Instance& inst;
  bool allow_helpers;
  int wx, wy;
  WorkGrid grid;
  Layout offsets;
  Incumbent best;
  std::uint64_t nodes = 0;
  std::vector<std::pair<std::uint64_t, int>> history;
  std::vector<int> comp_buffer;

  WindowSearch(const Instance& in, bool helpers, int wx_, int wy_, int ext)
      : inst(in),
        allow_helpers(helpers),
        wx(wx_),
        wy(wy_),
        grid(-ext, -ext, 2 * ext + 1, 2 * ext + 1),
        offsets(in.pieces.size()) {}

  void leaf() {
    int size = grid.filled();
    if (size >= best.size) return;
    int extra = 0;
    int k = grid.components(comp_buffer);
    if (k > 1) {
      if (!allow_helpers) return;
      if (size + k - 1 >= best.size) return;
      extra = steiner_helper_cells(grid, k, comp_buffer);
    }
    if (size + extra < best.size) {
      best.size = size + extra;
      best.layout = offsets;
      best.steiner_cells = extra;
      history.emplace_back(nodes, best.size);
    }
  }

  void rec(int level) {
    if (level == inst.piece_count()) {
      leaf();
      return;
    }
    const Polyomino& pl = inst.piece(level);
    std::vector<int> added;
    for (int dy = -wy; dy <= wy; ++dy) {
      for (int dx = -wx; dx <= wx; ++dx) {
        ++nodes;
        int sharedCells = 0;
        bool touch = false;
        auto save = grid.save();
        if (!grid.try_add(pl, {dx, dy}, added, sharedCells, touch)) continue;
        if (grid.filled() < best.size) {  // union only grows from here
          offsets[level] = {dx, dy};
          rec(level + 1);
        }
        grid.undo(added, save);
      }
    }
  }
};

SolveResult window_search(const Instance& inst, int window, bool allow_helpers) {
  auto start = Clock::now();
  int n = inst.piece_count();

  int sumw = 0, sumh = 0, maxdim = 0, maxw = 0, maxh = 0;
  for (const auto& [name, p] : inst.pieces) {
    sumw += p.width();
    sumh += p.height();
    maxw = std::max(maxw, p.width());
    maxh = std::max(maxh, p.height());
    maxdim = std::max({maxdim, p.width(), p.height()});
  }
  int wx, wy;
  if (window > 0) {
    if (window < maxdim)
      throw PreconditionViolatedError("window must be at least the largest piece dimension");
    wx = wy = window;
  } else {
    wx = sumw;
    wy = sumh;
  }

  double tuples = 1;
  for (int i = 1; i < n; ++i) {
    tuples *= (2.0 * wx + 1) * (2.0 * wy + 1);
    if (tuples > 1e8)
      throw SearchSpaceTooLargeError("offset window enumerates more than 1e8 placements");
  }

  int ext = std::max(wx + maxw, wy + maxh) + 2;
  WindowSearch search(inst, allow_helpers, wx, wy, ext);

  // seed with the chain layout whenever it fits the window
  {
    std::vector<const Polyomino*> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = &inst.piece(i);
    Layout chain = chain_layout(seq);
    bool fits = true;
    for (const auto& o : chain)
      if (std::abs(o.dx) > wx || std::abs(o.dy) > wy) fits = false;
    if (fits) {
      search.best.size = inst.total_cells;
      search.best.layout = chain;
      search.history.emplace_back(0, inst.total_cells);
    }
  }

  {
    std::vector<int> added;
    int sharedCells = 0;
    bool touch = false;
    search.grid.try_add(inst.piece(0), {0, 0}, added, sharedCells, touch);
    search.offsets[0] = {0, 0};
    search.rec(1);
  }

  if (search.best.size == INT_MAX)
    throw NoValidLayoutError("no valid layout inside the offset window");

  SolveResult res;
  res.size = search.best.size;
  res.layout = search.best.layout;
  res.optimal = true;
  res.stats.nodes = search.nodes;
  res.stats.elapsed_seconds = seconds_since(start);
  res.stats.incumbent_history = search.history;
  res.stats.steiner_cells = search.best.steiner_cells;
  return res;
}

}  // namespace

Instance subshape_filter(const Instance& inst) {
  int n = inst.piece_count();
  std::vector<std::vector<char>> embeds(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        embeds[i][j] = !is_superpolyomino(inst.piece(j), inst.piece(i)).empty();

  std::vector<std::pair<std::string, Polyomino>> kept;
  for (int i = 0; i < n; ++i) {
    bool removed = false;
    for (int j = 0; j < n && !removed; ++j) {
      if (j == i || !embeds[i][j]) continue;
      // strictly contained anywhere, or a duplicate of an earlier piece
      if (!embeds[j][i] || j < i) removed = true;
    }
    if (!removed) kept.push_back(inst.pieces[i]);
  }
  return Instance(std::move(kept));
}

SolveResult solve_exact(const Instance& inst, const SolverConfig& cfg) {
  if (inst.pieces.empty()) throw EmptyInstanceError("solve_exact needs a nonempty instance");
  if (cfg.mode != SolveMode::ExactContact && cfg.mode != SolveMode::ExactSteiner)
    throw PreconditionViolatedError("solve_exact handles the exact modes only");
  if (cfg.workers < 1) throw PreconditionViolatedError("worker count must be positive");

  Instance work = cfg.filter_subshapes ? subshape_filter(inst) : inst;

  SolveResult res = cfg.mode == SolveMode::ExactContact
                        ? contact_search(work, cfg)
                        : window_search(work, cfg.window, /*allow_helpers=*/true);

  if (work.piece_count() != inst.piece_count()) {
    // re-derive offsets for the filtered-out pieces from a piece that
    // contains them
    std::map<std::string, int> pos;
    for (int i = 0; i < work.piece_count(); ++i) pos[work.name(i)] = i;
    Layout full(inst.piece_count());
    for (int i = 0; i < inst.piece_count(); ++i) {
      auto it = pos.find(inst.name(i));
      if (it != pos.end()) {
        full[i] = res.layout[it->second];
        continue;
      }
      bool placed = false;
      for (int d = 0; d < work.piece_count() && !placed; ++d) {
        auto offs = is_superpolyomino(work.piece(d), inst.piece(i));
        if (!offs.empty()) {
          full[i] = res.layout[d] + offs.front();
          placed = true;
        }
      }
      if (!placed)
        throw Error("internal: filtered piece lost its containing piece");
    }
    res.layout = std::move(full);
  }
  return res;
}

SolveResult solve_brute(const Instance& inst, int window) {
  if (inst.pieces.empty()) throw EmptyInstanceError("solve_brute needs a nonempty instance");
  return window_search(inst, window, /*allow_helpers=*/false);
}

SolveResult solve_greedy(const Instance& inst) {
  if (inst.pieces.empty()) throw EmptyInstanceError("solve_greedy needs a nonempty instance");
  auto start = Clock::now();

  struct Entry {
    Polyomino poly;
    std::vector<std::pair<int, Offset>> parts;  // instance index, offset in poly frame
  };
  std::vector<Entry> live;
  int max_piece = 0;
  for (int i = 0; i < inst.piece_count(); ++i) {
    live.push_back({inst.piece(i), {{i, {0, 0}}}});
    max_piece = std::max(max_piece, inst.piece(i).size());
  }

  std::uint64_t nodes = 0;
  while (live.size() > 1) {
    int bi = -1, bj = -1, bcount = -1;
    Offset boff{};
    for (std::size_t i = 0; i < live.size(); ++i) {
      for (std::size_t j = i + 1; j < live.size(); ++j) {
        ++nodes;
        auto [o, count] = max_overlap(live[i].poly, live[j].poly);
        if (count > bcount) {  // scan order breaks ties toward the first pair
          bcount = count;
          bi = static_cast<int>(i);
          bj = static_cast<int>(j);
          boff = o;
        }
      }
    }
    auto merged_cells = superimpose(live[bi].poly, live[bj].poly, boff);
    auto [merged, shift] = normalize(merged_cells);
    Entry next{std::move(merged), {}};
    for (auto& [idx, off] : live[bi].parts) next.parts.emplace_back(idx, off + shift);
    for (auto& [idx, off] : live[bj].parts) next.parts.emplace_back(idx, off + boff + shift);
    live[bi] = std::move(next);
    live.erase(live.begin() + bj);
  }

  SolveResult res;
  res.size = live[0].poly.size();
  res.layout.assign(inst.piece_count(), Offset{});
  for (const auto& [idx, off] : live[0].parts) res.layout[idx] = off;
  res.optimal = res.size == max_piece;  // cannot beat the largest piece
  res.stats.nodes = nodes;
  res.stats.elapsed_seconds = seconds_since(start);
  return res;
}

SolveResult solve_line_single_color(const Instance& inst) {
  if (inst.pieces.empty())
    throw EmptyInstanceError("solve_line_single_color needs a nonempty instance");
  auto start = Clock::now();

  int common = -1;
  int best = 0;
  for (const auto& [name, p] : inst.pieces) {
    if (p.height() != 1)
      throw PreconditionViolatedError("piece " + name + " is not a single row");
    for (const auto& [c, color] : p.cells()) {
      if (common < 0) common = color;
      if (color != common)
        throw PreconditionViolatedError("piece " + name + " breaks the single shared color");
    }
    best = std::max(best, p.width());
  }

  SolveResult res;
  res.size = best;
  res.layout.assign(inst.piece_count(), Offset{0, 0});
  res.optimal = true;
  res.stats.nodes = inst.piece_count();
  res.stats.elapsed_seconds = seconds_since(start);
  return res;
}

}  // namespace superpoly
