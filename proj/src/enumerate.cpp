#include "pointfree/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "pointfree/interval_fn.hpp"

namespace pointfree {

namespace {

std::size_t downset_count(const Relation& poset) {
  std::size_t m = poset.size();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    bool closed = true;
    for (std::size_t j = 0; j < m && closed; ++j) {
      if (!(mask >> j & 1)) continue;
      for (std::size_t i = 0; i < m && closed; ++i) {
        if (poset(i, j) && !(mask >> i & 1)) closed = false;
      }
    }
    if (closed) ++count;
  }
  return count;
}

// Isomorphism test for small reflexive relations by backtracking over bijections.
bool isomorphic(const Relation& a, const Relation& b) {
  std::size_t n = a.size();
  if (b.size() != n) return false;
  auto degrees = [n](const Relation& r) {
    std::vector<std::pair<std::size_t, std::size_t>> d(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (r(i, j)) {
          ++d[i].first;
          ++d[j].second;
        }
      }
    }
    return d;
  };
  auto da = degrees(a);
  auto db = degrees(b);
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || da[i] != db[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        ok = a(i, k) == b(j, map[k]) && a(k, i) == b(map[k], j);
      }
      if (!ok || a(i, i) != b(j, j)) continue;
      used[j] = true;
      map[i] = j;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

void add_unique(std::vector<Relation>& pool, Relation r) {
  for (const Relation& s : pool) {
    if (isomorphic(s, r)) return;
  }
  pool.push_back(std::move(r));
}

Relation transitive_closure(Relation r) {
  std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!r(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (r(k, j)) r.set(i, j);
      }
    }
  }
  return r;
}

Relation drop_point(const Relation& r, std::size_t x) {
  std::size_t n = r.size();
  Relation out(n - 1);
  for (std::size_t i = 0, ii = 0; i < n; ++i) {
    if (i == x) continue;
    for (std::size_t j = 0, jj = 0; j < n; ++j) {
      if (j == x) continue;
      out.set(ii, jj, r(i, j));
      ++jj;
    }
    ++ii;
  }
  return out;
}

}  // namespace

std::vector<FramePtr> all_frames(std::size_t max_size) {
  std::vector<FramePtr> out;
  if (max_size == 0) return out;
  // Grow posets one new maximal point at a time; its strict downset is any
  // downset of the existing points. Downset counts only grow, so prune there.
  std::vector<Relation> level{Relation(0)};
  std::vector<Relation> all = level;
  while (!level.empty()) {
    std::vector<Relation> next;
    for (const Relation& p : level) {
      std::size_t m = p.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Relation q(m + 1);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) q.set(i, j, p(i, j));
          q.set(i, m, mask >> i & 1);
        }
        q.set(m, m);
        q = transitive_closure(std::move(q));
        bool downset = true;
        for (std::size_t i = 0; i < m; ++i) {
          if (q(i, m) && !(mask >> i & 1)) downset = false;
        }
        if (!downset || downset_count(q) > max_size) continue;
        add_unique(next, std::move(q));
      }
    }
    for (const Relation& r : next) all.push_back(r);
    level = std::move(next);
  }
  for (const Relation& r : all) out.push_back(downset_frame(r));
  std::stable_sort(out.begin(), out.end(), [](const FramePtr& a, const FramePtr& b) { return a->size() < b->size(); });
  return out;
}

std::vector<FiniteSpace> all_spaces(std::size_t max_points) {
  std::vector<FiniteSpace> out;
  for (std::size_t n = 1; n <= max_points; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) off.emplace_back(i, j);
      }
    }
    std::vector<Relation> pool;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << off.size()); ++bits) {
      Relation r(n);
      for (std::size_t i = 0; i < n; ++i) r.set(i, i);
      for (std::size_t k = 0; k < off.size(); ++k) {
        if (bits >> k & 1) r.set(off[k].first, off[k].second);
      }
      if (!(transitive_closure(r) == r)) continue;
      add_unique(pool, std::move(r));
    }
    // Specialization preorder x <= y: opens are the up-closed sets.
    for (const Relation& r : pool) {
      std::vector<PointSet> opens;
      for (PointSet u = 0; u < (PointSet{1} << n); ++u) {
        bool up = true;
        for (std::size_t x = 0; x < n && up; ++x) {
          if (!(u >> x & 1)) continue;
          for (std::size_t y = 0; y < n && up; ++y) {
            if (r(x, y) && !(u >> y & 1)) up = false;
          }
        }
        if (up) opens.push_back(u);
      }
      out.emplace_back(n, std::move(opens));
    }
  }
  return out;
}

Relation random_poset(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> density(1, 4);
  int d = density(rng);
  std::uniform_int_distribution<int> coin(0, 5);
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng) < d) r.set(i, j);
    }
  }
  return transitive_closure(std::move(r));
}

FramePtr random_frame(std::mt19937_64& rng, std::size_t max_size) {
  if (max_size <= 1) return downset_frame(Relation(0));
  std::uniform_int_distribution<std::size_t> points(1, max_size - 1);
  Relation p = random_poset(rng, points(rng));
  while (downset_count(p) > max_size) {
    std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
    p = drop_point(p, pick(rng));
  }
  return downset_frame(p);
}

FramePtr generate_frame(std::uint64_t seed, std::size_t size) {
  std::mt19937_64 rng(seed);
  return random_frame(rng, size);
}

void for_each_antitone_chain(const FiniteFrame& frame, std::size_t length, const std::vector<Element>& allowed,
                             std::optional<Element> first, std::optional<Element> last,
                             const std::function<void(const std::vector<Element>&)>& visit) {
  if (length == 0) return;
  std::vector<Element> seq(length);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == length) {
      visit(seq);
      return;
    }
    for (Element x : allowed) {
      if (i == 0 && first && x != *first) continue;
      if (i + 1 == length && last && x != *last) continue;
      if (i > 0 && !frame.leq(x, seq[i - 1])) continue;
      if (last && !frame.leq(*last, x)) continue;
      seq[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

namespace {

std::vector<Rational> sorted_grid(std::vector<Rational> grid) {
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

RealFn from_complemented_chain(const FramePtr& frame, const std::vector<Rational>& grid, const std::vector<Element>& v) {
  std::vector<Element> w;
  for (Element x : v) w.push_back(frame->pseudocomplement(x));
  return RealFn(frame, StepMap(Orientation::Antitone, grid, v), StepMap(Orientation::Isotone, grid, std::move(w)));
}

}  // namespace

std::vector<RealFn> continuous_grid_functions(const FramePtr& frame, const std::vector<Rational>& grid_in) {
  std::vector<Rational> grid = sorted_grid(grid_in);
  std::vector<RealFn> out;
  for_each_antitone_chain(*frame, grid.size() + 1, complemented_elements(*frame), frame->top(), frame->bottom(),
                          [&](const std::vector<Element>& v) { out.push_back(from_complemented_chain(frame, grid, v)); });
  return out;
}

std::vector<RealFn> extended_grid_functions(const FramePtr& frame, const std::vector<Rational>& grid_in) {
  std::vector<Rational> grid = sorted_grid(grid_in);
  std::vector<RealFn> out;
  for_each_antitone_chain(*frame, grid.size() + 1, complemented_elements(*frame), std::nullopt, std::nullopt,
                          [&](const std::vector<Element>& v) { out.push_back(from_complemented_chain(frame, grid, v)); });
  return out;
}

void for_each_partial_grid_function(const FramePtr& frame, const std::vector<Rational>& grid_in,
                                    const std::function<void(const RealFn&)>& visit) {
  std::vector<Rational> grid = sorted_grid(grid_in);
  const FiniteFrame& l = *frame;
  std::vector<Element> all(l.size());
  std::iota(all.begin(), all.end(), Element{0});
  std::size_t len = grid.size() + 1;
  for_each_antitone_chain(l, len, all, std::nullopt, std::nullopt, [&](const std::vector<Element>& u) {
    // Isotone w with u_i ^ w_i = 0, built right to left as an antitone chain.
    std::vector<Element> w(len);
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == len) {
        visit(RealFn(frame, StepMap(Orientation::Antitone, grid, u), StepMap(Orientation::Isotone, grid, w)));
        return;
      }
      std::size_t i = len - 1 - k;
      for (Element x = 0; x < l.size(); ++x) {
        if (l.meet(x, u[i]) != l.bottom()) continue;
        if (k > 0 && !l.leq(x, w[i + 1])) continue;
        w[i] = x;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
  });
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  return make_rational(num(rng), 4);
}

namespace {

std::vector<Rational> random_breaks(std::mt19937_64& rng, std::size_t max_breaks) {
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, max_breaks));
  std::vector<Rational> b;
  std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) b.push_back(random_rational(rng));
  return sorted_grid(std::move(b));
}

Element pick(std::mt19937_64& rng, const std::vector<Element>& from) {
  std::uniform_int_distribution<std::size_t> d(0, from.size() - 1);
  return from[d(rng)];
}

}  // namespace

RealFn random_continuous_on(std::mt19937_64& rng, const FramePtr& frame, const std::vector<Rational>& grid) {
  const FiniteFrame& l = *frame;
  std::vector<Element> comp = complemented_elements(l);
  std::vector<Element> v{l.top()};
  for (std::size_t i = 1; i < grid.size(); ++i) {
    std::vector<Element> below;
    for (Element c : comp) {
      if (l.leq(c, v.back())) below.push_back(c);
    }
    v.push_back(pick(rng, below));
  }
  v.push_back(l.bottom());
  return from_complemented_chain(frame, grid, v);
}

RealFn random_extended_on(std::mt19937_64& rng, const FramePtr& frame, const std::vector<Rational>& grid) {
  const FiniteFrame& l = *frame;
  std::vector<Element> comp = complemented_elements(l);
  std::vector<Element> v{pick(rng, comp)};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<Element> below;
    for (Element c : comp) {
      if (l.leq(c, v.back())) below.push_back(c);
    }
    v.push_back(pick(rng, below));
  }
  return from_complemented_chain(frame, grid, v);
}

RealFn random_partial_on(std::mt19937_64& rng, const FramePtr& frame, const std::vector<Rational>& grid) {
  const FiniteFrame& l = *frame;
  std::vector<Element> all(l.size());
  std::iota(all.begin(), all.end(), Element{0});
  std::vector<Element> u{pick(rng, all)};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<Element> below;
    for (Element x : all) {
      if (l.leq(x, u.back())) below.push_back(x);
    }
    u.push_back(pick(rng, below));
  }
  std::vector<Element> w;
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::vector<Element> ok;
    for (Element x : all) {
      if (l.leq(x, l.pseudocomplement(u[i])) && (w.empty() || l.leq(w.back(), x))) ok.push_back(x);
    }
    w.push_back(pick(rng, ok));
  }
  return RealFn(frame, StepMap(Orientation::Antitone, grid, std::move(u)), StepMap(Orientation::Isotone, grid, std::move(w)));
}

std::vector<Rational> random_subgrid(std::mt19937_64& rng, const std::vector<Rational>& grid, std::size_t max_size) {
  std::vector<Rational> g = grid;
  std::shuffle(g.begin(), g.end(), rng);
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, std::min(max_size, g.size())));
  g.resize(count(rng));
  return sorted_grid(std::move(g));
}

RealFn random_continuous(std::mt19937_64& rng, const FramePtr& frame, std::size_t max_breaks) {
  return random_continuous_on(rng, frame, random_breaks(rng, max_breaks));
}

RealFn random_partial(std::mt19937_64& rng, const FramePtr& frame, std::size_t max_breaks) {
  return random_partial_on(rng, frame, random_breaks(rng, max_breaks));
}

RealFn random_hausdorff(std::mt19937_64& rng, const FramePtr& frame, std::size_t max_breaks) {
  return hausdorff_completion(random_partial(rng, frame, max_breaks));
}

}  // namespace pointfree
