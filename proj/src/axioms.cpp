#include <algorithm>
#include <array>

#include "laguerre/error.hpp"
#include "laguerre/skewaffine.hpp"

namespace laguerre {

using nlohmann::json;

namespace {

constexpr std::array<Axiom, 9> kAxioms{Axiom::L1, Axiom::L2, Axiom::P1,  Axiom::P2, Axiom::T,
                                       Axiom::V,  Axiom::Pgm, Axiom::Des, Axiom::Pap};

constexpr const char* kPapReading =
    "Pap is checked with u, x, x' pairwise distinct and u⊔x' != u⊔x; y, z range over u⊔x minus u "
    "(coincidences allowed) and y', z' over u⊔x' minus u. When x' lies on u⊔x the conclusion can fail "
    "for degenerate choices; those configurations are excluded (counted in stats.degenerate_same_line_failures "
    "for exhaustive sweeps).";

// Flat lookup tables over local indices.
struct Tables {
  const GroupSpace& gs;
  int n;
  std::vector<int> cls;                     // n*n, -1 on the diagonal
  std::vector<std::vector<int>> members;    // local points of each line
  std::vector<std::vector<int>> off_base;   // line(J(u, .)) minus u, via join_local

  explicit Tables(const GroupSpace& g) : gs(g), n(g.num_points()) {
    cls.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y) cls[idx(x, y)] = gs.line(gs.join_local(x, y)).class_index;
    members.resize(static_cast<std::size_t>(gs.num_lines()));
    for (int id = 0; id < gs.num_lines(); ++id)
      for (int z : gs.line(id).points) members[static_cast<std::size_t>(id)].push_back(gs.local(z));
  }

  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y); }
  int c(int x, int y) const { return cls[idx(x, y)]; }
  int join(int x, int y) const { return gs.join_local(x, y); }
  bool on(int z, int line) const { return gs.on_line(gs.points()[static_cast<std::size_t>(z)], line); }

  // Points of u ⊔ x other than u.
  std::vector<int> rest(int u, int x) const {
    std::vector<int> out;
    for (int z : members[static_cast<std::size_t>(join(u, x))])
      if (z != u) out.push_back(z);
    return out;
  }

  json pt(int z) const { return to_json(gs.plane().point(gs.points()[static_cast<std::size_t>(z)])); }
};

std::uint64_t key3(int n, int a, int b, int c) {
  return (static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(b)) *
             static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(c);
}

// --- single-configuration checks; return true when the conclusion holds ---

bool tamaschke(const Tables& t, int x, int y, int z, int x2, int y2) {
  for (int z2 = 0; z2 < t.n; ++z2) {
    if (z2 == x2 || z2 == y2) continue;
    if (t.c(x, z) == t.c(x2, z2) && t.c(y, z) == t.c(y2, z2)) return true;
  }
  return false;
}

bool parallelogram(const Tables& t, int x, int y, int z) {
  for (int w = 0; w < t.n; ++w) {
    if (w == y || w == z) continue;
    if (t.c(x, y) == t.c(z, w) && t.c(x, z) == t.c(y, w)) return true;
  }
  return false;
}

bool desargues(const Tables& t, int u, int x, int y, int z, int x2) {
  for (int y2 : t.rest(u, y)) {
    if (y2 == x2 || t.c(x, y) != t.c(x2, y2)) continue;
    for (int z2 : t.rest(u, z)) {
      if (z2 == x2 || z2 == y2) continue;
      if (t.c(x, z) == t.c(x2, z2) && t.c(y, z) == t.c(y2, z2)) return true;
    }
  }
  return false;
}

bool pappus(const Tables& t, int x, int y, int z, int x2, const std::vector<int>& cand) {
  if (z == x2 || y == x2) return false;
  for (int y2 : cand) {
    if (x == y2 || z == y2 || t.c(y, x2) != t.c(z, y2)) continue;
    for (int z2 : cand) {
      if (z == z2 || y == z2) continue;
      if (t.c(x, x2) == t.c(z, z2) && t.c(x, y2) == t.c(y, z2)) return true;
    }
  }
  return false;
}

std::uint64_t draw_distinct(SplitMix64& rng, int n, std::initializer_list<int> avoid) {
  for (;;) {
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (std::find(avoid.begin(), avoid.end(), v) == avoid.end()) return static_cast<std::uint64_t>(v);
  }
}

// --- sweeps ---

Tally sweep_l1(const Tables& t, Exec exec) {
  return sweep(t.n, exec, [&](std::int64_t i, Tally& tally) {
    const int x = static_cast<int>(i);
    for (int y = 0; y < t.n; ++y) {
      if (y == x) continue;
      tally.count();
      int l = t.join(x, y);
      if (!t.on(x, l) || !t.on(y, l))
        tally.fail(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y), {{"x", t.pt(x)}, {"y", t.pt(y)}});
    }
  });
}

Tally sweep_l2(const Tables& t, Exec exec) {
  return sweep(t.n, exec, [&](std::int64_t i, Tally& tally) {
    const int x = static_cast<int>(i);
    for (int y = 0; y < t.n; ++y) {
      if (y == x) continue;
      for (int z : t.rest(x, y)) {
        tally.count();
        if (t.join(x, z) != t.join(x, y))
          tally.fail(static_cast<std::uint64_t>(x), key3(t.n, 0, y, z), {{"x", t.pt(x)}, {"y", t.pt(y)}, {"z", t.pt(z)}});
      }
    }
  });
}

Tally sweep_p1(const Tables& t, Exec exec) {
  return sweep(t.gs.num_lines(), exec, [&](std::int64_t i, Tally& tally) {
    const int target = t.gs.line(static_cast<int>(i)).class_index;
    for (int x = 0; x < t.n; ++x) {
      tally.count();
      std::vector<int> found;
      for (int y = 0; y < t.n; ++y)
        if (y != x && t.c(x, y) == target) found.push_back(t.join(x, y));
      std::sort(found.begin(), found.end());
      found.erase(std::unique(found.begin(), found.end()), found.end());
      if (found.size() != 1)
        tally.fail(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(x),
                   {{"line", i}, {"x", t.pt(x)}, {"parallel_lines_through_x", found.size()}});
    }
  });
}

Tally sweep_p2(const Tables& t, Exec exec) {
  const auto& pairs = t.gs.class_pairs();
  return sweep(t.n, exec, [&](std::int64_t i, Tally& tally) {
    const int x = static_cast<int>(i);
    for (int y = 0; y < t.n; ++y) {
      if (y == x) continue;
      for (auto [x2, y2] : pairs[static_cast<std::size_t>(t.c(x, y))]) {
        tally.count();
        if (t.c(y, x) != t.c(y2, x2))
          tally.fail(static_cast<std::uint64_t>(x), key3(t.n, y, x2, y2),
                     {{"x", t.pt(x)}, {"y", t.pt(y)}, {"x'", t.pt(x2)}, {"y'", t.pt(y2)}});
      }
    }
  });
}

void tamaschke_case(const Tables& t, Tally& tally, std::uint64_t key, std::uint64_t sub, int x, int y, int z, int x2,
                    int y2) {
  tally.count();
  if (!tamaschke(t, x, y, z, x2, y2))
    tally.fail(key, sub, {{"x", t.pt(x)}, {"y", t.pt(y)}, {"z", t.pt(z)}, {"x'", t.pt(x2)}, {"y'", t.pt(y2)}});
}

Tally sweep_t(const Tables& t, bool veblen, const Budget& budget, Exec exec) {
  const auto& pairs = t.gs.class_pairs();
  if (!budget.exhaustive) {
    return sweep(static_cast<std::int64_t>(budget.samples), exec, [&](std::int64_t j, Tally& tally) {
      SplitMix64 rng = SplitMix64::for_draw(budget.seed, static_cast<std::uint64_t>(j));
      int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(t.n)));
      int y = static_cast<int>(draw_distinct(rng, t.n, {x}));
      int z = static_cast<int>(draw_distinct(rng, t.n, {x, y}));
      int x2 = x, y2 = y;
      if (veblen) {
        const auto& line_pts = pairs[static_cast<std::size_t>(t.c(x, y))];
        std::vector<int> ys;
        for (auto [a, b] : line_pts)
          if (a == x) ys.push_back(b);
        y2 = ys[rng.below(ys.size())];
      } else {
        const auto& cand = pairs[static_cast<std::size_t>(t.c(x, y))];
        std::tie(x2, y2) = cand[rng.below(cand.size())];
      }
      tamaschke_case(t, tally, static_cast<std::uint64_t>(j), 0, x, y, z, x2, y2);
    });
  }
  return sweep(t.n, exec, [&](std::int64_t i, Tally& tally) {
    const int x = static_cast<int>(i);
    for (int y = 0; y < t.n; ++y) {
      if (y == x) continue;
      for (int z = 0; z < t.n; ++z) {
        if (z == x || z == y) continue;
        for (auto [x2, y2] : pairs[static_cast<std::size_t>(t.c(x, y))]) {
          if (veblen && x2 != x) continue;
          tamaschke_case(t, tally, static_cast<std::uint64_t>(x), key3(t.n, y, z, x2 * t.n + y2), x, y, z, x2, y2);
        }
      }
    }
  });
}

Tally sweep_pgm(const Tables& t, Exec exec) {
  return sweep(t.n, exec, [&](std::int64_t i, Tally& tally) {
    const int x = static_cast<int>(i);
    for (int y = 0; y < t.n; ++y) {
      if (y == x) continue;
      for (int z = 0; z < t.n; ++z) {
        if (z == x || z == y) continue;
        tally.count();
        if (!parallelogram(t, x, y, z))
          tally.fail(static_cast<std::uint64_t>(x), key3(t.n, 0, y, z), {{"x", t.pt(x)}, {"y", t.pt(y)}, {"z", t.pt(z)}});
      }
    }
  });
}

void desargues_case(const Tables& t, Tally& tally, std::uint64_t key, std::uint64_t sub, int u, int x, int y, int z,
                    int x2) {
  tally.count();
  if (!desargues(t, u, x, y, z, x2))
    tally.fail(key, sub, {{"u", t.pt(u)}, {"x", t.pt(x)}, {"y", t.pt(y)}, {"z", t.pt(z)}, {"x'", t.pt(x2)}});
}

Tally sweep_des(const Tables& t, const Budget& budget, Exec exec) {
  if (!budget.exhaustive) {
    return sweep(static_cast<std::int64_t>(budget.samples), exec, [&](std::int64_t j, Tally& tally) {
      SplitMix64 rng = SplitMix64::for_draw(budget.seed, static_cast<std::uint64_t>(j));
      int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(t.n)));
      int x = static_cast<int>(draw_distinct(rng, t.n, {u}));
      int y = static_cast<int>(draw_distinct(rng, t.n, {u, x}));
      int z = static_cast<int>(draw_distinct(rng, t.n, {u, x, y}));
      std::vector<int> r = t.rest(u, x);
      int x2 = r[rng.below(r.size())];
      desargues_case(t, tally, static_cast<std::uint64_t>(j), 0, u, x, y, z, x2);
    });
  }
  return sweep(t.n, exec, [&](std::int64_t i, Tally& tally) {
    const int u = static_cast<int>(i);
    for (int x = 0; x < t.n; ++x) {
      if (x == u) continue;
      std::vector<int> r = t.rest(u, x);
      for (int y = 0; y < t.n; ++y) {
        if (y == u || y == x) continue;
        for (int z = 0; z < t.n; ++z) {
          if (z == u || z == x || z == y) continue;
          for (int x2 : r) desargues_case(t, tally, static_cast<std::uint64_t>(u), key3(t.n, x, y, z * t.n + x2), u, x, y, z, x2);
        }
      }
    }
  });
}

void pappus_case(const Tables& t, Tally& tally, std::uint64_t key, std::uint64_t sub, int u, int x, int y, int z,
                 int x2, const std::vector<int>& cand) {
  tally.count();
  if (!pappus(t, x, y, z, x2, cand))
    tally.fail(key, sub, {{"u", t.pt(u)}, {"x", t.pt(x)}, {"y", t.pt(y)}, {"z", t.pt(z)}, {"x'", t.pt(x2)}});
}

Tally sweep_pap(const Tables& t, const Budget& budget, Exec exec, std::uint64_t& degenerate_failures) {
  if (!budget.exhaustive) {
    return sweep(static_cast<std::int64_t>(budget.samples), exec, [&](std::int64_t j, Tally& tally) {
      SplitMix64 rng = SplitMix64::for_draw(budget.seed, static_cast<std::uint64_t>(j));
      int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(t.n)));
      int x = static_cast<int>(draw_distinct(rng, t.n, {u}));
      int x2;
      do x2 = static_cast<int>(draw_distinct(rng, t.n, {u, x}));
      while (t.join(u, x2) == t.join(u, x));
      std::vector<int> r = t.rest(u, x);
      int y = r[rng.below(r.size())];
      int z = r[rng.below(r.size())];
      pappus_case(t, tally, static_cast<std::uint64_t>(j), 0, u, x, y, z, x2, t.rest(u, x2));
    });
  }
  // Degenerate configurations (x' on u ⊔ x) are tallied separately, never failed.
  Tally degenerate = sweep(t.n, exec, [&](std::int64_t i, Tally& tally) {
    const int u = static_cast<int>(i);
    for (int x = 0; x < t.n; ++x) {
      if (x == u) continue;
      std::vector<int> r = t.rest(u, x);
      for (int x2 : r) {
        if (x2 == x) continue;
        for (int y : r)
          for (int z : r) {
            if (y == x2 || z == x2) continue;  // joins with x' undefined
            tally.count();
            if (!pappus(t, x, y, z, x2, r))
              tally.fail(static_cast<std::uint64_t>(u), key3(t.n, x, y, z * t.n + x2),
                         {{"u", t.pt(u)}, {"x", t.pt(x)}, {"y", t.pt(y)}, {"z", t.pt(z)}, {"x'", t.pt(x2)}});
          }
      }
    }
  });
  degenerate_failures = degenerate.violations();
  return sweep(t.n, exec, [&](std::int64_t i, Tally& tally) {
    const int u = static_cast<int>(i);
    for (int x = 0; x < t.n; ++x) {
      if (x == u) continue;
      std::vector<int> r = t.rest(u, x);
      for (int x2 = 0; x2 < t.n; ++x2) {
        if (x2 == u || x2 == x || t.join(u, x2) == t.join(u, x)) continue;
        std::vector<int> cand = t.rest(u, x2);
        for (int y : r)
          for (int z : r) pappus_case(t, tally, static_cast<std::uint64_t>(u), key3(t.n, x, y, z * t.n + x2), u, x, y, z, x2, cand);
      }
    }
  });
}

}  // namespace

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> v(kAxioms.begin(), kAxioms.end());
  return v;
}

const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::L1: return "L1";
    case Axiom::L2: return "L2";
    case Axiom::P1: return "P1";
    case Axiom::P2: return "P2";
    case Axiom::T: return "T";
    case Axiom::V: return "V";
    case Axiom::Pgm: return "Pgm";
    case Axiom::Des: return "Des";
    case Axiom::Pap: return "Pap";
  }
  return "?";
}

Axiom parse_axiom(const std::string& id) {
  for (Axiom a : kAxioms)
    if (id == to_string(a)) return a;
  throw Error(Errc::unknown_id, "unknown axiom id: " + id);
}

Budget default_budget(Axiom a, int q) {
  switch (a) {
    case Axiom::T:
    case Axiom::Des:
    case Axiom::Pap: return q <= 5 ? Budget::exhaustive_budget() : Budget::sampled(1'000'000);
    default: return Budget::exhaustive_budget();
  }
}

Report check_axiom(const GroupSpace& gs, Axiom axiom, const Budget& budget, Exec exec) {
  return timed([&] {
    Tables t(gs);
    // Axioms without a sampling path always run exhaustively.
    const bool samplable = axiom == Axiom::T || axiom == Axiom::V || axiom == Axiom::Des || axiom == Axiom::Pap;
    const Budget effective = samplable ? budget : Budget::exhaustive_budget();
    std::uint64_t degenerate = 0;
    Tally tally;
    switch (axiom) {
      case Axiom::L1: tally = sweep_l1(t, exec); break;
      case Axiom::L2: tally = sweep_l2(t, exec); break;
      case Axiom::P1: tally = sweep_p1(t, exec); break;
      case Axiom::P2: tally = sweep_p2(t, exec); break;
      case Axiom::T: tally = sweep_t(t, false, effective, exec); break;
      case Axiom::V: tally = sweep_t(t, true, effective, exec); break;
      case Axiom::Pgm: tally = sweep_pgm(t, exec); break;
      case Axiom::Des: tally = sweep_des(t, effective, exec); break;
      case Axiom::Pap: tally = sweep_pap(t, effective, exec, degenerate); break;
    }
    Report r = Report::from_tally(to_string(axiom), gs.plane().q(), tally);
    r.stats["budget"] = effective.to_string();
    if (!effective.exhaustive) r.stats["seed"] = effective.seed;
    r.stats["lines"] = gs.num_lines();
    r.stats["classes"] = gs.num_classes();
    if (axiom == Axiom::Pap) {
      r.reading_notes = kPapReading;
      if (effective.exhaustive) r.stats["degenerate_same_line_failures"] = degenerate;
    }
    return r;
  });
}

}  // namespace laguerre
