#include "localp1/reference.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <vector>

#include "detail_tuples.hpp"
#include "localp1/checked.hpp"
#include "localp1/enumeration.hpp"
#include "localp1/stability.hpp"

namespace localp1::reference {

namespace {

struct Slot {
  int gap, t, s, deg;
};

std::vector<Slot> slots_of(const ModuleConfig& c) {
  std::vector<Slot> out;
  for (int j = 0; j + 1 < c.num_rows(); ++j)
    for (int t = 0; t < c.type.rows[j + 1]; ++t)
      for (int s = 0; s < c.type.rows[j]; ++s) out.push_back({j, t, s, c.entry_degree(j, t, s)});
  return out;
}

bool is_cycle_type(const SheafType& ty) {
  return ty.rows == std::vector<int>{1, 2, 1} || ty.rows == std::vector<int>{2, 2};
}

ModuleConfig make_skeleton(int k, const SheafType& ty, std::vector<std::vector<int>> twists) {
  ModuleConfig c;
  c.k = k;
  c.type = ty;
  c.twists = std::move(twists);
  for (size_t j = 0; j + 1 < ty.rows.size(); ++j)
    c.maps.emplace_back(ty.rows[j + 1], std::vector<Entry>(ty.rows[j]));
  return c;
}

// Transvection ties: configs isomorphic to c with the same number of zero
// entries (kill one entry, revive the zero slot the same move fills in).
std::vector<ModuleConfig> tie_images(const ModuleConfig& c, const std::vector<Character>& chr) {
  std::vector<ModuleConfig> out;
  std::vector<int> offset(c.num_rows() + 1);
  for (int j = 0; j < c.num_rows(); ++j) offset[j + 1] = offset[j] + c.type.rows[j];

  for (int j = 0; j < c.num_rows(); ++j) {
    const int dj = c.type.rows[j];
    for (int u = 0; u < dj; ++u)
      for (int w = 0; w < dj; ++w) {
        if (u == w) continue;
        const int mx = chr[offset[j] + u][0] - chr[offset[j] + w][0];
        const int my = chr[offset[j] + u][1] - chr[offset[j] + w][1];
        if (mx < 0 || my < 0) continue;

        struct Pos {
          int gap, t, s;
        };
        std::vector<Pos> kill, revive;
        std::vector<std::pair<Pos, Monomial>> revived;
        if (j > 0) {
          for (int s = 0; s < c.type.rows[j - 1]; ++s) {
            const Entry& at_w = c.maps[j - 1][w][s];
            const Entry& at_u = c.maps[j - 1][u][s];
            if (at_u.nonzero() && at_w.nonzero()) kill.push_back({j - 1, w, s});
            if (at_u.nonzero() && at_w.is_zero())
              revived.push_back({{j - 1, w, s},
                                 make_monomial(at_u.deg() + mx + my, at_u.xexp() + mx)});
          }
        }
        if (j + 1 < c.num_rows()) {
          for (int t = 0; t < c.type.rows[j + 1]; ++t) {
            const Entry& at_u = c.maps[j][t][u];
            const Entry& at_w = c.maps[j][t][w];
            if (at_u.nonzero() && at_w.nonzero()) kill.push_back({j, t, u});
            if (at_u.is_zero() && at_w.nonzero())
              revived.push_back({{j, t, u},
                                 make_monomial(at_w.deg() + mx + my, at_w.xexp() + mx)});
          }
        }
        if (kill.empty() || revived.empty()) continue;  // strict or inert
        for (const auto& kp : kill) {
          ModuleConfig img = c;
          img.maps[kp.gap][kp.t][kp.s] = Entry::zero();
          for (const auto& [rp, mono] : revived) img.maps[rp.gap][rp.t][rp.s] = Entry(mono);
          out.push_back(std::move(img));
        }
      }
  }
  return out;
}

long long process_config(const ModuleConfig& c) {
  std::optional<std::vector<Character>> chr;
  try {
    chr = characters(c);
  } catch (const std::invalid_argument&) {
    return 0;  // decomposable
  }
  if (!chr) return 0;  // inconsistent cycle exponents

  // Orbit closure under swaps and ties; discard if any member admits a strict
  // entry-killing transvection; otherwise count once at the lex-min member
  // with the stability predicate required of every representative.
  std::set<ModuleConfig> orbit;
  std::vector<ModuleConfig> queue{c};
  orbit.insert(c);
  while (!queue.empty()) {
    ModuleConfig cur = std::move(queue.back());
    queue.pop_back();
    if (!is_reduced(cur)) return 0;
    for (auto& img : localp1::detail::swap_images(cur))
      if (orbit.insert(img).second) queue.push_back(img);
    auto cur_chr = characters(cur);
    assert(cur_chr);
    for (auto& img : tie_images(cur, *cur_chr))
      if (orbit.insert(img).second) queue.push_back(img);
    if (orbit.size() > 64) throw std::logic_error("runaway isomorphism orbit");
  }
  if (c != *orbit.begin()) return 0;

  auto all_stable = [&](StratumFlag fl) {
    return std::all_of(orbit.begin(), orbit.end(),
                       [&](const ModuleConfig& m) { return stable(Stratum{m, fl}); });
  };
  const int rank = cycle_rank(c);
  if (rank == 0) return all_stable(StratumFlag::Generic) ? 1 : 0;
  if (rank != 1) throw std::logic_error("unexpected cycle rank");
  long long out = 0;
  if (all_stable(StratumFlag::Generic)) out -= 1;  // C* minus the relation point
  if (all_stable(StratumFlag::CycleRelationVanishes)) out += 1;
  return out;
}

long long enumerate_tuple(int k, const SheafType& ty, std::vector<std::vector<int>> twists) {
  ModuleConfig skel = make_skeleton(k, ty, std::move(twists));
  const auto slots = slots_of(skel);
  const int nslots = static_cast<int>(slots.size());
  const int budget = is_cycle_type(ty) ? 1 : 0;

  std::vector<int> forced;
  for (int i = 0; i < nslots; ++i)
    if (slots[i].deg < 0) forced.push_back(i);
  if (static_cast<int>(forced.size()) > budget) return 0;

  std::vector<std::vector<int>> zero_sets;
  if (budget == 0)
    zero_sets.push_back({});
  else if (forced.size() == 1)
    zero_sets.push_back(forced);
  else {
    zero_sets.push_back({});
    for (int i = 0; i < nslots; ++i) zero_sets.push_back({i});
  }

  long long total = 0;
  for (const auto& zs : zero_sets) {
    ModuleConfig cfg = skel;
    std::vector<int> free;
    for (int i = 0; i < nslots; ++i)
      if (std::find(zs.begin(), zs.end(), i) == zs.end()) free.push_back(i);
    // For the full 4-cycle the last exponent is pinned by character
    // consistency: x(e0) + x(e3) = x(e1) + x(e2) in slot order
    // (a->b1, a->b2, b1->c, b2->c) resp. (p11, p12, p21, p22).
    const bool derive_last = (budget == 1 && zs.empty());

    auto rec = [&](auto&& self, size_t idx) -> void {
      if (idx + (derive_last ? 1 : 0) == free.size()) {
        if (derive_last) {
          const auto& sl = slots[free.back()];
          int x;
          if (ty.rows == std::vector<int>{1, 2, 1}) {
            // slots: alpha1, alpha2, beta1, beta2 -> x3 = x0 + x2 - x1
            x = cfg.maps[0][0][0].xexp() + cfg.maps[1][0][0].xexp() - cfg.maps[0][1][0].xexp();
          } else {
            // slots: p11, p12, p21, p22 -> x3 = x1 + x2 - x0
            x = cfg.maps[0][0][1].xexp() + cfg.maps[0][1][0].xexp() - cfg.maps[0][0][0].xexp();
          }
          if (x < 0 || x > sl.deg) return;
          cfg.maps[sl.gap][sl.t][sl.s] = Entry(make_monomial(sl.deg, x));
          total = checked_add(total, process_config(cfg));
          return;
        }
        total = checked_add(total, process_config(cfg));
        return;
      }
      const auto& sl = slots[free[idx]];
      for (int x = 0; x <= sl.deg; ++x) {
        cfg.maps[sl.gap][sl.t][sl.s] = Entry(make_monomial(sl.deg, x));
        self(self, idx + 1);
      }
    };
    if (derive_last && free.size() != 4) throw std::logic_error("cycle slot mismatch");
    rec(rec, 0);
  }
  return total;
}

constexpr int kMargin = 1;

}  // namespace

long long count_type(const SheafType& type, int k) {
  const auto& rows = type.rows;
  const int nrows = static_cast<int>(rows.size());
  if (nrows == 1) return rows[0] == 1 ? 1 : 0;

  long long total = 0;
  auto run = [&](std::vector<std::vector<int>> twists) {
    total = checked_add(total, enumerate_tuple(k, type, std::move(twists)));
  };

  if (std::all_of(rows.begin(), rows.end(), [](int r) { return r == 1; })) {
    detail::tuples_1d(nrows, k, kMargin, [&](const std::vector<long long>& lam) {
      std::vector<std::vector<int>> tw;
      for (int j = 0; j < nrows; ++j) tw.push_back({static_cast<int>(lam[j] - static_cast<long long>(j) * k)});
      run(std::move(tw));
    });
  } else if (rows == std::vector<int>{1, 2, 1}) {
    detail::tuples_121(k, kMargin, [&](const detail::Rows121& t) {
      run({{t.a}, {t.b1, t.b2}, {t.c}});
    });
  } else if (rows == std::vector<int>{2, 2}) {
    detail::tuples_22(k, kMargin, [&](const detail::Rows22& t) {
      run({{t.a1, t.a2}, {t.b1, t.b2}});
    });
  } else if (rows[0] >= 2 && std::all_of(rows.begin() + 1, rows.end(), [](int r) { return r == 1; })) {
    detail::tuples_n1d(rows[0], nrows - 1, k, kMargin, [&](const detail::RowsN1d& t) {
      std::vector<std::vector<int>> tw{t.a};
      for (int b : t.b) tw.push_back({b});
      run(std::move(tw));
    });
  } else if (rows[nrows - 1] >= 2 &&
             std::all_of(rows.begin(), rows.end() - 1, [](int r) { return r == 1; })) {
    detail::tuples_1dn(nrows - 1, rows[nrows - 1], k, kMargin, [&](const detail::Rows1dN& t) {
      std::vector<std::vector<int>> tw;
      for (int c : t.c) tw.push_back({c});
      tw.push_back(t.d);
      run(std::move(tw));
    });
  } else {
    throw std::invalid_argument("unsupported sheaf type " + type.str());
  }
  return total;
}

long long count_total(int d, int k) {
  if (d < 1 || d > 4) throw std::invalid_argument("unsupported degree");
  long long total = 0;
  for (const auto& ty : compositions_of(d)) total = checked_add(total, count_type(ty, k));
  return total;
}

}  // namespace localp1::reference
