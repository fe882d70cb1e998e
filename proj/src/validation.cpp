#include "localp1/validation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "localp1/stability.hpp"

namespace localp1 {

bool git_stable(const FourPointConfig& cfg) {
  const int total = std::accumulate(cfg.weight.begin(), cfg.weight.end(), 0);
  std::map<int, int> mass;
  for (int i = 0; i < 4; ++i) mass[cfg.label[i]] += cfg.weight[i];
  for (const auto& [lbl, m] : mass)
    if (2 * m >= total) return false;
  return true;
}

bool gieseker_config_stable(const FourPointConfig& cfg) {
  const auto& l = cfg.label;
  if (l[0] == l[1] || l[0] == l[2] || l[0] == l[3]) return false;  // A=B, A=C, A=K
  if (l[1] == l[2] && l[2] == l[3]) return false;                  // B=C=K
  return true;
}

std::vector<std::array<int, 4>> four_point_partitions() {
  // Restricted growth strings of length 4.
  std::vector<std::array<int, 4>> out;
  std::array<int, 4> l{0, 0, 0, 0};
  auto rec = [&](auto&& self, int i, int maxl) -> void {
    if (i == 4) {
      out.push_back(l);
      return;
    }
    for (int v = 0; v <= maxl + 1; ++v) {
      l[i] = v;
      self(self, i + 1, std::max(maxl, v));
    }
  };
  rec(rec, 1, 0);
  return out;
}

std::string ChiReport::to_json() const {
  std::string out = "{\"rows\":[";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i) out += ",";
    std::string cfg = r.config;
    for (size_t p = 0; (p = cfg.find('\n', p)) != std::string::npos; p += 2)
      cfg.replace(p, 1, "\\n");
    out += "{\"label\":\"" + r.label + "\",\"config\":\"" + cfg +
           "\",\"stable\":" + (r.stable ? "true" : "false") +
           ",\"chi\":" + std::to_string(r.chi) + "}";
  }
  out += "],\"total\":" + std::to_string(total) + "}";
  return out;
}

std::string ChiReport::to_csv() const {
  std::string out = "label,stable,chi\n";
  for (const auto& r : rows)
    out += r.label + "," + (r.stable ? "true" : "false") + "," + std::to_string(r.chi) + "\n";
  out += "total,," + std::to_string(total) + "\n";
  return out;
}

namespace {

ModuleConfig config_121(int k, int a, int b1, int b2, int c, Entry a1, Entry a2, Entry be1,
                        Entry be2) {
  ModuleConfig cfg;
  cfg.k = k;
  cfg.type = SheafType{{1, 2, 1}};
  cfg.twists = {{a}, {b1, b2}, {c}};
  cfg.maps = {{{a1}, {a2}}, {{be1, be2}}};
  return cfg;
}

ChiReportRow make_row(const std::string& label, const Stratum& s) {
  ChiReportRow row;
  row.label = label;
  row.config = s.config.str();
  row.stable = stable_121(s);
  row.chi = stratum_chi(s, row.stable);
  return row;
}

}  // namespace

ChiReport component_chi_report(int k) {
  ChiReport rep;
  auto add = [&](const std::string& label, const Stratum& s) {
    rep.rows.push_back(make_row(label, s));
    rep.total += rep.rows.back().chi;
  };

  const Entry x1{Monomial{1, 1}}, y1{Monomial{1, 0}};
  if (k == 2) {
    // Twists (0; -1,-1; -1), alpha = (x, y), beta = (y^2, xy).
    const Entry yy{Monomial{2, 0}}, xy{Monomial{2, 1}};
    auto cyc = config_121(2, 0, -1, -1, -1, x1, y1, yy, xy);
    add("generic cycle", {cyc, StratumFlag::Generic});
    add("cycle relation locus", {cyc, StratumFlag::CycleRelationVanishes});
    add("endpoint beta1 = 0", {config_121(2, 0, -1, -1, -1, x1, y1, Entry::zero(), xy),
                               StratumFlag::Generic});
    add("endpoint beta2 = 0", {config_121(2, 0, -1, -1, -1, x1, y1, yy, Entry::zero()),
                               StratumFlag::Generic});
    return rep;
  }
  if (k == 3) {
    // Twists (1; -1,-1; -2), alpha = (x, y), beta = (xy, x^2); the relation
    // locus is unstable and the family closes up at the twist-jumped config
    // (1; 0,-2; -2) with alpha = (0, 1), beta = (x, x^2 y).
    const Entry xy{Monomial{2, 1}}, xx{Monomial{2, 2}};
    auto cyc = config_121(3, 1, -1, -1, -2, x1, y1, xy, xx);
    add("generic cycle", {cyc, StratumFlag::Generic});
    add("cycle relation locus", {cyc, StratumFlag::CycleRelationVanishes});
    add("endpoint beta1 = 0", {config_121(3, 1, -1, -1, -2, x1, y1, Entry::zero(), xx),
                               StratumFlag::Generic});
    add("endpoint beta2 = 0", {config_121(3, 1, -1, -1, -2, x1, y1, xy, Entry::zero()),
                               StratumFlag::Generic});
    add("limit configuration", {config_121(3, 1, 0, -2, -2, Entry::zero(), Entry{Monomial{0, 0}},
                                           Entry{Monomial{1, 1}}, Entry{Monomial{3, 2}}),
                                StratumFlag::Generic});
    return rep;
  }
  throw std::invalid_argument("component_chi_report covers the k = 2 and k = 3 families");
}

namespace {

// Smallest representative over the equal-twist swap group.
ModuleConfig canonical_form(const ModuleConfig& c) {
  ModuleConfig best = c;
  for (const auto& img : detail::swap_images(c)) best = std::min(best, img);
  return best;
}

long long naive_type_count(const SheafType& ty, int k) {
  const int nrows = static_cast<int>(ty.rows.size());
  if (nrows == 1) return ty.rows[0] == 1 ? 1 : 0;
  const int lo = -(2 * k + 6), hi = k + 2;
  const int d = ty.degree();

  std::set<ModuleConfig> found;
  std::vector<std::vector<int>> twists(nrows);

  // Enumerate non-increasing twist rows over the box, last summand fixed by
  // chi = 1, then every all-monomial entry assignment.
  std::vector<int> flat;
  auto fill_entries = [&](auto&& self, ModuleConfig& cfg, int gap, int t, int s) -> void {
    if (gap == nrows - 1) {
      Stratum st{cfg, StratumFlag::Generic};
      if (stable(st)) found.insert(canonical_form(cfg));
      return;
    }
    int nt = (t == ty.rows[gap + 1] - 1 && s == ty.rows[gap] - 1) ? gap + 1 : gap;
    int tt = (nt == gap) ? (s == ty.rows[gap] - 1 ? t + 1 : t) : 0;
    int ss = (nt == gap && tt == t) ? s + 1 : 0;
    const int deg = cfg.entry_degree(gap, t, s);
    if (deg < 0) return;  // forced zero: never stable for these types
    for (int x = 0; x <= deg; ++x) {
      cfg.maps[gap][t][s] = Entry(Monomial{deg, x});
      self(self, cfg, nt, tt, ss);
    }
  };

  auto rec_twists = [&](auto&& self, int idx) -> void {
    if (idx == d - 1) {
      long long partial = 0;
      for (int v : flat) partial += v + 1;
      const int last = static_cast<int>(-partial);  // (last + 1) closes chi to 1
      // place flat + last into rows
      int pos = 0;
      std::vector<int> all(flat);
      all.push_back(last);
      for (int j = 0; j < nrows; ++j) {
        twists[j].assign(all.begin() + pos, all.begin() + pos + ty.rows[j]);
        pos += ty.rows[j];
        for (size_t i = 1; i < twists[j].size(); ++i)
          if (twists[j][i] > twists[j][i - 1]) return;  // keep rows sorted
      }
      if (last < lo || last > hi) return;
      ModuleConfig cfg;
      cfg.k = k;
      cfg.type = ty;
      cfg.twists = twists;
      for (int j = 0; j + 1 < nrows; ++j)
        cfg.maps.emplace_back(ty.rows[j + 1], std::vector<Entry>(ty.rows[j]));
      fill_entries(fill_entries, cfg, 0, 0, 0);
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      flat.push_back(v);
      self(self, idx + 1);
      flat.pop_back();
    }
  };
  rec_twists(rec_twists, 0);
  return static_cast<long long>(found.size());
}

}  // namespace

CountTable brute_force_reference(int d, int k) {
  if (d < 1 || d > 3 || k < -1 || k > 6)
    throw std::invalid_argument("brute_force_reference covers d <= 3, k <= 6");
  CountTable table;
  for (const auto& ty : compositions_of(d))
    table.set(d, k, ty.str(), naive_type_count(ty, k), Provenance::Enumerated);
  return table;
}

}  // namespace localp1
