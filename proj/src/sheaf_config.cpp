#include "localp1/sheaf_config.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace localp1 {

int SheafType::degree() const { return std::accumulate(rows.begin(), rows.end(), 0); }

std::string SheafType::str() const {
  std::string s = "(";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rows[i]);
  }
  return s + ")";
}

int ModuleConfig::num_summands() const { return type.degree(); }

int ModuleConfig::entry_degree(int gap, int target, int source) const {
  return twists[gap + 1][target] - twists[gap][source] + k;
}

std::string ModuleConfig::str() const {
  std::ostringstream os;
  os << "k " << k << "\n";
  os << "type " << type.str() << "\n";
  os << "twists";
  for (int j = 0; j < num_rows(); ++j) {
    os << (j ? " |" : "");
    for (int t : twists[j]) os << " " << t;
  }
  os << "\n";
  for (size_t j = 0; j < maps.size(); ++j) {
    os << "map " << j << " :";
    for (size_t t = 0; t < maps[j].size(); ++t) {
      if (t) os << " ;";
      for (const Entry& e : maps[j][t]) os << " " << e.str();
    }
    os << "\n";
  }
  return os.str();
}

namespace {

Entry parse_entry(const std::string& tok) {
  if (tok == "0") return Entry::zero();
  int a = 0, b = 0;
  if (sscanf(tok.c_str(), "x^%dy^%d", &a, &b) != 2 || a < 0 || b < 0)
    throw std::invalid_argument("bad entry token: " + tok);
  return Entry(make_monomial(a + b, a));
}

}  // namespace

ModuleConfig ModuleConfig::parse(const std::string& text) {
  ModuleConfig c;
  std::istringstream is(text);
  std::string line;

  auto need_line = [&](const char* what) {
    if (!std::getline(is, line)) throw std::invalid_argument(std::string("missing ") + what);
  };

  need_line("k");
  if (sscanf(line.c_str(), "k %d", &c.k) != 1) throw std::invalid_argument("bad k line");

  need_line("type");
  {
    auto open = line.find('(');
    if (line.rfind("type ", 0) != 0 || open == std::string::npos)
      throw std::invalid_argument("bad type line");
    std::string body = line.substr(open + 1, line.find(')') - open - 1);
    std::istringstream ts(body);
    std::string part;
    while (std::getline(ts, part, ',')) c.type.rows.push_back(std::stoi(part));
    if (c.type.rows.empty()) throw std::invalid_argument("empty type");
  }

  need_line("twists");
  {
    std::istringstream ws(line);
    std::string tok;
    ws >> tok;  // "twists"
    c.twists.assign(c.type.rows.size(), {});
    size_t row = 0;
    while (ws >> tok) {
      if (tok == "|") {
        ++row;
        continue;
      }
      if (row >= c.twists.size()) throw std::invalid_argument("too many twist rows");
      c.twists[row].push_back(std::stoi(tok));
    }
    for (size_t j = 0; j < c.twists.size(); ++j)
      if (static_cast<int>(c.twists[j].size()) != c.type.rows[j])
        throw std::invalid_argument("twist row size mismatch");
  }

  for (size_t j = 0; j + 1 < c.type.rows.size(); ++j) {
    need_line("map");
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad map line");
    std::istringstream ms(line.substr(colon + 1));
    std::vector<std::vector<Entry>> mat(1);
    std::string tok;
    while (ms >> tok) {
      if (tok == ";")
        mat.emplace_back();
      else
        mat.back().push_back(parse_entry(tok));
    }
    if (static_cast<int>(mat.size()) != c.type.rows[j + 1])
      throw std::invalid_argument("map row count mismatch");
    for (const auto& r : mat)
      if (static_cast<int>(r.size()) != c.type.rows[j])
        throw std::invalid_argument("map column count mismatch");
    c.maps.push_back(std::move(mat));
  }
  return c;
}

long long euler_char(const ModuleConfig& config) {
  long long chi = 0;
  for (const auto& row : config.twists)
    for (int a : row) chi += a + 1;
  return chi;
}

int kernel_degree(int a1, int a2, int b, int k, const Entry& alpha1, const Entry& alpha2) {
  return a1 + a2 - b - k + gcd_degree(alpha1, alpha2);
}

int cokernel_degree(int c, int d1, int d2, int k, const Entry& beta1, const Entry& beta2) {
  return d1 + d2 - c + k - gcd_degree(beta1, beta2);
}

namespace {

struct Graph {
  // Flattened summand ids and the list of nonzero entries as edges.
  std::vector<int> offset;  // offset[j] = id of first summand of row j
  struct Edge {
    int src, tgt;  // summand ids, src in row j, tgt in row j+1
    int xexp, yexp;
  };
  std::vector<Edge> edges;
  int n = 0;

  explicit Graph(const ModuleConfig& c) {
    offset.resize(c.num_rows() + 1);
    for (int j = 0; j < c.num_rows(); ++j) offset[j + 1] = offset[j] + c.type.rows[j];
    n = offset.back();
    for (size_t j = 0; j < c.maps.size(); ++j)
      for (size_t t = 0; t < c.maps[j].size(); ++t)
        for (size_t s = 0; s < c.maps[j][t].size(); ++s) {
          const Entry& e = c.maps[j][t][s];
          if (e.nonzero())
            edges.push_back({offset[j] + static_cast<int>(s),
                             offset[j + 1] + static_cast<int>(t), e.xexp(), e.yexp()});
        }
  }

  int components() const {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int comps = n;
    for (const Edge& e : edges) {
      int a = find(e.src), b = find(e.tgt);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    return comps;
  }
};

}  // namespace

std::optional<std::vector<Character>> characters(const ModuleConfig& config) {
  Graph g(config);
  if (g.components() != 1) throw std::invalid_argument("decomposable configuration");

  std::vector<Character> chr(g.n, Character{0, 0});
  std::vector<bool> known(g.n, false);
  known[0] = true;
  // Propagate char(src) - char(tgt) = exponent over a spanning structure.
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& e : g.edges) {
      if (known[e.src] && !known[e.tgt]) {
        chr[e.tgt] = {chr[e.src][0] - e.xexp, chr[e.src][1] - e.yexp};
        known[e.tgt] = true;
        progress = true;
      } else if (known[e.tgt] && !known[e.src]) {
        chr[e.src] = {chr[e.tgt][0] + e.xexp, chr[e.tgt][1] + e.yexp};
        known[e.src] = true;
        progress = true;
      }
    }
  }
  assert(std::all_of(known.begin(), known.end(), [](bool b) { return b; }));
  for (const auto& e : g.edges)
    if (chr[e.src][0] - chr[e.tgt][0] != e.xexp || chr[e.src][1] - chr[e.tgt][1] != e.yexp)
      return std::nullopt;
  return chr;
}

int cycle_rank(const ModuleConfig& config) {
  Graph g(config);
  return static_cast<int>(g.edges.size()) - g.n + g.components();
}

bool is_reduced(const ModuleConfig& config) {
  auto chr_opt = characters(config);
  if (!chr_opt) throw std::invalid_argument("is_reduced needs consistent characters");
  const auto& chr = *chr_opt;

  std::vector<int> offset(config.num_rows() + 1);
  for (int j = 0; j < config.num_rows(); ++j) offset[j + 1] = offset[j] + config.type.rows[j];

  for (int j = 0; j < config.num_rows(); ++j) {
    int dj = config.type.rows[j];
    for (int u = 0; u < dj; ++u)
      for (int w = 0; w < dj; ++w) {
        if (u == w) continue;
        int mx = chr[offset[j] + u][0] - chr[offset[j] + w][0];
        int my = chr[offset[j] + u][1] - chr[offset[j] + w][1];
        if (mx < 0 || my < 0) continue;  // no equivariant map O(u) -> O(w)
        assert(mx + my == config.twists[j][w] - config.twists[j][u]);
        // The transvection adds m * (u component) into w.  It can kill
        // incoming entries at w and outgoing entries at u; it revives zero
        // slots in the same positions.
        bool kills = false, revives = false;
        if (j > 0) {
          for (int s = 0; s < config.type.rows[j - 1]; ++s) {
            bool at_w = config.maps[j - 1][w][s].nonzero();
            bool at_u = config.maps[j - 1][u][s].nonzero();
            if (at_u && at_w) kills = true;
            if (at_u && !at_w) revives = true;
          }
        }
        if (j + 1 < config.num_rows()) {
          for (int t = 0; t < config.type.rows[j + 1]; ++t) {
            bool at_u = config.maps[j][t][u].nonzero();
            bool at_w = config.maps[j][t][w].nonzero();
            if (at_u && at_w) kills = true;
            if (at_w && !at_u) revives = true;
          }
        }
        if (kills && !revives) return false;
      }
  }
  return true;
}

namespace {

// All permutations of {0..n-1} that only permute positions with equal twists.
std::vector<std::vector<int>> twist_preserving_perms(const std::vector<int>& twists) {
  int n = static_cast<int>(twists.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = (twists[perm[i]] == twists[i]);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // next_permutation leaves perm sorted; ensure identity present exactly once.
  return out;
}

ModuleConfig apply_perms(const ModuleConfig& c, const std::vector<std::vector<int>>& sigma) {
  ModuleConfig out = c;
  for (int j = 0; j < c.num_rows(); ++j)
    for (size_t p = 0; p < sigma[j].size(); ++p) out.twists[j][p] = c.twists[j][sigma[j][p]];
  for (size_t j = 0; j < c.maps.size(); ++j)
    for (size_t t = 0; t < c.maps[j].size(); ++t)
      for (size_t s = 0; s < c.maps[j][t].size(); ++s)
        out.maps[j][t][s] = c.maps[j][sigma[j + 1][t]][sigma[j][s]];
  return out;
}

template <class F>
void for_each_swap(const ModuleConfig& c, F&& f) {
  std::vector<std::vector<std::vector<int>>> perms(c.num_rows());
  for (int j = 0; j < c.num_rows(); ++j) perms[j] = twist_preserving_perms(c.twists[j]);
  std::vector<std::vector<int>> pick(c.num_rows());
  std::vector<size_t> idx(c.num_rows(), 0);
  while (true) {
    bool identity = true;
    for (int j = 0; j < c.num_rows(); ++j) {
      pick[j] = perms[j][idx[j]];
      for (size_t p = 0; p < pick[j].size(); ++p)
        if (pick[j][p] != static_cast<int>(p)) identity = false;
    }
    if (!identity) f(pick);
    int j = 0;
    for (; j < c.num_rows(); ++j) {
      if (++idx[j] < perms[j].size()) break;
      idx[j] = 0;
    }
    if (j == c.num_rows()) break;
  }
}

}  // namespace

namespace detail {

std::vector<ModuleConfig> swap_images(const ModuleConfig& config) {
  std::vector<ModuleConfig> out;
  for_each_swap(config,
                [&](const std::vector<std::vector<int>>& sigma) { out.push_back(apply_perms(config, sigma)); });
  return out;
}

}  // namespace detail

bool swap_fixed(const ModuleConfig& config) {
  bool fixed = false;
  for_each_swap(config, [&](const std::vector<std::vector<int>>& sigma) {
    if (!fixed && apply_perms(config, sigma) == config) fixed = true;
  });
  return fixed;
}

int stratum_chi(const Stratum& s) {
  int rank = cycle_rank(s.config);
  if (rank >= 2) throw std::domain_error("out of supported degree range");
  if (s.flag == StratumFlag::CycleRelationVanishes && rank != 1)
    throw std::invalid_argument("relation flag needs a full cycle");
  if (rank == 0) return 1;
  if (s.flag == StratumFlag::CycleRelationVanishes) return 1;
  return swap_fixed(s.config) ? 0 : -1;
}

int stratum_chi(const Stratum& s, bool stable) { return stable ? stratum_chi(s) : 0; }

}  // namespace localp1
