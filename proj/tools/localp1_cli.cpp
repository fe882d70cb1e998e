// Command-line interface: compute fixed-sheaf counts and BPS invariants of
// local P^1, print prediction tables, and verify the enumeration against the
// closed forms over ranges of (d, k).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "localp1/checked.hpp"
#include "localp1/enumeration.hpp"
#include "localp1/predictions.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace localp1;

constexpr int kCacheFormatVersion = 1;
// Soft cap for degree-4 verification; --extended lifts it.
constexpr int kDefaultKCap = 40;

class Cache {
 public:
  explicit Cache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;  // cold cache
    try {
      json doc = json::parse(in);
      if (doc.value("format_version", -1) != kCacheFormatVersion) {
        std::cerr << "warning: ignoring cache with unexpected format_version: " << path_ << "\n";
        return;
      }
      counts_ = doc.value("counts", json::object());
    } catch (const std::exception& e) {
      std::cerr << "warning: ignoring unreadable cache " << path_ << ": " << e.what() << "\n";
      counts_ = json::object();
    }
  }

  std::optional<long long> get(int d, int k, const std::string& type) const {
    auto it = counts_.find(key(d, k, type));
    if (it == counts_.end() || !it->is_number_integer()) return std::nullopt;
    return it->get<long long>();
  }

  void put(int d, int k, const std::string& type, long long count) {
    counts_[key(d, k, type)] = count;
    dirty_ = true;
  }

  void save() {
    if (!dirty_) return;
    json doc;
    doc["format_version"] = kCacheFormatVersion;
    doc["counts"] = counts_;
    std::ofstream out(path_);
    if (!out) {
      std::cerr << "warning: cannot write cache " << path_ << "\n";
      return;
    }
    out << doc.dump(2) << "\n";
  }

 private:
  static std::string key(int d, int k, const std::string& type) {
    return std::to_string(d) + "/" + std::to_string(k) + "/" + type;
  }
  std::string path_;
  json counts_ = json::object();
  bool dirty_ = false;
};

struct ResultRecord {
  int d = 0;
  int k = 0;
  std::vector<std::pair<std::string, long long>> counts_by_type;
  long long N = 0;
  int sign = 1;
  long long n = 0;
  long long prediction = 0;
  bool match = false;
  long long elapsed_ms = 0;
};

ResultRecord compute_record(int d, int k, Cache* cache) {
  ResultRecord rec;
  rec.d = d;
  rec.k = k;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& ty : compositions_of(d)) {
    const std::string name = ty.str();
    long long cnt;
    if (cache) {
      if (auto hit = cache->get(d, k, name)) {
        cnt = *hit;
      } else {
        cnt = count_for_type(ty, k);
        cache->put(d, k, name, cnt);
      }
    } else {
      cnt = count_for_type(ty, k);
    }
    rec.counts_by_type.emplace_back(name, cnt);
    rec.N = checked_add(rec.N, cnt);
  }
  rec.sign = sign_and_dimension(d, k).first;
  rec.n = bps_from_count(d, k, rec.N);
  rec.prediction = bps_closed_form(d, k);
  rec.match = (rec.n == rec.prediction);
  rec.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count();
  return rec;
}

void print_record(const ResultRecord& rec, const std::string& format, bool by_type) {
  if (format == "json") {
    json j;
    j["d"] = rec.d;
    j["k"] = rec.k;
    {
      json types = json::object();
      for (const auto& [name, cnt] : rec.counts_by_type) types[name] = cnt;
      j["counts_by_type"] = types;
    }
    j["N"] = rec.N;
    j["sign"] = rec.sign;
    j["n"] = rec.n;
    j["prediction"] = rec.prediction;
    j["match"] = rec.match;
    j["elapsed_ms"] = rec.elapsed_ms;
    std::cout << j.dump() << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << "d,k,N,sign,n,prediction,match,elapsed_ms\n";
    std::cout << rec.d << "," << rec.k << "," << rec.N << "," << rec.sign << "," << rec.n << ","
              << rec.prediction << "," << (rec.match ? "true" : "false") << "," << rec.elapsed_ms
              << "\n";
    return;
  }
  std::cout << "d=" << rec.d << " k=" << rec.k << "\n";
  if (by_type)
    for (const auto& [name, cnt] : rec.counts_by_type)
      std::cout << "  N_" << name << " = " << cnt << "\n";
  std::cout << "  N = " << rec.N << "  sign = " << (rec.sign > 0 ? "+1" : "-1")
            << "  n = " << rec.n << "  prediction = " << rec.prediction
            << "  match = " << (rec.match ? "yes" : "NO") << "  (" << rec.elapsed_ms << " ms)\n";
}

std::optional<std::pair<int, int>> parse_range(const std::string& text) {
  auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      int v = std::stoi(text);
      return std::make_pair(v, v);
    }
    int a = std::stoi(text.substr(0, pos));
    int b = std::stoi(text.substr(pos + 2));
    if (a > b) return std::nullopt;
    return std::make_pair(a, b);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int run_count(int d, int k, bool by_type, const std::string& format,
              const std::optional<std::string>& cache_path) {
  std::optional<Cache> cache;
  if (cache_path) cache.emplace(*cache_path);
  ResultRecord rec = compute_record(d, k, cache ? &*cache : nullptr);
  if (cache) cache->save();
  print_record(rec, format, by_type);
  return 0;
}

int run_predict(int d, std::pair<int, int> range, bool with_gw) {
  std::cout << "k,n_" << d << (with_gw ? ",gw" : "") << "\n";
  for (int k = range.first; k <= range.second; ++k) {
    std::cout << k << "," << bps_closed_form(d, k);
    if (with_gw) {
      std::map<int, long long> bps;
      for (int m = 1; m <= d; ++m)
        if (d % m == 0) bps[m] = bps_closed_form(m, k);
      std::cout << "," << gv_sum(d, bps).str();
    }
    std::cout << "\n";
  }
  return 0;
}

int run_verify(int d_max, int k_max, bool extended) {
  bool all_match = true;
  std::optional<ResultRecord> first_bad;
  for (int d = 1; d <= d_max; ++d) {
    long long checked = 0, bad = 0;
    for (int k = -1; k <= k_max; ++k) {
      ResultRecord rec = compute_record(d, k, nullptr);
      ++checked;
      if (!rec.match) {
        ++bad;
        all_match = false;
        if (!first_bad) first_bad = rec;
      }
      if (extended && d == 4 && k >= 20)
        std::cerr << "verified d=4 k=" << k << " (" << rec.elapsed_ms << " ms)\n";
    }
    std::cout << "d=" << d << ": " << checked - bad << "/" << checked << " values of k match\n";
  }
  if (!all_match) {
    std::cout << "FIRST MISMATCH:\n";
    print_record(*first_bad, "table", true);
    return 1;
  }
  std::cout << "all counts match the closed forms\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant genus-zero BPS invariants of local P^1 (degrees up to 4)"};
  app.require_subcommand(1);

  int d = 1, k = 0, d_max = 3, k_max = 10, jobs = 0;
  bool by_type = false, with_gw = false, extended = false;
  std::string format = "table", k_range = "0..10";
  std::string cache_flag;

  auto* cmd_count = app.add_subcommand("count", "enumerate fixed sheaves and compare with the prediction");
  cmd_count->add_option("--d", d, "degree (1..4)")->required()->check(CLI::Range(1, 4));
  cmd_count->add_option("--k", k, "twist parameter, k >= -1")->required()->check(CLI::Range(-1, 1 << 20));
  cmd_count->add_flag("--by-type", by_type, "print the per-type breakdown");
  cmd_count->add_option("--format", format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd_count->add_option("--cache", cache_flag, "JSON cache file for per-type counts");
  cmd_count->add_option("--jobs", jobs, "worker threads (0 = default)");

  auto* cmd_predict = app.add_subcommand("predict", "print closed-form BPS values");
  cmd_predict->add_option("--d", d, "degree (1..4)")->required()->check(CLI::Range(1, 4));
  cmd_predict->add_option("--k-range", k_range, "inclusive range A..B")->required();
  cmd_predict->add_flag("--gw", with_gw, "also print the genus-zero Gromov-Witten value");

  auto* cmd_verify = app.add_subcommand("verify", "check counts against closed forms over a range");
  cmd_verify->add_option("--d-max", d_max, "largest degree to check (<= 4)")->required()->check(CLI::Range(1, 4));
  cmd_verify->add_option("--k-max", k_max, "largest k to check")->required()->check(CLI::Range(-1, 1 << 20));
  cmd_verify->add_flag("--extended", extended, "lift the degree-4 k cap for long runs");
  cmd_verify->add_option("--jobs", jobs, "worker threads (0 = default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (jobs > 0) omp_set_num_threads(jobs);

  try {
    if (app.got_subcommand(cmd_count)) {
      std::optional<std::string> cache_path;
      if (!cache_flag.empty()) {
        cache_path = cache_flag;
      } else if (const char* env = std::getenv("LOCALP1_CACHE"); env && *env) {
        cache_path = std::string(env);
      }
      return run_count(d, k, by_type, format, cache_path);
    }
    if (app.got_subcommand(cmd_predict)) {
      auto range = parse_range(k_range);
      if (!range || range->first < -1) {
        std::cerr << "error: bad --k-range '" << k_range << "'\n";
        return 2;
      }
      return run_predict(d, *range, with_gw);
    }
    if (app.got_subcommand(cmd_verify)) {
      if (k_max > kDefaultKCap && d_max >= 4 && !extended) {
        std::cerr << "error: degree-4 verification beyond k=" << kDefaultKCap
                  << " needs --extended\n";
        return 2;
      }
      return run_verify(d_max, k_max, extended);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
