#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "classify.hpp"
#include "pipeline.hpp"
#include "serialize.hpp"

namespace amdeg {

struct RunConfig {
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  int degree_cap = 8;
  int jobs = 1;
  /// Attempts for items built from seeded random choices.
  int generic_attempts = 8;
};

/// Expected tables, keyed by case or example label.
class Goldens {
 public:
  static Goldens parse(const std::string& text) {
    Goldens g;
    const Json j = Json::parse(text);
    for (const auto& [key, value] : j.at("tables").items()) g.tables_[key] = expected_diagram(value);
    for (const auto& [key, value] : j.at("partitions").items()) {
      std::vector<ScrollTypeRow> rows;
      for (const auto& r : value)
        rows.push_back({ScrollType(r.at("parts").get<std::vector<int>>()), r.at("r_plus_1").get<int>(), r.at("dim_x").get<int>()});
      g.partitions_[std::stoi(key)] = std::move(rows);
    }
    return g;
  }

  const BettiDiagram& table(const std::string& key) const {
    auto it = tables_.find(key);
    if (it == tables_.end()) throw Error("no golden table '" + key + "'");
    return it->second;
  }
  const std::vector<ScrollTypeRow>& partitions(int c) const {
    auto it = partitions_.find(c);
    if (it == partitions_.end()) throw Error("no golden partition table for c = " + std::to_string(c));
    return it->second;
  }

 private:
  // "rows" lists Betti rows from row 1; "resolution" lists, per homological
  // degree i >= 1, (twist, rank) pairs of F_i.
  static BettiDiagram expected_diagram(const Json& v) {
    if (v.contains("rows")) return BettiDiagram::from_rows(v.at("rows").get<std::vector<std::vector<long>>>(), 1);
    BettiDiagram b;
    const auto& steps = v.at("resolution");
    for (std::size_t i = 0; i < steps.size(); ++i)
      for (const auto& pair : steps[i]) {
        const int col = static_cast<int>(i) + 1;
        b.set(col, pair.at(0).get<int>() - col, pair.at(1).get<long>());
      }
    return b;
  }

  std::map<std::string, BettiDiagram> tables_;
  std::map<int, std::vector<ScrollTypeRow>> partitions_;
};

struct ManifestItem {
  std::string id;
  std::vector<std::string> targets;
  std::string expression;  // empty for partition tables
  std::string note;
  Json expect;
  int partitions = 0;  // c for partition-table items
};

inline const std::vector<std::string>& known_targets() {
  static const std::vector<std::string> t = {"thm2.1", "thm2.2", "thm2.4", "ex4.0", "ex4.1", "ex4.2",
                                             "ex4.3",  "ex4.4",  "ex4.5",  "ex4.6", "ex4.7", "tables-c2",
                                             "tables-c3", "tables-c4", "all"};
  return t;
}

class UnknownTarget : public ParseError {
 public:
  explicit UnknownTarget(const std::string& t) : ParseError("unknown reproduce target '" + t + "'") {}
};

class Manifest {
 public:
  static Manifest parse(const std::string& text) {
    Manifest m;
    const Json j = Json::parse(text);
    for (const auto& it : j.at("items")) {
      ManifestItem item;
      item.id = it.at("id").get<std::string>();
      item.targets = it.at("targets").get<std::vector<std::string>>();
      item.expression = it.at("expression").get<std::string>();
      item.note = it.value("note", "");
      item.expect = it.at("expect");
      m.items_.push_back(std::move(item));
    }
    for (const auto& it : j.at("partition_tables")) {
      ManifestItem item;
      item.id = it.at("id").get<std::string>();
      item.targets = it.at("targets").get<std::vector<std::string>>();
      item.partitions = it.at("partitions").get<int>();
      m.items_.push_back(std::move(item));
    }
    return m;
  }

  const std::vector<ManifestItem>& items() const { return items_; }

  std::vector<ManifestItem> select(const std::string& target) const {
    const auto& known = known_targets();
    if (std::find(known.begin(), known.end(), target) == known.end()) throw UnknownTarget(target);
    std::vector<ManifestItem> out;
    for (const auto& item : items_)
      if (target == "all" || std::find(item.targets.begin(), item.targets.end(), target) != item.targets.end())
        out.push_back(item);
    return out;
  }

 private:
  std::vector<ManifestItem> items_;
};

struct ItemResult {
  std::string id;
  std::string expression;
  std::string note;
  bool passed = false;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0;
  std::uint64_t seed_used = 0;
  std::optional<VarietyReport> report;
  std::optional<BettiDiagram> expected_table;
  std::vector<ScrollTypeRow> partition_rows;
};

namespace detail {

inline void expect_int(std::vector<std::string>& failures, const Json& expect, const char* key, long actual) {
  if (!expect.contains(key)) return;
  const long want = expect.at(key).get<long>();
  if (want != actual)
    failures.push_back(std::string(key) + ": expected " + std::to_string(want) + ", got " + std::to_string(actual));
}

inline std::vector<std::string> compare_report(const VarietyReport& r, const Json& expect, const Goldens& goldens) {
  std::vector<std::string> f;
  if (expect.contains("table") && !(goldens.table(expect.at("table").get<std::string>()) == r.betti))
    f.push_back("Betti diagram differs from table " + expect.at("table").get<std::string>());
  if (expect.contains("case")) {
    const std::string want = expect.at("case").get<std::string>();
    const std::string got = r.theorem_case.value_or("none");
    if (want != got) f.push_back("case: expected " + want + ", got " + got);
  }
  expect_int(f, expect, "dim", r.invariants.dim);
  expect_int(f, expect, "codim", r.invariants.codim);
  expect_int(f, expect, "degree", static_cast<long>(r.invariants.degree));
  expect_int(f, expect, "depth", r.invariants.depth);
  expect_int(f, expect, "q", r.invariants.codepth);
  expect_int(f, expect, "quadrics", r.quadrics);
  expect_int(f, expect, "cubics", r.cubics);
  if (expect.contains("gorenstein") && expect.at("gorenstein").get<bool>() != r.gorenstein)
    f.push_back(std::string("gorenstein: expected ") + (r.gorenstein ? "false" : "true"));
  if (r.degree_class != DegreeClass::almost_minimal)
    f.push_back("degree class: expected almost_minimal, got " + to_string(r.degree_class));
  for (const auto& c : r.checks)
    if (!c.passed) f.push_back("check " + c.name + " failed: " + c.detail);
  return f;
}

inline bool uses_random_choices(const std::string& expr) {
  return expr.find("random") != std::string::npos || expr.find("section(") != std::string::npos;
}

}  // namespace detail

inline ItemResult run_item(const ManifestItem& item, const Goldens& goldens, const RunConfig& cfg) {
  ItemResult res;
  res.id = item.id;
  res.expression = item.expression;
  res.note = item.note;
  const auto start = std::chrono::steady_clock::now();
  if (item.partitions) {
    res.partition_rows = enumerate_scroll_types(item.partitions);
    const auto& want = goldens.partitions(item.partitions);
    if (res.partition_rows.size() != want.size())
      res.failures.push_back("expected " + std::to_string(want.size()) + " rows, got " +
                             std::to_string(res.partition_rows.size()));
    for (std::size_t i = 0; i < std::min(want.size(), res.partition_rows.size()); ++i) {
      const auto& a = res.partition_rows[i];
      const auto& b = want[i];
      if (!(a.type == b.type) || a.r_plus_1 != b.r_plus_1 || a.dim_x != b.dim_x)
        res.failures.push_back("row " + std::to_string(i + 1) + ": got " + a.type.to_string() + ", expected " +
                               b.type.to_string());
    }
  } else {
    if (item.expect.contains("table")) res.expected_table = goldens.table(item.expect.at("table").get<std::string>());
    const int attempts = detail::uses_random_choices(item.expression) ? std::max(1, cfg.generic_attempts) : 1;
    for (int a = 0; a < attempts; ++a) {
      BuildContext ctx{cfg.prime, cfg.seed + static_cast<std::uint64_t>(a)};
      res.seed_used = ctx.seed;
      res.failures.clear();
      res.notes.clear();
      try {
        BuiltIdeal built = build_ideal(item.expression, ctx);
        res.notes = built.notes;
        AnalyzeOptions opts;
        opts.degree_cap = cfg.degree_cap;
        opts.seed = ctx.seed;
        res.report = analyze(built.ideal, opts);
        res.failures = detail::compare_report(*res.report, item.expect, goldens);
      } catch (const PointOnVariety& e) {
        res.failures.push_back(e.what());
      } catch (const Error& e) {
        res.failures.push_back(std::string("error: ") + e.what());
        break;
      }
      if (res.failures.empty()) break;
    }
  }
  res.passed = res.failures.empty();
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

/// Runs items on up to cfg.jobs threads; results keep manifest order.
inline std::vector<ItemResult> run_items(const std::vector<ManifestItem>& items, const Goldens& goldens,
                                         const RunConfig& cfg) {
  std::vector<ItemResult> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < items.size();) results[i] = run_item(items[i], goldens, cfg);
  };
  const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(items.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return results;
}

inline Json to_json(const ItemResult& r) {
  Json j;
  j["id"] = r.id;
  if (!r.expression.empty()) j["expression"] = r.expression;
  if (!r.note.empty()) j["note"] = r.note;
  j["passed"] = r.passed;
  j["failures"] = r.failures;
  j["notes"] = r.notes;
  j["seconds"] = r.seconds;
  if (r.report) {
    j["seed_used"] = r.seed_used;
    j["report"] = to_json(*r.report);
  }
  if (r.expected_table) j["expected_betti"] = to_json(*r.expected_table);
  if (!r.partition_rows.empty()) {
    Json rows = Json::array();
    for (const auto& row : r.partition_rows) rows.push_back(to_json(row));
    j["partition_rows"] = rows;
  }
  return j;
}

}  // namespace amdeg
