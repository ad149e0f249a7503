#pragma once

// Command dispatch for the sperner tool. Parsing lives in sperner.cpp; this
// header takes a filled RunConfig and writes the report, so tests can drive it
// without a process boundary.

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sperner/sperner.hpp"

namespace sperner::cli {

enum class Format { text, json, csv };
enum class Exit : int { ok = 0, claim_failed = 1, usage = 2, budget = 3 };

struct RunConfig {
  std::string command;  // "order", "shadow", "cascade", "verify", ...
  std::string target;   // second word: "list", "theorem-1.4", "lemma-3.8", ...
  int n = 0;
  int k = -1;
  std::int64_t m = 0;
  std::int64_t first = -1;  // order list --first
  std::int64_t last = -1;   // order list --last
  std::string family_path;
  std::string partner_path;
  std::string mode;       // normalize band: "", "even", "odd"
  std::string lemma_id;   // lemmas check --id
  int max = 0;            // lemmas check --max
  int max_n = 0;          // sweep bounds; 0 means the subcommand default
  Format format = Format::text;
  int workers = 1;
  std::uint64_t seed = 20240601;
  int trials = 200;
  bool allow_long = false;
  bool all_pairs = false;  // census: list raw ordered pairs instead of classes
  double budget_seconds = 0;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

using json = nlohmann::ordered_json;

inline json set_json(SetMask x) { return x.elements(); }

inline json family_json(const Family &f) {
  json out = json::array();
  for (SetMask x : f) out.push_back(set_json(x));
  return out;
}

inline std::string csv_family(const Family &f) {
  std::string s;
  for (SetMask x : f) {
    if (!s.empty()) s += ' ';
    s += format_set(x);
  }
  return "\"" + s + "\"";
}

inline json check_json(const CheckReport &r) {
  json j;
  j["id"] = r.id;
  j["claim"] = r.claim;
  j["passed"] = r.passed();
  j["instances"] = r.instances;
  j["violation_count"] = r.violation_count;
  j["violations"] = r.violations;
  j["notes"] = r.notes;
  return j;
}

inline void check_text(std::ostream &out, const CheckReport &r) {
  out << (r.passed() ? "PASS " : "FAIL ") << r.id << ": " << r.claim << " [" << r.instances
      << " instances, " << r.violation_count << " violations]\n";
  for (const auto &v : r.violations) out << "  violation " << v << '\n';
  for (const auto &note : r.notes) out << "  note " << note << '\n';
}

inline void check_csv_header(std::ostream &out) {
  out << "id,passed,instances,violations\n";
}

inline void check_csv(std::ostream &out, const CheckReport &r) {
  out << r.id << ',' << (r.passed() ? "true" : "false") << ',' << r.instances << ',' << r.violation_count
      << '\n';
}

inline Exit verdict(bool ok) { return ok ? Exit::ok : Exit::claim_failed; }

inline void emit_check(std::ostream &out, Format fmt, const CheckReport &r, json extra = json::object()) {
  if (fmt == Format::json) {
    json j = check_json(r);
    for (auto &[key, value] : extra.items()) j[key] = value;
    out << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    check_csv_header(out);
    check_csv(out, r);
  } else {
    check_text(out, r);
    for (auto &[key, value] : extra.items()) out << "  " << key << " = " << value.dump() << '\n';
  }
}

inline void require(bool ok, const std::string &why) {
  if (!ok) throw UsageError(why);
}

inline int need_n(const RunConfig &c, int lo, int hi) {
  require(c.n >= lo && c.n <= hi,
          "--n must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " + std::to_string(c.n));
  return c.n;
}

inline int sweep_bound(const RunConfig &c, int fallback, int lo, int hi) {
  const int v = c.max_n == 0 ? fallback : c.max_n;
  require(v >= lo && v <= hi,
          "--max-n must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " + std::to_string(v));
  return v;
}

// ---- order -------------------------------------------------------------

inline Exit run_order(const RunConfig &c, std::ostream &out) {
  require(c.target == "list", "order: expected 'list'");
  const GroundSize g(c.n);
  require(c.k >= 0 && c.k <= c.n, "order list: k must be in [0, n]");
  require(c.first < 0 || c.last < 0, "order list: --first and --last are exclusive");
  require(c.n <= kMaxMaterializedGround, "order list: n must be <= 20");
  const Int level = binomial(c.n, c.k);
  Family sets(g);
  Int start = 0;
  if (c.first >= 0) {
    require(c.first <= level, "order list: --first exceeds C(n,k)");
    sets = first_segment(g, c.k, c.first);
  } else if (c.last >= 0) {
    require(c.last <= level, "order list: --last exceeds C(n,k)");
    sets = last_segment(g, c.k, c.last);
    start = level - c.last;
  } else {
    sets = full_level(g, c.k);
  }
  if (c.format == Format::json) {
    json j;
    j["n"] = c.n;
    j["k"] = c.k;
    j["start"] = start;
    j["sets"] = family_json(sets);
    out << j.dump(2) << '\n';
  } else if (c.format == Format::csv) {
    out << "rank,set\n";
    Int r = start;
    for (SetMask x : sets) out << r++ << ",\"" << format_set(x) << "\"\n";
  } else {
    for (SetMask x : sets) out << format_set(x) << '\n';
  }
  return Exit::ok;
}

// ---- shadow / shade ----------------------------------------------------

inline Exit run_family_op(const RunConfig &c, std::ostream &out) {
  require(!c.family_path.empty(), c.command + ": --family is required");
  const Family f = read_family_file(c.family_path);
  Family r(f.ground());
  if (c.command == "shadow") r = shadow(f);
  else if (c.command == "shade") r = shade(f);
  else if (c.command == "new-shadow") r = new_shadow(f);
  else r = new_shade(f);
  if (c.format == Format::json) {
    json j;
    j["operation"] = c.command;
    j["n"] = f.ground().n();
    j["input_size"] = f.size();
    j["size"] = r.size();
    j["result"] = family_json(r);
    out << j.dump(2) << '\n';
  } else if (c.format == Format::csv) {
    out << "set\n";
    for (SetMask x : r) out << '"' << format_set(x) << "\"\n";
  } else {
    out << "# " << c.command << " of " << f.size() << " sets: " << r.size() << " sets\n";
    write_family(out, r);
  }
  return Exit::ok;
}

// ---- cascade -----------------------------------------------------------

inline Exit run_cascade(const RunConfig &c, std::ostream &out) {
  require(c.m >= 1, "cascade: m must be >= 1");
  require(c.k >= 1, "cascade: k must be >= 1");
  const CascadeRep rep = cascade(c.m, c.k);
  const Int bound = kkt_shadow_bound(c.m, c.k);
  if (c.format == Format::json) {
    json j;
    j["m"] = c.m;
    j["k"] = c.k;
    j["representation"] = rep.str();
    j["terms"] = json::array();
    for (const auto &t : rep.terms) j["terms"].push_back({{"a", t.a}, {"i", t.i}});
    j["kkt_shadow_bound"] = bound;
    out << j.dump(2) << '\n';
  } else if (c.format == Format::csv) {
    out << "a,i\n";
    for (const auto &t : rep.terms) out << t.a << ',' << t.i << '\n';
  } else {
    out << c.m << " = " << rep.str() << '\n';
    out << "shadow bound = " << bound << '\n';
  }
  return Exit::ok;
}

// ---- table1 ------------------------------------------------------------

inline Exit run_table1(const RunConfig &c, std::ostream &out) {
  const int n = c.n == 0 ? 4 : c.n;
  require(n % 2 == 0 && n >= 2 && n <= 12, "table1: n must be even and in [2, 12]");
  const auto rows = shade_table(GroundSize(n));
  if (c.format == Format::json) {
    json j;
    j["n"] = n;
    j["rows"] = json::array();
    for (const auto &r : rows)
      j["rows"].push_back({{"m", r.m},
                           {"last_set", set_json(r.last_set)},
                           {"new_shade", family_json(r.new_shade)},
                           {"shade_size", r.shade_size},
                           {"bound", r.bound.str()}});
    out << j.dump(2) << '\n';
  } else if (c.format == Format::csv) {
    out << "m,last_set,new_shade,shade_size,lemma_1_9_bound_num,lemma_1_9_bound_den\n";
    for (const auto &r : rows)
      out << r.m << ',' << format_compact(r.last_set) << ",\"" << format_family_compact(r.new_shade) << "\","
          << r.shade_size << ',' << r.bound.num() << ',' << r.bound.den() << '\n';
  } else {
    std::ostringstream bound_head;
    bound_head << n << "/" << n + 2 << "*m+1";
    out << std::left << std::setw(4) << "m" << std::setw(10) << "last set" << std::setw(16) << "new shade"
        << std::setw(8) << "|VL|" << bound_head.str() << '\n';
    for (const auto &r : rows)
      out << std::left << std::setw(4) << r.m << std::setw(10) << format_compact(r.last_set) << std::setw(16)
          << format_family_compact(r.new_shade) << std::setw(8) << r.shade_size << r.bound.mixed() << '\n';
  }
  return Exit::ok;
}

// ---- lemmas ------------------------------------------------------------

inline Exit run_lemmas(const RunConfig &c, std::ostream &out) {
  require(c.target == "check", "lemmas: expected 'check'");
  require(c.max >= 0 && c.max <= 60, "lemmas check: --max must be in [1, 60]");
  std::vector<LemmaId> ids;
  if (c.lemma_id.empty()) {
    for (const auto &l : kLemmas) ids.push_back(l.id);
  } else {
    const auto id = parse_lemma_id(c.lemma_id);
    require(id.has_value(), "lemmas check: unknown --id '" + c.lemma_id + "'");
    ids.push_back(*id);
  }
  std::vector<CheckReport> reports;
  for (LemmaId id : ids) reports.push_back(check_lemma(id, c.max));
  bool ok = true;
  for (const auto &r : reports) ok = ok && r.passed();

  if (c.format == Format::json) {
    json j;
    j["passed"] = ok;
    j["lemmas"] = json::array();
    for (const auto &r : reports) j["lemmas"].push_back(check_json(r));
    out << j.dump(2) << '\n';
  } else if (c.format == Format::csv) {
    check_csv_header(out);
    for (const auto &r : reports) check_csv(out, r);
  } else {
    out << std::left << std::setw(7) << "lemma" << std::setw(8) << "result" << std::setw(12) << "instances"
        << "claim\n";
    for (const auto &r : reports)
      out << std::left << std::setw(7) << r.id << std::setw(8) << (r.passed() ? "PASS" : "FAIL") << std::setw(12)
          << r.instances << r.claim << '\n';
    for (const auto &r : reports)
      for (const auto &v : r.violations) out << "violation " << r.id << ' ' << v << '\n';
  }
  return verdict(ok);
}

// ---- normalize ---------------------------------------------------------

inline std::string step_text(const NormalizationStep &s) {
  std::string t = std::string(s.direction == Direction::up ? "up" : "down") + " from rank " + std::to_string(s.rank) +
                  ": removed";
  for (SetMask x : s.removed) t += " " + format_set(x);
  t += "; inserted";
  for (SetMask x : s.inserted) t += " " + format_set(x);
  return t;
}

inline Exit run_normalize(const RunConfig &c, std::ostream &out) {
  require(!c.family_path.empty(), "normalize: --family is required");
  const Family f = read_family_file(c.family_path);
  const Family partner = c.partner_path.empty() ? Family(f.ground()) : read_family_file(c.partner_path);
  require(partner.ground() == f.ground(), "normalize: family and partner use different n");
  require(is_antichain(f), "normalize: family is not an antichain");
  require(is_cross_intersecting(f, partner), "normalize: family and partner are not cross-intersecting");
  require(c.mode.empty() || c.mode == "even" || c.mode == "odd", "normalize: --mode must be even or odd");
  const BandMode mode = c.mode.empty() ? default_mode(f.ground())
                                       : (c.mode == "even" ? BandMode::even : BandMode::odd);
  try {
    const NormalizationTrace t = normalize_to_middle(f, partner, mode);
    if (c.format == Format::json) {
      json j;
      j["n"] = f.ground().n();
      j["band"] = {band_floor(f.ground(), mode), band_ceiling(f.ground(), mode)};
      j["selection_failure"] = false;
      j["steps"] = json::array();
      for (const auto &s : t.steps) {
        json st;
        st["direction"] = s.direction == Direction::up ? "up" : "down";
        st["rank"] = s.rank;
        st["removed"] = json::array();
        for (SetMask x : s.removed) st["removed"].push_back(set_json(x));
        st["inserted"] = json::array();
        for (SetMask x : s.inserted) st["inserted"].push_back(set_json(x));
        j["steps"].push_back(st);
      }
      j["final"] = family_json(t.final);
      out << j.dump(2) << '\n';
    } else if (c.format == Format::csv) {
      out << "step,direction,rank,removed,inserted\n";
      int i = 0;
      for (const auto &s : t.steps)
        out << ++i << ',' << (s.direction == Direction::up ? "up" : "down") << ',' << s.rank << ','
            << csv_family(Family(f.ground(), s.removed)) << ',' << csv_family(Family(f.ground(), s.inserted))
            << '\n';
    } else {
      int i = 0;
      for (const auto &s : t.steps) out << "step " << ++i << ": " << step_text(s) << '\n';
      out << "final: " << format_family(t.final) << '\n';
    }
    return Exit::ok;
  } catch (const SelectionFailure &ex) {
    if (c.format == Format::json) {
      json j;
      j["n"] = f.ground().n();
      j["selection_failure"] = true;
      j["direction"] = ex.direction == Direction::up ? "up" : "down";
      j["rank"] = ex.rank;
      j["needed"] = ex.needed;
      j["found"] = ex.found;
      out << j.dump(2) << '\n';
    } else {
      out << "selection failure: " << ex.what() << '\n';
    }
    return Exit::claim_failed;
  }
}

// ---- verify ------------------------------------------------------------

inline json pair_json(const SubsetLattice &L, const FamilyPair &p) {
  return json::array({family_json(L.to_family(p.a)), family_json(L.to_family(p.b))});
}

inline json census_json(const SearchCensus &s, bool all_pairs) {
  const SubsetLattice L(s.n);
  json j;
  j["n"] = s.n;
  j["optimum"] = s.optimum;
  j["formula_value"] = s.formula_value;
  j["match"] = s.match;
  j["complete"] = s.complete;
  j["middle_band_only"] = s.middle_band_only;
  j["reduced_by_isomorphism"] = !all_pairs;
  j["optimal_pairs"] = json::array();
  j["near_optimal_pairs"] = json::array();
  if (all_pairs) {
    for (const auto &p : s.optimal) j["optimal_pairs"].push_back(pair_json(L, p));
    for (const auto &p : s.near_optimal) j["near_optimal_pairs"].push_back(pair_json(L, p));
  } else {
    for (const auto &c : s.optimal_classes) j["optimal_pairs"].push_back(pair_json(L, c.canonical));
    for (const auto &c : s.near_classes) j["near_optimal_pairs"].push_back(pair_json(L, c.canonical));
  }
  json counts;
  counts["antichains"] = s.antichains;
  counts["optimal_ordered"] = static_cast<Int>(s.optimal.size());
  counts["optimal_unordered"] = s.optimal_unordered;
  counts["optimal_classes"] = static_cast<Int>(s.optimal_classes.size());
  counts["near_optimal_ordered"] = static_cast<Int>(s.near_optimal.size());
  counts["near_optimal_unordered"] = s.near_unordered;
  counts["near_optimal_classes"] = static_cast<Int>(s.near_classes.size());
  j["counts"] = counts;
  return j;
}

inline void census_text(std::ostream &out, const SearchCensus &s, bool all_pairs) {
  const SubsetLattice L(s.n);
  out << "n=" << s.n << " optimum=" << s.optimum << " formula=" << s.formula_value
      << " match=" << (s.match ? "yes" : "no") << " complete=" << (s.complete ? "yes" : "no")
      << (s.middle_band_only ? " (ranks 3,4 only)" : "") << '\n';
  out << "antichains: " << s.antichains << '\n';
  auto show = [&](const char *label, const std::vector<FamilyPair> &raw, const std::vector<PairClass> &classes,
                  Int unordered) {
    out << label << ": " << raw.size() << " ordered, " << unordered << " unordered, " << classes.size()
        << " classes\n";
    if (all_pairs) {
      for (const auto &p : raw)
        out << "  " << format_family(L.to_family(p.a)) << " | " << format_family(L.to_family(p.b)) << '\n';
    } else {
      for (const auto &c : classes)
        out << "  " << format_family(L.to_family(c.canonical.a)) << " | "
            << format_family(L.to_family(c.canonical.b)) << "  x" << c.ordered_count << '\n';
    }
  };
  show("optimal pairs", s.optimal, s.optimal_classes, s.optimal_unordered);
  show("optimum-1 pairs", s.near_optimal, s.near_classes, s.near_unordered);
}

inline void census_csv(std::ostream &out, const SearchCensus &s, bool all_pairs) {
  const SubsetLattice L(s.n);
  out << "kind,a,b,ordered_count\n";
  auto rows = [&](const char *kind, const std::vector<FamilyPair> &raw, const std::vector<PairClass> &classes) {
    if (all_pairs) {
      for (const auto &p : raw)
        out << kind << ',' << csv_family(L.to_family(p.a)) << ',' << csv_family(L.to_family(p.b)) << ",1\n";
    } else {
      for (const auto &c : classes)
        out << kind << ',' << csv_family(L.to_family(c.canonical.a)) << ','
            << csv_family(L.to_family(c.canonical.b)) << ',' << c.ordered_count << '\n';
    }
  };
  rows("optimal", s.optimal, s.optimal_classes);
  rows("near", s.near_optimal, s.near_classes);
}

inline Exit run_verify_theorem(const RunConfig &c, std::ostream &out) {
  const int n = need_n(c, 1, kMaxLatticeGround);
  require(n < 6 || c.allow_long, "verify: n = 6 needs --long");
  if (c.target == "theorem-1.5") require(n % 2 == 1, "verify theorem-1.5: n must be odd");
  if (c.target == "theorem-1.6") require(n % 2 == 0, "verify theorem-1.6: n must be even");
  SearchOptions opt;
  opt.workers = c.workers;
  opt.budget_seconds = c.budget_seconds;
  opt.allow_long = c.allow_long;
  const SearchCensus s = max_cross_sum(GroundSize(n), opt);
  const CharacterizationReport r = c.target == "theorem-1.4" ? verify_extremal(s) : verify_almost_extremal(s);

  if (c.format == Format::json) {
    json j = census_json(s, c.all_pairs);
    if (c.target != "theorem-1.4") j["counts"]["near_optimal_oriented"] = r.oriented_found;
    j["check"] = check_json(r.check);
    out << j.dump(2) << '\n';
  } else if (c.format == Format::csv) {
    census_csv(out, s, c.all_pairs);
  } else {
    census_text(out, s, c.all_pairs);
    if (c.target != "theorem-1.4") out << "optimum-1 pairs in the stated orientation: " << r.oriented_found << '\n';
    check_text(out, r.check);
  }
  if (!s.complete) return Exit::budget;
  return verdict(r.check.passed());
}

inline Exit run_verify(const RunConfig &c, std::ostream &out) {
  if (c.target == "theorem-1.4" || c.target == "theorem-1.5" || c.target == "theorem-1.6")
    return run_verify_theorem(c, out);
  require(c.target == "lemma-3.15", "verify: unknown target '" + c.target + "'");
  const Lemma315Report r = verify_lemma_3_15();
  const SubsetLattice L(4);
  json classes = json::array();
  for (auto f : r.extremal_classes) classes.push_back(family_json(L.to_family(f)));
  emit_check(out, c.format, r.check,
             {{"antichains", r.antichains}, {"with_rank_1_or_3", r.with_rank_1_or_3}, {"extremal_classes", classes}});
  return verdict(r.check.passed());
}

// ---- sweep -------------------------------------------------------------

inline Exit run_sweep(const RunConfig &c, std::ostream &out) {
  if (c.target == "lemma-3.8") {
    const CheckReport r = sweep_lemma_3_8(sweep_bound(c, 13, 3, 13), 9);
    emit_check(out, c.format, r);
    return verdict(r.passed());
  }
  if (c.target == "lemma-3.14") {
    const Lemma314Report r = sweep_lemma_3_14(sweep_bound(c, 12, 6, 12));
    emit_check(out, c.format, r.check, {{"n4_m3_equality_exception", r.n4_exception_confirmed}});
    return verdict(r.check.passed() && r.n4_exception_confirmed);
  }
  if (c.target == "kkt") {
    const int n_max = sweep_bound(c, 10, 1, 14);
    CheckReport r = kkt_oracle_sweep(n_max, c.workers);
    r.merge(kkt_random_sweep(std::min(n_max, 10), c.trials, c.seed));
    emit_check(out, c.format, r);
    return verdict(r.passed());
  }
  if (c.target == "lemma-1.9") {
    const int n_max = sweep_bound(c, 10, 1, 14);
    CheckReport r = lemma_1_9_segment_sweep(n_max, c.workers);
    const CheckReport probe = lemma_1_9_random_search(std::min(n_max, 10), c.trials, c.seed);
    r.notes.insert(r.notes.end(), probe.notes.begin(), probe.notes.end());
    emit_check(out, c.format, r);
    return verdict(r.passed());
  }
  if (c.target == "theorem-1.14") {
    const CheckReport r = new_shadow_window_sweep(sweep_bound(c, 8, 1, 10), c.workers);
    emit_check(out, c.format, r);
    return verdict(r.passed());
  }
  require(c.target == "normalization", "sweep: unknown target '" + c.target + "'");
  const int n = c.n == 0 ? 4 : need_n(c, 1, 5);
  const NormalizationCensus r = normalization_sweep(n, c.workers);
  emit_check(out, c.format, r.check,
             {{"n", n},
              {"pairs", r.pairs},
              {"selection_failures", r.selection_failures},
              {"failure_examples", r.failure_examples}});
  return verdict(r.check.passed() && r.selection_failures == 0);
}

}  // namespace detail

/// Runs one command. Validation problems print to `err` and return Exit::usage.
inline int dispatch(const RunConfig &config, std::ostream &out, std::ostream &err) {
  using namespace detail;
  try {
    Exit e = Exit::usage;
    const std::string &cmd = config.command;
    if (config.workers < 1) throw UsageError("--workers must be >= 1");
    if (cmd == "order") e = run_order(config, out);
    else if (cmd == "shadow" || cmd == "shade" || cmd == "new-shadow" || cmd == "new-shade")
      e = run_family_op(config, out);
    else if (cmd == "cascade") e = run_cascade(config, out);
    else if (cmd == "table1") e = run_table1(config, out);
    else if (cmd == "lemmas") e = run_lemmas(config, out);
    else if (cmd == "normalize") e = run_normalize(config, out);
    else if (cmd == "verify") e = run_verify(config, out);
    else if (cmd == "sweep") e = run_sweep(config, out);
    else throw UsageError("unknown command '" + cmd + "'");
    return static_cast<int>(e);
  } catch (const std::invalid_argument &ex) {
    err << "error: " << ex.what() << '\n';
  } catch (const std::out_of_range &ex) {
    err << "error: " << ex.what() << '\n';
  } catch (const std::length_error &ex) {
    err << "error: " << ex.what() << '\n';
  } catch (const std::overflow_error &ex) {
    err << "error: " << ex.what() << '\n';
  }
  return static_cast<int>(Exit::usage);
}

}  // namespace sperner::cli
