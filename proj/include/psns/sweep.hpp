#pragma once

#include <atomic>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "report.hpp"

namespace psns {

struct Range {
  i64 lo = 0, hi = -1; // empty when hi < lo

  bool operator==(const Range&) const = default;
};

struct SweepConfig {
  Range a1, a2, a3, a4, a21;
  i64 oracle_depth = 10;
  int jobs = 1;
};

/// One row per parameter tuple. Invalid tuples carry the failing-condition
/// tag and leave the verification fields at their defaults.
struct SweepRecord {
  PseudoSymParams params;
  bool valid = false;
  std::string failing; // first failing condition, or "error: ..." tag
  GeneratorTuple gens;
  std::vector<i64> s;
  i64 basis_size = 0;
  bool std_basis_verified = false;
  bool cm = false;
  bool nondecreasing = false;
  bool closed_form_agrees = false;
  bool oracle_agrees = false;
  bool identities_ok = false;
  i64 q_degree = 0;
  i64 multiplicity = 0;

  // oracle_agrees is deliberately not part of the verdict: the brute-force
  // semigroup oracle only applies when the four generators minimally
  // generate a numerical semigroup. Parameter tuples whose generators share
  // a factor or collapse (e.g. n4 representable by the others) fall outside
  // that comparison while every ideal-theoretic claim still verifies; the
  // flag is kept as reported data.
  bool verified_all() const {
    return valid && std_basis_verified && nondecreasing && closed_form_agrees &&
           identities_ok && !cm;
  }

  bool operator==(const SweepRecord&) const = default;
};

inline SweepRecord compute_record(const PseudoSymParams& p, i64 oracle_depth) {
  SweepRecord r;
  r.params = p;
  if (!p.well_formed()) {
    r.failing = "well-formed (a_i > 1; 0 < a21 < a1 - 1)";
    return r;
  }
  try {
    r.gens = derive_generators(p);
    ConditionReport cond = check_conditions(p);
    if (!cond.all()) {
      r.failing = cond.first_failing();
      return r;
    }
    HilbertReport h = hilbert_report(p, oracle_depth);
    BasisFamily fam = build_family(p);
    r.valid = true;
    r.s = fam.s.s;
    r.basis_size = static_cast<i64>(fam.members.size());
    auto bins = fam.binomials();
    r.std_basis_verified = is_standard_basis(bins).ok &&
                           r.basis_size == fam.expected_size();
    r.cm = is_tangent_cone_cm(leading_forms(fam));
    r.nondecreasing = h.nondecreasing;
    r.closed_form_agrees = h.closed_form_agrees;
    r.oracle_agrees = h.oracle_agrees;
    r.identities_ok = h.identities_all();
    r.q_degree = h.Q.degree();
    r.multiplicity = h.multiplicity;
  } catch (const std::exception& e) {
    r.valid = false;
    r.failing = std::string("error: ") + e.what();
    // keep the only free-text field CSV-safe at the source, so that
    // serialization round-trips records unchanged
    for (char& ch : r.failing)
      if (ch == ',') ch = ';';
  }
  return r;
}

inline std::vector<PseudoSymParams> enumerate_tuples(const SweepConfig& c) {
  std::vector<PseudoSymParams> out;
  for (i64 a1 = c.a1.lo; a1 <= c.a1.hi; ++a1)
    for (i64 a2 = c.a2.lo; a2 <= c.a2.hi; ++a2)
      for (i64 a3 = c.a3.lo; a3 <= c.a3.hi; ++a3)
        for (i64 a4 = c.a4.lo; a4 <= c.a4.hi; ++a4)
          for (i64 a21 = c.a21.lo; a21 <= c.a21.hi; ++a21)
            out.push_back({a1, a2, a3, a4, a21});
  return out;
}

/// Records in tuple order regardless of the worker count: each worker claims
/// the next tuple index and writes into its own slot.
inline std::vector<SweepRecord> run_sweep(const SweepConfig& c) {
  std::vector<PseudoSymParams> tuples = enumerate_tuples(c);
  std::vector<SweepRecord> records(tuples.size());
  std::atomic<size_t> next{0};
  int jobs = std::max(1, c.jobs);
  auto worker = [&] {
    for (size_t k = next.fetch_add(1); k < tuples.size(); k = next.fetch_add(1))
      records[k] = compute_record(tuples[k], c.oracle_depth);
  };
  if (jobs == 1 || tuples.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

struct SweepSummary {
  i64 total = 0, valid = 0, verified = 0, nondecreasing = 0;
};

inline SweepSummary summarize(const std::vector<SweepRecord>& records) {
  SweepSummary s;
  s.total = static_cast<i64>(records.size());
  for (const auto& r : records) {
    if (!r.valid) continue;
    ++s.valid;
    if (r.std_basis_verified) ++s.verified;
    if (r.nondecreasing) ++s.nondecreasing;
  }
  return s;
}

inline const char* csv_header() {
  return "a1,a2,a3,a4,a21,valid,failing,n1,n2,n3,n4,s,basis_size,std_basis_verified,cm,"
         "nondecreasing,closed_form_agrees,oracle_agrees,identities_ok,q_degree,multiplicity";
}

inline std::string to_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  out << csv_header() << "\n";
  for (const auto& r : records) {
    out << r.params.a1 << ',' << r.params.a2 << ',' << r.params.a3 << ',' << r.params.a4 << ','
        << r.params.a21 << ',' << (r.valid ? 1 : 0) << ',';
    // the failing tag is the only free-text field; keep it comma-free
    for (char ch : r.failing) out << (ch == ',' ? ';' : ch);
    out << ',' << r.gens.n1 << ','
        << r.gens.n2 << ',' << r.gens.n3 << ',' << r.gens.n4 << ',';
    for (size_t k = 0; k < r.s.size(); ++k) out << (k ? ";" : "") << r.s[k];
    out << ',' << r.basis_size << ',' << (r.std_basis_verified ? 1 : 0) << ',' << (r.cm ? 1 : 0)
        << ',' << (r.nondecreasing ? 1 : 0) << ',' << (r.closed_form_agrees ? 1 : 0) << ','
        << (r.oracle_agrees ? 1 : 0) << ',' << (r.identities_ok ? 1 : 0) << ',' << r.q_degree
        << ',' << r.multiplicity << "\n";
  }
  return out.str();
}

inline std::vector<SweepRecord> from_csv(const std::string& text) {
  std::vector<SweepRecord> records;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line); // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    f.resize(21);
    SweepRecord r;
    r.params = {std::stoll(f[0]), std::stoll(f[1]), std::stoll(f[2]), std::stoll(f[3]),
                std::stoll(f[4])};
    r.valid = f[5] == "1";
    r.failing = f[6];
    r.gens = {std::stoll(f[7]), std::stoll(f[8]), std::stoll(f[9]), std::stoll(f[10])};
    if (!f[11].empty()) {
      std::istringstream ss(f[11]);
      std::string part;
      while (std::getline(ss, part, ';')) r.s.push_back(std::stoll(part));
    }
    r.basis_size = std::stoll(f[12]);
    r.std_basis_verified = f[13] == "1";
    r.cm = f[14] == "1";
    r.nondecreasing = f[15] == "1";
    r.closed_form_agrees = f[16] == "1";
    r.oracle_agrees = f[17] == "1";
    r.identities_ok = f[18] == "1";
    r.q_degree = std::stoll(f[19]);
    r.multiplicity = std::stoll(f[20]);
    records.push_back(std::move(r));
  }
  return records;
}

} // namespace psns
