// Copyright 2026 The qpcodes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpcodes/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "qpcodes/errors.hpp"

namespace qpcodes {
namespace {

constexpr std::uint64_t kShuffleSeed = 0x9e3779b97f4a7c15ULL;
constexpr Int kChunk = Int{1} << 15;

// Membership marks for coset indices, cleared in O(1) by bumping the epoch.
class StampSet {
 public:
  void reset(Int size) {
    if (static_cast<Int>(marks_.size()) < size) marks_.resize(static_cast<std::size_t>(size), 0);
    if (++epoch_ == 0) {
      std::fill(marks_.begin(), marks_.end(), 0);
      epoch_ = 1;
    }
  }
  bool insert(Int idx) {
    std::uint32_t& m = marks_[static_cast<std::size_t>(idx)];
    if (m == epoch_) return false;
    m = epoch_;
    return true;
  }

 private:
  std::vector<std::uint32_t> marks_;
  std::uint32_t epoch_ = 0;
};

bool labels_distinct(const CosetLabeler& lab, const PointList& pts, StampSet& seen) {
  if (static_cast<Int>(pts.size()) > lab.modulus()) return false;
  seen.reset(lab.modulus());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!seen.insert(lab.index(pts[i]))) return false;
  }
  return true;
}

bool labels_cover(const CosetLabeler& lab, const PointList& pts, StampSet& seen) {
  const Int need = lab.modulus();
  if (static_cast<Int>(pts.size()) < need) return false;
  seen.reset(need);
  Int hit = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (seen.insert(lab.index(pts[i])) && ++hit == need) return true;
  }
  return false;
}

PointList shuffled_ball(int n, int p, PowRadius s) {
  const PointList ball = ball_points(n, p, s);
  std::vector<std::size_t> order(ball.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(kShuffleSeed ^ static_cast<std::uint64_t>(s.s));
  std::shuffle(order.begin(), order.end(), rng);
  PointList out(n);
  out.reserve(ball.size());
  for (std::size_t i : order) out.push_back(ball[i]);
  return out;
}

// (s, mu(s)) over the attainable distances, ascending, until mu exceeds
// `volume` and one more element is known.
std::vector<std::pair<PowRadius, Int>> mu_table(int n, int p, Int volume) {
  for (Int limit = 64;; limit = checked_mul(limit, 2)) {
    const DistanceSet d = distance_set(n, p, PowRadius(limit));
    std::vector<std::pair<PowRadius, Int>> table;
    for (PowRadius s : d.elements()) {
      const Int m = mu(n, p, s);
      table.emplace_back(s, m);
      if (m > volume) return table;
    }
  }
}

// Index of the last row with mu <= m.
std::size_t radius_row(const std::vector<std::pair<PowRadius, Int>>& table, Int m) {
  std::size_t k = 0;
  while (k + 1 < table.size() && table[k + 1].second <= m) ++k;
  return k;
}

struct VolumePlan {
  Int m = 0;
  PowRadius s_r;
  PowRadius s_R;
  std::vector<std::vector<Int>> diags;
};

struct Task {
  std::size_t volume = 0;
  std::size_t diag = 0;
  Int begin = 0;
  Int end = 0;
};

struct VolumeState {
  std::size_t pending = 0;
  std::vector<HnfBasis> raw;
  SearchCounts counts;
  std::chrono::microseconds busy{0};
};

struct CompletedVolume {
  SearchCounts counts;
  std::vector<HnfBasis> hits;
};

// Upper-triangular row-major HNF entries for a given diagonal and index.
void decode_index(int n, std::span<const Int> diag, Int index, std::array<Int, kMaxDim * kMaxDim>& a) {
  a.fill(0);
  for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(j * n + j)] = diag[static_cast<std::size_t>(j)];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = n - 1; j > i; --j) {
      const Int d = diag[static_cast<std::size_t>(j)];
      a[static_cast<std::size_t>(i * n + j)] = index % d;
      index /= d;
    }
  }
}

void advance(int n, std::span<const Int> diag, std::array<Int, kMaxDim * kMaxDim>& a) {
  for (int i = n - 1; i >= 0; --i) {
    for (int j = n - 1; j > i; --j) {
      Int& e = a[static_cast<std::size_t>(i * n + j)];
      if (++e < diag[static_cast<std::size_t>(j)]) return;
      e = 0;
    }
  }
}

std::string query_header(const SearchQuery& q) {
  std::ostringstream os;
  os << "#query n=" << q.n << " p=" << q.p << " t_max=" << q.t_max << " dedupe=" << (q.dedupe ? 1 : 0);
  return os.str();
}

std::map<Int, CompletedVolume> load_sidecar(const std::string& path, const SearchQuery& q) {
  std::map<Int, CompletedVolume> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  if (!std::getline(in, line)) return done;
  if (line != query_header(q)) {
    throw InvalidArgument("checkpoint '" + path + "' was written for a different query (" + line + ")");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Int m = 0;
    CompletedVolume v;
    if (!(ls >> m >> v.counts.enumerated >> v.counts.injective >> v.counts.covering)) {
      throw InvalidArgument("malformed checkpoint line in '" + path + "': " + line);
    }
    std::string basis;
    while (ls >> basis) v.hits.push_back(HnfBasis::from_rows(parse_matrix(basis)));
    done[m] = std::move(v);
  }
  return done;
}

std::vector<HnfBasis> dedupe_within_volume(const std::vector<HnfBasis>& raw, Int m) {
  std::vector<HnfBasis> out = dedupe_congruence(raw);
  for (const HnfBasis& h : out) {
    if (h.det() != m) throw Error("internal: congruence changed the determinant of " + to_compact_string(h.rows()));
  }
  return out;
}

}  // namespace

void SearchQuery::validate() const {
  if (n < 1 || n > kMaxDim) throw DimensionUnsupported("--dim must be in [1, " + std::to_string(kMaxDim) + "]");
  if (p < 1) throw InvalidArgument("--p must be a positive integer");
  if (volume_min < 1) throw InvalidArgument("--min-volume must be positive");
  if (volume_max < volume_min) throw InvalidArgument("--max-volume must be at least --min-volume");
  if (t_max < 0) throw InvalidArgument("--t-max must be nonnegative");
}

HomomorphismLabel homomorphism_label(const HnfBasis& b, std::span<const Int> x) {
  if (static_cast<int>(x.size()) != b.dim()) throw InvalidArgument("point dimension does not match the lattice");
  return {CosetLabeler(b).residues(x)};
}

bool injectivity_test(const HnfBasis& b, int p, PowRadius s) {
  if (mu(b.dim(), p, s) > b.det()) return false;
  StampSet seen;
  return labels_distinct(CosetLabeler(b), ball_points(b.dim(), p, s), seen);
}

bool covering_test(const HnfBasis& b, int p, PowRadius s) {
  StampSet seen;
  return labels_cover(CosetLabeler(b), ball_points(b.dim(), p, s), seen);
}

std::vector<HnfBasis> dedupe_congruence(const std::vector<HnfBasis>& hits) {
  std::set<HnfBasis> classes;
  for (const HnfBasis& h : hits) classes.insert(canonical_congruence_form(h.basis()));
  return {classes.begin(), classes.end()};
}

PowRadius fast_path_radius(int n, int p, Int m) {
  if (m < 1) throw InvalidArgument("volume must be positive");
  const auto table = mu_table(n, p, m);
  return table[radius_row(table, m)].first;
}

int default_jobs() {
  if (const char* env = std::getenv("QP_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

SearchReport run_search(const SearchQuery& q, const SearchOptions& options) {
  q.validate();
  const int n = q.n;
  const int p = q.p;
  const bool fast = q.t_max <= 1;

  std::map<Int, CompletedVolume> done;
  std::string sidecar;
  if (options.checkpoint) {
    sidecar = *options.checkpoint + ".hits";
    done = load_sidecar(sidecar, q);
  }

  const auto table = mu_table(n, p, q.volume_max);
  std::vector<VolumePlan> plans;
  std::map<Int, PointList> balls;
  for (Int m = q.volume_min; m <= q.volume_max; ++m) {
    if (done.count(m)) continue;
    const std::size_t k = radius_row(table, m);
    VolumePlan plan{m, table[k].first, table[k + 1].first, diagonal_factorizations(n, m)};
    if (fast) {
      for (PowRadius s : {plan.s_r, q.t_max == 0 ? plan.s_r : plan.s_R}) {
        if (!balls.count(s.s)) balls.emplace(s.s, shuffled_ball(n, p, s));
      }
    }
    plans.push_back(std::move(plan));
  }

  std::vector<Task> tasks;
  std::vector<VolumeState> states(plans.size());
  for (std::size_t v = 0; v < plans.size(); ++v) {
    for (std::size_t d = 0; d < plans[v].diags.size(); ++d) {
      const Int count = off_diagonal_count(plans[v].diags[d]);
      for (Int b = 0; b < count; b += kChunk) {
        tasks.push_back({v, d, b, std::min(count, b + kChunk)});
        ++states[v].pending;
      }
    }
  }

  std::ofstream checkpoint_out;
  std::ofstream sidecar_out;
  if (options.checkpoint) {
    const bool fresh = done.empty();
    checkpoint_out.open(*options.checkpoint, fresh ? std::ios::trunc : std::ios::app);
    sidecar_out.open(sidecar, fresh ? std::ios::trunc : std::ios::app);
    if (!checkpoint_out || !sidecar_out) throw InvalidArgument("--checkpoint: cannot write '" + *options.checkpoint + "'");
    if (fresh) sidecar_out << query_header(q) << '\n' << std::flush;
  }

  std::mutex merge_mutex;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;

  auto finish_volume = [&](std::size_t v) {
    VolumeState& st = states[v];
    CompletedVolume cv;
    cv.counts = st.counts;
    if (q.dedupe) {
      cv.hits = dedupe_within_volume(st.raw, plans[v].m);
    } else {
      cv.hits = std::move(st.raw);
      std::sort(cv.hits.begin(), cv.hits.end());
    }
    const Int millis = std::chrono::duration_cast<std::chrono::milliseconds>(st.busy).count();
    if (options.checkpoint) {
      sidecar_out << plans[v].m << '\t' << cv.counts.enumerated << '\t' << cv.counts.injective << '\t'
                  << cv.counts.covering;
      for (const HnfBasis& h : cv.hits) sidecar_out << '\t' << to_compact_string(h.rows());
      sidecar_out << '\n' << std::flush;
      checkpoint_out << plans[v].m << '\t' << cv.hits.size() << '\t' << millis << '\n' << std::flush;
    }
    if (options.on_volume_done) options.on_volume_done(plans[v].m, static_cast<Int>(cv.hits.size()), millis);
    done[plans[v].m] = std::move(cv);
  };

  auto run_task = [&](const Task& task, StampSet& seen) {
    const auto start = std::chrono::steady_clock::now();
    const VolumePlan& plan = plans[task.volume];
    const std::vector<Int>& diag = plan.diags[task.diag];
    SearchCounts counts;
    std::vector<HnfBasis> found;
    if (fast) {
      const PointList& inner = balls.at(plan.s_r.s);
      const PointList& outer = balls.at(q.t_max == 0 ? plan.s_r.s : plan.s_R.s);
      std::array<Int, kMaxDim * kMaxDim> a{};
      decode_index(n, diag, task.begin, a);
      for (Int k = task.begin; k < task.end; ++k, advance(n, diag, a)) {
        ++counts.enumerated;
        const CosetLabeler lab(n, std::span<const Int>(a.data(), static_cast<std::size_t>(n * n)));
        if (!labels_distinct(lab, inner, seen)) continue;
        ++counts.injective;
        if (!labels_cover(lab, outer, seen)) continue;
        ++counts.covering;
        found.push_back(hnf_from_index(diag, k));
      }
    } else {
      for (Int k = task.begin; k < task.end; ++k) {
        ++counts.enumerated;
        HnfBasis h = hnf_from_index(diag, k);
        if (analyze(h, p).t <= q.t_max) {
          ++counts.injective;
          ++counts.covering;
          found.push_back(std::move(h));
        }
      }
    }
    const auto busy = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    std::lock_guard lock(merge_mutex);
    VolumeState& st = states[task.volume];
    st.counts.enumerated += counts.enumerated;
    st.counts.injective += counts.injective;
    st.counts.covering += counts.covering;
    st.busy += busy;
    st.raw.insert(st.raw.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    if (--st.pending == 0) finish_volume(task.volume);
  };

  auto worker = [&] {
    StampSet seen;
    for (;;) {
      if (failed.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        run_task(tasks[i], seen);
      } catch (...) {
        std::lock_guard lock(merge_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  const int jobs = std::max(1, std::min<int>(options.jobs > 0 ? options.jobs : default_jobs(),
                                             static_cast<int>(std::max<std::size_t>(tasks.size(), 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  SearchReport report;
  report.query = q;
  report.bound_provenance = options.bound_provenance;
  std::vector<HnfBasis> all;
  for (auto& [m, cv] : done) {
    if (m < q.volume_min || m > q.volume_max) continue;
    report.counts.enumerated += cv.counts.enumerated;
    report.counts.injective += cv.counts.injective;
    report.counts.covering += cv.counts.covering;
    all.insert(all.end(), cv.hits.begin(), cv.hits.end());
  }
  std::sort(all.begin(), all.end(), [](const HnfBasis& a, const HnfBasis& b) {
    return a.det() != b.det() ? a.det() < b.det() : a < b;
  });
  report.hits.reserve(all.size());
  for (HnfBasis& h : all) {
    CodeAnalysis analysis = analyze(h, p);
    report.hits.push_back({std::move(h), std::move(analysis)});
  }
  return report;
}

}  // namespace qpcodes
