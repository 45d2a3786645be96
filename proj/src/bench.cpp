#include "sinr/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "sinr/oracle.hpp"
#include "sinr/report.hpp"
#include "sinr/scheduler.hpp"

namespace sinr {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

struct Row {
  std::size_t n;
  std::string model;
  double alpha;
  double beta;
  std::uint64_t seed;
  int rep;
  std::string text;
};

}  // namespace

std::string bench_csv(const std::vector<GeneratorSpec>& specs, const BenchOptions& opt) {
  if (opt.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");

  std::vector<Row> rows;
  for (const GeneratorSpec& base : specs) {
    for (int rep = 0; rep < opt.repetitions; ++rep) {
      GeneratorSpec spec = base;
      spec.seed = base.seed + static_cast<std::uint64_t>(rep);
      LinkInstance inst = generate(spec);

      auto t0 = std::chrono::steady_clock::now();
      Schedule sched = inst.noise > 0.0 ? noise_lift(inst) : schedule_pc(inst);
      auto t1 = std::chrono::steady_clock::now();
      double wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

      ScheduleReport rep_out = verify(inst, sched);
      if (!rep_out.feasible)
        throw std::runtime_error("bench produced an infeasible schedule (seed " +
                                 std::to_string(spec.seed) + ")");

      std::string opt_fixed, opt_pc, ratio_fixed, ratio_pc;
      if (opt.with_oracle && inst.size() <= opt.oracle_cap && inst.noise == 0.0) {
        int fixed = optimal_schedule_fixed(inst, PowerAssignment::mean(), opt.oracle_cap);
        int pc = optimal_schedule_pc(inst, opt.oracle_cap);
        opt_fixed = std::to_string(fixed);
        opt_pc = std::to_string(pc);
        ratio_fixed = fmt(static_cast<double>(rep_out.slot_count) / fixed);
        ratio_pc = fmt(static_cast<double>(rep_out.slot_count) / pc);
      }

      std::ostringstream line;
      line << inst.size() << ',' << model_name(inst.model) << ',' << fmt(inst.alpha) << ','
           << fmt(inst.beta) << ',' << spec.seed << ',' << rep << ',' << fmt(rep_out.lambda)
           << ',' << rep_out.slot_count << ',' << opt_fixed << ',' << opt_pc << ','
           << ratio_fixed << ',' << ratio_pc;
      if (opt.with_time) line << ',' << fmt(wall_ms);
      rows.push_back({inst.size(), model_name(inst.model), inst.alpha, inst.beta, spec.seed,
                      rep, line.str()});
    }
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.n, a.model, a.alpha, a.beta, a.seed, a.rep) <
           std::tie(b.n, b.model, b.alpha, b.beta, b.seed, b.rep);
  });

  std::ostringstream out;
  out << "n,model,alpha,beta,seed,rep,lambda,slot_count,opt_fixed,opt_pc,ratio_fixed,ratio_pc";
  if (opt.with_time) out << ",wall_ms";
  out << '\n';
  for (const Row& r : rows) out << r.text << '\n';
  return out.str();
}

}  // namespace sinr
