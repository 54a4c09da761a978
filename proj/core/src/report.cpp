#include <iomanip>
#include <ostream>

#include "hbfs/harness.hpp"

namespace hbfs {

void write_report_csv(std::ostream& os, const BenchmarkReport& report) {
  os << "# mode=" << to_string(report.mode)
     << " backend=" << simd::backend_name(report.backend)
     << " scale=" << report.params.scale << " edgefactor=" << report.params.edgefactor
     << " seed=" << report.params.seed
     << " teps_denominator=undirected_input_edges m=" << report.teps_edges << '\n';
  os << "source,seconds,teps,valid\n";
  for (const RunResult& r : report.runs) {
    os << r.source << ',' << std::setprecision(9) << r.seconds << ','
       << std::setprecision(12) << r.teps << ',' << (r.valid ? "true" : "false") << '\n';
  }
}

void write_trace_csv(std::ostream& os, std::span<const LayerTraceRow> rows, bool header) {
  if (header) os << "layer,direction,kernel,v_f,e_f,e_u,f,g,seconds,fallbacks,gathers\n";
  for (const LayerTraceRow& r : rows) {
    os << r.layer << ',' << to_string(r.direction) << ',' << to_string(r.kernel) << ','
       << r.v_f << ',' << r.e_f << ',' << r.e_u << ',' << r.f_value << ',' << r.g_value << ','
       << std::setprecision(9) << r.seconds << ',' << r.fallback_count << ','
       << r.gather_count << '\n';
  }
}

void write_trace_csv(std::ostream& os, const BenchmarkReport& report) {
  bool header = true;
  for (const RunResult& r : report.runs) {
    write_trace_csv(os, r.trace, header);
    header = false;
  }
}

}  // namespace hbfs
