#pragma once

// Renderers for sweep and errata reports.  All three formats are
// deterministic for a given config: map-backed ordering everywhere, no
// timestamps, no environment leakage.

#include "quadcong/sweep.hpp"

#include <ostream>

namespace quadcong {

// Dispatches on cfg.format.
void write_report(std::ostream& os, const SweepConfig& cfg,
                  const SweepReport& report);
void write_report(std::ostream& os, const SweepConfig& cfg,
                  const ErrataReport& report);

void write_csv(std::ostream& os, const SweepConfig& cfg,
               const SweepReport& report);
void write_json(std::ostream& os, const SweepConfig& cfg,
                const SweepReport& report);
void write_table(std::ostream& os, const SweepConfig& cfg,
                 const SweepReport& report);

void write_csv(std::ostream& os, const SweepConfig& cfg,
               const ErrataReport& report);
void write_json(std::ostream& os, const SweepConfig& cfg,
                const ErrataReport& report);
void write_table(std::ostream& os, const SweepConfig& cfg,
                 const ErrataReport& report);

}  // namespace quadcong
