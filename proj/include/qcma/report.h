#ifndef QCMA_REPORT_H
#define QCMA_REPORT_H

#include <json.hpp>

#include "qcma/analysis.h"
#include "qcma/circuit.h"
#include "qcma/rewind.h"

namespace qcma {

using Json = nlohmann::ordered_json;

/// Version tag written into every JSON report.
inline constexpr const char *kReportSchema = "qcma-report/1";

/// Probabilities are written as exact "num/2^exp" strings, thresholds as "num/den".
Json circuit_summary_json(const Circuit &c);
Json k_row_json(const KRow &row);
Json witness_sweep_json(const WitnessSweep &sweep);
Json instance_report_json(const InstanceReport &report);

}  // namespace qcma

#endif
