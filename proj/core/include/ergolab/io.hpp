#pragma once

#include <string>
#include <vector>

#include "ergolab/ergodicity.hpp"
#include "ergolab/states.hpp"
#include "ergolab/verlinde.hpp"

namespace ergolab {

enum class ReportFormat { Json, Csv };

ReportFormat parse_format(const std::string& s);  // "json" | "csv"

/// Fixed-width float text used by every report writer: 12 significant
/// digits, so identical inputs produce byte-identical files.
std::string fmt_float(double x);

/// Writes content to path via a temporary file and an atomic rename; no
/// partial file is left behind on failure.
void atomic_write(const std::string& path, const std::string& content);

// --- stable value serialization (JSON text) ---
std::string observable_to_json(const FourierObservable& f);
FourierObservable observable_from_json(const std::string& text);

std::string state_to_json(const State& s);
std::string cloud_to_json(const WeightedCloud& c);

/// Debug dump {"n":..., "re":[[...]], "im":[[...]]}; not a stability-
/// guaranteed format.
std::string operator_to_json(const QuantumOperator& op);

// --- experiment reports ---
/// JSON lines, one record per N.
std::string ergodicity_records_to_jsonl(const std::vector<ErgodicityRecord>& records);
/// Header: N,fraction,barycenter_distance,n_outliers
std::string ergodicity_records_to_csv(const std::vector<ErgodicityRecord>& records);

std::string scars_to_json(const std::vector<ScarEntry>& scars);

std::string spin_table_to_json(const SpinDimensionTable& t);
/// Header: genus,r,N,character_class,multiplicity,dimension
std::string spin_table_to_csv(const SpinDimensionTable& t);

std::string asymptotics_to_json(int genus, const AsymptoticsResult& r);
std::string asymptotics_to_csv(int genus, const AsymptoticsResult& r);

/// Writes nonempty `content` to `path` atomically; throws Error on empty
/// content or unwritable path.
void emit_report(const std::string& content, const std::string& path);

} // namespace ergolab
