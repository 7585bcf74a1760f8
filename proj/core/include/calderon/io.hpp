#pragma once

// Serialization of fields, datasets and chain output.

#include "calderon/grid_field.hpp"
#include "calderon/measurement.hpp"
#include "calderon/pcn.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <variant>

namespace calderon {

/// Rows "x,y,value" for every grid point in the closed disk.
void write_field_csv(std::ostream& os, const GridField& field);

/// Binary grid: uint32 grid_n, uint8 mask flag, then grid_n^2 row-major
/// doubles, all little-endian. With the mask flag set, values outside the
/// disk are written as NaN.
void write_field_binary(std::ostream& os, const GridField& field, bool masked = false);
GridField read_field_binary(std::istream& is);

using Dataset = std::variant<SpectralData, ElectrodeData>;

nlohmann::json dataset_to_json(const Dataset& data);
Dataset dataset_from_json(const nlohmann::json& j);

/// Columns step,loglik,accepted,sup_theta.
void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& trace);

nlohmann::json summary_to_json(const PosteriorSummary& summary);

} // namespace calderon
