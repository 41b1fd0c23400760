#ifndef MCF_IO_HPP
#define MCF_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mcf/filtration.hpp"
#include "mcf/homology.hpp"
#include "mcf/measures.hpp"
#include "mcf/partition.hpp"
#include "mcf/synth.hpp"

namespace mcf {

/// Shortest decimal that round-trips to the same double; infinities are
/// spelled "inf"/"-inf".
std::string format_double(double x);
double parse_double(std::string_view text, const std::string& context);

/// Writes `payload` to a temporary file in the target directory and renames
/// it into place, so readers never observe partial output.
void atomic_write(const std::filesystem::path& path, const std::string& payload);

// partition sequences: JSON {"n_points", "scales", "partitions"} or CSV with
// one row per scale (scale first, then one label per point)
std::string sequence_to_json(const ScaledPartitionSequence& seq);
ScaledPartitionSequence sequence_from_json(const std::string& text);
std::string sequence_to_csv(const ScaledPartitionSequence& seq);
ScaledPartitionSequence sequence_from_csv(const std::string& text);

/// Reads a sequence file, dispatching on the .json / .csv extension.
ScaledPartitionSequence read_sequence(const std::filesystem::path& path);
void write_sequence(const std::filesystem::path& path, const ScaledPartitionSequence& seq);

// filtration text: one cell per line, "value dim v0 v1 ... vk", reduction order
std::string filtration_to_text(const FilteredComplex& fc);
FilteredComplex filtration_from_text(const std::string& text);
FilteredComplex read_filtration(const std::filesystem::path& path);

// diagram CSV: header "dim,birth,death", essentials spelled inf
std::string diagrams_to_csv(const std::vector<PersistenceDiagram>& diagrams);
std::vector<PersistenceDiagram> diagrams_from_csv(const std::string& text);
std::vector<PersistenceDiagram> read_diagrams(const std::filesystem::path& path);

// measures CSV: scale,h,c_total,beta0,beta1,...
std::string measures_to_csv(const StepFunction& h, const StepFunction& conflict,
                            const std::vector<StepFunction>& betti);

std::string selected_scales_to_json(const std::vector<SelectedScale>& selected,
                                    const ScaleSelectionParams& params,
                                    double average_hierarchy);

// edge list: "u v" per line
std::string graph_to_edge_list(const RandomGraph& g);
RandomGraph read_edge_list(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

} // namespace mcf

#endif
