#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "treefit/distance_matrix.hpp"
#include "treefit/hcc.hpp"
#include "treefit/tree.hpp"

namespace treefit::io {

// Distance matrices: CSV, n rows x n columns, no header. The parser accepts
// entries symmetric and zero-diagonal within 1e-9, symmetrizes by averaging,
// and zeroes the diagonal. Numbers are written shortest-round-trip.
DistanceMatrix parse_distance_csv(std::string_view text);
std::string format_distance_csv(const DistanceMatrix& d);
DistanceMatrix load_distance_csv(const std::filesystem::path& path);
void save_distance_csv(const DistanceMatrix& d, const std::filesystem::path& path);

// Merge logs: header `id_a,id_b,height,size,step`, one row per merge.
MergeLog parse_merge_log_csv(std::string_view text);
std::string format_merge_log_csv(const MergeLog& log);
MergeLog load_merge_log_csv(const std::filesystem::path& path);
void save_merge_log_csv(const MergeLog& log, const std::filesystem::path& path);

// Trees: `# root <index>` and `# n <original point count>` header lines,
// then one `u v weight` line per edge. Steiner nodes are indices >= n.
WeightedTree parse_tree(std::string_view text);
std::string format_tree(const WeightedTree& t);
WeightedTree load_tree(const std::filesystem::path& path);
void save_tree(const WeightedTree& t, const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

/// Shortest text that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace treefit::io
